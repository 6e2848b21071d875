// Copyright 2026 The globalgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace gg::cli;

CLI::App* subcommand(CLI::App& app, const char* name, const char* description) {
  CLI::App* sub = app.add_subcommand(name, description);
  // --h is the field-strength grid, so help is long-form only.
  sub->set_help_flag("--help", "Print this help message and exit");
  sub->allow_config_extras(CLI::config_extras_mode::error);
  sub->fallthrough();
  sub->configurable();
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"globalgate: global-gate ansatz simulation, training and diagnostics"};
  app.set_config("--config", "", "TOML file of option values; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  GlobalOptions global;
  std::string out = global.out.string();
  app.add_option("--seed", global.seed, "Base random seed");
  CLI::Option* out_opt = app.add_option("--out", out, "Output directory");
  app.add_option("--threads", global.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  TrainOptions train;
  CLI::App* t = subcommand(app, "train", "Train ansatz ensembles over a parameter grid");
  t->add_option("--model", train.model, "toric | heisenberg | zprobe");
  t->add_option("--lattice", train.lattice, "<n> chain, <r>x<c> square, <r>x<c>p toric edges");
  t->add_option("--ansatz", train.ansatz, "gz | gzx | gzxh | cartan");
  t->add_option("--connectivity", train.connectivity, "neighbor | all");
  t->add_option("--k", train.k, "Layers");
  t->add_option("--h", train.h, "Toric field grid")->delimiter(',');
  t->add_option("--j2", train.j2, "Heisenberg J2 grid")->delimiter(',');
  t->add_option("--instances", train.instances, "Instances per grid point");
  t->add_option("--max-epochs", train.max_epochs);
  t->add_option("--delta", train.delta, "Early-stop energy change");
  t->add_option("--lr", train.lr, "Adam step size");
  t->add_option("--beta1", train.beta1);
  t->add_option("--beta2", train.beta2);
  t->add_option("--eps", train.eps);
  t->add_option("--gamma-interval", train.gamma_interval, "Epochs between entropy samples (0 = off)");
  t->add_option("--regions", train.regions, "regions.json for the entropy");
  t->add_option("--gradient", train.gradient, "adjoint | shift");
  t->add_flag("--ed,!--no-ed", train.ed, "Compute exact ground energies for sweep.csv");
  t->add_flag("--resume", train.resume, "Skip grid points recorded in checkpoint.json");

  ExpressOptions express;
  double fixed = 0.0;
  CLI::App* e = subcommand(app, "express", "Expressibility statistics of circuit and Haar ensembles");
  e->add_option("--lattice", express.lattice);
  e->add_option("--ensemble", express.ensembles, "gz | gzx | gzxh | cartan | haar")->delimiter(',');
  e->add_option("--connectivity", express.connectivity);
  e->add_option("--k", express.k);
  e->add_option("--qubits", express.qubits, "Qubits of Haar ensembles (0 = lattice size)");
  e->add_option("--samples", express.samples);
  e->add_option("--a1-samples", express.a1_samples);
  e->add_option("--a2-samples", express.a2_samples);
  e->add_option("--max-pairs", express.max_pairs);
  e->add_option("--bins", express.bins);
  CLI::Option* fixed_opt = e->add_option("--fixed", fixed, "Set every parameter to this value");
  e->add_flag("--fidelities", express.fidelities, "Write per-pair fidelities");
  e->add_option("--memory-mb", express.memory_mb, "State memory budget");

  BpScanOptions bp;
  CLI::App* b = subcommand(app, "bp-scan", "Gradient-variance scans");
  b->add_option("--ansatz", bp.ansatz)->delimiter(',');
  b->add_option("--mode", bp.mode, "size | depth | params");
  b->add_option("--sizes", bp.sizes)->delimiter(',');
  b->add_option("--k", bp.k);
  b->add_option("--qubits", bp.qubits);
  b->add_option("--depths", bp.depths)->delimiter(',');
  b->add_option("--samples", bp.samples);
  b->add_option("--mu-layer", bp.mu_layer);
  b->add_option("--mu-qubit", bp.mu_qubit, "Negative counts from the last qubit");
  b->add_option("--mu-slot", bp.mu_slot, "rz1 | ry | rz2");
  b->add_option("--mu-index", bp.mu_index, "Raw parameter index (overrides the selector)");
  b->add_option("--lattice", bp.lattice);
  b->add_option("--model", bp.model);
  b->add_option("--h", bp.h);

  EdOptions ed;
  CLI::App* d = subcommand(app, "ed", "Exact ground energies");
  d->add_option("--model", ed.model);
  d->add_option("--lattice", ed.lattice);
  d->add_option("--h", ed.h)->delimiter(',');
  d->add_option("--j2", ed.j2)->delimiter(',');
  d->add_option("--method", ed.method, "auto | dense | lanczos");
  d->add_flag("--dump-state", ed.dump_state, "Write qsv1 ground states");

  EntropyOptions ent;
  CLI::App* s = subcommand(app, "entropy", "Topological entanglement entropy of a qsv1 state");
  s->add_option("--state", ent.state)->required();
  s->add_option("--regions", ent.regions, "regions.json (default: toric regions of --lattice)");
  s->add_option("--lattice", ent.lattice);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return 2;
  }
  global.out = out;
  if (fixed_opt->count() > 0) express.fixed = fixed;

  try {
    if (*t) run_train(global, train, std::cerr);
    if (*e) run_express(global, express, std::cerr);
    if (*b) run_bpscan(global, bp, std::cerr);
    if (*d) run_ed(global, ed, std::cerr);
    if (*s) {
      std::optional<std::filesystem::path> dir;
      if (out_opt->count() > 0) dir = global.out;
      run_entropy(ent, std::cout, dir);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return exit_code_for(ex);
  }
  return 0;
}
