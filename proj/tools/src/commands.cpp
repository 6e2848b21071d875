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

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gg/error.hpp"
#include "gg/exact.hpp"
#include "gg/expressibility.hpp"
#include "gg/io.hpp"
#include "gg/problem.hpp"
#include "gg/topology.hpp"
#include "gg/trainability.hpp"
#include "gg/vqe.hpp"

namespace gg::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kAutoDenseQubits = 10;

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string toml_value(const json& v) {
  if (v.is_string()) {
    std::string s = "\"";
    for (char c : v.get<std::string>()) {
      if (c == '"' || c == '\\') s += '\\';
      s += c;
    }
    return s + "\"";
  }
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) {
    std::string s = format_double(v.get<double>());
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
  }
  if (v.is_number()) return v.dump();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + toml_value(v[i]);
    return s + "]";
  }
  throw ArgumentError("cannot express " + v.dump() + " in TOML");
}

void prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create '" + dir.string() + "': " + ec.message());
}

json manifest(const GlobalOptions& g, const std::string& command, const json& section) {
  json m;
  m["toolkit"] = "globalgate";
  m["version"] = kVersion;
  m["command"] = command;
  m["global"] = to_json(g);
  m["config"] = section;
  m["config_toml"] = to_toml(g, command, section);
  return m;
}

void write_run_header(const GlobalOptions& g, const std::string& command, const json& section, json extra = {}) {
  prepare_dir(g.out);
  json m = manifest(g, command, section);
  if (!extra.is_null()) m.update(extra);
  write_json(g.out / "manifest.json", m);
  write_text(g.out / "config.toml", m["config_toml"].get<std::string>());
}

class TimingLog {
 public:
  explicit TimingLog(const fs::path& path) : out_(path, std::ios::trunc) {}
  template <typename... Args>
  void line(const Args&... parts) {
    ((out_ << parts), ...);
    out_ << '\n';
    out_.flush();
  }

 private:
  std::ofstream out_;
};

std::string opt_number(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

std::string point_dir_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "point_%03zu", i);
  return buf;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

ModelSpec model_for_point(ModelKind kind, double param) {
  ModelSpec m;
  m.kind = kind;
  if (kind == ModelKind::toric) m.h = param;
  if (kind == ModelKind::heisenberg) m.j2 = param;
  return m;
}

std::vector<double> grid_for(ModelKind kind, const std::vector<double>& h, const std::vector<double>& j2) {
  std::vector<double> g = kind == ModelKind::toric ? h : kind == ModelKind::heisenberg ? j2 : std::vector<double>{0.0};
  if (g.empty()) throw ArgumentError("parameter grid is empty");
  return g;
}

EdMethod pick_method(const std::string& method, int qubits) {
  if (method == "dense") return EdMethod::dense;
  if (method == "lanczos") return EdMethod::lanczos;
  if (method == "auto") return qubits <= kAutoDenseQubits ? EdMethod::dense : EdMethod::lanczos;
  throw ArgumentError("unknown ED method '" + method + "' (expected auto, dense or lanczos)");
}

Connectivity parse_connectivity(const std::string& s) {
  if (s == "neighbor") return Connectivity::neighbor;
  if (s == "all") return Connectivity::all;
  throw ArgumentError("unknown connectivity '" + s + "' (expected neighbor or all)");
}

R3Slot parse_slot(const std::string& s) {
  if (s == "rz1") return R3Slot::first_rz;
  if (s == "ry") return R3Slot::ry;
  if (s == "rz2") return R3Slot::last_rz;
  throw ArgumentError("unknown R3 slot '" + s + "' (expected rz1, ry or rz2)");
}

// Exact ground energies available in closed form: the stabilizer count at
// h = 0 and the polarized field at h = 1.
std::optional<double> toric_analytic(const Lattice& lattice, double h) {
  if (h == 0.0) return -static_cast<double>(lattice.vertices.size() + lattice.plaquettes.size());
  if (h == 1.0) return -static_cast<double>(lattice.n_sites);
  return std::nullopt;
}

json to_json(const TopologicalEntropy& t) {
  return {{"S_A", t.s_a},   {"S_B", t.s_b},   {"S_C", t.s_c},   {"S_AB", t.s_ab},
          {"S_AC", t.s_ac}, {"S_BC", t.s_bc}, {"S_ABC", t.s_abc}, {"combination", t.combination},
          {"gamma", t.gamma}};
}

RegionSpec load_regions(const std::string& path) { return regions_from_json(read_json(path)); }

// --- train helpers ------------------------------------------------------------

struct PointSummary {
  double param = 0.0;
  double best_half_energy = 0.0;
  std::optional<double> ed_energy;
  std::optional<double> best_half_gamma;
};

json record_json(const RunRecord& r) {
  json j;
  j["instance"] = r.instance;
  j["seed"] = r.seed;
  j["converged"] = r.converged;
  j["epochs"] = r.energies.size();
  j["final_energy"] = r.final_energy();
  j["params"] = r.final_params;
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

json report_json(const AggregateReport& rep, const PointSummary& p) {
  json j;
  j["param"] = p.param;
  j["instance_count"] = rep.instance_count;
  j["converged_count"] = rep.converged_count;
  j["used_fallback"] = rep.used_fallback;
  if (rep.used_fallback) j["warning"] = "no instance converged; aggregates use every run";
  j["best_half_mean_energy"] = rep.best_half_mean_energy;
  j["best_half_mean_gamma"] = optional_json(rep.best_half_mean_gamma);
  j["best_half_instances"] = rep.best_half_instances;
  j["best_instance"] = rep.best_instance;
  j["best_energy"] = rep.best_energy;
  j["ed_energy"] = optional_json(p.ed_energy);
  j["median_curve"] = rep.median_curve;
  return j;
}

PointSummary summary_from_json(const json& j) {
  PointSummary p;
  p.param = j.at("param").get<double>();
  p.best_half_energy = j.at("best_half_mean_energy").get<double>();
  if (!j.at("ed_energy").is_null()) p.ed_energy = j.at("ed_energy").get<double>();
  if (!j.at("best_half_mean_gamma").is_null()) p.best_half_gamma = j.at("best_half_mean_gamma").get<double>();
  return p;
}

void write_point(const fs::path& dir, const EnsembleResult& res, const PointSummary& p) {
  prepare_dir(dir / "final_params");
  std::string energy = "epoch,instance,energy\n";
  std::string gamma = "epoch,instance,gamma\n";
  for (const auto& r : res.runs) {
    for (std::size_t e = 0; e < r.energies.size(); ++e)
      energy += std::to_string(e) + "," + std::to_string(r.instance) + "," + format_double(r.energies[e]) + "\n";
    for (const auto& [e, g] : r.gamma_samples)
      gamma += std::to_string(e) + "," + std::to_string(r.instance) + "," + format_double(g) + "\n";
    write_json(dir / "final_params" / (std::to_string(r.instance) + ".json"), record_json(r));
  }
  write_text(dir / "energy.csv", energy);
  write_text(dir / "gamma.csv", gamma);
  write_json(dir / "aggregate.json", report_json(res.report, p));
}

}  // namespace

// --- config serialization -------------------------------------------------------

// The output directory is where a run lives, not part of what it computes,
// so it stays out of manifests and config dumps.
json to_json(const GlobalOptions& g) { return {{"seed", g.seed}, {"threads", g.threads}}; }

json to_json(const TrainOptions& o) {
  return {{"model", o.model},
          {"lattice", o.lattice},
          {"ansatz", o.ansatz},
          {"connectivity", o.connectivity},
          {"k", o.k},
          {"h", o.h},
          {"j2", o.j2},
          {"instances", o.instances},
          {"max-epochs", o.max_epochs},
          {"delta", o.delta},
          {"lr", o.lr},
          {"beta1", o.beta1},
          {"beta2", o.beta2},
          {"eps", o.eps},
          {"gamma-interval", o.gamma_interval},
          {"regions", o.regions},
          {"gradient", o.gradient},
          {"ed", o.ed}};
}

json to_json(const ExpressOptions& o) {
  json j = {{"lattice", o.lattice},
            {"ensemble", o.ensembles},
            {"connectivity", o.connectivity},
            {"k", o.k},
            {"qubits", o.qubits},
            {"samples", o.samples},
            {"a1-samples", o.a1_samples},
            {"a2-samples", o.a2_samples},
            {"max-pairs", o.max_pairs},
            {"bins", o.bins},
            {"fidelities", o.fidelities},
            {"memory-mb", o.memory_mb}};
  if (o.fixed) j["fixed"] = *o.fixed;
  return j;
}

json to_json(const BpScanOptions& o) {
  return {{"ansatz", o.ansatz},     {"mode", o.mode},         {"sizes", o.sizes},
          {"k", o.k},               {"qubits", o.qubits},     {"depths", o.depths},
          {"samples", o.samples},   {"mu-layer", o.mu_layer}, {"mu-qubit", o.mu_qubit},
          {"mu-slot", o.mu_slot},   {"mu-index", o.mu_index}, {"lattice", o.lattice},
          {"model", o.model},       {"h", o.h}};
}

json to_json(const EdOptions& o) {
  return {{"model", o.model}, {"lattice", o.lattice},       {"h", o.h},
          {"j2", o.j2},       {"method", o.method},         {"dump-state", o.dump_state}};
}

json to_json(const EntropyOptions& o) {
  return {{"state", o.state}, {"regions", o.regions}, {"lattice", o.lattice}};
}

std::string to_toml(const GlobalOptions& g, const std::string& command, const json& section) {
  std::ostringstream s;
  const json globals = to_json(g);
  for (const auto& [key, value] : globals.items()) s << key << " = " << toml_value(value) << '\n';
  s << "\n[" << command << "]\n";
  for (const auto& [key, value] : section.items()) s << key << " = " << toml_value(value) << '\n';
  return s.str();
}

// --- commands -------------------------------------------------------------------

void run_train(const GlobalOptions& g, const TrainOptions& o, std::ostream& log) {
  TrainConfig base;
  base.lattice = parse_lattice_spec(o.lattice);
  base.ansatz = AnsatzSpec{parse_ansatz_kind(o.ansatz), parse_connectivity(o.connectivity), o.k};
  base.model.kind = parse_model_kind(o.model);
  base.instances = o.instances;
  base.max_epochs = o.max_epochs;
  base.early_stop_delta = o.delta;
  base.adam = AdamConfig{o.lr, o.beta1, o.beta2, o.eps};
  base.order_param_interval = o.gamma_interval;
  if (!o.regions.empty()) base.regions = load_regions(o.regions);
  base.seed = g.seed;
  base.gradient = parse_gradient_method(o.gradient);
  base.threads = g.threads;
  validate(base);
  const std::vector<double> grid = grid_for(base.model.kind, o.h, o.j2);
  // Fail on lattice/model mismatches before any output is written.
  (void)build_problem(base);

  const json section = to_json(o);
  const fs::path checkpoint = g.out / "checkpoint.json";
  std::vector<bool> done(grid.size(), false);
  if (o.resume && fs::exists(checkpoint)) {
    const json old = read_json(g.out / "manifest.json");
    if (old.at("config") != section || old.at("global").at("seed") != g.seed) {
      throw ArgumentError("cannot resume: configuration differs from the run in '" + g.out.string() + "'");
    }
    for (const auto& idx : read_json(checkpoint).at("completed_points")) done.at(idx.get<std::size_t>()) = true;
  }
  json seeds = json::array();
  for (int i = 0; i < o.instances; ++i) seeds.push_back(g.seed + static_cast<std::uint64_t>(i));
  write_run_header(g, "train", section, {{"instance_seeds", seeds}, {"grid", grid}});
  TimingLog timing(g.out / "timing.log");

  std::vector<PointSummary> rows(grid.size());
  json completed = json::array();
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const fs::path dir = g.out / point_dir_name(p);
    if (done[p]) {
      rows[p] = summary_from_json(read_json(dir / "aggregate.json"));
      completed.push_back(p);
      log << "point " << p << " already complete, skipped\n";
      continue;
    }
    Stopwatch sw;
    TrainConfig cfg = base;
    cfg.model = model_for_point(base.model.kind, grid[p]);
    const Problem problem = build_problem(cfg);
    PointSummary summary;
    summary.param = grid[p];
    if (o.ed && problem.circuit.qubits <= kMaxLanczosQubits) {
      summary.ed_energy = ground_energy(problem.hamiltonian, pick_method("auto", problem.circuit.qubits)).energy;
    }
    const EnsembleResult res = train_ensemble(cfg, [&](const RunRecord& r) {
      timing.line("point ", p, " instance ", r.instance, " epochs ", r.energies.size(), " seconds ", r.wall_time);
    });
    summary.best_half_energy = res.report.best_half_mean_energy;
    summary.best_half_gamma = res.report.best_half_mean_gamma;
    write_point(dir, res, summary);
    rows[p] = summary;
    completed.push_back(p);
    write_json(checkpoint, {{"completed_points", completed}, {"complete", false}});
    timing.line("point ", p, " total seconds ", sw.seconds());
    log << "point " << p << " (" << grid[p] << "): best-half energy " << summary.best_half_energy << ", "
        << res.report.converged_count << "/" << res.report.instance_count << " converged\n";
  }

  std::string sweep = "param,best_half_energy,ed_energy,best_half_gamma\n";
  for (const auto& r : rows) {
    sweep += format_double(r.param) + "," + format_double(r.best_half_energy) + "," + opt_number(r.ed_energy) + "," +
             opt_number(r.best_half_gamma) + "\n";
  }
  write_text(g.out / "sweep.csv", sweep);
  write_json(checkpoint, {{"completed_points", completed}, {"complete", true}});
}

void run_express(const GlobalOptions& g, const ExpressOptions& o, std::ostream& log) {
  if (o.ensembles.empty()) throw ArgumentError("no ensembles requested");
  const LatticeSpec lspec = parse_lattice_spec(o.lattice);
  const Lattice lattice = build_lattice(lspec);
  const Connectivity conn = parse_connectivity(o.connectivity);
  StatsOptions stats_opt;
  stats_opt.bins = o.bins;
  stats_opt.a1_samples = o.a1_samples;
  stats_opt.a2_samples = o.a2_samples;
  stats_opt.pairs.max_pairs = o.max_pairs;
  stats_opt.pairs.seed = g.seed ^ 0x9e3779b97f4a7c15ULL;
  stats_opt.pairs.memory_budget = o.memory_mb << 20;
  stats_opt.pairs.threads = g.threads;

  // Validate every name before doing any work.
  for (const auto& name : o.ensembles)
    if (name != "haar") (void)parse_ansatz_kind(name);

  write_run_header(g, "express", to_json(o));
  TimingLog timing(g.out / "timing.log");
  json results = json::object();
  std::string table = "ensemble,qubits,samples,pairs,all_pairs,a1,a2,kl,kl_degenerate,f1,f1_sem,f1_haar,f2,f2_sem,f2_haar\n";
  std::string hist = "ensemble,bin_lo,bin_hi,empirical,haar\n";
  for (const auto& name : o.ensembles) {
    Stopwatch sw;
    StateEnsemble ens = name == "haar"
                            ? StateEnsemble::haar(o.qubits > 0 ? o.qubits : lattice.n_sites, o.samples, g.seed)
                            : StateEnsemble::from_circuit(build_circuit({parse_ansatz_kind(name), conn, o.k}, lattice),
                                                          o.samples, g.seed, o.fixed);
    ens.materialize(stats_opt.pairs.memory_budget, g.threads);
    const EnsembleStats st = ensemble_stats(ens, stats_opt);
    results[name] = to_json(st);
    const auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
    table += name + "," + std::to_string(ens.qubit_count()) + "," + std::to_string(st.sample_count) + "," +
             std::to_string(st.pair_count) + "," + (st.all_pairs ? "1" : "0") + "," + opt(st.a1) + "," + opt(st.a2) +
             "," + format_double(st.kl.value) + "," + (st.kl.degenerate ? "1" : "0") + "," + format_double(st.f1.value) +
             "," + format_double(st.f1.sem) + "," + format_double(haar_frame_potential(st.dimension, 1)) + "," +
             format_double(st.f2.value) + "," + format_double(st.f2.sem) + "," +
             format_double(haar_frame_potential(st.dimension, 2)) + "\n";
    const auto bins = st.kl.histogram.size();
    for (std::size_t b = 0; b < bins; ++b) {
      hist += name + "," + format_double(static_cast<double>(b) / static_cast<double>(bins)) + "," +
              format_double(b + 1 == bins ? 1.0 : static_cast<double>(b + 1) / static_cast<double>(bins)) + "," +
              format_double(st.kl.histogram[b]) + "," + format_double(st.kl.haar[b]) + "\n";
    }
    if (o.fidelities) {
      std::string f = "fidelity\n";
      for (double x : st.fidelity_samples) f += format_double(x) + "\n";
      write_text(g.out / ("fidelities_" + name + ".csv"), f);
    }
    timing.line("ensemble ", name, " seconds ", sw.seconds());
    log << name << ": KL " << st.kl.value << (st.kl.degenerate ? " (degenerate)" : "") << ", F1 " << st.f1.value
        << ", F2 " << st.f2.value << "\n";
  }
  write_json(g.out / "express.json", {{"ensembles", results}});
  write_text(g.out / "express.csv", table);
  write_text(g.out / "histogram.csv", hist);
}

void run_bpscan(const GlobalOptions& g, const BpScanOptions& o, std::ostream& log) {
  if (o.ansatz.empty()) throw ArgumentError("no ansatz requested");
  MuSelector mu;
  mu.layer = o.mu_layer;
  mu.qubit = o.mu_qubit;
  mu.slot = parse_slot(o.mu_slot);
  if (o.mu_index >= 0) mu.index = o.mu_index;
  if (o.mode != "size" && o.mode != "depth" && o.mode != "params") {
    throw ArgumentError("unknown bp-scan mode '" + o.mode + "' (expected size, depth or params)");
  }
  std::vector<AnsatzKind> kinds;
  for (const auto& a : o.ansatz) kinds.push_back(parse_ansatz_kind(a));

  write_run_header(g, "bp-scan", to_json(o));
  TimingLog timing(g.out / "timing.log");
  json summary = json::object();
  for (std::size_t a = 0; a < kinds.size(); ++a) {
    Stopwatch sw;
    const std::string& name = o.ansatz[a];
    if (o.mode == "params") {
      const Lattice lattice = build_lattice(parse_lattice_spec(o.lattice));
      const Circuit c = build_ansatz(kinds[a], lattice, o.k);
      const PauliSum h = build_hamiltonian(model_for_point(parse_model_kind(o.model), o.h), lattice);
      const auto var = all_parameter_variance(c, h, o.samples, g.seed, g.threads);
      std::string csv = "param,layer,qubit,gate,variance,samples\n";
      for (const auto& gate : c.gates) {
        csv += std::to_string(gate.param) + "," + std::to_string(gate.param / c.params_per_layer()) + "," +
               std::to_string(gate.q0) + "," + std::string(to_string(gate.kind)) + "," +
               format_double(var[static_cast<std::size_t>(gate.param)]) + "," + std::to_string(o.samples) + "\n";
      }
      write_text(g.out / ("params_" + name + ".csv"), csv);
      summary[name] = {{"mode", "params"}, {"param_count", c.param_count}};
    } else {
      const std::vector<BpRow> rows = o.mode == "size"
                                          ? bp_size_sweep(kinds[a], o.sizes, o.k, o.samples, g.seed, mu, g.threads)
                                          : bp_depth_sweep(kinds[a], o.qubits, o.depths, o.samples, g.seed, mu, g.threads);
      std::string csv = "axis_value,variance,samples\n";
      json jrows = json::array();
      for (const auto& r : rows) {
        csv += std::to_string(r.axis_value) + "," + format_double(r.variance) + "," + std::to_string(r.samples) + "\n";
        jrows.push_back({{"axis_value", r.axis_value}, {"variance", r.variance}, {"samples", r.samples}});
      }
      write_text(g.out / ("bp_" + name + "_" + o.mode + ".csv"), csv);
      json entry = {{"mode", o.mode}, {"rows", jrows}};
      bool positive = rows.size() >= 2;
      for (const auto& r : rows) positive = positive && r.variance > 0.0;
      entry["log_variance_slope"] = positive ? json(log_variance_slope(rows)) : json(nullptr);
      summary[name] = entry;
      for (const auto& r : rows) log << name << " " << o.mode << " " << r.axis_value << ": " << r.variance << "\n";
    }
    timing.line("ansatz ", name, " seconds ", sw.seconds());
  }
  write_json(g.out / "bp.json", summary);
}

void run_ed(const GlobalOptions& g, const EdOptions& o, std::ostream& log) {
  const ModelKind kind = parse_model_kind(o.model);
  const Lattice lattice = build_lattice(parse_lattice_spec(o.lattice));
  const std::vector<double> grid = grid_for(kind, o.h, o.j2);
  const EdMethod method = pick_method(o.method, lattice.n_sites);
  // Build every Hamiltonian first so mismatches fail before output is written.
  std::vector<PauliSum> hams;
  for (double p : grid) hams.push_back(build_hamiltonian(model_for_point(kind, p), lattice));

  write_run_header(g, "ed", to_json(o));
  TimingLog timing(g.out / "timing.log");
  if (o.dump_state) prepare_dir(g.out / "states");
  std::string csv = "param,energy,residual,analytic,method\n";
  json points = json::array();
  for (std::size_t p = 0; p < grid.size(); ++p) {
    Stopwatch sw;
    const GroundState gs = ground_energy(hams[p], method);
    const std::optional<double> analytic = kind == ModelKind::toric ? toric_analytic(lattice, grid[p]) : std::nullopt;
    const std::string mname = method == EdMethod::dense ? "dense" : "lanczos";
    csv += format_double(grid[p]) + "," + format_double(gs.energy) + "," + format_double(gs.residual) + "," +
           opt_number(analytic) + "," + mname + "\n";
    json pj = {{"param", grid[p]}, {"energy", gs.energy}, {"residual", gs.residual},
               {"analytic", optional_json(analytic)}, {"method", mname}};
    if (o.dump_state) {
      const std::string file = point_dir_name(p) + ".qsv";
      write_state(g.out / "states" / file, gs.state);
      pj["state"] = "states/" + file;
    }
    points.push_back(pj);
    timing.line("point ", p, " seconds ", sw.seconds(), " iterations ", gs.iterations);
    log << "param " << grid[p] << ": E0 = " << format_double(gs.energy) << "\n";
  }
  write_text(g.out / "ed.csv", csv);
  write_json(g.out / "ed.json", {{"points", points}});
}

void run_entropy(const EntropyOptions& o, std::ostream& out, const std::optional<fs::path>& dir) {
  if (o.state.empty()) throw ArgumentError("--state is required");
  const StateVector psi = read_state(fs::path(o.state));
  const RegionSpec regions =
      o.regions.empty() ? default_toric_regions(build_lattice(parse_lattice_spec(o.lattice))) : load_regions(o.regions);
  validate(regions, psi.qubit_count());
  json j = to_json(topological_entropy_terms(psi, regions));
  j["regions"] = to_json(regions);
  out << j.dump(2) << "\n";
  if (dir) {
    prepare_dir(*dir);
    write_json(*dir / "entropy.json", j);
  }
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NumericalError*>(&e)) return 3;
  if (dynamic_cast<const ArgumentError*>(&e) || dynamic_cast<const ValidationError*>(&e) ||
      dynamic_cast<const FormatError*>(&e) || dynamic_cast<const ShapeError*>(&e) ||
      dynamic_cast<const SizeError*>(&e) || dynamic_cast<const IndexError*>(&e) ||
      dynamic_cast<const UnsupportedError*>(&e) || dynamic_cast<const nlohmann::json::exception*>(&e)) {
    return 2;
  }
  return 1;
}

}  // namespace gg::cli
