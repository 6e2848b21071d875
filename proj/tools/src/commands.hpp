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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gg::cli {

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::filesystem::path out = "run";
  int threads = 0;
};

struct TrainOptions {
  std::string model = "toric";
  std::string lattice = "2x2p";
  std::string ansatz = "gzx";
  std::string connectivity = "neighbor";
  int k = 4;
  std::vector<double> h{0.0};
  std::vector<double> j2{0.0};
  int instances = 100;
  int max_epochs = 1000;
  double delta = 1e-4;
  double lr = 0.05;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  int gamma_interval = 25;
  std::string regions;  // regions.json; empty = default toric regions
  std::string gradient = "adjoint";
  bool ed = true;
  bool resume = false;
};

struct ExpressOptions {
  std::string lattice = "2x2p";
  std::vector<std::string> ensembles{"gz", "gzx"};
  std::string connectivity = "neighbor";
  int k = 4;
  int qubits = 0;  // Haar ensembles; 0 = lattice size
  std::size_t samples = 10000;
  std::size_t a1_samples = 10000;
  std::size_t a2_samples = 2000;
  std::size_t max_pairs = 2000000;
  int bins = 75;
  std::optional<double> fixed;  // every parameter set to this value
  bool fidelities = false;
  std::size_t memory_mb = 1024;
};

struct BpScanOptions {
  std::vector<std::string> ansatz{"gz", "gzx"};
  std::string mode = "size";  // size | depth | params
  std::vector<int> sizes{8, 12, 16};
  int k = 6;
  int qubits = 16;
  std::vector<int> depths{2, 4, 6, 8, 10, 12};
  int samples = 1000;
  int mu_layer = 0;
  int mu_qubit = -1;
  std::string mu_slot = "ry";  // rz1 | ry | rz2
  int mu_index = -1;           // >= 0 overrides the layer/qubit/slot selector
  // params mode only
  std::string lattice = "2x2p";
  std::string model = "zprobe";
  double h = 0.0;
};

struct EdOptions {
  std::string model = "toric";
  std::string lattice = "2x2p";
  std::vector<double> h{0.0};
  std::vector<double> j2{0.0};
  std::string method = "auto";  // auto | dense | lanczos
  bool dump_state = false;
};

struct EntropyOptions {
  std::string state;
  std::string regions;
  std::string lattice = "2x2p";  // default regions when no regions file is given
};

nlohmann::json to_json(const GlobalOptions& g);
nlohmann::json to_json(const TrainOptions& o);
nlohmann::json to_json(const ExpressOptions& o);
nlohmann::json to_json(const BpScanOptions& o);
nlohmann::json to_json(const EdOptions& o);
nlohmann::json to_json(const EntropyOptions& o);

/// TOML text that reproduces the resolved configuration through --config.
/// `section` is a JSON object of the command's options.
std::string to_toml(const GlobalOptions& g, const std::string& command, const nlohmann::json& section);

void run_train(const GlobalOptions& g, const TrainOptions& o, std::ostream& log);
void run_express(const GlobalOptions& g, const ExpressOptions& o, std::ostream& log);
void run_bpscan(const GlobalOptions& g, const BpScanOptions& o, std::ostream& log);
void run_ed(const GlobalOptions& g, const EdOptions& o, std::ostream& log);
/// Prints the entropies as JSON to `out`; also writes entropy.json when
/// `dir` is set.
void run_entropy(const EntropyOptions& o, std::ostream& out, const std::optional<std::filesystem::path>& dir);

/// Maps an exception to the process exit code (2 config, 3 numerical, 1 other).
int exit_code_for(const std::exception& e);

}  // namespace gg::cli
