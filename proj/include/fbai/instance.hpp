#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fbai/rng.hpp"

namespace fbai {

// Ground-truth description of a bandit environment: K arms, each carrying one
// performance distribution (stream 0) and N feasibility distributions
// (streams 1..N), all Gaussian with a common noise scale. Arms are 1-based
// throughout the public API; streams use 0 for performance.
struct BanditInstance {
  int k = 0;                              // number of arms K >= 1
  int n = 0;                              // number of feasibility constraints N >= 0
  std::vector<std::vector<double>> means; // K rows, N+1 columns
  std::vector<double> thresholds;         // per-constraint xi_l, length N
  double noise_sigma = 1.0;
  std::string label;

  double mean(int arm, int stream) const { return means[arm - 1][stream]; }
  double threshold(int stream) const { return thresholds[stream - 1]; }
};

// F and i*. i_star == k+1 is the "no feasible arm" sentinel.
struct GroundTruth {
  std::vector<int> feasible_set;  // ascending arm ids
  int i_star = 0;

  bool is_feasible(int arm) const;
};

// validate() separates hard violations (reject the instance) from warnings.
// Duplicate feasibility means within an arm are a warning: the source
// experiment instances themselves use tied constraint means, so rejecting
// them would rule out the built-in presets.
struct Verdict {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
};

Verdict validate(const BanditInstance& inst);

// Throws std::invalid_argument listing every violation if validation fails.
void require_valid(const BanditInstance& inst);

// Feasible set {i : mu_{i,l} < xi_l for all l} and argmax-performance member.
GroundTruth ground_truth(const BanditInstance& inst);

// One observation from (arm, stream): mean + noise_sigma * N(0,1).
double sample(const BanditInstance& inst, int arm, int stream, Rng& rng);

// Built-in experiment instances. exp2_vary_n/exp2_vary_k require `param`
// (N >= 2 resp. K >= 4); the others take none.
BanditInstance preset(const std::string& name, std::optional<int> param = std::nullopt);
std::vector<std::string> preset_names();

// Equivalent instance with every threshold moved to `xi` by shifting the
// constraint means of all arms by the same offset. For Gaussian noise the two
// encodings induce identical sampling problems.
BanditInstance with_uniform_thresholds(const BanditInstance& inst, double xi = 0.5);

// JSON document {label, k, n, means, thresholds, noise_sigma}; lossless.
std::string to_json(const BanditInstance& inst);
BanditInstance instance_from_json(const std::string& text);
BanditInstance load_instance(const std::string& path);
void save_instance(const BanditInstance& inst, const std::string& path);

}  // namespace fbai
