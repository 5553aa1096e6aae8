#include "fbai/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fbai {

bool GroundTruth::is_feasible(int arm) const {
  return std::binary_search(feasible_set.begin(), feasible_set.end(), arm);
}

Verdict validate(const BanditInstance& inst) {
  Verdict v;
  auto fail = [&](const std::string& msg) { v.violations.push_back(msg); };

  if (inst.k < 1) fail("k must be >= 1");
  if (inst.n < 0) fail("n must be >= 0");
  if (!(inst.noise_sigma > 0.0)) fail("noise_sigma must be > 0");
  if ((int)inst.means.size() != inst.k) {
    fail("means must have exactly k rows");
    return v;  // shape is broken, per-entry checks would be misleading
  }
  for (int i = 1; i <= inst.k; ++i) {
    if ((int)inst.means[i - 1].size() != inst.n + 1) {
      fail("means row " + std::to_string(i) + " must have n+1 entries");
      return v;
    }
  }
  if ((int)inst.thresholds.size() != inst.n) {
    fail("thresholds must have exactly n entries");
    return v;
  }

  for (int i = 1; i <= inst.k; ++i) {
    for (int j = i + 1; j <= inst.k; ++j) {
      if (inst.mean(i, 0) == inst.mean(j, 0)) {
        fail("duplicate performance means at arms (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
      }
    }
  }
  for (int i = 1; i <= inst.k; ++i) {
    for (int l = 1; l <= inst.n; ++l) {
      if (inst.mean(i, l) == inst.threshold(l)) {
        fail("mean equals threshold at (" + std::to_string(i) + "," +
             std::to_string(l) + ")");
      }
      for (int m = l + 1; m <= inst.n; ++m) {
        if (inst.mean(i, l) == inst.mean(i, m)) {
          v.warnings.push_back("duplicate feasibility means at arm " +
                               std::to_string(i) + ", constraints (" +
                               std::to_string(l) + "," + std::to_string(m) + ")");
        }
      }
    }
  }
  return v;
}

void require_valid(const BanditInstance& inst) {
  Verdict v = validate(inst);
  if (v.ok()) return;
  std::string msg = "invalid instance";
  if (!inst.label.empty()) msg += " '" + inst.label + "'";
  msg += ":";
  for (const auto& s : v.violations) msg += " " + s + ";";
  throw std::invalid_argument(msg);
}

GroundTruth ground_truth(const BanditInstance& inst) {
  require_valid(inst);
  GroundTruth gt;
  for (int i = 1; i <= inst.k; ++i) {
    bool feas = true;
    for (int l = 1; l <= inst.n; ++l) {
      if (!(inst.mean(i, l) < inst.threshold(l))) {
        feas = false;
        break;
      }
    }
    if (feas) gt.feasible_set.push_back(i);
  }
  if (gt.feasible_set.empty()) {
    gt.i_star = inst.k + 1;
  } else {
    int best = gt.feasible_set.front();
    for (int i : gt.feasible_set) {
      if (inst.mean(i, 0) > inst.mean(best, 0)) best = i;
    }
    gt.i_star = best;
  }
  return gt;
}

double sample(const BanditInstance& inst, int arm, int stream, Rng& rng) {
  if (arm < 1 || arm > inst.k || stream < 0 || stream > inst.n) {
    throw std::out_of_range("sample: arm/stream out of range");
  }
  return inst.mean(arm, stream) + inst.noise_sigma * rng.next_gaussian();
}

namespace {

// Performance means descending with arm index: arm 1 gets `hi`, arm k `lo`.
std::vector<double> linspace_desc(double hi, double lo, int k) {
  std::vector<double> out(k);
  if (k == 1) {
    out[0] = hi;
    return out;
  }
  for (int i = 0; i < k; ++i) out[i] = hi + (lo - hi) * double(i) / double(k - 1);
  return out;
}

BanditInstance make_exp1(char which) {
  BanditInstance inst;
  inst.k = 5;
  inst.n = 3;
  inst.thresholds = {0.5, 0.5, 0.5};
  inst.label = std::string("exp1") + which;
  std::vector<double> perf;
  switch (which) {
    case 'a': {
      perf = linspace_desc(1.0, 0.0, 5);
      for (int i = 0; i < 5; ++i) {
        std::vector<double> row = {perf[i], 0.75, 0.25, 0.25};
        if (i == 4) row = {perf[i], 0.25, 0.25, 0.25};  // arm 5 is the feasible one
        inst.means.push_back(row);
      }
      break;
    }
    case 'b': {
      perf = linspace_desc(1.0, 0.0, 5);
      for (int i = 0; i < 5; ++i) inst.means.push_back({perf[i], 0.4, 0.4, 0.4});
      break;
    }
    case 'c': {
      perf = {1.0, 0.9, 0.5, 0.25, 0.0};
      inst.means = {
          {perf[0], 0.65, 0.4, 0.4},
          {perf[1], 0.3, 0.4, 0.4},
          {perf[2], 0.65, 0.4, 0.4},
          {perf[3], 0.65, 0.4, 0.4},
          {perf[4], 0.45, 0.45, 0.45},
      };
      break;
    }
    default:
      throw std::invalid_argument("unknown exp1 variant");
  }
  return inst;
}

BanditInstance make_exp2_vary_n(int n) {
  if (n < 2) throw std::invalid_argument("exp2_vary_n requires N >= 2");
  BanditInstance inst;
  inst.k = 10;
  inst.n = n;
  inst.thresholds.assign(n, 0.5);
  inst.label = "exp2_vary_n(N=" + std::to_string(n) + ")";
  auto perf = linspace_desc(2.0, 0.0, 10);
  for (int i = 1; i <= 10; ++i) {
    std::vector<double> row = {perf[i - 1]};
    bool feas = (i >= 4 && i <= 7);
    row.push_back(feas ? 0.25 : 0.75);
    for (int l = 2; l <= n; ++l) row.push_back(0.25);
    inst.means.push_back(row);
  }
  return inst;
}

BanditInstance make_exp2_vary_k(int k, const std::string& label) {
  if (k < 4) throw std::invalid_argument("exp2_vary_k requires K >= 4");
  BanditInstance inst;
  inst.k = k;
  inst.n = 5;
  inst.thresholds.assign(5, 0.5);
  inst.label = label;
  auto perf = linspace_desc(10.0, 0.0, k);
  int lo = k / 3, hi = (2 * k) / 3;
  for (int i = 1; i <= k; ++i) {
    std::vector<double> row = {perf[i - 1]};
    bool feas = (i >= lo && i <= hi);
    row.push_back(feas ? 0.25 : 0.75);
    for (int l = 2; l <= 5; ++l) row.push_back(0.25);
    inst.means.push_back(row);
  }
  return inst;
}

BanditInstance make_drug() {
  BanditInstance inst;
  inst.k = 5;
  inst.n = 2;
  inst.thresholds = {0.5, 0.25};
  inst.label = "drug";
  // Dosage arms 25/75/150/300 mg and placebo: effectiveness plus two
  // adverse-event rates, each tested against its own safety threshold.
  inst.means = {
      {0.34, 0.519, 0.259},
      {0.469, 0.612, 0.184},
      {0.465, 0.465, 0.209},
      {0.537, 0.61, 0.293},
      {0.36, 0.58, 0.16},
  };
  return inst;
}

}  // namespace

BanditInstance preset(const std::string& name, std::optional<int> param) {
  auto need_param = [&](const char* what) {
    if (!param) throw std::invalid_argument(std::string(what) + " requires a parameter");
    return *param;
  };
  if (name == "exp1a") return make_exp1('a');
  if (name == "exp1b") return make_exp1('b');
  if (name == "exp1c") return make_exp1('c');
  if (name == "exp2_vary_n") return make_exp2_vary_n(need_param("exp2_vary_n"));
  if (name == "exp2_vary_k") return make_exp2_vary_k(need_param("exp2_vary_k"),
                                                     "exp2_vary_k(K=" + std::to_string(*param) + ")");
  if (name == "exp2_delta") return make_exp2_vary_k(10, "exp2_delta");
  if (name == "drug") return make_drug();
  throw std::invalid_argument("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"exp1a", "exp1b", "exp1c", "exp2_vary_n", "exp2_vary_k", "exp2_delta", "drug"};
}

BanditInstance with_uniform_thresholds(const BanditInstance& inst, double xi) {
  BanditInstance out = inst;
  for (int l = 1; l <= inst.n; ++l) {
    double shift = xi - inst.threshold(l);
    for (int i = 1; i <= inst.k; ++i) out.means[i - 1][l] += shift;
    out.thresholds[l - 1] = xi;
  }
  if (!out.label.empty()) out.label += "_shifted";
  return out;
}

std::string to_json(const BanditInstance& inst) {
  nlohmann::json j;
  j["label"] = inst.label;
  j["k"] = inst.k;
  j["n"] = inst.n;
  j["means"] = inst.means;
  j["thresholds"] = inst.thresholds;
  j["noise_sigma"] = inst.noise_sigma;
  return j.dump(2);
}

BanditInstance instance_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  BanditInstance inst;
  inst.label = j.at("label").get<std::string>();
  inst.k = j.at("k").get<int>();
  inst.n = j.at("n").get<int>();
  inst.means = j.at("means").get<std::vector<std::vector<double>>>();
  inst.thresholds = j.at("thresholds").get<std::vector<double>>();
  inst.noise_sigma = j.at("noise_sigma").get<double>();
  return inst;
}

BanditInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return instance_from_json(ss.str());
}

void save_instance(const BanditInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << to_json(inst) << "\n";
}

}  // namespace fbai
