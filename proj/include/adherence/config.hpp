#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "adherence/date.hpp"

namespace adherence {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::vector<std::string>& problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

enum class BehaviorKind {
  FullyAdherent,
  IllegitimateDropout,
  Switcher,
  DeathStop,
  PalliativeStop,
  CardiacStop,
  Censored
};
inline constexpr int kNumBehaviorKinds = 7;
std::string_view to_string(BehaviorKind k);

// Log-odds shifts applied to the dropout probability when sampling patient
// behavior. Age bands: <55 is the reference, [55,70), >=70.
struct RiskSignal {
  double age_55 = 0.0;
  double age_70 = 0.0;
  double copathology = 0.0;        // per copathology code
  double mastectomy = 0.0;
  double financial_support = 0.0;  // planted but unobserved by the models
};

struct GapStretchConfig {
  bool enabled = false;
  // Multipliers applied to the last purchase gaps before an illegitimate
  // stop, earliest first. Must keep gaps under median + 60 or the phase
  // would split.
  std::vector<double> factors{1.35, 1.8, 2.4};
};

struct SimConfig {
  int n_patients = 1000;
  std::uint64_t seed = 1;
  // Order: adherent, dropout, switcher, death, palliative, cardiac, censored.
  std::vector<double> behavior_mix{0.45, 0.25, 0.10, 0.06, 0.04, 0.04, 0.06};
  std::vector<double> molecule_mix;  // 13 weights; empty = uniform
  int protocol_interval_days = 30;
  int chemo_interval_days = 21;
  int purchase_jitter_days = 3;
  int max_start_day = 360;   // phase starts uniform in [0, max_start_day]
  // "geometric": per-purchase stop hazard (memoryless); "uniform": stop
  // purchase index uniform over the feasible range.
  std::string dropout_timing = "geometric";
  double dropout_hazard = 0.10;
  RiskSignal risk_signal;
  int age_min = 35;
  int age_max = 90;
  double copathology_prob = 0.22;  // per-trial prob, copathology_max trials
  int copathology_max = 6;
  double mastectomy_prob = 0.15;
  double ald_prob = 0.6;
  double financial_support_prob = 0.3;
  double chemo_lead_in_prob = 0.15;  // chemo phase preceding the oral phase
  int chemo_sessions = 6;
  GapStretchConfig gap_stretch;
  double other_drug_monthly_prob = 0.2;
  int other_drug_codes = 20;
};

struct PhaseConfig {
  int stop_window_days = 60;  // legitimate-stop window after theoretical last dose
  int default_molecule_interval_days = 30;  // fallback when a cohort median is unavailable
  int default_chemo_interval_days = 21;
  bool switch_includes_hospital = true;  // chemo/radio onset counts as a switch
  int mastectomy_lookback_days = 90;
};

struct FeatureConfig {
  std::string padding = "zero";  // zero | first
  int sequence_length = 10;
  int days_cap = 365;            // gap feature capped here, then scaled by 1/days_cap
  double quantity_scale = 1.0 / 30.0;
  std::string sequence_scope = "all";  // all | baseline
  int long_stay_days = 7;        // baseline scope keeps stays at least this long
  int department_buckets = 5;
};

struct LogisticParams {
  double ridge = 1e-8;
  double tol = 1e-8;
  int max_iter = 100;
  double p_threshold = 0.05;
};

struct TreeParams {
  int max_depth = 5;
  int min_samples_leaf = 20;
};

struct GbtParams {
  int rounds = 200;
  int depth = 3;
  double learning_rate = 0.1;
  int min_samples_leaf = 20;
};

struct MlpParams {
  int hidden = 32;
  int epochs = 200;
  int batch = 64;
  double learning_rate = 1e-3;
};

struct LstmParams {
  int hidden = 16;
  int static_hidden = 16;
  int epochs = 30;
  int batch = 64;
  double learning_rate = 1e-3;
};

struct ModelsConfig {
  LogisticParams logistic;
  TreeParams tree;
  GbtParams gbt;
  MlpParams mlp;
  LstmParams lstm;
  // Optional per-family hyperparameter lattices, e.g.
  // {"tree": {"max_depth": [3,5,7]}}. Used when evaluation.grid_search is on.
  nlohmann::json grids = nlohmann::json::object();
};

struct EvalConfig {
  int k_folds = 5;
  std::vector<int> horizons{90, 180, 360};
  std::vector<std::string> families{"logistic", "tree", "gbt", "mlp", "lstm"};
  std::uint64_t seed = 42;
  bool padding_ablation = false;
  bool emit_svg = true;
  bool grid_search = false;
  int curve_points = 512;
};

struct RunConfig {
  Date window_start = Date::from_civil(2013, 1, 1);
  Date window_end = Date::from_civil(2015, 12, 31);
  int threads = 0;  // 0 = hardware concurrency
  SimConfig sim;
  PhaseConfig phases;
  FeatureConfig features;
  ModelsConfig models;
  EvalConfig eval;

  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig from_file(const std::string& path);
  static RunConfig from_string(const std::string& text);
  nlohmann::json to_json() const;

  // FNV-1a over the canonical dump; embedded in every output file.
  std::string hash() const;
  int effective_threads() const;
};

}  // namespace adherence
