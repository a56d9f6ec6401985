#include "adherence/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "adherence/rng.hpp"

namespace adherence {

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
  std::ostringstream os;
  os << "invalid configuration (" << problems.size() << " problem"
     << (problems.size() == 1 ? "" : "s") << "):";
  for (const auto& p : problems) os << "\n  - " << p;
  return os.str();
}

// Strict object reader: every key must be consumed, every leftover is an error.
class Section {
 public:
  Section(const nlohmann::json& j, std::string path, std::vector<std::string>& problems)
      : obj_(j), path_(std::move(path)), problems_(problems) {
    if (!obj_.is_object()) problems_.push_back(path_ + ": expected an object");
  }

  ~Section() {
    if (!obj_.is_object()) return;
    for (auto it = obj_.begin(); it != obj_.end(); ++it) {
      if (!seen_.count(it.key())) problems_.push_back(path_ + "/" + it.key() + ": unknown key");
    }
  }

  bool has(const std::string& key) {
    return obj_.is_object() && obj_.contains(key);
  }

  const nlohmann::json* take(const std::string& key) {
    if (!obj_.is_object()) return nullptr;
    seen_.insert(key);
    auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  template <typename T>
  void get(const std::string& key, T& target) {
    const nlohmann::json* v = take(key);
    if (!v) return;
    try {
      target = v->get<T>();
    } catch (const nlohmann::json::exception&) {
      problems_.push_back(path_ + "/" + key + ": wrong type");
    }
  }

  void get_date(const std::string& key, Date& target) {
    const nlohmann::json* v = take(key);
    if (!v) return;
    if (!v->is_string()) {
      problems_.push_back(path_ + "/" + key + ": expected 'YYYY-MM-DD' string");
      return;
    }
    auto d = Date::parse(v->get<std::string>());
    if (!d) {
      problems_.push_back(path_ + "/" + key + ": not a valid date");
      return;
    }
    target = *d;
  }

  const std::string& path() const { return path_; }
  std::vector<std::string>& problems() { return problems_; }

 private:
  const nlohmann::json& obj_;
  std::string path_;
  std::vector<std::string>& problems_;
  std::set<std::string> seen_;
};

void read_risk_signal(const nlohmann::json& j, const std::string& path, RiskSignal& rs,
                      std::vector<std::string>& problems) {
  Section s(j, path, problems);
  s.get("age_55", rs.age_55);
  s.get("age_70", rs.age_70);
  s.get("copathology", rs.copathology);
  s.get("mastectomy", rs.mastectomy);
  s.get("financial_support", rs.financial_support);
}

void read_sim(const nlohmann::json& j, const std::string& path, SimConfig& sim,
              std::vector<std::string>& problems) {
  Section s(j, path, problems);
  s.get("n_patients", sim.n_patients);
  s.get("seed", sim.seed);
  if (const auto* v = s.take("behavior_mix")) {
    Section m(*v, path + "/behavior_mix", problems);
    std::vector<double> mix = sim.behavior_mix;
    m.get("adherent", mix[0]);
    m.get("dropout", mix[1]);
    m.get("switcher", mix[2]);
    m.get("death", mix[3]);
    m.get("palliative", mix[4]);
    m.get("cardiac", mix[5]);
    m.get("censored", mix[6]);
    sim.behavior_mix = mix;
  }
  s.get("molecule_mix", sim.molecule_mix);
  s.get("protocol_interval_days", sim.protocol_interval_days);
  s.get("chemo_interval_days", sim.chemo_interval_days);
  s.get("purchase_jitter_days", sim.purchase_jitter_days);
  s.get("max_start_day", sim.max_start_day);
  s.get("dropout_timing", sim.dropout_timing);
  s.get("dropout_hazard", sim.dropout_hazard);
  if (const auto* v = s.take("risk_signal"))
    read_risk_signal(*v, path + "/risk_signal", sim.risk_signal, problems);
  s.get("age_min", sim.age_min);
  s.get("age_max", sim.age_max);
  s.get("copathology_prob", sim.copathology_prob);
  s.get("copathology_max", sim.copathology_max);
  s.get("mastectomy_prob", sim.mastectomy_prob);
  s.get("ald_prob", sim.ald_prob);
  s.get("financial_support_prob", sim.financial_support_prob);
  s.get("chemo_lead_in_prob", sim.chemo_lead_in_prob);
  s.get("chemo_sessions", sim.chemo_sessions);
  if (const auto* v = s.take("gap_stretch")) {
    Section g(*v, path + "/gap_stretch", problems);
    g.get("enabled", sim.gap_stretch.enabled);
    g.get("factors", sim.gap_stretch.factors);
  }
  s.get("other_drug_monthly_prob", sim.other_drug_monthly_prob);
  s.get("other_drug_codes", sim.other_drug_codes);

  if (sim.n_patients < 1) problems.push_back(path + "/n_patients: must be >= 1");
  if (sim.behavior_mix.size() != kNumBehaviorKinds)
    problems.push_back(path + "/behavior_mix: expected 7 weights");
  double total = 0.0;
  bool neg = false;
  for (double w : sim.behavior_mix) {
    if (w < 0) neg = true;
    total += w;
  }
  if (neg) problems.push_back(path + "/behavior_mix: weights must be nonnegative");
  if (total <= 0) problems.push_back(path + "/behavior_mix: weights sum to zero");
  if (!sim.molecule_mix.empty() && sim.molecule_mix.size() != 13)
    problems.push_back(path + "/molecule_mix: expected 13 weights");
  if (sim.protocol_interval_days < 1 || sim.chemo_interval_days < 1)
    problems.push_back(path + ": protocol intervals must be positive");
  if (sim.purchase_jitter_days < 0)
    problems.push_back(path + "/purchase_jitter_days: must be >= 0");
  if (sim.dropout_timing != "geometric" && sim.dropout_timing != "uniform")
    problems.push_back(path + "/dropout_timing: expected 'geometric' or 'uniform'");
  if (sim.dropout_hazard <= 0.0 || sim.dropout_hazard >= 1.0)
    problems.push_back(path + "/dropout_hazard: must be in (0,1)");
}

void read_phases(const nlohmann::json& j, const std::string& path, PhaseConfig& pc,
                 std::vector<std::string>& problems) {
  Section s(j, path, problems);
  s.get("stop_window_days", pc.stop_window_days);
  s.get("default_molecule_interval_days", pc.default_molecule_interval_days);
  s.get("default_chemo_interval_days", pc.default_chemo_interval_days);
  s.get("switch_includes_hospital", pc.switch_includes_hospital);
  s.get("mastectomy_lookback_days", pc.mastectomy_lookback_days);
  if (pc.stop_window_days < 1) problems.push_back(path + "/stop_window_days: must be positive");
}

void read_features(const nlohmann::json& j, const std::string& path, FeatureConfig& fc,
                   std::vector<std::string>& problems) {
  Section s(j, path, problems);
  s.get("padding", fc.padding);
  s.get("sequence_length", fc.sequence_length);
  s.get("days_cap", fc.days_cap);
  s.get("quantity_scale", fc.quantity_scale);
  s.get("sequence_scope", fc.sequence_scope);
  s.get("long_stay_days", fc.long_stay_days);
  s.get("department_buckets", fc.department_buckets);
  if (fc.padding != "zero" && fc.padding != "first")
    problems.push_back(path + "/padding: expected 'zero' or 'first'");
  if (fc.sequence_length < 1) problems.push_back(path + "/sequence_length: must be >= 1");
  if (fc.sequence_scope != "all" && fc.sequence_scope != "baseline")
    problems.push_back(path + "/sequence_scope: expected 'all' or 'baseline'");
  if (fc.department_buckets < 1) problems.push_back(path + "/department_buckets: must be >= 1");
}

void read_models(const nlohmann::json& j, const std::string& path, ModelsConfig& mc,
                 std::vector<std::string>& problems) {
  Section s(j, path, problems);
  if (const auto* v = s.take("logistic")) {
    Section m(*v, path + "/logistic", problems);
    m.get("ridge", mc.logistic.ridge);
    m.get("tol", mc.logistic.tol);
    m.get("max_iter", mc.logistic.max_iter);
    m.get("p_threshold", mc.logistic.p_threshold);
  }
  if (const auto* v = s.take("tree")) {
    Section m(*v, path + "/tree", problems);
    m.get("max_depth", mc.tree.max_depth);
    m.get("min_samples_leaf", mc.tree.min_samples_leaf);
  }
  if (const auto* v = s.take("gbt")) {
    Section m(*v, path + "/gbt", problems);
    m.get("rounds", mc.gbt.rounds);
    m.get("depth", mc.gbt.depth);
    m.get("learning_rate", mc.gbt.learning_rate);
    m.get("min_samples_leaf", mc.gbt.min_samples_leaf);
  }
  if (const auto* v = s.take("mlp")) {
    Section m(*v, path + "/mlp", problems);
    m.get("hidden", mc.mlp.hidden);
    m.get("epochs", mc.mlp.epochs);
    m.get("batch", mc.mlp.batch);
    m.get("learning_rate", mc.mlp.learning_rate);
  }
  if (const auto* v = s.take("lstm")) {
    Section m(*v, path + "/lstm", problems);
    m.get("hidden", mc.lstm.hidden);
    m.get("static_hidden", mc.lstm.static_hidden);
    m.get("epochs", mc.lstm.epochs);
    m.get("batch", mc.lstm.batch);
    m.get("learning_rate", mc.lstm.learning_rate);
  }
  if (const auto* v = s.take("grids")) {
    if (!v->is_object())
      problems.push_back(path + "/grids: expected an object");
    else
      mc.grids = *v;
  }
}

void read_eval(const nlohmann::json& j, const std::string& path, EvalConfig& ec,
               std::vector<std::string>& problems) {
  Section s(j, path, problems);
  s.get("k_folds", ec.k_folds);
  s.get("horizons", ec.horizons);
  s.get("families", ec.families);
  s.get("seed", ec.seed);
  s.get("padding_ablation", ec.padding_ablation);
  s.get("emit_svg", ec.emit_svg);
  s.get("grid_search", ec.grid_search);
  s.get("curve_points", ec.curve_points);
  if (ec.k_folds < 2) problems.push_back(path + "/k_folds: must be >= 2");
  for (int h : ec.horizons) {
    if (h != 90 && h != 180 && h != 360)
      problems.push_back(path + "/horizons: supported horizons are 90, 180, 360");
  }
  static const std::set<std::string> known{"logistic", "tree", "gbt", "mlp", "lstm"};
  for (const auto& f : ec.families) {
    if (!known.count(f)) problems.push_back(path + "/families: unknown family '" + f + "'");
  }
}

}  // namespace

ConfigError::ConfigError(const std::vector<std::string>& problems)
    : std::runtime_error(join_problems(problems)), problems_(problems) {}

std::string_view to_string(BehaviorKind k) {
  switch (k) {
    case BehaviorKind::FullyAdherent: return "adherent";
    case BehaviorKind::IllegitimateDropout: return "dropout";
    case BehaviorKind::Switcher: return "switcher";
    case BehaviorKind::DeathStop: return "death";
    case BehaviorKind::PalliativeStop: return "palliative";
    case BehaviorKind::CardiacStop: return "cardiac";
    default: return "censored";
  }
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig cfg;
  std::vector<std::string> problems;
  {
    Section root(j, "", problems);
    if (const auto* v = root.take("window")) {
      Section w(*v, "/window", problems);
      w.get_date("start", cfg.window_start);
      w.get_date("end", cfg.window_end);
    }
    root.get("threads", cfg.threads);
    if (const auto* v = root.take("sim")) read_sim(*v, "/sim", cfg.sim, problems);
    if (const auto* v = root.take("phases")) read_phases(*v, "/phases", cfg.phases, problems);
    if (const auto* v = root.take("features"))
      read_features(*v, "/features", cfg.features, problems);
    if (const auto* v = root.take("models")) read_models(*v, "/models", cfg.models, problems);
    if (const auto* v = root.take("evaluation")) read_eval(*v, "/evaluation", cfg.eval, problems);
  }
  if (!(cfg.window_start < cfg.window_end))
    problems.push_back("/window: start must precede end");
  if (!problems.empty()) throw ConfigError(problems);
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open config file: " + path});
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError({std::string("config is not valid JSON: ") + e.what()});
  }
  return from_json(j);
}

RunConfig RunConfig::from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError({std::string("config is not valid JSON: ") + e.what()});
  }
  return from_json(j);
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["window"] = {{"start", window_start.to_string()}, {"end", window_end.to_string()}};
  j["threads"] = threads;
  j["sim"] = {
      {"n_patients", sim.n_patients},
      {"seed", sim.seed},
      {"behavior_mix",
       {{"adherent", sim.behavior_mix[0]},
        {"dropout", sim.behavior_mix[1]},
        {"switcher", sim.behavior_mix[2]},
        {"death", sim.behavior_mix[3]},
        {"palliative", sim.behavior_mix[4]},
        {"cardiac", sim.behavior_mix[5]},
        {"censored", sim.behavior_mix[6]}}},
      {"molecule_mix", sim.molecule_mix},
      {"protocol_interval_days", sim.protocol_interval_days},
      {"chemo_interval_days", sim.chemo_interval_days},
      {"purchase_jitter_days", sim.purchase_jitter_days},
      {"max_start_day", sim.max_start_day},
      {"dropout_timing", sim.dropout_timing},
      {"dropout_hazard", sim.dropout_hazard},
      {"risk_signal",
       {{"age_55", sim.risk_signal.age_55},
        {"age_70", sim.risk_signal.age_70},
        {"copathology", sim.risk_signal.copathology},
        {"mastectomy", sim.risk_signal.mastectomy},
        {"financial_support", sim.risk_signal.financial_support}}},
      {"age_min", sim.age_min},
      {"age_max", sim.age_max},
      {"copathology_prob", sim.copathology_prob},
      {"copathology_max", sim.copathology_max},
      {"mastectomy_prob", sim.mastectomy_prob},
      {"ald_prob", sim.ald_prob},
      {"financial_support_prob", sim.financial_support_prob},
      {"chemo_lead_in_prob", sim.chemo_lead_in_prob},
      {"chemo_sessions", sim.chemo_sessions},
      {"gap_stretch", {{"enabled", sim.gap_stretch.enabled}, {"factors", sim.gap_stretch.factors}}},
      {"other_drug_monthly_prob", sim.other_drug_monthly_prob},
      {"other_drug_codes", sim.other_drug_codes}};
  j["phases"] = {{"stop_window_days", phases.stop_window_days},
                 {"default_molecule_interval_days", phases.default_molecule_interval_days},
                 {"default_chemo_interval_days", phases.default_chemo_interval_days},
                 {"switch_includes_hospital", phases.switch_includes_hospital},
                 {"mastectomy_lookback_days", phases.mastectomy_lookback_days}};
  j["features"] = {{"padding", features.padding},
                   {"sequence_length", features.sequence_length},
                   {"days_cap", features.days_cap},
                   {"quantity_scale", features.quantity_scale},
                   {"sequence_scope", features.sequence_scope},
                   {"long_stay_days", features.long_stay_days},
                   {"department_buckets", features.department_buckets}};
  j["models"] = {
      {"logistic",
       {{"ridge", models.logistic.ridge},
        {"tol", models.logistic.tol},
        {"max_iter", models.logistic.max_iter},
        {"p_threshold", models.logistic.p_threshold}}},
      {"tree", {{"max_depth", models.tree.max_depth}, {"min_samples_leaf", models.tree.min_samples_leaf}}},
      {"gbt",
       {{"rounds", models.gbt.rounds},
        {"depth", models.gbt.depth},
        {"learning_rate", models.gbt.learning_rate},
        {"min_samples_leaf", models.gbt.min_samples_leaf}}},
      {"mlp",
       {{"hidden", models.mlp.hidden},
        {"epochs", models.mlp.epochs},
        {"batch", models.mlp.batch},
        {"learning_rate", models.mlp.learning_rate}}},
      {"lstm",
       {{"hidden", models.lstm.hidden},
        {"static_hidden", models.lstm.static_hidden},
        {"epochs", models.lstm.epochs},
        {"batch", models.lstm.batch},
        {"learning_rate", models.lstm.learning_rate}}},
      {"grids", models.grids}};
  j["evaluation"] = {{"k_folds", eval.k_folds},
                     {"horizons", eval.horizons},
                     {"families", eval.families},
                     {"seed", eval.seed},
                     {"padding_ablation", eval.padding_ablation},
                     {"emit_svg", eval.emit_svg},
                     {"grid_search", eval.grid_search},
                     {"curve_points", eval.curve_points}};
  return j;
}

std::string RunConfig::hash() const {
  const std::uint64_t h = fnv1a64(to_json().dump());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int RunConfig::effective_threads() const {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace adherence
