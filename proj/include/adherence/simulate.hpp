#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "adherence/claims_io.hpp"
#include "adherence/config.hpp"
#include "adherence/domain.hpp"

namespace adherence {

enum class PlannedEnd { Illegitimate, Switch, Death, Palliative, Cardiac, Censored };
std::string_view to_string(PlannedEnd);

struct PlantedPhase {
  int phase_index = 0;
  Therapy therapy;
  Date start;
  PlannedEnd end_kind = PlannedEnd::Censored;
  Date end_date;
};

// What the simulator actually realized for one patient. Covariate fields
// mirror what ended up in the claims files, so planted-signal checks can
// condition on them.
struct PatientTruth {
  std::string patient_id;
  BehaviorKind behavior = BehaviorKind::FullyAdherent;
  int age_at_window_start = 0;
  int copathology_count = 0;
  bool mastectomy = false;
  bool financial_support = false;
  std::vector<PlantedPhase> phases;
};

struct GroundTruth {
  std::vector<PatientTruth> patients;
};

struct SimResult {
  ClaimsStore store;
  GroundTruth truth;
};

// Pure function of the config (seed included). Patients are generated from
// independently derived per-patient streams, so output does not depend on
// generation order.
SimResult simulate_cohort(const RunConfig& cfg);

// Writes the four claims CSVs plus ground_truth.csv. Byte-identical for
// identical inputs.
void emit_claims(const ClaimsStore& store, const GroundTruth& truth,
                 const std::filesystem::path& dir, const FileStamp& stamp);

}  // namespace adherence
