#include "adherence/domain.hpp"

#include <algorithm>

namespace adherence {

Molecule Molecule::study(int index) {
  Molecule m;
  m.index_ = index;
  return m;
}

Molecule Molecule::other(std::string code) {
  Molecule m;
  m.index_ = kNumStudyMolecules;
  m.code_ = std::move(code);
  return m;
}

std::optional<Molecule> Molecule::from_string(std::string_view s) {
  for (int i = 0; i < kNumStudyMolecules; ++i) {
    if (s == kStudyMolecules[i]) return study(i);
  }
  if (s.size() > 6 && s.substr(0, 6) == "OTHER:") return other(std::string(s.substr(6)));
  return std::nullopt;
}

std::string Molecule::to_string() const {
  if (is_study()) return std::string(kStudyMolecules[index_]);
  return "OTHER:" + code_;
}

std::string_view to_string(Sex s) { return s == Sex::Female ? "F" : "M"; }

std::string_view to_string(HospKind k) {
  switch (k) {
    case HospKind::Chemotherapy: return "CHEMO";
    case HospKind::Radiotherapy: return "RADIO";
    default: return "OTHER";
  }
}

std::string_view to_string(ClinicalKind k) {
  switch (k) {
    case ClinicalKind::PalliativeCareStart: return "PALLIATIVE";
    case ClinicalKind::SeriousCardiacIssue: return "CARDIAC";
    default: return "MASTECTOMY";
  }
}

std::optional<Sex> sex_from_string(std::string_view s) {
  if (s == "F") return Sex::Female;
  if (s == "M") return Sex::Male;
  return std::nullopt;
}

std::optional<HospKind> hosp_kind_from_string(std::string_view s) {
  if (s == "CHEMO") return HospKind::Chemotherapy;
  if (s == "RADIO") return HospKind::Radiotherapy;
  if (s == "OTHER") return HospKind::Other;
  return std::nullopt;
}

std::optional<ClinicalKind> clinical_kind_from_string(std::string_view s) {
  if (s == "PALLIATIVE") return ClinicalKind::PalliativeCareStart;
  if (s == "CARDIAC") return ClinicalKind::SeriousCardiacIssue;
  if (s == "MASTECTOMY") return ClinicalKind::Mastectomy;
  return std::nullopt;
}

ClaimsStore::ClaimsStore(Date window_start, Date window_end, std::vector<PatientRecord> records)
    : window_start_(window_start), window_end_(window_end), records_(std::move(records)) {
  std::sort(records_.begin(), records_.end(),
            [](const PatientRecord& a, const PatientRecord& b) {
              return a.patient.id < b.patient.id;
            });
  by_id_.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) by_id_[records_[i].patient.id] = i;
}

const PatientRecord* ClaimsStore::find(std::string_view patient_id) const {
  auto it = by_id_.find(std::string(patient_id));
  return it == by_id_.end() ? nullptr : &records_[it->second];
}

std::optional<Therapy> Therapy::from_string(std::string_view s) {
  if (s == "CHEMO") return chemo();
  if (s == "RADIO") return radio();
  for (int i = 0; i < kNumStudyMolecules; ++i) {
    if (s == kStudyMolecules[i]) return molecule(i);
  }
  return std::nullopt;
}

std::string Therapy::to_string() const {
  if (is_molecule()) return std::string(kStudyMolecules[index_]);
  return index_ == kNumStudyMolecules ? "CHEMO" : "RADIO";
}

}  // namespace adherence
