#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "adherence/date.hpp"

namespace adherence {

// The 13 study molecules, in canonical order. Everything else is OtherDrug.
inline constexpr std::array<std::string_view, 13> kStudyMolecules{
    "Anastrozole", "Capecitabine", "Cyclophosphamide", "Etoposide", "Everolimus",
    "Exemestane",  "Lapatinib",    "Letrozole",        "Megestrol", "Melphalan",
    "Tamoxifen",   "Toremifene",   "Vinorelbine"};

inline constexpr int kNumStudyMolecules = 13;

class Molecule {
 public:
  Molecule() = default;
  static Molecule study(int index);
  static Molecule other(std::string code);
  // Canonical molecule name, or "OTHER:<code>".
  static std::optional<Molecule> from_string(std::string_view s);
  std::string to_string() const;

  bool is_study() const { return index_ < kNumStudyMolecules; }
  int study_index() const { return is_study() ? index_ : -1; }
  const std::string& other_code() const { return code_; }

  friend bool operator==(const Molecule& a, const Molecule& b) {
    return a.index_ == b.index_ && a.code_ == b.code_;
  }
  friend auto operator<=>(const Molecule& a, const Molecule& b) {
    if (auto c = a.index_ <=> b.index_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  int index_ = kNumStudyMolecules;  // 0..12 study, 13 = other
  std::string code_;                // set only for OtherDrug
};

enum class Sex { Female, Male };
enum class HospKind { Chemotherapy, Radiotherapy, Other };               // CHEMO|RADIO|OTHER
enum class ClinicalKind { PalliativeCareStart, SeriousCardiacIssue, Mastectomy };

std::string_view to_string(Sex);
std::string_view to_string(HospKind);
std::string_view to_string(ClinicalKind);
std::optional<Sex> sex_from_string(std::string_view);
std::optional<HospKind> hosp_kind_from_string(std::string_view);
std::optional<ClinicalKind> clinical_kind_from_string(std::string_view);

struct Patient {
  std::string id;
  std::optional<int> birth_year;
  Sex sex = Sex::Female;
  std::string department;
  std::optional<Date> ald_start;
  std::optional<Date> death;
  // Derived at load time from the diagnosis codes of this patient's
  // Other-kind hospitalizations; not a physical CSV column.
  std::set<std::string> copathologies;

  friend bool operator==(const Patient&, const Patient&) = default;
};

struct DispensingEvent {
  Date date;
  Molecule molecule;
  int boxes = 1;
  int doses_per_box = 1;
  friend bool operator==(const DispensingEvent&, const DispensingEvent&) = default;
};

struct HospitalizationEvent {
  Date start;
  Date end;
  HospKind kind = HospKind::Other;
  std::string diagnosis;
  friend bool operator==(const HospitalizationEvent&, const HospitalizationEvent&) = default;
};

struct ClinicalEvent {
  Date date;
  ClinicalKind kind = ClinicalKind::Mastectomy;
  friend bool operator==(const ClinicalEvent&, const ClinicalEvent&) = default;
};

struct PatientRecord {
  Patient patient;
  std::vector<DispensingEvent> dispensings;          // sorted (date, molecule, input order)
  std::vector<HospitalizationEvent> hospitalizations;  // sorted (start, input order)
  std::vector<ClinicalEvent> clinical;               // sorted (date, input order)
  friend bool operator==(const PatientRecord&, const PatientRecord&) = default;
};

// Immutable after construction; safe for concurrent reads.
class ClaimsStore {
 public:
  ClaimsStore() = default;
  ClaimsStore(Date window_start, Date window_end, std::vector<PatientRecord> records);

  Date window_start() const { return window_start_; }
  Date window_end() const { return window_end_; }
  const std::vector<PatientRecord>& records() const { return records_; }
  const PatientRecord* find(std::string_view patient_id) const;
  std::size_t n_patients() const { return records_.size(); }

  friend bool operator==(const ClaimsStore& a, const ClaimsStore& b) {
    return a.window_start_ == b.window_start_ && a.window_end_ == b.window_end_ &&
           a.records_ == b.records_;
  }

 private:
  Date window_start_;
  Date window_end_;
  std::vector<PatientRecord> records_;  // sorted by patient id
  std::unordered_map<std::string, std::size_t> by_id_;
};

// Therapy = a study molecule or a hospitalization treatment kind.
// Canonical indices: 0..12 molecules, 13 = CHEMO, 14 = RADIO.
class Therapy {
 public:
  static constexpr int kCount = kNumStudyMolecules + 2;
  Therapy() = default;
  static Therapy molecule(int study_index) { return Therapy(study_index); }
  static Therapy chemo() { return Therapy(kNumStudyMolecules); }
  static Therapy radio() { return Therapy(kNumStudyMolecules + 1); }
  static std::optional<Therapy> from_string(std::string_view s);

  bool is_molecule() const { return index_ < kNumStudyMolecules; }
  bool is_hospital() const { return !is_molecule(); }
  int molecule_index() const { return is_molecule() ? index_ : -1; }
  int index() const { return index_; }
  std::string to_string() const;

  friend constexpr auto operator<=>(Therapy, Therapy) = default;

 private:
  constexpr explicit Therapy(int index) : index_(index) {}
  int index_ = 0;
};

}  // namespace adherence
