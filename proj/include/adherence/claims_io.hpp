#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "adherence/domain.hpp"

namespace adherence {

// "# adherence <version> config=<hash> seed=<seed>" metadata line written
// at the top of every output file.
struct FileStamp {
  std::string config_hash;
  std::uint64_t seed = 0;
  std::string line() const;
};

struct LoadSummary {
  std::uint64_t dropped_dispensings = 0;
  std::uint64_t dropped_hospitalizations = 0;
  std::uint64_t dropped_clinical = 0;
  std::uint64_t total_dropped() const {
    return dropped_dispensings + dropped_hospitalizations + dropped_clinical;
  }
};

struct LoadResult {
  ClaimsStore store;
  LoadSummary summary;
};

struct ClaimsPaths {
  std::filesystem::path patients;
  std::filesystem::path dispensing;
  std::filesystem::path hospitalizations;
  std::filesystem::path clinical;
  static ClaimsPaths in_dir(const std::filesystem::path& dir);
};

// Loads and validates the four claims files. Events dated outside
// [window_start, window_end] are dropped and counted; bounds are inclusive.
// Throws CsvError on malformed rows, unknown codes, or events referencing
// a patient id absent from the patient file.
LoadResult load_claims(const ClaimsPaths& paths, Date window_start, Date window_end);

struct Violation {
  std::string patient_id;
  std::string what;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Reports semantic inconsistencies in an already-built store: events after
// death, ALD diagnosed after death, non-positive quantities, hospital stays
// with end before start. Empty report iff the store is consistent.
ValidationReport validate_store(const ClaimsStore& store);

// Writes the four claims CSVs into dir.
void write_claims(const ClaimsStore& store, const std::filesystem::path& dir,
                  const FileStamp& stamp);

}  // namespace adherence
