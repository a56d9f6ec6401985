#include "adherence/claims_io.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "adherence/csv.hpp"
#include "adherence/version.hpp"

namespace adherence {

namespace {

const std::vector<std::string> kPatientHeader{"patient_id", "birth_year",     "sex",
                                              "department", "ald_start_date", "death_date"};
const std::vector<std::string> kDispensingHeader{"patient_id", "date", "molecule", "boxes",
                                                 "doses_per_box"};
const std::vector<std::string> kHospHeader{"patient_id", "start_date", "end_date", "kind",
                                           "diagnosis_code"};
const std::vector<std::string> kClinicalHeader{"patient_id", "date", "kind"};

int parse_int(const CsvReader& r, const std::string& column, const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw CsvError(r.path(), r.line_number(), column, "not an integer: '" + s + "'");
  return v;
}

Date parse_date(const CsvReader& r, const std::string& column, const std::string& s) {
  auto d = Date::parse(s);
  if (!d) throw CsvError(r.path(), r.line_number(), column, "not a YYYY-MM-DD date: '" + s + "'");
  return *d;
}

std::optional<Date> parse_opt_date(const CsvReader& r, const std::string& column,
                                   const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_date(r, column, s);
}

}  // namespace

std::string FileStamp::line() const {
  return std::string("adherence ") + kToolVersion + " config=" + config_hash +
         " seed=" + std::to_string(seed);
}

ClaimsPaths ClaimsPaths::in_dir(const std::filesystem::path& dir) {
  return ClaimsPaths{dir / "patients.csv", dir / "dispensing.csv", dir / "hospitalizations.csv",
                     dir / "clinical.csv"};
}

LoadResult load_claims(const ClaimsPaths& paths, Date window_start, Date window_end) {
  if (!(window_start < window_end))
    throw CsvError(paths.patients.string(), 0, "", "extraction window start must precede end");

  std::vector<PatientRecord> records;
  std::unordered_map<std::string, std::size_t> index;

  {
    CsvReader r(paths.patients.string(), kPatientHeader);
    std::vector<std::string> row;
    while (r.next(row)) {
      Patient p;
      p.id = row[0];
      if (p.id.empty()) throw CsvError(r.path(), r.line_number(), "patient_id", "empty id");
      if (index.count(p.id))
        throw CsvError(r.path(), r.line_number(), "patient_id", "duplicate patient " + p.id);
      if (!row[1].empty()) {
        const int by = parse_int(r, "birth_year", row[1]);
        if (by < 1900 || by > window_end.year())
          throw CsvError(r.path(), r.line_number(), "birth_year",
                         "birth year out of range: " + row[1]);
        p.birth_year = by;
      }
      auto sex = sex_from_string(row[2]);
      if (!sex) throw CsvError(r.path(), r.line_number(), "sex", "expected F or M, got '" + row[2] + "'");
      p.sex = *sex;
      p.department = row[3];
      p.ald_start = parse_opt_date(r, "ald_start_date", row[4]);
      p.death = parse_opt_date(r, "death_date", row[5]);
      if (p.death && *p.death > window_end)
        throw CsvError(r.path(), r.line_number(), "death_date",
                       "death date beyond extraction window end");
      index.emplace(p.id, records.size());
      records.push_back(PatientRecord{std::move(p), {}, {}, {}});
    }
  }

  LoadSummary summary;
  auto record_of = [&](const CsvReader& r, const std::string& id) -> PatientRecord& {
    auto it = index.find(id);
    if (it == index.end())
      throw CsvError(r.path(), r.line_number(), "patient_id",
                     "unknown patient " + id + " (not in patient file)");
    return records[it->second];
  };

  {
    CsvReader r(paths.dispensing.string(), kDispensingHeader);
    std::vector<std::string> row;
    while (r.next(row)) {
      auto& rec = record_of(r, row[0]);
      DispensingEvent e;
      e.date = parse_date(r, "date", row[1]);
      auto mol = Molecule::from_string(row[2]);
      if (!mol)
        throw CsvError(r.path(), r.line_number(), "molecule",
                       "unknown molecule code '" + row[2] + "'");
      e.molecule = *mol;
      e.boxes = parse_int(r, "boxes", row[3]);
      e.doses_per_box = parse_int(r, "doses_per_box", row[4]);
      if (e.boxes < 1) throw CsvError(r.path(), r.line_number(), "boxes", "must be >= 1");
      if (e.doses_per_box < 1)
        throw CsvError(r.path(), r.line_number(), "doses_per_box", "must be >= 1");
      if (e.date < window_start || e.date > window_end) {
        ++summary.dropped_dispensings;
        continue;
      }
      rec.dispensings.push_back(std::move(e));
    }
  }

  {
    CsvReader r(paths.hospitalizations.string(), kHospHeader);
    std::vector<std::string> row;
    while (r.next(row)) {
      auto& rec = record_of(r, row[0]);
      HospitalizationEvent e;
      e.start = parse_date(r, "start_date", row[1]);
      e.end = parse_date(r, "end_date", row[2]);
      if (e.end < e.start)
        throw CsvError(r.path(), r.line_number(), "end_date", "stay ends before it starts");
      auto kind = hosp_kind_from_string(row[3]);
      if (!kind)
        throw CsvError(r.path(), r.line_number(), "kind",
                       "expected CHEMO|RADIO|OTHER, got '" + row[3] + "'");
      e.kind = *kind;
      e.diagnosis = row[4];
      if (e.start < window_start || e.end > window_end) {
        ++summary.dropped_hospitalizations;
        continue;
      }
      rec.hospitalizations.push_back(std::move(e));
    }
  }

  {
    CsvReader r(paths.clinical.string(), kClinicalHeader);
    std::vector<std::string> row;
    while (r.next(row)) {
      auto& rec = record_of(r, row[0]);
      ClinicalEvent e;
      e.date = parse_date(r, "date", row[1]);
      auto kind = clinical_kind_from_string(row[2]);
      if (!kind)
        throw CsvError(r.path(), r.line_number(), "kind",
                       "expected PALLIATIVE|CARDIAC|MASTECTOMY, got '" + row[2] + "'");
      e.kind = *kind;
      if (e.date < window_start || e.date > window_end) {
        ++summary.dropped_clinical;
        continue;
      }
      rec.clinical.push_back(std::move(e));
    }
  }

  for (auto& rec : records) {
    // Stable sorts keep input order as the final tiebreaker.
    std::stable_sort(rec.dispensings.begin(), rec.dispensings.end(),
                     [](const DispensingEvent& a, const DispensingEvent& b) {
                       if (a.date != b.date) return a.date < b.date;
                       return a.molecule < b.molecule;
                     });
    std::stable_sort(rec.hospitalizations.begin(), rec.hospitalizations.end(),
                     [](const HospitalizationEvent& a, const HospitalizationEvent& b) {
                       return a.start < b.start;
                     });
    std::stable_sort(rec.clinical.begin(), rec.clinical.end(),
                     [](const ClinicalEvent& a, const ClinicalEvent& b) { return a.date < b.date; });
    // Copathologies are the distinct diagnosis codes of Other-kind stays.
    for (const auto& h : rec.hospitalizations) {
      if (h.kind == HospKind::Other && !h.diagnosis.empty())
        rec.patient.copathologies.insert(h.diagnosis);
    }
  }

  return LoadResult{ClaimsStore(window_start, window_end, std::move(records)), summary};
}

ValidationReport validate_store(const ClaimsStore& store) {
  ValidationReport report;
  auto add = [&](const std::string& id, std::string what) {
    report.violations.push_back(Violation{id, std::move(what)});
  };
  for (const auto& rec : store.records()) {
    const auto& p = rec.patient;
    if (p.ald_start && p.death && *p.ald_start > *p.death)
      add(p.id, "ald_start_date after death_date");
    if (p.birth_year && (*p.birth_year < 1900 || *p.birth_year > store.window_end().year()))
      add(p.id, "birth_year out of range");
    for (const auto& e : rec.dispensings) {
      if (p.death && e.date > *p.death) add(p.id, "dispensing event after death");
      if (e.boxes < 1 || e.doses_per_box < 1) add(p.id, "non-positive dispensing quantity");
    }
    for (const auto& e : rec.hospitalizations) {
      if (p.death && e.start > *p.death) add(p.id, "hospitalization after death");
      if (e.end < e.start) add(p.id, "hospital stay ends before it starts");
    }
    for (const auto& e : rec.clinical) {
      if (p.death && e.date > *p.death) add(p.id, "clinical event after death");
    }
  }
  return report;
}

void write_claims(const ClaimsStore& store, const std::filesystem::path& dir,
                  const FileStamp& stamp) {
  std::filesystem::create_directories(dir);
  auto opt_date = [](const std::optional<Date>& d) { return d ? d->to_string() : ""; };

  {
    CsvWriter w((dir / "patients.csv").string());
    w.comment(stamp.line());
    w.row(kPatientHeader);
    for (const auto& rec : store.records()) {
      const auto& p = rec.patient;
      w.row({p.id, p.birth_year ? std::to_string(*p.birth_year) : "", std::string(to_string(p.sex)),
             p.department, opt_date(p.ald_start), opt_date(p.death)});
    }
    w.flush();
  }
  {
    CsvWriter w((dir / "dispensing.csv").string());
    w.comment(stamp.line());
    w.row(kDispensingHeader);
    for (const auto& rec : store.records()) {
      for (const auto& e : rec.dispensings) {
        w.row({rec.patient.id, e.date.to_string(), e.molecule.to_string(),
               std::to_string(e.boxes), std::to_string(e.doses_per_box)});
      }
    }
    w.flush();
  }
  {
    CsvWriter w((dir / "hospitalizations.csv").string());
    w.comment(stamp.line());
    w.row(kHospHeader);
    for (const auto& rec : store.records()) {
      for (const auto& e : rec.hospitalizations) {
        w.row({rec.patient.id, e.start.to_string(), e.end.to_string(),
               std::string(to_string(e.kind)), e.diagnosis});
      }
    }
    w.flush();
  }
  {
    CsvWriter w((dir / "clinical.csv").string());
    w.comment(stamp.line());
    w.row(kClinicalHeader);
    for (const auto& rec : store.records()) {
      for (const auto& e : rec.clinical) {
        w.row({rec.patient.id, e.date.to_string(), std::string(to_string(e.kind))});
      }
    }
    w.flush();
  }
}

}  // namespace adherence
