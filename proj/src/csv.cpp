#include "adherence/csv.hpp"

#include <sstream>

namespace adherence {

namespace {
std::string make_message(const std::string& path, std::size_t line, const std::string& column,
                         const std::string& reason) {
  std::ostringstream os;
  os << path << ":" << line;
  if (!column.empty()) os << " (column " << column << ")";
  os << ": " << reason;
  return os.str();
}
}  // namespace

CsvError::CsvError(const std::string& path, std::size_t line, const std::string& column,
                   const std::string& reason)
    : std::runtime_error(make_message(path, line, column, reason)),
      path_(path),
      line_(line),
      column_(column) {}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

CsvReader::CsvReader(const std::string& path, const std::vector<std::string>& expected_header)
    : path_(path), in_(path) {
  if (!in_) throw CsvError(path, 0, "", "cannot open file");
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line[0] == '#') continue;  // metadata comment
    header_ = split_csv_line(line);
    break;
  }
  if (header_.empty()) throw CsvError(path, line_, "", "missing header row");
  if (header_ != expected_header) {
    std::string want;
    for (const auto& h : expected_header) want += (want.empty() ? "" : ",") + h;
    throw CsvError(path, line_, "", "unexpected header, expected: " + want);
  }
}

bool CsvReader::next(std::vector<std::string>& row) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (line.empty()) continue;
    row = split_csv_line(line);
    if (row.size() != header_.size()) {
      throw CsvError(path_, line_, "",
                     "expected " + std::to_string(header_.size()) + " fields, got " +
                         std::to_string(row.size()));
    }
    return true;
  }
  return false;
}

CsvWriter::CsvWriter(const std::string& path) : path_(path), out_(path, std::ios::binary) {
  if (!out_) throw CsvError(path, 0, "", "cannot open file for writing");
}

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << "\n"; }

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << fields[i];
  }
  out_ << "\n";
}

void CsvWriter::flush() {
  out_.flush();
  if (!out_) throw CsvError(path_, 0, "", "write failed");
}

}  // namespace adherence
