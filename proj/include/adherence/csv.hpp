#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace adherence {

// Thrown for structural problems in an input file; message carries
// path, 1-based line number and, when known, the column name.
class CsvError : public std::runtime_error {
 public:
  CsvError(const std::string& path, std::size_t line, const std::string& column,
           const std::string& reason);
  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }
  const std::string& column() const { return column_; }

 private:
  std::string path_;
  std::size_t line_;
  std::string column_;
};

// Minimal comma-separated reader: UTF-8, one header row, no quoting.
// Lines starting with '#' before the header are metadata comments and skipped.
class CsvReader {
 public:
  CsvReader(const std::string& path, const std::vector<std::string>& expected_header);

  // Fills `row` with exactly header-width fields; false at EOF.
  bool next(std::vector<std::string>& row);

  std::size_t line_number() const { return line_; }
  const std::string& path() const { return path_; }
  const std::vector<std::string>& header() const { return header_; }

 private:
  std::string path_;
  std::ifstream in_;
  std::vector<std::string> header_;
  std::size_t line_ = 0;
};

class CsvWriter {
 public:
  CsvWriter(const std::string& path);
  void comment(const std::string& text);  // emits "# text"
  void row(const std::vector<std::string>& fields);
  void flush();

 private:
  std::string path_;
  std::ofstream out_;
};

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace adherence
