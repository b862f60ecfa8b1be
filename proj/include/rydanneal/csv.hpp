#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rydanneal::cli {

// Shortest-free, locale-independent rendering with 17 significant digits.
std::string format_number(double value);

// Quotes a field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& names);
  CsvWriter& cell(std::string_view text);
  CsvWriter& cell(double value);
  CsvWriter& cell(long long value);
  void end_row();

 private:
  std::ostream& out_;
  bool first_ = true;
};

}  // namespace rydanneal::cli
