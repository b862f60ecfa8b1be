#include <charconv>
#include <cmath>

#include "rydanneal/csv.hpp"

namespace rydanneal::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void CsvWriter::header(const std::vector<std::string>& names) {
  for (const std::string& n : names) cell(n);
  end_row();
}

CsvWriter& CsvWriter::cell(std::string_view text) {
  if (!first_) out_ << ',';
  out_ << csv_field(text);
  first_ = false;
  return *this;
}

CsvWriter& CsvWriter::cell(double value) { return cell(format_number(value)); }

CsvWriter& CsvWriter::cell(long long value) { return cell(std::to_string(value)); }

void CsvWriter::end_row() {
  out_ << '\n';
  first_ = true;
}

}  // namespace rydanneal::cli
