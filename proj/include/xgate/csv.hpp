#pragma once

#include <string>
#include <vector>

namespace xgate {

/// Fixed CSV float format: 12 significant digits, '.' decimal separator,
/// locale independent. Identical inputs always produce identical bytes.
std::string format_double(double value);

/// Minimal CSV assembly: header first, comma-separated cells, every row
/// newline terminated.
class CsvBuilder {
 public:
  explicit CsvBuilder(std::vector<std::string> header);

  void add_row(const std::vector<std::string>& cells);

  /// Convenience for all-numeric rows.
  void add_numeric_row(const std::vector<double>& values);

  const std::string& str() const { return body_; }

 private:
  std::size_t columns_;
  std::string body_;
};

}  // namespace xgate
