#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace spectra {

/// Shortest decimal that round-trips the value after rounding it to `precision`
/// significant digits. Locale independent.
std::string format_number(double value, int precision);

/// Correctly rounded to `digits` significant figures (ties to even on the exact binary value).
double round_significant(double value, int digits);

/// Positional notation keeping trailing zeros: (-0.0100, 3) -> "-0.0100".
std::string format_significant(double value, int digits);

/// Mantissa(exponent) notation: (-3.38e-3, 3) -> "-3.38(-3)".
std::string format_mantissa_exponent(double value, int digits);

/// Significant digits in a printed literal such as "-0.0100" or "-3.38(-3)".
int count_significant_digits(std::string_view printed);

/// Value of a printed literal in either notation.
double parse_printed(std::string_view printed);

/// RFC 4180 CSV with LF line endings.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void row(const std::vector<std::string>& fields);
  void row(std::initializer_list<std::string_view> fields);

 private:
  void field(std::string_view value);

  std::ostream& out_;
};

}  // namespace spectra
