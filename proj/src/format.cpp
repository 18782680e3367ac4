#include "spectra/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace spectra {

namespace {

std::string to_chars_string(double value, std::chars_format fmt, int precision) {
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value, fmt, precision);
  return {buf.data(), result.ptr};
}

std::string shortest(double value) {
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), result.ptr};
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("not a number: " + std::string(text));
  return value;
}

// Exponent of a to_chars scientific string, "e-03" -> -3.
int decimal_exponent(const std::string& sci) {
  std::size_t pos = sci.find('e') + 1;
  if (sci[pos] == '+') ++pos;
  int exponent = 0;
  std::from_chars(sci.data() + pos, sci.data() + sci.size(), exponent);
  return exponent;
}

}  // namespace

double round_significant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  return parse_double(to_chars_string(value, std::chars_format::scientific, digits - 1));
}

std::string format_number(double value, int precision) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return shortest(round_significant(value, precision));
}

std::string format_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return shortest(value);
  const std::string sci = to_chars_string(value, std::chars_format::scientific, digits - 1);
  const double rounded = parse_double(sci);
  const int decimals = std::max(0, digits - 1 - decimal_exponent(sci));
  return to_chars_string(rounded, std::chars_format::fixed, decimals);
}

std::string format_mantissa_exponent(double value, int digits) {
  const std::string sci = to_chars_string(value, std::chars_format::scientific, digits - 1);
  return sci.substr(0, sci.find('e')) + "(" + std::to_string(decimal_exponent(sci)) + ")";
}

int count_significant_digits(std::string_view printed) {
  const auto paren = printed.find('(');
  const std::string_view mantissa = printed.substr(0, paren);
  int digits = 0;
  bool leading = true;
  for (char c : mantissa) {
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++digits;
  }
  return digits;
}

double parse_printed(std::string_view printed) {
  const auto paren = printed.find('(');
  if (paren == std::string_view::npos) return parse_double(printed);
  const auto close = printed.find(')', paren);
  if (close == std::string_view::npos) throw std::invalid_argument("unbalanced exponent: " + std::string(printed));
  const std::string literal = std::string(printed.substr(0, paren)) + "e" +
                              std::string(printed.substr(paren + 1, close - paren - 1));
  return parse_double(literal);
}

void CsvWriter::field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) {
    out_ << value;
    return;
  }
  out_ << '"';
  for (char c : value) {
    if (c == '"') out_ << '"';
    out_ << c;
  }
  out_ << '"';
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out_ << ',';
    field(fields[i]);
  }
  out_ << '\n';
}

void CsvWriter::row(std::initializer_list<std::string_view> fields) {
  bool first = true;
  for (std::string_view f : fields) {
    if (!first) out_ << ',';
    field(f);
    first = false;
  }
  out_ << '\n';
}

}  // namespace spectra
