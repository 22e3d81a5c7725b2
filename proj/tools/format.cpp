#include "format.hpp"

#include <charconv>

namespace pairsuite::cli {

std::string format_double(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string join_symbols(std::span<const Elem> symbols) {
  std::string s;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(symbols[i].value);
  }
  return s;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n\r") == std::string::npos) {
      out << f;
      continue;
    }
    out << '"';
    for (char c : f) {
      if (c == '"') out << '"';
      out << c;
    }
    out << '"';
  }
  out << '\n';
}

}  // namespace pairsuite::cli
