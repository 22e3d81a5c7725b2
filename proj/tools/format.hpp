#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pairsuite/galois.hpp"

namespace pairsuite::cli {

/// Shortest form with at most 12 significant digits; locale independent.
std::string format_double(double x);

/// Integer encodings joined by single spaces.
std::string join_symbols(std::span<const Elem> symbols);

/// RFC 4180 style: fields containing ',', '"' or newlines are quoted.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace pairsuite::cli
