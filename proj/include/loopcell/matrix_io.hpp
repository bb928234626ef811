#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "loopcell/laurent_matrix.hpp"

namespace loopcell {

// Parse failure with a 1-based line number for diagnostics.
struct MatrixParseError : std::runtime_error {
  MatrixParseError(int line, const std::string& what);
  int line;
};

// Text format, bit-exact round trip:
//   loopcell-matrix v1
//   n <size>
//   entry <i> <j> zero
//   entry <i> <j> val <valuation> coeffs <p/q> <p/q> ...
// Indices are 1-based, entries listed row-major, rationals in lowest terms.
std::string write_matrix(const LaurentMatrix& m);
void write_matrix(std::ostream& os, const LaurentMatrix& m);

LaurentMatrix read_matrix(std::istream& is);
LaurentMatrix read_matrix_string(const std::string& text);
LaurentMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const LaurentMatrix& m);

}  // namespace loopcell
