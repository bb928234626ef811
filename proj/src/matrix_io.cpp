#include "loopcell/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace loopcell {

namespace {

const char* kHeader = "loopcell-matrix v1";

[[noreturn]] void fail(int line, const std::string& what) { throw MatrixParseError(line, what); }

}  // namespace

MatrixParseError::MatrixParseError(int line_, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}

void write_matrix(std::ostream& os, const LaurentMatrix& m) {
  os << kHeader << "\n";
  os << "n " << m.size() << "\n";
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) {
      const LaurentScalar& x = m.at(i, j);
      os << "entry " << (i + 1) << " " << (j + 1);
      if (x.is_zero()) {
        os << " zero\n";
        continue;
      }
      os << " val " << x.valuation() << " coeffs";
      for (const Rational& c : x.coeffs()) os << " " << rational_string(c);
      os << "\n";
    }
}

std::string write_matrix(const LaurentMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

LaurentMatrix read_matrix(std::istream& is) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++lineno;
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line() || line.find(kHeader) != 0) fail(lineno ? lineno : 1, "missing 'loopcell-matrix v1' header");
  if (!next_line()) fail(lineno, "missing 'n <size>' line");
  std::istringstream ns(line);
  std::string tok;
  int n = 0;
  if (!(ns >> tok >> n) || tok != "n" || n < 1) fail(lineno, "expected 'n <size>'");

  LaurentMatrix m(n);
  std::vector<char> seen(static_cast<size_t>(n) * n, 0);
  for (int k = 0; k < n * n; ++k) {
    if (!next_line()) fail(lineno, "expected " + std::to_string(n * n) + " entries, got " + std::to_string(k));
    std::istringstream es(line);
    int i = 0, j = 0;
    if (!(es >> tok >> i >> j) || tok != "entry") fail(lineno, "expected 'entry <i> <j> ...'");
    if (i < 1 || i > n || j < 1 || j > n) fail(lineno, "entry index out of range");
    size_t slot = static_cast<size_t>(i - 1) * n + (j - 1);
    if (seen[slot]) fail(lineno, "duplicate entry " + std::to_string(i) + " " + std::to_string(j));
    seen[slot] = 1;
    if (!(es >> tok)) fail(lineno, "missing entry body");
    if (tok == "zero") {
      std::string rest;
      if (es >> rest) fail(lineno, "trailing tokens after 'zero'");
      continue;
    }
    if (tok != "val") fail(lineno, "expected 'zero' or 'val <k> coeffs ...'");
    long val = 0;
    if (!(es >> val)) fail(lineno, "bad valuation");
    if (!(es >> tok) || tok != "coeffs") fail(lineno, "expected 'coeffs'");
    std::vector<Rational> coeffs;
    std::string lit;
    while (es >> lit) {
      try {
        coeffs.push_back(parse_rational(lit));
      } catch (const std::invalid_argument& e) {
        fail(lineno, e.what());
      }
    }
    if (coeffs.empty()) fail(lineno, "empty coefficient list");
    if (coeffs.front() == 0 || coeffs.back() == 0)
      fail(lineno, "coefficient list must start and end with nonzero values");
    m.at(i - 1, j - 1) = LaurentScalar::from_coeffs(val, std::move(coeffs));
  }
  if (next_line()) fail(lineno, "trailing content after the last entry");
  return m;
}

LaurentMatrix read_matrix_string(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

LaurentMatrix read_matrix_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  return read_matrix(f);
}

void write_matrix_file(const std::string& path, const LaurentMatrix& m) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_matrix(f, m);
}

}  // namespace loopcell
