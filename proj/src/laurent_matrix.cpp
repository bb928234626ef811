#include "loopcell/laurent_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace loopcell {

LaurentMatrix::LaurentMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {
  if (n <= 0) throw std::invalid_argument("matrix size must be positive");
}

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentScalar(1);
  return m;
}

LaurentMatrix LaurentMatrix::diagonal(const std::vector<LaurentScalar>& d) {
  LaurentMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.size(); ++i) m.at(i, i) = d[static_cast<size_t>(i)];
  return m;
}

bool LaurentMatrix::is_integral() const {
  for (const auto& x : e_)
    if (!x.is_integral()) return false;
  return true;
}

bool LaurentMatrix::is_constant() const {
  for (const auto& x : e_)
    if (!x.is_constant()) return false;
  return true;
}

bool LaurentMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool LaurentMatrix::is_monomial() const {
  std::vector<int> row_used(static_cast<size_t>(n_), 0);
  for (int j = 0; j < n_; ++j) {
    int found = -1;
    for (int i = 0; i < n_; ++i) {
      if (at(i, j).is_zero()) continue;
      if (!at(i, j).is_monomial() || found >= 0) return false;
      found = i;
    }
    if (found < 0 || row_used[static_cast<size_t>(found)]) return false;
    row_used[static_cast<size_t>(found)] = 1;
  }
  return true;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  LaurentMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const LaurentScalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += a * o.at(k, j);
      }
    }
  return r;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  LaurentMatrix r = *this;
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
  return r;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  LaurentMatrix r = *this;
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
  return r;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentScalar& c) const {
  LaurentMatrix r(n_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
  return r;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
  return a.n_ == b.n_ && a.e_ == b.e_;
}

std::string LaurentMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    os << "[ ";
    for (int j = 0; j < n_; ++j) {
      if (j) os << " , ";
      os << at(i, j).str();
    }
    os << " ]\n";
  }
  return os.str();
}

namespace {

// Determinant of the submatrix on the rows below the processed ones and the
// column set encoded by mask, memoized on the mask.
LaurentScalar det_minor(const LaurentMatrix& m, unsigned mask,
                        std::vector<LaurentScalar>& memo, std::vector<char>& seen) {
  if (mask == 0) return LaurentScalar(1);
  if (seen[mask]) return memo[mask];
  int n = m.size();
  int row = n - __builtin_popcount(mask);
  LaurentScalar acc;
  int sign = 1;
  for (int j = 0; j < n; ++j) {
    if (!(mask & (1u << j))) continue;
    if (!m.at(row, j).is_zero()) {
      LaurentScalar sub = det_minor(m, mask & ~(1u << j), memo, seen);
      LaurentScalar term = m.at(row, j) * sub;
      acc += (sign > 0) ? term : -term;
    }
    sign = -sign;
  }
  seen[mask] = 1;
  memo[mask] = acc;
  return acc;
}

}  // namespace

LaurentScalar det(const LaurentMatrix& m) {
  int n = m.size();
  if (n > 16) throw std::invalid_argument("determinant: matrix too large");
  std::vector<LaurentScalar> memo(1u << n);
  std::vector<char> seen(1u << n, 0);
  return det_minor(m, (1u << n) - 1, memo, seen);
}

LaurentMatrix inverse(const LaurentMatrix& m) {
  int n = m.size();
  LaurentScalar d = det(m);
  if (d.is_zero()) throw std::domain_error("inverse of a singular matrix");
  if (!d.is_monomial())
    throw std::domain_error("inverse requires a monomial determinant (unimodular matrix)");
  LaurentScalar dinv = LaurentScalar::monomial(1 / d.coeff(d.valuation()), -d.valuation());
  if (n == 1) return LaurentMatrix::diagonal({dinv});
  LaurentMatrix adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LaurentMatrix sub(n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;  // adjugate transposes the cofactor matrix
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          sub.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      LaurentScalar cof = det(sub);
      adj.at(i, j) = (((i + j) % 2) ? -cof : cof) * dinv;
    }
  return adj;
}

bool membership(const LaurentMatrix& m, MatrixClass cls) {
  if (!m.is_integral()) return false;
  if (cls == MatrixClass::Integral) return true;
  LaurentScalar d = det(m);
  if (cls == MatrixClass::GLnA) return !d.is_zero() && d.valuation() == 0;
  if (!d.is_one()) return false;
  if (cls == MatrixClass::G0) return true;
  // Iwahori: upper triangular with nonzero diagonal at t = 0.
  for (int i = 0; i < m.size(); ++i) {
    if (m.at(i, i).at_zero() == 0) return false;
    for (int j = 0; j < i; ++j)
      if (m.at(i, j).at_zero() != 0) return false;
  }
  return true;
}

long vdim(const LaurentMatrix& m) {
  LaurentScalar d = det(m);
  if (d.is_zero()) throw std::domain_error("vdim of a singular matrix");
  return -d.valuation();
}

LaurentMatrix mat_pow(const LaurentMatrix& m, int k) {
  LaurentMatrix r = LaurentMatrix::identity(m.size());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace loopcell
