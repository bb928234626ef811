#include "loopcell/laurent_fraction.hpp"

#include <sstream>
#include <stdexcept>

namespace loopcell {

LaurentFraction::LaurentFraction(const LaurentScalar& num, const LaurentScalar& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("fraction with zero denominator");
  if (num_.is_zero()) den_ = LaurentScalar(1);
}

long LaurentFraction::valuation() const {
  if (is_zero()) throw std::domain_error("valuation of zero");
  return num_.valuation() - den_.valuation();
}

Rational LaurentFraction::at_zero() const {
  if (is_zero()) return Rational(0);
  long v = valuation();
  if (v < 0) throw std::domain_error("evaluation at t=0 of a non-integral fraction");
  if (v > 0) return Rational(0);
  return num_.coeff(num_.valuation()) / den_.coeff(den_.valuation());
}

LaurentFraction LaurentFraction::operator-() const {
  LaurentFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b) {
  return LaurentFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b) { return a + (-b); }

LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b) {
  return LaurentFraction(a.num_ * b.num_, a.den_ * b.den_);
}

LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b) {
  if (b.is_zero()) throw std::domain_error("division by zero fraction");
  return LaurentFraction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const LaurentFraction& a, const LaurentFraction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string LaurentFraction::str() const {
  if (den_.is_one()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ") / (" << den_.str() << ")";
  return os.str();
}

FractionMatrix::FractionMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {
  if (n <= 0) throw std::invalid_argument("matrix size must be positive");
}

FractionMatrix FractionMatrix::identity(int n) {
  FractionMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentFraction(LaurentScalar(1));
  return m;
}

FractionMatrix FractionMatrix::from(const LaurentMatrix& m) {
  FractionMatrix r(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r.at(i, j) = LaurentFraction(m.at(i, j));
  return r;
}

FractionMatrix FractionMatrix::operator*(const FractionMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  FractionMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      LaurentFraction acc;
      for (int k = 0; k < n_; ++k) {
        if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
        acc = acc + at(i, k) * o.at(k, j);
      }
      r.at(i, j) = acc;
    }
  return r;
}

bool operator==(const FractionMatrix& a, const FractionMatrix& b) {
  if (a.n_ != b.n_) return false;
  for (size_t k = 0; k < a.e_.size(); ++k)
    if (!(a.e_[k] == b.e_[k])) return false;
  return true;
}

bool FractionMatrix::equals(const LaurentMatrix& m) const {
  if (n_ != m.size()) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!(at(i, j) == LaurentFraction(m.at(i, j)))) return false;
  return true;
}

LaurentFraction det(const FractionMatrix& m) {
  int n = m.size();
  if (n == 1) return m.at(0, 0);
  LaurentFraction acc;
  int sign = 1;
  for (int j = 0; j < n; ++j) {
    if (!m.at(0, j).is_zero()) {
      FractionMatrix sub(n - 1);
      for (int r = 1; r < n; ++r)
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          sub.at(r - 1, cc++) = m.at(r, c);
        }
      LaurentFraction term = m.at(0, j) * det(sub);
      acc = (sign > 0) ? acc + term : acc - term;
    }
    sign = -sign;
  }
  return acc;
}

bool fraction_iwahori(const FractionMatrix& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (!m.at(i, j).is_integral()) return false;
  if (!(det(m) == LaurentFraction(LaurentScalar(1)))) return false;
  for (int i = 0; i < m.size(); ++i) {
    if (m.at(i, i).at_zero() == 0) return false;
    for (int j = 0; j < i; ++j)
      if (m.at(i, j).at_zero() != 0) return false;
  }
  return true;
}

}  // namespace loopcell
