#include "loopcell/laurent.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace loopcell {

void LaurentScalar::assign_constant(const Rational& c) {
  coeffs_.clear();
  val_ = 0;
  if (c != 0) coeffs_.push_back(c);
}

LaurentScalar LaurentScalar::monomial(const Rational& c, long exponent) {
  LaurentScalar r;
  if (c != 0) {
    r.val_ = exponent;
    r.coeffs_.push_back(c);
  }
  return r;
}

LaurentScalar LaurentScalar::from_coeffs(long valuation, std::vector<Rational> coeffs) {
  LaurentScalar r;
  r.val_ = valuation;
  r.coeffs_ = std::move(coeffs);
  r.normalize();
  return r;
}

void LaurentScalar::normalize() {
  size_t lo = 0, hi = coeffs_.size();
  while (lo < hi && coeffs_[lo] == 0) ++lo;
  while (hi > lo && coeffs_[hi - 1] == 0) --hi;
  if (lo == hi) {
    coeffs_.clear();
    val_ = 0;
    return;
  }
  if (lo > 0 || hi < coeffs_.size()) {
    std::vector<Rational> trimmed(coeffs_.begin() + lo, coeffs_.begin() + hi);
    coeffs_ = std::move(trimmed);
  }
  val_ += static_cast<long>(lo);
}

long LaurentScalar::valuation() const {
  if (is_zero()) throw std::domain_error("valuation of zero");
  return val_;
}

long LaurentScalar::degree() const {
  if (is_zero()) throw std::domain_error("degree of zero");
  return val_ + static_cast<long>(coeffs_.size()) - 1;
}

Rational LaurentScalar::coeff(long exponent) const {
  if (is_zero()) return Rational(0);
  long idx = exponent - val_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(idx)];
}

bool LaurentScalar::is_one() const {
  return coeffs_.size() == 1 && val_ == 0 && coeffs_[0] == 1;
}

Rational LaurentScalar::at_zero() const {
  if (!is_integral()) throw std::domain_error("evaluation at t=0 of a non-integral scalar");
  return coeff(0);
}

LaurentScalar LaurentScalar::truncated(long max_exponent) const {
  if (is_zero() || degree() <= max_exponent) return *this;
  if (max_exponent < val_) return LaurentScalar();
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + (max_exponent - val_ + 1));
  return from_coeffs(val_, std::move(c));
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  long lo = std::min(val_, o.val_);
  long hi = std::max(degree(), o.degree());
  std::vector<Rational> sum(static_cast<size_t>(hi - lo + 1), Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) sum[static_cast<size_t>(val_ - lo) + k] += coeffs_[k];
  for (size_t k = 0; k < o.coeffs_.size(); ++k)
    sum[static_cast<size_t>(o.val_ - lo) + k] += o.coeffs_[k];
  val_ = lo;
  coeffs_ = std::move(sum);
  normalize();
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) { return *this += -o; }

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.is_zero() || b.is_zero()) return LaurentScalar();
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentScalar::from_coeffs(a.val_ + b.val_, std::move(prod));
}

bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.val_ == b.val_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    long e = val_ + static_cast<long>(k);
    std::string cs = rational_string(c > 0 ? c : Rational(-c));
    if (os.tellp() > 0)
      os << (c > 0 ? " + " : " - ");
    else if (c < 0)
      os << "-";
    if (e == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentScalar invert(const LaurentScalar& a, long truncation_order) {
  if (a.is_zero()) throw std::domain_error("division by zero");
  long v = a.valuation();
  Rational lead = a.coeff(v);
  if (a.is_monomial()) return LaurentScalar::monomial(1 / lead, -v);
  // Solve b * a = 1 coefficient by coefficient; b has valuation -v.
  long terms = truncation_order - (-v) + 1;
  if (terms < 1) terms = 1;
  std::vector<Rational> b(static_cast<size_t>(terms), Rational(0));
  b[0] = 1 / lead;
  for (long k = 1; k < terms; ++k) {
    // Coefficient of t^{v + k} in b*a must vanish: sum_{m=0..k} b_m a_{v+k-m}.
    Rational acc(0);
    for (long m = 0; m < k; ++m) acc += b[static_cast<size_t>(m)] * a.coeff(v + k - m);
    b[static_cast<size_t>(k)] = -acc / lead;
  }
  return LaurentScalar::from_coeffs(-v, std::move(b));
}

LaurentScalar invert(const LaurentScalar& a) { return invert(a, default_truncation()); }

long default_truncation() {
  static long cached = [] {
    const char* env = std::getenv("LOOPCELL_TRUNCATION");
    if (env != nullptr) {
      long v = std::strtol(env, nullptr, 10);
      if (v > 0) return v;
    }
    return 24L;
  }();
  return cached;
}

}  // namespace loopcell
