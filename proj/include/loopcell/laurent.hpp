#pragma once

#include <string>
#include <vector>

#include "loopcell/rational.hpp"

namespace loopcell {

// Element of Q((t)) stored as a Laurent polynomial in canonical form: for a
// nonzero value the first and last stored coefficients are nonzero and val_
// is the exponent of the lowest term.  Zero is the empty coefficient list and
// has no valuation.
class LaurentScalar {
 public:
  LaurentScalar() = default;  // zero
  LaurentScalar(const Rational& c) { assign_constant(c); }
  LaurentScalar(long c) { assign_constant(Rational(c)); }
  LaurentScalar(int c) { assign_constant(Rational(c)); }

  static LaurentScalar monomial(const Rational& c, long exponent);
  static LaurentScalar t(long exponent = 1) { return monomial(1, exponent); }
  static LaurentScalar from_coeffs(long valuation, std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  long valuation() const;  // throws std::domain_error on zero
  long degree() const;     // exponent of the highest term; throws on zero
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(long exponent) const;

  bool is_integral() const { return is_zero() || val_ >= 0; }
  bool is_monomial() const { return coeffs_.size() == 1; }
  bool is_constant() const { return is_zero() || (val_ == 0 && coeffs_.size() == 1); }
  bool is_one() const;

  /// Value at t = 0; requires an integral scalar.
  Rational at_zero() const;

  /// Drops all terms with exponent > max_exponent.
  LaurentScalar truncated(long max_exponent) const;

  LaurentScalar operator-() const;
  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b);
  friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }

  std::string str() const;

 private:
  void assign_constant(const Rational& c);
  void normalize();

  long val_ = 0;
  std::vector<Rational> coeffs_;
};

/// Laurent expansion of 1/a.  Exact for monomials; otherwise the geometric
/// series is truncated at exponent <= truncation_order.  Throws on zero.
LaurentScalar invert(const LaurentScalar& a, long truncation_order);
LaurentScalar invert(const LaurentScalar& a);

/// Working truncation order: LOOPCELL_TRUNCATION if set, else 24.
long default_truncation();

}  // namespace loopcell
