#pragma once

#include <string>
#include <vector>

#include "loopcell/laurent_matrix.hpp"

namespace loopcell {

// Quotient of Laurent polynomials over Q.  Used where the paper's matrices
// carry rational-function entries (the section-7 reductions): arithmetic and
// equality are exact, no series truncation is involved.  Equality is decided
// by cross-multiplication, so no gcd reduction is needed.
class LaurentFraction {
 public:
  LaurentFraction() : num_(), den_(1) {}
  LaurentFraction(const LaurentScalar& p) : num_(p), den_(1) {}
  LaurentFraction(const LaurentScalar& num, const LaurentScalar& den);

  const LaurentScalar& num() const { return num_; }
  const LaurentScalar& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Valuation as an element of Q((t)): val(num) - val(den).
  long valuation() const;
  bool is_integral() const { return is_zero() || valuation() >= 0; }
  Rational at_zero() const;  // requires integral

  LaurentFraction operator-() const;
  friend LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b);
  friend LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b);
  friend LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b);
  friend LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b);
  friend bool operator==(const LaurentFraction& a, const LaurentFraction& b);
  friend bool operator!=(const LaurentFraction& a, const LaurentFraction& b) { return !(a == b); }

  std::string str() const;

 private:
  LaurentScalar num_, den_;  // den != 0
};

class FractionMatrix {
 public:
  FractionMatrix() : n_(0) {}
  explicit FractionMatrix(int n);
  static FractionMatrix identity(int n);
  static FractionMatrix from(const LaurentMatrix& m);

  int size() const { return n_; }
  LaurentFraction& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const LaurentFraction& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  FractionMatrix operator*(const FractionMatrix& o) const;
  friend bool operator==(const FractionMatrix& a, const FractionMatrix& b);

  /// Equality against a Laurent matrix, decided exactly.
  bool equals(const LaurentMatrix& m) const;

 private:
  int n_;
  std::vector<LaurentFraction> e_;
};

LaurentFraction det(const FractionMatrix& m);

/// Iwahori membership for fraction matrices (integral entries, det 1, upper
/// triangular with nonzero diagonal at t = 0).
bool fraction_iwahori(const FractionMatrix& m);

}  // namespace loopcell
