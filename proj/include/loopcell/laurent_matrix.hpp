#pragma once

#include <string>
#include <vector>

#include "loopcell/laurent.hpp"

namespace loopcell {

// Membership classes for loop-group matrices.  All decisions are exact:
//   Integral: every entry has valuation >= 0 (no pole at t = 0)
//   G0:       integral with det = 1 (SL_n of the power-series ring)
//   Iwahori:  in G0 and upper triangular with nonzero diagonal at t = 0
//   GLnA:     integral with det a unit of the power-series ring
enum class MatrixClass { Integral, G0, Iwahori, GLnA };

class LaurentMatrix {
 public:
  LaurentMatrix() : n_(0) {}
  explicit LaurentMatrix(int n);  // zero matrix
  static LaurentMatrix identity(int n);
  static LaurentMatrix diagonal(const std::vector<LaurentScalar>& d);

  int size() const { return n_; }
  LaurentScalar& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const LaurentScalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  bool is_integral() const;
  bool is_constant() const;
  bool is_zero() const;
  bool is_monomial() const;  // exactly one nonzero monomial entry per row/column

  LaurentMatrix operator*(const LaurentMatrix& o) const;
  LaurentMatrix operator+(const LaurentMatrix& o) const;
  LaurentMatrix operator-(const LaurentMatrix& o) const;
  LaurentMatrix scaled(const LaurentScalar& c) const;
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator!=(const LaurentMatrix& a, const LaurentMatrix& b) { return !(a == b); }

  std::string str() const;

 private:
  int n_;
  std::vector<LaurentScalar> e_;
};

/// Exact determinant (expansion with minor memoization; fine for n <= 8).
LaurentScalar det(const LaurentMatrix& m);

/// Exact inverse via the adjugate.  Requires det to be a nonzero monomial
/// (unimodular over the Laurent polynomials), which holds for everything the
/// harness inverts; throws otherwise.
LaurentMatrix inverse(const LaurentMatrix& m);

bool membership(const LaurentMatrix& m, MatrixClass cls);

/// Virtual dimension of the lattice m.E relative to the standard lattice:
/// -order(det m).  Throws on singular input.
long vdim(const LaurentMatrix& m);

LaurentMatrix mat_pow(const LaurentMatrix& m, int k);

}  // namespace loopcell
