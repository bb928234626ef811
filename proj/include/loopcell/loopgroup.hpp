#pragma once

#include <string>
#include <vector>

#include "loopcell/affine_weyl.hpp"
#include "loopcell/laurent_matrix.hpp"

namespace loopcell {

// Matrix with exactly one nonzero entry c * t^k per row and column; the image
// of a Weyl group element in N(K[t,t^-1]) modulo nothing (torus part kept).
struct MonomialMatrix {
  int n = 0;
  std::vector<int> row_of_col;    // row index of the pivot in each column
  std::vector<Rational> coeff;    // its coefficient
  std::vector<long> exponent;     // its t-exponent

  LaurentMatrix to_matrix() const;
  MonomialMatrix inverse() const;
  AffinePermutation permutation() const;
  std::string str() const;
};

/// Canonical lift of s_i to N(K[t,t^-1]); i = 0 carries t^-1 / -t corners.
LaurentMatrix generator_lift(int i, int n);

/// Ordered product of generator lifts.
LaurentMatrix word_lift(const CoxeterWord& w);

/// Lift of lambda_q: diag(t^{-c_1}, ..., t^{-c_n}).
LaurentMatrix translation_lift(const CorootVector& q);

enum class PivotStrategy { LeftToRight, RightToLeft };

struct IwahoriFactorization {
  LaurentMatrix L;        // in the Iwahori subgroup
  AffinePermutation w;    // the Bruhat cell: M in B w B
  MonomialMatrix wdot;    // monomial middle factor
  LaurentMatrix U;        // in the Iwahori subgroup
};

/// Exact Bruhat factorization M = L . wdot . U with L, U Iwahori.  Requires
/// Laurent-polynomial entries and a nonzero monomial determinant.  The cell
/// w is unique; L, wdot, U depend on the pivot strategy.  The result is
/// certified internally (memberships and the product identity are checked).
IwahoriFactorization iwahori_factorize(const LaurentMatrix& m,
                                       PivotStrategy strategy = PivotStrategy::LeftToRight);

/// Minimal representative of the affine-Grassmannian cell B w G0 containing
/// m G0, i.e. coset_min_rep(iwahori_factorize(m).w, {1..n-1}).
AffinePermutation grassmannian_cell(const LaurentMatrix& m);

/// Whether g2^{-1} g1 lies in the given class (Iwahori or G0 cosets agree).
bool same_coset(const LaurentMatrix& g1, const LaurentMatrix& g2, MatrixClass cls);

/// lift(kappa) against diag(t,...,t,t^{-(n-1)}): the constant diagonal
/// discrepancy matrix if there is one (entries +-1, det 1), empty otherwise.
struct TorusDiscrepancy {
  bool matches = false;
  LaurentMatrix discrepancy;
};
TorusDiscrepancy torus_discrepancy(const LaurentMatrix& lift, const LaurentMatrix& reference);

}  // namespace loopcell
