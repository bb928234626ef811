#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopcell/laurent_fraction.hpp"
#include "loopcell/loopgroup.hpp"

namespace loopcell {

// Strictly upper triangular matrix Y = sum_{i<j} a_ij E_ij (hence nilpotent).
struct NilpotentUpper {
  int n = 0;
  std::vector<std::vector<Rational>> a;  // a[i][j] for 0 <= i < j < n, rest ignored

  static NilpotentUpper zero(int n);
  Rational entry(int i, int j) const { return a[i][j]; }
  bool generic() const;  // all superdiagonal entries nonzero
  LaurentMatrix to_matrix() const;
};

// Class of (g, Y) in G x^B b_u; the equivalence (g, Y) ~ (gb, b^-1 Y b) is
// not canonicalized, coset tests decide it.
struct CotangentPoint {
  LaurentMatrix g;  // constant, det 1
  LaurentMatrix Y;  // constant, strictly upper triangular
};

CotangentPoint make_cotangent_point(const LaurentMatrix& g, const LaurentMatrix& Y);

/// Whether (g1,Y1) ~ (g2,Y2): b = g1^-1 g2 upper triangular and Y2 = b^-1 Y1 b.
bool cotangent_equivalent(const CotangentPoint& x1, const CotangentPoint& x2);

/// psi(N) = Id + t^-1 N + t^-2 N^2 + ... (finite; N must satisfy N^n = 0).
LaurentMatrix lusztig_point(const LaurentMatrix& N);

/// phi(g, Y) = g . psi(Y).
LaurentMatrix phi_point(const CotangentPoint& x);

// p(Y) = 1 + sum_{i>=1} p_i(t) Y^i; coefficients beyond nilpotency are moot.
struct PolynomialMapSpec {
  std::vector<LaurentScalar> p;  // p[k] is p_{k+1}
};

/// psi_p(g, Y) = g . p(Y).
LaurentMatrix psi_p_point(const PolynomialMapSpec& p, const CotangentPoint& x);

// Output of the crucial-lemma solver: g in G0 and h Iwahori with
// g . kappa_diag = psi(Y) . h, plus the assembled linear system.
struct CrucialSolution {
  LaurentMatrix g;
  LaurentMatrix h;
  std::vector<std::vector<Rational>> A;  // C(n,2) x C(n,2)
  std::vector<Rational> X;               // solution, column-block order
  std::vector<std::pair<int, int>> row_index;  // (j, i): coeff of t^-(n-i) in h_jn
  std::vector<std::pair<int, int>> col_index;  // (j, k): unknown g_jn^(k)
  Rational detA;
};

LaurentMatrix kappa_diag(int n);  // diag(t, ..., t, t^{-(n-1)})

/// Assembles the crucial-lemma system only: A, the index metadata and det(A)
/// (exact, zero when singular).  X, g, h are left empty.
CrucialSolution crucial_system(const NilpotentUpper& Y);

/// Solves the crucial-lemma system for generic Y (superdiagonal nonzero).
CrucialSolution crucial_solve(const NilpotentUpper& Y);

/// (-1)^C(n,2) * prod a_{i,i+1}^{n-i}; superdiag has n-1 entries.
Rational an_det_formula(const std::vector<Rational>& superdiag, int n);

/// Springer-resolution identity: psi(g Y g^-1)^-1 . phi(g,Y) integral with
/// det 1, and theta is constant on the class of (g,Y) probed with b.
bool springer_check(const CotangentPoint& x, const LaurentMatrix& b);
bool springer_check(const CotangentPoint& x);

/// Grassmannian variant: cell(psi(N)) <= min rep of kappa.
bool membership_kappa_g0(const LaurentMatrix& N);

/// Flag variant: iwahori_factorize(phi(x)).w <= kappa_0.
bool membership_kappa_iwahori(const CotangentPoint& x);

// Section-7 case analysis for n = 3, p(Y) = 1 - t^-a q Y - t^-b r Y^2 with
// the paper's fixed Y and g.
struct Section7Result {
  int case_id = 0;
  FractionMatrix C, D;
  LaurentMatrix gpY;
  LaurentMatrix monomial_result;  // C . g p(Y) . D, a monomial matrix
  CorootVector q_vec;
  AffinePermutation w;            // cell of g p(Y)
  long length = 0;                // l(w)
  long translation_len = 0;       // l(lambda_q)
};

Section7Result section7_case(long a, std::optional<long> b, const LaurentScalar& q,
                             const LaurentScalar& r);

}  // namespace loopcell
