#include "loopcell/constructions.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace loopcell {

namespace {

// Exact dense linear algebra over Q for the crucial-lemma system.
Rational rational_det(std::vector<std::vector<Rational>> A) {
  const size_t m = A.size();
  Rational det(1);
  for (size_t col = 0; col < m; ++col) {
    size_t piv = col;
    while (piv < m && A[piv][col] == 0) ++piv;
    if (piv == m) return Rational(0);
    if (piv != col) {
      std::swap(A[piv], A[col]);
      det = -det;
    }
    det *= A[col][col];
    for (size_t r = col + 1; r < m; ++r) {
      if (A[r][col] == 0) continue;
      Rational f = A[r][col] / A[col][col];
      for (size_t c = col; c < m; ++c) A[r][c] -= f * A[col][c];
    }
  }
  return det;
}

std::vector<Rational> solve_system(std::vector<std::vector<Rational>> A,
                                   std::vector<Rational> b) {
  const size_t m = A.size();
  for (size_t col = 0; col < m; ++col) {
    size_t piv = col;
    while (piv < m && A[piv][col] == 0) ++piv;
    if (piv == m) throw std::logic_error("singular linear system");
    if (piv != col) {
      std::swap(A[piv], A[col]);
      std::swap(b[piv], b[col]);
    }
    for (size_t r = col + 1; r < m; ++r) {
      if (A[r][col] == 0) continue;
      Rational f = A[r][col] / A[col][col];
      for (size_t c = col; c < m; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(m, Rational(0));
  for (size_t r = m; r-- > 0;) {
    Rational acc = b[r];
    for (size_t c = r + 1; c < m; ++c) acc -= A[r][c] * x[c];
    x[r] = acc / A[r][r];
  }
  return x;
}

void require_constant(const LaurentMatrix& m, const char* what) {
  if (!m.is_constant()) throw std::invalid_argument(std::string(what) + " must have constant entries");
}

}  // namespace

NilpotentUpper NilpotentUpper::zero(int n) {
  NilpotentUpper y;
  y.n = n;
  y.a.assign(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
  return y;
}

bool NilpotentUpper::generic() const {
  for (int i = 0; i + 1 < n; ++i)
    if (a[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] == 0) return false;
  return true;
}

LaurentMatrix NilpotentUpper::to_matrix() const {
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      m.at(i, j) = LaurentScalar(a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return m;
}

CotangentPoint make_cotangent_point(const LaurentMatrix& g, const LaurentMatrix& Y) {
  require_constant(g, "g");
  require_constant(Y, "Y");
  if (g.size() != Y.size()) throw std::invalid_argument("dimension mismatch");
  if (!det(g).is_one()) throw std::invalid_argument("g must have determinant 1");
  for (int i = 0; i < Y.size(); ++i)
    for (int j = 0; j <= i; ++j)
      if (!Y.at(i, j).is_zero()) throw std::invalid_argument("Y must be strictly upper triangular");
  return CotangentPoint{g, Y};
}

bool cotangent_equivalent(const CotangentPoint& x1, const CotangentPoint& x2) {
  LaurentMatrix b = inverse(x1.g) * x2.g;
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < i; ++j)
      if (!b.at(i, j).is_zero()) return false;
  return x2.Y == inverse(b) * x1.Y * b;
}

LaurentMatrix lusztig_point(const LaurentMatrix& N) {
  require_constant(N, "N");
  int n = N.size();
  LaurentMatrix out = LaurentMatrix::identity(n);
  LaurentMatrix power = N;
  for (int i = 1; i <= n && !power.is_zero(); ++i) {
    out = out + power.scaled(LaurentScalar::t(-i));
    power = power * N;
  }
  if (!power.is_zero()) throw std::invalid_argument("matrix is not nilpotent");
  return out;
}

LaurentMatrix phi_point(const CotangentPoint& x) { return x.g * lusztig_point(x.Y); }

LaurentMatrix psi_p_point(const PolynomialMapSpec& p, const CotangentPoint& x) {
  int n = x.Y.size();
  LaurentMatrix sum = LaurentMatrix::identity(n);
  LaurentMatrix power = LaurentMatrix::identity(n);
  for (size_t k = 0; k < p.p.size(); ++k) {
    power = power * x.Y;
    if (power.is_zero()) break;
    sum = sum + power.scaled(p.p[k]);
  }
  return x.g * sum;
}

LaurentMatrix kappa_diag(int n) {
  std::vector<LaurentScalar> d(static_cast<size_t>(n), LaurentScalar::t(1));
  d[static_cast<size_t>(n - 1)] = LaurentScalar::t(-(n - 1));
  return LaurentMatrix::diagonal(d);
}

// Assembles the linear system that integrality of the last column of
// h = (Id - t^-1 Y) g kappa imposes on the unknown coefficients g_jn^(k),
// j-1 <= k <= n-1 (coefficients above n-1 are set to zero).  Row (j, i) kills
// the coefficient of t^-(n-i) in h_jn; the first row carries the g_1n = 1
// inhomogeneity as -a_12 g_2n^(1) = -1.
CrucialSolution crucial_system(const NilpotentUpper& Y) {
  const int n = Y.n;
  if (n < 2) throw std::invalid_argument("crucial lemma needs n >= 2");
  CrucialSolution out;
  std::map<std::pair<int, int>, size_t> col_of;
  for (int j = 2; j <= n; ++j)
    for (int k = j - 1; k <= n - 1; ++k) {
      col_of[{j, k}] = out.col_index.size();
      out.col_index.emplace_back(j, k);
    }
  for (int j = 1; j <= n - 1; ++j)
    for (int i = j; i <= n - 1; ++i) out.row_index.emplace_back(j, i);

  const size_t m = out.col_index.size();
  if (out.row_index.size() != m) throw std::logic_error("crucial system is not square");
  out.A.assign(m, std::vector<Rational>(m, Rational(0)));
  std::vector<Rational> B(m, Rational(0));
  auto aval = [&](int i, int j) { return Y.a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; };
  for (size_t r = 0; r < m; ++r) {
    auto [j, i] = out.row_index[r];
    if (j >= 2) out.A[r][col_of.at({j, i - 1})] += 1;
    for (int k = j + 1; k <= std::min(n, i + 1); ++k) out.A[r][col_of.at({k, i})] -= aval(j, k);
    if (j == 1 && i == 1) B[r] = -1;
  }
  out.detA = rational_det(out.A);
  return out;
}

CrucialSolution crucial_solve(const NilpotentUpper& Y) {
  const int n = Y.n;
  if (n < 2) throw std::invalid_argument("crucial lemma needs n >= 2");
  if (!Y.generic()) throw std::invalid_argument("superdiagonal vanishes");

  CrucialSolution out = crucial_system(Y);
  std::vector<Rational> B(out.col_index.size(), Rational(0));
  B[0] = -1;
  out.X = solve_system(out.A, B);

  // g: first row (0,...,0,1), subdiagonal -1, solved series in the last column.
  LaurentMatrix g(n);
  g.at(0, n - 1) = LaurentScalar(1);
  for (int i = 1; i < n; ++i) g.at(i, i - 1) = LaurentScalar(-1);
  for (size_t c = 0; c < out.col_index.size(); ++c) {
    auto [j, k] = out.col_index[c];
    g.at(j - 1, n - 1) += LaurentScalar::monomial(out.X[c], k);
  }
  LaurentMatrix kd = kappa_diag(n);
  LaurentMatrix Ymat = Y.to_matrix();
  LaurentMatrix Yunder = lusztig_point(Ymat);
  LaurentMatrix h =
      (LaurentMatrix::identity(n) - Ymat.scaled(LaurentScalar::t(-1))) * g * kd;
  out.g = g;
  out.h = h;
  if (!membership(g, MatrixClass::G0) || !membership(h, MatrixClass::Iwahori) ||
      g * kd != Yunder * h)
    throw std::logic_error("crucial solver postcondition failed for\n" + Ymat.str());
  return out;
}

Rational an_det_formula(const std::vector<Rational>& superdiag, int n) {
  if (static_cast<int>(superdiag.size()) != n - 1)
    throw std::invalid_argument("superdiagonal must have n-1 entries");
  Rational prod(1);
  for (int i = 1; i <= n - 1; ++i)
    for (int e = 0; e < n - i; ++e) prod *= superdiag[static_cast<size_t>(i - 1)];
  long binom = static_cast<long>(n) * (n - 1) / 2;
  return (binom % 2) ? Rational(-prod) : prod;
}

bool springer_check(const CotangentPoint& x, const LaurentMatrix& b) {
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < i; ++j)
      if (!b.at(i, j).is_zero()) throw std::invalid_argument("probe must be upper triangular");
  LaurentMatrix ginv = inverse(x.g);
  LaurentMatrix N = x.g * x.Y * ginv;
  if (!membership(inverse(lusztig_point(N)) * phi_point(x), MatrixClass::G0)) return false;
  // theta((g,Y)) = (gB, g Y g^-1) must not move along the class of (g, Y).
  CotangentPoint moved{x.g * b, inverse(b) * x.Y * b};
  if (moved.g * moved.Y * inverse(moved.g) != N) return false;
  return cotangent_equivalent(x, moved);
}

bool springer_check(const CotangentPoint& x) {
  int n = x.g.size();
  LaurentMatrix b = LaurentMatrix::identity(n);
  b.at(0, 0) = LaurentScalar(make_rational(2));
  b.at(1, 1) = LaurentScalar(make_rational(1, 2));
  b.at(0, 1) = LaurentScalar(1);
  return springer_check(x, b);
}

bool membership_kappa_g0(const LaurentMatrix& N) {
  int n = N.size();
  std::set<int> J;
  for (int j = 1; j < n; ++j) J.insert(j);
  AffinePermutation cell = grassmannian_cell(lusztig_point(N));
  AffinePermutation kappa_min =
      coset_min_rep(word_to_perm(build_kappa(n)), J, CosetSide::Right);
  return bruhat_leq(cell, kappa_min);
}

bool membership_kappa_iwahori(const CotangentPoint& x) {
  int n = x.g.size();
  AffinePermutation w = iwahori_factorize(phi_point(x)).w;
  return bruhat_leq(w, word_to_perm(build_kappa0(n)));
}

namespace {

LaurentFraction frac(const LaurentScalar& s) { return LaurentFraction(s); }

FractionMatrix frac3(std::initializer_list<LaurentFraction> entries) {
  FractionMatrix m(3);
  int k = 0;
  for (const auto& e : entries) {
    m.at(k / 3, k % 3) = e;
    ++k;
  }
  if (k != 9) throw std::logic_error("expected 9 entries");
  return m;
}

}  // namespace

// Case analysis of the section-7 proposition (n = 3).  The C and D below
// reproduce the paper's reduction matrices with the sign layout fixed so that
// C . g p(Y) . D equals the stated monomial matrix exactly and det C = 1:
// in case 1 the second and third rows of C are negated relative to the
// printed form, in case 2 the first row is -(rt^{2a-b}+q^2, qt^a, t^{2a}) and
// the (2,3) entry is +qt^{b-a}/(rt^{2a-b}+q^2); cases 3 and 4 are as printed.
Section7Result section7_case(long a, std::optional<long> b, const LaurentScalar& q,
                             const LaurentScalar& r) {
  if (a < 1) throw std::invalid_argument("a must be >= 1");
  if (!q.is_integral() || q.at_zero() == 0) throw std::invalid_argument("q must be a unit of A");
  if (!r.is_integral()) throw std::invalid_argument("r must lie in A");
  long bv = 0;
  if (!r.is_zero()) {
    if (r.at_zero() == 0) throw std::invalid_argument("nonzero r must be a unit of A");
    if (!b.has_value() || *b < 1) throw std::invalid_argument("nonzero r needs b >= 1");
    bv = *b;
  }

  Section7Result out;
  if (r.is_zero() || bv <= a)
    out.case_id = 1;
  else if (bv < 2 * a)
    out.case_id = 2;
  else if (bv == 2 * a)
    out.case_id = (q * q + r == LaurentScalar()) ? 3 : 4;
  else
    out.case_id = 4;

  LaurentMatrix Y(3);
  Y.at(0, 1) = LaurentScalar(1);
  Y.at(1, 2) = LaurentScalar(1);
  LaurentMatrix g(3);
  g.at(0, 2) = LaurentScalar(-1);
  g.at(1, 1) = LaurentScalar(-1);
  g.at(2, 0) = LaurentScalar(-1);

  LaurentMatrix pY = LaurentMatrix::identity(3) - (Y.scaled(q * LaurentScalar::t(-a)));
  if (!r.is_zero()) pY = pY - (Y * Y).scaled(r * LaurentScalar::t(-bv));
  out.gpY = g * pY;

  const LaurentScalar one(1);
  const LaurentFraction zero;
  LaurentScalar ta = LaurentScalar::t(a);
  LaurentMatrix R(3);
  AffinePermutation extra = AffinePermutation::identity(3);

  switch (out.case_id) {
    case 1: {
      LaurentScalar e = q * q;
      if (!r.is_zero()) e += r * LaurentScalar::t(2 * a - bv);
      LaurentScalar t2a = LaurentScalar::t(2 * a);
      out.C = frac3({frac(e), frac(q * ta), frac(t2a),
                     zero, LaurentFraction(q, e), LaurentFraction(ta, e),
                     zero, zero, LaurentFraction(one, q)});
      LaurentFraction d23 =
          r.is_zero() ? zero : LaurentFraction(-(r * LaurentScalar::t(a - bv)), q);
      out.D = frac3({frac(one), zero, zero,
                     LaurentFraction(q * ta, e), frac(one), d23,
                     LaurentFraction(t2a, e), zero, frac(one)});
      R.at(0, 0) = LaurentScalar::monomial(-1, 2 * a);
      R.at(1, 2) = LaurentScalar::t(-a);
      R.at(2, 1) = LaurentScalar::t(-a);
      out.q_vec = CorootVector{3, {-2 * a, a, a}};
      extra = word_to_perm(CoxeterWord{3, {2}});
      break;
    }
    case 2: {
      LaurentScalar e = q * q + r * LaurentScalar::t(2 * a - bv);
      LaurentScalar t2a = LaurentScalar::t(2 * a);
      LaurentScalar tba = LaurentScalar::t(bv - a);
      out.C = frac3({frac(-e), frac(-(q * ta)), frac(-t2a),
                     zero, LaurentFraction(-r, e), LaurentFraction(q * tba, e),
                     zero, zero, LaurentFraction(one, r)});
      out.D = frac3({frac(one), zero, zero,
                     LaurentFraction(q * ta, e), frac(one), zero,
                     LaurentFraction(t2a, e), LaurentFraction(-(q * tba), r), frac(one)});
      R.at(0, 0) = LaurentScalar::t(2 * a);
      R.at(1, 1) = LaurentScalar::t(bv - 2 * a);
      R.at(2, 2) = LaurentScalar::t(-bv);
      out.q_vec = CorootVector{3, {-2 * a, 2 * a - bv, bv}};
      break;
    }
    case 3: {
      out.C = frac3({frac(q), frac(ta), zero,
                     zero, frac(q), frac(ta),
                     zero, zero, LaurentFraction(one, q * q)});
      out.D = frac3({frac(one), zero, zero,
                     zero, frac(one), zero,
                     LaurentFraction(-LaurentScalar::t(2 * a), q * q), LaurentFraction(ta, q),
                     frac(one)});
      R.at(0, 1) = LaurentScalar::monomial(-1, a);
      R.at(1, 0) = LaurentScalar::monomial(-1, a);
      R.at(2, 2) = LaurentScalar::monomial(-1, -2 * a);
      out.q_vec = CorootVector{3, {-a, -a, 2 * a}};
      extra = word_to_perm(CoxeterWord{3, {1}});
      break;
    }
    case 4: {
      LaurentScalar f = r + q * q * LaurentScalar::t(bv - 2 * a);
      if (f.is_zero() || f.valuation() != 0)
        throw std::invalid_argument("case 4 needs r + q^2 t^{b-2a} to be a unit of A");
      LaurentScalar tb = LaurentScalar::t(bv);
      LaurentScalar tba = LaurentScalar::t(bv - a);
      out.C = frac3({frac(-f), frac(-(q * tba)), frac(-tb),
                     zero, LaurentFraction(-r, f), LaurentFraction(q * tba, f),
                     zero, zero, LaurentFraction(one, r)});
      out.D = frac3({frac(one), zero, zero,
                     LaurentFraction(q * tba, f), frac(one), zero,
                     LaurentFraction(tb, f), LaurentFraction(-(q * tba), r), frac(one)});
      R.at(0, 0) = tb;
      R.at(1, 1) = one;
      R.at(2, 2) = LaurentScalar::t(-bv);
      out.q_vec = CorootVector{3, {-bv, 0, bv}};
      break;
    }
  }
  out.monomial_result = R;

  AffinePermutation w_expected = translation_perm(out.q_vec) * extra;
  if (!fraction_iwahori(out.C) || !fraction_iwahori(out.D))
    throw std::logic_error("section 7 reduction matrices left the Iwahori subgroup");
  if (!(out.C * FractionMatrix::from(out.gpY) * out.D).equals(R))
    throw std::logic_error("section 7 product identity failed");
  out.w = iwahori_factorize(out.gpY).w;
  if (out.w != w_expected)
    throw std::logic_error("section 7 cell disagrees with the stated Weyl element");
  out.length = perm_length(out.w);
  out.translation_len = translation_length(out.q_vec);
  return out;
}

}  // namespace loopcell
