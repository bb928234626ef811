#include "loopcell/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "loopcell/constructions.hpp"
#include "loopcell/matrix_io.hpp"
#include "loopcell/sampling.hpp"

namespace loopcell {

namespace {

// A claim body returns an empty string on pass and a witness on failure.
using Body = std::function<std::string(Sampler&, int samples)>;

struct ClaimSpec {
  std::string id;
  int n;
  Body body;
};

std::set<int> grassmannian_parabolic(int n) {
  std::set<int> J;
  for (int j = 1; j < n; ++j) J.insert(j);
  return J;
}

AffineRoot root_span(int i, int n, long level = 0) {
  // alpha_i + ... + alpha_{n-1} = e_i - e_n, with an optional delta multiple.
  return AffineRoot{level, i, n};
}

std::string root_mismatch(const std::string& what, const AffineRoot& got,
                          const AffineRoot& want) {
  return what + ": got " + got.str() + ", want " + want.str();
}

// Applies w to r along both implementations (word rules and window formula)
// and reports any disagreement through the witness.
AffineRoot act_both(const CoxeterWord& w, const AffineRoot& r, std::string& witness) {
  AffineRoot via_word = act_on_root(w, r);
  AffineRoot via_perm = act_on_root(word_to_perm(w), r);
  if (!(via_word == via_perm) && witness.empty())
    witness = "word/window action mismatch on " + r.str() + ": " + via_word.str() + " vs " +
              via_perm.str();
  return via_word;
}

// ---------------------------------------------------------------- facts ----

std::string check_fact(int fact, int n) {
  CoxeterWord tau = build_tau(n);
  std::string witness;
  auto expect = [&](const AffineRoot& got, const AffineRoot& want, const std::string& what) {
    if (!(got == want) && witness.empty()) witness = root_mismatch(what, got, want);
  };
  switch (fact) {
    case 1:
      expect(act_both(tau, delta_root(), witness), delta_root(), "tau(delta)");
      break;
    case 2:
      expect(act_both(tau, theta_root(n), witness), AffineRoot{2, n - 1, n}, "tau(theta)");
      break;
    case 3:
      for (int i = 2; i <= n - 1; ++i)
        for (long r = 0; r <= 2; ++r)
          expect(act_both(tau, root_span(i, n, r), witness), root_span(i - 1, n, r + 1),
                 "tau(r delta + e_" + std::to_string(i) + " - e_n)");
      break;
    case 4:
      for (int j = 1; j <= n - 2; ++j) {
        CoxeterWord w{n, {}};
        for (int k = n - 1; k >= j + 1; --k) w.letters.push_back(k);
        expect(act_both(w, simple_root(j, n), witness), root_span(j, n),
               "s_{n-1}..s_{j+1}(alpha_j), j=" + std::to_string(j));
      }
      break;
    case 5: {
      CoxeterWord w{n, {}};
      for (int k = n - 1; k >= 1; --k) w.letters.push_back(k);
      expect(act_both(w, simple_root(0, n), witness), AffineRoot{1, n - 1, n},
             "s_{n-1}..s_1(alpha_0)");
      break;
    }
    case 6:
      expect(act_both(tau, simple_root(n - 1, n), witness), AffineRoot{1, n - 2, n},
             "tau(alpha_{n-1})");
      break;
    case 7:
      expect(act_both(tau, simple_root(1, n), witness), AffineRoot{1, n - 1, 1}, "tau(alpha_1)");
      break;
    case 8:
      for (int i = 2; i <= n - 2; ++i)
        expect(act_both(tau, simple_root(i, n), witness), simple_root(i - 1, n),
               "tau(alpha_" + std::to_string(i) + ")");
      break;
    case 9:
      expect(act_both(tau, AffineRoot{1, n - 1, 1}, witness), simple_root(n - 2, n),
             "tau(alpha_0 + alpha_{n-1})");
      break;
  }
  return witness;
}

std::string check_cyclic(int n) {
  // (alpha_{n-1}+alpha_0, alpha_{n-2}, ..., alpha_1) is a tau-cycle of order
  // n-1, and kappa fixes each member.
  std::vector<AffineRoot> cycle;
  cycle.push_back(AffineRoot{1, n - 1, 1});
  for (int i = n - 2; i >= 1; --i) cycle.push_back(simple_root(i, n));
  CoxeterWord tau = build_tau(n);
  CoxeterWord kappa = build_kappa(n);
  std::string witness;
  for (size_t k = 0; k < cycle.size(); ++k) {
    const AffineRoot& cur = cycle[k];
    const AffineRoot& nxt = cycle[(k + 1) % cycle.size()];
    AffineRoot got = act_both(tau, cur, witness);
    if (!(got == nxt) && witness.empty())
      witness = root_mismatch("tau on cycle member " + cur.str(), got, nxt);
    AffineRoot fixed = act_both(kappa, cur, witness);
    if (!(fixed == cur) && witness.empty())
      witness = root_mismatch("kappa should fix " + cur.str(), fixed, cur);
  }
  return witness;
}

// ---------------------------------------------------------------- kappa ----

std::string claim_kappa_reduced(int n) {
  CoxeterWord kw = build_kappa(n);
  long len = perm_length(word_to_perm(kw));
  long expected = static_cast<long>(n) * (n - 1);
  if (len != expected || static_cast<long>(kw.letters.size()) != expected)
    return "l(kappa) = " + std::to_string(len) + ", want " + std::to_string(expected);
  return "";
}

std::string claim_kappa_roots(int n) {
  CoxeterWord kw = build_kappa(n);
  std::string witness;
  for (int i = 1; i <= n - 2; ++i) {
    AffineRoot got = act_both(kw, simple_root(i, n), witness);
    if (!(got == simple_root(i, n)) && witness.empty())
      return root_mismatch("kappa(alpha_" + std::to_string(i) + ")", got, simple_root(i, n));
  }
  AffineRoot got = act_both(kw, simple_root(n - 1, n), witness);
  AffineRoot want{static_cast<long>(n), n - 1, n};
  if (!(got == want) && witness.empty())
    return root_mismatch("kappa(alpha_{n-1})", got, want);
  return witness;
}

std::string claim_kappa_minimal(int n) {
  AffinePermutation kappa = word_to_perm(build_kappa(n));
  if (coset_min_rep(kappa, grassmannian_parabolic(n), CosetSide::Right) != kappa)
    return "kappa is not right-minimal for {1..n-1}";
  std::set<int> P;
  for (int j = 1; j <= n - 2; ++j) P.insert(j);
  if (coset_min_rep(kappa, P, CosetSide::Left) != kappa)
    return "kappa is not left-minimal for {1..n-2}";
  return "";
}

std::string claim_kappa_lift(int n) {
  TorusDiscrepancy td = torus_discrepancy(word_lift(build_kappa(n)), kappa_diag(n));
  if (!td.matches)
    return "lift of kappa is not kappa_diag up to a sign torus:\n" + td.discrepancy.str();
  return "";
}

std::string claim_kappa0(int n) {
  CoxeterWord k0 = build_kappa0(n);
  AffinePermutation p = word_to_perm(k0);
  long lw = static_cast<long>(n - 1) * (n - 2) / 2;
  long expected = lw + static_cast<long>(n) * (n - 1);
  if (perm_length(p) != expected || static_cast<long>(k0.letters.size()) != expected)
    return "l(kappa0) = " + std::to_string(perm_length(p)) + ", want " + std::to_string(expected);
  return "";
}

std::string claim_kappa0_maximal(int n) {
  AffinePermutation p = word_to_perm(build_kappa0(n));
  for (int i = 1; i <= n - 1; ++i)
    if (!p.left_descent(i)) return "s_" + std::to_string(i) + " kappa0 > kappa0";
  return "";
}

std::string claim_stable(int n) {
  AffinePermutation kappa = word_to_perm(build_kappa(n));
  std::set<int> J = grassmannian_parabolic(n);
  BruhatOracle below_kappa(kappa);
  for (int i = 1; i <= n - 1; ++i) {
    AffinePermutation rep = coset_min_rep(kappa.left_multiplied(i), J, CosetSide::Right);
    if (!below_kappa.leq(rep))
      return "min rep of s_" + std::to_string(i) + " kappa is not below kappa: " + rep.str();
  }
  return "";
}

std::string claim_stable_commute(int n) {
  AffinePermutation kappa = word_to_perm(build_kappa(n));
  for (int i = 1; i <= n - 2; ++i)
    if (kappa.left_multiplied(i) != kappa.right_multiplied(i))
      return "s_i kappa != kappa s_i at i = " + std::to_string(i);
  return "";
}

// -------------------------------------------------------------- crucial ----

std::string claim_crucial_solver(Sampler& s, int n, int samples) {
  for (int k = 0; k < samples; ++k) {
    NilpotentUpper Y = s.nilpotent_upper(n, true);
    CrucialSolution sol;
    try {
      sol = crucial_solve(Y);  // self-certifying: memberships and g kappa = psi(Y) h
    } catch (const std::exception& e) {
      return std::string(e.what()) + "\nY =\n" + Y.to_matrix().str();
    }
    std::vector<Rational> superdiag;
    for (int i = 0; i + 1 < n; ++i)
      superdiag.push_back(Y.a[static_cast<size_t>(i)][static_cast<size_t>(i + 1)]);
    if (sol.detA != an_det_formula(superdiag, n))
      return "det(A_n) mismatch: " + rational_string(sol.detA) + " vs formula " +
             rational_string(an_det_formula(superdiag, n)) + "\nY =\n" + Y.to_matrix().str();
  }
  return "";
}

std::string claim_crucial_base2(Sampler& s, int samples) {
  for (int k = 0; k < samples; ++k) {
    NilpotentUpper Y = NilpotentUpper::zero(2);
    Rational a12 = s.nonzero_rational();
    Y.a[0][1] = a12;
    CrucialSolution sol = crucial_solve(Y);
    if (sol.A.size() != 1 || sol.A[0][0] != -a12) return "A_2 != (-a_12)";
    if (sol.X.size() != 1 || sol.X[0] != 1 / a12) return "g_22^(1) != 1/a_12";
    // h as displayed: diag (a_12, t^-1 g_22), subdiagonal -t, corner
    // t^-1 - t^-2 a_12 g_22 (which collapses to 0 for the solved g_22).
    LaurentScalar g22 = sol.g.at(1, 1);
    LaurentScalar t1 = LaurentScalar::t(-1), t2 = LaurentScalar::t(-2);
    if (sol.h.at(0, 0) != LaurentScalar(a12)) return "h_11 != a_12";
    if (sol.h.at(0, 1) != t1 - t2 * LaurentScalar(a12) * g22) return "h_12 mismatch";
    if (sol.h.at(1, 0) != LaurentScalar::monomial(-1, 1)) return "h_21 != -t";
    if (sol.h.at(1, 1) != t1 * g22) return "h_22 != t^-1 g_22";
  }
  return "";
}

// Printed zero/nonzero layout of A_4 and A_5 (b_ij = -a_ij, unit entries 1).
// Encoded as strings: '.' zero, '1' one, otherwise a pair (i,j) packed as
// two digits for b_ij.
const char* kA4Pattern[6][6] = {
    {"12", ".", ".", ".", ".", "."},  {".", "12", ".", "13", ".", "."},
    {".", ".", "12", ".", "13", "14"}, {"1", ".", ".", "23", ".", "."},
    {".", "1", ".", ".", "23", "24"},  {".", ".", ".", "1", ".", "34"},
};

const char* kA5Pattern[10][10] = {
    {"12", ".", ".", ".", ".", ".", ".", ".", ".", "."},
    {".", "12", ".", ".", "13", ".", ".", ".", ".", "."},
    {".", ".", "12", ".", ".", "13", ".", "14", ".", "."},
    {".", ".", ".", "12", ".", ".", "13", ".", "14", "15"},
    {"1", ".", ".", ".", "23", ".", ".", ".", ".", "."},
    {".", "1", ".", ".", ".", "23", ".", "24", ".", "."},
    {".", ".", "1", ".", ".", ".", "23", ".", "24", "25"},
    {".", ".", ".", ".", "1", ".", ".", "34", ".", "."},
    {".", ".", ".", ".", ".", "1", ".", ".", "34", "35"},
    {".", ".", ".", ".", ".", ".", ".", "1", ".", "45"},
};

template <size_t M>
std::string check_pattern(const NilpotentUpper& Y, const std::vector<std::vector<Rational>>& A,
                          const char* (&pattern)[M][M]) {
  if (A.size() != M) return "system size mismatch";
  for (size_t r = 0; r < M; ++r)
    for (size_t c = 0; c < M; ++c) {
      const std::string cell = pattern[r][c];
      Rational want(0);
      if (cell == "1")
        want = 1;
      else if (cell != ".")
        want = -Y.a[static_cast<size_t>(cell[0] - '1')][static_cast<size_t>(cell[1] - '1')];
      if (A[r][c] != want)
        return "A entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
               ") = " + rational_string(A[r][c]) + ", want " + rational_string(want);
    }
  return "";
}

std::string claim_crucial_patterns(Sampler& s) {
  // Shared entries a_ij so the A_5 deletion can be compared against A_4.
  NilpotentUpper Y5 = s.nilpotent_upper(5, true);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (Y5.a[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0)
        Y5.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = s.nonzero_rational();
  NilpotentUpper Y4 = NilpotentUpper::zero(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) Y4.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Y5.a[static_cast<size_t>(i)][static_cast<size_t>(j)];

  CrucialSolution s4 = crucial_solve(Y4);
  CrucialSolution s5 = crucial_solve(Y5);
  std::string w = check_pattern(Y4, s4.A, kA4Pattern);
  if (!w.empty()) return "A4: " + w;
  w = check_pattern(Y5, s5.A, kA5Pattern);
  if (!w.empty()) return "A5: " + w;

  // Deleting rows/columns 1,5,8,10 of A_5 must reproduce A_4.
  const std::set<size_t> drop = {0, 4, 7, 9};
  std::vector<std::vector<Rational>> reduced;
  for (size_t r = 0; r < 10; ++r) {
    if (drop.count(r)) continue;
    std::vector<Rational> row;
    for (size_t c = 0; c < 10; ++c)
      if (!drop.count(c)) row.push_back(s5.A[r][c]);
    reduced.push_back(row);
  }
  if (reduced != s4.A) return "deleting rows/cols {1,5,8,10} of A5 does not give A4";
  return "";
}

std::string claim_an_det(Sampler& s, int n, int samples) {
  for (int k = 0; k < samples; ++k) {
    // Unrestricted entries: the determinant identity holds (both sides zero)
    // even when a superdiagonal entry vanishes.
    NilpotentUpper Y = s.nilpotent_upper(n, k % 4 != 0);
    CrucialSolution sol = crucial_system(Y);
    std::vector<Rational> superdiag;
    for (int i = 0; i + 1 < n; ++i)
      superdiag.push_back(Y.a[static_cast<size_t>(i)][static_cast<size_t>(i + 1)]);
    if (sol.detA != an_det_formula(superdiag, n))
      return "formula mismatch for\n" + Y.to_matrix().str();
  }
  return "";
}

// -------------------------------------------------------------- lusztig ----

std::string claim_psi_injective(Sampler& s, int n, int samples) {
  for (int k = 0; k < samples; ++k) {
    LaurentMatrix N1 = s.nilpotent_matrix(n, false);
    LaurentMatrix N2 = s.nilpotent_matrix(n, false);
    bool same = same_coset(lusztig_point(N1), lusztig_point(N2), MatrixClass::G0);
    if (same != (N1 == N2))
      return "psi coset equality disagrees with N1 == N2 for\n" + N1.str() + "and\n" + N2.str();
    if (!same_coset(lusztig_point(N1), lusztig_point(N1), MatrixClass::G0))
      return "psi(N) not in its own coset";
  }
  return "";
}

std::string claim_psi_equivariant(Sampler& s, int n, int samples) {
  for (int k = 0; k < samples; ++k) {
    LaurentMatrix N = s.nilpotent_matrix(n, false);
    LaurentMatrix g = s.sl_constant(n);
    LaurentMatrix conj = g * N * inverse(g);
    if (lusztig_point(conj) != g * lusztig_point(N) * inverse(g))
      return "psi(g N g^-1) != g psi(N) g^-1";
    if (!same_coset(lusztig_point(conj), g * lusztig_point(N), MatrixClass::G0))
      return "psi(g N g^-1) and g psi(N) in different G0 cosets";
  }
  return "";
}

std::string claim_lusztig_membership(Sampler& s, int n, int samples) {
  for (int k = 0; k < samples; ++k) {
    LaurentMatrix N = s.nilpotent_matrix(n, k % 2 == 0);
    if (!membership_kappa_g0(N)) return "cell of psi(N) not below kappa for\n" + N.str();
    LaurentMatrix g = s.sl_constant(n);
    if (!membership_kappa_g0(g * N * inverse(g)))
      return "conjugated nilpotent escaped X(kappa) for\n" + N.str();
  }
  if (!membership_kappa_g0(LaurentMatrix(n))) return "psi(0) escaped X(kappa)";
  return "";
}

// Cell equality on the two generic slices: regular lower-triangular
// nilpotents hit the top cell min-rep(kappa) exactly, while the
// upper-triangular slice hits the left-minimal representative of kappa
// exactly (it sits deeper in the Iwahori stratification, the superdiagonal
// being aligned with B).
std::string claim_generic_cells(Sampler& s, int n, int samples) {
  AffinePermutation right_min = coset_min_rep(word_to_perm(build_kappa(n)),
                                              grassmannian_parabolic(n), CosetSide::Right);
  AffinePermutation both_min =
      coset_min_rep(right_min, grassmannian_parabolic(n), CosetSide::Left);
  for (int k = 0; k < samples; ++k) {
    NilpotentUpper Y = s.nilpotent_upper(n, true);
    AffinePermutation upper_cell = grassmannian_cell(lusztig_point(Y.to_matrix()));
    if (upper_cell != both_min)
      return "upper-triangular cell " + upper_cell.str() + " != " + both_min.str() + " for\n" +
             Y.to_matrix().str();
    LaurentMatrix L(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        L.at(j, i) = LaurentScalar(Y.a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    AffinePermutation lower_cell = grassmannian_cell(lusztig_point(L));
    if (lower_cell != right_min)
      return "lower-triangular cell " + lower_cell.str() + " != " + right_min.str() + " for\n" +
             L.str();
  }
  return "";
}

// ------------------------------------------------------ springer / ctgt ----

CotangentPoint random_point(Sampler& s, int n, bool generic) {
  return make_cotangent_point(s.sl_constant(n), s.nilpotent_matrix(n, generic));
}

std::string claim_springer(Sampler& s, int n, int samples) {
  for (int k = 0; k < samples; ++k) {
    CotangentPoint x = random_point(s, n, k % 2 == 0);
    if (!springer_check(x, s.borel_constant(n)))
      return "springer identity failed at g =\n" + x.g.str() + "Y =\n" + x.Y.str();
  }
  return "";
}

std::string claim_phi_well_defined(Sampler& s, int n, int samples) {
  for (int k = 0; k < samples; ++k) {
    CotangentPoint x = random_point(s, n, false);
    LaurentMatrix b = s.borel_constant(n);
    CotangentPoint moved = make_cotangent_point(x.g * b, inverse(b) * x.Y * b);
    if (!same_coset(phi_point(x), phi_point(moved), MatrixClass::Iwahori))
      return "phi moved across B for b =\n" + b.str();
  }
  return "";
}

std::string claim_phi_injective(Sampler& s, int n, int samples) {
  for (int k = 0; k < samples; ++k) {
    CotangentPoint x1 = random_point(s, n, false);
    CotangentPoint x2 = random_point(s, n, false);
    bool same = same_coset(phi_point(x1), phi_point(x2), MatrixClass::Iwahori);
    if (same != cotangent_equivalent(x1, x2))
      return "phi coset equality disagrees with the equivalence relation:\ng1 =\n" + x1.g.str() +
             "Y1 =\n" + x1.Y.str() + "g2 =\n" + x2.g.str() + "Y2 =\n" + x2.Y.str();
  }
  return "";
}

std::string claim_phi_equivariant(Sampler& s, int n, int samples) {
  for (int k = 0; k < samples; ++k) {
    CotangentPoint x = random_point(s, n, false);
    LaurentMatrix g0 = s.sl_constant(n);
    CotangentPoint translated = make_cotangent_point(g0 * x.g, x.Y);
    if (phi_point(translated) != g0 * phi_point(x)) return "phi(g0 . x) != g0 phi(x)";
  }
  return "";
}

std::string claim_ctgt_membership(Sampler& s, int n, int samples) {
  for (int k = 0; k < samples; ++k) {
    CotangentPoint x = random_point(s, n, false);  // includes non-generic Y
    if (!membership_kappa_iwahori(x))
      return "phi(x) escaped X(kappa0) at g =\n" + x.g.str() + "Y =\n" + x.Y.str();
  }
  CotangentPoint base = make_cotangent_point(LaurentMatrix::identity(n), LaurentMatrix(n));
  if (!membership_kappa_iwahori(base)) return "phi(Id, 0) escaped X(kappa0)";
  return "";
}

// ------------------------------------------------------------- section7 ----

std::string run_section7_sample(long a, std::optional<long> b, const LaurentScalar& q,
                                const LaurentScalar& r, int expect_case, long expect_tlen) {
  Section7Result res;
  try {
    res = section7_case(a, b, q, r);  // self-certifying on the identity and the cell
  } catch (const std::exception& e) {
    return std::string("section7(a=") + std::to_string(a) + ") failed: " + e.what();
  }
  if (res.case_id != expect_case)
    return "expected case " + std::to_string(expect_case) + ", got " + std::to_string(res.case_id);
  if (res.translation_len != expect_tlen)
    return "l(lambda_q) = " + std::to_string(res.translation_len) + ", want " +
           std::to_string(expect_tlen);
  if (res.length <= 6) return "l(w) = " + std::to_string(res.length) + " is not > 6";
  return "";
}

std::string claim_section7_case(int case_id) {
  const LaurentScalar one(1);
  LaurentScalar onept = one + LaurentScalar::t(1);  // 1 + t, a non-constant unit
  switch (case_id) {
    case 1: {
      std::string w;
      // r = 0 at a = 1, 2 (the stated samples), a unit series q, and b <= a.
      w = run_section7_sample(1, std::nullopt, one, LaurentScalar(), 1, 6);
      if (w.empty()) w = run_section7_sample(2, std::nullopt, one, LaurentScalar(), 1, 12);
      if (w.empty()) w = run_section7_sample(1, std::nullopt, onept, LaurentScalar(), 1, 6);
      if (w.empty()) w = run_section7_sample(2, 1, one, one, 1, 12);
      if (w.empty()) w = run_section7_sample(3, 2, onept, LaurentScalar(2), 1, 18);
      return w;
    }
    case 2: {
      std::string w = run_section7_sample(2, 3, one, one, 2, 14);
      if (w.empty()) w = run_section7_sample(3, 4, one, LaurentScalar(-2), 2, 20);
      if (w.empty()) w = run_section7_sample(3, 5, onept, one, 2, 22);
      return w;
    }
    case 3: {
      std::string w = run_section7_sample(1, 2, one, LaurentScalar(-1), 3, 6);
      if (w.empty()) {
        LaurentScalar q = onept;
        w = run_section7_sample(2, 4, q, -(q * q), 3, 12);
      }
      if (w.empty()) {
        LaurentScalar q(2);
        w = run_section7_sample(3, 6, q, LaurentScalar(-4), 3, 18);
      }
      return w;
    }
    case 4: {
      std::string w = run_section7_sample(1, 3, one, one, 4, 12);
      if (w.empty()) w = run_section7_sample(1, 2, one, one, 4, 8);  // b = 2a, q^2 + r != 0
      if (w.empty()) w = run_section7_sample(2, 5, onept, LaurentScalar(3), 4, 20);
      return w;
    }
  }
  return "unknown case";
}

std::string claim_p1_integral() {
  // With p_1 integral, p(Z) for Z = E_12 lies in the Iwahori subgroup, so
  // psi_p cannot separate (Id, Z) from (Id, 0).
  LaurentMatrix Z(3);
  Z.at(0, 1) = LaurentScalar(1);
  CotangentPoint xz = make_cotangent_point(LaurentMatrix::identity(3), Z);
  CotangentPoint x0 = make_cotangent_point(LaurentMatrix::identity(3), LaurentMatrix(3));
  std::vector<PolynomialMapSpec> specs;
  specs.push_back(PolynomialMapSpec{{LaurentScalar(1)}});
  specs.push_back(PolynomialMapSpec{{LaurentScalar(1) + LaurentScalar::t(1)}});
  specs.push_back(PolynomialMapSpec{{LaurentScalar(2), LaurentScalar::t(-1)}});
  for (const auto& p : specs)
    if (!same_coset(psi_p_point(p, xz), psi_p_point(p, x0), MatrixClass::Iwahori))
      return "psi_p separated (Id, E12) from (Id, 0) despite integral p_1";
  // phi itself (p_i = t^-i) must separate them.
  PolynomialMapSpec phi_spec{{LaurentScalar::t(-1), LaurentScalar::t(-2)}};
  if (same_coset(psi_p_point(phi_spec, xz), psi_p_point(phi_spec, x0), MatrixClass::Iwahori))
    return "phi failed to separate (Id, E12) from (Id, 0)";
  return "";
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& c : claims)
    if (!c.pass) return false;
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["tool"] = "loopcell";
  j["claims"] = nlohmann::json::array();
  for (const auto& c : claims) {
    nlohmann::json cj;
    cj["claim_id"] = c.claim_id;
    cj["n"] = c.n;
    cj["seed"] = c.seed;
    cj["samples"] = c.samples;
    cj["status"] = c.pass ? "pass" : "fail";
    if (!c.witness.empty()) cj["witness"] = c.witness;
    cj["elapsed_ms"] = c.elapsed_ms;
    j["claims"].push_back(cj);
  }
  j["all_pass"] = all_pass();
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  for (const auto& cj : j.at("claims")) {
    ClaimResult c;
    c.claim_id = cj.at("claim_id").get<std::string>();
    c.n = cj.at("n").get<int>();
    c.seed = cj.at("seed").get<uint64_t>();
    c.samples = cj.at("samples").get<int>();
    c.pass = cj.at("status").get<std::string>() == "pass";
    if (cj.contains("witness")) c.witness = cj.at("witness").get<std::string>();
    c.elapsed_ms = cj.at("elapsed_ms").get<double>();
    r.claims.push_back(c);
  }
  return r;
}

std::string VerificationReport::summary_table() const {
  std::ostringstream os;
  size_t width = 24;
  for (const auto& c : claims) width = std::max(width, c.claim_id.size() + 2);
  for (const auto& c : claims) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.claim_id;
    os << std::string(width - c.claim_id.size(), ' ');
    os << "n=" << c.n << "  " << c.elapsed_ms << " ms\n";
    if (!c.pass && !c.witness.empty()) os << "       witness: " << c.witness << "\n";
  }
  os << (all_pass() ? "all claims passed" : "SOME CLAIMS FAILED") << " (" << claims.size()
     << " claims)\n";
  return os.str();
}

const std::vector<std::string> kSelectors = {"facts",   "kappa",    "kappa0", "stable",
                                             "crucial", "an-det",   "lusztig", "springer",
                                             "ctgt",    "section7", "all"};

bool valid_selector(const std::string& s) {
  return std::find(kSelectors.begin(), kSelectors.end(), s) != kSelectors.end();
}

VerificationReport run_claims(const VerifyOptions& opt) {
  std::vector<ClaimSpec> specs;
  auto want = [&](const std::string& sel) {
    for (const auto& s : opt.selectors)
      if (s == "all" || s == sel) return true;
    return false;
  };
  auto each_n = [&](int lo, int hi, const std::function<void(int)>& f) {
    for (int n = std::max(lo, opt.n_min); n <= std::min(hi, opt.n_max); ++n) f(n);
  };
  auto fixed = [](std::function<std::string(int)> f, int n) {
    return [f, n](Sampler&, int) { return f(n); };
  };

  if (want("facts")) {
    each_n(3, 6, [&](int n) {
      for (int fact = 1; fact <= 9; ++fact)
        specs.push_back({"facts/0" + std::to_string(fact) + "/n" + std::to_string(n), n,
                         [fact, n](Sampler&, int) { return check_fact(fact, n); }});
      specs.push_back({"facts/cyclic/n" + std::to_string(n), n,
                       [n](Sampler&, int) { return check_cyclic(n); }});
    });
  }
  if (want("kappa")) {
    each_n(2, 6, [&](int n) {
      specs.push_back({"kappa/reduced-length/n" + std::to_string(n), n, fixed(claim_kappa_reduced, n)});
      specs.push_back({"kappa/root-action/n" + std::to_string(n), n, fixed(claim_kappa_roots, n)});
      specs.push_back({"kappa/min-rep/n" + std::to_string(n), n, fixed(claim_kappa_minimal, n)});
    });
    each_n(2, 5, [&](int n) {
      specs.push_back({"kappa/lift-diagonal/n" + std::to_string(n), n, fixed(claim_kappa_lift, n)});
    });
  }
  if (want("kappa0")) {
    each_n(2, 6, [&](int n) {
      specs.push_back({"kappa0/reduced-length/n" + std::to_string(n), n, fixed(claim_kappa0, n)});
      specs.push_back({"kappa0/maximal-rep/n" + std::to_string(n), n, fixed(claim_kappa0_maximal, n)});
    });
  }
  if (want("stable")) {
    each_n(2, 6, [&](int n) {
      specs.push_back({"stable/min-rep-below/n" + std::to_string(n), n, fixed(claim_stable, n)});
      specs.push_back({"stable/commute/n" + std::to_string(n), n, fixed(claim_stable_commute, n)});
    });
  }
  if (want("crucial")) {
    each_n(2, 5, [&](int n) {
      specs.push_back({"crucial/solver/n" + std::to_string(n), n,
                       [n](Sampler& s, int samples) { return claim_crucial_solver(s, n, samples); }});
    });
    if (opt.n_min <= 2)
      specs.push_back({"crucial/base-n2", 2,
                       [](Sampler& s, int samples) { return claim_crucial_base2(s, samples); }});
    if (opt.n_max >= 5)
      specs.push_back({"crucial/printed-patterns", 5,
                       [](Sampler& s, int) { return claim_crucial_patterns(s); }});
  }
  if (want("an-det")) {
    each_n(2, 5, [&](int n) {
      specs.push_back({"an-det/n" + std::to_string(n), n,
                       [n](Sampler& s, int samples) { return claim_an_det(s, n, samples); }});
    });
  }
  if (want("lusztig")) {
    each_n(2, 4, [&](int n) {
      specs.push_back({"lusztig/injective/n" + std::to_string(n), n,
                       [n](Sampler& s, int samples) { return claim_psi_injective(s, n, samples); }});
      specs.push_back({"lusztig/equivariant/n" + std::to_string(n), n,
                       [n](Sampler& s, int samples) { return claim_psi_equivariant(s, n, samples); }});
      specs.push_back({"lusztig/membership/n" + std::to_string(n), n,
                       [n](Sampler& s, int samples) { return claim_lusztig_membership(s, n, samples); }});
      specs.push_back({"lusztig/generic-cells/n" + std::to_string(n), n,
                       [n](Sampler& s, int samples) { return claim_generic_cells(s, n, samples); }});
    });
  }
  if (want("springer")) {
    each_n(2, 4, [&](int n) {
      specs.push_back({"springer/identity/n" + std::to_string(n), n,
                       [n](Sampler& s, int samples) { return claim_springer(s, n, samples); }});
    });
  }
  if (want("ctgt")) {
    each_n(2, 4, [&](int n) {
      specs.push_back({"ctgt/phi-well-defined/n" + std::to_string(n), n,
                       [n](Sampler& s, int samples) { return claim_phi_well_defined(s, n, samples); }});
      specs.push_back({"ctgt/phi-injective/n" + std::to_string(n), n,
                       [n](Sampler& s, int samples) { return claim_phi_injective(s, n, samples); }});
      specs.push_back({"ctgt/phi-equivariant/n" + std::to_string(n), n,
                       [n](Sampler& s, int samples) { return claim_phi_equivariant(s, n, samples); }});
      specs.push_back({"ctgt/membership-kappa0/n" + std::to_string(n), n,
                       [n](Sampler& s, int samples) { return claim_ctgt_membership(s, n, samples); }});
    });
  }
  if (want("section7") && opt.n_min <= 3 && 3 <= opt.n_max) {
    for (int c = 1; c <= 4; ++c)
      specs.push_back({"section7/case" + std::to_string(c), 3,
                       [c](Sampler&, int) { return claim_section7_case(c); }});
    specs.push_back({"section7/p1-integral", 3, [](Sampler&, int) { return claim_p1_integral(); }});
  }

  VerificationReport report;
  for (const auto& spec : specs) {
    ClaimResult res;
    res.claim_id = spec.id;
    res.n = spec.n;
    res.seed = opt.seed;
    res.samples = opt.samples;
    Sampler sampler(Sampler::claim_seed(opt.seed, spec.id));
    auto start = std::chrono::steady_clock::now();
    try {
      res.witness = spec.body(sampler, opt.samples);
    } catch (const std::exception& e) {
      res.witness = std::string("exception: ") + e.what();
    }
    res.pass = res.witness.empty();
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.claims.push_back(res);
  }
  std::sort(report.claims.begin(), report.claims.end(),
            [](const ClaimResult& a, const ClaimResult& b) { return a.claim_id < b.claim_id; });
  return report;
}

}  // namespace loopcell
