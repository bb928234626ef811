#include <gtest/gtest.h>

#include "loopcell/constructions.hpp"
#include "loopcell/sampling.hpp"

using namespace loopcell;

namespace {

LaurentScalar t(long k) { return LaurentScalar::t(k); }

NilpotentUpper regular_ones(int n) {
  NilpotentUpper y = NilpotentUpper::zero(n);
  for (int i = 0; i + 1 < n; ++i) y.a[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = 1;
  return y;
}

TEST(Lusztig, PointExamples) {
  EXPECT_EQ(lusztig_point(LaurentMatrix(3)), LaurentMatrix::identity(3));

  LaurentMatrix e12(2);
  e12.at(0, 1) = LaurentScalar(1);
  LaurentMatrix expect = LaurentMatrix::identity(2);
  expect.at(0, 1) = t(-1);
  EXPECT_EQ(lusztig_point(e12), expect);

  LaurentMatrix notnil = LaurentMatrix::identity(2);
  EXPECT_THROW(lusztig_point(notnil), std::invalid_argument);
}

TEST(Lusztig, Equivariance) {
  Sampler s(41);
  for (int k = 0; k < 20; ++k) {
    int n = static_cast<int>(s.int_in(2, 4));
    LaurentMatrix N = s.nilpotent_matrix(n, false);
    LaurentMatrix g = s.sl_constant(n);
    EXPECT_EQ(lusztig_point(g * N * inverse(g)), g * lusztig_point(N) * inverse(g));
  }
}

TEST(Phi, PointsAndInjectivity) {
  CotangentPoint base = make_cotangent_point(LaurentMatrix::identity(3), LaurentMatrix(3));
  EXPECT_EQ(phi_point(base), LaurentMatrix::identity(3));

  Sampler s(42);
  for (int k = 0; k < 12; ++k) {
    int n = static_cast<int>(s.int_in(2, 4));
    CotangentPoint x = make_cotangent_point(s.sl_constant(n), s.nilpotent_matrix(n, false));
    LaurentMatrix b = s.borel_constant(n);
    CotangentPoint moved = make_cotangent_point(x.g * b, inverse(b) * x.Y * b);
    EXPECT_TRUE(cotangent_equivalent(x, moved));
    EXPECT_TRUE(same_coset(phi_point(x), phi_point(moved), MatrixClass::Iwahori));

    CotangentPoint other = make_cotangent_point(s.sl_constant(n), s.nilpotent_matrix(n, false));
    EXPECT_EQ(same_coset(phi_point(x), phi_point(other), MatrixClass::Iwahori),
              cotangent_equivalent(x, other));
  }
}

TEST(PsiP, SpecialisesToPhi) {
  Sampler s(43);
  CotangentPoint x = make_cotangent_point(s.sl_constant(3), s.nilpotent_matrix(3, true));
  PolynomialMapSpec trivial;  // all p_i = 0
  EXPECT_EQ(psi_p_point(trivial, x), x.g);
  PolynomialMapSpec phe{{t(-1), t(-2), t(-3)}};
  EXPECT_EQ(psi_p_point(phe, x), phi_point(x));
}

TEST(PsiP, IntegralP1CannotSeparate) {
  LaurentMatrix Z(3);
  Z.at(0, 1) = LaurentScalar(1);
  CotangentPoint xz = make_cotangent_point(LaurentMatrix::identity(3), Z);
  CotangentPoint x0 = make_cotangent_point(LaurentMatrix::identity(3), LaurentMatrix(3));
  PolynomialMapSpec p{{LaurentScalar(1) + t(2), t(-1)}};
  EXPECT_TRUE(same_coset(psi_p_point(p, xz), psi_p_point(p, x0), MatrixClass::Iwahori));
}

TEST(Crucial, BaseCaseN2) {
  NilpotentUpper Y = NilpotentUpper::zero(2);
  Y.a[0][1] = make_rational(3, 2);
  CrucialSolution sol = crucial_solve(Y);
  ASSERT_EQ(sol.A.size(), 1u);
  EXPECT_EQ(sol.A[0][0], make_rational(-3, 2));
  ASSERT_EQ(sol.X.size(), 1u);
  EXPECT_EQ(sol.X[0], make_rational(2, 3));
  EXPECT_EQ(sol.g.at(1, 1), LaurentScalar::monomial(make_rational(2, 3), 1));
  // h as displayed (signs normalized): [[a12, 0], [-t, t^-1 g22]].
  EXPECT_EQ(sol.h.at(0, 0), LaurentScalar(make_rational(3, 2)));
  EXPECT_TRUE(sol.h.at(0, 1).is_zero());
  EXPECT_EQ(sol.h.at(1, 0), LaurentScalar::monomial(-1, 1));
  EXPECT_EQ(sol.h.at(1, 1), LaurentScalar(make_rational(2, 3)));
}

TEST(Crucial, HandSolvedN3) {
  // For n = 3 the system solves to g23^(1) = 1/a12, g33^(2) = 1/(a12 a23),
  // g23^(2) = -a13/(a12^2 a23), with det A3 = -a12^2 a23.
  NilpotentUpper Y = NilpotentUpper::zero(3);
  Rational a12 = make_rational(2), a13 = make_rational(5), a23 = make_rational(-3);
  Y.a[0][1] = a12;
  Y.a[0][2] = a13;
  Y.a[1][2] = a23;
  CrucialSolution sol = crucial_solve(Y);
  ASSERT_EQ(sol.col_index.size(), 3u);
  EXPECT_EQ(sol.col_index[0], std::make_pair(2, 1));
  EXPECT_EQ(sol.col_index[1], std::make_pair(2, 2));
  EXPECT_EQ(sol.col_index[2], std::make_pair(3, 2));
  EXPECT_EQ(sol.X[0], 1 / a12);
  EXPECT_EQ(sol.X[1], -a13 / (a12 * a12 * a23));
  EXPECT_EQ(sol.X[2], 1 / (a12 * a23));
  EXPECT_EQ(sol.detA, -a12 * a12 * a23);
}

TEST(Crucial, RandomizedIdentity) {
  Sampler s(44);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k < 6; ++k) {
      NilpotentUpper Y = s.nilpotent_upper(n, true);
      CrucialSolution sol = crucial_solve(Y);  // self-certifying
      EXPECT_TRUE(membership(sol.g, MatrixClass::G0));
      EXPECT_TRUE(membership(sol.h, MatrixClass::Iwahori));
      EXPECT_EQ(sol.g * kappa_diag(n), lusztig_point(Y.to_matrix()) * sol.h);
      std::vector<Rational> superdiag;
      for (int i = 0; i + 1 < n; ++i)
        superdiag.push_back(Y.a[static_cast<size_t>(i)][static_cast<size_t>(i + 1)]);
      EXPECT_EQ(sol.detA, an_det_formula(superdiag, n));
    }
  }
}

TEST(Crucial, ShapeDeterminantIsOne) {
  // The determinant of the crucial-lemma g (first row e_n, subdiagonal -1)
  // is 1 regardless of the series in the last column.
  Sampler s(48);
  for (int trial = 0; trial < 20; ++trial) {
    int n = static_cast<int>(s.int_in(2, 5));
    LaurentMatrix g(n);
    g.at(0, n - 1) = LaurentScalar(1);
    for (int i = 1; i < n; ++i) {
      g.at(i, i - 1) = LaurentScalar(-1);
      std::vector<Rational> coeffs;
      for (int k = 0; k < 3; ++k) coeffs.push_back(s.rational());
      g.at(i, n - 1) = LaurentScalar::from_coeffs(s.int_in(0, 3), std::move(coeffs));
    }
    EXPECT_TRUE(det(g).is_one()) << g.str();
  }
}

TEST(Crucial, ErrorsAndFormula) {
  NilpotentUpper bad = NilpotentUpper::zero(3);
  bad.a[0][2] = 1;  // superdiagonal still zero
  EXPECT_THROW(crucial_solve(bad), std::invalid_argument);

  EXPECT_EQ(an_det_formula({make_rational(7, 2)}, 2), make_rational(-7, 2));
  EXPECT_EQ(an_det_formula({Rational(1), Rational(1)}, 3), Rational(-1));
}

TEST(Springer, IdentityHolds) {
  EXPECT_TRUE(springer_check(make_cotangent_point(LaurentMatrix::identity(3), LaurentMatrix(3))));
  Sampler s(45);
  for (int k = 0; k < 15; ++k) {
    int n = static_cast<int>(s.int_in(2, 4));
    CotangentPoint x = make_cotangent_point(s.sl_constant(n), s.nilpotent_matrix(n, false));
    EXPECT_TRUE(springer_check(x));
    EXPECT_TRUE(springer_check(x, s.borel_constant(n)));
  }
}

TEST(Membership, KappaCells) {
  EXPECT_TRUE(membership_kappa_g0(LaurentMatrix(3)));
  Sampler s(46);
  for (int k = 0; k < 10; ++k) {
    int n = static_cast<int>(s.int_in(2, 4));
    LaurentMatrix N = s.nilpotent_matrix(n, k % 2 == 0);
    EXPECT_TRUE(membership_kappa_g0(N));
    LaurentMatrix g = s.sl_constant(n);
    EXPECT_TRUE(membership_kappa_g0(g * N * inverse(g)));
    CotangentPoint x = make_cotangent_point(g, N);
    EXPECT_TRUE(membership_kappa_iwahori(x));
  }
}

TEST(Section7, Case1Display) {
  // a = 1, q = 1, r = 0: result [[-t^2,0,0],[0,0,t^-1],[0,t^-1,0]],
  // w = lambda_q s_2 with q = -2 alpha_1 - alpha_2, l(lambda_q) = 6.
  Section7Result res = section7_case(1, std::nullopt, LaurentScalar(1), LaurentScalar());
  EXPECT_EQ(res.case_id, 1);
  LaurentMatrix R(3);
  R.at(0, 0) = LaurentScalar::monomial(-1, 2);
  R.at(1, 2) = t(-1);
  R.at(2, 1) = t(-1);
  EXPECT_EQ(res.monomial_result, R);
  EXPECT_EQ(res.q_vec.coords, (std::vector<long>{-2, 1, 1}));
  EXPECT_EQ(res.translation_len, 6);
  EXPECT_EQ(res.length, 7);
  AffinePermutation expect = translation_perm(res.q_vec) * word_to_perm(CoxeterWord{3, {2}});
  EXPECT_EQ(res.w, expect);
}

TEST(Section7, Case2Display) {
  // a = 2, b = 3, q = r = 1: result diag(t^4, t^-1, t^-3), l = 4a + 2b = 14.
  Section7Result res = section7_case(2, 3, LaurentScalar(1), LaurentScalar(1));
  EXPECT_EQ(res.case_id, 2);
  EXPECT_EQ(res.monomial_result,
            LaurentMatrix::diagonal({t(4), t(-1), t(-3)}));
  EXPECT_EQ(res.translation_len, 14);
  EXPECT_EQ(res.length, 14);
  EXPECT_EQ(res.w, translation_perm(res.q_vec));
}

TEST(Section7, Case3Display) {
  // a = 1, b = 2, q = 1, r = -1: result [[0,-t,0],[-t,0,0],[0,0,-t^-2]],
  // w = lambda_q s_1 of length 7.
  Section7Result res = section7_case(1, 2, LaurentScalar(1), LaurentScalar(-1));
  EXPECT_EQ(res.case_id, 3);
  LaurentMatrix R(3);
  R.at(0, 1) = LaurentScalar::monomial(-1, 1);
  R.at(1, 0) = LaurentScalar::monomial(-1, 1);
  R.at(2, 2) = LaurentScalar::monomial(-1, -2);
  EXPECT_EQ(res.monomial_result, R);
  EXPECT_EQ(res.translation_len, 6);
  EXPECT_EQ(res.length, 7);
}

TEST(Section7, Case4Samples) {
  Section7Result res = section7_case(1, 3, LaurentScalar(1), LaurentScalar(1));
  EXPECT_EQ(res.case_id, 4);
  EXPECT_EQ(res.monomial_result, LaurentMatrix::diagonal({t(3), LaurentScalar(1), t(-3)}));
  EXPECT_EQ(res.translation_len, 12);

  // b = 2a with q^2 + r != 0 also lands in case 4.
  res = section7_case(1, 2, LaurentScalar(1), LaurentScalar(1));
  EXPECT_EQ(res.case_id, 4);
  EXPECT_EQ(res.translation_len, 8);
}

TEST(Section7, ParameterValidation) {
  EXPECT_THROW(section7_case(0, std::nullopt, LaurentScalar(1), LaurentScalar()),
               std::invalid_argument);
  EXPECT_THROW(section7_case(1, std::nullopt, t(1), LaurentScalar()),  // q(0) = 0
               std::invalid_argument);
  EXPECT_THROW(section7_case(1, std::nullopt, LaurentScalar(1), t(1)),  // r(0) = 0
               std::invalid_argument);
  EXPECT_THROW(section7_case(1, std::nullopt, LaurentScalar(1), LaurentScalar(1)),  // missing b
               std::invalid_argument);
  // b = 2a with q^2 + r a non-unit of A: the reduction matrices would leave
  // the Iwahori subgroup.
  EXPECT_THROW(section7_case(1, 2, LaurentScalar(1), LaurentScalar(-1) + t(1)),
               std::invalid_argument);
}

TEST(Section7, GenericUnitSeries) {
  // Unit series q and r exercise the rational-function entries of C and D.
  LaurentScalar q = LaurentScalar(1) + t(1);
  LaurentScalar r = LaurentScalar(-2) + t(1) + t(3);
  Section7Result res = section7_case(2, 3, q, r);
  EXPECT_EQ(res.case_id, 2);
  EXPECT_EQ(res.length, res.translation_len);
  EXPECT_GT(res.length, 6);
}

}  // namespace
