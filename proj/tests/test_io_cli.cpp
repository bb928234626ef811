#include <gtest/gtest.h>

#include "loopcell/loopgroup.hpp"
#include "loopcell/matrix_io.hpp"
#include "loopcell/sampling.hpp"
#include "loopcell/verify.hpp"

using namespace loopcell;

namespace {

LaurentMatrix random_matrix(Sampler& s, int n) {
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (s.int_in(0, 3) == 0) continue;  // leave some zeros
      std::vector<Rational> coeffs;
      int terms = static_cast<int>(s.int_in(1, 3));
      for (int k = 0; k < terms; ++k) coeffs.push_back(s.rational(9, 7));
      m.at(i, j) = LaurentScalar::from_coeffs(s.int_in(-4, 4), std::move(coeffs));
    }
  return m;
}

TEST(MatrixIO, RoundTripExact) {
  Sampler s(51);
  for (int k = 0; k < 60; ++k) {
    int n = static_cast<int>(s.int_in(1, 5));
    LaurentMatrix m = random_matrix(s, n);
    std::string text = write_matrix(m);
    EXPECT_EQ(read_matrix_string(text), m) << text;
    // Writing again gives the identical document (bit-exact round trip).
    EXPECT_EQ(write_matrix(read_matrix_string(text)), text);
  }
}

TEST(MatrixIO, ParseDiagnostics) {
  try {
    read_matrix_string("loopcell-matrix v1\nn 2\nentry 1 1 val 0 coeffs 1\nentry 1 2 oops\n");
    FAIL() << "expected MatrixParseError";
  } catch (const MatrixParseError& e) {
    EXPECT_EQ(e.line, 4);
  }
  EXPECT_THROW(read_matrix_string("bogus\n"), MatrixParseError);
  EXPECT_THROW(read_matrix_string("loopcell-matrix v1\nn 0\n"), MatrixParseError);
  // Non-canonical coefficient lists are rejected rather than silently fixed.
  EXPECT_THROW(
      read_matrix_string("loopcell-matrix v1\nn 1\nentry 1 1 val 0 coeffs 0 1\n"),
      MatrixParseError);
  // Bad rational literal.
  try {
    read_matrix_string("loopcell-matrix v1\nn 1\nentry 1 1 val 0 coeffs 1/0\n");
    FAIL() << "expected MatrixParseError";
  } catch (const MatrixParseError& e) {
    EXPECT_EQ(e.line, 3);
  }
}

TEST(MatrixIO, FactorizeThroughFormat) {
  // The identity file factors to the identity window with the empty word.
  LaurentMatrix id3 = LaurentMatrix::identity(3);
  LaurentMatrix back = read_matrix_string(write_matrix(id3));
  IwahoriFactorization f = iwahori_factorize(back);
  EXPECT_TRUE(f.w.is_identity());
  EXPECT_TRUE(greedy_reduced_word(f.w).letters.empty());

  // psi(E12) for n = 2, written out by hand in the file format.
  std::string text =
      "loopcell-matrix v1\n"
      "n 2\n"
      "entry 1 1 val 0 coeffs 1\n"
      "entry 1 2 val -1 coeffs 1\n"
      "entry 2 1 zero\n"
      "entry 2 2 val 0 coeffs 1\n";
  EXPECT_EQ(grassmannian_cell(read_matrix_string(text)),
            word_to_perm(CoxeterWord{2, {0}}));
}

TEST(Report, JsonRoundTrip) {
  VerifyOptions opt;
  opt.selectors = {"kappa"};
  opt.n_min = 2;
  opt.n_max = 3;
  opt.seed = 7;
  opt.samples = 4;
  VerificationReport rep = run_claims(opt);
  EXPECT_FALSE(rep.claims.empty());
  EXPECT_TRUE(rep.all_pass());

  VerificationReport back = VerificationReport::from_json(rep.to_json());
  ASSERT_EQ(back.claims.size(), rep.claims.size());
  for (size_t k = 0; k < rep.claims.size(); ++k) {
    EXPECT_EQ(back.claims[k].claim_id, rep.claims[k].claim_id);
    EXPECT_EQ(back.claims[k].pass, rep.claims[k].pass);
    EXPECT_EQ(back.claims[k].n, rep.claims[k].n);
    EXPECT_EQ(back.claims[k].seed, rep.claims[k].seed);
    EXPECT_EQ(back.claims[k].samples, rep.claims[k].samples);
    EXPECT_EQ(back.claims[k].witness, rep.claims[k].witness);
  }
}

TEST(Report, DeterministicGivenSeed) {
  VerifyOptions opt;
  opt.selectors = {"an-det", "section7"};
  opt.n_min = 2;
  opt.n_max = 3;
  opt.seed = 99;
  opt.samples = 5;
  VerificationReport a = run_claims(opt);
  VerificationReport b = run_claims(opt);
  ASSERT_EQ(a.claims.size(), b.claims.size());
  for (size_t k = 0; k < a.claims.size(); ++k) {
    EXPECT_EQ(a.claims[k].claim_id, b.claims[k].claim_id);
    EXPECT_EQ(a.claims[k].pass, b.claims[k].pass);
    EXPECT_EQ(a.claims[k].witness, b.claims[k].witness);
  }
  // Claims are sorted by id.
  for (size_t k = 1; k < a.claims.size(); ++k)
    EXPECT_LT(a.claims[k - 1].claim_id, a.claims[k].claim_id);
}

TEST(Report, SelectorsValidated) {
  EXPECT_TRUE(valid_selector("all"));
  EXPECT_TRUE(valid_selector("an-det"));
  EXPECT_FALSE(valid_selector("everything"));
}

}  // namespace
