#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "loopcell/constructions.hpp"

namespace loopcell {

// Deterministic sampler for the verification harness.  All draws go through
// mt19937_64 with explicit modular reduction so a (seed, claim) pair fixes
// the sample sequence.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}
  static uint64_t claim_seed(uint64_t base, const std::string& claim_id);

  long int_in(long lo, long hi);  // inclusive
  bool coin();
  Rational rational(long max_abs_num = 4, long max_den = 3);
  Rational nonzero_rational(long max_abs_num = 4, long max_den = 3);

  NilpotentUpper nilpotent_upper(int n, bool generic);
  LaurentMatrix nilpotent_matrix(int n, bool generic);  // as constant LaurentMatrix
  LaurentMatrix sl_constant(int n, int ops = 6);        // random element of SL_n(Q)
  LaurentMatrix borel_constant(int n, int ops = 4);     // constant upper, det 1
  LaurentMatrix iwahori_element(int n, int ops = 6, int max_exp = 2);
  LaurentMatrix g0_element(int n, int ops = 6, int max_exp = 2);
  CorootVector coroot(int n, long max_coord = 4);
  CoxeterWord word(int n, int len);

 private:
  std::mt19937_64 rng_;
};

}  // namespace loopcell
