#include "loopcell/sampling.hpp"

namespace loopcell {

uint64_t Sampler::claim_seed(uint64_t base, const std::string& claim_id) {
  // FNV-1a over the claim id, mixed with the base seed.
  uint64_t h = 1469598103934665603ull ^ base;
  for (char c : claim_id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

long Sampler::int_in(long lo, long hi) {
  uint64_t span = static_cast<uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

bool Sampler::coin() { return (rng_() & 1u) != 0; }

Rational Sampler::rational(long max_abs_num, long max_den) {
  return make_rational(int_in(-max_abs_num, max_abs_num), int_in(1, max_den));
}

Rational Sampler::nonzero_rational(long max_abs_num, long max_den) {
  long num = int_in(1, max_abs_num);
  if (coin()) num = -num;
  return make_rational(num, int_in(1, max_den));
}

NilpotentUpper Sampler::nilpotent_upper(int n, bool generic) {
  NilpotentUpper y = NilpotentUpper::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational v = rational();
      if (generic && j == i + 1) v = nonzero_rational();
      y.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    }
  return y;
}

LaurentMatrix Sampler::nilpotent_matrix(int n, bool generic) {
  return nilpotent_upper(n, generic).to_matrix();
}

LaurentMatrix Sampler::sl_constant(int n, int ops) {
  LaurentMatrix m = LaurentMatrix::identity(n);
  for (int k = 0; k < ops; ++k) {
    int i = static_cast<int>(int_in(0, n - 1));
    int j = static_cast<int>(int_in(0, n - 2));
    if (j >= i) ++j;
    LaurentMatrix e = LaurentMatrix::identity(n);
    e.at(i, j) = LaurentScalar(nonzero_rational(3, 2));
    m = m * e;
  }
  return m;
}

LaurentMatrix Sampler::borel_constant(int n, int ops) {
  LaurentMatrix m = LaurentMatrix::identity(n);
  for (int k = 0; k < ops; ++k) {
    int i = static_cast<int>(int_in(0, n - 2));
    int j = static_cast<int>(int_in(i + 1, n - 1));
    LaurentMatrix e = LaurentMatrix::identity(n);
    e.at(i, j) = LaurentScalar(rational(3, 2));
    m = m * e;
  }
  // Torus part: unit diagonal entries with product 1.
  for (int i = 0; i + 1 < n; ++i) {
    Rational u = nonzero_rational(3, 2);
    LaurentMatrix d = LaurentMatrix::identity(n);
    d.at(i, i) = LaurentScalar(u);
    d.at(i + 1, i + 1) = LaurentScalar(1 / u);
    m = m * d;
  }
  return m;
}

LaurentMatrix Sampler::iwahori_element(int n, int ops, int max_exp) {
  LaurentMatrix m = LaurentMatrix::identity(n);
  for (int k = 0; k < ops; ++k) {
    int i = static_cast<int>(int_in(0, n - 1));
    int j = static_cast<int>(int_in(0, n - 2));
    if (j >= i) ++j;
    long lo = (i < j) ? 0 : 1;  // below-diagonal entries need order >= 1
    LaurentMatrix e = LaurentMatrix::identity(n);
    e.at(i, j) = LaurentScalar::monomial(nonzero_rational(3, 2), int_in(lo, max_exp));
    m = m * e;
  }
  for (int i = 0; i + 1 < n; ++i) {
    Rational u = nonzero_rational(3, 2);
    LaurentMatrix d = LaurentMatrix::identity(n);
    d.at(i, i) = LaurentScalar(u);
    d.at(i + 1, i + 1) = LaurentScalar(1 / u);
    m = m * d;
  }
  return m;
}

LaurentMatrix Sampler::g0_element(int n, int ops, int max_exp) {
  LaurentMatrix m = LaurentMatrix::identity(n);
  for (int k = 0; k < ops; ++k) {
    int i = static_cast<int>(int_in(0, n - 1));
    int j = static_cast<int>(int_in(0, n - 2));
    if (j >= i) ++j;
    LaurentMatrix e = LaurentMatrix::identity(n);
    e.at(i, j) = LaurentScalar::monomial(nonzero_rational(3, 2), int_in(0, max_exp));
    m = m * e;
  }
  return m;
}

CorootVector Sampler::coroot(int n, long max_coord) {
  CorootVector q = zero_coroot(n);
  for (int i = 1; i <= n - 1; ++i) {
    long c = int_in(-max_coord, max_coord);
    q = coroot_sum(q, coroot_scaled(simple_coroot(i, n), c));
  }
  return q;
}

CoxeterWord Sampler::word(int n, int len) {
  CoxeterWord w;
  w.n = n;
  for (int k = 0; k < len; ++k) w.letters.push_back(static_cast<int>(int_in(0, n - 1)));
  return w;
}

}  // namespace loopcell
