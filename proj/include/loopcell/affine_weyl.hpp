#pragma once

#include <set>
#include <string>
#include <vector>

#include "loopcell/rational.hpp"

namespace loopcell {

// Word in the simple reflections s_0, ..., s_{n-1} of the affine Weyl group
// of type A~_{n-1}.
struct CoxeterWord {
  int n = 0;
  std::vector<int> letters;

  std::string str() const;  // space-separated letters; "e" for the empty word
};

CoxeterWord concat(const CoxeterWord& a, const CoxeterWord& b);

// Element of the affine Weyl group in window notation: a bijection f of Z
// with f(i + n) = f(i) + n and sum(f(i) - i) = 0, stored as [f(1) .. f(n)].
class AffinePermutation {
 public:
  AffinePermutation() = default;
  AffinePermutation(int n, std::vector<long> window);
  static AffinePermutation identity(int n);

  int rank() const { return n_; }
  const std::vector<long>& window() const { return window_; }
  long operator()(long x) const;

  bool is_identity() const;
  AffinePermutation operator*(const AffinePermutation& o) const;  // (u*v)(x) = u(v(x))
  AffinePermutation inverse() const;

  AffinePermutation right_multiplied(int i) const;  // w . s_i
  AffinePermutation left_multiplied(int i) const;   // s_i . w
  bool right_descent(int i) const;  // l(w s_i) < l(w)
  bool left_descent(int i) const;   // l(s_i w) < l(w)

  friend bool operator==(const AffinePermutation& a, const AffinePermutation& b);
  friend bool operator!=(const AffinePermutation& a, const AffinePermutation& b) { return !(a == b); }
  friend bool operator<(const AffinePermutation& a, const AffinePermutation& b);

  std::string str() const;  // "[f1, f2, ..., fn]"

 private:
  int n_ = 0;
  std::vector<long> window_;
};

AffinePermutation word_to_perm(const CoxeterWord& w);
long perm_length(const AffinePermutation& w);
CoxeterWord greedy_reduced_word(const AffinePermutation& w);

/// u <= w in Bruhat order (subword property via the lifting recursion on a
/// fixed reduced word of w).
bool bruhat_leq(const AffinePermutation& u, const AffinePermutation& w);

/// Repeated-query form of bruhat_leq against a fixed upper bound.
class BruhatOracle {
 public:
  explicit BruhatOracle(const AffinePermutation& w);
  bool leq(const AffinePermutation& u) const;

 private:
  int n_;
  std::vector<int> word_;
};

// Real or imaginary affine root r*delta + beta.  For a real root the finite
// part is e_i - e_j (i != j, 1-based); imaginary roots have i = j = 0.
struct AffineRoot {
  long level = 0;
  int i = 0;
  int j = 0;

  bool is_imaginary() const { return i == 0; }
  bool is_positive() const;
  friend bool operator==(const AffineRoot& a, const AffineRoot& b);
  friend bool operator!=(const AffineRoot& a, const AffineRoot& b) { return !(a == b); }
  std::string str() const;
};

AffineRoot simple_root(int k, int n);  // alpha_k, 0 <= k <= n-1
AffineRoot delta_root();
AffineRoot theta_root(int n);  // highest root e_1 - e_n

AffineRoot act_on_root(const CoxeterWord& w, const AffineRoot& r);
AffineRoot act_on_root(const AffinePermutation& w, const AffineRoot& r);

// Element q = sum c_i e_i of the coroot lattice (coordinate sum zero).
struct CorootVector {
  int n = 0;
  std::vector<long> coords;

  std::string str() const;
};

CorootVector zero_coroot(int n);
CorootVector simple_coroot(int i, int n);  // alpha_i^vee = e_i - e_{i+1}, 1 <= i <= n-1
CorootVector theta_coroot(int n);          // e_1 - e_n
CorootVector coroot_sum(const CorootVector& a, const CorootVector& b);
CorootVector coroot_scaled(const CorootVector& a, long k);

/// Pairing alpha(q) for a finite root alpha = e_i - e_j.
long pairing(const AffineRoot& alpha, const CorootVector& q);

/// Translation lambda_q as an affine permutation, window [i + n c_i].
AffinePermutation translation_perm(const CorootVector& q);

/// l(lambda_q) = sum over positive finite roots of |alpha(q)|.
long translation_length(const CorootVector& q);

/// Reflection s_alpha for a finite root: the transposition (i j).
AffinePermutation reflection_perm(const AffineRoot& alpha, int n);

/// Whether l(lambda_q s_alpha) > l(lambda_q), for finite positive alpha;
/// computed from the inversion count of the product.
bool length_increase_test(const CorootVector& q, const AffineRoot& alpha);

enum class CosetSide { Right, Left };

/// Minimal representative of w W_J (Right) or W_J w (Left); J must be a
/// proper subset of {0, ..., n-1}.
AffinePermutation coset_min_rep(const AffinePermutation& w, const std::set<int>& J,
                                CosetSide side = CosetSide::Right);

CoxeterWord build_tau(int n);     // s_{n-1} ... s_1 s_0
CoxeterWord build_kappa(int n);   // tau^{n-1}
CoxeterWord build_kappa0(int n);  // w' tau^{n-1}, w' longest in <s_1..s_{n-2}>

/// Longest element of the subgroup generated by s_a, ..., s_b (finite type A).
CoxeterWord longest_word(int a, int b, int n);

}  // namespace loopcell
