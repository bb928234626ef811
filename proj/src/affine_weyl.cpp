#include "loopcell/affine_weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace loopcell {

namespace {

long floordiv(long a, long n) {
  long q = a / n;
  if ((a % n != 0) && ((a < 0) != (n < 0))) --q;
  return q;
}

// Residue of x in [1..n] and the shift k with x = residue + n*k.
int residue(long x, int n) { return static_cast<int>(x - n * floordiv(x - 1, n)); }
long shift(long x, int n) { return floordiv(x - 1, n); }

void check_letter(int i, int n) {
  if (i < 0 || i >= n) throw std::invalid_argument("generator letter out of range");
}

}  // namespace

std::string CoxeterWord::str() const {
  if (letters.empty()) return "e";
  std::ostringstream os;
  for (size_t k = 0; k < letters.size(); ++k) {
    if (k) os << ' ';
    os << letters[k];
  }
  return os.str();
}

CoxeterWord concat(const CoxeterWord& a, const CoxeterWord& b) {
  if (a.n != b.n) throw std::invalid_argument("word rank mismatch");
  CoxeterWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

AffinePermutation::AffinePermutation(int n, std::vector<long> window)
    : n_(n), window_(std::move(window)) {
  if (n < 2) throw std::invalid_argument("affine permutation needs n >= 2");
  if (static_cast<int>(window_.size()) != n)
    throw std::invalid_argument("window size mismatch");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  long sum = 0;
  for (int i = 1; i <= n; ++i) {
    long v = window_[static_cast<size_t>(i - 1)];
    int r = residue(v, n) - 1;
    if (seen[static_cast<size_t>(r)])
      throw std::invalid_argument("window residues are not a permutation");
    seen[static_cast<size_t>(r)] = 1;
    sum += v - i;
  }
  if (sum != 0) throw std::invalid_argument("window does not sum to zero shift");
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<long> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1L);
  return AffinePermutation(n, std::move(w));
}

long AffinePermutation::operator()(long x) const {
  int r = residue(x, n_);
  return window_[static_cast<size_t>(r - 1)] + n_ * shift(x, n_);
}

bool AffinePermutation::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    if (window_[static_cast<size_t>(i - 1)] != i) return false;
  return true;
}

AffinePermutation AffinePermutation::operator*(const AffinePermutation& o) const {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
  std::vector<long> w(static_cast<size_t>(n_));
  for (int i = 1; i <= n_; ++i) w[static_cast<size_t>(i - 1)] = (*this)(o(i));
  return AffinePermutation(n_, std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
  std::vector<long> w(static_cast<size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    long v = window_[static_cast<size_t>(i - 1)];
    int r = residue(v, n_);
    // f(i) = v  =>  f^{-1}(r) = i - (v - r).
    w[static_cast<size_t>(r - 1)] = i - (v - r);
  }
  return AffinePermutation(n_, std::move(w));
}

AffinePermutation AffinePermutation::right_multiplied(int i) const {
  check_letter(i, n_);
  std::vector<long> w = window_;
  if (i >= 1) {
    std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i)]);
  } else {
    long f1 = window_[0], fn = window_[static_cast<size_t>(n_ - 1)];
    w[0] = fn - n_;
    w[static_cast<size_t>(n_ - 1)] = f1 + n_;
  }
  return AffinePermutation(n_, std::move(w));
}

AffinePermutation AffinePermutation::left_multiplied(int i) const {
  check_letter(i, n_);
  std::vector<long> w = window_;
  // s_i swaps the values congruent to i and i+1 mod n (0 pairs with 1).
  for (auto& v : w) {
    int r = residue(v, n_);
    if (i >= 1) {
      if (r == i) ++v;
      else if (r == i + 1) --v;
    } else {
      if (r == n_) ++v;       // v == 0 mod n
      else if (r == 1) --v;   // v == 1 mod n
    }
  }
  return AffinePermutation(n_, std::move(w));
}

bool AffinePermutation::right_descent(int i) const {
  check_letter(i, n_);
  if (i >= 1) return window_[static_cast<size_t>(i - 1)] > window_[static_cast<size_t>(i)];
  return window_[static_cast<size_t>(n_ - 1)] - n_ > window_[0];
}

bool AffinePermutation::left_descent(int i) const {
  check_letter(i, n_);
  // l(s_i w) < l(w) iff position of value i exceeds position of value i+1
  // (value 0 pairs with value 1 for i = 0).
  long lo = (i >= 1) ? i : 0;
  AffinePermutation inv = inverse();
  return inv(lo) > inv(lo + 1);
}

bool operator==(const AffinePermutation& a, const AffinePermutation& b) {
  return a.n_ == b.n_ && a.window_ == b.window_;
}

bool operator<(const AffinePermutation& a, const AffinePermutation& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.window_ < b.window_;
}

std::string AffinePermutation::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    if (i) os << ", ";
    os << window_[static_cast<size_t>(i)];
  }
  os << "]";
  return os.str();
}

AffinePermutation word_to_perm(const CoxeterWord& w) {
  AffinePermutation p = AffinePermutation::identity(w.n);
  for (int i : w.letters) p = p.right_multiplied(i);
  return p;
}

long perm_length(const AffinePermutation& w) {
  // Inversion count: sum over 1 <= i < j <= n of |floor((f(j) - f(i)) / n)|.
  int n = w.rank();
  long len = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      long d = floordiv(w(j) - w(i), n);
      len += d < 0 ? -d : d;
    }
  return len;
}

CoxeterWord greedy_reduced_word(const AffinePermutation& w) {
  CoxeterWord word;
  word.n = w.rank();
  AffinePermutation v = w;
  std::vector<int> picked;
  while (!v.is_identity()) {
    int d = -1;
    for (int i = 0; i < v.rank(); ++i)
      if (v.right_descent(i)) {
        d = i;
        break;
      }
    if (d < 0) throw std::logic_error("non-identity element without right descent");
    v = v.right_multiplied(d);
    picked.push_back(d);
  }
  word.letters.assign(picked.rbegin(), picked.rend());
  return word;
}

BruhatOracle::BruhatOracle(const AffinePermutation& w) : n_(w.rank()) {
  word_ = greedy_reduced_word(w).letters;
}

bool BruhatOracle::leq(const AffinePermutation& u) const {
  if (u.rank() != n_) throw std::invalid_argument("rank mismatch");
  // Lifting property along the fixed reduced word: with i a left descent of
  // the suffix w', u <= w' reduces to s_i u <= s_i w' when i is a descent of
  // u, and to u <= s_i w' otherwise.
  AffinePermutation v = u;
  for (int i : word_) {
    if (v.left_descent(i)) v = v.left_multiplied(i);
  }
  return v.is_identity();
}

bool bruhat_leq(const AffinePermutation& u, const AffinePermutation& w) {
  return BruhatOracle(w).leq(u);
}

bool AffineRoot::is_positive() const {
  if (is_imaginary()) return level > 0;
  return level > 0 || (level == 0 && i < j);
}

bool operator==(const AffineRoot& a, const AffineRoot& b) {
  return a.level == b.level && a.i == b.i && a.j == b.j;
}

std::string AffineRoot::str() const {
  std::ostringstream os;
  if (is_imaginary()) {
    os << level << "*delta";
    return os.str();
  }
  if (level != 0) os << level << "*delta + ";
  os << "(e" << i << " - e" << j << ")";
  return os.str();
}

AffineRoot simple_root(int k, int n) {
  check_letter(k, n);
  if (k >= 1) return AffineRoot{0, k, k + 1};
  return AffineRoot{1, n, 1};  // alpha_0 = delta - theta
}

AffineRoot delta_root() { return AffineRoot{1, 0, 0}; }

AffineRoot theta_root(int n) { return AffineRoot{0, 1, n}; }

namespace {

AffineRoot apply_simple(int k, int n, const AffineRoot& r) {
  if (r.is_imaginary()) return r;
  AffineRoot out = r;
  auto transpose = [](int x, int a, int b) { return x == a ? b : (x == b ? a : x); };
  if (k >= 1) {
    out.i = transpose(r.i, k, k + 1);
    out.j = transpose(r.j, k, k + 1);
    return out;
  }
  // s_0 = reflection in alpha_0 = delta - theta:
  // s_0(r*delta + beta) = (r + <beta, theta^vee>) delta + s_theta(beta).
  long pair = (r.i == 1 ? 1 : 0) - (r.i == n ? 1 : 0) - (r.j == 1 ? 1 : 0) + (r.j == n ? 1 : 0);
  out.level = r.level + pair;
  out.i = transpose(r.i, 1, n);
  out.j = transpose(r.j, 1, n);
  if (out.i == out.j) throw std::logic_error("degenerate root");
  return out;
}

}  // namespace

AffineRoot act_on_root(const CoxeterWord& w, const AffineRoot& r) {
  AffineRoot out = r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out = apply_simple(*it, w.n, out);
  return out;
}

AffineRoot act_on_root(const AffinePermutation& w, const AffineRoot& r) {
  if (r.is_imaginary()) return r;
  // The root t^level E_ij corresponds, on the unfolded index set, to the pair
  // (i - n*level, j); w acts coordinatewise.
  int n = w.rank();
  long a = w(r.i - static_cast<long>(n) * r.level);
  long b = w(r.j);
  AffineRoot out;
  out.i = residue(a, n);
  out.j = residue(b, n);
  out.level = shift(b, n) - shift(a, n);
  return out;
}

std::string CorootVector::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < n; ++i) {
    if (i) os << ", ";
    os << coords[static_cast<size_t>(i)];
  }
  os << ")";
  return os.str();
}

CorootVector zero_coroot(int n) { return CorootVector{n, std::vector<long>(static_cast<size_t>(n), 0)}; }

CorootVector simple_coroot(int i, int n) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("simple coroot index out of range");
  CorootVector q = zero_coroot(n);
  q.coords[static_cast<size_t>(i - 1)] = 1;
  q.coords[static_cast<size_t>(i)] = -1;
  return q;
}

CorootVector theta_coroot(int n) {
  CorootVector q = zero_coroot(n);
  q.coords[0] = 1;
  q.coords[static_cast<size_t>(n - 1)] = -1;
  return q;
}

CorootVector coroot_sum(const CorootVector& a, const CorootVector& b) {
  if (a.n != b.n) throw std::invalid_argument("coroot rank mismatch");
  CorootVector r = a;
  for (size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += b.coords[k];
  return r;
}

CorootVector coroot_scaled(const CorootVector& a, long k) {
  CorootVector r = a;
  for (auto& c : r.coords) c *= k;
  return r;
}

namespace {

void check_coroot(const CorootVector& q) {
  long sum = 0;
  for (long c : q.coords) sum += c;
  if (sum != 0) throw std::invalid_argument("coroot coordinates must sum to zero");
}

void check_finite_root(const AffineRoot& alpha) {
  if (alpha.is_imaginary() || alpha.level != 0)
    throw std::invalid_argument("expected a finite root");
}

}  // namespace

long pairing(const AffineRoot& alpha, const CorootVector& q) {
  check_finite_root(alpha);
  return q.coords[static_cast<size_t>(alpha.i - 1)] - q.coords[static_cast<size_t>(alpha.j - 1)];
}

AffinePermutation translation_perm(const CorootVector& q) {
  check_coroot(q);
  std::vector<long> w(static_cast<size_t>(q.n));
  for (int i = 1; i <= q.n; ++i)
    w[static_cast<size_t>(i - 1)] = i + static_cast<long>(q.n) * q.coords[static_cast<size_t>(i - 1)];
  return AffinePermutation(q.n, std::move(w));
}

long translation_length(const CorootVector& q) {
  check_coroot(q);
  long len = 0;
  for (int i = 1; i <= q.n; ++i)
    for (int j = i + 1; j <= q.n; ++j) {
      long d = q.coords[static_cast<size_t>(i - 1)] - q.coords[static_cast<size_t>(j - 1)];
      len += d < 0 ? -d : d;
    }
  return len;
}

AffinePermutation reflection_perm(const AffineRoot& alpha, int n) {
  check_finite_root(alpha);
  std::vector<long> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1L);
  std::swap(w[static_cast<size_t>(alpha.i - 1)], w[static_cast<size_t>(alpha.j - 1)]);
  return AffinePermutation(n, std::move(w));
}

bool length_increase_test(const CorootVector& q, const AffineRoot& alpha) {
  check_finite_root(alpha);
  if (!alpha.is_positive()) throw std::invalid_argument("expected a positive root");
  AffinePermutation lq = translation_perm(q);
  AffinePermutation prod = lq * reflection_perm(alpha, q.n);
  return perm_length(prod) > perm_length(lq);
}

AffinePermutation coset_min_rep(const AffinePermutation& w, const std::set<int>& J,
                                CosetSide side) {
  int n = w.rank();
  for (int j : J) check_letter(j, n);
  if (static_cast<int>(J.size()) >= n)
    throw std::invalid_argument("J must be a proper subset of the generators");
  AffinePermutation v = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : J) {
      if (side == CosetSide::Right && v.right_descent(j)) {
        v = v.right_multiplied(j);
        moved = true;
      } else if (side == CosetSide::Left && v.left_descent(j)) {
        v = v.left_multiplied(j);
        moved = true;
      }
    }
  }
  return v;
}

CoxeterWord build_tau(int n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  CoxeterWord w;
  w.n = n;
  for (int i = n - 1; i >= 0; --i) w.letters.push_back(i);
  return w;
}

CoxeterWord build_kappa(int n) {
  CoxeterWord tau = build_tau(n);
  CoxeterWord w;
  w.n = n;
  for (int k = 0; k < n - 1; ++k) w = concat(w, tau);
  return w;
}

CoxeterWord longest_word(int a, int b, int n) {
  // Longest element of the type-A subgroup <s_a, ..., s_b>:
  // (a)(a+1 a)(a+2 a+1 a)...(b ... a).
  CoxeterWord w;
  w.n = n;
  for (int top = a; top <= b; ++top)
    for (int i = top; i >= a; --i) w.letters.push_back(i);
  return w;
}

CoxeterWord build_kappa0(int n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  CoxeterWord wprime{n, {}};
  if (n >= 3) wprime = longest_word(1, n - 2, n);
  return concat(wprime, build_kappa(n));
}

}  // namespace loopcell
