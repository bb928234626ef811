#include "loopcell/loopgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace loopcell {

namespace {

long floordiv(long a, long n) {
  long q = a / n;
  if ((a % n != 0) && ((a < 0) != (n < 0))) --q;
  return q;
}

int residue(long x, int n) { return static_cast<int>(x - n * floordiv(x - 1, n)); }

}  // namespace

LaurentMatrix MonomialMatrix::to_matrix() const {
  LaurentMatrix m(n);
  for (int c = 0; c < n; ++c)
    m.at(row_of_col[static_cast<size_t>(c)], c) =
        LaurentScalar::monomial(coeff[static_cast<size_t>(c)], exponent[static_cast<size_t>(c)]);
  return m;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix inv;
  inv.n = n;
  inv.row_of_col.assign(static_cast<size_t>(n), 0);
  inv.coeff.assign(static_cast<size_t>(n), Rational(0));
  inv.exponent.assign(static_cast<size_t>(n), 0);
  for (int c = 0; c < n; ++c) {
    int r = row_of_col[static_cast<size_t>(c)];
    inv.row_of_col[static_cast<size_t>(r)] = c;
    inv.coeff[static_cast<size_t>(r)] = 1 / coeff[static_cast<size_t>(c)];
    inv.exponent[static_cast<size_t>(r)] = -exponent[static_cast<size_t>(c)];
  }
  return inv;
}

AffinePermutation MonomialMatrix::permutation() const {
  // Column c with entry c_j t^k at row i maps the basis line indexed c to the
  // one indexed i - n k in the unfolded picture.
  std::vector<long> w(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c)
    w[static_cast<size_t>(c)] = (row_of_col[static_cast<size_t>(c)] + 1) -
                                static_cast<long>(n) * exponent[static_cast<size_t>(c)];
  return AffinePermutation(n, std::move(w));
}

std::string MonomialMatrix::str() const { return to_matrix().str(); }

LaurentMatrix generator_lift(int i, int n) {
  if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
  LaurentMatrix m = LaurentMatrix::identity(n);
  if (i >= 1) {
    m.at(i - 1, i - 1) = LaurentScalar();
    m.at(i, i) = LaurentScalar();
    m.at(i - 1, i) = LaurentScalar(1);
    m.at(i, i - 1) = LaurentScalar(-1);
  } else {
    m.at(0, 0) = LaurentScalar();
    m.at(n - 1, n - 1) = LaurentScalar();
    m.at(0, n - 1) = LaurentScalar::t(-1);
    m.at(n - 1, 0) = LaurentScalar::monomial(-1, 1);
  }
  return m;
}

LaurentMatrix word_lift(const CoxeterWord& w) {
  LaurentMatrix m = LaurentMatrix::identity(w.n);
  for (int i : w.letters) m = m * generator_lift(i, w.n);
  return m;
}

LaurentMatrix translation_lift(const CorootVector& q) {
  std::vector<LaurentScalar> d;
  long sum = 0;
  for (long c : q.coords) {
    d.push_back(LaurentScalar::t(-c));
    sum += c;
  }
  if (sum != 0) throw std::invalid_argument("coroot coordinates must sum to zero");
  return LaurentMatrix::diagonal(d);
}

namespace {

// State of one Laurent column during the periodic Bruhat reduction, with its
// bottom pivot: the unfolded position (i+1) - n*val maximised over entries.
struct ReductionColumn {
  std::vector<LaurentScalar> e;
  long bottom = 0;
  Rational value;

  void recompute_bottom(int n) {
    bool found = false;
    for (int i = 0; i < n; ++i) {
      if (e[static_cast<size_t>(i)].is_zero()) continue;
      long r = (i + 1) - static_cast<long>(n) * e[static_cast<size_t>(i)].valuation();
      if (!found || r > bottom) {
        bottom = r;
        value = e[static_cast<size_t>(i)].coeff(e[static_cast<size_t>(i)].valuation());
      }
      found = true;
    }
    if (!found) throw std::logic_error("zero column during reduction");
  }
};

std::string dump_state(const LaurentMatrix& m) {
  std::ostringstream os;
  os << "input matrix:\n" << m.str();
  return os.str();
}

}  // namespace

// Bruhat factorization on the n-periodic unfolded array.  A Laurent matrix
// unfolds to a bi-infinite matrix over Q in which row i - nk carries the
// coefficient of t^k of row i (likewise for columns); Iwahori elements unfold
// to upper triangular matrices with nonzero diagonal.  The cell of M is read
// off from the bottom pivots of its columns once those sit in distinct row
// classes mod n.  Reduction: while two columns' bottom pivots share a row
// class, the one whose unfolded column index is larger (after aligning the
// shift) absorbs a multiple of the other; this adds left unfolded columns to
// right ones, i.e. multiplies on the right by an Iwahori element.  Each step
// moves one bottom strictly up, and bottoms are bounded below by the corner
// ranks of M, so the loop terminates.  The pivot scan order is the strategy;
// the resulting permutation is strategy-independent (uniqueness of the cell)
// and the output is certified against M before returning.
IwahoriFactorization iwahori_factorize(const LaurentMatrix& m, PivotStrategy strategy) {
  const int n = m.size();
  LaurentScalar d = det(m);
  if (d.is_zero() || !d.is_monomial())
    throw std::invalid_argument("factorization requires a nonzero monomial determinant");
  if (d.valuation() != 0)
    throw std::invalid_argument(
        "factorization requires det of order 0 (cell outside the affine Weyl group)");

  std::vector<ReductionColumn> col(static_cast<size_t>(n));
  long span = 0;
  for (int c = 0; c < n; ++c) {
    col[static_cast<size_t>(c)].e.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      const LaurentScalar& x = m.at(i, c);
      col[static_cast<size_t>(c)].e[static_cast<size_t>(i)] = x;
      if (!x.is_zero()) span = std::max(span, x.degree() - x.valuation() + std::labs(x.valuation()));
    }
    col[static_cast<size_t>(c)].recompute_bottom(n);
  }

  // V accumulates the inverse of the applied column operations, so M = P V.
  LaurentMatrix V = LaurentMatrix::identity(n);

  long guard = 8 * static_cast<long>(n) * (n + 1) * (span + 2) + 64;
  std::vector<int> order(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c)
    order[static_cast<size_t>(c)] = (strategy == PivotStrategy::LeftToRight) ? c : n - 1 - c;

  while (true) {
    // Scan for two columns whose bottoms share a residue class.
    int ca = -1, cb = -1;
    std::map<int, int> claimed;
    for (int c : order) {
      int cls = residue(col[static_cast<size_t>(c)].bottom, n);
      auto it = claimed.find(cls);
      if (it != claimed.end()) {
        ca = it->second;
        cb = c;
        break;
      }
      claimed[cls] = c;
    }
    if (ca < 0) break;
    if (--guard < 0)
      throw std::logic_error("periodic reduction did not terminate\n" + dump_state(m));

    long ra = col[static_cast<size_t>(ca)].bottom;
    long rb = col[static_cast<size_t>(cb)].bottom;
    long ell = (rb - ra) / n;  // aligning shift: bottom(ca) + n*ell = bottom(cb)
    int src = ca, dst = cb;
    long shift = ell;
    if ((ca + 1) + static_cast<long>(n) * ell > cb + 1) {
      // The shifted copy of ca sits right of cb: reduce ca by cb instead.
      src = cb;
      dst = ca;
      shift = -ell;
    }
    ReductionColumn& S = col[static_cast<size_t>(src)];
    ReductionColumn& T = col[static_cast<size_t>(dst)];
    LaurentScalar x = LaurentScalar::monomial(T.value / S.value, -shift);
    for (int i = 0; i < n; ++i)
      T.e[static_cast<size_t>(i)] -= x * S.e[static_cast<size_t>(i)];
    T.recompute_bottom(n);
    // P_new = P_old * (Id - x E_{src,dst}), so V picks up the inverse op.
    for (int j = 0; j < n; ++j) V.at(src, j) += x * V.at(dst, j);
  }

  MonomialMatrix wdot;
  wdot.n = n;
  wdot.row_of_col.resize(static_cast<size_t>(n));
  wdot.coeff.resize(static_cast<size_t>(n));
  wdot.exponent.resize(static_cast<size_t>(n));
  std::vector<long> window(static_cast<size_t>(n));
  LaurentMatrix P(n);
  for (int c = 0; c < n; ++c) {
    const ReductionColumn& rc = col[static_cast<size_t>(c)];
    long r = rc.bottom;
    int i = residue(r, n) - 1;
    wdot.row_of_col[static_cast<size_t>(c)] = i;
    wdot.exponent[static_cast<size_t>(c)] = ((i + 1) - r) / n;
    wdot.coeff[static_cast<size_t>(c)] = rc.value;
    window[static_cast<size_t>(c)] = r;
    for (int k = 0; k < n; ++k) P.at(k, c) = rc.e[static_cast<size_t>(k)];
  }

  IwahoriFactorization out;
  out.w = AffinePermutation(n, window);
  out.wdot = wdot;
  out.L = P * wdot.inverse().to_matrix();
  out.U = V;
  if (!membership(out.L, MatrixClass::Iwahori) || !membership(out.U, MatrixClass::Iwahori) ||
      out.L * wdot.to_matrix() * out.U != m)
    throw std::logic_error("factorization certificate failed\n" + dump_state(m));
  return out;
}

AffinePermutation grassmannian_cell(const LaurentMatrix& m) {
  std::set<int> J;
  for (int j = 1; j < m.size(); ++j) J.insert(j);
  return coset_min_rep(iwahori_factorize(m).w, J, CosetSide::Right);
}

bool same_coset(const LaurentMatrix& g1, const LaurentMatrix& g2, MatrixClass cls) {
  if (cls != MatrixClass::Iwahori && cls != MatrixClass::G0)
    throw std::invalid_argument("coset test wants Iwahori or G0");
  return membership(inverse(g2) * g1, cls);
}

TorusDiscrepancy torus_discrepancy(const LaurentMatrix& lift, const LaurentMatrix& reference) {
  TorusDiscrepancy out;
  out.discrepancy = lift * inverse(reference);
  const LaurentMatrix& D = out.discrepancy;
  Rational prod(1);
  for (int i = 0; i < D.size(); ++i) {
    for (int j = 0; j < D.size(); ++j)
      if (i != j && !D.at(i, j).is_zero()) return out;
    const LaurentScalar& x = D.at(i, i);
    if (!x.is_constant() || (x.coeff(0) != 1 && x.coeff(0) != -1)) return out;
    prod *= x.coeff(0);
  }
  out.matches = (prod == 1);
  return out;
}

}  // namespace loopcell
