/*
  linalg.hpp — dense exact linear algebra over Q, Q(i) and (for the
  probabilistic rank mode) prime fields.

  The central object is RowReducer, an incremental row-echelon structure.
  Constraint systems are streamed into it row by row, so a system with many
  redundant equations never holds more than rank-many rows.  Rows are kept
  primitive (integer entries, content 1) after every update; on the sparse
  integer matrices produced by Bianchi identities this keeps entry growth
  negligible.
*/
#ifndef WB_LINALG_HPP
#define WB_LINALG_HPP

#include "wb/rational.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace wb {

template <class F>
using Vec = std::vector<F>;

using VecQ = Vec<Rational>;
using VecG = Vec<GaussQ>;

template <class F>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<F> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, F(0)) {}

  F& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const F& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (!wb::is_zero(x)) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t k = 0; k < a.size(); ++k) r.a[k] += o.a[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t k = 0; k < a.size(); ++k) r.a[k] -= o.a[k];
    return r;
  }
  Mat operator*(const F& s) const {
    Mat r = *this;
    for (auto& x : r.a) x *= s;
    return r;
  }
  Mat operator*(const Mat& o) const {
    assert(cols == o.rows);
    Mat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const F& x = (*this)(i, k);
        if (wb::is_zero(x)) continue;
        for (int j = 0; j < o.cols; ++j) {
          if (wb::is_zero(o(k, j))) continue;
          r(i, j) += x * o(k, j);
        }
      }
    return r;
  }

  Vec<F> operator*(const Vec<F>& v) const {
    assert(static_cast<int>(v.size()) == cols);
    Vec<F> r(rows, F(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        if (wb::is_zero((*this)(i, j)) || wb::is_zero(v[j])) continue;
        r[i] += (*this)(i, j) * v[j];
      }
    return r;
  }

  Mat transpose() const {
    Mat r(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

using MatQ = Mat<Rational>;
using MatG = Mat<GaussQ>;

template <class F>
Mat<F> bracket(const Mat<F>& x, const Mat<F>& y) {
  return x * y - y * x;
}

template <class F>
F trace(const Mat<F>& m) {
  F t(0);
  for (int i = 0; i < m.rows; ++i) t += m(i, i);
  return t;
}

inline MatG conj(const MatG& m) {
  MatG r = m;
  for (auto& x : r.a) x = x.conj();
  return r;
}

/// Entry-wise complexification / real part extraction.
inline MatG to_gauss(const MatQ& m) {
  MatG r(m.rows, m.cols);
  for (size_t k = 0; k < m.a.size(); ++k) r.a[k] = GaussQ(m.a[k]);
  return r;
}

// ---------------------------------------------------------------------------
// Prime-field scalars for the optional probabilistic rank mode.

template <std::uint64_t P>
struct Fp {
  std::uint64_t v = 0;
  Fp() = default;
  Fp(long x) {
    long long m = x % static_cast<long long>(P);
    if (m < 0) m += P;
    v = static_cast<std::uint64_t>(m);
  }
  explicit Fp(const Rational& q) {
    Integer num = numerator(q) % Integer(P);
    Integer den = denominator(q) % Integer(P);
    std::uint64_t n = static_cast<std::uint64_t>(num < 0 ? num + Integer(P) : num);
    std::uint64_t d = static_cast<std::uint64_t>(den);
    v = mul(n, inv(d));
  }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % P);
  }
  static std::uint64_t pw(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  static std::uint64_t inv(std::uint64_t a) { return pw(a, P - 2); }
  bool is_zero() const { return v == 0; }
  Fp operator-() const { return from(v == 0 ? 0 : P - v); }
  Fp& operator+=(Fp o) {
    v += o.v;
    if (v >= P) v -= P;
    return *this;
  }
  Fp& operator-=(Fp o) {
    v += P - o.v;
    if (v >= P) v -= P;
    return *this;
  }
  Fp& operator*=(Fp o) {
    v = mul(v, o.v);
    return *this;
  }
  Fp& operator/=(Fp o) {
    v = mul(v, inv(o.v));
    return *this;
  }
  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  static Fp from(std::uint64_t x) {
    Fp r;
    r.v = x;
    return r;
  }
};

template <std::uint64_t P>
bool is_zero(const Fp<P>& x) {
  return x.is_zero();
}

template <std::uint64_t P>
void normalize_row(Vec<Fp<P>>&) {}


// ---------------------------------------------------------------------------
// Row normalization: scale a row to primitive integer form.

inline void normalize_row(VecQ& row) {
  Integer l(1), g(0);
  for (const auto& x : row)
    if (!x.is_zero()) l = lcm(l, denominator(x));
  for (const auto& x : row)
    if (!x.is_zero()) g = gcd(g, Integer(numerator(x) * (l / denominator(x))));
  if (g.is_zero()) return;
  Rational s(l, g);
  // sign: make the first nonzero entry positive
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    if (x * s < 0) s = -s;
    break;
  }
  for (auto& x : row) x *= s;
}

inline void normalize_row(VecG& row) {
  Integer l(1), g(0);
  for (const auto& x : row) {
    if (!x.re.is_zero()) l = lcm(l, denominator(x.re));
    if (!x.im.is_zero()) l = lcm(l, denominator(x.im));
  }
  for (const auto& x : row) {
    if (!x.re.is_zero()) g = gcd(g, Integer(numerator(x.re) * (l / denominator(x.re))));
    if (!x.im.is_zero()) g = gcd(g, Integer(numerator(x.im) * (l / denominator(x.im))));
  }
  if (g.is_zero()) return;
  GaussQ s{Rational(l, g)};
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    // rotate the leading entry into {re>0} or {re==0, im>0}
    if (!x.re.is_zero() && (x.re * s.re) < 0) s = -s;
    if (x.re.is_zero() && (x.im * s.re) < 0) s = -s;
    break;
  }
  for (auto& x : row) x *= s;
}

// ---------------------------------------------------------------------------

/// Incremental row-echelon form.  Rows are reduced against the stored pivots
/// as they arrive; the stored rows always have distinct pivot columns and are
/// primitive.  Supports rank queries, membership tests, kernel extraction.
template <class F>
class RowReducer {
 public:
  explicit RowReducer(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Reduce v against the current echelon rows (in place).
  void reduce(Vec<F>& v) const {
    for (const auto& [p, row] : rows_) {
      if (wb::is_zero(v[p])) continue;
      // v <- row[p]*v - v[p]*row   (keeps integrality of primitive data)
      F a = row[p];
      F b = v[p];
      for (int j = 0; j < p; ++j)
        if (!wb::is_zero(v[j])) v[j] *= a;
      for (int j = p; j < cols_; ++j) v[j] = a * v[j] - b * row[j];
    }
  }

  bool contains(Vec<F> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!wb::is_zero(x)) return false;
    return true;
  }

  /// Returns true if the row was independent (and was added).
  bool add_row(Vec<F> v) {
    assert(static_cast<int>(v.size()) == cols_);
    reduce(v);
    int p = -1;
    for (int j = 0; j < cols_; ++j)
      if (!wb::is_zero(v[j])) {
        p = j;
        break;
      }
    if (p < 0) return false;
    normalize_row(v);
    rows_[p] = std::move(v);
    return true;
  }

  /// Insert an already-reduced row whose pivot column is known to be free.
  void insert_raw(int pivot, Vec<F> row) {
    assert(!rows_.count(pivot));
    rows_[pivot] = std::move(row);
  }

  std::vector<int> pivot_columns() const {
    std::vector<int> p;
    p.reserve(rows_.size());
    for (const auto& [c, _] : rows_) p.push_back(c);
    return p;
  }

  /// Fully back-substituted rows with unit pivots, in pivot-column order.
  std::vector<Vec<F>> rref_rows() const {
    std::vector<Vec<F>> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(row);
    std::vector<int> piv = pivot_columns();
    // back substitution, last pivot upwards
    for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
      F d = out[i][piv[i]];
      for (auto& x : out[i]) x = x / d;
      for (int k = 0; k < i; ++k) {
        F c = out[k][piv[i]];
        if (wb::is_zero(c)) continue;
        for (int j = piv[i]; j < cols_; ++j) out[k][j] -= c * out[i][j];
      }
    }
    return out;
  }

  /// Basis of {x : R x = 0} where R is the row space accumulated so far.
  std::vector<Vec<F>> kernel() const {
    std::vector<Vec<F>> R = rref_rows();
    std::vector<int> piv = pivot_columns();
    std::vector<char> is_piv(cols_, 0);
    for (int p : piv) is_piv[p] = 1;
    std::vector<Vec<F>> out;
    for (int f = 0; f < cols_; ++f) {
      if (is_piv[f]) continue;
      Vec<F> v(cols_, F(0));
      v[f] = F(1);
      for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -R[i][f];
      normalize_row(v);
      out.push_back(std::move(v));
    }
    return out;
  }

  /// A primitive basis of the row space itself.
  std::vector<Vec<F>> basis() const {
    std::vector<Vec<F>> out = rref_rows();
    for (auto& r : out) normalize_row(r);
    return out;
  }

 private:
  int cols_;
  std::map<int, Vec<F>> rows_;  // pivot column -> row (first nonzero at pivot)
};

template <class F>
int rank_of(const std::vector<Vec<F>>& rows, int cols) {
  RowReducer<F> r(cols);
  for (const auto& v : rows) r.add_row(v);
  return r.rank();
}

/// Kernel of the linear map given by stacked constraint rows.
template <class F>
std::vector<Vec<F>> kernel_basis(const std::vector<Vec<F>>& rows, int cols) {
  RowReducer<F> r(cols);
  for (const auto& v : rows) r.add_row(v);
  return r.kernel();
}

/// Solve A x = b exactly; empty optional if inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Mat<F>& A, const Vec<F>& b) {
  RowReducer<F> r(A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    Vec<F> row(A.cols + 1);
    for (int j = 0; j < A.cols; ++j) row[j] = A(i, j);
    row[A.cols] = b[i];
    r.add_row(std::move(row));
  }
  for (int p : r.pivot_columns())
    if (p == A.cols) return std::nullopt;  // 0 = nonzero
  std::vector<Vec<F>> R = r.rref_rows();
  std::vector<int> piv = r.pivot_columns();
  Vec<F> x(A.cols, F(0));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = R[i][A.cols];
  return x;
}

/// Inverse of a square matrix (throws on singular input).
template <class F>
Mat<F> inverse(const Mat<F>& A) {
  assert(A.rows == A.cols);
  int n = A.rows;
  RowReducer<F> r(2 * n);
  for (int i = 0; i < n; ++i) {
    Vec<F> row(2 * n, F(0));
    for (int j = 0; j < n; ++j) row[j] = A(i, j);
    row[n + i] = F(1);
    r.add_row(std::move(row));
  }
  if (r.rank() != n) throw std::invalid_argument("inverse: singular matrix");
  std::vector<Vec<F>> R = r.rref_rows();
  std::vector<int> piv = r.pivot_columns();
  Mat<F> inv(n, n);
  for (int i = 0; i < n; ++i) {
    assert(piv[i] == i);
    for (int j = 0; j < n; ++j) inv(i, j) = R[i][n + j];
  }
  return inv;
}

/// Expresses vectors in terms of a fixed spanning list.  Rows carry a tag
/// block recording the combination, plus one bookkeeping column for the
/// accumulated pivot scaling, so exact coordinates fall out of the reduction.
template <class F>
class SpanSolver {
 public:
  SpanSolver(int payload_cols, int capacity)
      : payload_(payload_cols), capacity_(capacity), red_(payload_cols + capacity + 1) {}

  int size() const { return count_; }

  /// Returns false if the vector was already in the span (and is not stored).
  bool add(const Vec<F>& payload) {
    assert(count_ < capacity_);
    Vec<F> row(payload_ + capacity_ + 1, F(0));
    for (int j = 0; j < payload_; ++j) row[j] = payload[j];
    row[payload_ + count_] = F(1);
    if (!add_payload_pivot_row(std::move(row))) return false;
    ++count_;
    return true;
  }

  /// Coordinates over the added vectors, or nullopt if outside their span.
  std::optional<Vec<F>> coords(const Vec<F>& payload) const {
    Vec<F> row(payload_ + capacity_ + 1, F(0));
    for (int j = 0; j < payload_; ++j) row[j] = payload[j];
    row.back() = F(1);
    red_.reduce(row);
    for (int j = 0; j < payload_; ++j)
      if (!wb::is_zero(row[j])) return std::nullopt;
    F s = row.back();  // never zero: stored rows have 0 in the last column
    Vec<F> c(count_);
    for (int k = 0; k < count_; ++k) c[k] = -row[payload_ + k] / s;
    return c;
  }

 private:
  bool add_payload_pivot_row(Vec<F> row) {
    red_.reduce(row);
    int p = -1;
    for (int j = 0; j < payload_; ++j)
      if (!wb::is_zero(row[j])) {
        p = j;
        break;
      }
    if (p < 0) return false;
    normalize_row(row);
    red_.insert_raw(p, std::move(row));
    return true;
  }

  int payload_, capacity_;
  int count_ = 0;
  RowReducer<F> red_;
};

}  // namespace wb

#endif
