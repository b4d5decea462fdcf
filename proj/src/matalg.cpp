#include "wb/matalg.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace wb {

namespace {

constexpr int kFunctorDimCap = 4096;

template <class F>
Mat<F> unit_matrix(int n, int i, int j) {
  Mat<F> m(n, n);
  m(i, j) = F(1);
  return m;
}

template <class F>
bool form_invariant(const Mat<F>& x, const Mat<F>& gram) {
  return (x.transpose() * gram + gram * x).is_zero();
}

}  // namespace

template <class F>
std::vector<std::vector<Vec<F>>> verify_rep(const Rep<F>& r) {
  const int n = r.dim_v;
  const int g = r.dim_g();
  SpanSolver<F> solver(n * n, g);
  for (const auto& b : r.basis)
    if (!solver.add(flatten(b)))
      throw std::invalid_argument(r.name + ": basis not linearly independent");
  std::vector<std::vector<Vec<F>>> c(g, std::vector<Vec<F>>(g));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j <= i; ++j) {
      auto coords = solver.coords(flatten(bracket(r.basis[i], r.basis[j])));
      if (!coords) throw std::invalid_argument(r.name + ": basis not closed under bracket");
      c[i][j] = *coords;
      c[j][i] = *coords;
      for (auto& x : c[j][i]) x = -x;
    }
  if (r.form != FormKind::none) {
    if (r.form == FormKind::symmetric && !(r.gram == r.gram.transpose()))
      throw std::invalid_argument(r.name + ": gram not symmetric");
    if (r.form == FormKind::antisymmetric && !(r.gram + r.gram.transpose()).is_zero())
      throw std::invalid_argument(r.name + ": gram not antisymmetric");
    for (const auto& b : r.basis)
      if (!form_invariant(b, r.gram))
        throw std::invalid_argument(r.name + ": declared form is not invariant");
  }
  for (int i : r.cartan)
    for (int j : r.cartan)
      if (!bracket(r.basis[i], r.basis[j]).is_zero())
        throw std::invalid_argument(r.name + ": designated Cartan elements do not commute");
  return c;
}

template std::vector<std::vector<VecQ>> verify_rep<Rational>(const RealRep&);
template std::vector<std::vector<VecG>> verify_rep<GaussQ>(const CplxRep&);

template <class F>
Vec<F> coords_in_basis(const Rep<F>& r, const Mat<F>& m) {
  SpanSolver<F> solver(r.dim_v * r.dim_v, r.dim_g());
  for (const auto& b : r.basis) solver.add(flatten(b));
  auto c = solver.coords(flatten(m));
  if (!c) throw std::invalid_argument(r.name + ": matrix outside the algebra span");
  return *c;
}

template VecQ coords_in_basis<Rational>(const RealRep&, const MatQ&);
template VecG coords_in_basis<GaussQ>(const CplxRep&, const MatG&);

// --- classical compact catalog ---------------------------------------------

RealRep catalog_so(int n) {
  if (n < 2) throw std::invalid_argument("so(n): need n >= 2");
  RealRep r;
  r.name = "so(" + std::to_string(n) + ")";
  r.dim_v = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      r.basis.push_back(unit_matrix<Rational>(n, i, j) - unit_matrix<Rational>(n, j, i));
  r.form = FormKind::symmetric;
  r.gram = MatQ::identity(n);
  verify_rep(r);
  return r;
}

namespace {

/// Realification of a complex d x d matrix X + iY in coordinates (Re v, Im v).
MatQ realify_matrix(const MatG& m) {
  int d = m.rows;
  MatQ r(2 * d, 2 * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      r(i, j) = m(i, j).re;
      r(i, j + d) = -m(i, j).im;
      r(i + d, j) = m(i, j).im;
      r(i + d, j + d) = m(i, j).re;
    }
  return r;
}

std::vector<MatG> skew_hermitian_basis(int n) {
  std::vector<MatG> out;
  for (int k = 0; k < n; ++k) {
    MatG m(n, n);
    m(k, k) = GaussQ::i();
    out.push_back(m);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MatG a(n, n);
      a(i, j) = GaussQ(1);
      a(j, i) = GaussQ(-1);
      out.push_back(a);
      MatG s(n, n);
      s(i, j) = GaussQ::i();
      s(j, i) = GaussQ::i();
      out.push_back(s);
    }
  return out;
}

RealRep realify_skew_hermitian(const std::string& name, const std::vector<MatG>& basis, int n) {
  RealRep r;
  r.name = name;
  r.dim_v = 2 * n;
  for (const auto& m : basis) r.basis.push_back(realify_matrix(m));
  r.form = FormKind::symmetric;
  r.gram = MatQ::identity(2 * n);
  verify_rep(r);
  return r;
}

}  // namespace

RealRep catalog_u_realified(int n) {
  return realify_skew_hermitian("u(" + std::to_string(n) + ")_R", skew_hermitian_basis(n), n);
}

RealRep catalog_su_realified(int n) {
  if (n < 2) throw std::invalid_argument("su(n)_R: need n >= 2");
  std::vector<MatG> basis;
  for (int k = 0; k + 1 < n; ++k) {
    MatG m(n, n);
    m(k, k) = GaussQ::i();
    m(k + 1, k + 1) = -GaussQ::i();
    basis.push_back(m);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MatG a(n, n);
      a(i, j) = GaussQ(1);
      a(j, i) = GaussQ(-1);
      basis.push_back(a);
      MatG s(n, n);
      s(i, j) = GaussQ::i();
      s(j, i) = GaussQ::i();
      basis.push_back(s);
    }
  return realify_skew_hermitian("su(" + std::to_string(n) + ")_R", basis, n);
}

namespace {

/// Basis of compact sp(n) = u(2n) ^ sp(2n,C), as complex 2n x 2n matrices.
std::vector<MatG> compact_sp_basis(int n) {
  int N = 2 * n;
  std::vector<MatG> uN = skew_hermitian_basis(N);
  MatG J(N, N);
  for (int i = 0; i < n; ++i) {
    J(i, n + i) = GaussQ(1);
    J(n + i, i) = GaussQ(-1);
  }
  // Solve X^T J + J X = 0 over the real span of u(2n).
  std::vector<VecG> rows;
  int g = static_cast<int>(uN.size());
  for (int e = 0; e < N * N; ++e) {
    VecG row(g);
    bool nonzero = false;
    for (int k = 0; k < g; ++k) {
      MatG c = uN[k].transpose() * J + J * uN[k];
      row[k] = c.a[e];
      if (!row[k].is_zero()) nonzero = true;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  // The condition matrix is complex but the unknowns are real coefficients:
  // split every row into real and imaginary parts.
  std::vector<VecQ> real_rows;
  for (const auto& row : rows) {
    VecQ re(g), im(g);
    for (int k = 0; k < g; ++k) {
      re[k] = row[k].re;
      im[k] = row[k].im;
    }
    real_rows.push_back(std::move(re));
    real_rows.push_back(std::move(im));
  }
  std::vector<VecQ> coeffs = kernel_basis(real_rows, g);
  std::vector<MatG> out;
  for (const auto& c : coeffs) {
    MatG m(N, N);
    for (int k = 0; k < g; ++k) {
      if (c[k].is_zero()) continue;
      for (size_t e = 0; e < m.a.size(); ++e) m.a[e] += uN[k].a[e] * GaussQ(c[k]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

RealRep catalog_sp_realified(int n) {
  std::vector<MatG> basis = compact_sp_basis(n);
  if (static_cast<int>(basis.size()) != n * (2 * n + 1))
    throw std::logic_error("sp(n)_R: unexpected dimension");
  return realify_skew_hermitian("sp(" + std::to_string(n) + ")_R", basis, 2 * n);
}

RealRep catalog_so2_plus_sp_realified(int n) {
  int N = 2 * n;
  std::vector<MatG> basis;
  MatG iid(N, N);
  for (int k = 0; k < N; ++k) iid(k, k) = GaussQ::i();
  basis.push_back(iid);
  for (auto& m : compact_sp_basis(n)) basis.push_back(std::move(m));
  return realify_skew_hermitian("so(2)+sp(" + std::to_string(n) + ")R", basis, N);
}

// --- octonions and G2 -------------------------------------------------------

namespace {

/// Cayley-Dickson multiplication table for the octonions: mul[i][j] is the
/// signed basis index of e_i e_j, encoded as (index, sign).
struct OctTable {
  int idx[8][8];
  int sign[8][8];
};

OctTable octonion_table() {
  // dim-d Cayley-Dickson algebras for d = 1, 2, 4, 8 over the reals:
  // (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)), conj(a,b) = (conj a, -b).
  struct Alg {
    int dim;
    std::vector<std::vector<VecQ>> mul;  // mul[i][j] = coordinate vector
  };
  Alg cur;
  cur.dim = 1;
  cur.mul = {{VecQ{Rational(1)}}};
  auto conj_vec = [](const VecQ& v) {
    VecQ c = v;
    for (size_t k = 1; k < c.size(); ++k) c[k] = -c[k];
    return c;
  };
  auto mul_vec = [](const Alg& A, const VecQ& x, const VecQ& y) {
    VecQ out(A.dim, Rational(0));
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < A.dim; ++j) {
        if (x[i].is_zero() || y[j].is_zero()) continue;
        for (int k = 0; k < A.dim; ++k) out[k] += x[i] * y[j] * A.mul[i][j][k];
      }
    return out;
  };
  while (cur.dim < 8) {
    Alg nxt;
    nxt.dim = cur.dim * 2;
    nxt.mul.assign(nxt.dim, std::vector<VecQ>(nxt.dim));
    auto lift = [&](const VecQ& lo, const VecQ& hi) {
      VecQ v(nxt.dim, Rational(0));
      for (int k = 0; k < cur.dim; ++k) {
        v[k] = lo[k];
        v[cur.dim + k] = hi[k];
      }
      return v;
    };
    for (int i = 0; i < nxt.dim; ++i)
      for (int j = 0; j < nxt.dim; ++j) {
        VecQ a(cur.dim, Rational(0)), b(cur.dim, Rational(0));
        VecQ c(cur.dim, Rational(0)), d(cur.dim, Rational(0));
        (i < cur.dim ? a[i] : b[i - cur.dim]) = 1;
        (j < cur.dim ? c[j] : d[j - cur.dim]) = 1;
        VecQ lo = mul_vec(cur, a, c);
        VecQ t = mul_vec(cur, conj_vec(d), b);
        for (int k = 0; k < cur.dim; ++k) lo[k] -= t[k];
        VecQ hi = mul_vec(cur, d, a);
        VecQ t2 = mul_vec(cur, b, conj_vec(c));
        for (int k = 0; k < cur.dim; ++k) hi[k] += t2[k];
        nxt.mul[i][j] = lift(lo, hi);
      }
    cur = std::move(nxt);
  }
  OctTable t{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int at = -1;
      for (int k = 0; k < 8; ++k)
        if (!cur.mul[i][j][k].is_zero()) {
          at = k;
          break;
        }
      t.idx[i][j] = at;
      t.sign[i][j] = cur.mul[i][j][at] > 0 ? 1 : -1;
    }
  return t;
}

const OctTable& oct() {
  static OctTable t = octonion_table();
  return t;
}

VecQ oct_mul(const VecQ& x, const VecQ& y) {
  const OctTable& t = oct();
  VecQ out(8, Rational(0));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (x[i].is_zero() || y[j].is_zero()) continue;
      out[t.idx[i][j]] += x[i] * y[j] * Rational(t.sign[i][j]);
    }
  return out;
}

}  // namespace

RealRep catalog_g2_7() {
  const OctTable& t = oct();
  // Derivations of the octonions: D(e_i e_j) = D(e_i) e_j + e_i D(e_j),
  // D(e_0) = 0.  Unknowns: the 8x8 matrix of D, row-major.
  std::vector<VecQ> rows;
  for (int k = 0; k < 8; ++k) {
    VecQ row(64, Rational(0));
    row[static_cast<size_t>(k) * 8 + 0] = 1;  // D e_0 = 0
    rows.push_back(std::move(row));
  }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int p = t.idx[i][j];
      int s = t.sign[i][j];
      // component k of: s D(e_p) - D(e_i) e_j - e_i D(e_j) = 0
      for (int k = 0; k < 8; ++k) {
        VecQ row(64, Rational(0));
        row[static_cast<size_t>(k) * 8 + p] += Rational(s);
        // (D(e_i) e_j)_k = sum_m D_mi (e_m e_j)_k
        for (int m = 0; m < 8; ++m) {
          if (t.idx[m][j] == k) row[static_cast<size_t>(m) * 8 + i] -= Rational(t.sign[m][j]);
          if (t.idx[i][m] == k) row[static_cast<size_t>(m) * 8 + j] -= Rational(t.sign[i][m]);
        }
        bool nz = false;
        for (const auto& x : row)
          if (!x.is_zero()) nz = true;
        if (nz) rows.push_back(std::move(row));
      }
    }
  std::vector<VecQ> ker = kernel_basis(rows, 64);
  if (ker.size() != 14) throw std::logic_error("g2_7: derivation space has wrong dimension");

  RealRep r;
  r.name = "g2_7";
  r.dim_v = 7;
  for (const auto& v : ker) {
    // Derivations kill the real unit and preserve the imaginary part.
    for (int k = 0; k < 8; ++k)
      if (!v[static_cast<size_t>(0) * 8 + k].is_zero())
        throw std::logic_error("g2_7: derivation does not preserve Im(O)");
    MatQ m(7, 7);
    for (int i = 1; i < 8; ++i)
      for (int j = 1; j < 8; ++j) m(i - 1, j - 1) = v[static_cast<size_t>(i) * 8 + j];
    r.basis.push_back(std::move(m));
  }
  r.form = FormKind::symmetric;
  r.gram = MatQ::identity(7);

  // Designate a Cartan pair: a maximal torus of g2 aligned with three
  // disjoint coordinate rotation planes.  Search all pairings of the seven
  // coordinates into three planes plus an axis; the right pairing meets g2
  // in a two-dimensional torus.
  {
    std::vector<MatQ> torus;
    auto rot = [&](int i, int j) {
      MatQ m(7, 7);
      m(i, j) = 1;
      m(j, i) = -1;
      return m;
    };
    std::vector<std::array<std::pair<int, int>, 3>> pairings;
    for (int axis = 0; axis < 7; ++axis) {
      std::vector<int> rest;
      for (int x = 0; x < 7; ++x)
        if (x != axis) rest.push_back(x);
      for (int k = 1; k < 6; ++k) {
        std::vector<int> rem;
        for (int t = 1; t < 6; ++t)
          if (t != k) rem.push_back(rest[t]);
        for (int s = 1; s < 4; ++s) {
          std::array<std::pair<int, int>, 3> pl;
          pl[0] = {rest[0], rest[k]};
          pl[1] = {rem[0], rem[s]};
          std::vector<int> last;
          for (int t = 1; t < 4; ++t)
            if (t != s) last.push_back(rem[t]);
          pl[2] = {last[0], last[1]};
          pairings.push_back(pl);
        }
      }
    }
    for (const auto& planes : pairings) {
      // Solve for combinations of the three plane rotations inside g2.
      RowReducer<Rational> sys(3 + 14);
      for (int e = 0; e < 49; ++e) {
        VecQ row(17, Rational(0));
        bool nz = false;
        for (int c = 0; c < 3; ++c) {
          MatQ R = rot(planes[c].first, planes[c].second);
          if (!R.a[e].is_zero()) {
            row[c] = R.a[e];
            nz = true;
          }
        }
        for (int k = 0; k < 14; ++k)
          if (!r.basis[k].a[e].is_zero()) {
            row[3 + k] = -r.basis[k].a[e];
            nz = true;
          }
        if (nz) sys.add_row(std::move(row));
      }
      std::vector<VecQ> ker = sys.kernel();
      std::vector<MatQ> cand;
      RowReducer<Rational> indep(49);
      for (const auto& v : ker) {
        MatQ m(7, 7);
        for (int c = 0; c < 3; ++c) {
          MatQ R = rot(planes[c].first, planes[c].second);
          for (int e = 0; e < 49; ++e) m.a[e] += v[c] * R.a[e];
        }
        if (m.is_zero()) continue;
        if (indep.add_row(flatten(m))) cand.push_back(std::move(m));
      }
      if (cand.size() >= 2) {
        torus = {cand[0], cand[1]};
        break;
      }
    }
    if (torus.size() != 2) throw std::logic_error("g2_7: could not locate a Cartan pair");
    // Re-base: Cartan first, completed by original basis elements.
    std::vector<MatQ> newbasis = torus;
    SpanSolver<Rational> acc(49, 16);
    acc.add(flatten(torus[0]));
    acc.add(flatten(torus[1]));
    for (const auto& b : r.basis)
      if (acc.add(flatten(b))) newbasis.push_back(b);
    r.basis = std::move(newbasis);
    r.cartan = {0, 1};
  }
  verify_rep(r);
  return r;
}

RealRep catalog_sym2_0_g2_7() {
  RealRep g2 = catalog_g2_7();
  RealRep r = functor_traceless_sym2(g2);
  r.name = "sym2_0(g2_7)";
  return r;
}

// --- complex classical algebras ---------------------------------------------

CplxRep catalog_gl_C(int n) {
  CplxRep r;
  r.name = "gl(" + std::to_string(n) + ",C)";
  r.dim_v = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.basis.push_back(unit_matrix<GaussQ>(n, i, j));
  verify_rep(r);
  return r;
}

CplxRep catalog_sl_C(int n) {
  if (n < 2) throw std::invalid_argument("sl(n,C): need n >= 2");
  CplxRep r;
  r.name = "sl(" + std::to_string(n) + ",C)";
  r.dim_v = n;
  for (int k = 0; k + 1 < n; ++k)
    r.basis.push_back(unit_matrix<GaussQ>(n, k, k) - unit_matrix<GaussQ>(n, k + 1, k + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) r.basis.push_back(unit_matrix<GaussQ>(n, i, j));
  verify_rep(r);
  return r;
}

CplxRep catalog_so_C(int n) {
  if (n < 2) throw std::invalid_argument("so(n,C): need n >= 2");
  CplxRep r;
  r.name = "so(" + std::to_string(n) + ",C)";
  r.dim_v = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      r.basis.push_back(unit_matrix<GaussQ>(n, i, j) - unit_matrix<GaussQ>(n, j, i));
  r.form = FormKind::symmetric;
  r.gram = MatG::identity(n);
  verify_rep(r);
  return r;
}

CplxRep catalog_sp_C(int n) {
  if (n < 1) throw std::invalid_argument("sp(n,C): need n >= 1");
  int N = 2 * n;
  CplxRep r;
  r.name = "sp(" + std::to_string(n) + ",C)";
  r.dim_v = N;
  auto E = [&](int i, int j) { return unit_matrix<GaussQ>(N, i, j); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.basis.push_back(E(i, j) - E(n + j, n + i));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      r.basis.push_back(E(i, n + j) + E(j, n + i));
      r.basis.push_back(E(n + i, j) + E(n + j, i));
    }
  r.form = FormKind::antisymmetric;
  MatG J(N, N);
  for (int i = 0; i < n; ++i) {
    J(i, n + i) = GaussQ(1);
    J(n + i, i) = GaussQ(-1);
  }
  r.gram = J;
  verify_rep(r);
  return r;
}

CplxRep catalog_co_C(int n) {
  CplxRep r = catalog_so_C(n);
  r.name = "co(" + std::to_string(n) + ",C)";
  r.basis.insert(r.basis.begin(), MatG::identity(n));
  r.form = FormKind::none;  // the form is only conformally invariant
  r.gram = MatG();
  verify_rep(r);
  return r;
}

CplxRep catalog_cid_plus_sp_C(int n) {
  CplxRep r = catalog_sp_C(n);
  r.name = "cid+sp(" + std::to_string(n) + ",C)";
  r.basis.insert(r.basis.begin(), MatG::identity(2 * n));
  r.form = FormKind::none;
  r.gram = MatG();
  verify_rep(r);
  return r;
}

// --- adjoint representations -------------------------------------------------

namespace {

struct ModelAlgebra {
  std::vector<MatQ> basis;  // faithful matrix model, Cartan elements first
  int cartan_count = 0;
};

ModelAlgebra split_sl(int rank) {
  int N = rank + 1;
  ModelAlgebra m;
  for (int k = 0; k + 1 < N; ++k)
    m.basis.push_back(unit_matrix<Rational>(N, k, k) - unit_matrix<Rational>(N, k + 1, k + 1));
  m.cartan_count = rank;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i != j) m.basis.push_back(unit_matrix<Rational>(N, i, j));
  return m;
}

ModelAlgebra split_so(int N) {  // split so(N) w.r.t. the antidiagonal form
  ModelAlgebra m;
  int r = N / 2;
  auto sigma_i = [&](int i) { return N - 1 - i; };
  for (int i = 0; i < r; ++i)
    m.basis.push_back(unit_matrix<Rational>(N, i, i) -
                      unit_matrix<Rational>(N, sigma_i(i), sigma_i(i)));
  m.cartan_count = r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      int si = sigma_i(j), sj = sigma_i(i);
      if (si == i && sj == j) continue;           // forced zero entry
      if (std::make_pair(si, sj) < std::make_pair(i, j)) continue;  // orbit dedup
      m.basis.push_back(unit_matrix<Rational>(N, i, j) - unit_matrix<Rational>(N, si, sj));
    }
  return m;
}

ModelAlgebra split_sp(int rank) {
  int N = 2 * rank;
  ModelAlgebra m;
  auto E = [&](int i, int j) { return unit_matrix<Rational>(N, i, j); };
  for (int i = 0; i < rank; ++i) m.basis.push_back(E(i, i) - E(rank + i, rank + i));
  m.cartan_count = rank;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (i != j) m.basis.push_back(E(i, j) - E(rank + j, rank + i));
  for (int i = 0; i < rank; ++i)
    for (int j = i; j < rank; ++j) {
      m.basis.push_back(E(i, rank + j) + E(j, rank + i));
      m.basis.push_back(E(rank + i, j) + E(rank + j, i));
    }
  return m;
}

// Octonion-hermitian 3x3 Jordan algebra: basis and symmetrized product.
struct JordanAlgebra {
  int dim = 27;
  // basis vectors are 3x3 octonion matrices; store structure constants of
  // x o y = (xy + yx)/2 in the 27-dim coordinate space.
  std::vector<std::vector<VecQ>> mul;
  std::vector<VecQ> trace_form;  // <x,y> = tr(x o y) as a Gram matrix
};

JordanAlgebra jordan_27() {
  using OMat = std::array<std::array<VecQ, 3>, 3>;
  auto zero_oct = [] { return VecQ(8, Rational(0)); };
  auto zero_mat = [&] {
    OMat m;
    for (auto& row : m)
      for (auto& x : row) x = zero_oct();
    return m;
  };
  std::vector<OMat> basis;
  for (int d = 0; d < 3; ++d) {
    OMat m = zero_mat();
    m[d][d][0] = 1;
    basis.push_back(m);
  }
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& p : pairs)
    for (int a = 0; a < 8; ++a) {
      OMat m = zero_mat();
      m[p[0]][p[1]][a] = 1;
      m[p[1]][p[0]][a] = 1;
      if (a > 0) m[p[1]][p[0]][a] = -1;  // hermitian: conjugate below diagonal
      basis.push_back(m);
    }
  auto matmul = [&](const OMat& x, const OMat& y) {
    OMat out = zero_mat();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          VecQ prod = oct_mul(x[i][k], y[k][j]);
          for (int t = 0; t < 8; ++t) out[i][j][t] += prod[t];
        }
    return out;
  };
  auto to_coords = [&](const OMat& m) {
    VecQ c(27, Rational(0));
    for (int d = 0; d < 3; ++d) c[d] = m[d][d][0];
    int at = 3;
    for (const auto& p : pairs)
      for (int a = 0; a < 8; ++a) c[at++] = m[p[0]][p[1]][a];
    return c;
  };
  JordanAlgebra J;
  J.mul.assign(27, std::vector<VecQ>(27));
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j <= i; ++j) {
      OMat xy = matmul(basis[i], basis[j]);
      OMat yx = matmul(basis[j], basis[i]);
      OMat sym = zero_mat();
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          for (int t = 0; t < 8; ++t) sym[a][b][t] = (xy[a][b][t] + yx[a][b][t]) / 2;
      VecQ c = to_coords(sym);
      J.mul[i][j] = c;
      J.mul[j][i] = c;
    }
  J.trace_form.assign(27, VecQ(27, Rational(0)));
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 27; ++j)
      J.trace_form[i][j] = J.mul[i][j][0] + J.mul[i][j][1] + J.mul[i][j][2];
  return J;
}

/// Derivations of the Jordan algebra: the compact f4 acting on 27 dims.
std::vector<MatQ> f4_derivations() {
  JordanAlgebra J = jordan_27();
  RowReducer<Rational> red(27 * 27);
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j <= i; ++j) {
      const VecQ& prod = J.mul[i][j];
      for (int k = 0; k < 27; ++k) {
        VecQ row(27 * 27, Rational(0));
        // D(x o y)_k = sum_m prod_m D_km
        for (int m = 0; m < 27; ++m)
          if (!prod[m].is_zero()) row[static_cast<size_t>(k) * 27 + m] += prod[m];
        // (D x o y)_k = sum_m D_mi (b_m o b_j)_k, similarly for x o D y
        for (int m = 0; m < 27; ++m) {
          if (!J.mul[m][j][k].is_zero()) row[static_cast<size_t>(m) * 27 + i] -= J.mul[m][j][k];
          if (!J.mul[i][m][k].is_zero()) row[static_cast<size_t>(m) * 27 + j] -= J.mul[i][m][k];
        }
        bool nz = false;
        for (const auto& x : row)
          if (!x.is_zero()) {
            nz = true;
            break;
          }
        if (nz) red.add_row(std::move(row));
      }
    }
  std::vector<VecQ> ker = red.kernel();
  if (ker.size() != 52) throw std::logic_error("f4: derivation space has wrong dimension");
  std::vector<MatQ> out;
  for (const auto& v : ker) {
    MatQ m(27, 27);
    for (int i = 0; i < 27; ++i)
      for (int j = 0; j < 27; ++j) m(i, j) = v[static_cast<size_t>(i) * 27 + j];
    out.push_back(std::move(m));
  }
  return out;
}

/// Compact e6 acting on the 27-dim Jordan algebra: derivations plus the
/// multiplications by traceless elements (Chevalley-Schafer construction).
std::vector<MatQ> e6_model() {
  JordanAlgebra J = jordan_27();
  std::vector<MatQ> out = f4_derivations();
  // L_x for x in the traceless part: basis b_0 - b_1, b_1 - b_2, off-diagonals.
  auto mult_op = [&](const VecQ& x) {
    MatQ m(27, 27);
    for (int j = 0; j < 27; ++j)
      for (int i = 0; i < 27; ++i) {
        Rational s(0);
        for (int t = 0; t < 27; ++t)
          if (!x[t].is_zero()) s += x[t] * J.mul[t][j][i];
        m(i, j) = s;
      }
    return m;
  };
  for (int k = 0; k < 26; ++k) {
    VecQ x(27, Rational(0));
    if (k < 2) {
      x[k] = 1;
      x[k + 1] = -1;
    } else {
      x[k + 1] = 1;
    }
    out.push_back(mult_op(x));
  }
  if (out.size() != 78) throw std::logic_error("e6: wrong dimension");
  return out;
}

ModelAlgebra model_for(char family, int rank) {
  ModelAlgebra m;
  switch (family) {
    case 'A': return split_sl(rank);
    case 'B': return split_so(2 * rank + 1);
    case 'C': return split_sp(rank);
    case 'D': return split_so(2 * rank);
    case 'G': {
      RealRep g2 = catalog_g2_7();
      m.basis = g2.basis;
      m.cartan_count = 2;
      return m;
    }
    case 'F': {
      m.basis = f4_derivations();
      m.cartan_count = 0;
      return m;
    }
    case 'E': {
      if (rank != 6)
        throw std::invalid_argument("adjoint(E," + std::to_string(rank) +
                                    "): matrix model not provided at desk scale");
      m.basis = e6_model();
      m.cartan_count = 0;
      return m;
    }
  }
  throw std::invalid_argument("adjoint: unknown family");
}

}  // namespace

RealRep catalog_adjoint(char family, int rank) {
  // Validates the (family, rank) pair.
  RootSystem::build(family, rank);
  ModelAlgebra model = model_for(family, rank);
  int g = static_cast<int>(model.basis.size());
  int n = model.basis[0].rows;

  SpanSolver<Rational> solver(n * n, g);
  for (const auto& b : model.basis)
    if (!solver.add(flatten(b))) throw std::logic_error("adjoint: model basis dependent");

  // Structure constants; closure of the model is verified here.
  std::vector<std::vector<VecQ>> c(g, std::vector<VecQ>(g));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < i; ++j) {
      auto coords = solver.coords(flatten(bracket(model.basis[i], model.basis[j])));
      if (!coords) throw std::logic_error("adjoint: model not closed");
      c[i][j] = *coords;
      c[j][i] = *coords;
      for (auto& x : c[j][i]) x = -x;
    }
  for (int i = 0; i < g; ++i) c[i][i] = VecQ(g, Rational(0));

  RealRep r;
  r.name = "adjoint(" + std::string(1, family) + "," + std::to_string(rank) + ")";
  r.dim_v = g;
  for (int i = 0; i < g; ++i) {
    MatQ ad(g, g);
    for (int j = 0; j < g; ++j)
      for (int k = 0; k < g; ++k) ad(k, j) = c[i][j][k];
    r.basis.push_back(std::move(ad));
  }
  // Killing form.
  MatQ K(g, g);
  for (int a = 0; a < g; ++a)
    for (int b = a; b < g; ++b) {
      Rational s = trace(r.basis[a] * r.basis[b]);
      K(a, b) = s;
      K(b, a) = s;
    }
  r.form = FormKind::symmetric;
  r.gram = K;
  for (int i = 0; i < model.cartan_count; ++i) r.cartan.push_back(i);
  if (rank <= 4) verify_rep(r);
  return r;
}

RealRep block_sum(const RealRep& a, const RealRep& b, const std::string& name) {
  if (a.form != FormKind::symmetric || b.form != FormKind::symmetric)
    throw std::invalid_argument("block_sum: both summands need symmetric forms");
  RealRep r;
  r.name = name;
  r.dim_v = a.dim_v + b.dim_v;
  for (const auto& m : a.basis) {
    MatQ e(r.dim_v, r.dim_v);
    for (int i = 0; i < a.dim_v; ++i)
      for (int j = 0; j < a.dim_v; ++j) e(i, j) = m(i, j);
    r.basis.push_back(std::move(e));
  }
  for (const auto& m : b.basis) {
    MatQ e(r.dim_v, r.dim_v);
    for (int i = 0; i < b.dim_v; ++i)
      for (int j = 0; j < b.dim_v; ++j) e(a.dim_v + i, a.dim_v + j) = m(i, j);
    r.basis.push_back(std::move(e));
  }
  r.form = FormKind::symmetric;
  r.gram = MatQ(r.dim_v, r.dim_v);
  for (int i = 0; i < a.dim_v; ++i)
    for (int j = 0; j < a.dim_v; ++j) r.gram(i, j) = a.gram(i, j);
  for (int i = 0; i < b.dim_v; ++i)
    for (int j = 0; j < b.dim_v; ++j) r.gram(a.dim_v + i, a.dim_v + j) = b.gram(i, j);
  verify_rep(r);
  return r;
}

// --- functors ----------------------------------------------------------------

template <class F>
Rep<F> functor_dual(const Rep<F>& r) {
  Rep<F> d;
  d.name = "dual(" + r.name + ")";
  d.dim_v = r.dim_v;
  for (const auto& b : r.basis) d.basis.push_back(b.transpose() * F(-1));
  if (r.form != FormKind::none) {
    d.form = r.form;
    d.gram = inverse(r.gram);
  }
  verify_rep(d);
  return d;
}

template <class F>
Rep<F> functor_tensor(const Rep<F>& a, const Rep<F>& b) {
  if (a.dim_g() != b.dim_g())
    throw std::invalid_argument("functor_tensor: factor algebras must share a basis list");
  int n = a.dim_v, m = b.dim_v;
  if (n * m > kFunctorDimCap) throw CapExceeded("functor_tensor: dimension cap exceeded");
  Rep<F> t;
  t.name = "tensor(" + a.name + "," + b.name + ")";
  t.dim_v = n * m;
  for (int g = 0; g < a.dim_g(); ++g) {
    Mat<F> x(n * m, n * m);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (!is_zero(a.basis[g](i, k)))
          for (int j = 0; j < m; ++j) x(i * m + j, k * m + j) += a.basis[g](i, k);
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l)
        if (!is_zero(b.basis[g](j, l)))
          for (int i = 0; i < n; ++i) x(i * m + j, i * m + l) += b.basis[g](j, l);
    t.basis.push_back(std::move(x));
  }
  if (a.form != FormKind::none && b.form != FormKind::none) {
    t.form = (a.form == b.form) ? FormKind::symmetric : FormKind::antisymmetric;
    t.gram = Mat<F>(n * m, n * m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < m; ++l) t.gram(i * m + j, k * m + l) = a.gram(i, k) * b.gram(j, l);
  }
  verify_rep(t);
  return t;
}

namespace {

// Index helpers for the symmetric/alternating square bases.
struct PairIndex {
  std::vector<std::pair<int, int>> list;
  std::vector<std::vector<int>> at;
  PairIndex(int n, bool with_diagonal) : at(n, std::vector<int>(n, -1)) {
    for (int i = 0; i < n; ++i)
      for (int j = with_diagonal ? i : i + 1; j < n; ++j) {
        at[i][j] = static_cast<int>(list.size());
        list.push_back({i, j});
      }
  }
};

}  // namespace

template <class F>
Rep<F> functor_sym2(const Rep<F>& r) {
  int n = r.dim_v;
  PairIndex P(n, true);
  int N = static_cast<int>(P.list.size());
  if (N > kFunctorDimCap) throw CapExceeded("functor_sym2: dimension cap exceeded");
  Rep<F> s;
  s.name = "sym2(" + r.name + ")";
  s.dim_v = N;
  // basis t_{ij} = e_i x e_j + e_j x e_i (i<j), t_{ii} = e_i x e_i.
  for (const auto& X : r.basis) {
    Mat<F> m(N, N);
    for (int p = 0; p < N; ++p) {
      auto [i, j] = P.list[p];
      auto accum = [&](int a, int b, const F& coeff) {
        // contribution coeff * (e_a x e_b + e_b x e_a), not yet normalized
        if (a == b) {
          m(P.at[a][a], p) += coeff * F(2);
        } else {
          int q = P.at[std::min(a, b)][std::max(a, b)];
          m(q, p) += coeff;
        }
      };
      if (i == j) {
        // X.t_ii = sum_k X_ki (e_k x e_i + e_i x e_k)
        for (int k = 0; k < n; ++k)
          if (!is_zero(X(k, i))) accum(k, i, X(k, i));
      } else {
        for (int k = 0; k < n; ++k) {
          if (!is_zero(X(k, i))) accum(k, j, X(k, i));
          if (!is_zero(X(k, j))) accum(i, k, X(k, j));
        }
      }
    }
    s.basis.push_back(std::move(m));
  }
  if (r.form != FormKind::none) {
    // (G x G) evaluated on the tensor expansions of t_p; symmetric for either
    // kind of base form.
    s.form = FormKind::symmetric;
    s.gram = Mat<F>(N, N);
    auto G = [&](int i, int j) { return r.gram(i, j); };
    auto expansion = [](std::pair<int, int> pr) {
      std::vector<std::pair<int, int>> terms{{pr.first, pr.second}};
      if (pr.first != pr.second) terms.push_back({pr.second, pr.first});
      return terms;
    };
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < N; ++q) {
        F val(0);
        for (auto [a, b] : expansion(P.list[p]))
          for (auto [c, d] : expansion(P.list[q])) val += G(a, c) * G(b, d);
        s.gram(p, q) = val;
      }
  }
  verify_rep(s);
  return s;
}

template <class F>
Rep<F> functor_alt2(const Rep<F>& r) {
  int n = r.dim_v;
  PairIndex P(n, false);
  int N = static_cast<int>(P.list.size());
  if (N > kFunctorDimCap) throw CapExceeded("functor_alt2: dimension cap exceeded");
  Rep<F> s;
  s.name = "alt2(" + r.name + ")";
  s.dim_v = N;
  for (const auto& X : r.basis) {
    Mat<F> m(N, N);
    for (int p = 0; p < N; ++p) {
      auto [i, j] = P.list[p];
      auto accum = [&](int a, int b, F coeff) {
        if (a == b) return;
        if (a > b) {
          std::swap(a, b);
          coeff = -coeff;
        }
        m(P.at[a][b], p) += coeff;
      };
      for (int k = 0; k < n; ++k) {
        if (!is_zero(X(k, i))) accum(k, j, X(k, i));
        if (!is_zero(X(k, j))) accum(i, k, X(k, j));
      }
    }
    s.basis.push_back(std::move(m));
  }
  if (r.form != FormKind::none) {
    s.form = FormKind::symmetric;  // for either kind of base form
    s.gram = Mat<F>(N, N);
    auto G = [&](int i, int j) { return r.gram(i, j); };
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < N; ++q) {
        auto [i, j] = P.list[p];
        auto [k, l] = P.list[q];
        s.gram(p, q) = G(i, k) * G(j, l) - G(i, l) * G(j, k);
      }
  }
  verify_rep(s);
  return s;
}

template <class F>
Rep<F> functor_traceless_sym2(const Rep<F>& r) {
  if (r.form == FormKind::none)
    throw std::invalid_argument("functor_traceless_sym2: base form required");
  Rep<F> s2 = functor_sym2(r);
  int n = r.dim_v;
  PairIndex P(n, true);
  int N = s2.dim_v;
  // trace functional tau(t_ij) = G(e_i, e_j) (up to the symmetrization factor)
  Vec<F> tau(N, F(0));
  for (int p = 0; p < N; ++p) {
    auto [i, j] = P.list[p];
    tau[p] = r.gram(i, j) * (i == j ? F(1) : F(2));
  }
  std::vector<Vec<F>> ker = kernel_basis<F>({tau}, N);
  int M = static_cast<int>(ker.size());

  SpanSolver<F> span(N, M);
  for (const auto& v : ker) span.add(v);

  Rep<F> s;
  s.name = "sym2_0(" + r.name + ")";
  s.dim_v = M;
  for (const auto& X : s2.basis) {
    Mat<F> m(M, M);
    for (int q = 0; q < M; ++q) {
      Vec<F> img = X * ker[q];
      auto c = span.coords(img);
      if (!c) throw std::logic_error("functor_traceless_sym2: subspace not invariant");
      for (int i = 0; i < M; ++i) m(i, q) = (*c)[i];
    }
    s.basis.push_back(std::move(m));
  }
  s.form = FormKind::symmetric;
  s.gram = Mat<F>(M, M);
  for (int p = 0; p < M; ++p)
    for (int q = 0; q < M; ++q) {
      F val(0);
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
          if (is_zero(ker[p][a]) || is_zero(ker[q][b])) continue;
          val += ker[p][a] * ker[q][b] * s2.gram(a, b);
        }
      s.gram(p, q) = val;
    }
  verify_rep(s);
  return s;
}

template Rep<Rational> functor_dual<Rational>(const Rep<Rational>&);
template Rep<GaussQ> functor_dual<GaussQ>(const Rep<GaussQ>&);
template Rep<Rational> functor_tensor<Rational>(const Rep<Rational>&, const Rep<Rational>&);
template Rep<GaussQ> functor_tensor<GaussQ>(const Rep<GaussQ>&, const Rep<GaussQ>&);
template Rep<Rational> functor_sym2<Rational>(const Rep<Rational>&);
template Rep<GaussQ> functor_sym2<GaussQ>(const Rep<GaussQ>&);
template Rep<Rational> functor_alt2<Rational>(const Rep<Rational>&);
template Rep<GaussQ> functor_alt2<GaussQ>(const Rep<GaussQ>&);
template Rep<Rational> functor_traceless_sym2<Rational>(const Rep<Rational>&);
template Rep<GaussQ> functor_traceless_sym2<GaussQ>(const Rep<GaussQ>&);

CplxRep complexify(const RealRep& r) {
  CplxRep c;
  c.name = r.name + "^C";
  c.dim_v = r.dim_v;
  for (const auto& b : r.basis) c.basis.push_back(to_gauss(b));
  c.form = r.form;
  if (r.form != FormKind::none) c.gram = to_gauss(r.gram);
  c.cartan = r.cartan;
  return c;
}

RealRep realify(const CplxRep& r) {
  RealRep out;
  out.name = "realify(" + r.name + ")";
  out.dim_v = 2 * r.dim_v;
  for (const auto& b : r.basis) out.basis.push_back(realify_matrix(b));
  if (r.form != FormKind::none) {
    // Re of the complex form in coordinates (Re v, Im v).
    int d = r.dim_v;
    out.form = r.form;
    out.gram = MatQ(2 * d, 2 * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        out.gram(i, j) = r.gram(i, j).re;
        out.gram(i, j + d) = -r.gram(i, j).im;
        out.gram(i + d, j) = -r.gram(i, j).im;
        out.gram(i + d, j + d) = -r.gram(i, j).re;
      }
  }
  verify_rep(out);
  return out;
}

// --- commutant, types, forms ---------------------------------------------------

template <class F>
std::vector<Mat<F>> commutant(const Rep<F>& r) {
  int n = r.dim_v;
  RowReducer<F> red(n * n);
  bool early = false;
  for (const auto& B : r.basis) {
    // rows of [X, B] = 0: entry (i,j): sum_k X_ik B_kj - B_ik X_kj = 0
    for (int i = 0; i < n && !early; ++i)
      for (int j = 0; j < n; ++j) {
        Vec<F> row(static_cast<size_t>(n) * n, F(0));
        bool nz = false;
        for (int k = 0; k < n; ++k) {
          if (!is_zero(B(k, j))) {
            row[static_cast<size_t>(i) * n + k] += B(k, j);
            nz = true;
          }
          if (!is_zero(B(i, k))) {
            row[static_cast<size_t>(k) * n + j] -= B(i, k);
            nz = true;
          }
        }
        if (nz) red.add_row(std::move(row));
        if (red.rank() == n * n - 1) {
          early = true;  // identity always commutes, so the kernel is C.Id
          break;
        }
      }
    if (early) break;
  }
  std::vector<Mat<F>> out;
  if (early) {
    out.push_back(Mat<F>::identity(n));
    return out;
  }
  for (const auto& v : red.kernel()) {
    Mat<F> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = v[static_cast<size_t>(i) * n + j];
    out.push_back(std::move(m));
  }
  return out;
}

template std::vector<MatQ> commutant<Rational>(const RealRep&);
template std::vector<MatG> commutant<GaussQ>(const CplxRep&);

ModuleType classify_type(const RealRep& r) {
  IrreducibilityResult irr = is_irreducible(r);
  if (!irr.irreducible)
    throw std::invalid_argument(r.name + ": type classification needs an irreducible module");
  size_t d = commutant(r).size();
  switch (d) {
    case 1: return ModuleType::real;
    case 2: return ModuleType::complex;
    case 4: return ModuleType::quaternionic;
  }
  throw std::logic_error(r.name + ": commutant dimension " + std::to_string(d) +
                         " contradicts the Schur trichotomy");
}

template <class F>
BilinearForms invariant_bilinear_forms(const Rep<F>& r) {
  int n = r.dim_v;
  RowReducer<F> red(n * n);
  for (const auto& X : r.basis) {
    // X^T M + M X = 0: entry (i,j): sum_k X_ki M_kj + M_ik X_kj
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec<F> row(static_cast<size_t>(n) * n, F(0));
        bool nz = false;
        for (int k = 0; k < n; ++k) {
          if (!is_zero(X(k, i))) {
            row[static_cast<size_t>(k) * n + j] += X(k, i);
            nz = true;
          }
          if (!is_zero(X(k, j))) {
            row[static_cast<size_t>(i) * n + k] += X(k, j);
            nz = true;
          }
        }
        if (nz) red.add_row(std::move(row));
      }
  }
  BilinearForms out;
  RowReducer<F> sym(n * n), asym(n * n);
  for (const auto& v : red.kernel()) {
    Mat<F> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = v[static_cast<size_t>(i) * n + j];
    Mat<F> ms = m + m.transpose();
    Mat<F> ma = m - m.transpose();
    if (!ms.is_zero() && sym.add_row(flatten(ms))) {
      if constexpr (FieldTraits<F>::is_complex)
        out.symmetric_C.push_back(ms);
      else
        out.symmetric_R.push_back(ms);
      ++out.dim_symmetric;
    }
    if (!ma.is_zero() && asym.add_row(flatten(ma))) {
      if constexpr (FieldTraits<F>::is_complex)
        out.antisymmetric_C.push_back(ma);
      else
        out.antisymmetric_R.push_back(ma);
      ++out.dim_antisymmetric;
    }
  }
  return out;
}

template BilinearForms invariant_bilinear_forms<Rational>(const RealRep&);
template BilinearForms invariant_bilinear_forms<GaussQ>(const CplxRep&);

std::vector<MatG> invariant_sesquilinear_forms(const CplxRep& r) {
  int n = r.dim_v;
  // Unknowns: real and imaginary parts of M (2 n^2 real numbers).
  RowReducer<Rational> red(2 * n * n);
  auto P = [&](int i, int j) { return static_cast<size_t>(i) * n + j; };
  auto Q = [&](int i, int j) { return static_cast<size_t>(n) * n + static_cast<size_t>(i) * n + j; };
  for (const auto& X : r.basis) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        VecQ re_row(2 * n * n, Rational(0)), im_row(2 * n * n, Rational(0));
        for (int k = 0; k < n; ++k) {
          const GaussQ& a = X(k, i);  // (X^T M)_ij = sum_k X_ki M_kj
          if (!a.is_zero()) {
            re_row[P(k, j)] += a.re;
            re_row[Q(k, j)] -= a.im;
            im_row[P(k, j)] += a.im;
            im_row[Q(k, j)] += a.re;
          }
          const GaussQ b = X(k, j).conj();  // (M conj(X))_ij = sum_k M_ik conj(X_kj)
          if (!b.is_zero()) {
            re_row[P(i, k)] += b.re;
            re_row[Q(i, k)] -= b.im;
            im_row[P(i, k)] += b.im;
            im_row[Q(i, k)] += b.re;
          }
        }
        red.add_row(std::move(re_row));
        red.add_row(std::move(im_row));
      }
  }
  std::vector<MatG> out;
  for (const auto& v : red.kernel()) {
    MatG m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = GaussQ(v[P(i, j)], v[Q(i, j)]);
    out.push_back(std::move(m));
  }
  return out;
}

IrreducibilityResult is_irreducible(const RealRep& r) {
  int n = r.dim_v;
  std::vector<VecQ> seeds;
  for (int i = 0; i < n; ++i) {
    VecQ v(n, Rational(0));
    v[i] = 1;
    seeds.push_back(std::move(v));
  }
  VecQ mix(n);
  for (int i = 0; i < n; ++i) mix[i] = i + 1;
  seeds.push_back(mix);
  for (const auto& seed : seeds) {
    RowReducer<Rational> red(n);
    std::deque<VecQ> queue;
    red.add_row(seed);
    queue.push_back(seed);
    while (!queue.empty() && red.rank() < n) {
      VecQ v = queue.front();
      queue.pop_front();
      for (const auto& B : r.basis) {
        VecQ w = B * v;
        if (red.add_row(w)) {
          queue.push_back(w);
          if (red.rank() == n) break;
        }
      }
    }
    if (red.rank() < n) return {false, red.basis()};
  }
  return {true, {}};
}

IsotypicDecomposition isotypic_decomposition(const RealRep& r) {
  if (r.form != FormKind::symmetric)
    throw std::invalid_argument("isotypic_decomposition: symmetric form required");
  int n = r.dim_v;
  IsotypicDecomposition out;

  // Trivial part: common kernel of the basis matrices.
  {
    std::vector<VecQ> rows;
    for (const auto& B : r.basis)
      for (int i = 0; i < n; ++i) {
        VecQ row(n);
        for (int j = 0; j < n; ++j) row[j] = B(i, j);
        rows.push_back(std::move(row));
      }
    out.trivial = kernel_basis(rows, n);
  }

  RowReducer<Rational> covered(n);
  for (const auto& v : out.trivial) covered.add_row(v);

  auto spin_up = [&](const VecQ& seed) {
    RowReducer<Rational> red(n);
    std::deque<VecQ> queue;
    red.add_row(seed);
    queue.push_back(seed);
    while (!queue.empty()) {
      VecQ v = queue.front();
      queue.pop_front();
      for (const auto& B : r.basis) {
        VecQ w = B * v;
        if (red.add_row(w)) queue.push_back(w);
      }
    }
    return red.basis();
  };

  for (int i = 0; i < n; ++i) {
    VecQ e(n, Rational(0));
    e[i] = 1;
    if (covered.contains(e)) continue;
    std::vector<VecQ> block = spin_up(e);
    for (const auto& v : block)
      if (!covered.add_row(v) && !covered.contains(v))
        throw std::logic_error("isotypic_decomposition: overlapping invariant subspaces");
    out.blocks.push_back(std::move(block));
  }

  // Ideal attached to each block: elements acting by zero on all others.
  int g = r.dim_g();
  for (size_t b = 0; b < out.blocks.size(); ++b) {
    std::vector<int> ideal;
    for (int a = 0; a < g; ++a) {
      bool kills_others = true;
      for (size_t c = 0; c < out.blocks.size() && kills_others; ++c) {
        if (c == b) continue;
        for (const auto& v : out.blocks[c])
          if (!is_zero_vec(r.basis[a] * v)) {
            kills_others = false;
            break;
          }
      }
      for (const auto& v : out.trivial)
        if (!is_zero_vec(r.basis[a] * v)) kills_others = false;
      if (kills_others) ideal.push_back(a);
    }
    out.ideal_of_block.push_back(std::move(ideal));
  }
  return out;
}

// --- catalog dispatch ----------------------------------------------------------

namespace {

bool parse_int_arg(const std::string& s, const std::string& prefix, const std::string& suffix,
                   int& n) {
  if (s.size() <= prefix.size() + suffix.size()) return false;
  if (s.compare(0, prefix.size(), prefix) != 0) return false;
  if (s.compare(s.size() - suffix.size(), suffix.size(), suffix) != 0) return false;
  std::string mid = s.substr(prefix.size(), s.size() - prefix.size() - suffix.size());
  if (mid.empty()) return false;
  for (char c : mid)
    if (!isdigit(static_cast<unsigned char>(c))) return false;
  n = std::stoi(mid);
  return true;
}

}  // namespace

AnyRep catalog(const std::string& name) {
  int n = 0;
  if (parse_int_arg(name, "so(", ")", n)) return catalog_so(n);
  if (parse_int_arg(name, "so(", ",C)", n)) return catalog_so_C(n);
  if (parse_int_arg(name, "u(", ")_R", n)) return catalog_u_realified(n);
  if (parse_int_arg(name, "su(", ")_R", n)) return catalog_su_realified(n);
  if (parse_int_arg(name, "sp(", ")_R", n)) return catalog_sp_realified(n);
  if (parse_int_arg(name, "gl(", ",C)", n)) return catalog_gl_C(n);
  if (parse_int_arg(name, "sl(", ",C)", n)) return catalog_sl_C(n);
  if (parse_int_arg(name, "sp(", ",C)", n)) return catalog_sp_C(n);
  if (parse_int_arg(name, "co(", ",C)", n)) return catalog_co_C(n);
  if (parse_int_arg(name, "cid+sp(", ",C)", n)) return catalog_cid_plus_sp_C(n);
  if (parse_int_arg(name, "so(2)+sp(", ")R", n)) return catalog_so2_plus_sp_realified(n);
  if (name == "g2_7") return catalog_g2_7();
  if (name == "sym2_0(g2_7)") return catalog_sym2_0_g2_7();
  if (name.rfind("adjoint(", 0) == 0 && name.size() >= 12 && name.back() == ')') {
    char fam = name[8];
    int rank = 0;
    if (parse_int_arg(name.substr(10), "", ")", rank) && name[9] == ',')
      return catalog_adjoint(fam, rank);
  }
  if (parse_int_arg(name, "sym2_0(so(", "))", n)) return functor_traceless_sym2(catalog_so(n));
  if (parse_int_arg(name, "sym2(so(", "))", n)) return functor_sym2(catalog_so(n));
  if (parse_int_arg(name, "alt2(gl(", ",C))", n)) return functor_alt2(catalog_gl_C(n));
  if (parse_int_arg(name, "sym2(gl(", ",C))", n)) return functor_sym2(catalog_gl_C(n));
  throw std::invalid_argument("catalog: unknown entry '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {
      "so(n)",           "so(n,C)",       "u(n)_R",        "su(n)_R",      "sp(n)_R",
      "gl(n,C)",         "sl(n,C)",       "sp(n,C)",       "co(n,C)",      "cid+sp(n,C)",
      "so(2)+sp(n)R",    "g2_7",          "sym2_0(g2_7)",  "adjoint(A,n)", "adjoint(B,n)",
      "adjoint(C,n)",    "adjoint(D,n)",  "adjoint(E,6)",  "adjoint(F,4)", "adjoint(G,2)",
      "sym2(so(n))",     "sym2_0(so(n))", "alt2(gl(n,C))", "sym2(gl(n,C))",
  };
}

}  // namespace wb
