#include "wb/curvature.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wb {

namespace {

struct PairList {
  std::vector<std::pair<int, int>> list;
  std::vector<std::vector<int>> at;
  explicit PairList(int n) : at(n, std::vector<int>(n, -1)) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        at[i][j] = static_cast<int>(list.size());
        list.push_back({i, j});
      }
  }
};

template <class F>
void check_cap(const std::string& what, size_t dim, size_t cap) {
  if (dim > cap)
    throw CapExceeded(what + ": ambient dimension " + std::to_string(dim) + " exceeds cap " +
                      std::to_string(cap));
}

/// Streams the cyclic-Bianchi rows of B_h: one scalar row per triple i<j<k.
template <class F, class Consumer>
void stream_bh_rows(const Rep<F>& r, Consumer&& consume) {
  const int n = r.dim_v;
  const int g = r.dim_g();
  std::vector<Mat<F>> M;  // M_a(i,j) = h(B_a e_i, e_j)
  for (const auto& B : r.basis) M.push_back(B.transpose() * r.gram);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec<F> row(static_cast<size_t>(n) * g, F(0));
        bool nz = false;
        for (int a = 0; a < g; ++a) {
          const F& c1 = M[a](j, k);
          const F& c2 = M[a](k, i);
          const F& c3 = M[a](i, j);
          if (!is_zero(c1)) {
            row[static_cast<size_t>(i) * g + a] += c1;
            nz = true;
          }
          if (!is_zero(c2)) {
            row[static_cast<size_t>(j) * g + a] += c2;
            nz = true;
          }
          if (!is_zero(c3)) {
            row[static_cast<size_t>(k) * g + a] += c3;
            nz = true;
          }
        }
        if (nz) consume(std::move(row));
      }
}

/// Streams the first-Bianchi rows of K: dim_v rows per triple i<j<k.
template <class F, class Consumer>
void stream_k_rows(const Rep<F>& r, const PairList& P, Consumer&& consume) {
  const int n = r.dim_v;
  const int g = r.dim_g();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int w = 0; w < n; ++w) {
          Vec<F> row(static_cast<size_t>(P.list.size()) * g, F(0));
          bool nz = false;
          for (int a = 0; a < g; ++a) {
            const F& bk = r.basis[a](w, k);
            const F& bi = r.basis[a](w, i);
            const F& bj = r.basis[a](w, j);
            if (!is_zero(bk)) {
              row[static_cast<size_t>(P.at[i][j]) * g + a] += bk;
              nz = true;
            }
            if (!is_zero(bi)) {
              row[static_cast<size_t>(P.at[j][k]) * g + a] += bi;
              nz = true;
            }
            if (!is_zero(bj)) {
              row[static_cast<size_t>(P.at[i][k]) * g + a] -= bj;
              nz = true;
            }
          }
          if (nz) consume(std::move(row));
        }
}

/// Streams the symmetry rows of g^(1): dim_v rows per pair i<j.
template <class F, class Consumer>
void stream_prolongation_rows(const Rep<F>& r, Consumer&& consume) {
  const int n = r.dim_v;
  const int g = r.dim_g();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int w = 0; w < n; ++w) {
        Vec<F> row(static_cast<size_t>(n) * g, F(0));
        bool nz = false;
        for (int a = 0; a < g; ++a) {
          const F& bj = r.basis[a](w, j);
          const F& bi = r.basis[a](w, i);
          if (!is_zero(bj)) {
            row[static_cast<size_t>(i) * g + a] += bj;
            nz = true;
          }
          if (!is_zero(bi)) {
            row[static_cast<size_t>(j) * g + a] -= bi;
            nz = true;
          }
        }
        if (nz) consume(std::move(row));
      }
}

template <class F>
std::vector<std::vector<Vec<F>>> structure_constants(const Rep<F>& r) {
  const int g = r.dim_g();
  SpanSolver<F> solver(r.dim_v * r.dim_v, g);
  for (const auto& b : r.basis) solver.add(flatten(b));
  std::vector<std::vector<Vec<F>>> c(g, std::vector<Vec<F>>(g));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j <= i; ++j) {
      auto k = solver.coords(flatten(bracket(r.basis[i], r.basis[j])));
      if (!k) throw std::logic_error("structure_constants: algebra not closed");
      c[i][j] = *k;
      c[j][i] = *k;
      for (auto& x : c[j][i]) x = -x;
    }
  return c;
}

}  // namespace

template <class F>
SubspaceBasis<F> bh_space(const Rep<F>& r, size_t ambient_cap) {
  if (r.form != FormKind::symmetric)
    throw std::invalid_argument("bh_space: symmetric nondegenerate form required");
  const size_t ambient = static_cast<size_t>(r.dim_v) * r.dim_g();
  check_cap<F>("bh_space", ambient, ambient_cap);
  RowReducer<F> red(static_cast<int>(ambient));
  stream_bh_rows(r, [&](Vec<F> row) { red.add_row(std::move(row)); });
  SubspaceBasis<F> s;
  s.ambient = "V* (x) g";
  s.ambient_dim = static_cast<int>(ambient);
  s.vectors = red.kernel();
  return s;
}

template <class F>
SubspaceBasis<F> k_space(const Rep<F>& r, size_t ambient_cap) {
  PairList P(r.dim_v);
  const size_t ambient = P.list.size() * r.dim_g();
  check_cap<F>("k_space", ambient, ambient_cap);
  RowReducer<F> red(static_cast<int>(ambient));
  stream_k_rows(r, P, [&](Vec<F> row) { red.add_row(std::move(row)); });
  SubspaceBasis<F> s;
  s.ambient = "Lambda^2 V* (x) g";
  s.ambient_dim = static_cast<int>(ambient);
  s.vectors = red.kernel();
  return s;
}

template <class F>
SubspaceBasis<F> first_prolongation(const Rep<F>& r, size_t ambient_cap) {
  const size_t ambient = static_cast<size_t>(r.dim_v) * r.dim_g();
  check_cap<F>("first_prolongation", ambient, ambient_cap);
  RowReducer<F> red(static_cast<int>(ambient));
  stream_prolongation_rows(r, [&](Vec<F> row) { red.add_row(std::move(row)); });
  SubspaceBasis<F> s;
  s.ambient = "V* (x) g (symmetric)";
  s.ambient_dim = static_cast<int>(ambient);
  s.vectors = red.kernel();
  return s;
}

template <class F>
std::vector<Vec<F>> evaluation_span_vector_type(const Rep<F>& r, const SubspaceBasis<F>& s) {
  const int g = r.dim_g();
  RowReducer<F> red(g);
  for (const auto& q : s.vectors)
    for (int x = 0; x < r.dim_v; ++x) {
      Vec<F> slice(g);
      bool nz = false;
      for (int a = 0; a < g; ++a) {
        slice[a] = q[static_cast<size_t>(x) * g + a];
        if (!is_zero(slice[a])) nz = true;
      }
      if (nz) red.add_row(std::move(slice));
    }
  return red.basis();
}

template <class F>
std::vector<Vec<F>> evaluation_span_pair_type(const Rep<F>& r, const SubspaceBasis<F>& s) {
  const int g = r.dim_g();
  const int pairs = s.ambient_dim / g;
  RowReducer<F> red(g);
  for (const auto& q : s.vectors)
    for (int p = 0; p < pairs; ++p) {
      Vec<F> slice(g);
      bool nz = false;
      for (int a = 0; a < g; ++a) {
        slice[a] = q[static_cast<size_t>(p) * g + a];
        if (!is_zero(slice[a])) nz = true;
      }
      if (nz) red.add_row(std::move(slice));
    }
  return red.basis();
}

template <class F>
bool is_ideal(const Rep<F>& r, const std::vector<Vec<F>>& span_coords) {
  const int g = r.dim_g();
  auto c = structure_constants(r);
  RowReducer<F> member(g);
  for (const auto& v : span_coords) member.add_row(v);
  for (const auto& v : span_coords)
    for (int i = 0; i < g; ++i) {
      Vec<F> img(g, F(0));
      for (int a = 0; a < g; ++a) {
        if (is_zero(v[a])) continue;
        for (int k = 0; k < g; ++k) img[k] += v[a] * c[i][a][k];
      }
      if (!member.contains(img)) return false;
    }
  return true;
}

template <class F>
bool module_action_check_vector_type(const Rep<F>& r, const SubspaceBasis<F>& s) {
  const int n = r.dim_v;
  const int g = r.dim_g();
  auto c = structure_constants(r);
  RowReducer<F> member(s.ambient_dim);
  for (const auto& q : s.vectors) member.add_row(q);
  for (const auto& q : s.vectors)
    for (int i = 0; i < g; ++i) {
      // (A.Q)(x) = -Q(Ax) + [A, Q(x)]
      Vec<F> img(static_cast<size_t>(n) * g, F(0));
      const Mat<F>& A = r.basis[i];
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          const F& ayx = A(y, x);
          if (is_zero(ayx)) continue;
          for (int a = 0; a < g; ++a)
            img[static_cast<size_t>(x) * g + a] -= ayx * q[static_cast<size_t>(y) * g + a];
        }
        for (int a = 0; a < g; ++a) {
          const F& qxa = q[static_cast<size_t>(x) * g + a];
          if (is_zero(qxa)) continue;
          for (int k = 0; k < g; ++k)
            img[static_cast<size_t>(x) * g + k] += qxa * c[i][a][k];
        }
      }
      if (!member.contains(img)) return false;
    }
  return true;
}

template <class F>
bool module_action_check_pair_type(const Rep<F>& r, const SubspaceBasis<F>& s) {
  const int n = r.dim_v;
  const int g = r.dim_g();
  PairList P(n);
  auto c = structure_constants(r);
  RowReducer<F> member(s.ambient_dim);
  for (const auto& q : s.vectors) member.add_row(q);
  auto entry = [&](const Vec<F>& q, int x, int y, int a) -> F {
    // R(e_x, e_y) coordinates with antisymmetry
    if (x == y) return F(0);
    if (x < y) return q[static_cast<size_t>(P.at[x][y]) * g + a];
    return -q[static_cast<size_t>(P.at[y][x]) * g + a];
  };
  for (const auto& q : s.vectors)
    for (int i = 0; i < g; ++i) {
      const Mat<F>& A = r.basis[i];
      Vec<F> img(static_cast<size_t>(P.list.size()) * g, F(0));
      for (size_t p = 0; p < P.list.size(); ++p) {
        auto [x, y] = P.list[p];
        // (A.R)(x,y) = -R(Ax,y) - R(x,Ay) + [A, R(x,y)]
        for (int z = 0; z < n; ++z) {
          const F& azx = A(z, x);
          if (!is_zero(azx))
            for (int a = 0; a < g; ++a) {
              F val = entry(q, z, y, a);
              if (!is_zero(val)) img[p * g + a] -= azx * val;
            }
          const F& azy = A(z, y);
          if (!is_zero(azy))
            for (int a = 0; a < g; ++a) {
              F val = entry(q, x, z, a);
              if (!is_zero(val)) img[p * g + a] -= azy * val;
            }
        }
        for (int a = 0; a < g; ++a) {
          F val = entry(q, x, y, a);
          if (is_zero(val)) continue;
          for (int k = 0; k < g; ++k) img[p * g + k] += val * c[i][a][k];
        }
      }
      if (!member.contains(img)) return false;
    }
  return true;
}

template <class F>
CurvatureReport curvature_report(const Rep<F>& r, bool with_K, size_t ambient_cap) {
  CurvatureReport rep;
  rep.algebra_name = r.name;
  rep.dim_g = r.dim_g();
  rep.dim_v = r.dim_v;
  SubspaceBasis<F> bh = bh_space(r, ambient_cap);
  rep.dim_Bh = bh.dim();
  auto gh = evaluation_span_vector_type(r, bh);
  rep.dim_g_h = static_cast<int>(gh.size());
  rep.is_weak_berger = rep.dim_g_h == rep.dim_g;
  if (!is_ideal(r, gh)) throw std::logic_error("curvature_report: g_h is not an ideal");
  if (with_K) {
    SubspaceBasis<F> K = k_space(r, ambient_cap);
    rep.dim_K = K.dim();
    auto gu = evaluation_span_pair_type(r, K);
    rep.dim_g_underline = static_cast<int>(gu.size());
    rep.is_berger = rep.dim_g_underline == rep.dim_g;
    if (!is_ideal(r, gu)) throw std::logic_error("curvature_report: g_underline is not an ideal");
  }
  return rep;
}

CurvatureReport curvature_report_modular(const RealRep& r, bool with_K) {
  constexpr std::uint64_t P1 = 2305843009213693951ull;  // 2^61 - 1
  constexpr std::uint64_t P2 = 2305843009213693921ull;
  constexpr std::uint64_t P3 = 2305843009213693907ull;
  CurvatureReport rep;
  rep.algebra_name = r.name;
  rep.dim_g = r.dim_g();
  rep.dim_v = r.dim_v;
  rep.mode = "probabilistic rank (3 x 61-bit primes)";

  auto to_fp = [](const VecQ& row, auto tag) {
    using FP = decltype(tag);
    Vec<FP> out(row.size());
    for (size_t k = 0; k < row.size(); ++k) out[k] = FP(row[k]);
    return out;
  };
  auto rank_all = [&](auto streamer, size_t cols) {
    RowReducer<Fp<P1>> r1(static_cast<int>(cols));
    RowReducer<Fp<P2>> r2(static_cast<int>(cols));
    RowReducer<Fp<P3>> r3(static_cast<int>(cols));
    streamer([&](VecQ row) {
      r1.add_row(to_fp(row, Fp<P1>{}));
      r2.add_row(to_fp(row, Fp<P2>{}));
      r3.add_row(to_fp(row, Fp<P3>{}));
    });
    if (r1.rank() != r2.rank() || r2.rank() != r3.rank())
      throw std::runtime_error("modular ranks disagree; rerun exactly");
    return r1.rank();
  };

  const size_t bh_cols = static_cast<size_t>(r.dim_v) * r.dim_g();
  int bh_rank =
      rank_all([&](auto&& f) { stream_bh_rows(r, f); }, bh_cols);
  rep.dim_Bh = static_cast<int>(bh_cols) - bh_rank;
  if (with_K) {
    PairList P(r.dim_v);
    const size_t k_cols = P.list.size() * r.dim_g();
    int k_rank = rank_all([&](auto&& f) { stream_k_rows(r, P, f); }, k_cols);
    rep.dim_K = static_cast<int>(k_cols) - k_rank;
  }
  return rep;
}

// --- g^[1,1] and tilde checks ---------------------------------------------------

SubspaceBasis<Rational> prolong_1_1(const CplxRep& r, const SubspaceBasis<GaussQ>& g1) {
  const int n = r.dim_v;
  const int g = r.dim_g();
  // The conjugation A -> -conj(A)^T must preserve the algebra.
  {
    SpanSolver<GaussQ> span(n * n, g);
    for (const auto& b : r.basis) span.add(flatten(b));
    for (const auto& b : r.basis) {
      MatG sigma = conj(b).transpose() * GaussQ(-1);
      if (!span.coords(flatten(sigma)))
        throw std::invalid_argument(
            "prolong_1_1: algebra not closed under the compact-form conjugation");
    }
  }
  const int m = g1.dim();
  // R(conj e_x) = sum_q r[x][q] Q_q with complex coefficients; unknowns are
  // the real and imaginary parts of r[x][q].  The defining condition equates
  // g-elements: conj_g(R(conj e_x) at e_y) = -R(conj e_y) at e_x with
  // conj_g(A) = -conj(A)^T, i.e. entrywise
  //   conj( sum_q r[x][q] M(q,y)(z,w) ) = sum_q r[y][q] M(q,x)(w,z),
  // where M(q,y) is the matrix of the g-element Q_q(e_y).
  std::vector<std::vector<MatG>> M(m, std::vector<MatG>(n));
  for (int q = 0; q < m; ++q)
    for (int y = 0; y < n; ++y) {
      MatG mat(n, n);
      for (int a = 0; a < g; ++a) {
        const GaussQ& c = g1.vectors[q][static_cast<size_t>(y) * g + a];
        if (c.is_zero()) continue;
        for (size_t e = 0; e < mat.a.size(); ++e) mat.a[e] += c * r.basis[a].a[e];
      }
      M[q][y] = std::move(mat);
    }
  const int unknowns = 2 * n * m;  // (x, q) re/im
  RowReducer<Rational> red(unknowns);
  auto RE = [&](int x, int q) { return static_cast<size_t>(x) * m + q; };
  auto IM = [&](int x, int q) { return static_cast<size_t>(n) * m + static_cast<size_t>(x) * m + q; };
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)  // (x,y) and (y,x) give conjugate equations
      for (int w = 0; w < n; ++w)
        for (int z = 0; z < n; ++z) {
          VecQ re_row(unknowns, Rational(0)), im_row(unknowns, Rational(0));
          bool nz = false;
          for (int q = 0; q < m; ++q) {
            const GaussQ& a = M[q][y](z, w);
            if (!a.is_zero()) {
              // conj(r a): re = a.re rr - a.im ri ; im = -(a.im rr + a.re ri)
              re_row[RE(x, q)] += a.re;
              re_row[IM(x, q)] -= a.im;
              im_row[RE(x, q)] -= a.im;
              im_row[IM(x, q)] -= a.re;
              nz = true;
            }
            const GaussQ& b = M[q][x](w, z);
            if (!b.is_zero()) {
              re_row[RE(y, q)] -= b.re;
              re_row[IM(y, q)] += b.im;
              im_row[RE(y, q)] -= b.im;
              im_row[IM(y, q)] -= b.re;
              nz = true;
            }
          }
          if (nz) {
            red.add_row(std::move(re_row));
            red.add_row(std::move(im_row));
          }
        }
  SubspaceBasis<Rational> out;
  out.ambient = "conj(V)* (x) g^(1) (real form)";
  out.ambient_dim = unknowns;
  out.vectors = red.kernel();
  return out;
}

TildeChecks tilde_checks(const CplxRep& r) {
  TildeChecks t;
  SubspaceBasis<GaussQ> g1 = first_prolongation(r);
  t.dim_g1 = g1.dim();
  auto gt = evaluation_span_vector_type(r, g1);
  t.dim_g_tilde = static_cast<int>(gt.size());
  t.g_tilde_equals_g = t.dim_g_tilde == r.dim_g();

  SubspaceBasis<Rational> g11 = prolong_1_1(r, g1);
  t.dim_g11 = g11.dim();
  // g~~ = span{ R(conj u, v) }: complex span of the evaluations Q-combination
  const int n = r.dim_v;
  const int m = g1.dim();
  const int g = r.dim_g();
  RowReducer<GaussQ> span(g);
  for (const auto& v : g11.vectors)
    for (int x = 0; x < n; ++x) {
      // R(conj e_x) = sum_q (re + i im) Q_q, an element of g^(1) in V*(x)g coords
      Vec<GaussQ> elem(static_cast<size_t>(n) * g, GaussQ(0));
      bool nz = false;
      for (int q = 0; q < m; ++q) {
        GaussQ coeff(v[static_cast<size_t>(x) * m + q],
                     v[static_cast<size_t>(n) * m + static_cast<size_t>(x) * m + q]);
        if (coeff.is_zero()) continue;
        nz = true;
        for (size_t e = 0; e < elem.size(); ++e) elem[e] += coeff * g1.vectors[q][e];
      }
      if (!nz) continue;
      for (int y = 0; y < n; ++y) {
        Vec<GaussQ> slice(g);
        bool snz = false;
        for (int a = 0; a < g; ++a) {
          slice[a] = elem[static_cast<size_t>(y) * g + a];
          if (!slice[a].is_zero()) snz = true;
        }
        if (snz) span.add_row(std::move(slice));
      }
    }
  t.dim_g_tilde_tilde = span.rank();
  t.g_tilde_tilde_equals_g = t.dim_g_tilde_tilde == r.dim_g();
  return t;
}

// --- torus-graded analysis -------------------------------------------------------

namespace {

struct EigenSplit {
  std::vector<std::vector<VecG>> blocks;  // ambient coordinates of block bases
  std::vector<VecG> weights;              // eigenvalue tuple per block
};

/// Joint eigenspace decomposition of commuting operators with Gaussian-integer
/// spectrum; throws if the candidates do not exhaust the space.
EigenSplit joint_eigen(const std::vector<MatG>& ops, int dim) {
  EigenSplit split;
  std::vector<VecG> full;
  for (int i = 0; i < dim; ++i) {
    VecG e(dim, GaussQ(0));
    e[i] = GaussQ(1);
    full.push_back(std::move(e));
  }
  split.blocks.push_back(std::move(full));
  split.weights.push_back({});
  for (const auto& T : ops) {
    // Gershgorin bound on |Re| + |Im| of eigenvalues.
    Rational bound(0);
    for (int i = 0; i < T.rows; ++i) {
      Rational s(0);
      for (int j = 0; j < T.cols; ++j) {
        const GaussQ& x = T(i, j);
        s += (x.re < 0 ? -x.re : x.re) + (x.im < 0 ? -x.im : x.im);
      }
      if (s > bound) bound = s;
    }
    long B = static_cast<long>(numerator(bound) / denominator(bound)) + 1;
    EigenSplit next;
    for (size_t bl = 0; bl < split.blocks.size(); ++bl) {
      const auto& basis = split.blocks[bl];
      int d = static_cast<int>(basis.size());
      SpanSolver<GaussQ> solver(dim, d);
      for (const auto& v : basis) solver.add(v);
      // Restriction of T to the block.
      MatG Tb(d, d);
      for (int c = 0; c < d; ++c) {
        VecG img(dim, GaussQ(0));
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j)
            if (!T(i, j).is_zero() && !basis[c][j].is_zero()) img[i] += T(i, j) * basis[c][j];
        auto coords = solver.coords(img);
        if (!coords) throw std::runtime_error("joint_eigen: operator does not preserve block");
        for (int i = 0; i < d; ++i) Tb(i, c) = (*coords)[i];
      }
      int found = 0;
      for (long a = -B; a <= B && found < d; ++a)
        for (long b = -B; b <= B && found < d; ++b) {
          GaussQ lam{Rational(a), Rational(b)};
          MatG shifted = Tb;
          for (int i = 0; i < d; ++i) shifted(i, i) -= lam;
          std::vector<VecG> rows;
          for (int i = 0; i < d; ++i) {
            VecG row(d);
            for (int j = 0; j < d; ++j) row[j] = shifted(i, j);
            rows.push_back(std::move(row));
          }
          std::vector<VecG> ker = kernel_basis(rows, d);
          if (ker.empty()) continue;
          std::vector<VecG> newbasis;
          for (const auto& kv : ker) {
            VecG amb(dim, GaussQ(0));
            for (int c = 0; c < d; ++c)
              if (!kv[c].is_zero())
                for (int i = 0; i < dim; ++i) amb[i] += kv[c] * basis[c][i];
            newbasis.push_back(std::move(amb));
          }
          found += static_cast<int>(ker.size());
          VecG w = split.weights[bl];
          w.push_back(lam);
          next.blocks.push_back(std::move(newbasis));
          next.weights.push_back(std::move(w));
        }
      if (found != d)
        throw std::runtime_error("joint_eigen: torus action not diagonalizable over Q(i)");
    }
    split = std::move(next);
  }
  return split;
}

}  // namespace

GammaReport gamma_set(const CplxRep& r) {
  const int n = r.dim_v;
  const int g = r.dim_g();
  GammaReport out;
  if (g == 0) return out;  // the zero algebra: B_H = 0 and Gamma is empty
  if (r.cartan.empty()) throw std::invalid_argument("gamma_set: no designated Cartan");

  std::vector<MatG> torus;
  for (int c : r.cartan) torus.push_back(r.basis[c]);

  // V-side diagonalization.
  EigenSplit vsplit = joint_eigen(torus, n);

  // g-side: ad action of the torus in basis coordinates.
  auto c = structure_constants(r);
  std::vector<MatG> ad_torus;
  for (int t : r.cartan) {
    MatG ad(g, g);
    for (int j = 0; j < g; ++j)
      for (int k = 0; k < g; ++k) ad(k, j) = c[t][j][k];
    ad_torus.push_back(std::move(ad));
  }
  EigenSplit gsplit = joint_eigen(ad_torus, g);

  for (const auto& w : gsplit.weights)
    if (std::find(out.delta0.begin(), out.delta0.end(), w) == out.delta0.end())
      out.delta0.push_back(w);

  // The zero-root block must be exactly the designated torus.
  {
    int zero_dim = 0;
    for (size_t b = 0; b < gsplit.blocks.size(); ++b) {
      bool zero = true;
      for (const auto& x : gsplit.weights[b])
        if (!x.is_zero()) zero = false;
      if (zero) zero_dim += static_cast<int>(gsplit.blocks[b].size());
    }
    if (zero_dim != static_cast<int>(r.cartan.size()))
      throw std::runtime_error("gamma_set: designated torus is not maximal");
  }

  // Change to the weight-adapted bases.
  // V: new basis vectors with their weights.
  std::vector<VecG> vbasis;
  std::vector<VecG> vweights;
  for (size_t b = 0; b < vsplit.blocks.size(); ++b)
    for (const auto& v : vsplit.blocks[b]) {
      vbasis.push_back(v);
      vweights.push_back(vsplit.weights[b]);
    }
  // g: new algebra basis elements (combinations) with their roots.
  std::vector<VecG> groots;
  std::vector<MatG> gbasis;
  for (size_t b = 0; b < gsplit.blocks.size(); ++b)
    for (const auto& cv : gsplit.blocks[b]) {
      MatG m(n, n);
      for (int a = 0; a < g; ++a)
        if (!cv[a].is_zero())
          for (size_t e = 0; e < m.a.size(); ++e) m.a[e] += cv[a] * r.basis[a].a[e];
      gbasis.push_back(std::move(m));
      groots.push_back(gsplit.weights[b]);
    }

  // Transform the module to the eigenbasis: P columns are eigenvectors.
  MatG P(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) P(i, j) = vbasis[j][i];
  MatG Pinv = inverse(P);
  CplxRep wr;
  wr.name = r.name + " (weight basis)";
  wr.dim_v = n;
  for (const auto& m : gbasis) wr.basis.push_back(Pinv * m * P);
  wr.form = r.form;
  if (r.form != FormKind::none) wr.gram = P.transpose() * r.gram * P;

  // Graded kernel of the Bianchi system: unknown (x, a) has weight
  // root(a) - weight(x); rows are weight homogeneous.
  const int rank = static_cast<int>(r.cartan.size());
  auto weight_of_unknown = [&](size_t idx) {
    int x = static_cast<int>(idx) / g;
    int a = static_cast<int>(idx) % g;
    VecG w(rank);
    for (int t = 0; t < rank; ++t) w[t] = groots[a][t] - vweights[x][t];
    return w;
  };
  std::map<std::vector<std::pair<Rational, Rational>>, std::vector<size_t>> classes;
  auto key_of = [&](const VecG& w) {
    std::vector<std::pair<Rational, Rational>> k;
    for (const auto& x : w) k.push_back({x.re, x.im});
    return k;
  };
  const size_t ambient = static_cast<size_t>(n) * g;
  for (size_t idx = 0; idx < ambient; ++idx) classes[key_of(weight_of_unknown(idx))].push_back(idx);

  // Collect all Bianchi rows once (weight-homogeneous by equivariance), then
  // solve each graded block separately.
  std::vector<VecG> rows;
  stream_bh_rows(wr, [&](VecG row) { rows.push_back(std::move(row)); });

  RowReducer<GaussQ> torus_span(rank);
  std::vector<std::pair<VecG, std::vector<VecG>>> phi_blocks;  // (phi, kernel in full coords)
  out.dim_bh = 0;
  for (const auto& [key, idxs] : classes) {
    VecG phi(rank);
    for (int t = 0; t < rank; ++t) phi[t] = GaussQ(key[t].first, key[t].second);
    // Sub-system: rows restricted to these unknowns (others are in different
    // weight classes; a mixed row would contradict equivariance and is checked).
    std::vector<VecG> sub;
    for (const auto& row : rows) {
      bool touches = false;
      for (size_t i : idxs)
        if (!row[i].is_zero()) {
          touches = true;
          break;
        }
      if (!touches) continue;
      VecG srow(idxs.size());
      for (size_t k = 0; k < idxs.size(); ++k) srow[k] = row[idxs[k]];
      sub.push_back(std::move(srow));
    }
    std::vector<VecG> ker = kernel_basis(sub, static_cast<int>(idxs.size()));
    out.dim_bh += static_cast<int>(ker.size());
    if (ker.empty()) continue;
    std::vector<VecG> full_ker;
    for (const auto& kv : ker) {
      VecG full(ambient, GaussQ(0));
      for (size_t k = 0; k < idxs.size(); ++k) full[idxs[k]] = kv[k];
      full_ker.push_back(std::move(full));
    }
    phi_blocks.push_back({phi, full_ker});
  }

  // Gamma: phi + mu realized by a nonzero restriction Q|_{V_mu}.
  for (const auto& [phi, kers] : phi_blocks) {
    std::vector<VecG> mus;
    for (const auto& q : kers)
      for (int x = 0; x < n; ++x) {
        bool nz = false;
        for (int a = 0; a < g; ++a)
          if (!q[static_cast<size_t>(x) * g + a].is_zero()) {
            nz = true;
            break;
          }
        if (!nz) continue;
        VecG sum(rank);
        for (int t = 0; t < rank; ++t) sum[t] = phi[t] + vweights[x][t];
        if (std::find(out.gamma.begin(), out.gamma.end(), sum) == out.gamma.end())
          out.gamma.push_back(sum);
        // Torus-span condition: evaluations with phi + mu = 0 land in t.
        bool zero_sum = true;
        for (const auto& sgl : sum)
          if (!sgl.is_zero()) zero_sum = false;
        if (zero_sum) {
          // Q(e_x) lands in the zero-root block, i.e. in the Cartan; collect
          // its components there for the span condition.
          VecG tcomp(rank, GaussQ(0));
          int tslot = 0;
          for (int a = 0; a < g; ++a) {
            bool root_zero = true;
            for (const auto& rt : groots[a])
              if (!rt.is_zero()) root_zero = false;
            if (root_zero) {
              tcomp[tslot] = q[static_cast<size_t>(x) * g + a];
              ++tslot;
            }
          }
          torus_span.add_row(std::move(tcomp));
        }
      }
  }
  std::sort(out.gamma.begin(), out.gamma.end(), [](const VecG& a, const VecG& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].re != b[i].re) return a[i].re < b[i].re;
      if (a[i].im != b[i].im) return a[i].im < b[i].im;
    }
    return false;
  });
  out.gamma_subset_delta0 = true;
  for (const auto& w : out.gamma)
    if (std::find(out.delta0.begin(), out.delta0.end(), w) == out.delta0.end())
      out.gamma_subset_delta0 = false;
  out.gamma_equals_delta0 =
      out.gamma_subset_delta0 && out.gamma.size() == out.delta0.size();
  out.torus_span_condition = torus_span.rank() == rank;
  return out;
}

bool weight_pairing_check(const CplxRep& r) {
  if (r.cartan.empty() || r.form == FormKind::none)
    throw std::invalid_argument("weight_pairing_check: needs a Cartan and a form");
  std::vector<MatG> torus;
  for (int c : r.cartan) torus.push_back(r.basis[c]);
  EigenSplit vsplit = joint_eigen(torus, r.dim_v);
  const int nb = static_cast<int>(vsplit.blocks.size());
  auto pair_blocks = [&](int a, int b) {
    for (const auto& u : vsplit.blocks[a])
      for (const auto& v : vsplit.blocks[b]) {
        GaussQ s(0);
        for (int i = 0; i < r.dim_v; ++i)
          for (int j = 0; j < r.dim_v; ++j) {
            if (u[i].is_zero() || v[j].is_zero()) continue;
            s += u[i] * r.gram(i, j) * v[j];
          }
        if (!s.is_zero()) return true;
      }
    return false;
  };
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b) {
      bool opposite = true;
      for (size_t t = 0; t < vsplit.weights[a].size(); ++t)
        if (!(vsplit.weights[a][t] + vsplit.weights[b][t]).is_zero()) opposite = false;
      if (!opposite && pair_blocks(a, b)) return false;
    }
  return true;
}

DimIdentityReport dim_identity_checks(const RealRep& r0, const CplxRep* complex_half) {
  DimIdentityReport rep;
  SubspaceBasis<Rational> bh = bh_space(r0);
  rep.dim_bh_real = bh.dim();
  SubspaceBasis<Rational> K = k_space(r0);
  rep.dim_k_real = K.dim();
  CplxRep rc = complexify(r0);
  rep.dim_bh_complexified = bh_space(rc).dim();
  rep.dim_k_complexified = k_space(rc).dim();
  rep.bh_complexification_ok = rep.dim_bh_real == rep.dim_bh_complexified;
  rep.k_complexification_ok = rep.dim_k_real == rep.dim_k_complexified;
  if (complex_half) {
    SubspaceBasis<GaussQ> g1 = first_prolongation(*complex_half);
    rep.dim_g1_complex = g1.dim();
    rep.dim_g11_real = prolong_1_1(*complex_half, g1).dim();
    rep.bh_prolongation_ok = rep.dim_bh_real == 2 * rep.dim_g1_complex;
    rep.k_prolongation_ok = rep.dim_k_real == rep.dim_g11_real;
  }
  return rep;
}

// explicit instantiations
template SubspaceBasis<Rational> k_space<Rational>(const RealRep&, size_t);
template SubspaceBasis<GaussQ> k_space<GaussQ>(const CplxRep&, size_t);
template SubspaceBasis<Rational> bh_space<Rational>(const RealRep&, size_t);
template SubspaceBasis<GaussQ> bh_space<GaussQ>(const CplxRep&, size_t);
template SubspaceBasis<Rational> first_prolongation<Rational>(const RealRep&, size_t);
template SubspaceBasis<GaussQ> first_prolongation<GaussQ>(const CplxRep&, size_t);
template std::vector<VecQ> evaluation_span_vector_type<Rational>(const RealRep&,
                                                                 const SubspaceBasis<Rational>&);
template std::vector<VecG> evaluation_span_vector_type<GaussQ>(const CplxRep&,
                                                               const SubspaceBasis<GaussQ>&);
template std::vector<VecQ> evaluation_span_pair_type<Rational>(const RealRep&,
                                                               const SubspaceBasis<Rational>&);
template std::vector<VecG> evaluation_span_pair_type<GaussQ>(const CplxRep&,
                                                             const SubspaceBasis<GaussQ>&);
template bool is_ideal<Rational>(const RealRep&, const std::vector<VecQ>&);
template bool is_ideal<GaussQ>(const CplxRep&, const std::vector<VecG>&);
template bool module_action_check_vector_type<Rational>(const RealRep&,
                                                        const SubspaceBasis<Rational>&);
template bool module_action_check_vector_type<GaussQ>(const CplxRep&,
                                                      const SubspaceBasis<GaussQ>&);
template bool module_action_check_pair_type<Rational>(const RealRep&,
                                                      const SubspaceBasis<Rational>&);
template bool module_action_check_pair_type<GaussQ>(const CplxRep&, const SubspaceBasis<GaussQ>&);
template CurvatureReport curvature_report<Rational>(const RealRep&, bool, size_t);
template CurvatureReport curvature_report<GaussQ>(const CplxRep&, bool, size_t);

}  // namespace wb
