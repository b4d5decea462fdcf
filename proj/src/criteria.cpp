#include "wb/criteria.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

namespace wb {

namespace {

VecQ coord_dot_ready(const RootSystem& rs, const WeightVector& v) {
  return rs.simple_root_coords(v);
}

Rational pair_with(const VecQ& normal, const VecQ& coords) {
  Rational s(0);
  for (size_t i = 0; i < normal.size(); ++i) s += normal[i] * coords[i];
  return s;
}

std::vector<WeightVector> sorted_support(const WeightSystem& ws) {
  std::vector<WeightVector> v(ws.support().begin(), ws.support().end());
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<WeightVector> sorted_set(const WeightSet& s) {
  std::vector<WeightVector> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

/// Normal of some hyperplane through 0 containing all points, if the linear
/// span of the points is proper.  The normal is canonical: it comes from the
/// reduced row echelon form, primitive with positive leading entry.
std::optional<VecQ> proper_linear_normal(const RootSystem& rs,
                                         const std::vector<WeightVector>& pts) {
  RowReducer<Rational> red(rs.rank());
  for (const auto& p : pts) red.add_row(coord_dot_ready(rs, p));
  if (red.rank() >= rs.rank()) return std::nullopt;
  return red.kernel().front();
}

/// Affine hyperplane containing all of pts and avoiding avoid1/avoid2, if one
/// exists.  Exists iff neither avoided point lies in the affine hull of pts.
std::optional<Hyperplane> affine_hyperplane(const RootSystem& rs,
                                            const std::vector<WeightVector>& pts,
                                            const WeightVector& avoid1,
                                            const WeightVector& avoid2) {
  const int r = rs.rank();
  VecQ a1 = coord_dot_ready(rs, avoid1), a2 = coord_dot_ready(rs, avoid2);
  if (pts.empty()) {
    VecQ n(r, Rational(0));
    n[0] = 1;
    Rational c = std::max(pair_with(n, a1), pair_with(n, a2)) + 1;
    return Hyperplane{n, c};
  }
  VecQ p0 = coord_dot_ready(rs, pts.front());
  RowReducer<Rational> red(r);
  for (size_t i = 1; i < pts.size(); ++i) {
    VecQ d = coord_dot_ready(rs, pts[i]);
    for (int j = 0; j < r; ++j) d[j] -= p0[j];
    red.add_row(std::move(d));
  }
  auto diff = [&](const VecQ& a) {
    VecQ d = a;
    for (int j = 0; j < r; ++j) d[j] -= p0[j];
    return d;
  };
  if (red.contains(diff(a1)) || red.contains(diff(a2))) return std::nullopt;
  std::vector<VecQ> K = red.kernel();
  // Some kernel combination pairs nontrivially with both avoided directions.
  for (size_t i = 0; i < K.size(); ++i) {
    for (long t = 0; t <= static_cast<long>(K.size()); ++t) {
      VecQ n = K[i];
      if (t > 0) {
        const VecQ& other = K[(i + t) % K.size()];
        if (&other == &K[i]) continue;
        for (int j = 0; j < r; ++j) n[j] += Rational(t) * other[j];
      }
      Rational c = pair_with(n, p0);
      if (pair_with(n, a1) != c && pair_with(n, a2) != c) return Hyperplane{n, c};
    }
  }
  throw std::logic_error("affine_hyperplane: witness search failed");
}

bool in_d0_shift(const RootSystem& rs, const WeightVector& lambda, const WeightVector& base) {
  return rs.in_delta0(sub(lambda, base));
}

void verify_planar(const WeightSystem& ws, const PlanarSpanningTriple& t) {
  const RootSystem& rs = ws.rs();
  auto on_plane = [&](const WeightVector& x) {
    return pair_with(t.plane.normal, coord_dot_ready(rs, x)) == t.plane.offset;
  };
  if (on_plane(t.mu1) || on_plane(t.mu2))
    throw std::logic_error("planar triple: mu on the hyperplane");
  for (const auto& x : rs.weyl_orbit(ws.highest()))
    if (x != t.mu1 && x != t.mu2 && !on_plane(x))
      throw std::logic_error("planar triple: extremal weight off the hyperplane");
  for (const auto& l : ws.support())
    if (!in_d0_shift(rs, l, t.mu1) && !in_d0_shift(rs, l, t.mu2) && !on_plane(l))
      throw std::logic_error("planar triple: weight not covered");
}

}  // namespace

std::optional<PIWitness> check_PI(const WeightSystem& ws) {
  const RootSystem& rs = ws.rs();
  for (const auto& mu : sorted_support(ws)) {
    std::vector<WeightVector> residual;
    for (const auto& l : ws.support())
      if (!in_d0_shift(rs, l, mu) && !in_d0_shift(rs, l, negate(mu))) residual.push_back(l);
    if (auto n = proper_linear_normal(rs, residual))
      return PIWitness{mu, Hyperplane{*n, Rational(0)}};
  }
  return std::nullopt;
}

PIIResult check_PII(const WeightSystem& ws) {
  const RootSystem& rs = ws.rs();
  PIIResult res{true, {}, std::nullopt};
  std::vector<WeightVector> support = sorted_support(ws);
  std::vector<WeightVector> roots = rs.all_roots();
  std::sort(roots.begin(), roots.end());
  for (const auto& alpha : roots) {
    std::vector<WeightVector> oa = omega_alpha(ws, alpha);
    bool found = false;
    for (const auto& mu : support) {
      WeightVector base = sub(mu, alpha);
      bool ok = true;
      for (const auto& l : oa)
        if (!in_d0_shift(rs, l, base) && !in_d0_shift(rs, l, negate(mu))) {
          ok = false;
          break;
        }
      if (ok) {
        res.mu_for_alpha[alpha] = mu;
        found = true;
        break;
      }
    }
    if (!found) {
      res.passed = false;
      res.failing_alpha = alpha;
      return res;
    }
  }
  return res;
}

std::optional<QIWitness> check_QI(const WeightSystem& ws) {
  const RootSystem& rs = ws.rs();
  std::vector<WeightVector> deltas{WeightVector(rs.ambient_dim(), Rational(0))};
  for (const auto& a : rs.positive_roots()) deltas.push_back(a);
  for (const auto& d : deltas) {
    WeightVector base = sub(ws.highest(), d);
    std::vector<WeightVector> residual;
    for (const auto& l : ws.support())
      if (!in_d0_shift(rs, l, base) && !in_d0_shift(rs, l, negate(base))) residual.push_back(l);
    if (auto n = proper_linear_normal(rs, residual)) return QIWitness{d, Hyperplane{*n, Rational(0)}};
  }
  return std::nullopt;
}

std::optional<SIIWitness> check_QII(const WeightSystem& ws) {
  // (SII) for the dominant representative; by Weyl equivariance the clause
  // "there is an extremal weight" reduces to the highest weight itself:
  // the condition for (w L, w a) coincides with the condition for (L, a).
  const RootSystem& rs = ws.rs();
  const WeightVector& L = ws.highest();
  std::vector<WeightVector> roots = rs.all_roots();
  std::sort(roots.begin(), roots.end());
  SIIWitness w{L, {}};
  for (const auto& alpha : roots) {
    WeightVector base = sub(L, alpha);
    bool ok = true;
    for (const auto& l : ws.support()) {
      if (!ws.contains(add(l, alpha))) continue;  // l not in Omega_alpha
      if (!in_d0_shift(rs, l, base) && !in_d0_shift(rs, l, negate(L))) {
        ok = false;
        break;
      }
    }
    if (ok) w.alphas.push_back(alpha);
  }
  if (w.alphas.empty()) return std::nullopt;
  return w;
}

std::optional<SIIWitness> check_SII(const WeightSystem& ws) { return check_QII(ws); }

std::optional<PlanarSpanningTriple> check_SI(const WeightSystem& ws, size_t orbit_cap) {
  const RootSystem& rs = ws.rs();
  const WeightVector& L = ws.highest();
  WeightVector mL = negate(L);
  std::vector<WeightVector> must;
  for (const auto& x : sorted_set(rs.weyl_orbit(L, orbit_cap)))
    if (x != L && x != mL) must.push_back(x);
  for (const auto& l : sorted_support(ws))
    if (!in_d0_shift(rs, l, L) && !in_d0_shift(rs, l, mL)) must.push_back(l);
  auto plane = affine_hyperplane(rs, must, L, mL);
  if (!plane) return std::nullopt;
  PlanarSpanningTriple t{L, mL, *plane};
  verify_planar(ws, t);
  return t;
}

std::optional<RIWitness> check_RI(const WeightSystem& ws) {
  const RootSystem& rs = ws.rs();
  std::vector<WeightVector> support = sorted_support(ws);
  for (size_t i = 0; i < support.size(); ++i)
    for (size_t j = i; j < support.size(); ++j) {
      std::vector<WeightVector> residual;
      for (const auto& l : support)
        if (!in_d0_shift(rs, l, support[i]) && !in_d0_shift(rs, l, support[j]))
          residual.push_back(l);
      if (auto n = proper_linear_normal(rs, residual))
        return RIWitness{support[i], support[j], Hyperplane{*n, Rational(0)}};
    }
  return std::nullopt;
}

PIIResult check_RII(const WeightSystem& ws) {
  const RootSystem& rs = ws.rs();
  PIIResult res{true, {}, std::nullopt};
  std::vector<WeightVector> support = sorted_support(ws);
  std::vector<WeightVector> roots = rs.all_roots();
  std::sort(roots.begin(), roots.end());
  for (const auto& alpha : roots) {
    std::vector<WeightVector> oa = omega_alpha(ws, alpha);
    bool found = false;
    for (size_t i = 0; i < support.size() && !found; ++i) {
      WeightVector b1 = sub(support[i], alpha);
      // classify leftovers under mu1 only once
      std::vector<const WeightVector*> left;
      for (const auto& l : oa)
        if (!in_d0_shift(rs, l, b1)) left.push_back(&l);
      if (left.empty()) {
        res.mu_for_alpha[alpha] = support[i];
        found = true;
        break;
      }
      for (size_t j = 0; j < support.size(); ++j) {
        WeightVector b2 = sub(support[j], alpha);
        bool ok = true;
        for (const auto* l : left)
          if (!in_d0_shift(rs, *l, b2)) {
            ok = false;
            break;
          }
        if (ok) {
          res.mu_for_alpha[alpha] = support[i];
          found = true;
          break;
        }
      }
    }
    if (!found) {
      res.passed = false;
      res.failing_alpha = alpha;
      return res;
    }
  }
  return res;
}

namespace {

std::string format_plane(const Hyperplane& h) {
  std::ostringstream os;
  os << "normal=" << fmt(h.normal) << " offset=" << h.offset.str();
  return os.str();
}

std::optional<std::string> classification_label(const RootSystem& rs, const VecQ& canonical,
                                                const WeightVector& highest) {
  char f = rs.family();
  int n = rs.rank();
  auto is_omega = [&](int i, long mult = 1) {
    for (int k = 0; k < n; ++k)
      if (canonical[k] != (k == i - 1 ? Rational(mult) : Rational(0))) return false;
    return true;
  };
  if (rs.dominant_rep(highest) == rs.highest_root()) return "adjoint (bi-invariant metric)";
  switch (f) {
    case 'A':
      if (n == 1 && canonical[0] == 4) return "symmetric space AI";
      if (n == 3 && is_omega(2)) return "standard so(6)";
      if (n == 3 && is_omega(2, 2)) return "symmetric space AI";
      if (n == 7 && is_omega(4)) return "symmetric space EV";
      break;
    case 'B':
      if (is_omega(1)) return "standard so(" + std::to_string(2 * n + 1) + ")";
      if (is_omega(1, 2)) return "symmetric space AI";
      if (n == 3 && is_omega(3)) return "Spin(7) holonomy";
      if (n == 4 && is_omega(4)) return "symmetric space FII";
      break;
    case 'C':
      if (is_omega(2)) return n == 2 ? std::optional<std::string>("standard so(5)")
                                     : std::optional<std::string>("symmetric space AII");
      if (n == 4 && is_omega(4)) return "symmetric space EI";
      break;
    case 'D':
      if (is_omega(1)) return "standard so(" + std::to_string(2 * n) + ")";
      if (is_omega(1, 2)) return "symmetric space AI";
      if (n == 8 && is_omega(8)) return "symmetric space EVIII";
      break;
    case 'F':
      if (is_omega(1)) return "symmetric space EIV";
      break;
    case 'G':
      if (is_omega(1)) return "G2 holonomy";
      break;
  }
  return std::nullopt;
}

}  // namespace

ScreenVerdict screen(const RootSystem& rs, const WeightVector& highest, const ScreenOptions& opts) {
  if (is_zero_vec(highest)) throw std::invalid_argument("screen: trivial highest weight");
  if (!rs.is_dominant_integral(highest))
    throw std::invalid_argument("screen: highest weight not dominant integral");

  ScreenVerdict v;
  v.family = rs.family();
  v.rank = rs.rank();
  v.coeffs = rs.fundamental_coords(highest);
  v.canonical = canonical_coeffs(rs, v.coeffs);
  v.congruent = congruence_orbit(rs, v.coeffs);
  v.weight = fmt(highest);
  v.dim = weyl_dim(rs, highest);

  // 0 is a weight iff the highest weight lies in the root lattice.
  {
    VecQ c = rs.simple_root_coords(highest);
    v.zero_weight = true;
    for (const auto& x : c)
      if (denominator(x) != 1) v.zero_weight = false;
  }

  v.self_dual = is_self_dual(rs, highest);
  if (!v.self_dual) {
    v.rejected_by = "not-self-dual";
    return v;
  }
  v.orthogonal = fs_indicator(rs, highest) == FsIndicator::orthogonal;
  v.real_type = v.orthogonal;  // self-dual + orthogonal, cf. appendix trichotomy
  if (!v.orthogonal) {
    v.rejected_by = "symplectic";
    return v;
  }

  WeightSystem ws = weight_system(rs, highest);

  auto si = check_SI(ws, opts.orbit_cap);
  if (si) {
    v.passed.push_back("SI");
    v.witnesses["SI"] = format_plane(si->plane);
  }
  auto sii = check_SII(ws);
  if (sii) {
    v.passed.push_back("SII");
    std::ostringstream os;
    os << "alphas={";
    for (size_t i = 0; i < sii->alphas.size(); ++i) os << (i ? "," : "") << fmt(sii->alphas[i]);
    os << "}";
    v.witnesses["SII"] = os.str();
  }

  if (opts.run_all_criteria) {
    if (auto pi = check_PI(ws)) {
      v.passed.push_back("PI");
      v.witnesses["PI"] = "mu=" + fmt(pi->mu) + " " + format_plane(pi->plane);
    }
    auto pii = check_PII(ws);
    if (pii.passed) v.passed.push_back("PII");
    if (auto qi = check_QI(ws)) {
      v.passed.push_back("QI");
      v.witnesses["QI"] = "delta=" + fmt(qi->delta) + " " + format_plane(qi->plane);
    }
    if (check_QII(ws)) v.passed.push_back("QII");
    if (auto ri = check_RI(ws)) {
      v.passed.push_back("RI");
      v.witnesses["RI"] = "mu1=" + fmt(ri->mu1) + " mu2=" + fmt(ri->mu2);
    }
    if (check_RII(ws).passed) v.passed.push_back("RII");
  }

  if (!si && !sii) {
    v.rejected_by = "SI-and-SII-fail";
    return v;
  }

  // The two exceptions excluded by the direct curvature argument.
  if (v.family == 'B' && v.rank == 7) {
    bool spin = true;
    for (int k = 0; k < 7; ++k)
      if (v.canonical[k] != (k == 6 ? Rational(1) : Rational(0))) spin = false;
    if (spin) {
      v.rejected_by = "B7-spin-obstruction (not weak-Berger)";
      return v;
    }
  }
  if (v.family == 'G' && v.canonical[0] == 2 && v.canonical[1] == 0) {
    v.rejected_by = "G2-sym2-obstruction (not weak-Berger)";
    return v;
  }

  v.survivor = true;
  v.classification_label = classification_label(rs, v.canonical, highest);
  return v;
}

std::vector<std::pair<char, int>> systems_up_to_rank(int max_rank) {
  std::vector<std::pair<char, int>> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({'A', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'B', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'C', n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({'D', n});
  for (int n = 6; n <= std::min(max_rank, 8); ++n) out.push_back({'E', n});
  if (max_rank >= 4) out.push_back({'F', 4});
  if (max_rank >= 2) out.push_back({'G', 2});
  return out;
}

std::vector<ScreenVerdict> screen_range(const ScreenRangeOptions& opts) {
  std::vector<std::pair<char, int>> systems =
      opts.systems.empty() ? systems_up_to_rank(opts.max_rank) : opts.systems;

  struct Task {
    char family;
    int rank;
    VecQ coeffs;
  };
  std::vector<Task> tasks;
  for (auto [f, n] : systems) {
    RootSystem rs = RootSystem::build(f, n);
    for (auto& c : enumerate_dominant(rs, opts.max_dim)) tasks.push_back({f, n, c});
  }

  ScreenOptions sopts;
  sopts.run_all_criteria = opts.run_all_criteria;
  sopts.orbit_cap = opts.orbit_cap;

  auto run_chunk = [&](size_t begin, size_t end) {
    std::vector<ScreenVerdict> out;
    const RootSystem* rs = nullptr;
    RootSystem store = RootSystem::build('A', 1);
    char cf = 0;
    int cr = 0;
    for (size_t k = begin; k < end; ++k) {
      const Task& t = tasks[k];
      if (t.family != cf || t.rank != cr) {
        store = RootSystem::build(t.family, t.rank);
        cf = t.family;
        cr = t.rank;
      }
      rs = &store;
      ScreenVerdict v = screen(*rs, rs->weight_from_fundamental(t.coeffs), sopts);
      if (opts.no_zero_weight && v.zero_weight) continue;
      out.push_back(std::move(v));
    }
    return out;
  };

  std::vector<ScreenVerdict> all;
  int nthreads = std::max(1, opts.threads);
  if (nthreads == 1 || tasks.size() < 2) {
    all = run_chunk(0, tasks.size());
  } else {
    size_t chunk = (tasks.size() + nthreads - 1) / nthreads;
    std::vector<std::future<std::vector<ScreenVerdict>>> futs;
    for (size_t b = 0; b < tasks.size(); b += chunk)
      futs.push_back(std::async(std::launch::async, run_chunk, b,
                                std::min(b + chunk, tasks.size())));
    for (auto& f : futs) {
      auto part = f.get();
      all.insert(all.end(), part.begin(), part.end());
    }
  }

  std::sort(all.begin(), all.end(), [](const ScreenVerdict& x, const ScreenVerdict& y) {
    if (x.family != y.family) return x.family < y.family;
    if (x.rank != y.rank) return x.rank < y.rank;
    if (x.canonical != y.canonical) return x.canonical < y.canonical;
    return x.coeffs < y.coeffs;
  });

  if (opts.merge_congruent) {
    std::vector<ScreenVerdict> merged;
    for (auto& v : all) {
      if (!merged.empty() && merged.back().family == v.family && merged.back().rank == v.rank &&
          merged.back().canonical == v.canonical) {
        if (v.coeffs == v.canonical) merged.back() = std::move(v);
        continue;  // keep exactly the canonical representative of each class
      }
      merged.push_back(std::move(v));
    }
    return merged;
  }
  return all;
}

}  // namespace wb
