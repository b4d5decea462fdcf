#include "wb/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace wb {

Rational dot(const WeightVector& a, const WeightVector& b) {
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

WeightVector add(const WeightVector& a, const WeightVector& b) {
  WeightVector r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

WeightVector sub(const WeightVector& a, const WeightVector& b) {
  WeightVector r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

WeightVector scale(const WeightVector& a, const Rational& s) {
  WeightVector r = a;
  for (auto& x : r) x *= s;
  return r;
}

WeightVector negate(const WeightVector& a) { return scale(a, Rational(-1)); }

bool is_zero_vec(const WeightVector& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::string fmt(const WeightVector& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].str();
  }
  return s + ")";
}

namespace {

WeightVector unit(int dim, int i) {
  WeightVector v(dim, Rational(0));
  v[i] = 1;
  return v;
}

std::vector<WeightVector> simple_roots_for(char family, int rank, int& ambient) {
  std::vector<WeightVector> s;
  auto e = [&](int i) { return unit(ambient, i); };
  switch (family) {
    case 'A': {
      ambient = rank + 1;
      for (int i = 0; i < rank; ++i) s.push_back(sub(e(i), e(i + 1)));
      break;
    }
    case 'B': {
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) s.push_back(sub(e(i), e(i + 1)));
      s.push_back(e(rank - 1));
      break;
    }
    case 'C': {
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) s.push_back(sub(e(i), e(i + 1)));
      s.push_back(scale(e(rank - 1), Rational(2)));
      break;
    }
    case 'D': {
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) s.push_back(sub(e(i), e(i + 1)));
      s.push_back(add(e(rank - 2), e(rank - 1)));
      break;
    }
    case 'G': {
      // Knapp's model in the sum-zero hyperplane of Q^3; the highest root is
      // 2e_3 - e_1 - e_2 and omega_1 = e_3 - e_2 is the dominant short root.
      ambient = 3;
      s.push_back(sub(e(0), e(1)));
      WeightVector a2 = add(sub(e(2), e(0)), sub(e(1), e(0)));  // -2e1+e2+e3
      s.push_back(a2);
      break;
    }
    case 'F': {
      // Knapp's ordering: omega_1 = e_1 is the dominant short root, so the
      // 26-dimensional representation is the first fundamental one.
      ambient = 4;
      WeightVector a1(4, Rational(1, 2));
      a1[1] = -a1[1];
      a1[2] = -a1[2];
      a1[3] = -a1[3];
      s.push_back(a1);
      s.push_back(e(3));
      s.push_back(sub(e(2), e(3)));
      s.push_back(sub(e(1), e(2)));
      break;
    }
    case 'E': {
      ambient = 8;
      WeightVector a1(8, Rational(-1, 2));
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      s.push_back(a1);
      s.push_back(add(e(0), e(1)));
      s.push_back(sub(e(1), e(0)));
      s.push_back(sub(e(2), e(1)));
      s.push_back(sub(e(3), e(2)));
      s.push_back(sub(e(4), e(3)));
      if (rank >= 7) s.push_back(sub(e(5), e(4)));
      if (rank >= 8) s.push_back(sub(e(6), e(5)));
      break;
    }
    default:
      throw std::invalid_argument("unknown family");
  }
  return s;
}

bool valid_pair(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

}  // namespace

RootSystem RootSystem::build(char family, int rank) {
  if (!valid_pair(family, rank))
    throw std::invalid_argument("invalid (family, rank) pair: " + std::string(1, family) +
                                std::to_string(rank));
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.simple_ = simple_roots_for(family, rank, rs.ambient_);
  rs.gram_ = MatQ::identity(rs.ambient_);

  // Close the simple system under the simple reflections.
  WeightSet all(rs.simple_.begin(), rs.simple_.end());
  std::deque<WeightVector> queue(rs.simple_.begin(), rs.simple_.end());
  while (!queue.empty()) {
    WeightVector r = queue.front();
    queue.pop_front();
    for (const auto& a : rs.simple_) {
      Rational c = Rational(2) * dot(r, a) / dot(a, a);
      WeightVector img = sub(r, scale(a, c));
      if (all.insert(img).second) queue.push_back(img);
    }
  }
  rs.root_set_ = all;
  rs.roots_.assign(all.begin(), all.end());

  // Simple-root coordinates; positivity and height come from them.
  MatQ sg(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) sg(i, j) = dot(rs.simple_[i], rs.simple_[j]);
  rs.simple_gram_inv_ = inverse(sg);

  auto coords = [&](const WeightVector& v) {
    VecQ rhs(rank);
    for (int i = 0; i < rank; ++i) rhs[i] = dot(rs.simple_[i], v);
    return rs.simple_gram_inv_ * rhs;
  };

  struct PosRoot {
    WeightVector r;
    VecQ c;
    Rational height;
  };
  std::vector<PosRoot> pos;
  for (const auto& r : rs.roots_) {
    VecQ c = coords(r);
    bool nonneg = true;
    Rational h(0);
    for (const auto& x : c) {
      if (x < 0) nonneg = false;
      h += x;
    }
    if (nonneg) pos.push_back({r, c, h});
  }
  std::sort(pos.begin(), pos.end(), [](const PosRoot& x, const PosRoot& y) {
    if (x.height != y.height) return x.height < y.height;
    return x.c < y.c;
  });
  for (auto& p : pos) rs.positive_.push_back(p.r);

  rs.rho_ = WeightVector(rs.ambient_, Rational(0));
  for (const auto& r : rs.positive_) rs.rho_ = add(rs.rho_, scale(r, Rational(1, 2)));

  // Lengths.
  rs.len2_long_ = dot(rs.roots_[0], rs.roots_[0]);
  rs.len2_short_ = rs.len2_long_;
  for (const auto& r : rs.roots_) {
    Rational n = dot(r, r);
    if (n > rs.len2_long_) rs.len2_long_ = n;
    if (n < rs.len2_short_) rs.len2_short_ = n;
  }

  // Fundamental weights from the inverse Cartan matrix: omega_i = sum_j (C^-1)_ji alpha_j.
  MatQ cartan(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      cartan(i, j) = Rational(2) * dot(rs.simple_[i], rs.simple_[j]) / dot(rs.simple_[j], rs.simple_[j]);
  rs.cartan_inv_ = inverse(cartan);
  for (int i = 0; i < rank; ++i) {
    WeightVector w(rs.ambient_, Rational(0));
    for (int j = 0; j < rank; ++j) w = add(w, scale(rs.simple_[j], rs.cartan_inv_(i, j)));
    rs.omega_.push_back(w);
  }

  // Dominant long and short roots.
  for (const auto& r : rs.positive_) {
    if (!rs.is_dominant(r)) continue;
    if (dot(r, r) == rs.len2_long_) rs.highest_root_ = r;
    if (dot(r, r) == rs.len2_short_) rs.highest_short_ = r;
  }
  return rs;
}

Rational RootSystem::cartan_int(const WeightVector& beta, const WeightVector& alpha) const {
  Rational n = dot(alpha, alpha);
  if (n.is_zero()) throw std::invalid_argument("cartan_int: alpha = 0");
  return Rational(2) * dot(beta, alpha) / n;
}

WeightVector RootSystem::reflect(const WeightVector& phi, const WeightVector& alpha) const {
  return sub(phi, scale(alpha, cartan_int(phi, alpha)));
}

std::pair<int, int> RootSystem::root_string(const WeightVector& beta,
                                            const WeightVector& alpha) const {
  if (!is_root(alpha) || !is_root(beta)) throw std::invalid_argument("root_string: not roots");
  Rational c = cartan_int(beta, alpha);
  Rational prop = c * cartan_int(alpha, beta);
  if (prop == 4) throw std::invalid_argument("root_string: beta proportional to alpha");
  int q = 0, p = 0;
  WeightVector v = add(beta, alpha);
  while (is_root(v)) {
    ++q;
    v = add(v, alpha);
  }
  v = sub(beta, alpha);
  while (is_root(v)) {
    ++p;
    v = sub(v, alpha);
  }
  return {p, q};
}

WeightSet RootSystem::weyl_orbit(const WeightVector& lambda, size_t cap) const {
  WeightSet orbit{lambda};
  std::deque<WeightVector> queue{lambda};
  while (!queue.empty()) {
    WeightVector v = queue.front();
    queue.pop_front();
    for (const auto& a : simple_) {
      WeightVector img = reflect(v, a);
      if (orbit.insert(img).second) {
        if (orbit.size() > cap)
          throw CapExceeded("weyl_orbit: orbit size exceeds cap " + std::to_string(cap));
        queue.push_back(img);
      }
    }
  }
  return orbit;
}

WeightVector RootSystem::dominant_rep(WeightVector lambda) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& a : simple_) {
      if (dot(lambda, a) < 0) {
        lambda = reflect(lambda, a);
        moved = true;
      }
    }
  }
  return lambda;
}

std::pair<WeightVector, WeightVector> RootSystem::long_orthogonal_split(
    const WeightVector& beta_long) const {
  if (family_ == 'G')
    throw std::invalid_argument("long_orthogonal_split: no orthogonal split in G2");
  if (!two_lengths())
    throw std::invalid_argument("long_orthogonal_split: system has a single root length");
  if (!is_root(beta_long) || !is_long(beta_long))
    throw std::invalid_argument("long_orthogonal_split: input must be a long root");
  for (const auto& a : positive_) {
    WeightVector g = sub(beta_long, a);
    if (is_root(g) && dot(a, g).is_zero()) return {a, g};
  }
  for (const auto& r : roots_) {
    WeightVector g = sub(beta_long, r);
    if (is_root(g) && dot(r, g).is_zero()) return {r, g};
  }
  throw std::runtime_error("long_orthogonal_split: no split found");
}

VecQ RootSystem::simple_root_coords(const WeightVector& v) const {
  VecQ rhs(rank_);
  for (int i = 0; i < rank_; ++i) rhs[i] = dot(simple_[i], v);
  return simple_gram_inv_ * rhs;
}

VecQ RootSystem::fundamental_coords(const WeightVector& v) const {
  VecQ c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = cartan_int(v, simple_[i]);
  return c;
}

WeightVector RootSystem::weight_from_fundamental(const VecQ& coeffs) const {
  WeightVector v(ambient_, Rational(0));
  for (int i = 0; i < rank_; ++i) v = add(v, scale(omega_[i], coeffs[i]));
  return v;
}

bool RootSystem::is_dominant(const WeightVector& v) const {
  for (const auto& a : simple_)
    if (dot(v, a) < 0) return false;
  return true;
}

bool RootSystem::is_dominant_integral(const WeightVector& v) const {
  for (const auto& a : simple_) {
    Rational c = cartan_int(v, a);
    if (c < 0 || denominator(c) != 1) return false;
  }
  return true;
}

size_t RootSystem::weyl_order(size_t cap) const { return weyl_orbit(rho_, cap).size(); }

std::vector<std::vector<int>> RootSystem::diagram_automorphisms() const {
  std::vector<std::vector<int>> autos;
  std::vector<int> id(rank_);
  for (int i = 0; i < rank_; ++i) id[i] = i;
  autos.push_back(id);
  auto push = [&](std::vector<int> p) { autos.push_back(std::move(p)); };
  if (family_ == 'A' && rank_ >= 2) {
    std::vector<int> p(rank_);
    for (int i = 0; i < rank_; ++i) p[i] = rank_ - 1 - i;
    push(p);
  } else if (family_ == 'D' && rank_ == 4) {
    // S_3 on the three outer nodes 0, 2, 3 (0-based) around the center 1.
    const int nodes[3] = {0, 2, 3};
    int perm3[5][3] = {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& q : perm3) {
      std::vector<int> p = id;
      for (int k = 0; k < 3; ++k) p[nodes[k]] = nodes[q[k]];
      push(p);
    }
  } else if (family_ == 'D' && rank_ != 4) {
    std::vector<int> p = id;
    std::swap(p[rank_ - 2], p[rank_ - 1]);
    push(p);
  } else if (family_ == 'E' && rank_ == 6) {
    // Bourbaki labels: 1<->6, 3<->5 fixed 2,4 (0-based: 0<->5, 2<->4).
    std::vector<int> p = id;
    std::swap(p[0], p[5]);
    std::swap(p[2], p[4]);
    push(p);
  }
  return autos;
}

}  // namespace wb
