#include "wb/repweights.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace wb {

namespace {

// Depth of mu below the highest weight: height of (highest - mu) in the
// simple-root basis.
Rational depth(const RootSystem& rs, const WeightVector& highest, const WeightVector& mu) {
  VecQ c = rs.simple_root_coords(sub(highest, mu));
  Rational h(0);
  for (const auto& x : c) h += x;
  return h;
}

}  // namespace

WeightSystem::WeightSystem(const RootSystem& rs, WeightVector highest)
    : rs_(&rs), highest_(std::move(highest)) {
  if (!rs.is_dominant_integral(highest_))
    throw std::invalid_argument("weight_system: highest weight not dominant integral");

  // Membership: mu is a weight iff dominant_rep(mu) <= highest in the root
  // lattice order (saturation).  The support is connected under single
  // simple-root steps, so a BFS from the top reaches all of it.
  auto member = [&](const WeightVector& mu) {
    VecQ c = rs.simple_root_coords(sub(highest_, rs.dominant_rep(mu)));
    for (const auto& x : c) {
      if (x < 0) return false;
      if (denominator(x) != 1) return false;
    }
    return true;
  };

  support_.insert(highest_);
  std::deque<WeightVector> queue{highest_};
  while (!queue.empty()) {
    WeightVector mu = queue.front();
    queue.pop_front();
    for (const auto& a : rs.simple_roots()) {
      WeightVector nu = sub(mu, a);
      if (support_.count(nu)) continue;
      if (!member(nu)) continue;
      support_.insert(nu);
      queue.push_back(nu);
    }
  }

  for (const auto& w : support_)
    if (rs.is_dominant(w)) dominant_.push_back(w);
  std::sort(dominant_.begin(), dominant_.end(), [&](const WeightVector& x, const WeightVector& y) {
    Rational dx = depth(rs, highest_, x), dy = depth(rs, highest_, y);
    if (dx != dy) return dx < dy;
    return x < y;
  });
}

void WeightSystem::freudenthal() const {
  if (!mult_.empty()) return;
  const RootSystem& rs = *rs_;
  const WeightVector rho = rs.rho();
  WeightVector top = add(highest_, rho);
  Rational top_norm = dot(top, top);

  auto mult_of = [&](const WeightVector& w) -> const Integer& {
    return mult_.at(rs.dominant_rep(w));
  };

  for (const auto& mu : dominant_) {
    if (mu == highest_) {
      mult_[mu] = 1;
      continue;
    }
    WeightVector shifted = add(mu, rho);
    Rational denom = top_norm - dot(shifted, shifted);
    Rational num(0);
    for (const auto& a : rs.positive_roots()) {
      WeightVector v = add(mu, a);
      while (support_.count(v)) {
        num += Rational(mult_of(v)) * dot(v, a);
        v = add(v, a);
      }
    }
    Rational m = Rational(2) * num / denom;
    if (denominator(m) != 1 || m <= 0)
      throw std::runtime_error("freudenthal: non-integral multiplicity");
    mult_[mu] = numerator(m);
  }
}

Integer WeightSystem::multiplicity(const WeightVector& w) const {
  if (!support_.count(w)) return 0;
  freudenthal();
  return mult_.at(rs_->dominant_rep(w));
}

Integer WeightSystem::dimension_by_multiplicities() const {
  freudenthal();
  Integer total = 0;
  for (const auto& w : support_) total += mult_.at(rs_->dominant_rep(w));
  return total;
}

WeightSystem weight_system(const RootSystem& rs, const WeightVector& highest) {
  return WeightSystem(rs, highest);
}

Integer weyl_dim(const RootSystem& rs, const WeightVector& highest) {
  if (!rs.is_dominant_integral(highest))
    throw std::invalid_argument("weyl_dim: highest weight not dominant integral");
  const WeightVector& rho = rs.rho();
  WeightVector shifted = add(highest, rho);
  Rational d(1);
  for (const auto& a : rs.positive_roots()) d *= dot(shifted, a) / dot(rho, a);
  if (denominator(d) != 1) throw std::runtime_error("weyl_dim: non-integral result");
  return numerator(d);
}

bool is_self_dual(const RootSystem& rs, const WeightVector& highest) {
  return rs.minus_w0(highest) == highest;
}

FsIndicator fs_indicator(const RootSystem& rs, const WeightVector& highest) {
  if (!is_self_dual(rs, highest))
    throw std::invalid_argument("fs_indicator: module is not self-dual");
  Rational s(0);
  for (const auto& a : rs.positive_roots()) s += rs.cartan_int(highest, a);
  if (denominator(s) != 1) throw std::runtime_error("fs_indicator: non-integral pairing");
  return numerator(s) % 2 == 0 ? FsIndicator::orthogonal : FsIndicator::symplectic;
}

bool zero_in_omega(const WeightSystem& ws) {
  return ws.contains(WeightVector(ws.rs().ambient_dim(), Rational(0)));
}

std::vector<WeightVector> omega_alpha(const WeightSystem& ws, const WeightVector& alpha) {
  if (!ws.rs().is_root(alpha)) throw std::invalid_argument("omega_alpha: alpha is not a root");
  std::vector<WeightVector> out;
  for (const auto& l : ws.support())
    if (ws.contains(add(l, alpha))) out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}

WeightSet extremal_weights(const WeightSystem& ws) { return ws.rs().weyl_orbit(ws.highest()); }

namespace {

// Comparison key selecting the conventional class representatives: the vector
// representation ahead of the half-spins in D_4, and omega_n ahead of
// omega_{n-1} among the D_n half-spins.
VecQ congruence_key(const RootSystem& rs, VecQ c) {
  if (rs.family() == 'D' && c.size() >= 2) std::swap(c[c.size() - 1], c[c.size() - 2]);
  return c;
}

}  // namespace

VecQ canonical_coeffs(const RootSystem& rs, const VecQ& coeffs) {
  VecQ best = coeffs;
  VecQ best_key = congruence_key(rs, best);
  for (const auto& p : rs.diagram_automorphisms()) {
    VecQ img(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) img[p[i]] = coeffs[i];
    VecQ key = congruence_key(rs, img);
    if (key > best_key) {
      best = img;
      best_key = key;
    }
  }
  return best;
}

std::vector<VecQ> congruence_orbit(const RootSystem& rs, const VecQ& coeffs) {
  std::vector<VecQ> out;
  for (const auto& p : rs.diagram_automorphisms()) {
    VecQ img(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) img[p[i]] = coeffs[i];
    if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void enumerate_rec(const RootSystem& rs, const Integer& max_dim, VecQ& coeffs, int pos,
                   std::vector<VecQ>& out) {
  if (pos == rs.rank()) {
    bool zero = true;
    for (const auto& c : coeffs)
      if (!c.is_zero()) zero = false;
    if (!zero) out.push_back(coeffs);
    return;
  }
  for (long a = 0;; ++a) {
    coeffs[pos] = a;
    // weyl_dim is strictly monotone in every coefficient, so once the partial
    // weight (zeros further right) is too big the whole subtree is.
    if (weyl_dim(rs, rs.weight_from_fundamental(coeffs)) > max_dim) break;
    enumerate_rec(rs, max_dim, coeffs, pos + 1, out);
  }
  coeffs[pos] = 0;
}

}  // namespace

std::vector<VecQ> enumerate_dominant(const RootSystem& rs, const Integer& max_dim) {
  std::vector<VecQ> out;
  VecQ coeffs(rs.rank(), Rational(0));
  enumerate_rec(rs, max_dim, coeffs, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wb
