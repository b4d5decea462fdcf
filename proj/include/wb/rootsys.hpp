/*
  rootsys.hpp — exact realizations of the reduced indecomposable root systems
  A_n ... G_2 with Weyl-group operations.

  Realizations follow the classical coordinate models (Knapp, appendix C):
  A_n lives in the sum-zero hyperplane of Q^{n+1}, B/C/D_n in Q^n, G_2 in the
  sum-zero hyperplane of Q^3, F_4 in Q^4 and E_6/E_7/E_8 inside Q^8.  The
  inner product is the standard dot product in every model.  All data are
  rational and immutable after construction.
*/
#ifndef WB_ROOTSYS_HPP
#define WB_ROOTSYS_HPP

#include "wb/linalg.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace wb {

using WeightVector = VecQ;
using WeightSet = std::unordered_set<WeightVector, RationalVecHash>;

Rational dot(const WeightVector& a, const WeightVector& b);
WeightVector add(const WeightVector& a, const WeightVector& b);
WeightVector sub(const WeightVector& a, const WeightVector& b);
WeightVector scale(const WeightVector& a, const Rational& s);
WeightVector negate(const WeightVector& a);
bool is_zero_vec(const WeightVector& a);
std::string fmt(const WeightVector& a);

class RootSystem {
 public:
  /// Valid pairs: A n>=1, B n>=2, C n>=2, D n>=3, E n in {6,7,8}, F n=4, G n=2.
  static RootSystem build(char family, int rank);

  char family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_; }

  const std::vector<WeightVector>& simple_roots() const { return simple_; }
  const std::vector<WeightVector>& positive_roots() const { return positive_; }
  const std::vector<WeightVector>& all_roots() const { return roots_; }
  const std::vector<WeightVector>& fundamental_weights() const { return omega_; }
  const MatQ& inner_product() const { return gram_; }
  const WeightVector& rho() const { return rho_; }

  bool is_root(const WeightVector& v) const { return root_set_.count(v) > 0; }
  /// Membership in Delta_0 = Delta u {0}.
  bool in_delta0(const WeightVector& v) const { return is_zero_vec(v) || is_root(v); }

  /// 2<beta,alpha>/<alpha,alpha>, exact.  alpha must be nonzero.
  Rational cartan_int(const WeightVector& beta, const WeightVector& alpha) const;

  /// Reflection s_alpha(phi) = phi - cartan_int(phi,alpha) alpha.
  WeightVector reflect(const WeightVector& phi, const WeightVector& alpha) const;

  /// Alpha-string through beta: beta + k alpha is a root for -p <= k <= q.
  /// Requires beta not proportional to alpha.
  std::pair<int, int> root_string(const WeightVector& beta, const WeightVector& alpha) const;

  /// Orbit under the group generated by the simple reflections.
  WeightSet weyl_orbit(const WeightVector& lambda, size_t cap = 4'000'000) const;

  /// The unique dominant element of the Weyl orbit of lambda.
  WeightVector dominant_rep(WeightVector lambda) const;

  /// -w_0(lambda) = dominant_rep(-lambda); highest weight of the dual module.
  WeightVector minus_w0(const WeightVector& lambda) const { return dominant_rep(negate(lambda)); }

  /// For a long root beta in a two-length system other than G_2: orthogonal
  /// roots (alpha, gamma) with alpha + gamma = beta.
  std::pair<WeightVector, WeightVector> long_orthogonal_split(const WeightVector& beta_long) const;

  bool two_lengths() const { return len2_short_ != len2_long_; }
  const Rational& long_norm2() const { return len2_long_; }
  const Rational& short_norm2() const { return len2_short_; }
  bool is_long(const WeightVector& r) const { return dot(r, r) == len2_long_; }
  bool is_short(const WeightVector& r) const { return dot(r, r) == len2_short_; }

  /// Highest root (the dominant long root).
  const WeightVector& highest_root() const { return highest_root_; }
  /// Dominant short root (equals the highest root in simply-laced systems).
  const WeightVector& highest_short_root() const { return highest_short_; }

  /// Coordinates of v in the basis of simple roots (v must lie in their span).
  VecQ simple_root_coords(const WeightVector& v) const;
  /// Coefficients <v, alpha_i^vee> over the fundamental weights.
  VecQ fundamental_coords(const WeightVector& v) const;
  /// Rebuild an ambient vector from fundamental-weight coefficients.
  WeightVector weight_from_fundamental(const VecQ& coeffs) const;

  bool is_dominant(const WeightVector& v) const;
  /// Dominant and all <v, alpha_i^vee> integers.
  bool is_dominant_integral(const WeightVector& v) const;

  /// Order of the Weyl group via the orbit of rho (rho has trivial stabilizer).
  size_t weyl_order(size_t cap = 4'000'000) const;

  /// Permutations of simple-root indices induced by the Dynkin-diagram
  /// automorphisms (identity included).
  std::vector<std::vector<int>> diagram_automorphisms() const;

  std::string name() const { return std::string(1, family_) + std::to_string(rank_); }

 private:
  char family_;
  int rank_;
  int ambient_;
  std::vector<WeightVector> simple_;
  std::vector<WeightVector> positive_;
  std::vector<WeightVector> roots_;
  std::vector<WeightVector> omega_;
  WeightSet root_set_;
  MatQ gram_;
  MatQ cartan_inv_;  // inverse of the Cartan matrix
  MatQ simple_gram_inv_;
  WeightVector rho_;
  WeightVector highest_root_, highest_short_;
  Rational len2_long_, len2_short_;
};

}  // namespace wb

#endif
