/*
  repweights.hpp — weight systems of irreducible highest-weight modules and
  the representation-level predicates used by the screening: self-duality,
  Frobenius-Schur indicator, zero weight, Omega_alpha, extremal weights.

  The support is computed by saturation from the highest weight; Freudenthal's
  recursion supplies multiplicities on demand (the criteria only consume the
  support, multiplicities feed the dimension cross-checks).
*/
#ifndef WB_REPWEIGHTS_HPP
#define WB_REPWEIGHTS_HPP

#include "wb/rootsys.hpp"

#include <unordered_map>

namespace wb {

class WeightSystem {
 public:
  WeightSystem(const RootSystem& rs, WeightVector highest);

  const RootSystem& rs() const { return *rs_; }
  const WeightVector& highest() const { return highest_; }
  const WeightSet& support() const { return support_; }
  bool contains(const WeightVector& w) const { return support_.count(w) > 0; }
  /// Dominant weights of the module, sorted by decreasing depth from the top.
  const std::vector<WeightVector>& dominant_weights() const { return dominant_; }

  /// Freudenthal multiplicity (computed lazily over the dominant chamber).
  Integer multiplicity(const WeightVector& w) const;
  /// Sum of multiplicities over the support.
  Integer dimension_by_multiplicities() const;

 private:
  void freudenthal() const;

  const RootSystem* rs_;
  WeightVector highest_;
  WeightSet support_;
  std::vector<WeightVector> dominant_;
  mutable std::unordered_map<WeightVector, Integer, RationalVecHash> mult_;
};

/// Exact weight support + multiplicities of V(highest). Pre: dominant integral.
WeightSystem weight_system(const RootSystem& rs, const WeightVector& highest);

/// Weyl dimension formula.
Integer weyl_dim(const RootSystem& rs, const WeightVector& highest);

/// True iff -w0(highest) = highest.
bool is_self_dual(const RootSystem& rs, const WeightVector& highest);

enum class FsIndicator { orthogonal, symplectic };

/// Frobenius-Schur indicator of a self-dual module: parity of <L, 2 rho^vee>.
FsIndicator fs_indicator(const RootSystem& rs, const WeightVector& highest);

/// True iff 0 is a weight (equivalently, highest lies in the root lattice).
bool zero_in_omega(const WeightSystem& ws);

/// Weights l of the module with l + alpha again a weight.
std::vector<WeightVector> omega_alpha(const WeightSystem& ws, const WeightVector& alpha);

/// Weyl orbit of the highest weight.
WeightSet extremal_weights(const WeightSystem& ws);

/// Congruence canonicalization: minimum of the fundamental-coefficient vector
/// over the Dynkin-diagram automorphisms.
VecQ canonical_coeffs(const RootSystem& rs, const VecQ& coeffs);
std::vector<VecQ> congruence_orbit(const RootSystem& rs, const VecQ& coeffs);

/// All nonzero dominant integral weights with weyl_dim <= max_dim,
/// enumerated in deterministic (lexicographic coefficient) order.
std::vector<VecQ> enumerate_dominant(const RootSystem& rs, const Integer& max_dim);

}  // namespace wb

#endif
