/*
  criteria.hpp — the necessary conditions for irreducible orthogonal modules
  of real type to be (weak-)Berger: (PI)/(PII), (QI)/(QII), the spanning-triple
  conditions (SI)/(SII) and the Berger-side (RI)/(RII), plus the screening
  pipeline that reproduces the classification candidate lists.

  Hyperplane existence is decided constructively: the affine (resp. linear)
  hull of the set that must lie inside U is computed exactly; the condition
  holds iff that hull is proper and misses the excluded weights.  A canonical
  normal is produced as a witness and re-verified against the definition.
*/
#ifndef WB_CRITERIA_HPP
#define WB_CRITERIA_HPP

#include "wb/repweights.hpp"

#include <map>
#include <optional>
#include <string>

namespace wb {

/// A hyperplane {x : <normal, x> = offset} in simple-root coordinates.
struct Hyperplane {
  VecQ normal;
  Rational offset;
};

struct SpanningTriple {
  WeightVector mu1, mu2;
  WeightVector alpha;
};

struct PlanarSpanningTriple {
  WeightVector mu1, mu2;
  Hyperplane plane;
};

struct PIWitness {
  WeightVector mu;
  Hyperplane plane;  // linear: offset = 0
};

struct QIWitness {
  WeightVector delta;
  Hyperplane plane;
};

struct SIIWitness {
  WeightVector highest;
  std::vector<WeightVector> alphas;  // every root satisfying the inclusion
};

struct PIIResult {
  bool passed;
  std::map<WeightVector, WeightVector> mu_for_alpha;  // alpha -> witness mu_alpha
  std::optional<WeightVector> failing_alpha;
};

struct RIWitness {
  WeightVector mu1, mu2;
  Hyperplane plane;
};

std::optional<PIWitness> check_PI(const WeightSystem& ws);
PIIResult check_PII(const WeightSystem& ws);
std::optional<QIWitness> check_QI(const WeightSystem& ws);
std::optional<SIIWitness> check_QII(const WeightSystem& ws);
std::optional<PlanarSpanningTriple> check_SI(const WeightSystem& ws,
                                             size_t orbit_cap = 4'000'000);
std::optional<SIIWitness> check_SII(const WeightSystem& ws);
std::optional<RIWitness> check_RI(const WeightSystem& ws);
PIIResult check_RII(const WeightSystem& ws);

/// Structured outcome of screening one highest weight.
struct ScreenVerdict {
  char family;
  int rank;
  VecQ coeffs;            // fundamental-weight coefficients of the highest weight
  VecQ canonical;         // congruence-canonical coefficient vector
  std::vector<VecQ> congruent;  // full diagram-automorphism orbit of coeffs
  std::string weight;     // ambient coordinates, formatted
  Integer dim;
  bool self_dual = false;
  bool orthogonal = false;
  bool real_type = false;
  bool zero_weight = false;
  std::vector<std::string> passed;              // which criteria hold
  std::map<std::string, std::string> witnesses;  // criterion -> description
  std::optional<std::string> rejected_by;
  std::optional<std::string> classification_label;
  bool survivor = false;
};

struct ScreenOptions {
  bool run_all_criteria = false;  // PI/PII/QI/RI/RII in addition to SI/SII/QII
  size_t orbit_cap = 4'000'000;
};

ScreenVerdict screen(const RootSystem& rs, const WeightVector& highest,
                     const ScreenOptions& opts = {});

struct ScreenRangeOptions {
  std::vector<std::pair<char, int>> systems;  // explicit (family, rank) list; empty = all
  int max_rank = 0;                           // used when systems is empty
  Integer max_dim = 0;
  bool no_zero_weight = false;  // keep only candidates without weight zero
  bool run_all_criteria = false;
  int threads = 1;
  bool merge_congruent = true;  // one verdict per congruence class
  size_t orbit_cap = 4'000'000;
};

/// Screens every self-dual orthogonal dominant weight in range; deterministic
/// order independent of thread count.
std::vector<ScreenVerdict> screen_range(const ScreenRangeOptions& opts);

/// All valid (family, rank) pairs with rank <= max_rank, in deterministic order.
std::vector<std::pair<char, int>> systems_up_to_rank(int max_rank);

}  // namespace wb

#endif
