/*
  curvature.hpp — the curvature space K(g), the weak-curvature space B_h(g),
  their evaluation ideals, first prolongations g^(1) and g^[1,1], the graded
  weight analysis (Gamma) for torus-equipped complex models, and the
  Berger/weak-Berger verdicts.

  All spaces are exact kernels of streamed constraint systems; dimensions are
  basis independent.  An optional modular mode computes ranks over a few large
  primes for problems past the exact-arithmetic budget; its results are
  labeled probabilistic and never feed the exact reports.
*/
#ifndef WB_CURVATURE_HPP
#define WB_CURVATURE_HPP

#include "wb/matalg.hpp"

#include <functional>
#include <optional>

namespace wb {

template <class F>
struct SubspaceBasis {
  std::string ambient;
  int ambient_dim = 0;
  std::vector<Vec<F>> vectors;
  int dim() const { return static_cast<int>(vectors.size()); }
};

struct CurvatureReport {
  std::string algebra_name;
  int dim_g = 0;
  int dim_v = 0;
  int dim_K = -1;   // -1: not computed
  int dim_Bh = -1;
  int dim_g_underline = -1;
  int dim_g_h = -1;
  bool is_berger = false;
  bool is_weak_berger = false;
  std::string mode = "exact";
  std::optional<std::string> gamma_info;
};

/// K(g) = first-Bianchi solutions in Lambda^2 V* (x) g.  Unknown layout:
/// pair index (i<j, row-major) times algebra index.
template <class F>
SubspaceBasis<F> k_space(const Rep<F>& r, size_t ambient_cap = 5000);

/// B_h(g) = cyclic h-Bianchi solutions in V* (x) g.  Unknown layout:
/// module index times algebra index.  Requires a nondegenerate symmetric form.
template <class F>
SubspaceBasis<F> bh_space(const Rep<F>& r, size_t ambient_cap = 5000);

/// g^(1) = symmetric elements of V* (x) g.  Same layout as bh_space.
template <class F>
SubspaceBasis<F> first_prolongation(const Rep<F>& r, size_t ambient_cap = 5000);

/// Basis (in algebra coordinates) of span{ Q(x) } over a B_h- or g^(1)-style
/// subspace, resp. span{ R(x,y) } over a K-style subspace.
template <class F>
std::vector<Vec<F>> evaluation_span_vector_type(const Rep<F>& r, const SubspaceBasis<F>& s);
template <class F>
std::vector<Vec<F>> evaluation_span_pair_type(const Rep<F>& r, const SubspaceBasis<F>& s);

/// True if each ideal candidate is bracket-closed against the whole algebra.
template <class F>
bool is_ideal(const Rep<F>& r, const std::vector<Vec<F>>& span_coords);

/// True iff the g-action maps the subspace into itself (Eq. (A.Q)(x) =
/// -Q(Ax) + [A, Q(x)] for vector type, the two-slot analogue for pair type).
template <class F>
bool module_action_check_vector_type(const Rep<F>& r, const SubspaceBasis<F>& s);
template <class F>
bool module_action_check_pair_type(const Rep<F>& r, const SubspaceBasis<F>& s);

/// Full report: B_h plus (optionally) K, evaluation ideals, verdicts.
template <class F>
CurvatureReport curvature_report(const Rep<F>& r, bool with_K = true, size_t ambient_cap = 5000);

/// Probabilistic rank mode: dimensions from ranks over three 61-bit primes.
CurvatureReport curvature_report_modular(const RealRep& r, bool with_K = true);

// --- first prolongation, conjugate pair space, tilde checks -----------------

struct TildeChecks {
  int dim_g1 = 0;          // dim_C g^(1)
  int dim_g11 = 0;         // dim_R g^[1,1]
  int dim_g_tilde = 0;     // dim_C span{Q(u)}
  int dim_g_tilde_tilde = 0;
  bool g_tilde_equals_g = false;        // weak-Berger criterion (Cor. on prolongations)
  bool g_tilde_tilde_equals_g = false;  // Berger criterion
};

/// The conjugation used for g^[1,1] is A -> -conj(A)^T (fixing the compact
/// real form g ^ u(V)); throws if the algebra is not closed under it.
SubspaceBasis<Rational> prolong_1_1(const CplxRep& r, const SubspaceBasis<GaussQ>& g1);

TildeChecks tilde_checks(const CplxRep& r);

// --- torus-graded analysis ----------------------------------------------------

struct GammaReport {
  std::vector<VecG> delta0;           // ad-weight tuples of g including zero
  std::vector<VecG> gamma;            // realized evaluation weights
  bool gamma_subset_delta0 = false;
  bool gamma_equals_delta0 = false;
  bool torus_span_condition = false;  // span{Q_{-mu}(u_mu)} = t
  int dim_bh = 0;
};

/// Requires r.cartan nonempty and the torus action diagonalizable over the
/// Gaussian rationals.
GammaReport gamma_set(const CplxRep& r);

/// Weight-space orthogonality: V_mu is gram-orthogonal to V_lambda unless
/// lambda = -mu.  Requires a designated Cartan and a declared form.
bool weight_pairing_check(const CplxRep& r);

struct DimIdentityReport {
  int dim_bh_real = -1;          // dim_R B_h(r0)
  int dim_bh_complexified = -1;  // dim_C B_H(r0^C); equals dim_bh_real
  int dim_k_real = -1;
  int dim_k_complexified = -1;
  int dim_g1_complex = -1;   // dim_C g^(1) of the complex half (if given)
  int dim_g11_real = -1;     // dim_R g^[1,1]
  bool bh_complexification_ok = false;  // Eq: (B_h)^C = B_{h^C}
  bool k_complexification_ok = false;
  bool bh_prolongation_ok = false;  // dim_R B_h = dim_R g^(1) = 2 dim_C g^(1)
  bool k_prolongation_ok = false;   // dim_R K = dim_R g^[1,1]
};

/// Computes both sides of the complexification identities, and for a supplied
/// complex half (non-real type situation) the prolongation identities.
DimIdentityReport dim_identity_checks(const RealRep& r0, const CplxRep* complex_half);

}  // namespace wb

#endif
