/*
  matalg.hpp — explicit matrix Lie algebras over exact scalars: the catalog
  (orthogonal/unitary/symplectic compact forms, split classical algebras,
  G2 as octonion derivations, F4/E6 from the exceptional Jordan algebra),
  tensor-space functors, realification/complexification, commutants and the
  real/complex/quaternionic trichotomy, invariant forms, and invariant
  subspace decomposition.

  Real representations carry Rational entries, complex ones Gaussian
  rationals.  Every constructor verifies bracket closure, linear independence
  of the basis and invariance of the declared form.
*/
#ifndef WB_MATALG_HPP
#define WB_MATALG_HPP

#include "wb/linalg.hpp"
#include "wb/rootsys.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wb {

enum class FormKind { none, symmetric, antisymmetric };

template <class F>
struct Rep {
  std::string name;
  int dim_v = 0;
  std::vector<Mat<F>> basis;
  FormKind form = FormKind::none;
  Mat<F> gram;                       // meaningful when form != none
  std::vector<int> cartan;           // indices of designated Cartan elements (may be empty)

  int dim_g() const { return static_cast<int>(basis.size()); }
};

using RealRep = Rep<Rational>;
using CplxRep = Rep<GaussQ>;
using AnyRep = std::variant<RealRep, CplxRep>;

template <class F>
Vec<F> flatten(const Mat<F>& m) {
  return m.a;
}

/// Verifies independence, bracket closure, and form invariance; throws on
/// violation.  Returns the structure constants c[i][j] with
/// [b_i, b_j] = sum_k c[i][j][k] b_k.
template <class F>
std::vector<std::vector<Vec<F>>> verify_rep(const Rep<F>& r);

/// Coordinates of a matrix in the basis of r (throws if not in the span).
template <class F>
Vec<F> coords_in_basis(const Rep<F>& r, const Mat<F>& m);

// --- catalog -------------------------------------------------------------

/// so(n) on R^n, identity form.
RealRep catalog_so(int n);
/// u(n) realified inside so(2n).
RealRep catalog_u_realified(int n);
/// su(n) realified inside so(2n).
RealRep catalog_su_realified(int n);
/// compact sp(n) realified inside so(4n).
RealRep catalog_sp_realified(int n);
/// so(2) + sp(n) realified inside so(4n)  (the iR + sp(n) model).
RealRep catalog_so2_plus_sp_realified(int n);
/// compact G2 inside so(7): derivations of the imaginary octonions.
RealRep catalog_g2_7();
/// traceless symmetric square of the G2 module, 27-dimensional.
RealRep catalog_sym2_0_g2_7();

/// gl(n,C), sl(n,C) on C^n (no invariant form).
CplxRep catalog_gl_C(int n);
CplxRep catalog_sl_C(int n);
/// so(n,C) on C^n, identity form.
CplxRep catalog_so_C(int n);
/// sp(n,C) on C^{2n}, antisymmetric form.
CplxRep catalog_sp_C(int n);
/// co(n,C) = C Id + so(n,C).
CplxRep catalog_co_C(int n);
/// C Id + sp(n,C).
CplxRep catalog_cid_plus_sp_C(int n);

/// Adjoint representation with an invariant symmetric form (the Killing
/// form), built from an explicit faithful model: split classical matrices for
/// A..D, octonion derivations for G2, Jordan-algebra derivations for F4, and
/// the Chevalley-Schafer construction for E6.  Cartan indices are designated
/// for A..D and G2; E7/E8 have no model here and are rejected.
RealRep catalog_adjoint(char family, int rank);

/// Block-diagonal sum acting on the orthogonal direct sum of the modules.
RealRep block_sum(const RealRep& a, const RealRep& b, const std::string& name);

/// Catalog lookup by canonical name, e.g. "so(5)", "u(2)_R", "sl(3,C)",
/// "adjoint(F,4)", "g2_7", "sym2_0(g2_7)", "so(2)+sp(2)R".
AnyRep catalog(const std::string& name);
/// All canonical names the catalog accepts (with small default parameters),
/// for the CLI listing.
std::vector<std::string> catalog_names();

// --- functors ------------------------------------------------------------

template <class F>
Rep<F> functor_dual(const Rep<F>& r);
template <class F>
Rep<F> functor_tensor(const Rep<F>& a, const Rep<F>& b);
template <class F>
Rep<F> functor_sym2(const Rep<F>& r);
template <class F>
Rep<F> functor_alt2(const Rep<F>& r);
/// Traceless part of sym^2 with respect to the preserved form of r.
template <class F>
Rep<F> functor_traceless_sym2(const Rep<F>& r);

CplxRep complexify(const RealRep& r);
RealRep realify(const CplxRep& r);

// --- structure analysis ----------------------------------------------------

/// Basis of {X : [X, b] = 0 for all basis elements b}.
template <class F>
std::vector<Mat<F>> commutant(const Rep<F>& r);

enum class ModuleType { real, complex, quaternionic };

/// Schur trichotomy of an irreducible real module by commutant dimension.
ModuleType classify_type(const RealRep& r);

struct BilinearForms {
  std::vector<Mat<Rational>> symmetric_R;      // for real reps
  std::vector<Mat<Rational>> antisymmetric_R;
  std::vector<MatG> symmetric_C;               // for complex reps
  std::vector<MatG> antisymmetric_C;
  int dim_symmetric = 0, dim_antisymmetric = 0;
};

template <class F>
BilinearForms invariant_bilinear_forms(const Rep<F>& r);

/// Real solution space of X^T M + M conj(X) = 0 for a complex rep.
std::vector<MatG> invariant_sesquilinear_forms(const CplxRep& r);

/// Spin-up test: every seed vector generates the full space.  A failed seed
/// yields an explicit invariant subspace, which certifies reducibility.
struct IrreducibilityResult {
  bool irreducible;
  std::vector<VecQ> invariant_subspace;  // certificate when reducible
};
IrreducibilityResult is_irreducible(const RealRep& r);

struct IsotypicDecomposition {
  std::vector<std::vector<VecQ>> blocks;   // E_1..E_r bases (orthogonal subspaces)
  std::vector<VecQ> trivial;               // E_0 basis
  std::vector<std::vector<int>> ideal_of_block;  // indices of basis elements spanning g_i
};

/// Orthogonal split into irreducible blocks plus the trivial part, with the
/// ideal acting on each block.  Pre: positive-definite symmetric form.
IsotypicDecomposition isotypic_decomposition(const RealRep& r);

}  // namespace wb

#endif
