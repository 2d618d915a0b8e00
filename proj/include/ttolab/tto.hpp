#pragma once

#include <vector>

#include "ttolab/common.hpp"
#include "ttolab/conjugation.hpp"
#include "ttolab/modelspace.hpp"

namespace ttolab {

/// Operator on a model space, stored in the space's orthonormal basis.
struct ModelOperator {
  Mat matrix;
  const ModelSpace* space = nullptr;
};

/// Compression to the model space of multiplication by a symbol given by
/// its node samples: entries <phi gamma_j, gamma_k>.
ModelOperator tto_from_symbol(const ModelSpace& space, const Vec& symbol_samples);

/// Compression of multiplication by the coordinate function.
ModelOperator compressed_shift(const ModelSpace& space);

/// Column-major vectorization used for all Frobenius-geometry work.
Vec vec(const Mat& a);
Mat unvec(const Vec& x, int n);

/// The space of all symbol compressions on a model space of dimension n.
/// It is spanned by the compressions of chi^0..chi^{n-1} and of
/// conj(chi)^1..conj(chi)^{n-1}; the span has complex dimension 2n-1 for
/// every finite Blaschke product (a trig polynomial of degree < n whose
/// compression vanishes must be divisible by the product on both the
/// analytic and the anti-analytic side, killing it).  Construction fails
/// loudly if the numerics disagree.
class TtoSpace {
 public:
  static TtoSpace build(const ModelSpace& space);

  const ModelSpace& space() const { return *space_; }
  int dim() const { return static_cast<int>(basis_.cols()); }

  /// Orthonormal (Frobenius) basis, one vectorized operator per column.
  const Mat& basis() const { return basis_; }
  const std::vector<ModelOperator>& spanning_family() const { return family_; }

  Mat project(const Mat& a) const;
  double membership_distance(const Mat& a) const;

  /// n^2 x n^2 orthogonal projector in the Frobenius geometry.
  Mat projector() const { return basis_ * basis_.adjoint(); }

 private:
  const ModelSpace* space_ = nullptr;
  std::vector<ModelOperator> family_;
  Mat basis_;
};

/// Shift-invariance defect of the quadratic form of A on the subspace
/// returned by ku0_basis: max over basis pairs (g_i, g_j) of
/// |<A Sg_i, Sg_j> - <A g_i, g_j>|, S being multiplication by chi followed
/// by expansion in the model basis.  Zero (to quadrature accuracy) exactly
/// for symbol compressions.
double sarason_residual(const ModelOperator& a);

/// E^* A E on the model space of a divisor; target must be built from a
/// divisor of A's product on the same grid size.
ModelOperator compress(const ModelOperator& a, const ModelSpace& target);

struct OperatorSubspace {
  Mat basis;  // n^2 x d, orthonormal columns (vectorized operators)
  int dim = 0;
};

/// Solves, over real scalars, for all A satisfying the two constraint
/// families of the symmetry characterization at a zero a of the product:
///   (1) A^* = C A C for the space's conjugation,
///   (2) the quadratic form of A agrees with its pullback under the
///       conjugation of u / b_a on the embedded divisor space.
/// Both families are linear over R in (Re A, Im A); the solution set is a
/// complex subspace and a complex orthonormal basis of it is returned.
OperatorSubspace symmetry_constraint_space(const ModelSpace& space, cplx a);

/// Constraint (1) alone (the C-symmetric operators, complex dimension
/// n(n+1)/2); exposed for diagnostics.
OperatorSubspace c_symmetric_space(const ModelSpace& space);

/// Max residual of the two constraint families evaluated on a given A;
/// companion to symmetry_constraint_space for one-sided checks.
double symmetry_constraint_residual(const ModelSpace& space, cplx a, const Mat& A);

struct TheoremReport {
  int dim_constraint = 0;   // solution space of the two families
  int dim_tto = 0;          // span of the symbol compressions
  double projector_distance = 0.0;
  double sarason_max_residual = 0.0;
};

/// Builds both subspaces and compares them as projectors in the Frobenius
/// geometry; also reports the worst Sarason residual over the compression
/// span's orthonormal basis.
TheoremReport theorem_check(const ModelSpace& space, cplx a);

/// Frobenius distance between the projectors of two operator subspaces.
double subspace_distance(const OperatorSubspace& s, const OperatorSubspace& t);

}  // namespace ttolab
