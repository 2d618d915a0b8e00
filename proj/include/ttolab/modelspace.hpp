#pragma once

#include <vector>

#include "ttolab/common.hpp"
#include "ttolab/inner.hpp"

namespace ttolab {

/// Equispaced nodes exp(2 pi i m / M) on the unit circle with uniform
/// weight 1/M.  The induced bilinear pairing integrates products of
/// trigonometric polynomials of total degree < M exactly, so inner
/// products of polynomials of degree < M/2 are exact up to roundoff.
struct QuadratureGrid {
  int size = 0;
  Vec nodes;

  static QuadratureGrid make(int grid_size);

  double weight() const { return 1.0 / static_cast<double>(size); }

  /// <f, g> = (1/M) sum f_m conj(g_m).
  cplx inner(const Vec& f, const Vec& g) const { return g.dot(f) * weight(); }
  double norm(const Vec& f) const { return f.norm() * std::sqrt(weight()); }
};

class ModelSpace;

/// Element of a model space, stored by coefficients in the space's
/// orthonormal basis.  The referenced space must outlive the vector.
struct ModelVector {
  Vec coeffs;
  const ModelSpace* space = nullptr;

  double norm() const { return coeffs.norm(); }
};

/// Finite-dimensional model space attached to a finite Blaschke product u:
/// the orthogonal complement of u * H^2 inside H^2, of dimension deg(u).
///
/// The stored orthonormal basis is the Takenaka-Malmquist system for the
/// canonically ordered zeros a_1..a_n:
///
///   gamma_k(z) = sqrt(1-|a_k|^2) / (1 - conj(a_k) z) * prod_{j<k} b_{a_j}(z)
///
/// sampled on the quadrature grid.  All zeros lie strictly inside the
/// circle, so every sampled function is a rational function with poles
/// outside the closed disc and grid inner products converge geometrically.
class ModelSpace {
 public:
  explicit ModelSpace(BlaschkeProduct u, int grid_size = tol::kDefaultGridSize);

  int dim() const { return u_.degree(); }
  const BlaschkeProduct& inner_function() const { return u_; }
  const QuadratureGrid& grid() const { return grid_; }

  /// M x n matrix of basis samples; column k holds gamma_{k+1} on the nodes.
  const Mat& basis_samples() const { return basis_; }
  const Vec& u_samples() const { return u_samples_; }

  /// gamma_1(z), ..., gamma_n(z) at an arbitrary point (|z| <= 1 in
  /// practice; the formulas are rational with poles outside the disc).
  Vec basis_eval(cplx z) const;

  /// Coefficients of the orthogonal projection onto the space of a
  /// function given by its samples on the grid nodes.
  ModelVector project(const Vec& samples) const;

  Vec samples_of(const ModelVector& f) const;
  cplx eval(const ModelVector& f, cplx z) const;

  /// Reproducing kernel k_w = (1 - conj(u(w)) u) / (1 - conj(w) z), |w| < 1.
  ModelVector reproducing_kernel(cplx w) const;

  /// Orthonormal basis of the orthogonal complement, inside the space, of
  /// the backward shift of u: span{ conj(chi) (u - u(0)) }.  The returned
  /// n-1 vectors g all satisfy chi*g in the space again.
  std::vector<ModelVector> ku0_basis() const;

  /// Isometric embedding matrix E of the model space of a divisor v:
  /// E_{kj} = <gamma^v_j, gamma^u_k>, size n x deg(v), E^* E = I.
  Mat embed(const BlaschkeProduct& v) const;

 private:
  BlaschkeProduct u_;
  QuadratureGrid grid_;
  Mat basis_;
  Vec u_samples_;
};

/// Takenaka-Malmquist samples for an arbitrary zero list on given nodes;
/// column k is gamma_{k+1}.  Shared by ModelSpace and the embeddings.
Mat takenaka_malmquist_samples(const BlaschkeProduct& u, const Vec& nodes);

}  // namespace ttolab
