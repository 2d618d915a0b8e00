#pragma once

#include "ttolab/common.hpp"
#include "ttolab/modelspace.hpp"

namespace ttolab {

/// The canonical conjugation f -> u conj(chi f) of a model space, stored
/// through its matrix J in the orthonormal basis: the map acts on
/// coefficients as x -> J conj(x).  J is symmetric and unitary, so the
/// map is an isometric involution.
class Conjugation {
 public:
  explicit Conjugation(const ModelSpace& space, cplx unimodular_scale = 1.0);

  const ModelSpace& space() const { return *space_; }
  const Mat& matrix() const { return j_; }

  ModelVector apply(const ModelVector& f) const;
  Vec apply_coeffs(const Vec& x) const { return j_ * x.conjugate(); }

 private:
  const ModelSpace* space_;
  Mat j_;
};

/// Pointwise check of the divisor identity: applying first the conjugation
/// of u/v and then the conjugation of u multiplies by v.  Works on raw
/// samples (the identity holds pointwise on the circle), returns the max
/// abs deviation over the nodes.  Requires divides(v, u).
double lemma1_residual(const BlaschkeProduct& u, const BlaschkeProduct& v,
                       const Vec& f_samples, const QuadratureGrid& grid);

struct CSymmetryResult {
  bool symmetric = false;
  double matrix_residual = 0.0;  // ||A^* - J conj(A) conj(J)||_F
  double form_residual = 0.0;    // max |Q_A(f) - Q_A(Cf)| over probe vectors
};

/// Tests A^* = C A C.  The matrix identity is the primary criterion; the
/// quadratic-form probe on a few deterministic pseudo-random vectors is a
/// secondary sanity check and is reported alongside.
CSymmetryResult is_c_symmetric(const Mat& a, const Conjugation& c,
                               double tolerance = tol::kIdentityTol);

}  // namespace ttolab
