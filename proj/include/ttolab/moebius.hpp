#pragma once

#include "ttolab/common.hpp"
#include "ttolab/modelspace.hpp"
#include "ttolab/tto.hpp"

namespace ttolab {

/// u composed with the disc automorphism b_a, reduced to canonical form:
/// the composition equals `constant * product` with |constant| = 1 and
/// `product` the Blaschke product over the pulled-back zeros b_{-a}(a_k).
struct MoebiusComposition {
  BlaschkeProduct product;
  cplx constant;
};

/// Requires |a| < 1.  The constant is fixed by matching the composition
/// against the canonical product at the boundary point 1 (both values are
/// unimodular there, so the match never degenerates, unlike matching at 0
/// when the origin is among the pulled-back zeros).
MoebiusComposition compose_with_moebius(const BlaschkeProduct& u, cplx a);

/// Matrix of f -> sqrt(1-|a|^2) / (1 - conj(a) chi) * (f o b_a) between
/// the two orthonormal bases; a unitary map from the model space of u onto
/// the model space of the composed product.  `target` must be built from
/// compose_with_moebius(u, a).product.
Mat omega_matrix(const ModelSpace& space_u, cplx a, const ModelSpace& target);

double unitarity_residual(const Mat& w);

/// || W J_u - J_t conj(W) ||_F, where J_t is the target conjugation scaled
/// by the composition constant (the conjugation of the composed function
/// itself, not of its canonical form).
double intertwining_residual(const ModelSpace& space_u, cplx a);

/// Frobenius distance between W T_u W^* and the compression span built
/// directly on the target space, as projectors.
double transport_distance(const ModelSpace& space_u, cplx a);

struct CrofootReport {
  double unitarity = 0.0;
  double intertwining = 0.0;
  double transport = 0.0;
  int dim_source = 0;
  int dim_target = 0;
};

CrofootReport crofoot_check(const ModelSpace& space_u, cplx a);

}  // namespace ttolab
