#pragma once

#include <vector>

#include "ttolab/common.hpp"

namespace ttolab {

/// Finite Blaschke product, represented by its zero list.
///
/// Zeros are kept in a canonical order: sorted by modulus, then by angle
/// in [0, 2pi), ties resolved by insertion order.  The ordering makes the
/// orthonormal basis attached to the product (and hence "prefix" divisors)
/// reproducible across runs.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;  // empty product, identically 1
  explicit BlaschkeProduct(std::vector<cplx> zeros);

  int degree() const { return static_cast<int>(zeros_.size()); }
  const std::vector<cplx>& zeros() const { return zeros_; }

  /// Product of (z - a_k) / (1 - conj(a_k) z) over all zeros.
  cplx eval(cplx z) const;

 private:
  std::vector<cplx> zeros_;
};

/// Single factor (z - a) / (1 - conj(a) z).
cplx blaschke_factor(cplx a, cplx z);

/// Multiset inclusion of zero lists, zeros matched to within tol::kZeroMatch.
bool divides(const BlaschkeProduct& v, const BlaschkeProduct& u);

/// Removes v's zeros from u's (multiset difference); requires divides(v, u).
/// The survivors keep the canonical order.
BlaschkeProduct quotient(const BlaschkeProduct& u, const BlaschkeProduct& v);

struct Atom {
  double angle;   // radians, stored in [0, 2pi)
  double weight;  // > 0, normalized-arclength mass
};

/// Finite positive atomic measure on the unit circle.  Atoms are stored
/// sorted by angle; angles must be pairwise distinct.
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  double total_mass() const { return total_mass_; }
  bool empty() const { return atoms_.empty(); }

 private:
  std::vector<Atom> atoms_;
  double total_mass_ = 0.0;
};

/// Singular inner function exp(-sum_j w_j (zeta_j + z) / (zeta_j - z))
/// attached to an atomic measure, zeta_j = exp(i angle_j).
class SingularInner {
 public:
  explicit SingularInner(AtomicMeasure measure);

  const AtomicMeasure& measure() const { return measure_; }

  /// Interior evaluation; requires |z| < 1.
  cplx eval(cplx z) const;

  /// Evaluation at exp(i theta).  The Herglotz kernel is i*cot((theta -
  /// angle_j)/2) there, so the exponent is purely imaginary and the result
  /// is computed to have modulus 1.  Angles within atom_cutoff radians of
  /// an atom are rejected.
  cplx boundary_eval(double theta, double atom_cutoff = tol::kAtomCutoff) const;

 private:
  AtomicMeasure measure_;
};

/// Circular distance between two angles, in [0, pi].
double angular_distance(double a, double b);

}  // namespace ttolab
