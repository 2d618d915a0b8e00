#include "ttolab/inner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ttolab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double canonical_angle(cplx a) {
  double ang = std::arg(a);
  if (ang < 0.0) ang += kTwoPi;
  return ang;
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros) : zeros_(std::move(zeros)) {
  for (std::size_t k = 0; k < zeros_.size(); ++k) {
    if (std::abs(zeros_[k]) >= 1.0 - tol::kZeroModulusGuard) {
      throw std::invalid_argument("blaschke zero " + std::to_string(k) +
                                  " has modulus too close to the unit circle");
    }
  }
  std::stable_sort(zeros_.begin(), zeros_.end(), [](cplx a, cplx b) {
    double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return canonical_angle(a) < canonical_angle(b);
  });
}

cplx blaschke_factor(cplx a, cplx z) { return (z - a) / (1.0 - std::conj(a) * z); }

cplx BlaschkeProduct::eval(cplx z) const {
  cplx p = 1.0;
  for (cplx a : zeros_) p *= blaschke_factor(a, z);
  return p;
}

bool divides(const BlaschkeProduct& v, const BlaschkeProduct& u) {
  if (v.degree() > u.degree()) return false;
  std::vector<bool> used(u.zeros().size(), false);
  for (cplx b : v.zeros()) {
    double best = 2.0;
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < u.zeros().size(); ++k) {
      if (used[k]) continue;
      double d = std::abs(u.zeros()[k] - b);
      if (d < best) {
        best = d;
        best_k = k;
      }
    }
    if (best > tol::kZeroMatch) return false;
    used[best_k] = true;
  }
  return true;
}

BlaschkeProduct quotient(const BlaschkeProduct& u, const BlaschkeProduct& v) {
  std::vector<bool> used(u.zeros().size(), false);
  for (cplx b : v.zeros()) {
    double best = 2.0;
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < u.zeros().size(); ++k) {
      if (used[k]) continue;
      double d = std::abs(u.zeros()[k] - b);
      if (d < best) {
        best = d;
        best_k = k;
      }
    }
    if (best > tol::kZeroMatch) {
      throw std::invalid_argument("quotient: divisor zero not present in the product");
    }
    used[best_k] = true;
  }
  std::vector<cplx> rest;
  for (std::size_t k = 0; k < u.zeros().size(); ++k) {
    if (!used[k]) rest.push_back(u.zeros()[k]);
  }
  // Survivors of a sorted list are already sorted; the constructor re-sorts
  // anyway, which is a no-op here.
  return BlaschkeProduct(std::move(rest));
}

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (std::size_t j = 0; j < atoms_.size(); ++j) {
    if (!(atoms_[j].weight > 0.0)) {
      throw std::invalid_argument("atoms[" + std::to_string(j) + "].weight must be positive");
    }
    atoms_[j].angle = wrap_angle(atoms_[j].angle);
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.angle < b.angle; });
  for (std::size_t j = 0; j + 1 < atoms_.size(); ++j) {
    if (angular_distance(atoms_[j].angle, atoms_[j + 1].angle) < tol::kZeroMatch) {
      throw std::invalid_argument("atoms[" + std::to_string(j) + "] and atoms[" +
                                  std::to_string(j + 1) + "] share an angle");
    }
  }
  if (atoms_.size() > 1 &&
      angular_distance(atoms_.front().angle, atoms_.back().angle) < tol::kZeroMatch) {
    throw std::invalid_argument("first and last atom share an angle");
  }
  total_mass_ = 0.0;
  for (const Atom& a : atoms_) total_mass_ += a.weight;
}

SingularInner::SingularInner(AtomicMeasure measure) : measure_(std::move(measure)) {}

cplx SingularInner::eval(cplx z) const {
  if (std::abs(z) >= 1.0) {
    throw std::invalid_argument("singular inner interior evaluation requires |z| < 1");
  }
  cplx s = 0.0;
  for (const Atom& a : measure_.atoms()) {
    cplx zeta = std::polar(1.0, a.angle);
    s += a.weight * (zeta + z) / (zeta - z);
  }
  return std::exp(-s);
}

cplx SingularInner::boundary_eval(double theta, double atom_cutoff) const {
  double phase = 0.0;
  for (const Atom& a : measure_.atoms()) {
    double d = angular_distance(theta, a.angle);
    if (d < atom_cutoff) {
      throw std::invalid_argument("boundary evaluation too close to an atom");
    }
    phase += a.weight / std::tan(0.5 * (theta - a.angle));
  }
  // exponent is -i * phase exactly; exp of it stays on the circle.
  return cplx(std::cos(phase), -std::sin(phase));
}

double angular_distance(double a, double b) {
  double d = std::fabs(wrap_angle(a) - wrap_angle(b));
  return std::min(d, kTwoPi - d);
}

}  // namespace ttolab
