#include "ttolab/conjugation.hpp"

#include <stdexcept>

#include "ttolab/random.hpp"

namespace ttolab {

Conjugation::Conjugation(const ModelSpace& space, cplx unimodular_scale) : space_(&space) {
  const Mat& basis = space.basis_samples();
  const Vec& nodes = space.grid().nodes;
  const int n = space.dim();
  Mat cb(nodes.size(), n);
  for (int j = 0; j < n; ++j) {
    cb.col(j) = unimodular_scale *
                (space.u_samples().array() * (nodes.array() * basis.col(j).array()).conjugate());
  }
  j_ = basis.adjoint() * cb * space.grid().weight();
}

ModelVector Conjugation::apply(const ModelVector& f) const {
  if (f.space != space_) throw std::invalid_argument("model vector belongs to another space");
  ModelVector out;
  out.coeffs = apply_coeffs(f.coeffs);
  out.space = space_;
  return out;
}

double lemma1_residual(const BlaschkeProduct& u, const BlaschkeProduct& v,
                       const Vec& f_samples, const QuadratureGrid& grid) {
  if (f_samples.size() != grid.size) {
    throw std::invalid_argument("sample vector length does not match the grid");
  }
  const BlaschkeProduct w = quotient(u, v);
  double worst = 0.0;
  for (int m = 0; m < grid.size; ++m) {
    const cplx z = grid.nodes[m];
    const cplx inner = w.eval(z) * std::conj(z * f_samples[m]);
    const cplx outer = u.eval(z) * std::conj(z * inner);
    worst = std::max(worst, std::abs(outer - v.eval(z) * f_samples[m]));
  }
  return worst;
}

CSymmetryResult is_c_symmetric(const Mat& a, const Conjugation& c, double tolerance) {
  const Mat& j = c.matrix();
  if (a.rows() != j.rows() || a.cols() != j.cols()) {
    throw std::invalid_argument("operator and conjugation act on different spaces");
  }
  CSymmetryResult r;
  r.matrix_residual = (a.adjoint() - j * a.conjugate() * j.conjugate()).norm();

  Rng rng(0x5eed);  // fixed seed: the probe must not perturb determinism
  const int n = static_cast<int>(a.rows());
  for (int t = 0; t < 10; ++t) {
    Vec f(n);
    for (int k = 0; k < n; ++k) f[k] = rng.complex_normal();
    const Vec cf = c.apply_coeffs(f);
    const cplx qf = f.dot(a * f);
    const cplx qcf = cf.dot(a * cf);
    r.form_residual = std::max(r.form_residual, std::abs(qf - qcf));
  }
  r.symmetric = r.matrix_residual <= tolerance;
  return r;
}

}  // namespace ttolab
