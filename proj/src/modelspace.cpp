#include "ttolab/modelspace.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ttolab {

QuadratureGrid QuadratureGrid::make(int grid_size) {
  if (grid_size < 32 || (grid_size & (grid_size - 1)) != 0) {
    throw std::invalid_argument("grid size must be a power of two, at least 32");
  }
  QuadratureGrid g;
  g.size = grid_size;
  g.nodes = Vec(grid_size);
  for (int m = 0; m < grid_size; ++m) {
    g.nodes[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / grid_size);
  }
  return g;
}

Mat takenaka_malmquist_samples(const BlaschkeProduct& u, const Vec& nodes) {
  const int n = u.degree();
  const auto rows = nodes.size();
  Mat basis(rows, n);
  Vec prefix = Vec::Ones(rows);
  for (int k = 0; k < n; ++k) {
    const cplx a = u.zeros()[k];
    const double scale = std::sqrt(1.0 - std::norm(a));
    for (Eigen::Index m = 0; m < rows; ++m) {
      const cplx denom = 1.0 - std::conj(a) * nodes[m];
      basis(m, k) = scale / denom * prefix[m];
      prefix[m] *= (nodes[m] - a) / denom;
    }
  }
  return basis;
}

ModelSpace::ModelSpace(BlaschkeProduct u, int grid_size) : u_(std::move(u)) {
  if (u_.degree() < 1) {
    throw std::invalid_argument("model space requires a product of degree >= 1");
  }
  if (grid_size < 32 * u_.degree()) {
    throw std::invalid_argument("grid size must be at least 32 * degree");
  }
  grid_ = QuadratureGrid::make(grid_size);
  basis_ = takenaka_malmquist_samples(u_, grid_.nodes);
  u_samples_ = Vec(grid_size);
  for (int m = 0; m < grid_size; ++m) u_samples_[m] = u_.eval(grid_.nodes[m]);
}

Vec ModelSpace::basis_eval(cplx z) const {
  const int n = dim();
  Vec out(n);
  cplx prefix = 1.0;
  for (int k = 0; k < n; ++k) {
    const cplx a = u_.zeros()[k];
    const cplx denom = 1.0 - std::conj(a) * z;
    out[k] = std::sqrt(1.0 - std::norm(a)) / denom * prefix;
    prefix *= (z - a) / denom;
  }
  return out;
}

ModelVector ModelSpace::project(const Vec& samples) const {
  if (samples.size() != grid_.size) {
    throw std::invalid_argument("sample vector length does not match the grid");
  }
  ModelVector f;
  f.coeffs = basis_.adjoint() * samples * grid_.weight();
  f.space = this;
  return f;
}

Vec ModelSpace::samples_of(const ModelVector& f) const {
  if (f.space != this) throw std::invalid_argument("model vector belongs to another space");
  return basis_ * f.coeffs;
}

cplx ModelSpace::eval(const ModelVector& f, cplx z) const {
  if (f.space != this) throw std::invalid_argument("model vector belongs to another space");
  return (basis_eval(z).transpose() * f.coeffs)(0);
}

ModelVector ModelSpace::reproducing_kernel(cplx w) const {
  if (std::abs(w) >= 1.0) {
    throw std::invalid_argument("reproducing kernel requires |w| < 1");
  }
  const cplx uw_bar = std::conj(u_.eval(w));
  Vec samples(grid_.size);
  for (int m = 0; m < grid_.size; ++m) {
    samples[m] = (1.0 - uw_bar * u_samples_[m]) / (1.0 - std::conj(w) * grid_.nodes[m]);
  }
  return project(samples);
}

std::vector<ModelVector> ModelSpace::ku0_basis() const {
  const int n = dim();
  if (n == 1) return {};
  // psi spans the orthogonal complement of the shift-invariant part:
  // conj(chi) (u - u(0)) lies in the space for any inner u.
  Vec s(grid_.size);
  const cplx u0 = u_.eval(0.0);
  for (int m = 0; m < grid_.size; ++m) {
    s[m] = std::conj(grid_.nodes[m]) * (u_samples_[m] - u0);
  }
  Vec psi = project(s).coeffs;
  psi /= psi.norm();

  // Householder reflection sending psi to a multiple of e_1; its remaining
  // columns are an orthonormal basis of the complement of psi.
  cplx alpha = (std::abs(psi[0]) > 1e-14) ? -psi[0] / std::abs(psi[0]) : cplx(-1.0);
  Vec v = psi;
  v[0] -= alpha;
  Mat h = Mat::Identity(n, n) - 2.0 / v.squaredNorm() * (v * v.adjoint());

  std::vector<ModelVector> out;
  out.reserve(n - 1);
  for (int k = 1; k < n; ++k) {
    ModelVector g;
    g.coeffs = h.col(k);
    g.space = this;
    out.push_back(std::move(g));
  }
  return out;
}

Mat ModelSpace::embed(const BlaschkeProduct& v) const {
  if (!divides(v, u_)) {
    throw std::invalid_argument("embed: the given product does not divide the space's");
  }
  if (v.degree() == 0) return Mat(dim(), 0);
  Mat bv = takenaka_malmquist_samples(v, grid_.nodes);
  return basis_.adjoint() * bv * grid_.weight();
}

}  // namespace ttolab
