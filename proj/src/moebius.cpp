#include "ttolab/moebius.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "ttolab/conjugation.hpp"

namespace ttolab {

MoebiusComposition compose_with_moebius(const BlaschkeProduct& u, cplx a) {
  if (std::abs(a) >= 1.0 - tol::kZeroModulusGuard) {
    throw std::invalid_argument("moebius parameter must lie strictly inside the disc");
  }
  std::vector<cplx> pulled;
  pulled.reserve(u.zeros().size());
  for (cplx z : u.zeros()) pulled.push_back(blaschke_factor(-a, z));
  MoebiusComposition c;
  c.product = BlaschkeProduct(std::move(pulled));
  const cplx zeta0 = 1.0;
  const cplx ratio = u.eval(blaschke_factor(a, zeta0)) * std::conj(c.product.eval(zeta0));
  c.constant = ratio / std::abs(ratio);
  return c;
}

Mat omega_matrix(const ModelSpace& space_u, cplx a, const ModelSpace& target) {
  const MoebiusComposition comp = compose_with_moebius(space_u.inner_function(), a);
  if (!divides(comp.product, target.inner_function()) ||
      !divides(target.inner_function(), comp.product)) {
    throw std::invalid_argument("omega_matrix: target zeros do not match the composed product");
  }
  const Vec& nodes = target.grid().nodes;
  const int n = space_u.dim();
  Mat mapped(nodes.size(), n);
  const double scale = std::sqrt(1.0 - std::norm(a));
  for (Eigen::Index m = 0; m < nodes.size(); ++m) {
    const cplx pref = scale / (1.0 - std::conj(a) * nodes[m]);
    mapped.row(m) = pref * space_u.basis_eval(blaschke_factor(a, nodes[m])).transpose();
  }
  return target.basis_samples().adjoint() * mapped * target.grid().weight();
}

double unitarity_residual(const Mat& w) {
  return (w.adjoint() * w - Mat::Identity(w.cols(), w.cols())).norm();
}

namespace {

struct TransportSetup {
  MoebiusComposition comp;
  ModelSpace target;
  Mat w;

  TransportSetup(const ModelSpace& space_u, cplx a)
      : comp(compose_with_moebius(space_u.inner_function(), a)),
        target(comp.product, space_u.grid().size),
        w(omega_matrix(space_u, a, target)) {}
};

}  // namespace

double intertwining_residual(const ModelSpace& space_u, cplx a) {
  const TransportSetup s(space_u, a);
  const Mat ju = Conjugation(space_u).matrix();
  const Mat jt = Conjugation(s.target, s.comp.constant).matrix();
  return (s.w * ju - jt * s.w.conjugate()).norm();
}

double transport_distance(const ModelSpace& space_u, cplx a) {
  const TransportSetup s(space_u, a);
  const TtoSpace tu = TtoSpace::build(space_u);
  const TtoSpace tt = TtoSpace::build(s.target);

  const int n = space_u.dim();
  Mat moved(n * n, tu.dim());
  for (int c = 0; c < tu.dim(); ++c) {
    const Mat op = unvec(tu.basis().col(c), n);
    moved.col(c) = vec(Mat(s.w * op * s.w.adjoint()));
  }
  // W is unitary, so the columns are already orthonormal up to quadrature
  // error; re-orthonormalize before forming the projector anyway.
  Eigen::JacobiSVD<Mat> svd(moved, Eigen::ComputeThinU);
  const Mat basis = svd.matrixU().leftCols(tu.dim());
  return (basis * basis.adjoint() - tt.projector()).norm();
}

CrofootReport crofoot_check(const ModelSpace& space_u, cplx a) {
  const TransportSetup s(space_u, a);
  CrofootReport rep;
  rep.dim_source = space_u.dim();
  rep.dim_target = s.target.dim();
  rep.unitarity = unitarity_residual(s.w);
  const Mat ju = Conjugation(space_u).matrix();
  const Mat jt = Conjugation(s.target, s.comp.constant).matrix();
  rep.intertwining = (s.w * ju - jt * s.w.conjugate()).norm();
  rep.transport = transport_distance(space_u, a);
  return rep;
}

}  // namespace ttolab
