#include "ttolab/tto.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace ttolab {

namespace {

// Rank of a matrix from its singular values, with an absolute anchor so an
// all-zero matrix is handled; refuses to decide when some singular value
// falls in the ambiguous band (threshold, gap * threshold).
template <typename SvdType>
int rank_with_gap(const SvdType& svd, const char* what) {
  const auto& sv = svd.singularValues();
  const double anchor = std::max(sv.size() > 0 ? sv[0] : 0.0, 1.0);
  const double cut = tol::kRankThreshold * anchor;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > cut) {
      ++rank;
      if (sv[i] < tol::kRankGapFactor * cut) {
        throw std::runtime_error(std::string(what) +
                                 ": singular value in the ambiguous band, rank undecidable");
      }
    }
  }
  return rank;
}

}  // namespace

ModelOperator tto_from_symbol(const ModelSpace& space, const Vec& symbol_samples) {
  if (symbol_samples.size() != space.grid().size) {
    throw std::invalid_argument("symbol sample length does not match the grid");
  }
  ModelOperator op;
  op.space = &space;
  op.matrix = space.basis_samples().adjoint() *
              (symbol_samples.asDiagonal() * space.basis_samples()) * space.grid().weight();
  return op;
}

ModelOperator compressed_shift(const ModelSpace& space) {
  return tto_from_symbol(space, space.grid().nodes);
}

Vec vec(const Mat& a) {
  return Eigen::Map<const Vec>(a.data(), a.size());
}

Mat unvec(const Vec& x, int n) {
  if (x.size() != static_cast<Eigen::Index>(n) * n) {
    throw std::invalid_argument("unvec: length is not n^2");
  }
  return Eigen::Map<const Mat>(x.data(), n, n);
}

TtoSpace TtoSpace::build(const ModelSpace& space) {
  const int n = space.dim();
  const Vec& nodes = space.grid().nodes;

  TtoSpace t;
  t.space_ = &space;
  t.family_.reserve(2 * n - 1);

  Vec power = Vec::Ones(nodes.size());
  t.family_.push_back(tto_from_symbol(space, power));
  for (int k = 1; k < n; ++k) {
    power = power.cwiseProduct(nodes);
    t.family_.push_back(tto_from_symbol(space, power));
  }
  power = nodes.conjugate();
  for (int k = 1; k < n; ++k) {
    t.family_.push_back(tto_from_symbol(space, power));
    power = power.cwiseProduct(nodes.conjugate());
  }

  Mat stacked(n * n, 2 * n - 1);
  for (int c = 0; c < 2 * n - 1; ++c) {
    const Vec v = vec(t.family_[c].matrix);
    stacked.col(c) = v / v.norm();
  }
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeThinU);
  const int rank = rank_with_gap(svd, "compression span");
  if (rank != 2 * n - 1) {
    throw std::runtime_error("compression span rank " + std::to_string(rank) +
                             " differs from expected " + std::to_string(2 * n - 1));
  }
  t.basis_ = svd.matrixU().leftCols(rank);
  return t;
}

Mat TtoSpace::project(const Mat& a) const {
  const Vec x = vec(a);
  return unvec(basis_ * (basis_.adjoint() * x), space_->dim());
}

double TtoSpace::membership_distance(const Mat& a) const {
  const Vec x = vec(a);
  return (x - basis_ * (basis_.adjoint() * x)).norm();
}

double sarason_residual(const ModelOperator& a) {
  const ModelSpace& space = *a.space;
  const auto g = space.ku0_basis();
  if (g.empty()) return 0.0;
  const Vec& nodes = space.grid().nodes;

  std::vector<Vec> plain, shifted;
  plain.reserve(g.size());
  shifted.reserve(g.size());
  for (const ModelVector& gi : g) {
    plain.push_back(gi.coeffs);
    const Vec samples = space.samples_of(gi);
    shifted.push_back(space.project(nodes.cwiseProduct(samples)).coeffs);
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const cplx lhs = shifted[j].dot(a.matrix * shifted[i]);
      const cplx rhs = plain[j].dot(a.matrix * plain[i]);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

ModelOperator compress(const ModelOperator& a, const ModelSpace& target) {
  const Mat e = a.space->embed(target.inner_function());
  if (target.grid().size != a.space->grid().size) {
    throw std::invalid_argument("compress: target grid size differs");
  }
  ModelOperator out;
  out.space = &target;
  out.matrix = e.adjoint() * a.matrix * e;
  return out;
}

namespace {

// Shared assembly: real-linear constraint map A -> complex residual rows,
// null space over R, returned as a complex orthonormal basis.
OperatorSubspace solve_constraints(
    int n, const std::function<Vec(const Mat&)>& residual_map, const char* what) {
  const auto n_complex_rows = residual_map(Mat::Zero(n, n)).size();

  RealMat system(2 * n_complex_rows, 2 * n * n);
  for (int col = 0; col < n * n; ++col) {
    Mat d = Mat::Zero(n, n);
    d(col % n, col / n) = 1.0;
    const Vec r_re = residual_map(d);
    d(col % n, col / n) = cplx(0.0, 1.0);
    const Vec r_im = residual_map(d);
    system.col(col) << r_re.real(), r_re.imag();
    system.col(n * n + col) << r_im.real(), r_im.imag();
  }

  // JacobiSVD: the spectrum here is heavily degenerate and BDCSVD (Eigen
  // 3.4.0) has been observed returning V columns inconsistent with the
  // sorted singular values on exactly such inputs.  The system is tiny.
  Eigen::JacobiSVD<RealMat> svd(system, Eigen::ComputeFullV);
  const int rank = rank_with_gap(svd, what);
  const int null_dim = 2 * n * n - rank;
  if (null_dim % 2 != 0) {
    throw std::runtime_error(std::string(what) + ": real null-space dimension is odd");
  }

  // Real null vectors span the solution set; as the set is a complex
  // subspace of half the real dimension, a complex SVD recovers an
  // orthonormal basis for it.
  Mat z(n * n, null_dim);
  for (int t = 0; t < null_dim; ++t) {
    const RealVec x = svd.matrixV().col(rank + t);
    z.col(t) = x.head(n * n).cast<cplx>() + cplx(0.0, 1.0) * x.tail(n * n).cast<cplx>();
  }
  Eigen::JacobiSVD<Mat> zsvd(z, Eigen::ComputeThinU);
  const int zrank = rank_with_gap(zsvd, what);
  if (zrank != null_dim / 2) {
    throw std::runtime_error(std::string(what) + ": complex span has unexpected dimension");
  }
  OperatorSubspace s;
  s.dim = zrank;
  s.basis = zsvd.matrixU().leftCols(zrank);
  return s;
}

struct DistinguishedZeroData {
  Mat j;        // conjugation of the full space
  Mat f;        // embedded divisor-space basis, n x m  (columns f_i)
  Mat cf;       // their images under the divisor conjugation, n x m
};

DistinguishedZeroData distinguished_zero_data(const ModelSpace& space, cplx a) {
  const BlaschkeProduct& u = space.inner_function();
  bool found = false;
  for (cplx z : u.zeros()) {
    if (std::abs(z - a) <= 1e-9) {
      a = z;
      found = true;
      break;
    }
  }
  if (!found) {
    throw std::invalid_argument("distinguished point is not a zero of the product");
  }
  DistinguishedZeroData d;
  d.j = Conjugation(space).matrix();
  const BlaschkeProduct v = quotient(u, BlaschkeProduct({a}));
  if (v.degree() == 0) {
    d.f = Mat(space.dim(), 0);
    d.cf = Mat(space.dim(), 0);
    return d;
  }
  const ModelSpace vspace(v, space.grid().size);
  const Mat e = space.embed(v);
  const Mat jv = Conjugation(vspace).matrix();
  d.f = e;
  d.cf = e * jv;  // C_v on basis vectors: coefficients J_v conj(e_i) = column i of J_v
  return d;
}

Vec constraint_residual_rows(const DistinguishedZeroData& d, const Mat& a) {
  const auto n = a.rows();
  const auto m = d.f.cols();
  Vec rows(n * n + m * m);
  const Mat sym = a.adjoint() - d.j * a.conjugate() * d.j.conjugate();
  rows.head(n * n) = vec(sym);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      // <A Cf_j, Cf_i> = <A f_i, f_j> written as a zero of a linear form
      rows[n * n + i * m + j] = d.cf.col(i).dot(a * d.cf.col(j)) - d.f.col(j).dot(a * d.f.col(i));
    }
  }
  return rows;
}

}  // namespace

OperatorSubspace symmetry_constraint_space(const ModelSpace& space, cplx a) {
  const DistinguishedZeroData d = distinguished_zero_data(space, a);
  return solve_constraints(
      space.dim(), [&d](const Mat& m) { return constraint_residual_rows(d, m); },
      "symmetry constraint space");
}

OperatorSubspace c_symmetric_space(const ModelSpace& space) {
  const Mat j = Conjugation(space).matrix();
  return solve_constraints(
      space.dim(),
      [&j](const Mat& m) { return Vec(vec(Mat(m.adjoint() - j * m.conjugate() * j.conjugate()))); },
      "c-symmetric space");
}

double symmetry_constraint_residual(const ModelSpace& space, cplx a, const Mat& A) {
  const DistinguishedZeroData d = distinguished_zero_data(space, a);
  return constraint_residual_rows(d, A).cwiseAbs().maxCoeff();
}

double subspace_distance(const OperatorSubspace& s, const OperatorSubspace& t) {
  return (s.basis * s.basis.adjoint() - t.basis * t.basis.adjoint()).norm();
}

TheoremReport theorem_check(const ModelSpace& space, cplx a) {
  TheoremReport rep;
  const OperatorSubspace s = symmetry_constraint_space(space, a);
  const TtoSpace t = TtoSpace::build(space);
  rep.dim_constraint = s.dim;
  rep.dim_tto = t.dim();
  OperatorSubspace tsub{t.basis(), t.dim()};
  rep.projector_distance = subspace_distance(s, tsub);
  for (int c = 0; c < t.dim(); ++c) {
    ModelOperator op{unvec(t.basis().col(c), space.dim()), &space};
    rep.sarason_max_residual = std::max(rep.sarason_max_residual, sarason_residual(op));
  }
  return rep;
}

}  // namespace ttolab
