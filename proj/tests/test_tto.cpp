#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ttolab/random.hpp"
#include "ttolab/tto.hpp"

using namespace ttolab;

namespace {

ModelSpace monomial_space(int degree, int grid_size = 256) {
  return ModelSpace(BlaschkeProduct(std::vector<cplx>(degree, cplx(0, 0))), grid_size);
}

Vec trig_poly_samples(const QuadratureGrid& g) {
  // phi(z) = 2 + z - 0.5 z^2 + 3 conj(z)
  Vec phi(g.size);
  for (int m = 0; m < g.size; ++m) {
    const cplx z = g.nodes[m];
    phi[m] = 2.0 + z - 0.5 * z * z + 3.0 * std::conj(z);
  }
  return phi;
}

}  // namespace

TEST_CASE("vec and unvec are inverse column-major maps") {
  Mat a(2, 2);
  a << cplx(1, 1), cplx(3, 0), cplx(2, -1), cplx(4, 2);
  const Vec x = vec(a);
  CHECK(x[0] == cplx(1, 1));
  CHECK(x[1] == cplx(2, -1));  // column-major: (1,0) comes second
  CHECK((unvec(x, 2) - a).norm() == 0.0);
  CHECK_THROWS_AS(unvec(x, 3), std::invalid_argument);
}

TEST_CASE("compression of a trig polynomial on a monomial space is its Toeplitz matrix") {
  const ModelSpace sp = monomial_space(3);
  const ModelOperator a = tto_from_symbol(sp, trig_poly_samples(sp.grid()));
  Mat expected(3, 3);
  expected << 2.0, 3.0, 0.0,
              1.0, 2.0, 3.0,
             -0.5, 1.0, 2.0;
  CHECK((a.matrix - expected).norm() < 1e-12);
}

TEST_CASE("compressed shift on a monomial space is the subdiagonal matrix") {
  const ModelSpace sp = monomial_space(3);
  const Mat s = compressed_shift(sp).matrix;
  Mat expected = Mat::Zero(3, 3);
  expected(1, 0) = 1.0;
  expected(2, 1) = 1.0;
  CHECK((s - expected).norm() < 1e-13);
}

TEST_CASE("symbols divisible by the inner function compress to zero") {
  Rng rng(70);
  const ModelSpace sp(rng.random_blaschke(4, 0.85, 0.3));
  CHECK(tto_from_symbol(sp, sp.u_samples()).matrix.norm() < 1e-12);
  CHECK(tto_from_symbol(sp, sp.u_samples().conjugate()).matrix.norm() < 1e-12);
}

TEST_CASE("mismatched symbol length is rejected") {
  const ModelSpace sp = monomial_space(2, 64);
  CHECK_THROWS_AS(tto_from_symbol(sp, Vec::Ones(32)), std::invalid_argument);
}

TEST_CASE("compression span has dimension 2n-1") {
  Rng rng(71);
  for (int degree = 1; degree <= 5; ++degree) {
    const ModelSpace sp(rng.random_blaschke(degree, 0.85, 0.3));
    const TtoSpace t = TtoSpace::build(sp);
    CHECK(t.dim() == 2 * degree - 1);
    CHECK(static_cast<int>(t.spanning_family().size()) == 2 * degree - 1);
  }
}

TEST_CASE("membership projection on a monomial space averages the diagonals") {
  const ModelSpace sp = monomial_space(2, 64);
  const TtoSpace t = TtoSpace::build(sp);
  Mat a = Mat::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 2.0;
  // nearest matrix with constant diagonals
  Mat nearest = Mat::Zero(2, 2);
  nearest(0, 0) = 1.5;
  nearest(1, 1) = 1.5;
  CHECK((t.project(a) - nearest).norm() < 1e-12);
  CHECK(t.membership_distance(a) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

  Mat toeplitz(2, 2);
  toeplitz << cplx(0.3, 1.0), cplx(-2.0, 0.1), cplx(5.0, 0), cplx(0.3, 1.0);
  CHECK(t.membership_distance(toeplitz) < 1e-12);
}

TEST_CASE("members and non-members separate cleanly on generic spaces") {
  Rng rng(72);
  for (int degree = 2; degree <= 5; ++degree) {
    const ModelSpace sp(rng.random_blaschke(degree, 0.8, 0.3));
    const TtoSpace t = TtoSpace::build(sp);
    Vec sym(sp.grid().size);
    for (int m = 0; m < sp.grid().size; ++m) {
      const cplx z = sp.grid().nodes[m];
      sym[m] = rng.complex_normal() + rng.complex_normal() * z +
               rng.complex_normal() * std::conj(z);
    }
    CHECK(t.membership_distance(tto_from_symbol(sp, sym).matrix) < 1e-10);
    CHECK(t.membership_distance(rng.gaussian_matrix(degree)) > 1e-2);
  }
}

TEST_CASE("shift-invariance residual vanishes exactly on compressions") {
  Rng rng(73);
  for (int degree = 2; degree <= 5; ++degree) {
    const ModelSpace sp(rng.random_blaschke(degree, 0.85, 0.3));
    const ModelOperator a = tto_from_symbol(sp, trig_poly_samples(sp.grid()));
    CHECK(sarason_residual(a) < 1e-10);
    CHECK(sarason_residual(compressed_shift(sp)) < 1e-10);
  }
}

TEST_CASE("shift-invariance residual flags a corner projection") {
  const ModelSpace sp = monomial_space(3);
  Mat a = Mat::Zero(3, 3);
  a(0, 0) = 1.0;
  CHECK(sarason_residual({a, &sp}) > 0.1);
}

TEST_CASE("one-dimensional spaces have nothing to test for shift invariance") {
  const ModelSpace sp(BlaschkeProduct({cplx(0.3, -0.4)}));
  CHECK(sarason_residual({Mat::Identity(1, 1) * cplx(2, 1), &sp}) == 0.0);
}

TEST_CASE("compressing to a divisor keeps the top-left block on monomial spaces") {
  const ModelSpace sp3 = monomial_space(3);
  const ModelSpace sp2 = monomial_space(2, 256);
  const ModelOperator a = tto_from_symbol(sp3, trig_poly_samples(sp3.grid()));
  const ModelOperator b = compress(a, sp2);
  Mat expected(2, 2);
  expected << 2.0, 3.0, 1.0, 2.0;
  CHECK((b.matrix - expected).norm() < 1e-12);
}

TEST_CASE("compression to a divisor space lands in its compression span") {
  Rng rng(74);
  const BlaschkeProduct u = rng.random_blaschke(5, 0.8, 0.4);
  std::vector<cplx> sub(u.zeros().begin(), u.zeros().begin() + 3);
  const BlaschkeProduct v(std::move(sub));
  const ModelSpace spu(u), spv(v);
  const ModelOperator a = tto_from_symbol(spu, trig_poly_samples(spu.grid()));
  const ModelOperator b = compress(a, spv);
  CHECK(TtoSpace::build(spv).membership_distance(b.matrix) < 1e-9);
  const CSymmetryResult r = is_c_symmetric(b.matrix, Conjugation(spv), 1e-9);
  CHECK(r.symmetric);
}

TEST_CASE("compress rejects grid mismatches") {
  const ModelSpace sp3 = monomial_space(3, 256);
  const ModelSpace sp2 = monomial_space(2, 128);
  const ModelOperator a = tto_from_symbol(sp3, trig_poly_samples(sp3.grid()));
  CHECK_THROWS_AS(compress(a, sp2), std::invalid_argument);
}

TEST_CASE("symmetric operators form a space of dimension n(n+1)/2") {
  Rng rng(75);
  for (int degree = 1; degree <= 4; ++degree) {
    const ModelSpace sp(rng.random_blaschke(degree, 0.8));
    const OperatorSubspace s = c_symmetric_space(sp);
    CHECK(s.dim == degree * (degree + 1) / 2);
    // every basis element actually passes the symmetry test
    const Conjugation c(sp);
    for (int k = 0; k < s.dim; ++k) {
      const Mat a = unvec(s.basis.col(k), degree);
      CHECK(is_c_symmetric(a, c, 1e-8).symmetric);
    }
  }
}

TEST_CASE("constraint space dimensions on monomial spaces") {
  CHECK(symmetry_constraint_space(monomial_space(1, 64), cplx(0, 0)).dim == 1);
  CHECK(symmetry_constraint_space(monomial_space(2, 64), cplx(0, 0)).dim == 3);
  CHECK(symmetry_constraint_space(monomial_space(3, 128), cplx(0, 0)).dim == 5);
  CHECK(c_symmetric_space(monomial_space(3, 128)).dim == 6);
}

TEST_CASE("distinguished point must be a zero") {
  const ModelSpace sp = monomial_space(2, 64);
  CHECK_THROWS_AS(symmetry_constraint_space(sp, cplx(0.5, 0)), std::invalid_argument);
}

TEST_CASE("compressions satisfy both constraint families") {
  Rng rng(76);
  const BlaschkeProduct u = rng.random_blaschke(4, 0.8, 0.3);
  const ModelSpace sp(u);
  const ModelOperator a = tto_from_symbol(sp, trig_poly_samples(sp.grid()));
  for (cplx zero : u.zeros()) {
    CHECK(symmetry_constraint_residual(sp, zero, a.matrix) < 1e-10);
  }
}

TEST_CASE("full subspace comparison at a distinguished zero") {
  const ModelSpace sp = monomial_space(3, 256);
  const TheoremReport rep = theorem_check(sp, cplx(0, 0));
  CHECK(rep.dim_constraint == 5);
  CHECK(rep.dim_tto == 5);
  CHECK(rep.projector_distance < 1e-7);
  CHECK(rep.sarason_max_residual < 1e-8);
}

TEST_CASE("full subspace comparison on generic spaces") {
  Rng rng(77);
  for (int degree = 2; degree <= 4; ++degree) {
    const BlaschkeProduct u = rng.random_blaschke(degree, 0.85, 0.4);
    const ModelSpace sp(u);
    const std::size_t pick =
        static_cast<std::size_t>(rng.uniform() * degree) % static_cast<std::size_t>(degree);
    const TheoremReport rep = theorem_check(sp, u.zeros()[pick]);
    CHECK(rep.dim_constraint == 2 * degree - 1);
    CHECK(rep.dim_tto == 2 * degree - 1);
    CHECK(rep.projector_distance < 1e-7);
    CHECK(rep.sarason_max_residual < 1e-8);
  }
}
