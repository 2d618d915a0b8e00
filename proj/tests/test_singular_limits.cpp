#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ttolab/singular_limits.hpp"

using namespace ttolab;

namespace {

constexpr double kPi = std::numbers::pi;

AtomicMeasure unit_atom() { return AtomicMeasure({{0.0, 1.0}}); }

AtomicMeasure three_atoms() {
  return AtomicMeasure({{0.0, 1.0}, {2.0, 0.7}, {4.5, 0.55}});
}

std::vector<cplx> full_grid() {
  std::vector<cplx> zs = disc_tensor_grid();
  const std::vector<cplx> ring = near_boundary_ring();
  zs.insert(zs.end(), ring.begin(), ring.end());
  return zs;
}

}  // namespace

TEST_CASE("arc sequence validates its inputs") {
  CHECK_THROWS_AS(build_arc_sequence(unit_atom(), 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(build_arc_sequence(unit_atom(), 0.0, 0), std::invalid_argument);
}

TEST_CASE("rescaled mass for a lone atom is the square root of the arc length") {
  const auto seq = build_arc_sequence(unit_atom(), 0.0, 50);
  REQUIRE(seq.size() == 50);
  for (const auto& item : seq) {
    CHECK(item.nu_mass_on_arc == 1.0);
    CHECK(std::abs(item.mass - std::sqrt(1.0 / item.n)) < 1e-14);
    CHECK(item.arc_halfwidth == kPi / item.n);
    REQUIRE(item.mu.atoms().size() == 1);
    CHECK(item.mu.atoms()[0].angle == 0.0);
  }
}

TEST_CASE("side atoms drop out once the arc excludes them") {
  const auto seq = build_arc_sequence(three_atoms(), 0.0, 10);
  // halfwidth pi covers the whole circle
  CHECK(seq[0].mu.atoms().size() == 3);
  CHECK(seq[0].nu_mass_on_arc == 2.25);
  CHECK(std::abs(seq[0].mass - 1.5) < 1e-14);  // sqrt(1 * 2.25)
  // halfwidth pi/2 < both side distances (2.0 and 2 pi - 4.5)
  for (std::size_t k = 1; k < seq.size(); ++k) {
    CHECK(seq[k].mu.atoms().size() == 1);
    CHECK(seq[k].nu_mass_on_arc == 1.0);
  }
}

TEST_CASE("published grids have the advertised shapes") {
  CHECK(disc_tensor_grid().size() == 256);
  CHECK(near_boundary_ring().size() == 32);
  const auto kept = limit_check_grid(0.0);
  CHECK(kept.size() < 256);
  CHECK(kept.size() > 100);
  for (cplx z : kept) CHECK(std::abs(z - 1.0) >= 0.8);
}

TEST_CASE("value at the origin follows the mass") {
  const auto seq = build_arc_sequence(unit_atom(), 0.0, 100);
  const SingularInner e(seq.back().mu);
  CHECK(std::abs(e.eval(0.0) - std::exp(-0.1)) < 1e-14);
}

TEST_CASE("pointwise decay for a lone atom") {
  const auto seq = build_arc_sequence(unit_atom(), 0.0, 400);
  const DecayReport rep = pointwise_limit_check(seq, limit_check_grid(0.0));
  CHECK(rep.pass);
  CHECK(rep.final_max_error <= rep.fail_threshold);
  CHECK(rep.fail_threshold == 10.0 * 0.05);
  CHECK(rep.monotone_from <= 200);
  CHECK(rep.fitted_slope > -0.6);
  CHECK(rep.fitted_slope < -0.4);
}

TEST_CASE("pointwise decay with competing side atoms") {
  const auto seq = build_arc_sequence(three_atoms(), 0.0, 400);
  const DecayReport rep = pointwise_limit_check(seq, limit_check_grid(0.0));
  CHECK(rep.pass);
  CHECK(rep.fitted_slope > -0.6);
  CHECK(rep.fitted_slope < -0.4);
}

TEST_CASE("normalized deviation converges to the boundary kernel at the origin") {
  const auto seq = build_arc_sequence(unit_atom(), 0.0, 400);
  const std::vector<cplx> origin{cplx(0.0, 0.0)};
  const DecayReport rep = ratio_limit_check(seq, 0.0, origin);
  // (e_n(0) - 1)/mass -> (0 + 1)/(0 - 1) = -1
  const SingularInner e(seq.back().mu);
  const cplx ratio = (e.eval(0.0) - 1.0) / seq.back().mass;
  CHECK(std::abs(ratio - cplx(-1.0, 0.0)) < 0.03);
  CHECK(rep.pass);
  CHECK(rep.fitted_slope > -0.6);
  CHECK(rep.fitted_slope < -0.4);
}

TEST_CASE("normalized deviation converges on the published grid") {
  for (const AtomicMeasure& nu : {unit_atom(), three_atoms()}) {
    const auto seq = build_arc_sequence(nu, 0.0, 400);
    const DecayReport rep = ratio_limit_check(seq, 0.0, limit_check_grid(0.0));
    CHECK(rep.pass);
    CHECK(rep.final_max_error <= 5.0 * seq.back().mass);
    CHECK(rep.fitted_slope > -0.6);
    CHECK(rep.fitted_slope < -0.4);
  }
}

TEST_CASE("slope fit degrades to zero without enough points") {
  const auto seq = build_arc_sequence(unit_atom(), 0.0, 10);
  const DecayReport rep = pointwise_limit_check(seq, {cplx(0.5, 0.0)});
  CHECK(rep.fitted_slope == 0.0);
}

TEST_CASE("distance-weighted deviation admits a uniform bound") {
  const auto seq = build_arc_sequence(unit_atom(), 0.0, 400);
  const UniformBoundReport rep = uniform_bound_check(seq, 0.0, full_grid());
  CHECK(rep.pass);
  CHECK(rep.bound == 6.0 * std::exp(3.0) + 1.0);
  CHECK(rep.statistic > 0.5);  // the bound is not vacuous on this grid
  CHECK(rep.statistic < rep.bound);
  REQUIRE(rep.near_zone.size() == 400);
}

TEST_CASE("near-zone growth respects its own envelope") {
  const AtomicMeasure heavy({{0.0, 4.0}});
  const auto seq = build_arc_sequence(heavy, 0.0, 2000);
  const UniformBoundReport rep = uniform_bound_check(seq, 0.0, full_grid());
  CHECK(rep.pass);
  bool any_near = false;
  for (const NearZoneSample& s : rep.near_zone) {
    if (s.near_max > 0.0) {
      any_near = true;
      CHECK(s.near_max <= s.near_bound);
    }
  }
  CHECK(any_near);
}

TEST_CASE("uniform bound requires the sequence to start at one") {
  auto seq = build_arc_sequence(unit_atom(), 0.0, 20);
  seq.erase(seq.begin());
  CHECK_THROWS_AS(uniform_bound_check(seq, 0.0, full_grid()), std::invalid_argument);
}

TEST_CASE("boundary grid deletes only nodes at the atoms") {
  const DeletedBoundaryGrid g = DeletedBoundaryGrid::make(2048, unit_atom());
  CHECK(g.angles.size() == 2047);
  CHECK(g.deleted_fraction == 1.0 / 2048.0);
  CHECK(g.weight == 1.0 / 2047.0);

  // an atom clear of every node deletes nothing
  const DeletedBoundaryGrid h = DeletedBoundaryGrid::make(64, AtomicMeasure({{0.5, 1.0}}));
  CHECK(h.angles.size() == 64);
  CHECK(h.deleted_fraction == 0.0);
}

TEST_CASE("weak-limit diagnostics for the published measures") {
  const auto g = [](cplx z) { return 1.0 + 0.5 * z; };
  for (const AtomicMeasure& nu : {unit_atom(), three_atoms()}) {
    const auto seq = build_arc_sequence(nu, 0.0, 400);
    const WeakConvergenceReport rep =
        weak_convergence_check(seq, 0.0, g, limit_check_grid(0.0));
    CHECK(rep.pass);
    CHECK(rep.norm_bounded);
    CHECK(rep.sup_norm < rep.norm_bound);
    CHECK(rep.pointwise_pass);
    CHECK(rep.final_pointwise_error <= rep.pointwise_threshold);
    CHECK(rep.deleted_fraction < 0.01);
  }
}

TEST_CASE("norm contrast vanishes for a light atom") {
  const AtomicMeasure light({{0.0, 1e-4}});
  const auto seq = build_arc_sequence(light, 0.0, 400);
  const auto g = [](cplx) { return cplx(1.0, 0.0); };
  const WeakConvergenceReport rep =
      weak_convergence_check(seq, 0.0, g, limit_check_grid(0.0));
  CHECK(rep.pass);
  CHECK(rep.norm_contrast < 1e-3);
  // the contrast still tracks the mass rather than vanishing faster
  CHECK(rep.norm_contrast_over_mass > 1.0);
  CHECK(rep.norm_contrast_over_mass < 2.0);
}

TEST_CASE("weak-limit samples must stay inside the sampling radius") {
  const auto seq = build_arc_sequence(unit_atom(), 0.0, 20);
  const auto g = [](cplx) { return cplx(1.0, 0.0); };
  CHECK_THROWS_AS(weak_convergence_check(seq, 0.0, g, {cplx(0.99, 0.0)}),
                  std::invalid_argument);
}
