#pragma once

#include <functional>
#include <vector>

#include "ttolab/common.hpp"
#include "ttolab/inner.hpp"

namespace ttolab {

/// One step of the shrinking-arc construction around a fixed atom eta of
/// a measure nu: the closed arc of normalized arclength 1/n centered at
/// eta, and nu restricted to the arc, rescaled by sqrt(|I_n| / nu(I_n)).
/// The total mass of the rescaled measure is sqrt(|I_n| nu(I_n)).
struct ArcSequenceItem {
  int n = 0;
  double arc_halfwidth = 0.0;  // radians, pi / n
  double nu_mass_on_arc = 0.0;
  AtomicMeasure mu;
  double mass = 0.0;  // mu(T)
};

/// Builds items n = 1..max_n.  eta_angle must match one of nu's atoms.
std::vector<ArcSequenceItem> build_arc_sequence(const AtomicMeasure& nu, double eta_angle,
                                                int max_n);

/// Published sample grids for the limit diagnostics.  The tensor grid is
/// 8 radii in [0.1, 0.95] times 32 angles; the limit checks drop points
/// within chord distance 0.8 of the atom (first-order asymptotics do not
/// hold there at these n), the sup-statistic keeps everything and adds a
/// ring at radius 0.999.
std::vector<cplx> disc_tensor_grid();
std::vector<cplx> near_boundary_ring();
std::vector<cplx> limit_check_grid(double eta_angle, double exclusion_radius = 0.8);

struct DecaySample {
  int n = 0;
  double mass = 0.0;
  double max_error = 0.0;
};

struct DecayReport {
  std::vector<DecaySample> trace;    // per n, max over the z-grid
  std::vector<double> final_errors;  // per z, at n = max_n
  double final_max_error = 0.0;
  double fitted_slope = 0.0;   // log-log fit of max_error vs n over [25, 400]
  int monotone_from = 0;       // smallest n with a nonincreasing tail (per z, worst)
  bool pass = false;
  double fail_threshold = 0.0;
};

/// |e_n(z) - 1| -> 0 on the grid; fails if any final value exceeds
/// 10 * mass at n = max_n, or no monotone tail exists by max_n / 2.
DecayReport pointwise_limit_check(const std::vector<ArcSequenceItem>& seq,
                                  const std::vector<cplx>& zs);

/// (e_n(z) - 1) / mass_n -> (z + eta) / (z - eta) on the grid; reports the
/// max deviation at the largest n and the decay of the per-n max.
DecayReport ratio_limit_check(const std::vector<ArcSequenceItem>& seq, double eta_angle,
                              const std::vector<cplx>& zs);

struct NearZoneSample {
  int n = 0;
  double near_max = 0.0;   // statistic restricted to |z - eta| <= 10 arc chords
  double near_bound = 0.0; // 40 sin(pi/n) sqrt(n / nu(I_n))
};

struct UniformBoundReport {
  double statistic = 0.0;  // sup over grid and n of |z-eta| |e_n(z)-1| / mass_n
  double bound = 0.0;      // 6 exp(3 nu(T)) + 1
  bool pass = false;
  std::vector<NearZoneSample> near_zone;
};

UniformBoundReport uniform_bound_check(const std::vector<ArcSequenceItem>& seq, double eta_angle,
                                       const std::vector<cplx>& zs);

/// Boundary grid for the singular objects: equispaced nodes with those
/// within atom_cutoff radians of an atom of nu removed and the weights
/// renormalized.  deleted_fraction records the bias.
struct DeletedBoundaryGrid {
  std::vector<double> angles;
  double weight = 0.0;
  double deleted_fraction = 0.0;

  static DeletedBoundaryGrid make(int grid_size, const AtomicMeasure& nu,
                                  double atom_cutoff = tol::kAtomCutoff);
};

struct WeakConvergenceReport {
  double sup_norm = 0.0;        // sup_n of the boundary-grid norm of h_n
  double norm_bound = 0.0;      // (6 exp(3 nu(T)) + 1) * ||g|| * 2
  bool norm_bounded = false;
  double final_pointwise_error = 0.0;  // max over samples at n = max_n
  double pointwise_threshold = 0.0;    // 5 * mass at n = max_n
  bool pointwise_pass = false;
  double norm_contrast = 0.0;   // ||(e_N - 1)(chi - eta) g|| on the boundary grid
  double norm_contrast_over_mass = 0.0;
  double deleted_fraction = 0.0;
  bool pass = false;
};

/// Diagnostics for h_n = (e_n - 1)/mass_n * (chi - eta) * g: uniformly
/// norm-bounded on the boundary grid while converging pointwise in the
/// disc to (z + eta) g(z); bounded norms plus pointwise convergence is
/// what drives the weak limit.  The norm-contrast line measures
/// || e_n (chi - eta) g - (chi - eta) g ||, which decays like mass_n even
/// though both terms have equal norms node by node.
WeakConvergenceReport weak_convergence_check(const std::vector<ArcSequenceItem>& seq,
                                             double eta_angle,
                                             const std::function<cplx(cplx)>& g,
                                             const std::vector<cplx>& z_samples,
                                             int grid_size = tol::kDefaultGridSize);

}  // namespace ttolab
