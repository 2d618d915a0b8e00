#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ttolab {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;
using RealMat = Eigen::MatrixXd;

// Numerical knobs, centralized so reports can quote them.
namespace tol {

// Zeros must satisfy |a| < 1 - kZeroModulusGuard.
inline constexpr double kZeroModulusGuard = 1e-9;
// Boundary evaluation of a singular inner function rejects angles closer
// than this (radians) to an atom.
inline constexpr double kAtomCutoff = 1e-6;
// Multiset matching of Blaschke zeros (divisor tests).
inline constexpr double kZeroMatch = 1e-12;
// Relative singular-value threshold for rank / null-space decisions.
inline constexpr double kRankThreshold = 1e-8;
// Kept singular values must clear the threshold by this factor, otherwise
// the rank decision is ambiguous and we refuse to guess.
inline constexpr double kRankGapFactor = 10.0;
// Residual tolerance for identities that hold exactly in exact arithmetic.
inline constexpr double kIdentityTol = 1e-10;

inline constexpr int kDefaultGridSize = 2048;

}  // namespace tol

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ttolab
