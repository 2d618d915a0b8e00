#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "ttolab/common.hpp"
#include "ttolab/inner.hpp"

namespace ttolab {

/// Seeded generator with a hand-rolled Box-Muller normal so the stream is
/// identical across standard libraries; reports built from the same seed
/// must be byte-identical.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;  // [0, 1)
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  /// Standard complex gaussian: E|z|^2 = 1.
  cplx complex_normal() { return cplx(normal(), normal()) / std::sqrt(2.0); }

  /// Uniform angle, modulus uniform in [0, max_modulus].
  cplx disc_point(double max_modulus) {
    const double r = max_modulus * std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
  }

  Mat gaussian_matrix(int n) {
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = complex_normal();
    return a;
  }

  /// Random product of the given degree; with probability repeat_prob one
  /// zero is duplicated onto another slot (repeated-zero coverage).
  BlaschkeProduct random_blaschke(int degree, double max_modulus, double repeat_prob = 0.0) {
    std::vector<cplx> zeros(degree);
    for (int k = 0; k < degree; ++k) zeros[k] = disc_point(max_modulus);
    if (degree >= 2 && uniform() < repeat_prob) {
      const auto i = static_cast<std::size_t>(uniform() * degree) % degree;
      auto j = static_cast<std::size_t>(uniform() * degree) % degree;
      if (j == i) j = (j + 1) % degree;
      zeros[j] = zeros[i];
    }
    return BlaschkeProduct(std::move(zeros));
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ttolab
