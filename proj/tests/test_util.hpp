#pragma once

#include <random>

#include "udw/states.hpp"

namespace udw::testutil {

inline cplx randn_c(std::mt19937& rng) {
  static std::normal_distribution<double> dist(0.0, 1.0);
  return {dist(rng), dist(rng)};
}

// full-rank mixed state from a Ginibre draw, G G† / Tr
inline DensityMatrix random_density(std::mt19937& rng) {
  ComplexMatrix g(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = randn_c(rng);
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace();
  return DensityMatrix(std::move(rho));
}

inline DensityMatrix random_pure(std::mt19937& rng) {
  std::array<cplx, 4> psi{};
  double n2 = 0.0;
  for (auto& a : psi) {
    a = randn_c(rng);
    n2 += std::norm(a);
  }
  const double n = std::sqrt(n2);
  ComplexMatrix rho(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) rho(i, j) = psi[i] * std::conj(psi[j]) / (n * n);
  return DensityMatrix(std::move(rho));
}

inline std::array<double, 3> random_unit3(std::mt19937& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::array<double, 3> v{dist(rng), dist(rng), dist(rng)};
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

// Haar-ish 2x2 unitary: exp(-i theta n.sigma / 2) with random axis and angle,
// times a random phase
inline ComplexMatrix random_unitary2(std::mt19937& rng) {
  std::uniform_real_distribution<double> ang(0.0, 2.0 * 3.14159265358979323846);
  const auto n = random_unit3(rng);
  const double th = ang(rng);
  ComplexMatrix u = ComplexMatrix::identity(2) * cplx(std::cos(th / 2.0));
  u -= pauli_dot(n) * cplx(0.0, std::sin(th / 2.0));
  const double phase = ang(rng);
  u *= cplx(std::cos(phase), std::sin(phase));
  return u;
}

}  // namespace udw::testutil
