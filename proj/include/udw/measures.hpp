#pragma once

#include <array>

#include "udw/states.hpp"

namespace udw {

// 3x3 real symmetric Gram matrix w_ij = Tr[sqrt(rho) (sigma_i x I) sqrt(rho) (sigma_j x I)].
struct WMatrix {
  std::array<std::array<double, 3>, 3> w;

  std::array<double, 3> eigenvalues() const;  // ascending
  double quadratic_form(const std::array<double, 3>& n) const;
};

struct MeasureReport {
  double concurrence;
  double lqu;
  double uin;
  double coherence_l1;
};

// Wootters concurrence; the lambdas of R = sqrt(sqrt(rho) rho~ sqrt(rho)) are
// computed as singular values of sqrt(rho~) sqrt(rho) for full accuracy.
double concurrence(const DensityMatrix& rho);

// Closed form 2 max(0, |r23| - sqrt(r11 r44)) for states whose only
// off-diagonal support is at (1,2)/(2,1) (zero-based). Precondition error otherwise.
double x_state_concurrence(const DensityMatrix& rho);

// I(rho, K) = Tr[rho K^2] - Tr[sqrt(rho) K sqrt(rho) K] for Hermitian K.
double skew_information(const DensityMatrix& rho, const ComplexMatrix& k);

WMatrix w_matrix(const DensityMatrix& rho);

// 1 - max eigenvalue of W
double lqu(const DensityMatrix& rho);

// Minimum of the skew information over a Fibonacci sphere lattice of local
// observable directions; independent oracle for lqu.
double lqu_bruteforce(const DensityMatrix& rho, int grid_points);

// Bloch vector of the first qubit's marginal.
std::array<double, 3> bloch_a(const DensityMatrix& rho);

// 1 - min eigenvalue of W when the marginal is maximally mixed, else
// 1 - xhat.W.xhat along the marginal Bloch direction.
double uin(const DensityMatrix& rho);

// Maximum of the skew information over directions commuting with the
// marginal; independent oracle for uin.
double uin_bruteforce(const DensityMatrix& rho, int grid_points);

// Sum of |rho_ij|, i != j, computational basis.
double l1_coherence(const DensityMatrix& rho);

// All four measures with sqrt(rho) computed once.
MeasureReport measure_all(const DensityMatrix& rho);

}  // namespace udw
