#pragma once

#include <array>

#include "udw/cmatrix.hpp"

namespace udw {

// Validated two-qubit state: Hermitian, unit trace, PSD (all within the usual
// round-off tolerances).
class DensityMatrix {
public:
  explicit DensityMatrix(ComplexMatrix mat);

  const ComplexMatrix& mat() const { return mat_; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

private:
  ComplexMatrix mat_;
};

// (Unruh temperature, energy spacing, initial-state parameter) triple.
struct UdWParams {
  UdWParams(double unruh_temperature, double energy_spacing, double delta0);

  double unruh_temperature;  // T_U > 0, same units as omega
  double energy_spacing;     // omega > 0
  double delta0;             // in [-3, 1]
};

struct BlochQubit {
  explicit BlochQubit(std::array<double, 3> v);

  std::array<double, 3> vector;
  double norm() const;
};

// gamma = tanh(omega / (2 T_U)); strictly decreasing in T_U at fixed omega.
double gamma_of(const UdWParams& params);

// Asymptotic equilibrium state of the two accelerating detectors: an X-state
// in the |00>,|01>,|10>,|11> basis with
//   r11 = (3+D0)(g-1)^2 / (4(3+g^2))      r44 = (3+D0)(g+1)^2 / (4(3+g^2))
//   r22 = r33 = (3-D0-(D0+1)g^2) / (4(3+g^2))
//   r23 = r32 = (D0-g^2) / (2(3+g^2))
DensityMatrix udw_equilibrium_state(const UdWParams& params);

// kron(1/2 (I + n.sigma), 1/2 (I + m.sigma))
DensityMatrix product_state(const BlochQubit& n, const BlochQubit& m);

double delta0_of_product(const BlochQubit& n, const BlochQubit& m);

// sum_i Tr[rho (sigma_i x sigma_i)]
double delta0_of_state(const DensityMatrix& rho);

// T_U = a / 2pi
double temperature_from_acceleration(double a);

// (sigma_y x sigma_y) rho* (sigma_y x sigma_y)
ComplexMatrix spin_flip(const DensityMatrix& rho);

// Reference states for tests and CLI demos
DensityMatrix bell_phi_plus();
DensityMatrix singlet_state();
DensityMatrix maximally_mixed();

}  // namespace udw
