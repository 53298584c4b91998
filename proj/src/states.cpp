#include "udw/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace udw {

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (mat_.dim() != 4) {
    throw std::invalid_argument("DensityMatrix: expected a 4x4 matrix");
  }
  if (!mat_.all_finite()) {
    throw std::invalid_argument("DensityMatrix: non-finite entry");
  }
  const double hdef = mat_.hermiticity_defect();
  if (hdef > 1e-10) {
    throw std::invalid_argument("DensityMatrix: not Hermitian, defect " + std::to_string(hdef));
  }
  const cplx tr = mat_.trace();
  if (std::abs(tr - cplx(1.0)) > 1e-10) {
    throw std::invalid_argument("DensityMatrix: trace != 1");
  }
  const HermitianEigen eig = herm_eig(mat_);
  if (eig.eigenvalues.front() < -1e-10) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(eig.eigenvalues.front()));
  }
}

UdWParams::UdWParams(double tu, double omega, double d0)
    : unruh_temperature(tu), energy_spacing(omega), delta0(d0) {
  if (!(tu > 0.0)) throw std::invalid_argument("UdWParams: unruh_temperature must be > 0");
  if (!(omega > 0.0)) throw std::invalid_argument("UdWParams: energy_spacing must be > 0");
  if (!(d0 >= -3.0 && d0 <= 1.0)) {
    throw std::invalid_argument("UdWParams: delta0 must lie in [-3, 1]");
  }
}

BlochQubit::BlochQubit(std::array<double, 3> v) : vector(v) {
  if (norm() > 1.0 + 1e-12) {
    throw std::invalid_argument("BlochQubit: Bloch vector norm exceeds 1");
  }
}

double BlochQubit::norm() const {
  return std::sqrt(vector[0] * vector[0] + vector[1] * vector[1] + vector[2] * vector[2]);
}

double gamma_of(const UdWParams& params) {
  return std::tanh(params.energy_spacing / (2.0 * params.unruh_temperature));
}

DensityMatrix udw_equilibrium_state(const UdWParams& params) {
  const double g = gamma_of(params);
  const double d0 = params.delta0;
  const double denom = 3.0 + g * g;

  const double r11 = (3.0 + d0) * (g - 1.0) * (g - 1.0) / (4.0 * denom);
  const double r44 = (3.0 + d0) * (g + 1.0) * (g + 1.0) / (4.0 * denom);
  const double r22 = (3.0 - d0 - (d0 + 1.0) * g * g) / (4.0 * denom);
  const double r23 = (d0 - g * g) / (2.0 * denom);

  ComplexMatrix m(4);
  m(0, 0) = r11;
  m(1, 1) = r22;
  m(2, 2) = r22;
  m(1, 2) = r23;
  m(2, 1) = r23;
  m(3, 3) = r44;

  try {
    return DensityMatrix(std::move(m));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("udw_equilibrium_state: constructed matrix invalid (") +
                             e.what() + ")");
  }
}

DensityMatrix product_state(const BlochQubit& n, const BlochQubit& m) {
  auto single = [](const BlochQubit& b) {
    ComplexMatrix rho = ComplexMatrix::identity(2);
    rho += pauli_dot(b.vector);
    rho *= 0.5;
    return rho;
  };
  return DensityMatrix(kron(single(n), single(m)));
}

double delta0_of_product(const BlochQubit& n, const BlochQubit& m) {
  return n.vector[0] * m.vector[0] + n.vector[1] * m.vector[1] + n.vector[2] * m.vector[2];
}

double delta0_of_state(const DensityMatrix& rho) {
  double d0 = 0.0;
  for (std::size_t i = 1; i <= 3; ++i) {
    const ComplexMatrix obs = kron(pauli(i), pauli(i));
    d0 += (rho.mat() * obs).trace().real();
  }
  return d0;
}

double temperature_from_acceleration(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("temperature_from_acceleration: a must be > 0");
  return a / (2.0 * std::numbers::pi);
}

ComplexMatrix spin_flip(const DensityMatrix& rho) {
  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  return yy * rho.mat().conjugate() * yy;
}

DensityMatrix bell_phi_plus() {
  ComplexMatrix m(4);
  m(0, 0) = 0.5;
  m(0, 3) = 0.5;
  m(3, 0) = 0.5;
  m(3, 3) = 0.5;
  return DensityMatrix(std::move(m));
}

DensityMatrix singlet_state() {
  ComplexMatrix m(4);
  m(1, 1) = 0.5;
  m(2, 2) = 0.5;
  m(1, 2) = -0.5;
  m(2, 1) = -0.5;
  return DensityMatrix(std::move(m));
}

DensityMatrix maximally_mixed() {
  return DensityMatrix(ComplexMatrix::identity(4) * cplx(0.25));
}

}  // namespace udw
