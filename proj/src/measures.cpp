#include "udw/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace udw {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

ComplexMatrix embed3(const std::array<std::array<double, 3>, 3>& w) {
  ComplexMatrix m(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = w[i][j];
  return m;
}

// sigma_i on qubit a, identity on b
ComplexMatrix local_obs(const std::array<double, 3>& n) {
  return kron(pauli_dot(n), ComplexMatrix::identity(2));
}

double skew_with_sqrt(const ComplexMatrix& rho, const ComplexMatrix& sr, const ComplexMatrix& k) {
  const double t1 = (rho * k * k).trace().real();
  const double t2 = (sr * k * sr * k).trace().real();
  return t1 - t2;
}

WMatrix w_matrix_from_sqrt(const ComplexMatrix& sr) {
  std::array<ComplexMatrix, 3> srk = {sr * kron(pauli(1), ComplexMatrix::identity(2)),
                                      sr * kron(pauli(2), ComplexMatrix::identity(2)),
                                      sr * kron(pauli(3), ComplexMatrix::identity(2))};
  WMatrix out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      const double wij = (srk[i] * srk[j]).trace().real();
      out.w[i][j] = wij;
      out.w[j][i] = wij;
    }
  return out;
}

double concurrence_from_sqrt(const ComplexMatrix& sr, const DensityMatrix& rho) {
  // The lambdas of R = sqrt(sqrt(rho) rho~ sqrt(rho)) are the singular values
  // of A = sqrt(rho~) sqrt(rho). Squaring into A†A would push lambdas of order
  // 1e-10 below the eigensolver's absolute accuracy, so they are read off the
  // Hermitian embedding [[0, A], [A†, 0]] instead (eigenvalues +-sigma_i).
  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  const ComplexMatrix sr_tilde = yy * sr.conjugate() * yy;  // sqrt commutes with conjugation
  const ComplexMatrix a = sr_tilde * sr;

  ComplexMatrix h(8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      h(i, 4 + j) = a(i, j);
      h(4 + j, i) = std::conj(a(i, j));
    }
  HermitianEigen eig = herm_eig(h);
  // top half descending, tiny negatives clamped
  std::array<double, 4> lam{};
  for (std::size_t k = 0; k < 4; ++k) lam[k] = std::max(0.0, eig.eigenvalues[7 - k]);
  return clamp01(std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]));
}

double uin_from_parts(const std::array<double, 3>& x, const WMatrix& w) {
  const double xnorm = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  if (xnorm <= 1e-9) {
    return clamp01(1.0 - w.eigenvalues()[0]);
  }
  const std::array<double, 3> xhat = {x[0] / xnorm, x[1] / xnorm, x[2] / xnorm};
  return clamp01(1.0 - w.quadratic_form(xhat));
}

// quasi-uniform unit vectors on the sphere
std::array<double, 3> fibonacci_point(int i, int n) {
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - 2.0 * (i + 0.5) / n;
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden_angle * i;
  return {r * std::cos(phi), r * std::sin(phi), z};
}

}  // namespace

std::array<double, 3> WMatrix::eigenvalues() const {
  const HermitianEigen eig = herm_eig(embed3(w));
  return {eig.eigenvalues[0], eig.eigenvalues[1], eig.eigenvalues[2]};
}

double WMatrix::quadratic_form(const std::array<double, 3>& n) const {
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s += n[i] * w[i][j] * n[j];
  return s;
}

double concurrence(const DensityMatrix& rho) {
  return concurrence_from_sqrt(sqrt_psd(rho.mat()), rho);
}

double x_state_concurrence(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.mat();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      if ((i == 1 && j == 2) || (i == 2 && j == 1)) continue;
      if (std::abs(m(i, j)) > 1e-12) {
        throw std::invalid_argument("x_state_concurrence: off-diagonal support outside (2,3)");
      }
    }
  const double r11 = m(0, 0).real();
  const double r44 = m(3, 3).real();
  const double r23 = std::abs(m(1, 2));
  return clamp01(2.0 * std::max(0.0, r23 - std::sqrt(std::max(0.0, r11 * r44))));
}

double skew_information(const DensityMatrix& rho, const ComplexMatrix& k) {
  if (k.dim() != 4) throw std::invalid_argument("skew_information: observable must be 4x4");
  if (k.hermiticity_defect() > 1e-10) {
    throw std::invalid_argument("skew_information: observable not Hermitian");
  }
  return skew_with_sqrt(rho.mat(), sqrt_psd(rho.mat()), k);
}

WMatrix w_matrix(const DensityMatrix& rho) {
  return w_matrix_from_sqrt(sqrt_psd(rho.mat()));
}

double lqu(const DensityMatrix& rho) {
  return clamp01(1.0 - w_matrix(rho).eigenvalues()[2]);
}

double lqu_bruteforce(const DensityMatrix& rho, int grid_points) {
  if (grid_points < 1000) throw std::invalid_argument("lqu_bruteforce: need >= 1000 grid points");
  const ComplexMatrix sr = sqrt_psd(rho.mat());
  double best = 1.0;
  for (int i = 0; i < grid_points; ++i) {
    const auto n = fibonacci_point(i, grid_points);
    best = std::min(best, skew_with_sqrt(rho.mat(), sr, local_obs(n)));
  }
  return std::max(0.0, best);
}

std::array<double, 3> bloch_a(const DensityMatrix& rho) {
  const ComplexMatrix marginal = partial_trace_b(rho.mat());
  std::array<double, 3> x{};
  for (std::size_t i = 1; i <= 3; ++i) {
    x[i - 1] = (marginal * pauli(i)).trace().real();
  }
  return x;
}

double uin(const DensityMatrix& rho) {
  return uin_from_parts(bloch_a(rho), w_matrix(rho));
}

double uin_bruteforce(const DensityMatrix& rho, int grid_points) {
  if (grid_points < 1000) throw std::invalid_argument("uin_bruteforce: need >= 1000 grid points");
  const ComplexMatrix sr = sqrt_psd(rho.mat());
  const auto x = bloch_a(rho);
  const double xnorm = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);

  if (xnorm <= 1e-9) {
    // marginal is maximally mixed: every direction commutes with it
    double best = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      const auto n = fibonacci_point(i, grid_points);
      best = std::max(best, skew_with_sqrt(rho.mat(), sr, local_obs(n)));
    }
    return best;
  }
  // [n.sigma, rho_a] = 0 pins n = +-xhat exactly
  const std::array<double, 3> xhat = {x[0] / xnorm, x[1] / xnorm, x[2] / xnorm};
  const std::array<double, 3> mhat = {-xhat[0], -xhat[1], -xhat[2]};
  return std::max(skew_with_sqrt(rho.mat(), sr, local_obs(xhat)),
                  skew_with_sqrt(rho.mat(), sr, local_obs(mhat)));
}

double l1_coherence(const DensityMatrix& rho) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) s += std::abs(rho(i, j));
  return s;
}

MeasureReport measure_all(const DensityMatrix& rho) {
  const ComplexMatrix sr = sqrt_psd(rho.mat());
  const WMatrix w = w_matrix_from_sqrt(sr);
  MeasureReport rep{};
  rep.concurrence = concurrence_from_sqrt(sr, rho);
  rep.lqu = clamp01(1.0 - w.eigenvalues()[2]);
  rep.uin = uin_from_parts(bloch_a(rho), w);
  rep.coherence_l1 = l1_coherence(rho);
  return rep;
}

}  // namespace udw
