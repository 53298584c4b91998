#include "udw/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace udw {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, cplx(0.0, 0.0)) {
  if (dim == 0) {
    throw std::invalid_argument("ComplexMatrix: dimension must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<cplx> entries)
    : ComplexMatrix(dim) {
  if (entries.size() != dim * dim) {
    throw std::invalid_argument("ComplexMatrix: entry count does not match dim*dim");
  }
  std::copy(entries.begin(), entries.end(), a_.begin());
  if (!all_finite()) {
    throw std::invalid_argument("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(i, j));
  return r;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& z : a_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw std::invalid_argument("matrix add: dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw std::invalid_argument("matrix sub: dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& z : a_) z *= s;
  return *this;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multiply: dimension mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return multiply(a, b);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix c(na * nb);
  for (std::size_t ia = 0; ia < na; ++ia)
    for (std::size_t ja = 0; ja < na; ++ja)
      for (std::size_t ib = 0; ib < nb; ++ib)
        for (std::size_t jb = 0; jb < nb; ++jb)
          c(ia * nb + ib, ja * nb + jb) = a(ia, ja) * b(ib, jb);
  return c;
}

ComplexMatrix partial_trace_b(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("partial_trace_b: input must be 4x4");
  ComplexMatrix r(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) r(i, j) += rho(2 * i + k, 2 * j + k);
  return r;
}

namespace {

// Jacobi sweeps run in extended precision so that the zero eigenvalues of
// numerically rank-deficient states come out well below sqrt(double eps);
// the matrix square root would otherwise amplify that noise to ~1e-8.
using lcplx = std::complex<long double>;
using LMatrix = std::vector<lcplx>;  // row-major n*n

// One complex Jacobi rotation zeroing a(p,q). The 2x2 unitary is a phase on
// index q composed with a real rotation; applied as A <- U† A U, V <- V U.
void jacobi_rotate(LMatrix& a, LMatrix& v, std::size_t n, std::size_t p, std::size_t q) {
  const lcplx g = a[p * n + q];
  const long double ag = std::abs(g);
  if (ag == 0.0L) return;
  const lcplx phase = g / ag;  // e^{i arg(g)}

  const long double alpha = a[p * n + p].real();
  const long double beta = a[q * n + q].real();
  const long double tau = (beta - alpha) / (2.0L * ag);
  const long double t =
      (tau >= 0.0L ? 1.0L : -1.0L) / (std::abs(tau) + std::sqrt(1.0L + tau * tau));
  const long double c = 1.0L / std::sqrt(1.0L + t * t);
  const long double s = t * c;

  const lcplx upp = c;
  const lcplx upq = s;
  const lcplx uqp = -s * std::conj(phase);
  const lcplx uqq = c * std::conj(phase);

  // A <- A U (columns p and q)
  for (std::size_t i = 0; i < n; ++i) {
    const lcplx aip = a[i * n + p], aiq = a[i * n + q];
    a[i * n + p] = aip * upp + aiq * uqp;
    a[i * n + q] = aip * upq + aiq * uqq;
  }
  // A <- U† A (rows p and q)
  for (std::size_t j = 0; j < n; ++j) {
    const lcplx apj = a[p * n + j], aqj = a[q * n + j];
    a[p * n + j] = std::conj(upp) * apj + std::conj(uqp) * aqj;
    a[q * n + j] = std::conj(upq) * apj + std::conj(uqq) * aqj;
  }
  // V <- V U
  for (std::size_t i = 0; i < n; ++i) {
    const lcplx vip = v[i * n + p], viq = v[i * n + q];
    v[i * n + p] = vip * upp + viq * uqp;
    v[i * n + q] = vip * upq + viq * uqq;
  }
}

long double offdiag_norm(const LMatrix& a, std::size_t n) {
  long double s = 0.0L;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(a[i * n + j]);
  return std::sqrt(s);
}

}  // namespace

HermitianEigen herm_eig(const ComplexMatrix& input) {
  if (!input.all_finite()) {
    throw std::invalid_argument("herm_eig: non-finite entry");
  }
  const double defect = input.hermiticity_defect();
  if (defect > 1e-10) {
    throw std::invalid_argument("herm_eig: input not Hermitian, max |A - A^dag| = " +
                                std::to_string(defect));
  }
  const std::size_t n = input.dim();

  // symmetrized copy so tiny Hermiticity defects do not bias convergence
  LMatrix a(n * n), v(n * n, lcplx(0.0L));
  for (std::size_t i = 0; i < n; ++i) {
    v[i * n + i] = 1.0L;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx s = 0.5 * (input(i, j) + std::conj(input(j, i)));
      a[i * n + j] = lcplx(s.real(), s.imag());
    }
  }

  const long double scale = std::max<long double>(1.0L, input.max_abs());
  for (int sweep = 0; sweep < 100 && offdiag_norm(a, n) > 1e-19L * scale; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, n, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * n + i].real() < a[j * n + j].real();
  });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = static_cast<double>(a[order[k] * n + order[k]].real());
    for (std::size_t i = 0; i < n; ++i) {
      const lcplx vik = v[i * n + order[k]];
      out.eigenvectors(i, k) = cplx(static_cast<double>(vik.real()),
                                    static_cast<double>(vik.imag()));
    }
  }
  return out;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& a) {
  const HermitianEigen eig = herm_eig(a);
  const std::size_t n = a.dim();
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    double lam = eig.eigenvalues[k];
    if (lam < -1e-10) {
      throw std::invalid_argument("sqrt_psd: matrix not PSD, eigenvalue " + std::to_string(lam));
    }
    roots[k] = std::sqrt(std::max(0.0, lam));
  }
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += eig.eigenvectors(i, k) * roots[k] * std::conj(eig.eigenvectors(j, k));
      r(i, j) = s;
    }
  return r;
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m(2, {0.0, 1.0, 1.0, 0.0});
  return m;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m(2, {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0});
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m(2, {1.0, 0.0, 0.0, -1.0});
  return m;
}

const ComplexMatrix& pauli(std::size_t i) {
  switch (i) {
    case 1: return pauli_x();
    case 2: return pauli_y();
    case 3: return pauli_z();
    default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
}

ComplexMatrix pauli_dot(const std::array<double, 3>& n) {
  ComplexMatrix m(2);
  m(0, 0) = n[2];
  m(1, 1) = -n[2];
  m(0, 1) = cplx(n[0], -n[1]);
  m(1, 0) = cplx(n[0], n[1]);
  return m;
}

}  // namespace udw
