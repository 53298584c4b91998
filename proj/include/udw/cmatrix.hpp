#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace udw {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. Sized for small quantum systems
// (dim 2..4 in practice) but nothing below hard-codes the dimension.
class ComplexMatrix {
public:
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::initializer_list<cplx> entries);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  cplx trace() const;
  double max_abs() const;
  // max entrywise |A - A†|
  double hermiticity_defect() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

private:
  std::size_t dim_;
  std::vector<cplx> a_;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; subsystem a is the slow index: (i_a, i_b) -> i_a*b.dim + i_b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Trace over the second qubit of a 4x4 matrix under the kron convention above.
ComplexMatrix partial_trace_b(const ComplexMatrix& rho);

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, orthonormal
};

// Hermitian eigendecomposition via cyclic Jacobi rotations.
// Requires hermiticity_defect() <= 1e-10; throws std::invalid_argument otherwise.
HermitianEigen herm_eig(const ComplexMatrix& a);

// PSD square root V diag(sqrt(lambda)) V†. Eigenvalues below -1e-10 are an
// error; small negatives from round-off are clamped to zero.
ComplexMatrix sqrt_psd(const ComplexMatrix& a);

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& pauli(std::size_t i);  // i = 1,2,3

// n . sigma for a real 3-vector n
ComplexMatrix pauli_dot(const std::array<double, 3>& n);

}  // namespace udw
