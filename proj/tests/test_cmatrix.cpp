#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "udw/cmatrix.hpp"

using namespace udw;

namespace {

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

}  // namespace

TEST_CASE("multiply: identity and Pauli algebra") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(max_diff(i2 * i2, i2) == 0.0);
  CHECK(max_diff(pauli_x() * pauli_x(), i2) == 0.0);
  // sigma_x sigma_y = i sigma_z
  CHECK(max_diff(pauli_x() * pauli_y(), pauli_z() * cplx(0.0, 1.0)) == 0.0);
  CHECK_THROWS_AS(multiply(i2, ComplexMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("adjoint") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(max_diff(i2.adjoint(), i2) == 0.0);
  CHECK(max_diff(pauli_y().adjoint(), pauli_y()) == 0.0);
  CHECK(max_diff((i2 * cplx(0.0, 1.0)).adjoint(), i2 * cplx(0.0, -1.0)) == 0.0);
}

TEST_CASE("kron: index convention") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  const ComplexMatrix zi = kron(pauli_z(), i2);
  CHECK(zi(0, 0) == cplx(1.0));
  CHECK(zi(1, 1) == cplx(1.0));
  CHECK(zi(2, 2) == cplx(-1.0));
  CHECK(zi(3, 3) == cplx(-1.0));
  CHECK(max_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);
  // sigma_x x sigma_x maps |00> to |11>
  const ComplexMatrix xx = kron(pauli_x(), pauli_x());
  CHECK(xx(3, 0) == cplx(1.0));
  CHECK(xx(0, 0) == cplx(0.0));
}

TEST_CASE("kron: trace multiplicativity") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    ComplexMatrix a(2), b(2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        a(i, j) = testutil::randn_c(rng);
        b(i, j) = testutil::randn_c(rng);
      }
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-13 * (1 + a.max_abs() * b.max_abs()));
  }
}

TEST_CASE("partial_trace_b") {
  // maximally entangled marginal is I/2
  ComplexMatrix bell(4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  CHECK(max_diff(partial_trace_b(bell), ComplexMatrix::identity(2) * cplx(0.5)) < 1e-15);

  CHECK(max_diff(partial_trace_b(ComplexMatrix::identity(4) * cplx(0.25)),
                 ComplexMatrix::identity(2) * cplx(0.5)) < 1e-15);

  CHECK_THROWS_AS(partial_trace_b(ComplexMatrix::identity(2)), std::invalid_argument);

  // product states: partial_trace_b(rho_a x rho_b) = rho_a Tr(rho_b)
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    ComplexMatrix a(2), b(2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        a(i, j) = testutil::randn_c(rng);
        b(i, j) = testutil::randn_c(rng);
      }
    const ComplexMatrix lhs = partial_trace_b(kron(a, b));
    ComplexMatrix rhs = a;
    rhs *= b.trace();
    CHECK(max_diff(lhs, rhs) < 1e-13 * (1 + a.max_abs() * b.max_abs()));
  }
}

TEST_CASE("herm_eig: fixed cases") {
  auto e1 = herm_eig(ComplexMatrix::identity(2));
  CHECK(e1.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e1.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

  auto ex = herm_eig(pauli_x());
  CHECK(ex.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ex.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

  ComplexMatrix d(2, {2.0, 0.0, 0.0, 5.0});
  auto ed = herm_eig(d);
  CHECK(ed.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ed.eigenvalues[1] == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(std::abs(ed.eigenvectors(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(ed.eigenvectors(1, 1)) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(herm_eig(ComplexMatrix(2, {0.0, 1.0, 0.0, 0.0})), std::invalid_argument);
}

TEST_CASE("herm_eig: reconstruction and unitarity on random Hermitian") {
  std::mt19937 rng(23);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 3;
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = testutil::randn_c(rng);
    ComplexMatrix a = g + g.adjoint();

    const auto eig = herm_eig(a);
    // V diag(lambda) V†
    ComplexMatrix rec(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          s += eig.eigenvectors(i, k) * eig.eigenvalues[k] * std::conj(eig.eigenvectors(j, k));
        rec(i, j) = s;
      }
    CHECK(max_diff(rec, a) <= 1e-12 * (1.0 + a.max_abs()));
    CHECK(max_diff(eig.eigenvectors.adjoint() * eig.eigenvectors, ComplexMatrix::identity(n)) <
          1e-12);
    CHECK(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
  }
}

TEST_CASE("sqrt_psd: fixed cases") {
  CHECK(max_diff(sqrt_psd(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)) < 1e-13);

  ComplexMatrix d(2, {4.0, 0.0, 0.0, 9.0});
  ComplexMatrix expected(2, {2.0, 0.0, 0.0, 3.0});
  CHECK(max_diff(sqrt_psd(d), expected) < 1e-13);

  // rank-1 projector is its own square root
  ComplexMatrix bell(4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  CHECK(max_diff(sqrt_psd(bell), bell) < 1e-12);

  CHECK_THROWS_AS(sqrt_psd(ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0})), std::invalid_argument);
}

TEST_CASE("sqrt_psd: squaring reproduces random PSD matrices") {
  std::mt19937 rng(31);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + t % 3;
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = testutil::randn_c(rng);
    const ComplexMatrix a = g * g.adjoint();
    const ComplexMatrix r = sqrt_psd(a);
    CHECK(r.hermiticity_defect() < 1e-11 * (1 + a.max_abs()));
    CHECK(max_diff(r * r, a) < 1e-10 * (1.0 + a.max_abs()));
  }
}

TEST_CASE("kron associativity up to nothing (exact layout)") {
  std::mt19937 rng(41);
  ComplexMatrix a(2), b(2), c(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      a(i, j) = testutil::randn_c(rng);
      b(i, j) = testutil::randn_c(rng);
      c(i, j) = testutil::randn_c(rng);
    }
  CHECK(max_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-13);
}
