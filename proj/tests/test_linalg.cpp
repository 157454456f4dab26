#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mubbell;
using Catch::Approx;

TEST_CASE("state vectors normalize and canonicalize") {
  cvec raw(3);
  raw << complexd(0.0, 2.0), complexd(1.0, 1.0), complexd(0.5, 0.0);
  const StateVector v(raw);
  REQUIRE(v.amplitudes().norm() == Approx(1.0).margin(1e-12));
  REQUIRE(v[0].imag() == 0.0);
  REQUIRE(v[0].real() > 0.0);

  SECTION("canonical phase is idempotent") {
    cvec once = v.amplitudes();
    cvec twice = once;
    StateVector::canonicalize_phase(twice);
    REQUIRE((once - twice).norm() == 0.0);
  }

  SECTION("zero and empty vectors are rejected") {
    REQUIRE_THROWS_AS(StateVector(cvec::Zero(3)), std::invalid_argument);
    REQUIRE_THROWS_AS(StateVector(cvec()), std::invalid_argument);
  }
}

TEST_CASE("tensor product of basis states") {
  const StateVector e0 = StateVector::basis_state(2, 0);
  const StateVector t = tensor(e0, e0);
  REQUIRE(t.dim() == 4);
  REQUIRE(t[0] == complexd(1.0, 0.0));
  REQUIRE(std::abs(t[1]) + std::abs(t[2]) + std::abs(t[3]) == 0.0);
}

TEST_CASE("tensor product keeps norms and components") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int du = 2 + trial % 5;
    const int dv = 2 + (trial / 5) % 4;
    const StateVector u = oracles::random_state(du, rng);
    const StateVector v = oracles::random_state(dv, rng);
    const StateVector t = tensor(u, v);
    REQUIRE(t.amplitudes().norm() == Approx(1.0).margin(1e-12));
    // components are the products u_i v_j up to the canonical global phase
    complexd phase(0.0, 0.0);
    for (Eigen::Index i = 0; i < t.dim(); ++i) {
      const complexd prod = u[i / dv] * v[i % dv];
      if (std::abs(prod) > 1e-8) {
        phase = t[i] / prod;
        break;
      }
    }
    REQUIRE(std::abs(phase) == Approx(1.0).margin(1e-10));
    for (Eigen::Index i = 0; i < t.dim(); ++i)
      REQUIRE(std::abs(t[i] - phase * u[i / dv] * v[i % dv]) < 1e-10);
  }
}

TEST_CASE("hermitian eigendecomposition") {
  SECTION("identity has unit spectrum") {
    const HermitianEigen eig = eig_hermitian(cmat::Identity(3, 3));
    for (int i = 0; i < 3; ++i) REQUIRE(eig.eigenvalues[i] == Approx(1.0).margin(1e-12));
  }

  SECTION("diagonal matrix, descending order") {
    cmat m = cmat::Zero(2, 2);
    m(0, 0) = 2.0;
    m(1, 1) = -1.0;
    const HermitianEigen eig = eig_hermitian(m);
    REQUIRE(eig.eigenvalues[0] == Approx(2.0).margin(1e-12));
    REQUIRE(eig.eigenvalues[1] == Approx(-1.0).margin(1e-12));
    REQUIRE(oracles::ray_gap(eig.eigenvectors[0], StateVector::basis_state(2, 0)) < 1e-12);
    REQUIRE(oracles::ray_gap(eig.eigenvectors[1], StateVector::basis_state(2, 1)) < 1e-12);
  }

  SECTION("random reconstruction, orthonormality, trace") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      const int dim = 2 + trial % 7;
      const cmat m = oracles::random_hermitian(dim, rng);
      const HermitianEigen eig = eig_hermitian(m);
      cmat rebuilt = cmat::Zero(dim, dim);
      double trace = 0.0;
      for (int i = 0; i < dim; ++i) {
        rebuilt += eig.eigenvalues[i] * eig.eigenvectors[i].projector();
        trace += eig.eigenvalues[i];
        for (int j = i + 1; j < dim; ++j)
          REQUIRE(std::abs(eig.eigenvectors[i].overlap(eig.eigenvectors[j])) < 1e-9);
      }
      REQUIRE(max_abs(rebuilt - m) < 1e-9);
      REQUIRE(trace == Approx(m.trace().real()).margin(1e-9));
      for (int i = 0; i + 1 < dim; ++i)
        REQUIRE(eig.eigenvalues[i] >= eig.eigenvalues[i + 1]);
    }
  }

  SECTION("non-hermitian input is rejected") {
    cmat m = cmat::Zero(2, 2);
    m(0, 1) = 1.0;
    REQUIRE_THROWS_AS(eig_hermitian(m), std::invalid_argument);
  }
}

TEST_CASE("principal unitary square root") {
  SECTION("identity") {
    const cmat r = principal_unitary_sqrt(cmat::Identity(4, 4));
    REQUIRE(max_abs(r - cmat::Identity(4, 4)) < 1e-12);
  }

  SECTION("phase -1 maps to +i under the principal branch") {
    cmat u = cmat::Zero(2, 2);
    u(0, 0) = 1.0;
    u(1, 1) = -1.0;
    const cmat r = principal_unitary_sqrt(u);
    REQUIRE(std::abs(r(0, 0) - complexd(1.0, 0.0)) < 1e-12);
    REQUIRE(std::abs(r(1, 1) - complexd(0.0, 1.0)) < 1e-12);
    REQUIRE(std::abs(r(0, 1)) + std::abs(r(1, 0)) < 1e-12);
  }

  SECTION("squares back to the Fourier matrix") {
    const MubPair mub = fourier_basis(3);
    cmat f(3, 3);
    for (int k = 0; k < 3; ++k) f.col(k) = mub.basis_a_prime[k].amplitudes();
    const cmat r = principal_unitary_sqrt(f);
    REQUIRE(max_abs(r * r - f) < 1e-9);
  }

  SECTION("random unitaries up to dimension 16") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
      const int dim = 2 + trial % 15;
      const cmat u = oracles::random_unitary(dim, rng);
      const cmat r = principal_unitary_sqrt(u);
      REQUIRE(is_unitary(r, 1e-9));
      REQUIRE(max_abs(r * r - u) < 1e-9);
      // every eigenphase of the root lies in the halved branch
      const Eigen::ComplexEigenSolver<cmat> eig(r);
      for (int i = 0; i < dim; ++i) {
        const double theta = std::arg(eig.eigenvalues()[i]);
        REQUIRE(theta > -std::numbers::pi / 2 - 1e-9);
        REQUIRE(theta <= std::numbers::pi / 2 + 1e-9);
      }
    }
  }

  SECTION("non-unitary input is rejected") {
    cmat m = cmat::Identity(2, 2) * 2.0;
    REQUIRE_THROWS_AS(principal_unitary_sqrt(m), std::invalid_argument);
  }
}

TEST_CASE("trace products") {
  std::mt19937_64 rng(17);

  SECTION("unit trace against the identity") {
    for (int dim : {2, 3, 5}) {
      const cmat rho = oracles::random_density(dim, rng);
      REQUIRE(trace_product(rho, cmat::Identity(dim, dim)) == Approx(1.0).margin(1e-10));
    }
  }

  SECTION("projector onto itself") {
    const cmat p = StateVector::basis_state(2, 0).projector();
    REQUIRE(trace_product(p, p) == Approx(1.0).margin(1e-12));
  }

  SECTION("linearity in the state") {
    const int dim = 4;
    const StateVector psi = oracles::random_state(dim, rng);
    const double lam = 0.37;
    const cmat mixed =
        lam * psi.projector() + (1.0 - lam) * cmat::Identity(dim, dim) / double(dim);
    for (int trial = 0; trial < 10; ++trial) {
      const cmat p = oracles::random_hermitian(dim, rng);
      const double direct = trace_product(mixed, p);
      const double split = lam * trace_product(psi.projector(), p) +
                           (1.0 - lam) * p.trace().real() / dim;
      REQUIRE(direct == Approx(split).margin(1e-10));
    }
  }

  SECTION("imaginary part vanishes for hermitian observables") {
    const int dim = 3;
    const cmat rho = oracles::random_density(dim, rng);
    const cmat p = oracles::random_hermitian(dim, rng);
    REQUIRE(std::abs((rho * p).trace().imag()) < 1e-10);
  }

  SECTION("dimension mismatch is rejected") {
    REQUIRE_THROWS_AS(trace_product(cmat::Identity(2, 2), cmat::Identity(3, 3)),
                      std::invalid_argument);
  }
}
