#include "telenoise/qstate.hpp"

#include <complex>

#include "testers.hpp"

using namespace telenoise;
using testers::kron2;

namespace {
const std::complex<double> kI(0.0, 1.0);
}

TEST_CASE("pauli matrices satisfy the algebra") {
  for (int i = 0; i < 4; ++i) {
    const Eigen::Matrix2cd& s = pauli(i);
    CHECK((s * s - Eigen::Matrix2cd::Identity()).norm() < 1e-15);
    CHECK((s - s.adjoint()).norm() < 1e-15);
    if (i > 0) CHECK(std::abs(s.trace()) < 1e-15);
  }
  CHECK((pauli(1) * pauli(2) - kI * pauli(3)).norm() < 1e-15);
  CHECK((pauli(2) * pauli(3) - kI * pauli(1)).norm() < 1e-15);
  CHECK((pauli(3) * pauli(1) - kI * pauli(2)).norm() < 1e-15);
}

TEST_CASE("pauli_kron is the literal Kronecker product") {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK((pauli_kron(i, j) - kron2(pauli(i), pauli(j))).norm() < 1e-15);
}

TEST_CASE("bell vectors are orthonormal and match their definitions") {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd expect[4];
  expect[0] << r, 0, 0, r;
  expect[1] << r, 0, 0, -r;
  expect[2] << 0, r, r, 0;
  expect[3] << 0, r, -r, 0;
  for (int k = 0; k < 4; ++k) {
    CHECK((bell_vector(k) - expect[k]).norm() < 1e-15);
    for (int l = 0; l < 4; ++l) {
      const std::complex<double> ip = bell_vector(k).dot(bell_vector(l));
      CHECK(std::abs(ip - (k == l ? 1.0 : 0.0)) < 1e-15);
    }
  }
  const Eigen::Matrix4cd proj = bell_vector(0) * bell_vector(0).adjoint();
  CHECK((bell_state().matrix() - proj).norm() < 1e-15);
}

TEST_CASE("from_matrix validates the density-matrix invariants") {
  auto g = testers::rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const TwoQubitState st = testers::random_density(g);
    CHECK(std::abs(st.matrix().trace().real() - 1.0) < 1e-12);
    CHECK((st.matrix() - st.matrix().adjoint()).norm() < 1e-12);
  }

  Eigen::Matrix4cd bad = Eigen::Matrix4cd::Identity() * 0.25;
  bad(0, 1) = 0.3;  // hermiticity broken
  CHECK_THROWS_AS(TwoQubitState::from_matrix(bad),
                  const std::invalid_argument&);

  CHECK_THROWS_AS(TwoQubitState::from_matrix(Eigen::Matrix4cd::Identity()),
                  const std::invalid_argument&);  // trace 4

  Eigen::Matrix4cd neg = Eigen::Matrix4cd::Zero();
  neg(0, 0) = 1.2;
  neg(1, 1) = -0.2;
  CHECK_THROWS_AS(TwoQubitState::from_matrix(neg),
                  const std::invalid_argument&);
}

TEST_CASE("decompose and reconstruct are inverse on random states") {
  auto g = testers::rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const TwoQubitState st = testers::random_density(g);
    const PauliDecomposition d = pauli_decompose(st);
    CHECK((reconstruct(d).matrix() - st.matrix()).norm() < 1e-12);
    // Coefficients are genuine Pauli expectations.
    for (int i = 1; i < 4; ++i) {
      const double ri = (pauli_kron(i, 0) * st.matrix()).trace().real();
      const double si = (pauli_kron(0, i) * st.matrix()).trace().real();
      CHECK_NEAR(d.R(i - 1), ri, 1e-12);
      CHECK_NEAR(d.S(i - 1), si, 1e-12);
      for (int j = 1; j < 4; ++j) {
        const double tij = (pauli_kron(i, j) * st.matrix()).trace().real();
        CHECK_NEAR(d.T(i - 1, j - 1), tij, 1e-12);
      }
    }
  }
}

TEST_CASE("bell state decomposition is the known diagonal") {
  const PauliDecomposition d = pauli_decompose(bell_state());
  CHECK(d.R.norm() < 1e-14);
  CHECK(d.S.norm() < 1e-14);
  const Eigen::Vector3d diag(1.0, -1.0, 1.0);
  CHECK((d.T - diag.asDiagonal().toDenseMatrix()).norm() < 1e-14);
}

TEST_CASE("family factories carry the advertised correlations") {
  const double a = std::sqrt(0.9);
  const double b = std::sqrt(0.1);
  const PauliDecomposition dp = pauli_decompose(pure_state(a));
  CHECK_NEAR(dp.T(0, 0), 2 * a * b, 1e-12);
  CHECK_NEAR(dp.T(1, 1), -2 * a * b, 1e-12);
  CHECK_NEAR(dp.T(2, 2), 1.0, 1e-12);
  CHECK_NEAR(dp.R(2), a * a - b * b, 1e-12);
  CHECK_NEAR(dp.S(2), a * a - b * b, 1e-12);

  const PauliDecomposition dw = pauli_decompose(werner_state(0.7));
  CHECK(dw.R.norm() < 1e-14);
  const Eigen::Vector3d wd(0.7, -0.7, 0.7);
  CHECK((dw.T - wd.asDiagonal().toDenseMatrix()).norm() < 1e-12);

  const Eigen::Vector3d t(0.3, -0.2, 0.4);
  const Eigen::Vector3d r(0.1, 0.0, -0.2);
  const Eigen::Vector3d s(0.0, 0.15, 0.1);
  const PauliDecomposition dt = pauli_decompose(tdiag_state(t, r, s));
  CHECK((dt.R - r).norm() < 1e-12);
  CHECK((dt.S - s).norm() < 1e-12);
  CHECK((dt.T - t.asDiagonal().toDenseMatrix()).norm() < 1e-12);

  CHECK_THROWS_AS(pure_state(0.0), const std::invalid_argument&);
  CHECK_THROWS_AS(pure_state(1.5), const std::invalid_argument&);
  CHECK_THROWS_AS(werner_state(-0.1), const std::invalid_argument&);
  // diag(1,1,1) has a -1/4 eigenvalue, so the factory must reject it.
  CHECK_THROWS_AS(tdiag_state({1.0, 1.0, 1.0}, Eigen::Vector3d::Zero(),
                              Eigen::Vector3d::Zero()),
                  const std::invalid_argument&);
}

TEST_CASE("concurrence of the named families") {
  // The general eigensolve behind the concurrence is good to ~1e-8.
  CHECK_NEAR(concurrence(bell_state()), 1.0, 1e-8);
  for (double a : {0.8, 0.9, 0.948683298050514}) {
    const double b = std::sqrt(1.0 - a * a);
    CHECK_NEAR(concurrence(pure_state(a)), 2 * a * b, 1e-8);
  }
  for (double eps : {0.2, 1.0 / 3.0, 0.5, 0.9}) {
    const double expect = std::max(0.0, (3 * eps - 1) / 2);
    CHECK_NEAR(concurrence(werner_state(eps)), expect, 1e-8);
  }
  // |0><0| x |0><0| carries no entanglement.
  const Eigen::Vector3d z(0, 0, 1);
  CHECK(concurrence(tdiag_state(z, z, z)) < 1e-8);
}

TEST_CASE("input qubit density is the pure Bloch projector") {
  auto g = testers::rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Vector3d a = testers::random_unit(g);
    const InputQubit q(a);
    const Eigen::Matrix2cd rho = q.density();
    Eigen::Matrix2cd expect = 0.5 * Eigen::Matrix2cd::Identity();
    for (int i = 0; i < 3; ++i) expect += 0.5 * a(i) * pauli(i + 1);
    CHECK((rho - expect).norm() < 1e-14);
    CHECK((rho * rho - rho).norm() < 1e-12);  // pure
  }
  CHECK_THROWS_AS(InputQubit({0.0, 0.0, 0.5}), const std::invalid_argument&);
}
