#pragma once

#include <Eigen/Dense>

namespace telenoise {

// Single-qubit Pauli matrices, index 0..3 = I, X, Y, Z.
const Eigen::Matrix2cd& pauli(int i);

// Kronecker product sigma_i (qubit A) x sigma_j (qubit B).
Eigen::Matrix4cd pauli_kron(int i, int j);

// Hilbert-Schmidt coefficients of a two-qubit operator:
//   rho = 1/4 (I + R.sigma x I + I x S.sigma + sum_ij T_ij sigma_i x sigma_j).
struct PauliDecomposition {
  Eigen::Vector3d R;  // Alice's local Bloch vector
  Eigen::Vector3d S;  // Bob's local Bloch vector
  Eigen::Matrix3d T;  // correlation matrix
};

// Validated two-qubit density matrix. Construction enforces hermiticity
// (asymmetry below 1e-12, then symmetrized), unit trace within 1e-12 and
// positive semidefiniteness (eigenvalues >= -1e-10); violations throw
// std::invalid_argument naming the broken invariant.
class TwoQubitState {
 public:
  static TwoQubitState from_matrix(const Eigen::Matrix4cd& rho);

  const Eigen::Matrix4cd& matrix() const { return rho_; }

 private:
  explicit TwoQubitState(Eigen::Matrix4cd rho) : rho_(std::move(rho)) {}
  Eigen::Matrix4cd rho_;
};

// Teleportation input qubit |psi><psi| with Bloch vector a. The vector is
// required to be unit length within 1e-12 and is then normalized exactly.
class InputQubit {
 public:
  explicit InputQubit(const Eigen::Vector3d& a);

  const Eigen::Vector3d& bloch() const { return a_; }
  Eigen::Matrix2cd density() const;

 private:
  Eigen::Vector3d a_;
};

PauliDecomposition pauli_decompose(const TwoQubitState& state);

// Rebuilds the density matrix from Hilbert-Schmidt coefficients; throws if
// the result is not a valid state (the coefficients may be unphysical).
TwoQubitState reconstruct(const PauliDecomposition& d);

// Wootters concurrence, clamped to [0, 1].
double concurrence(const TwoQubitState& state);

// Bell basis in the computational basis, k = 0..3:
//   phi0 = (|00>+|11>)/sqrt2, phi1 = (|00>-|11>)/sqrt2,
//   phi2 = (|01>+|10>)/sqrt2, phi3 = (|01>-|10>)/sqrt2.
Eigen::Vector4cd bell_vector(int k);

// Maximally entangled resource |phi0>.
TwoQubitState bell_state();

// Pure resource a|00> + b|11| with b = sqrt(1-a^2), 0 < a <= 1.
TwoQubitState pure_state(double a);

// Werner resource eps |phi0><phi0| + (1-eps) I/4, 0 <= eps <= 1.
TwoQubitState werner_state(double eps);

// State with diagonal correlation matrix diag(t) and local vectors r, s.
TwoQubitState tdiag_state(const Eigen::Vector3d& t, const Eigen::Vector3d& r,
                          const Eigen::Vector3d& s);

}  // namespace telenoise
