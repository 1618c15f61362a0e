#pragma once

#include <array>
#include <cstdint>

#include <Eigen/Dense>

#include "telenoise/canonical.hpp"
#include "telenoise/channels.hpp"

namespace telenoise {

// Correlation matrix of the Bell state |phi_k| as a diagonal 3-vector:
// T_0 = diag(1,-1,1), T_1 = diag(-1,1,1), T_2 = diag(1,1,-1), T_3 = -I.
Eigen::Vector3d bell_correlation_diag(int k);

// Two-bit message announcing outcome k: phi0 -> 00, phi1 -> 11,
// phi2 -> 01, phi3 -> 10 (bit 1 is the first bit).
int outcome_message(int k);
int message_outcome(int m);

// Outcome whose announcement lands in received slot j under error pattern i
// (an involution: the same map sends outcome j to its slot under error i).
int shifted_outcome(int j, int i);

// SO(3) image of conjugation by sigma_m: identity for m = 0, otherwise a
// pi-rotation fixing axis m, diag with +1 at position m-1 and -1 elsewhere.
const Eigen::Matrix3d& pauli_rotation(int m);
const Eigen::Vector3d& pauli_rotation_diag(int m);

// Bob's correction rule: received slot (decoded as an outcome index) -> Pauli
// index to apply.
struct CorrectionStrategy {
  std::array<int, 4> pauli;

  bool operator==(const CorrectionStrategy&) const = default;
};

// Noiseless-optimal rule (sigma2, sigma1, sigma3, sigma0 on slots 0..3).
CorrectionStrategy standard_strategy();

// The four per-regime rules, indexed by the dominant error pattern; entry 0
// is the standard rule.
const std::array<CorrectionStrategy, 4>& regime_tables();

// Rule for the channel's dominant error pattern (first index on ties).
CorrectionStrategy regime_strategy(const NoiseModelI& ch);

// Received-slot coefficient matrices M_j = T^T sum_i p_i T_{shift(j,i)},
// diagonal because every factor is. axisT is the signed correlation diagonal.
std::array<Eigen::Vector3d, 4> slot_coefficients(const Eigen::Vector3d& axisT,
                                                 const NoiseModelI& ch);

// Average fidelity 1/2 + (1/24) sum_j tr(O_j^T M_j) for arbitrary rotation
// corrections; only the diagonals of the rotations enter.
double rotation_fidelity(const Eigen::Vector3d& axisT, const NoiseModelI& ch,
                         const std::array<Eigen::Matrix3d, 4>& rotations);

double strategy_fidelity(const Eigen::Vector3d& axisT, const NoiseModelI& ch,
                         const CorrectionStrategy& strat);

// Best fidelity among the regime rules tied for the dominant probability.
double regime_fidelity(const CanonicalForm& cf, const NoiseModelI& ch);

// Exhaustive search over all 4^4 Pauli assignments. values is indexed by the
// base-4 digit string s0 s1 s2 s3 (s0 most significant); best is the
// lexicographically first maximizer.
struct StrategySearch {
  CorrectionStrategy best;
  double bestFidelity;
  std::array<double, 256> values;
};
StrategySearch search_all_strategies(const CanonicalForm& cf,
                                     const NoiseModelI& ch);

// Euler-angle rotation R_z(phi) R_x(theta) R_z(psi).
struct RotationTriple {
  double phi;
  double psi;
  double theta;

  Eigen::Matrix3d matrix() const;
};

// Samples rotation quadruples with phi, psi uniform on [0, 2pi) and
// cos(theta) uniform on [-1, 1], and compares the best sampled fidelity
// against the dominant-regime rule. margin >= 0 up to roundoff certifies
// that no continuous correction beats the Pauli rule.
struct RotationCheck {
  double reference;    // regime-rule fidelity
  double bestSampled;  // best fidelity among sampled quadruples
  double margin;       // reference - bestSampled
};
RotationCheck random_rotation_check(const CanonicalForm& cf,
                                    const NoiseModelI& ch, std::uint64_t n,
                                    std::uint64_t seed);

}  // namespace telenoise
