#pragma once

#include <array>
#include <cstdint>

#include <Eigen/Dense>

#include "telenoise/channels.hpp"
#include "telenoise/qstate.hpp"
#include "telenoise/strategy.hpp"

namespace telenoise {

// One Bell-measurement branch on (input, Alice's half): outcome probability
// and Bob's renormalized conditional state. probability 0 (below 1e-14) is
// flagged and postState is the maximally mixed placeholder.
struct ProtocolOutcome {
  double probability;
  Eigen::Matrix2cd postState;
  bool zeroProbability;
};

// Projects input x resource onto the four Bell states on the first two
// qubits and traces them out. Probabilities sum to 1.
std::array<ProtocolOutcome, 4> bell_measure(const TwoQubitState& resource,
                                            const InputQubit& input);

// Fidelity <psi| rho_out |psi> for one input: averages Bob's corrected state
// over measurement outcomes and classical error patterns.
double per_input_fidelity(const TwoQubitState& resource, const NoiseModelI& ch,
                          const CorrectionStrategy& strat,
                          const InputQubit& input);

// The per-input fidelity is an exact quadratic in the Bloch vector,
// f(a) = c + l.a + a^T Q a. The coefficients are reconstructed from probe
// evaluations of the simulated protocol at axis and diagonal directions
// (gauge Q_33 = 0), which makes uniform sphere averages exact.
class QuadraticFidelity {
 public:
  QuadraticFidelity(const TwoQubitState& resource, const NoiseModelI& ch,
                    const CorrectionStrategy& strat);

  double operator()(const Eigen::Vector3d& a) const;
  double haar_mean() const;
  double haar_second_moment() const;

  double c;
  Eigen::Vector3d l;
  Eigen::Matrix3d Q;
};

struct ExactAverage {
  double fidelity;
  double deviation;
};

// Haar-uniform average fidelity and its spread via exact sphere moments of
// the probe-reconstructed quadratic. Shares no formula with the closed-form
// engine.
ExactAverage exact_average(const TwoQubitState& resource, const NoiseModelI& ch,
                           const CorrectionStrategy& strat);

struct RunStatistics {
  double meanF;
  double delta;     // sqrt(<f^2> - <f>^2) over the sampled inputs
  double stdError;  // sample standard deviation of f divided by sqrt(n)
  std::uint64_t samples;
};

// Unit vector uniform on the sphere (normalized Gaussian triple; norms below
// 1e-8 are rejected and redrawn).
Eigen::Vector3d haar_bloch_sample(std::mt19937_64& rng);

// Monte Carlo over Haar-random inputs. Samples are processed in fixed-size
// blocks, each with its own seed-derived stream, and reduced in block order,
// so the result is identical for any thread count. threads = 0 picks a small
// default.
RunStatistics haar_average(const TwoQubitState& resource, const NoiseModelI& ch,
                           const CorrectionStrategy& strat, std::uint64_t n,
                           std::uint64_t seed, int threads = 0);

// Full-sampling variant: draws the measurement outcome and the classical
// channel transition per sample instead of averaging them analytically.
// Same mean, larger variance; delta here includes that extra randomness.
RunStatistics haar_average_sampled(const TwoQubitState& resource,
                                   const NoiseModelI& ch,
                                   const CorrectionStrategy& strat,
                                   std::uint64_t n, std::uint64_t seed);

}  // namespace telenoise
