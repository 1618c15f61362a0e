#pragma once

#include <optional>

#include <Eigen/Dense>

#include "telenoise/canonical.hpp"
#include "telenoise/channels.hpp"

namespace telenoise {

// Solved: interior optimum with vanishing stationarity residuals.
// Boundary: minimum sits on a box edge, stationarity need not hold.
// Infeasible: the state cannot beat the classical threshold under any
// channel (correlation magnitudes sum to <= 1), no channel is returned.
enum class CostStatus { Solved, Infeasible, Boundary };

struct CostSolutionI {
  CostStatus status;
  std::optional<NoiseModelI> channel;
  double cost;                // bits; +inf when infeasible
  double constraintResidual;  // noise load minus the classical threshold gap
  Eigen::Vector2d stationaryResiduals;
};

struct CostSolutionII {
  CostStatus status;
  std::optional<NoiseModelII> channel;
  double cost;
  double constraintResidual;
  Eigen::Vector2d stationaryResiduals;
};

// Least Shannon information the classical channel must carry so that the
// average fidelity still reaches the classical threshold 2/3. The optimum
// lies on the threshold curve; for the four-outcome channel the entropy
// maximizer there is a Gibbs family with one multiplier, found by a
// monotone 1-D solve. Requires a negative-determinant canonical form.
CostSolutionI min_cost_model_i(const CanonicalForm& cf);

// Same threshold problem for two independent bit channels: walk the
// constraint curve eta' (eta) inside the [1/2,1]^2 box and minimize the
// summed per-bit informations.
CostSolutionII min_cost_model_ii(const CanonicalForm& cf);

// Residuals of the printed optimality relations at an arbitrary channel.
// For the four-outcome model these are identities on the whole threshold
// manifold, so they vanish anywhere the constraint holds. Non-finite
// intermediate values map to +inf.
Eigen::Vector2d stationary_residuals(const CanonicalForm& cf,
                                     const NoiseModelI& ch);
Eigen::Vector2d stationary_residuals(const CanonicalForm& cf,
                                     const NoiseModelII& ch);

// Brute-force lattice minima over channels strictly beating the classical
// threshold; independent check that the solvers are true lower bounds.
double grid_min_cost_model_i(const CanonicalForm& cf, double resolution);
double grid_min_cost_model_ii(const CanonicalForm& cf, double resolution);

}  // namespace telenoise
