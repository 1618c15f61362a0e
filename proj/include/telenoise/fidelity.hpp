#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "telenoise/canonical.hpp"
#include "telenoise/channels.hpp"
#include "telenoise/strategy.hpp"

namespace telenoise {

// Requested configuration admits no valid channel or state.
struct infeasible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Diagonal of X = (1/4) sum_j O_j^T T^T (sum_i p_i T_{shift(j,i)}); for the
// standard rule this equals T^T (p0 T3 + p1 T0 + p2 T1 + p3 T2). Off-diagonal
// entries vanish because every factor is diagonal.
struct ChiMatrix {
  Eigen::Vector3d diag;
};

ChiMatrix chi_matrix(const Eigen::Vector3d& axisT, const NoiseModelI& ch,
                     const CorrectionStrategy& strat);
ChiMatrix chi_matrix(const CanonicalForm& cf, const NoiseModelI& ch,
                     const CorrectionStrategy& strat);
ChiMatrix chi_matrix(const CanonicalForm& cf, const NoiseModelII& ch,
                     const CorrectionStrategy& strat);

// F = (1 + tr(X)/3) / 2.
double average_fidelity(const ChiMatrix& chi);
// Delta = sqrt((tr(X^2) - tr(X)^2/3) / 30), zero iff the diagonal entries of
// X are all equal.
double fidelity_deviation(const ChiMatrix& chi);

double average_fidelity(const CanonicalForm& cf, const NoiseModelI& ch,
                        const CorrectionStrategy& strat);
double average_fidelity(const CanonicalForm& cf, const NoiseModelII& ch,
                        const CorrectionStrategy& strat);
double fidelity_deviation(const CanonicalForm& cf, const NoiseModelI& ch,
                          const CorrectionStrategy& strat);
double fidelity_deviation(const CanonicalForm& cf, const NoiseModelII& ch,
                          const CorrectionStrategy& strat);

// Noise penalty f for det T < 0: the average fidelity under the standard
// rule is (1 + sum|t|/3)/2 - f/3, so F > 2/3 is exactly sum|t| > 1 + 2f.
// Throws std::domain_error unless detSign is negative, where the bound is
// the known non-classicality criterion.
struct NonClassicality {
  bool nonClassical;  // strict inequality
  double fNoise;
};
NonClassicality nonclassical_condition(const CanonicalForm& cf,
                                       const NoiseModelI& ch);
NonClassicality nonclassical_condition(const CanonicalForm& cf,
                                       const NoiseModelII& ch);

// Pairwise differences (x1-x2, x2-x3) of the standard-rule X diagonal; both
// vanish exactly when the deviation does.
Eigen::Vector2d zero_deviation_residual(const CanonicalForm& cf,
                                        const NoiseModelI& ch);
Eigen::Vector2d zero_deviation_residual(const CanonicalForm& cf,
                                        const NoiseModelII& ch);

// Solves the two linear equal-diagonal conditions for the unfixed
// probabilities. fixed[i] pins p_i. Throws std::invalid_argument if the
// system is underdetermined and infeasible_error if it is inconsistent or
// forces a probability outside [0, 1] (the message names the violated
// bound).
struct DispersionFreeResult {
  NoiseModelI channel;
  double fidelity;
  bool nonClassical;
};
DispersionFreeResult find_dispersion_free_channel(
    const CanonicalForm& cf, const std::array<std::optional<double>, 4>& fixed);

struct FormulaValues {
  double fidelity;
  double deviation;
};

// Closed forms for the Werner family eps|phi0><phi0| + (1-eps) I/4,
// valid (and non-trivial) for 1/3 < eps <= 1.
FormulaValues werner_formulas(double eps, const NoiseModelI& ch);
FormulaValues werner_formulas(double eps, const NoiseModelII& ch);

// Closed forms for a|00> + b|11>, 0 < a <= 1.
FormulaValues pure_state_formulas(double a, const NoiseModelI& ch);
FormulaValues pure_state_formulas(double a, const NoiseModelII& ch);

struct FidelityReport {
  double fidelity;
  double deviation;
  bool nonClassical;             // fidelity > 2/3 strictly
  bool dispersionFree;           // deviation <= 1e-10
  std::optional<double> fNoise;  // only defined for det T < 0
  std::string strategyUsed;
};
FidelityReport make_report(const CanonicalForm& cf, const NoiseModelI& ch,
                           const CorrectionStrategy& strat,
                           const std::string& strategyName);

}  // namespace telenoise
