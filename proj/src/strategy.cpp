#include "telenoise/strategy.hpp"

#include <cmath>
#include <stdexcept>

namespace telenoise {

namespace {

using Eigen::Matrix3d;
using Eigen::Vector3d;

// Outcome index -> announced message (bit 1 first). The error masks in
// channels.cpp use the same bit convention.
constexpr int kOutcomeMessage[4] = {0b00, 0b11, 0b01, 0b10};
constexpr int kMessageOutcome[4] = {0, 2, 3, 1};
constexpr int kErrorMask[4] = {0b00, 0b10, 0b01, 0b11};

// Pauli whose rotation image equals -T_k.
constexpr int kPauliOfNegBell[4] = {2, 1, 3, 0};

}  // namespace

Vector3d bell_correlation_diag(int k) {
  switch (k) {
    case 0: return {1.0, -1.0, 1.0};
    case 1: return {-1.0, 1.0, 1.0};
    case 2: return {1.0, 1.0, -1.0};
    case 3: return {-1.0, -1.0, -1.0};
    default: throw std::invalid_argument("bell index must be 0..3");
  }
}

int outcome_message(int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("outcome must be 0..3");
  return kOutcomeMessage[k];
}

int message_outcome(int m) {
  if (m < 0 || m > 3) throw std::invalid_argument("message must be 0..3");
  return kMessageOutcome[m];
}

int shifted_outcome(int j, int i) {
  return kMessageOutcome[kOutcomeMessage[j] ^ kErrorMask[i]];
}

const Matrix3d& pauli_rotation(int m) {
  static const Matrix3d table[4] = {
      Vector3d(1, 1, 1).asDiagonal(), Vector3d(1, -1, -1).asDiagonal(),
      Vector3d(-1, 1, -1).asDiagonal(), Vector3d(-1, -1, 1).asDiagonal()};
  if (m < 0 || m > 3) throw std::invalid_argument("pauli index must be 0..3");
  return table[m];
}

const Vector3d& pauli_rotation_diag(int m) {
  static const Vector3d table[4] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1},
                                    {-1, -1, 1}};
  if (m < 0 || m > 3) throw std::invalid_argument("pauli index must be 0..3");
  return table[m];
}

CorrectionStrategy standard_strategy() { return {{2, 1, 3, 0}}; }

const std::array<CorrectionStrategy, 4>& regime_tables() {
  static const std::array<CorrectionStrategy, 4> tables = [] {
    std::array<CorrectionStrategy, 4> t{};
    for (int d = 0; d < 4; ++d)
      for (int j = 0; j < 4; ++j)
        t[d].pauli[j] = kPauliOfNegBell[shifted_outcome(j, d)];
    return t;
  }();
  return tables;
}

CorrectionStrategy regime_strategy(const NoiseModelI& ch) {
  int dominant = 0;
  for (int i = 1; i < 4; ++i)
    if (ch.p[i] > ch.p[dominant]) dominant = i;
  return regime_tables()[dominant];
}

std::array<Vector3d, 4> slot_coefficients(const Vector3d& axisT,
                                          const NoiseModelI& ch) {
  std::array<Vector3d, 4> slots;
  for (int j = 0; j < 4; ++j) {
    Vector3d mixed = Vector3d::Zero();
    for (int i = 0; i < 4; ++i)
      mixed += ch.p[i] * bell_correlation_diag(shifted_outcome(j, i));
    slots[j] = axisT.cwiseProduct(mixed);
  }
  return slots;
}

double rotation_fidelity(const Vector3d& axisT, const NoiseModelI& ch,
                         const std::array<Matrix3d, 4>& rotations) {
  const auto slots = slot_coefficients(axisT, ch);
  double acc = 0.0;
  for (int j = 0; j < 4; ++j)
    for (int a = 0; a < 3; ++a) acc += rotations[j](a, a) * slots[j](a);
  return 0.5 + acc / 24.0;
}

double strategy_fidelity(const Vector3d& axisT, const NoiseModelI& ch,
                         const CorrectionStrategy& strat) {
  const auto slots = slot_coefficients(axisT, ch);
  double acc = 0.0;
  for (int j = 0; j < 4; ++j)
    acc += pauli_rotation_diag(strat.pauli[j]).dot(slots[j]);
  return 0.5 + acc / 24.0;
}

double regime_fidelity(const CanonicalForm& cf, const NoiseModelI& ch) {
  const Vector3d axisT = cf.axis_correlation();
  double pmax = ch.p[0];
  for (int i = 1; i < 4; ++i) pmax = std::max(pmax, ch.p[i]);
  double best = -1.0;
  for (int d = 0; d < 4; ++d) {
    if (ch.p[d] < pmax) continue;
    best = std::max(best, strategy_fidelity(axisT, ch, regime_tables()[d]));
  }
  return best;
}

StrategySearch search_all_strategies(const CanonicalForm& cf,
                                     const NoiseModelI& ch) {
  const auto slots = slot_coefficients(cf.axis_correlation(), ch);
  double dot[4][4];
  for (int j = 0; j < 4; ++j)
    for (int s = 0; s < 4; ++s) dot[j][s] = pauli_rotation_diag(s).dot(slots[j]);

  StrategySearch out;
  out.bestFidelity = -1.0;
  for (int idx = 0; idx < 256; ++idx) {
    const int s0 = (idx >> 6) & 3, s1 = (idx >> 4) & 3, s2 = (idx >> 2) & 3,
              s3 = idx & 3;
    const double f =
        0.5 + (dot[0][s0] + dot[1][s1] + dot[2][s2] + dot[3][s3]) / 24.0;
    out.values[idx] = f;
    if (f > out.bestFidelity) {
      out.bestFidelity = f;
      out.best = {{s0, s1, s2, s3}};
    }
  }
  return out;
}

Matrix3d RotationTriple::matrix() const {
  const double cf = std::cos(phi), sf = std::sin(phi);
  const double cp = std::cos(psi), sp = std::sin(psi);
  const double ct = std::cos(theta), st = std::sin(theta);
  Matrix3d r;
  r << cf * cp - ct * sf * sp, -cf * sp - ct * sf * cp, sf * st,
      sf * cp + ct * cf * sp, -sf * sp + ct * cf * cp, -cf * st,
      sp * st, cp * st, ct;
  return r;
}

RotationCheck random_rotation_check(const CanonicalForm& cf,
                                    const NoiseModelI& ch, std::uint64_t n,
                                    std::uint64_t seed) {
  const Vector3d axisT = cf.axis_correlation();
  RotationCheck out;
  out.reference = strategy_fidelity(axisT, ch, regime_strategy(ch));
  out.bestSampled = -1.0;

  auto rng = stream_rng(seed, 0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> cosu(-1.0, 1.0);
  std::array<Matrix3d, 4> rots;
  for (std::uint64_t it = 0; it < n; ++it) {
    for (auto& r : rots) {
      RotationTriple rt{angle(rng), angle(rng), std::acos(cosu(rng))};
      r = rt.matrix();
    }
    out.bestSampled =
        std::max(out.bestSampled, rotation_fidelity(axisT, ch, rots));
  }
  out.margin = out.reference - out.bestSampled;
  return out;
}

}  // namespace telenoise
