#include "telenoise/costopt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace telenoise {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Axis-ordered correlation magnitudes (t1, t2, t3). The threshold problem is
// posed for negative-determinant states, where all three are positive.
Eigen::Vector3d axis_magnitudes(const CanonicalForm& cf) {
  if (cf.detSign != DetSign::Negative)
    throw std::domain_error(
        "classical-cost optimization applies only when det T < 0");
  return cf.axis_correlation().cwiseAbs();
}

double noise_load_i(const Eigen::Vector3d& t, const double p[4]) {
  return p[1] * (t(0) + t(2)) + p[2] * (t(1) + t(2)) + p[3] * (t(0) + t(1));
}

double noise_load_ii(const Eigen::Vector3d& t, double eta, double etaPrime) {
  return t(0) * (1.0 - eta) + t(1) * (1.0 - etaPrime) +
         t(2) * (eta + etaPrime - 2.0 * eta * etaPrime);
}

double plogp(double v) { return v <= 0.0 ? 0.0 : v * std::log2(v); }

double bit_info(double x) { return 1.0 + plogp(x) + plogp(1.0 - x); }

double sanitize(double v) { return std::isfinite(v) ? v : kInf; }

// eta' on the threshold curve; the denominator is strictly negative on the
// box for feasible states (t2 > 0).
double eta_prime_on_curve(const Eigen::Vector3d& t, double beta, double eta) {
  return (beta - t(0) * (1.0 - eta) - t(1) - t(2) * eta) /
         (t(2) * (1.0 - 2.0 * eta) - t(1));
}

CostSolutionI infeasible_i() {
  CostSolutionI sol;
  sol.status = CostStatus::Infeasible;
  sol.cost = kInf;
  sol.constraintResidual = kInf;
  sol.stationaryResiduals = Eigen::Vector2d(kInf, kInf);
  return sol;
}

CostSolutionII infeasible_ii() {
  CostSolutionII sol;
  sol.status = CostStatus::Infeasible;
  sol.cost = kInf;
  sol.constraintResidual = kInf;
  sol.stationaryResiduals = Eigen::Vector2d(kInf, kInf);
  return sol;
}

}  // namespace

CostSolutionI min_cost_model_i(const CanonicalForm& cf) {
  const Eigen::Vector3d t = axis_magnitudes(cf);
  const double beta = 0.5 * (t.sum() - 1.0);
  if (beta <= 1e-12) return infeasible_i();

  // Maximum entropy on {noise load = beta} is the Gibbs family
  // p_i proportional to exp(lambda a_i) with a = (0, t1+t3, t2+t3, t1+t2);
  // the load mean is strictly increasing in lambda, so bisect.
  const double a[4] = {0.0, t(0) + t(2), t(1) + t(2), t(0) + t(1)};
  const auto load_mean = [&](double lambda) {
    double z = 0.0, m = 0.0;
    for (double ai : a) {
      const double w = std::exp(lambda * ai);
      z += w;
      m += ai * w;
    }
    return m / z;
  };

  // Uniform (lambda = 0) always overshoots beta by exactly 1/2.
  double hi = 0.0, lo = -1.0;
  while (load_mean(lo) > beta && lo > -1e18) lo *= 2.0;
  for (int it = 0; it < 400 && hi - lo > 1e-16 * (1.0 + std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (load_mean(mid) > beta ? hi : lo) = mid;
  }
  const double lambda = 0.5 * (lo + hi);
  double w[4], z = 0.0;
  for (int i = 0; i < 4; ++i) {
    w[i] = std::exp(lambda * a[i]);
    z += w[i];
  }

  CostSolutionI sol;
  sol.channel.emplace(w[0] / z, w[1] / z, w[2] / z, w[3] / z);
  sol.cost = mutual_information(*sol.channel);
  sol.constraintResidual = noise_load_i(t, sol.channel->p) - beta;
  sol.stationaryResiduals = stationary_residuals(cf, *sol.channel);
  const double pmin =
      *std::min_element(sol.channel->p, sol.channel->p + 4);
  sol.status = pmin < 1e-12 ? CostStatus::Boundary : CostStatus::Solved;
  return sol;
}

CostSolutionII min_cost_model_ii(const CanonicalForm& cf) {
  const Eigen::Vector3d t = axis_magnitudes(cf);
  const double beta = 0.5 * (t.sum() - 1.0);
  if (beta <= 1e-12) return infeasible_ii();

  const auto cost_at = [&](double eta) {
    const double ep = eta_prime_on_curve(t, beta, eta);
    if (ep < 0.5 - 1e-12 || ep > 1.0 + 1e-12) return kInf;
    return bit_info(eta) + bit_info(std::clamp(ep, 0.5, 1.0));
  };

  // Dense scan locates the global basin; the eta = 1 end is always on the
  // curve, so the feasible set is nonempty.
  const int kScan = 40000;
  double bestEta = 1.0, bestJ = kInf;
  for (int i = 0; i <= kScan; ++i) {
    const double eta = 0.5 + 0.5 * static_cast<double>(i) / kScan;
    const double j = cost_at(eta);
    if (j < bestJ) {
      bestJ = j;
      bestEta = eta;
    }
  }
  if (!std::isfinite(bestJ)) return infeasible_ii();

  // Golden-section polish inside the bracketing scan cells.
  double lo = std::max(0.5, bestEta - 0.5 / kScan);
  double hi = std::min(1.0, bestEta + 0.5 / kScan);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = cost_at(x1), f2 = cost_at(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = cost_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = cost_at(x2);
    }
  }
  const double eta = std::clamp(0.5 * (lo + hi), 0.5, 1.0);
  const double etaPrime =
      std::clamp(eta_prime_on_curve(t, beta, eta), 0.5, 1.0);

  CostSolutionII sol;
  sol.channel.emplace(eta, etaPrime);
  sol.cost = bit_info(eta) + bit_info(etaPrime);
  sol.constraintResidual = noise_load_ii(t, eta, etaPrime) - beta;
  sol.stationaryResiduals = stationary_residuals(cf, *sol.channel);
  const double edge = std::min({eta - 0.5, 1.0 - eta, etaPrime - 0.5,
                                1.0 - etaPrime});
  sol.status = edge < 1e-7 ? CostStatus::Boundary : CostStatus::Solved;
  return sol;
}

Eigen::Vector2d stationary_residuals(const CanonicalForm& cf,
                                     const NoiseModelI& ch) {
  const Eigen::Vector3d t = axis_magnitudes(cf);
  const double t1 = t(0), t2 = t(1), t3 = t(2);
  const double den = 2.0 * (t1 + t3);
  const double p2 = ch.p[2], p3 = ch.p[3];
  const double rhs0 =
      (1.0 + t1 - t2 + t3 + 2.0 * p2 * (t2 - t1) + 2.0 * p3 * (t2 - t3)) / den;
  const double rhs1 =
      (-1.0 + t1 + t2 + t3 - 2.0 * p2 * (t2 + t3) - 2.0 * p3 * (t1 + t2)) /
      den;
  return Eigen::Vector2d(sanitize(ch.p[0] - rhs0), sanitize(ch.p[1] - rhs1));
}

Eigen::Vector2d stationary_residuals(const CanonicalForm& cf,
                                     const NoiseModelII& ch) {
  const Eigen::Vector3d t = axis_magnitudes(cf);
  const double t1 = t(0), t2 = t(1), t3 = t(2);
  const double lg = std::log2(ch.eta / (1.0 - ch.eta));
  const double lgp = std::log2(ch.etaPrime / (1.0 - ch.etaPrime));
  const double balance = lg * (t2 - (1.0 - 2.0 * ch.eta) * t3) -
                         lgp * (t1 - (1.0 - 2.0 * ch.etaPrime) * t3);
  const double threshold =
      (t.sum() - 1.0) - 2.0 * noise_load_ii(t, ch.eta, ch.etaPrime);
  return Eigen::Vector2d(sanitize(balance), sanitize(threshold));
}

double grid_min_cost_model_i(const CanonicalForm& cf, double resolution) {
  const Eigen::Vector3d t = axis_magnitudes(cf);
  const double beta = 0.5 * (t.sum() - 1.0);
  const int n = static_cast<int>(std::lround(1.0 / resolution));
  double best = kInf;
  for (int i1 = 0; i1 <= n; ++i1)
    for (int i2 = 0; i2 + i1 <= n; ++i2)
      for (int i3 = 0; i3 + i2 + i1 <= n; ++i3) {
        const double p[4] = {static_cast<double>(n - i1 - i2 - i3) / n,
                             static_cast<double>(i1) / n,
                             static_cast<double>(i2) / n,
                             static_cast<double>(i3) / n};
        if (noise_load_i(t, p) >= beta) continue;
        const double cost =
            2.0 + plogp(p[0]) + plogp(p[1]) + plogp(p[2]) + plogp(p[3]);
        best = std::min(best, cost);
      }
  return best;
}

double grid_min_cost_model_ii(const CanonicalForm& cf, double resolution) {
  const Eigen::Vector3d t = axis_magnitudes(cf);
  const double beta = 0.5 * (t.sum() - 1.0);
  const int n = static_cast<int>(std::lround(0.5 / resolution));
  double best = kInf;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const double eta = 0.5 + 0.5 * static_cast<double>(i) / n;
      const double etaPrime = 0.5 + 0.5 * static_cast<double>(j) / n;
      if (noise_load_ii(t, eta, etaPrime) >= beta) continue;
      best = std::min(best, bit_info(eta) + bit_info(etaPrime));
    }
  return best;
}

}  // namespace telenoise
