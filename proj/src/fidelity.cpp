#include "telenoise/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace telenoise {

namespace {

using Eigen::Vector2d;
using Eigen::Vector3d;

Vector3d axis_magnitudes(const CanonicalForm& cf) {
  return cf.axis_correlation().cwiseAbs();
}

double fnoise_model_i(const Vector3d& t, const NoiseModelI& ch) {
  return ch.p[1] * (t(0) + t(2)) + ch.p[2] * (t(1) + t(2)) +
         ch.p[3] * (t(0) + t(1));
}

double fnoise_model_ii(const Vector3d& t, const NoiseModelII& ch) {
  const double e = ch.eta, f = ch.etaPrime;
  return t(0) * (1.0 - e) + t(1) * (1.0 - f) + t(2) * (e + f - 2.0 * e * f);
}

void require_det_negative(const CanonicalForm& cf, const char* what) {
  if (cf.detSign != DetSign::Negative) {
    std::ostringstream msg;
    msg << what << " applies only when det T < 0 (state has "
        << (cf.detSign == DetSign::Zero ? "det T = 0" : "det T > 0") << ")";
    throw std::domain_error(msg.str());
  }
}

}  // namespace

ChiMatrix chi_matrix(const Vector3d& axisT, const NoiseModelI& ch,
                     const CorrectionStrategy& strat) {
  const auto slots = slot_coefficients(axisT, ch);
  Vector3d diag = Vector3d::Zero();
  for (int j = 0; j < 4; ++j)
    diag += pauli_rotation_diag(strat.pauli[j]).cwiseProduct(slots[j]);
  return {0.25 * diag};
}

ChiMatrix chi_matrix(const CanonicalForm& cf, const NoiseModelI& ch,
                     const CorrectionStrategy& strat) {
  return chi_matrix(cf.axis_correlation(), ch, strat);
}

ChiMatrix chi_matrix(const CanonicalForm& cf, const NoiseModelII& ch,
                     const CorrectionStrategy& strat) {
  return chi_matrix(cf, to_model_i(ch), strat);
}

double average_fidelity(const ChiMatrix& chi) {
  return 0.5 * (1.0 + chi.diag.sum() / 3.0);
}

double fidelity_deviation(const ChiMatrix& chi) {
  // (tr X^2 - (tr X)^2/3)/30 rewritten through pairwise differences; the
  // direct form cancels catastrophically and floors Delta near sqrt(eps).
  const double d01 = chi.diag(0) - chi.diag(1);
  const double d12 = chi.diag(1) - chi.diag(2);
  const double d20 = chi.diag(2) - chi.diag(0);
  return std::sqrt((d01 * d01 + d12 * d12 + d20 * d20) / 90.0);
}

double average_fidelity(const CanonicalForm& cf, const NoiseModelI& ch,
                        const CorrectionStrategy& strat) {
  return average_fidelity(chi_matrix(cf, ch, strat));
}

double average_fidelity(const CanonicalForm& cf, const NoiseModelII& ch,
                        const CorrectionStrategy& strat) {
  return average_fidelity(chi_matrix(cf, ch, strat));
}

double fidelity_deviation(const CanonicalForm& cf, const NoiseModelI& ch,
                          const CorrectionStrategy& strat) {
  return fidelity_deviation(chi_matrix(cf, ch, strat));
}

double fidelity_deviation(const CanonicalForm& cf, const NoiseModelII& ch,
                          const CorrectionStrategy& strat) {
  return fidelity_deviation(chi_matrix(cf, ch, strat));
}

NonClassicality nonclassical_condition(const CanonicalForm& cf,
                                       const NoiseModelI& ch) {
  require_det_negative(cf, "the non-classicality criterion");
  const Vector3d t = axis_magnitudes(cf);
  const double f = fnoise_model_i(t, ch);
  return {t.sum() > 1.0 + 2.0 * f, f};
}

NonClassicality nonclassical_condition(const CanonicalForm& cf,
                                       const NoiseModelII& ch) {
  require_det_negative(cf, "the non-classicality criterion");
  const Vector3d t = axis_magnitudes(cf);
  const double f = fnoise_model_ii(t, ch);
  return {t.sum() > 1.0 + 2.0 * f, f};
}

Vector2d zero_deviation_residual(const CanonicalForm& cf,
                                 const NoiseModelI& ch) {
  const Vector3d x = chi_matrix(cf, ch, standard_strategy()).diag;
  return {x(0) - x(1), x(1) - x(2)};
}

Vector2d zero_deviation_residual(const CanonicalForm& cf,
                                 const NoiseModelII& ch) {
  return zero_deviation_residual(cf, to_model_i(ch));
}

DispersionFreeResult find_dispersion_free_channel(
    const CanonicalForm& cf,
    const std::array<std::optional<double>, 4>& fixed) {
  const Vector3d d = cf.axis_correlation();

  // Standard-rule X entries are affine in x = (p1, p2, p3):
  // x_i = d_i (m0_i + G_i . x), with p0 either fixed or 1 - sum(x).
  Vector3d c;
  Eigen::Matrix3d G;
  if (fixed[0]) {
    const double p0 = *fixed[0];
    c = Vector3d(-p0, -p0, -p0);
    G << 1, -1, 1, -1, 1, 1, 1, 1, -1;
  } else {
    c = Vector3d(-1.0, -1.0, -1.0);
    G << 2, 0, 2, 0, 2, 2, 2, 2, 0;
  }
  for (int i = 0; i < 3; ++i) {
    c(i) *= d(i);
    G.row(i) *= d(i);
  }

  std::vector<Eigen::RowVector3d> rows;
  std::vector<double> rhs;
  rows.push_back(G.row(0) - G.row(1));
  rhs.push_back(c(1) - c(0));
  rows.push_back(G.row(1) - G.row(2));
  rhs.push_back(c(2) - c(1));
  for (int i = 1; i <= 3; ++i) {
    if (!fixed[i]) continue;
    Eigen::RowVector3d row = Eigen::RowVector3d::Zero();
    row(i - 1) = 1.0;
    rows.push_back(row);
    rhs.push_back(*fixed[i]);
  }
  if (fixed[0]) {
    rows.push_back(Eigen::RowVector3d::Ones());
    rhs.push_back(1.0 - *fixed[0]);
  }

  Eigen::MatrixXd A(rows.size(), 3);
  Eigen::VectorXd b(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    A.row(i) = rows[i];
    b(i) = rhs[i];
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  qr.setThreshold(1e-10);
  if (qr.rank() < 3)
    throw std::invalid_argument(
        "dispersion-free conditions are underdetermined here; fix more "
        "channel probabilities");
  const Vector3d x = qr.solve(b);
  const double mismatch = (A * x - b).cwiseAbs().maxCoeff();
  if (mismatch > 1e-9) {
    std::ostringstream msg;
    msg << "no channel satisfies the dispersion-free conditions with the "
           "given constraints (equation mismatch "
        << mismatch << ")";
    throw infeasible_error(msg.str());
  }

  double p[4];
  p[1] = x(0);
  p[2] = x(1);
  p[3] = x(2);
  p[0] = fixed[0] ? *fixed[0] : 1.0 - x.sum();
  for (int i = 0; i < 4; ++i) {
    if (p[i] < -1e-9 || p[i] > 1.0 + 1e-9) {
      std::ostringstream msg;
      msg << "dispersion-free teleportation here requires p" << i << " = "
          << p[i] << ", outside [0, 1]";
      throw infeasible_error(msg.str());
    }
    p[i] = std::clamp(p[i], 0.0, 1.0);
  }

  DispersionFreeResult out{NoiseModelI(p[0], p[1], p[2], p[3]), 0.0, false};
  out.fidelity =
      average_fidelity(chi_matrix(cf, out.channel, standard_strategy()));
  out.nonClassical = out.fidelity > 2.0 / 3.0;
  return out;
}

FormulaValues werner_formulas(double eps, const NoiseModelI& ch) {
  if (!(eps > 1.0 / 3.0 && eps <= 1.0))
    throw std::invalid_argument(
        "werner closed forms require 1/3 < eps <= 1");
  const double conc = (3.0 * eps - 1.0) / 2.0;
  const double f = (3.0 - eps + 4.0 * eps * ch.p[0]) / 6.0;
  const double spread =
      std::sqrt(std::pow(ch.p[1] - ch.p[2], 2) + std::pow(ch.p[1] - ch.p[3], 2) +
                std::pow(ch.p[2] - ch.p[3], 2));
  const double delta = (4.0 * conc + 2.0) / (9.0 * std::sqrt(10.0)) * spread;
  return {f, delta};
}

FormulaValues werner_formulas(double eps, const NoiseModelII& ch) {
  return werner_formulas(eps, to_model_i(ch));
}

FormulaValues pure_state_formulas(double a, const NoiseModelI& ch) {
  if (!(a > 0.0 && a <= 1.0))
    throw std::invalid_argument(
        "pure-state closed forms require 0 < a <= 1");
  const double ab = a * std::sqrt(std::max(0.0, 1.0 - a * a));
  const double p0 = ch.p[0], p1 = ch.p[1], p2 = ch.p[2], p3 = ch.p[3];
  const double f =
      2.0 / 3.0 * (1.0 + ab) -
      (p1 + p2 + 2.0 * ab * (p1 + p2 + 2.0 * p3)) / 3.0;
  const double u = p0 + p2 - p1 - p3;
  const double v = p0 + p1 - p2 - p3;
  const double w = p0 + p3 - p1 - p2;
  const double quad = u * u * 4.0 * ab * ab + v * v * 4.0 * ab * ab + w * w -
                      std::pow(u * 2.0 * ab + v * 2.0 * ab + w, 2) / 3.0;
  return {f, std::sqrt(std::max(0.0, quad) / 30.0)};
}

FormulaValues pure_state_formulas(double a, const NoiseModelII& ch) {
  if (!(a > 0.0 && a <= 1.0))
    throw std::invalid_argument(
        "pure-state closed forms require 0 < a <= 1");
  const double ab = a * std::sqrt(std::max(0.0, 1.0 - a * a));
  const double e = ch.eta, ep = ch.etaPrime;
  const double f = 2.0 / 3.0 * (1.0 + ab) -
                   (2.0 * ab * (2.0 - e - ep) + (e + ep - 2.0 * e * ep)) / 3.0;
  const double quad =
      16.0 * ab * ab * (e - ep) * (e - ep) +
      std::pow((2.0 * ep - 1.0) * (2.0 * ab - 2.0 * e + 1.0), 2) +
      std::pow((2.0 * e - 1.0) * (2.0 * ab - 2.0 * ep + 1.0), 2);
  return {f, std::sqrt(std::max(0.0, quad)) / (3.0 * std::sqrt(10.0))};
}

FidelityReport make_report(const CanonicalForm& cf, const NoiseModelI& ch,
                           const CorrectionStrategy& strat,
                           const std::string& strategyName) {
  const ChiMatrix chi = chi_matrix(cf, ch, strat);
  FidelityReport rep;
  rep.fidelity = average_fidelity(chi);
  rep.deviation = fidelity_deviation(chi);
  rep.nonClassical = rep.fidelity > 2.0 / 3.0;
  rep.dispersionFree = rep.deviation <= 1e-10;
  if (cf.detSign == DetSign::Negative)
    rep.fNoise = fnoise_model_i(axis_magnitudes(cf), ch);
  rep.strategyUsed = strategyName;
  return rep;
}

}  // namespace telenoise
