#include "telenoise/canonical.hpp"

#include <cmath>
#include <stdexcept>

namespace telenoise {

namespace {

using Eigen::Matrix3d;
using Eigen::Vector3d;

constexpr double kDetZeroTol = 1e-12;

void check_sorted(const Vector3d& tmag) {
  if (tmag(0) < -1e-15 || tmag(1) < -1e-15 || tmag(2) < -1e-15)
    throw std::invalid_argument("correlation magnitudes must be nonnegative");
  if (tmag(0) + 1e-12 < tmag(1) || tmag(1) + 1e-12 < tmag(2))
    throw std::invalid_argument(
        "correlation magnitudes must be sorted descending");
}

}  // namespace

DetSign classify_det(double detT) {
  if (std::abs(detT) < kDetZeroTol) return DetSign::Zero;
  return detT > 0.0 ? DetSign::Positive : DetSign::Negative;
}

Vector3d lambda_signs(DetSign detSign, const Vector3d& tmagDesc) {
  check_sorted(tmagDesc);
  if (detSign == DetSign::Positive) return {-1.0, -1.0, 1.0};
  return {-1.0, -1.0, -1.0};
}

CanonicalizeResult canonicalize(const PauliDecomposition& d) {
  Eigen::JacobiSVD<Matrix3d> svd(d.T,
                                 Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vector3d sigma = svd.singularValues();  // descending
  Matrix3d U = svd.matrixU();
  Matrix3d V = svd.matrixV();

  // Absorb improper factors into the third column so both sides are proper.
  const double dU = U.determinant() > 0 ? 1.0 : -1.0;
  const double dV = V.determinant() > 0 ? 1.0 : -1.0;
  U.col(2) *= dU;
  V.col(2) *= dV;

  CanonicalForm cf;
  cf.tmag = sigma;
  cf.detSign = classify_det(d.T.determinant());
  cf.lambda = lambda_signs(cf.detSign, cf.tmag);

  // U^T T V = diag(sigma1, sigma2, dU dV sigma3). For det <= 0 reverse the
  // axes so the magnitudes ascend; then flip signs to reach the canonical
  // pattern. Both the permutation and the flips stay proper on each side.
  const bool reverse = cf.detSign != DetSign::Positive;
  Matrix3d P = Matrix3d::Identity();
  Vector3d base(sigma(0), sigma(1), dU * dV * sigma(2));
  Vector3d sA(1.0, 1.0, 1.0);
  if (reverse) {
    P.setZero();
    P(0, 2) = P(1, 1) = P(2, 0) = 1.0;
    base.reverseInPlace();
    sA(0) = -1.0;  // det P = -1, so one sign on the A side restores +1
  }
  const Vector3d target = cf.axis_correlation();

  Vector3d flip;
  int undefined = -1;
  double definedProduct = 1.0;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(base(i)) < 1e-300) {
      flip(i) = 1.0;
      undefined = i;
    } else {
      flip(i) = target(i) * base(i) > 0 ? 1.0 : -1.0;
      definedProduct *= flip(i);
    }
  }
  // The flips must multiply to +1 to keep both sides proper; a zero slot
  // (only the smallest magnitude can vanish) absorbs any leftover sign.
  if (undefined >= 0) flip(undefined) = definedProduct;
  if (flip(0) * flip(1) * flip(2) < 0.0) {
    // Reachable only in the det-zero class, where the smallest magnitude is
    // below tolerance and its sign carries no weight.
    flip(0) = -flip(0);
  }

  const Matrix3d SA = sA.asDiagonal();
  const Matrix3d SB = Vector3d(sA(0) * flip(0), sA(1) * flip(1),
                               sA(2) * flip(2)).asDiagonal();

  LocalRotations rot;
  rot.OA = SA * P * U.transpose();
  rot.OB = SB * P * V.transpose();

  cf.r = rot.OA * d.R;
  cf.s = rot.OB * d.S;
  return {cf, rot};
}

CanonicalizeResult canonicalize(const TwoQubitState& state) {
  return canonicalize(pauli_decompose(state));
}

CanonicalForm make_canonical_form(const Vector3d& tmagDesc, DetSign detSign,
                                  const Vector3d& r, const Vector3d& s) {
  check_sorted(tmagDesc);
  CanonicalForm cf;
  cf.tmag = tmagDesc;
  cf.detSign = detSign;
  cf.lambda = lambda_signs(detSign, tmagDesc);
  cf.r = r;
  cf.s = s;
  return cf;
}

TwoQubitState canonical_state(const CanonicalForm& cf) {
  PauliDecomposition d;
  d.R = cf.r;
  d.S = cf.s;
  d.T = cf.axis_correlation().asDiagonal();
  return reconstruct(d);
}

}  // namespace telenoise
