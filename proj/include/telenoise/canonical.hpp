#pragma once

#include <Eigen/Dense>

#include "telenoise/qstate.hpp"

namespace telenoise {

enum class DetSign { Negative, Zero, Positive };

// Local-rotation normal form of a two-qubit state: proper rotations O_A, O_B
// diagonalize the correlation matrix with fixed signs. tmag holds the
// singular values of T sorted descending; lambda holds the sign attached to
// each tmag slot (all -1 unless det T > 0, where the smallest-magnitude slot
// carries +1). axis_correlation() returns the diagonal actually placed on
// the axes, which is the orientation all closed-form expressions use. For
// det T <= 0 the magnitudes ascend (axis 3 carries the largest, matching the
// a|00>+b|11> family whose strongest correlation is t_33); for det T > 0
// they descend, so the +1 sign sits on axis 3.
struct CanonicalForm {
  Eigen::Vector3d tmag;
  Eigen::Vector3d lambda;
  DetSign detSign;
  Eigen::Vector3d r;  // rotated Alice Bloch vector, O_A R
  Eigen::Vector3d s;  // rotated Bob Bloch vector, O_B S

  Eigen::Vector3d axis_correlation() const {
    if (detSign == DetSign::Positive)
      return {lambda(0) * tmag(0), lambda(1) * tmag(1), lambda(2) * tmag(2)};
    return {lambda(2) * tmag(2), lambda(1) * tmag(1), lambda(0) * tmag(0)};
  }
};

// Proper rotations with O_A T O_B^T = diag(axis_correlation), det = +1 each.
struct LocalRotations {
  Eigen::Matrix3d OA;
  Eigen::Matrix3d OB;
};

struct CanonicalizeResult {
  CanonicalForm form;
  LocalRotations rotations;
};

// Sign pattern for a given determinant class: all -1 for det <= 0, and
// (-1, -1, +1) for det > 0 with +1 on the smallest-magnitude slot.
// tmagDesc must be sorted descending and nonnegative.
Eigen::Vector3d lambda_signs(DetSign detSign, const Eigen::Vector3d& tmagDesc);

// |det T| < 1e-12 counts as zero.
DetSign classify_det(double detT);

CanonicalizeResult canonicalize(const PauliDecomposition& d);
CanonicalizeResult canonicalize(const TwoQubitState& state);

// Canonical form assembled directly from its data; validates ordering and
// sign rule. Intended for synthetic inputs (r = s = 0 unless supplied).
CanonicalForm make_canonical_form(const Eigen::Vector3d& tmagDesc,
                                  DetSign detSign,
                                  const Eigen::Vector3d& r = Eigen::Vector3d::Zero(),
                                  const Eigen::Vector3d& s = Eigen::Vector3d::Zero());

// Density matrix of the canonical state itself (local-unitary image of the
// original state).
TwoQubitState canonical_state(const CanonicalForm& cf);

}  // namespace telenoise
