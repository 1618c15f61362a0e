#include "telenoise/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace telenoise {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::Vector3d;
using std::complex;

constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;

Matrix2cd make_pauli(int i) {
  const complex<double> I(0.0, 1.0);
  Matrix2cd m;
  switch (i) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -I, I, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli index must be 0..3");
  }
  return m;
}

}  // namespace

const Matrix2cd& pauli(int i) {
  static const Matrix2cd table[4] = {make_pauli(0), make_pauli(1),
                                     make_pauli(2), make_pauli(3)};
  if (i < 0 || i > 3) throw std::invalid_argument("pauli index must be 0..3");
  return table[i];
}

Matrix4cd pauli_kron(int i, int j) {
  Matrix4cd out;
  const Matrix2cd& a = pauli(i);
  const Matrix2cd& b = pauli(j);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
  return out;
}

TwoQubitState TwoQubitState::from_matrix(const Matrix4cd& rho) {
  const double asym = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermTol) {
    std::ostringstream msg;
    msg << "density matrix not Hermitian: max asymmetry " << asym;
    throw std::invalid_argument(msg.str());
  }
  Matrix4cd sym = 0.5 * (rho + rho.adjoint());

  const double tr = sym.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg << "density matrix trace " << tr << " differs from 1";
    throw std::invalid_argument(msg.str());
  }

  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(sym, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  if (lo < -kPsdTol) {
    std::ostringstream msg;
    msg << "density matrix not positive semidefinite: min eigenvalue " << lo;
    throw std::invalid_argument(msg.str());
  }
  return TwoQubitState(std::move(sym));
}

InputQubit::InputQubit(const Vector3d& a) {
  const double n = a.norm();
  if (std::abs(n - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "input Bloch vector norm " << n << " differs from 1";
    throw std::invalid_argument(msg.str());
  }
  a_ = a / n;
}

Matrix2cd InputQubit::density() const {
  Matrix2cd m = Matrix2cd::Identity();
  for (int i = 0; i < 3; ++i) m += a_(i) * pauli(i + 1);
  return 0.5 * m;
}

PauliDecomposition pauli_decompose(const TwoQubitState& state) {
  const Matrix4cd& rho = state.matrix();
  PauliDecomposition d;
  for (int i = 1; i <= 3; ++i) {
    d.R(i - 1) = (rho * pauli_kron(i, 0)).trace().real();
    d.S(i - 1) = (rho * pauli_kron(0, i)).trace().real();
    for (int j = 1; j <= 3; ++j)
      d.T(i - 1, j - 1) = (rho * pauli_kron(i, j)).trace().real();
  }
  return d;
}

TwoQubitState reconstruct(const PauliDecomposition& d) {
  Matrix4cd rho = Matrix4cd::Identity();
  for (int i = 1; i <= 3; ++i) {
    rho += d.R(i - 1) * pauli_kron(i, 0);
    rho += d.S(i - 1) * pauli_kron(0, i);
    for (int j = 1; j <= 3; ++j) rho += d.T(i - 1, j - 1) * pauli_kron(i, j);
  }
  return TwoQubitState::from_matrix(0.25 * rho);
}

double concurrence(const TwoQubitState& state) {
  const Matrix4cd& rho = state.matrix();
  const Matrix4cd yy = pauli_kron(2, 2);
  const Matrix4cd rt = rho * yy * rho.conjugate() * yy;
  // rho * rho-tilde has real, nonnegative spectrum.
  Eigen::ComplexEigenSolver<Matrix4cd> es(rt, false);
  std::array<double, 4> lam;
  for (int i = 0; i < 4; ++i)
    lam[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
  std::sort(lam.begin(), lam.end(), std::greater<double>());
  const double c = lam[0] - lam[1] - lam[2] - lam[3];
  return std::clamp(c, 0.0, 1.0);
}

Eigen::Vector4cd bell_vector(int k) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (k) {
    case 0: v(0) = s; v(3) = s; break;
    case 1: v(0) = s; v(3) = -s; break;
    case 2: v(1) = s; v(2) = s; break;
    case 3: v(1) = s; v(2) = -s; break;
    default: throw std::invalid_argument("bell index must be 0..3");
  }
  return v;
}

TwoQubitState bell_state() { return pure_state(1.0 / std::sqrt(2.0)); }

TwoQubitState pure_state(double a) {
  if (!(a > 0.0 && a <= 1.0))
    throw std::invalid_argument("pure-state amplitude must satisfy 0 < a <= 1");
  const double b = std::sqrt(std::max(0.0, 1.0 - a * a));
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(0) = a;
  psi(3) = b;
  return TwoQubitState::from_matrix(psi * psi.adjoint());
}

TwoQubitState werner_state(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw std::invalid_argument("werner mixing parameter must be in [0, 1]");
  const Eigen::Vector4cd phi = bell_vector(0);
  const Matrix4cd rho =
      eps * (phi * phi.adjoint()) + (1.0 - eps) * 0.25 * Matrix4cd::Identity();
  return TwoQubitState::from_matrix(rho);
}

TwoQubitState tdiag_state(const Vector3d& t, const Vector3d& r,
                          const Vector3d& s) {
  PauliDecomposition d;
  d.R = r;
  d.S = s;
  d.T = t.asDiagonal();
  return reconstruct(d);
}

}  // namespace telenoise
