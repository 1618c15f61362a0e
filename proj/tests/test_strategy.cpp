#include "telenoise/strategy.hpp"

#include "telenoise/fidelity.hpp"
#include "testers.hpp"

using namespace telenoise;

TEST_CASE("outcome message encoding and its inverse") {
  const int msg[4] = {0b00, 0b11, 0b01, 0b10};
  for (int k = 0; k < 4; ++k) {
    CHECK(outcome_message(k) == msg[k]);
    CHECK(message_outcome(outcome_message(k)) == k);
  }
  for (int m = 0; m < 4; ++m) CHECK(outcome_message(message_outcome(m)) == m);
}

TEST_CASE("shifted_outcome is the error-pattern involution") {
  for (int j = 0; j < 4; ++j) CHECK(shifted_outcome(j, 0) == j);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(shifted_outcome(shifted_outcome(j, i), i) == j);
  // Pattern 1 flips the first message bit: outcome 0 (message 00) lands in
  // the slot announcing 10, which decodes to outcome 3.
  CHECK(shifted_outcome(0, 1) == 3);
  CHECK(shifted_outcome(2, 2) == 0);
  CHECK(shifted_outcome(1, 3) == 0);
}

TEST_CASE("bell correlation diagonals match the measured states") {
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  for (int k = 0; k < 4; ++k) {
    const Eigen::Matrix4cd proj = bell_vector(k) * bell_vector(k).adjoint();
    const PauliDecomposition d =
        pauli_decompose(TwoQubitState::from_matrix(proj));
    const Eigen::Vector3d diag = bell_correlation_diag(k);
    CHECK((d.T - diag.asDiagonal().toDenseMatrix()).norm() < 1e-14);
    sum += diag;
  }
  CHECK(sum.norm() < 1e-15);  // the four diagonals cancel
}

TEST_CASE("pauli_rotation is the SO(3) image of conjugation") {
  auto g = testers::rng(31);
  for (int m = 0; m < 4; ++m) {
    const Eigen::Matrix3d& R = pauli_rotation(m);
    CHECK((R.diagonal() - pauli_rotation_diag(m)).norm() < 1e-15);
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::Vector3d a = testers::random_unit(g);
      Eigen::Matrix2cd adotsig = Eigen::Matrix2cd::Zero();
      for (int i = 0; i < 3; ++i) adotsig += a(i) * pauli(i + 1);
      const Eigen::Matrix2cd conj = pauli(m) * adotsig * pauli(m).adjoint();
      const Eigen::Vector3d ra = R * a;
      Eigen::Matrix2cd expect = Eigen::Matrix2cd::Zero();
      for (int i = 0; i < 3; ++i) expect += ra(i) * pauli(i + 1);
      CHECK((conj - expect).norm() < 1e-14);
    }
  }
  Eigen::Vector3d dsum = Eigen::Vector3d::Zero();
  for (int m = 0; m < 4; ++m) dsum += pauli_rotation_diag(m);
  CHECK(dsum.norm() < 1e-15);
}

TEST_CASE("regime tables carry the four correction rules") {
  const auto& tables = regime_tables();
  CHECK(tables[0] == standard_strategy());
  CHECK(tables[0].pauli == std::array<int, 4>{2, 1, 3, 0});
  CHECK(tables[1].pauli == std::array<int, 4>{0, 3, 1, 2});
  CHECK(tables[2].pauli == std::array<int, 4>{3, 0, 2, 1});
  CHECK(tables[3].pauli == std::array<int, 4>{1, 2, 0, 3});

  // Rule d undoes a deterministic pattern-d channel completely: the fidelity
  // equals the noiseless standard-rule fidelity.
  auto g = testers::rng(32);
  for (int d = 0; d < 4; ++d) {
    double p[4] = {0, 0, 0, 0};
    p[d] = 1.0;
    const NoiseModelI det(p[0], p[1], p[2], p[3]);
    const NoiseModelI clean(1, 0, 0, 0);
    for (int trial = 0; trial < 10; ++trial) {
      const Eigen::Vector3d axis =
          testers::random_negative_form(g, false).axis_correlation();
      CHECK_NEAR(strategy_fidelity(axis, det, tables[d]),
                 strategy_fidelity(axis, clean, standard_strategy()), 1e-14);
    }
  }
}

TEST_CASE("regime_strategy picks the dominant pattern, first on ties") {
  CHECK(regime_strategy(NoiseModelI(0.1, 0.2, 0.6, 0.1)) ==
        regime_tables()[2]);
  CHECK(regime_strategy(NoiseModelI(0.4, 0.4, 0.1, 0.1)) ==
        regime_tables()[0]);
  CHECK(regime_strategy(NoiseModelI(0.1, 0.4, 0.4, 0.1)) ==
        regime_tables()[1]);
}

TEST_CASE("slot coefficients are the shifted channel averages") {
  auto g = testers::rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Vector3d axis =
        testers::random_negative_form(g, false).axis_correlation();
    const NoiseModelI ch = testers::random_channel(g);
    const auto M = slot_coefficients(axis, ch);
    for (int j = 0; j < 4; ++j) {
      Eigen::Vector3d expect = Eigen::Vector3d::Zero();
      for (int i = 0; i < 4; ++i)
        expect += ch.p[i] * bell_correlation_diag(shifted_outcome(j, i));
      expect = axis.cwiseProduct(expect);  // T^T is the diagonal itself
      CHECK((M[j] - expect).norm() < 1e-14);
    }
  }
}

TEST_CASE("strategy_fidelity equals rotation_fidelity at Pauli rotations") {
  auto g = testers::rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Vector3d axis =
        testers::random_negative_form(g, false).axis_correlation();
    const NoiseModelI ch = testers::random_channel(g);
    const CorrectionStrategy strat = testers::random_strategy(g);
    std::array<Eigen::Matrix3d, 4> rots;
    for (int j = 0; j < 4; ++j) rots[j] = pauli_rotation(strat.pauli[j]);
    CHECK_NEAR(strategy_fidelity(axis, ch, strat),
               rotation_fidelity(axis, ch, rots), 1e-14);
  }
}

TEST_CASE("noiseless channel: teleportation is perfect only for Bell") {
  const NoiseModelI clean(1, 0, 0, 0);
  const Eigen::Vector3d bell(-1, -1, -1);
  CHECK_NEAR(strategy_fidelity(bell, clean, standard_strategy()), 1.0, 1e-15);
  const Eigen::Vector3d weaker(-0.6, -0.6, -1.0);
  CHECK(strategy_fidelity(weaker, clean, standard_strategy()) < 1.0);
}

TEST_CASE("exhaustive search indexes base-4 digit strings and maximizes") {
  auto g = testers::rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    const CanonicalForm cf = testers::random_negative_form(g, false);
    const NoiseModelI ch = testers::random_channel(g);
    const StrategySearch res = search_all_strategies(cf, ch);
    const Eigen::Vector3d axis = cf.axis_correlation();

    double best = -1.0;
    int bestIdx = -1;
    for (int idx = 0; idx < 256; ++idx) {
      const CorrectionStrategy s{
          {idx / 64, (idx / 16) % 4, (idx / 4) % 4, idx % 4}};
      const double f = strategy_fidelity(axis, ch, s);
      CHECK_NEAR(res.values[idx], f, 1e-14);
      if (f > best) {
        best = f;
        bestIdx = idx;
      }
    }
    CHECK_NEAR(res.bestFidelity, best, 1e-14);
    const int gotIdx = res.best.pauli[0] * 64 + res.best.pauli[1] * 16 +
                       res.best.pauli[2] * 4 + res.best.pauli[3];
    CHECK(res.values[gotIdx] == res.bestFidelity);
    CHECK(gotIdx == bestIdx);  // lexicographically first maximizer
  }

  // Noiseless: the standard rule is the unique optimum.
  const StrategySearch clean = search_all_strategies(
      make_canonical_form({1.0, 0.6, 0.6}, DetSign::Negative),
      NoiseModelI(1, 0, 0, 0));
  CHECK(clean.best == standard_strategy());
}

TEST_CASE("sampled continuous corrections never beat the regime rule") {
  auto g = testers::rng(36);
  for (int trial = 0; trial < 3; ++trial) {
    const CanonicalForm cf = testers::random_negative_form(g, false);
    const NoiseModelI ch = testers::random_dominant_channel(
        g, static_cast<int>(g() % 4));
    const RotationCheck res = random_rotation_check(cf, ch, 4000, 77 + trial);
    CHECK_NEAR(res.reference, regime_fidelity(cf, ch), 1e-15);
    CHECK(res.margin >= -1e-9);
    CHECK(res.bestSampled <= res.reference + 1e-9);
  }
}

TEST_CASE("euler rotation triple composes the advertised product") {
  const RotationTriple t{0.3, -1.1, 0.7};
  const Eigen::Matrix3d rz1 =
      Eigen::AngleAxisd(t.phi, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  const Eigen::Matrix3d rx =
      Eigen::AngleAxisd(t.theta, Eigen::Vector3d::UnitX()).toRotationMatrix();
  const Eigen::Matrix3d rz2 =
      Eigen::AngleAxisd(t.psi, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  CHECK((t.matrix() - rz1 * rx * rz2).norm() < 1e-14);
}
