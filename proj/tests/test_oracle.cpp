#include "telenoise/oracle.hpp"

#include <cmath>

#include "telenoise/fidelity.hpp"
#include "testers.hpp"

using namespace telenoise;

TEST_CASE("bell measurement on the worked pure state") {
  const TwoQubitState res = pure_state(std::sqrt(0.9));
  const InputQubit input({0.0, 0.0, 1.0});  // |0>
  const auto outcomes = bell_measure(res, input);
  const double expect[4] = {0.45, 0.45, 0.05, 0.05};
  double total = 0.0;
  for (int k = 0; k < 4; ++k) {
    CHECK_NEAR(outcomes[k].probability, expect[k], 1e-12);
    total += outcomes[k].probability;
  }
  CHECK_NEAR(total, 1.0, 1e-12);
  // phi0 and phi1 leave Bob in |0>, phi2 and phi3 in |1>.
  Eigen::Matrix2cd zero = Eigen::Matrix2cd::Zero();
  zero(0, 0) = 1.0;
  CHECK((outcomes[0].postState - zero).norm() < 1e-12);
  Eigen::Matrix2cd one = Eigen::Matrix2cd::Zero();
  one(1, 1) = 1.0;
  CHECK((outcomes[2].postState - one).norm() < 1e-12);
}

TEST_CASE("bell branches obey the closed conditional-state form") {
  auto g = testers::rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const TwoQubitState res = testers::random_density(g);
    const PauliDecomposition d = pauli_decompose(res);
    const Eigen::Vector3d a = testers::random_unit(g);
    const auto outcomes = bell_measure(res, InputQubit(a));
    double total = 0.0;
    for (int k = 0; k < 4; ++k) {
      const Eigen::Vector3d dk = bell_correlation_diag(k);
      const double prob = (1.0 + a.dot(dk.cwiseProduct(d.R))) / 4.0;
      const Eigen::Vector3d bloch =
          d.S + d.T.transpose() * dk.cwiseProduct(a);
      Eigen::Matrix2cd expect =
          (1.0 + a.dot(dk.cwiseProduct(d.R))) * Eigen::Matrix2cd::Identity();
      for (int i = 0; i < 3; ++i) expect += bloch(i) * pauli(i + 1);
      expect /= 8.0;

      CHECK_NEAR(outcomes[k].probability, prob, 1e-12);
      if (!outcomes[k].zeroProbability)
        CHECK((outcomes[k].probability * outcomes[k].postState - expect)
                  .norm() < 1e-12);
      total += outcomes[k].probability;

      // Conditional states are genuine densities.
      CHECK_NEAR(outcomes[k].postState.trace().real(), 1.0, 1e-12);
      const Eigen::Vector2d ev =
          Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(
              outcomes[k].postState)
              .eigenvalues();
      CHECK(ev(0) > -1e-12);
    }
    CHECK_NEAR(total, 1.0, 1e-12);
  }
}

TEST_CASE("probe-reconstructed quadratic equals the simulated fidelity") {
  auto g = testers::rng(62);
  for (int trial = 0; trial < 15; ++trial) {
    const TwoQubitState res = testers::random_density(g);
    const NoiseModelI ch = testers::random_channel(g);
    const CorrectionStrategy strat = testers::random_strategy(g);
    const QuadraticFidelity quad(res, ch, strat);
    for (int probe = 0; probe < 10; ++probe) {
      const Eigen::Vector3d a = testers::random_unit(g);
      CHECK_NEAR(quad(a), per_input_fidelity(res, ch, strat, InputQubit(a)),
                 1e-12);
    }
  }
}

TEST_CASE("linear probe term vanishes exactly for permutation rules") {
  auto g = testers::rng(63);
  // Non-bijective rule on a state with a Bob-side local vector: the linear
  // term survives and the plain spread formula would be wrong.
  const TwoQubitState tilted = tdiag_state({0.4, -0.3, 0.5}, {0, 0, 0},
                                           {0.1, 0.0, 0.2});
  const CorrectionStrategy collapsed{{0, 0, 0, 0}};
  CHECK(QuadraticFidelity(tilted, NoiseModelI(0.7, 0.1, 0.1, 0.1), collapsed)
            .l.norm() > 1e-3);

  for (int trial = 0; trial < 20; ++trial) {
    const TwoQubitState res = testers::random_density(g);
    const NoiseModelI ch = testers::random_channel(g);
    const QuadraticFidelity quad(res, ch,
                                 testers::random_permutation_strategy(g));
    CHECK(quad.l.norm() < 1e-12);
  }

  // Any rule works when Bob's local vector vanishes.
  const TwoQubitState flat = tdiag_state({0.4, -0.3, 0.5}, {0.2, -0.1, 0.0},
                                         {0, 0, 0});
  for (int trial = 0; trial < 10; ++trial) {
    const QuadraticFidelity quad(flat, testers::random_channel(g),
                                 testers::random_strategy(g));
    CHECK(quad.l.norm() < 1e-12);
  }
}

TEST_CASE("exact sphere average matches the closed-form engine") {
  auto g = testers::rng(64);
  for (int trial = 0; trial < 40; ++trial) {
    // Mean fidelity: any strategy, any state; the canonical image is what
    // the closed forms describe.
    const TwoQubitState st = testers::random_density(g);
    const CanonicalForm cf = canonicalize(st).form;
    const NoiseModelI ch = testers::random_channel(g);
    const CorrectionStrategy any = testers::random_strategy(g);
    const ExactAverage ea = exact_average(canonical_state(cf), ch, any);
    CHECK_NEAR(ea.fidelity, average_fidelity(cf, ch, any), 1e-12);

    // Spread: permutation rules keep the input-linear term off.
    const CorrectionStrategy perm = testers::random_permutation_strategy(g);
    const ExactAverage ep = exact_average(canonical_state(cf), ch, perm);
    CHECK_NEAR(ep.fidelity, average_fidelity(cf, ch, perm), 1e-12);
    CHECK_NEAR(ep.deviation, fidelity_deviation(cf, ch, perm), 1e-10);
  }

  // Arbitrary strategies also match the spread once s = 0.
  for (int trial = 0; trial < 20; ++trial) {
    const CanonicalForm cf = testers::random_bell_diagonal_form(g, false);
    const NoiseModelI ch = testers::random_channel(g);
    const CorrectionStrategy any = testers::random_strategy(g);
    const ExactAverage ea = exact_average(canonical_state(cf), ch, any);
    CHECK_NEAR(ea.fidelity, average_fidelity(cf, ch, any), 1e-12);
    CHECK_NEAR(ea.deviation, fidelity_deviation(cf, ch, any), 1e-10);
  }
}

TEST_CASE("haar sphere samples are uniform unit vectors") {
  auto g = testers::rng(65);
  const int n = 100000;
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  Eigen::Vector3d second = Eigen::Vector3d::Zero();
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d v = haar_bloch_sample(g);
    CHECK_NEAR(v.norm(), 1.0, 1e-12);
    mean += v;
    second += v.cwiseProduct(v);
  }
  mean /= n;
  second /= n;
  // Component std is about 1/sqrt(3n); allow five sigmas.
  const double tol = 5.0 / std::sqrt(3.0 * n);
  for (int i = 0; i < 3; ++i) {
    CHECK_NEAR(mean(i), 0.0, tol);
    CHECK_NEAR(second(i), 1.0 / 3.0, 5.0 * 0.3 / std::sqrt(double(n)));
  }
}

TEST_CASE("monte carlo average is deterministic and thread invariant") {
  const TwoQubitState res = pure_state(0.9);
  const NoiseModelI ch(0.6, 0.2, 0.15, 0.05);
  const CorrectionStrategy strat = standard_strategy();
  const std::uint64_t n = 60000;

  const RunStatistics one = haar_average(res, ch, strat, n, 42, 1);
  const RunStatistics four = haar_average(res, ch, strat, n, 42, 4);
  CHECK(one.meanF == four.meanF);
  CHECK(one.delta == four.delta);
  CHECK(one.stdError == four.stdError);
  CHECK(one.samples == n);

  const RunStatistics again = haar_average(res, ch, strat, n, 42, 2);
  CHECK(again.meanF == one.meanF);

  const RunStatistics other = haar_average(res, ch, strat, n, 43, 1);
  CHECK(other.meanF != one.meanF);
}

TEST_CASE("monte carlo converges to the exact average") {
  const TwoQubitState res = pure_state(0.9);
  const NoiseModelI ch(0.6, 0.2, 0.15, 0.05);
  const CorrectionStrategy strat = standard_strategy();
  const ExactAverage exact = exact_average(res, ch, strat);

  const RunStatistics mc = haar_average(res, ch, strat, 200000, 7, 0);
  CHECK_NEAR(mc.meanF, exact.fidelity, 5 * mc.stdError);
  CHECK_NEAR(mc.delta, exact.deviation, 0.01);

  // Standard error scales as n^{-1/2}: quadrupling n halves it.
  const RunStatistics small = haar_average(res, ch, strat, 32768, 7, 0);
  const RunStatistics big = haar_average(res, ch, strat, 4 * 32768, 7, 0);
  CHECK_NEAR(big.stdError / small.stdError, 0.5, 0.1);
}

TEST_CASE("full-sampling run agrees on the mean with extra spread") {
  const TwoQubitState res = pure_state(std::sqrt(0.9));
  const NoiseModelI ch(0.55, 0.2, 0.15, 0.1);
  const CorrectionStrategy strat = standard_strategy();
  const ExactAverage exact = exact_average(res, ch, strat);

  const RunStatistics mc = haar_average_sampled(res, ch, strat, 400000, 11);
  CHECK_NEAR(mc.meanF, exact.fidelity, 6 * mc.stdError);
  // Drawing outcome and channel transition adds variance on top of the
  // input-only spread.
  CHECK(mc.delta > exact.deviation);

  const RunStatistics rerun = haar_average_sampled(res, ch, strat, 400000, 11);
  CHECK(rerun.meanF == mc.meanF);
  CHECK(rerun.delta == mc.delta);
}
