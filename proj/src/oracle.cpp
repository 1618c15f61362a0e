#include "telenoise/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace telenoise {

namespace {

constexpr double kZeroProb = 1e-14;

// input x resource on three qubits, basis index i*4 + a*2 + b for
// (input, Alice, Bob).
Eigen::MatrixXcd three_qubit_state(const TwoQubitState& resource,
                                   const InputQubit& input) {
  const Eigen::Matrix2cd psi = input.density();
  const Eigen::Matrix4cd& res = resource.matrix();
  Eigen::MatrixXcd m(8, 8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m.block<4, 4>(4 * i, 4 * j) = psi(i, j) * res;
  return m;
}

// Unnormalized Bob states s_k * rho_k: project (input, Alice) onto Bell
// state k and trace those qubits out.
std::array<Eigen::Matrix2cd, 4> unnormalized_outcomes(
    const Eigen::MatrixXcd& m) {
  std::array<Eigen::Matrix2cd, 4> out;
  Eigen::MatrixXcd proj(8, 8);
  for (int k = 0; k < 4; ++k) {
    const Eigen::Vector4cd phi = bell_vector(k);
    Eigen::MatrixXcd p8 = Eigen::MatrixXcd::Zero(8, 8);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const std::complex<double> v = phi(r) * std::conj(phi(c));
        p8(2 * r, 2 * c) = v;
        p8(2 * r + 1, 2 * c + 1) = v;
      }
    proj = p8 * m * p8;
    Eigen::Matrix2cd b = Eigen::Matrix2cd::Zero();
    for (int bb = 0; bb < 2; ++bb)
      for (int bp = 0; bp < 2; ++bp)
        for (int ia = 0; ia < 4; ++ia)
          b(bb, bp) += proj(2 * ia + bb, 2 * ia + bp);
    out[k] = b;
  }
  return out;
}

double state_overlap(const Eigen::Matrix2cd& psi, const Eigen::Matrix2cd& rho) {
  return (psi * rho).trace().real();
}

Eigen::Matrix2cd corrected(const Eigen::Matrix2cd& rho, int pauliIndex) {
  const Eigen::Matrix2cd v = pauli(pauliIndex);
  return v * rho * v.adjoint();
}

double uniform_pm1(std::mt19937_64& rng) {
  return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
}

struct BlockSums {
  double sumF = 0.0;
  double sumF2 = 0.0;
};

RunStatistics reduce_blocks(const std::vector<BlockSums>& blocks,
                            std::uint64_t n) {
  double sumF = 0.0, sumF2 = 0.0;
  for (const BlockSums& b : blocks) {
    sumF += b.sumF;
    sumF2 += b.sumF2;
  }
  RunStatistics st;
  st.samples = n;
  st.meanF = sumF / static_cast<double>(n);
  const double var = std::max(0.0, sumF2 / static_cast<double>(n) -
                                       st.meanF * st.meanF);
  st.delta = std::sqrt(var);
  st.stdError =
      n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
  return st;
}

}  // namespace

std::array<ProtocolOutcome, 4> bell_measure(const TwoQubitState& resource,
                                            const InputQubit& input) {
  const auto raw = unnormalized_outcomes(three_qubit_state(resource, input));
  std::array<ProtocolOutcome, 4> out;
  for (int k = 0; k < 4; ++k) {
    const double s = raw[k].trace().real();
    out[k].probability = s;
    out[k].zeroProbability = s <= kZeroProb;
    out[k].postState = out[k].zeroProbability
                           ? Eigen::Matrix2cd(0.5 * Eigen::Matrix2cd::Identity())
                           : Eigen::Matrix2cd(raw[k] / s);
  }
  return out;
}

double per_input_fidelity(const TwoQubitState& resource, const NoiseModelI& ch,
                          const CorrectionStrategy& strat,
                          const InputQubit& input) {
  const auto raw = unnormalized_outcomes(three_qubit_state(resource, input));
  const Eigen::Matrix2cd psi = input.density();
  double f = 0.0;
  for (int k = 0; k < 4; ++k) {
    // Unnormalized branch keeps s_k = 0 outcomes harmless.
    for (int i = 0; i < 4; ++i) {
      const int slot = shifted_outcome(k, i);
      f += ch.p[i] * state_overlap(psi, corrected(raw[k], strat.pauli[slot]));
    }
  }
  return f;
}

QuadraticFidelity::QuadraticFidelity(const TwoQubitState& resource,
                                     const NoiseModelI& ch,
                                     const CorrectionStrategy& strat) {
  const auto probe = [&](const Eigen::Vector3d& a) {
    return per_input_fidelity(resource, ch, strat, InputQubit(a));
  };
  Eigen::Vector3d h;
  for (int i = 0; i < 3; ++i) {
    const Eigen::Vector3d e = Eigen::Vector3d::Unit(i);
    const double fp = probe(e);
    const double fm = probe(-e);
    l(i) = 0.5 * (fp - fm);
    h(i) = 0.5 * (fp + fm);
  }
  c = h(2);  // gauge Q(2,2) = 0: a on the sphere leaves tr Q shifts free
  Q.setZero();
  Q(0, 0) = h(0) - c;
  Q(1, 1) = h(1) - c;
  const double isq = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Eigen::Vector3d u =
          isq * (Eigen::Vector3d::Unit(i) + Eigen::Vector3d::Unit(j));
      const Eigen::Vector3d v =
          isq * (Eigen::Vector3d::Unit(i) - Eigen::Vector3d::Unit(j));
      const double q = 0.5 * (probe(u) - probe(v) - std::sqrt(2.0) * l(j));
      Q(i, j) = q;
      Q(j, i) = q;
    }
}

double QuadraticFidelity::operator()(const Eigen::Vector3d& a) const {
  return c + l.dot(a) + a.dot(Q * a);
}

double QuadraticFidelity::haar_mean() const { return c + Q.trace() / 3.0; }

double QuadraticFidelity::haar_second_moment() const {
  const double trQ = Q.trace();
  const double trQ2 = (Q * Q).trace();
  return c * c + 2.0 * c * trQ / 3.0 + l.squaredNorm() / 3.0 +
         (trQ * trQ + 2.0 * trQ2) / 15.0;
}

ExactAverage exact_average(const TwoQubitState& resource, const NoiseModelI& ch,
                           const CorrectionStrategy& strat) {
  const QuadraticFidelity q(resource, ch, strat);
  ExactAverage avg;
  avg.fidelity = q.haar_mean();
  // Sphere variance of c + l.a + a^T Q a, grouped so the constant part never
  // enters: |l|^2/3 + (2/45) sum_{i<j} (mu_i - mu_j)^2 over the eigenvalues
  // of the symmetric part. The naive second-moment difference loses the
  // whole answer to cancellation when the quadratic is nearly isotropic.
  const Eigen::Matrix3d sym = 0.5 * (q.Q + q.Q.transpose());
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(
      sym, Eigen::EigenvaluesOnly);
  const Eigen::Vector3d mu = es.eigenvalues();
  const double spread = (mu(0) - mu(1)) * (mu(0) - mu(1)) +
                        (mu(1) - mu(2)) * (mu(1) - mu(2)) +
                        (mu(2) - mu(0)) * (mu(2) - mu(0));
  avg.deviation = std::sqrt(q.l.squaredNorm() / 3.0 + 2.0 * spread / 45.0);
  return avg;
}

Eigen::Vector3d haar_bloch_sample(std::mt19937_64& rng) {
  // Direction of a uniform point in the ball; fully specified from raw
  // 64-bit draws so runs are reproducible across standard libraries.
  for (;;) {
    Eigen::Vector3d v(uniform_pm1(rng), uniform_pm1(rng), uniform_pm1(rng));
    const double n2 = v.squaredNorm();
    if (n2 <= 1.0 && n2 > 1e-16) return v / std::sqrt(n2);
  }
}

RunStatistics haar_average(const TwoQubitState& resource, const NoiseModelI& ch,
                           const CorrectionStrategy& strat, std::uint64_t n,
                           std::uint64_t seed, int threads) {
  if (n == 0) return {0.0, 0.0, 0.0, 0};
  const QuadraticFidelity quad(resource, ch, strat);
  constexpr std::uint64_t kBlock = 8192;
  const std::uint64_t nBlocks = (n + kBlock - 1) / kBlock;
  std::vector<BlockSums> blocks(nBlocks);

  const auto runBlock = [&](std::uint64_t b) {
    std::mt19937_64 rng = stream_rng(seed, b);
    const std::uint64_t count = std::min(kBlock, n - b * kBlock);
    BlockSums sums;
    for (std::uint64_t s = 0; s < count; ++s) {
      const double f = quad(haar_bloch_sample(rng));
      sums.sumF += f;
      sums.sumF2 += f * f;
    }
    blocks[b] = sums;
  };

  int nThreads = threads;
  if (nThreads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    nThreads = static_cast<int>(std::min<unsigned>(4, std::max(1u, hw)));
  }
  nThreads = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(nThreads), nBlocks));

  if (nThreads <= 1) {
    for (std::uint64_t b = 0; b < nBlocks; ++b) runBlock(b);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nThreads));
    for (int t = 0; t < nThreads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          const std::uint64_t b = next.fetch_add(1);
          if (b >= nBlocks) return;
          runBlock(b);
        }
      });
    for (std::thread& t : pool) t.join();
  }
  return reduce_blocks(blocks, n);
}

RunStatistics haar_average_sampled(const TwoQubitState& resource,
                                   const NoiseModelI& ch,
                                   const CorrectionStrategy& strat,
                                   std::uint64_t n, std::uint64_t seed) {
  if (n == 0) return {0.0, 0.0, 0.0, 0};
  constexpr std::uint64_t kBlock = 8192;
  const std::uint64_t nBlocks = (n + kBlock - 1) / kBlock;
  std::vector<BlockSums> blocks(nBlocks);
  for (std::uint64_t b = 0; b < nBlocks; ++b) {
    std::mt19937_64 rng = stream_rng(seed, b);
    const std::uint64_t count = std::min(kBlock, n - b * kBlock);
    BlockSums sums;
    for (std::uint64_t s = 0; s < count; ++s) {
      const Eigen::Vector3d a = haar_bloch_sample(rng);
      const InputQubit input(a);
      const auto raw =
          unnormalized_outcomes(three_qubit_state(resource, input));
      double probs[4];
      double total = 0.0;
      for (int k = 0; k < 4; ++k) {
        probs[k] = std::max(0.0, raw[k].trace().real());
        total += probs[k];
      }
      const double u = (rng() >> 11) * 0x1.0p-53 * total;
      int k = 3;
      double acc = 0.0;
      for (int j = 0; j < 4; ++j) {
        acc += probs[j];
        if (u < acc) {
          k = j;
          break;
        }
      }
      while (probs[k] <= kZeroProb) --k;  // fp guard; never taken in theory
      const int msg = sample_transition(ch, outcome_message(k), rng);
      const int slot = message_outcome(msg);
      const Eigen::Matrix2cd rho = raw[k] / probs[k];
      const double f =
          state_overlap(input.density(), corrected(rho, strat.pauli[slot]));
      sums.sumF += f;
      sums.sumF2 += f * f;
    }
    blocks[b] = sums;
  }
  return reduce_blocks(blocks, n);
}

}  // namespace telenoise
