#include "telenoise/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace telenoise {

namespace {

// Error pattern -> two-bit mask (bit 1 flips the first bit).
constexpr int kErrorMask[4] = {0b00, 0b10, 0b01, 0b11};

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

NoiseModelI::NoiseModelI(double p0, double p1, double p2, double p3)
    : p{p0, p1, p2, p3} {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (p[i] < -1e-12) {
      std::ostringstream msg;
      msg << "channel probability p" << i << " = " << p[i] << " is negative";
      throw std::invalid_argument(msg.str());
    }
    p[i] = std::max(p[i], 0.0);
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "channel probabilities sum to " << sum << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
  for (double& v : p) v /= sum;
}

NoiseModelII::NoiseModelII(double eta_, double etaPrime_)
    : eta(eta_), etaPrime(etaPrime_) {
  for (double* v : {&eta, &etaPrime}) {
    if (*v < 0.5 - 1e-12 || *v > 1.0 + 1e-12) {
      std::ostringstream msg;
      msg << "per-bit reliability " << *v << " outside [1/2, 1]";
      throw std::invalid_argument(msg.str());
    }
    *v = std::clamp(*v, 0.5, 1.0);
  }
}

double mutual_information(const NoiseModelI& ch) {
  double info = 2.0;
  for (double v : ch.p) info += xlog2x(v);
  return std::clamp(info, 0.0, 2.0);
}

std::pair<double, double> mutual_information(const NoiseModelII& ch) {
  const auto bit_info = [](double eta) {
    return std::clamp(1.0 + xlog2x(eta) + xlog2x(1.0 - eta), 0.0, 1.0);
  };
  return {bit_info(ch.eta), bit_info(ch.etaPrime)};
}

NoiseModelI to_model_i(const NoiseModelII& ch) {
  const double e = ch.eta, f = ch.etaPrime;
  return NoiseModelI(e * f, (1.0 - e) * f, e * (1.0 - f),
                     (1.0 - e) * (1.0 - f));
}

int sample_transition(const NoiseModelI& ch, int sent, std::mt19937_64& rng) {
  if (sent < 0 || sent > 3)
    throw std::invalid_argument("message must be a two-bit value");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  double acc = 0.0;
  int pattern = 3;
  for (int i = 0; i < 4; ++i) {
    acc += ch.p[i];
    if (u < acc) {
      pattern = i;
      break;
    }
  }
  return sent ^ kErrorMask[pattern];
}

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 step; decorrelates nearby (seed, stream) pairs.
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return std::mt19937_64(x);
}

}  // namespace telenoise
