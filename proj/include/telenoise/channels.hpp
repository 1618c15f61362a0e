#pragma once

#include <cstdint>
#include <random>
#include <utility>

namespace telenoise {

// Classical two-bit channel acting on Alice's measurement record. The four
// error patterns are: 0 = identity, 1 = first bit flipped, 2 = second bit
// flipped, 3 = both bits flipped. Probabilities must sum to 1 within 1e-12
// and are then renormalized exactly; small negatives (>= -1e-12) clamp to 0.
struct NoiseModelI {
  double p[4];

  NoiseModelI(double p0, double p1, double p2, double p3);
};

// Two independent binary symmetric channels, one per bit. eta (first bit)
// and etaPrime (second bit) are the no-flip probabilities, each in [1/2, 1].
struct NoiseModelII {
  double eta;
  double etaPrime;

  NoiseModelII(double eta_, double etaPrime_);
};

// Shannon information carried across the joint channel,
// 2 + sum_i p_i log2 p_i, in [0, 2] bits (0 log 0 = 0).
double mutual_information(const NoiseModelI& ch);

// Per-bit informations (1 - H(eta), 1 - H(etaPrime)), each in [0, 1] bits.
std::pair<double, double> mutual_information(const NoiseModelII& ch);

// Independent per-bit flips compose to the product distribution
// (eta eta', (1-eta) eta', eta (1-eta'), (1-eta)(1-eta')).
NoiseModelI to_model_i(const NoiseModelII& ch);

// Sends a two-bit message (bit 1 = first/MSB, bit 0 = second) through the
// channel and returns the corrupted message.
int sample_transition(const NoiseModelI& ch, int sent, std::mt19937_64& rng);

// Deterministic per-stream generator: one 64-bit seed expands to independent
// streams by index, so results never depend on how work is partitioned.
std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream);

}  // namespace telenoise
