#pragma once

#include <cstdint>
#include <random>

#include "phase_ambiguity/signal.hpp"

namespace phase_ambiguity {

/// Engine seeded from (seed, stream) so that parallel trials draw
/// independent, schedule-independent streams.
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream = 0);

/// Standard complex Gaussian (independent N(0, 1/2) parts).
Complex complex_normal(std::mt19937_64& rng);

/// Signal of degree n built from n random roots with log-modulus uniform in
/// [-log 4, log 4] but at least 0.05 away from the unit circle, uniform
/// argument, and a random leading coefficient of modulus in [0.5, 2].
Signal random_generic_signal(std::mt19937_64& rng, std::size_t n);

}  // namespace phase_ambiguity
