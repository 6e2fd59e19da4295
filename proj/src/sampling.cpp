#include "phase_ambiguity/sampling.hpp"

#include <cmath>
#include <numbers>

#include "phase_ambiguity/polynomial.hpp"

namespace phase_ambiguity {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

Complex complex_normal(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  const double re = gauss(rng);
  const double im = gauss(rng);
  return {re, im};
}

Signal random_generic_signal(std::mt19937_64& rng, std::size_t n) {
  constexpr double kMinGap = 0.05;
  const double max_log = std::log(4.0);
  std::uniform_real_distribution<double> magnitude(kMinGap, max_log);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::bernoulli_distribution outside(0.5);
  std::uniform_real_distribution<double> lead_mod(0.5, 2.0);

  ComplexVector roots(n);
  for (auto& r : roots) {
    const double log_mod = magnitude(rng);
    const double sign = outside(rng) ? 1.0 : -1.0;
    const double theta = angle(rng);
    r = std::polar(std::exp(sign * log_mod), theta);
  }
  const double lm = lead_mod(rng);
  const double lt = angle(rng);
  const Complex leading = std::polar(lm, lt);
  return Signal(expand_roots(leading, roots), 0.0);
}

}  // namespace phase_ambiguity
