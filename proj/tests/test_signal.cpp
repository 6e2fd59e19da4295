#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "phase_ambiguity/errors.hpp"
#include "phase_ambiguity/sampling.hpp"
#include "phase_ambiguity/signal.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace phase_ambiguity;
using test_support::I;
using test_support::max_abs_diff;

TEST_SUITE("signal_core") {
  TEST_CASE("signal rejects short or unsupported coefficient vectors") {
    CHECK_THROWS_AS(Signal({1.0}), PreconditionError);
    CHECK_THROWS_AS(Signal({0.0, 1.0}), PreconditionError);
    CHECK_THROWS_AS(Signal({1.0, 2.0, 0.0}), PreconditionError);
    CHECK_THROWS_AS(Signal({1.0, std::nan("")}), PreconditionError);
    CHECK_NOTHROW(Signal({1.0, 0.0, 0.0, 1.0}));
  }

  TEST_CASE("intensity of the real example matches the published coefficients") {
    const Signal x({4.5, -9.0, -0.5, 1.0});
    const auto s = intensity(x);
    REQUIRE(s.degree() == 3);
    CHECK(std::abs(s.at(3) - 4.5) < 1e-12);
    CHECK(std::abs(s.at(2) - (-45.0 / 4)) < 1e-12);
    CHECK(std::abs(s.at(1) - (-73.0 / 2)) < 1e-12);
    // 81 + 20.25 + 0.25 + 1
    CHECK(std::abs(s.at(0) - 205.0 / 2) < 1e-12);
    for (int k = 1; k <= 3; ++k) CHECK(s.at(-k) == std::conj(s.at(k)));
  }

  TEST_CASE("intensity of the mixed example") {
    const auto s = intensity(test_support::golden_x());
    const Complex expected[] = {205.0 / 2, 91.0 / 2, 45.0 / 4, 9.0 / 2};
    for (int k = 0; k <= 3; ++k) {
      CHECK(std::abs(s.at(k) - expected[k]) < 1e-12);
      CHECK(std::abs(s.at(-k) - expected[k]) < 1e-12);
    }
  }

  TEST_CASE("two-spike signal has a two-spike autocorrelation") {
    for (std::size_t n = 1; n <= 6; ++n) {
      ComplexVector v(n + 1, 0.0);
      v.front() = v.back() = 1.0;
      const auto s = intensity(Signal(v));
      for (std::ptrdiff_t k = -static_cast<std::ptrdiff_t>(n); k <= static_cast<std::ptrdiff_t>(n); ++k) {
        const double expected = k == 0 ? 2.0 : (std::abs(k) == static_cast<std::ptrdiff_t>(n) ? 1.0 : 0.0);
        CHECK(std::abs(s.at(k) - expected) < 1e-15);
      }
    }
  }

  TEST_CASE("evaluate_intensity") {
    const auto s = intensity(test_support::golden_x());
    // |x̂(1)|² = (4.5 + 9 + 0.5 + 1)²
    CHECK(evaluate_intensity(s, 0.0) == doctest::Approx(225.0).epsilon(1e-14));
    CHECK(std::abs(evaluate_intensity(intensity(Signal({1.0, 1.0})), std::numbers::pi)) < 1e-12);

    // (ω - e^{0.7i})(ω + 2) has a unit-circle root at θ = 0.7.
    const Complex r = std::polar(1.0, 0.7);
    const Signal x({-2.0 * r, 2.0 - r, 1.0});
    CHECK(std::abs(evaluate_intensity(intensity(x), 0.7)) < 1e-12);
  }

  TEST_CASE("evaluate_intensity agrees with |x̂|² and is nonnegative") {
    auto rng = make_engine(11);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (int trial = 0; trial < 20; ++trial) {
      ComplexVector v(2 + trial % 7);
      for (auto& z : v) z = complex_normal(rng);
      const Signal x(v);
      const auto s = intensity(x);
      for (int k = 0; k < 1000; ++k) {
        const double theta = angle(rng);
        const double value = evaluate_intensity(s, theta);
        CHECK(value >= -1e-9 * s.energy());
        if (k % 100 == 0) {
          CHECK(value == doctest::Approx(oracle::intensity_at(v, theta)).epsilon(1e-10).scale(s.energy()));
        }
      }
    }
  }

  TEST_CASE("corrupted spectrum is rejected or reported") {
    CHECK_THROWS_AS(IntensitySpectrum({1.0, 2.0, 3.0}), PreconditionError);
    CHECK_THROWS_AS(IntensitySpectrum({1.0, -1.0, 1.0}), PreconditionError);
    CHECK_THROWS_AS(IntensitySpectrum({1.0, 2.0}), PreconditionError);
    CHECK_NOTHROW(IntensitySpectrum({Complex(1, 1), 3.0, Complex(1, -1)}));
  }

  TEST_CASE("reflect_conjugate") {
    const Signal xd = reflect_conjugate(test_support::golden_x());
    // Flipping every root {3i, -3i, -1/2} gives 4.5(ω - i/3)(ω + i/3)(ω + 2).
    const auto expected = oracle::vieta_by_subsets(4.5, {I / 3.0, -I / 3.0, -2.0});
    CHECK(max_abs_diff(xd.coeffs(), expected) < 1e-12);
    CHECK(max_abs_diff(xd.coeffs(), ComplexVector{1.0, 0.5, 9.0, 4.5}) == 0.0);

    const Signal palindrome({1.0, 2.0, 1.0});
    CHECK(reflect_conjugate(palindrome) == palindrome);

    const Signal z({Complex(1, 2), Complex(-3, 0.5), Complex(0.25, -1)});
    CHECK(reflect_conjugate(reflect_conjugate(z)) == z);
  }

  TEST_CASE("canonicalize_phase") {
    const auto a = canonicalize_phase(Signal({2.0 * I, Complex(4.0)}));
    CHECK(max_abs_diff(a.signal().coeffs(), ComplexVector{2.0, -4.0 * I}) < 1e-15);

    const Signal already({3.0, Complex(1, 1)});
    CHECK(canonicalize_phase(already).signal() == already);

    auto rng = make_engine(5);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (int trial = 0; trial < 50; ++trial) {
      ComplexVector v(4);
      for (auto& z : v) z = complex_normal(rng);
      const Signal x(v);
      const Complex unit = std::polar(1.0, angle(rng));
      ComplexVector rotated(v);
      for (auto& z : rotated) z *= unit;
      const auto c1 = canonicalize_phase(x);
      const auto c2 = canonicalize_phase(Signal(rotated));
      CHECK(max_abs_diff(c1.signal().coeffs(), c2.signal().coeffs()) < 1e-12 * x.max_abs());
      CHECK(canonicalize_phase(c1.signal()).signal() == c1.signal());
      CHECK(c1.signal()[0].imag() == 0.0);
      CHECK(c1.signal()[0].real() > 0.0);
    }
    CHECK_THROWS_AS(PhaseClassRep::from_canonical(Signal({-1.0, 1.0})), PreconditionError);
  }

  TEST_CASE("trivial_equivalent on the worked example") {
    const Signal x = test_support::golden_x();
    CHECK(trivial_equivalent(x, Signal({1.0, 0.5, 9.0, 4.5}), 1e-12));
    CHECK_FALSE(trivial_equivalent(x, Signal({1.5, Complex(3, 4), Complex(1.5, 8), 3.0}), 1e-8));
    const Complex unit = std::polar(1.0, 2.1);
    ComplexVector rotated(x.coeffs().begin(), x.coeffs().end());
    for (auto& z : rotated) z *= unit;
    CHECK(trivial_equivalent(x, Signal(rotated), 1e-12));
    CHECK_THROWS_AS(trivial_equivalent(x, Signal({1.0, 1.0}), 1e-8), PreconditionError);
  }

  TEST_CASE("trivial_equivalent behaves as an equivalence relation") {
    auto rng = make_engine(17);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    auto rotate = [&](const Signal& s) {
      const Complex unit = std::polar(1.0, angle(rng));
      ComplexVector v(s.coeffs().begin(), s.coeffs().end());
      for (auto& z : v) z *= unit;
      return Signal(v);
    };
    for (int trial = 0; trial < 40; ++trial) {
      const Signal a = random_generic_signal(rng, 2 + trial % 6);
      const Signal b = rotate(reflect_conjugate(a));
      const Signal c = rotate(reflect_conjugate(b));
      const Signal other = random_generic_signal(rng, a.degree());
      CHECK(trivial_equivalent(a, a, 1e-12));
      CHECK(trivial_equivalent(a, b, 1e-10));
      CHECK(trivial_equivalent(b, a, 1e-10));
      CHECK(trivial_equivalent(b, c, 1e-10));
      CHECK(trivial_equivalent(a, c, 1e-10));
      CHECK(trivial_equivalent(a, other, 1e-8) == trivial_equivalent(other, a, 1e-8));
    }
  }

  TEST_CASE("convolve") {
    CHECK(max_abs_diff(convolve(ComplexVector{1.0, -3.0 * I}, ComplexVector{1.0, 3.0 * I}),
                       ComplexVector{1.0, 0.0, 9.0}) < 1e-15);
    const Signal x = test_support::golden_x();
    CHECK(convolve(x.coeffs(), ComplexVector{1.0}) == ComplexVector(x.coeffs().begin(), x.coeffs().end()));
    // (ω² + 9)(ω + 1/2)
    CHECK(max_abs_diff(convolve(ComplexVector{9.0, 0.0, 1.0}, ComplexVector{0.5, 1.0}), x.coeffs()) < 1e-15);
    CHECK_THROWS_AS(convolve(ComplexVector{}, ComplexVector{1.0}), PreconditionError);
  }

  TEST_CASE("convolve multiplies Fourier polynomials and is bilinear") {
    auto rng = make_engine(23);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (int trial = 0; trial < 30; ++trial) {
      ComplexVector a(1 + trial % 5), b(1 + trial % 4), c(b.size());
      for (auto& z : a) z = complex_normal(rng);
      for (auto& z : b) z = complex_normal(rng);
      for (auto& z : c) z = complex_normal(rng);
      const ComplexVector ab = convolve(a, b);
      for (int k = 0; k < 16; ++k) {
        const Complex w = std::polar(1.0, angle(rng));
        const Complex expected = oracle::eval(a, w) * oracle::eval(b, w);
        CHECK(std::abs(oracle::eval(ab, w) - expected) <= 1e-10 * std::max(1.0, std::abs(expected)));
      }
      const Complex alpha = complex_normal(rng);
      ComplexVector combo(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) combo[i] = alpha * b[i] + c[i];
      const ComplexVector lhs = convolve(a, combo);
      const ComplexVector ac = convolve(a, c);
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        CHECK(std::abs(lhs[i] - (alpha * ab[i] + ac[i])) < 1e-12);
      }
    }
  }

  TEST_CASE("spectra_equal") {
    const Signal x = test_support::golden_x();
    const Signal x3({1.5, Complex(3, 4), Complex(1.5, 8), 3.0});
    CHECK(spectra_equal(intensity(x), intensity(x3), 1e-12));
    CHECK_FALSE(spectra_equal(intensity(x), intensity(Signal({9.0, 18.0, 1.0, 2.0})), 1e-8));
    CHECK_THROWS_AS(spectra_equal(intensity(x), intensity(Signal({1.0, 1.0})), 1e-8), PreconditionError);
  }

  TEST_CASE("trivial ambiguities preserve the spectrum exactly") {
    auto rng = make_engine(29);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (int trial = 0; trial < 100; ++trial) {
      ComplexVector v(2 + trial % 9);
      for (auto& z : v) z = complex_normal(rng);
      const Signal x(v);
      const auto s = intensity(x);
      for (std::ptrdiff_t k = 1; k <= static_cast<std::ptrdiff_t>(x.degree()); ++k) {
        CHECK(s.at(-k) == std::conj(s.at(k)));
      }
      const Complex unit = std::polar(1.0, angle(rng));
      ComplexVector rotated(v);
      for (auto& z : rotated) z *= unit;
      CHECK(spectra_equal(s, intensity(Signal(rotated)), 1e-10));
      CHECK(spectra_equal(s, intensity(reflect_conjugate(x)), 1e-10));
      CHECK(spectra_equal(s, intensity(reflect_conjugate(Signal(rotated))), 1e-10));
    }
  }
}
