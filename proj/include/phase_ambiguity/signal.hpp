#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "phase_ambiguity/tolerances.hpp"

namespace phase_ambiguity {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// A finite signal x[0..N] with full support, identified with the Fourier
/// polynomial x̂(ω) = Σ x[n] ωⁿ (index 0 is the constant term).
class Signal {
 public:
  /// Throws PreconditionError unless the length is at least 2 and both end
  /// coefficients exceed `support_tol` times the largest magnitude.
  explicit Signal(ComplexVector coeffs, double support_tol = Tolerances{}.support);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const Complex& operator[](std::size_t n) const { return coeffs_[n]; }
  double max_abs() const noexcept;

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  ComplexVector coeffs_;
};

/// Autocorrelation coefficients c[-N..N] of a signal; equivalently the
/// trigonometric polynomial A(ω) = |x̂(ω)|² = Σ c[k] ωᵏ on the unit circle.
class IntensitySpectrum {
 public:
  /// `coeffs` lists c[-N], ..., c[N]. Hermitian symmetry must hold to
  /// `hermitian_tol` relative to c[0]; the stored copy is symmetrized exactly.
  explicit IntensitySpectrum(ComplexVector coeffs, double hermitian_tol = 1e-9);

  std::size_t degree() const noexcept { return (coeffs_.size() - 1) / 2; }
  /// c[k] for k in [-N, N].
  Complex at(std::ptrdiff_t k) const;
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  /// c[0], the squared norm of any signal with this spectrum.
  double energy() const noexcept { return coeffs_[degree()].real(); }

 private:
  ComplexVector coeffs_;
};

/// Representative of a signal modulo global phase: x[0] is real and positive.
class PhaseClassRep {
 public:
  /// Accepts `s` only if s[0] is already real and positive.
  static PhaseClassRep from_canonical(Signal s);

  const Signal& signal() const noexcept { return signal_; }

 private:
  explicit PhaseClassRep(Signal s) : signal_(std::move(s)) {}
  friend PhaseClassRep canonicalize_phase(const Signal& x);

  Signal signal_;
};

IntensitySpectrum intensity(const Signal& x);

/// A(e^{iθ}) = Σ c[k] e^{ikθ}. Throws InternalError if the imaginary part
/// exceeds `eval_tol` times c[0].
double evaluate_intensity(const IntensitySpectrum& s, double theta, double eval_tol = 1e-9);

/// ẋ[n] = conj(x[N-n]); its Fourier polynomial is the conjugate of x̂ on S¹.
Signal reflect_conjugate(const Signal& x);

PhaseClassRep canonicalize_phase(const Signal& x);

/// True iff `b` equals `a` or its reflect-conjugate modulo global phase,
/// within `tol` relative to max|a|. Lengths must agree.
bool trivial_equivalent(const Signal& a, const Signal& b, double tol);

/// Plain (non-conjugating) convolution: the Fourier polynomial of the result
/// is the product of the inputs' polynomials.
ComplexVector convolve(std::span<const Complex> x1, std::span<const Complex> x2);

/// max_k |c1[k] - c2[k]| <= tol * max_k |c1[k]|. Degrees must agree.
bool spectra_equal(const IntensitySpectrum& s1, const IntensitySpectrum& s2, double tol);

/// max_k |c1[k] - c2[k]| / max_k |c1[k]|.
double spectrum_distance(const IntensitySpectrum& s1, const IntensitySpectrum& s2);

/// max_n |a[n] - b[n]| / max_n |a[n]|, for equal-length vectors.
double relative_max_distance(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace phase_ambiguity
