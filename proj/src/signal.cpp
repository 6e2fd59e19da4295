#include "phase_ambiguity/signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phase_ambiguity/errors.hpp"

namespace phase_ambiguity {

namespace {

double max_abs_of(std::span<const Complex> v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

Signal::Signal(ComplexVector coeffs, double support_tol) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    throw PreconditionError("signal needs at least two coefficients, got " +
                            std::to_string(coeffs_.size()));
  }
  for (const auto& z : coeffs_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw PreconditionError("signal has a non-finite coefficient");
    }
  }
  const double threshold = support_tol * max_abs_of(coeffs_);
  if (!(std::abs(coeffs_.front()) > threshold) || !(std::abs(coeffs_.back()) > threshold)) {
    throw PreconditionError("signal lacks full support (first or last coefficient vanishes)");
  }
}

double Signal::max_abs() const noexcept { return max_abs_of(coeffs_); }

IntensitySpectrum::IntensitySpectrum(ComplexVector coeffs, double hermitian_tol)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 3 || coeffs_.size() % 2 == 0) {
    throw PreconditionError("spectrum must list 2N+1 coefficients with N >= 1");
  }
  const std::size_t n = degree();
  const double c0 = coeffs_[n].real();
  if (!(c0 > 0.0) || !std::isfinite(c0)) {
    throw PreconditionError("spectrum c[0] must be real and strictly positive");
  }
  if (std::abs(coeffs_[n].imag()) > hermitian_tol * c0) {
    throw PreconditionError("spectrum c[0] has a non-zero imaginary part");
  }
  coeffs_[n] = c0;
  for (std::size_t k = 1; k <= n; ++k) {
    const Complex pos = coeffs_[n + k];
    const Complex neg = coeffs_[n - k];
    if (std::abs(neg - std::conj(pos)) > hermitian_tol * c0) {
      throw PreconditionError("spectrum is not Hermitian at lag " + std::to_string(k));
    }
    const Complex sym = 0.5 * (pos + std::conj(neg));
    coeffs_[n + k] = sym;
    coeffs_[n - k] = std::conj(sym);
  }
}

Complex IntensitySpectrum::at(std::ptrdiff_t k) const {
  const auto n = static_cast<std::ptrdiff_t>(degree());
  if (k < -n || k > n) throw PreconditionError("spectrum lag out of range");
  return coeffs_[static_cast<std::size_t>(k + n)];
}

PhaseClassRep PhaseClassRep::from_canonical(Signal s) {
  if (s[0].imag() != 0.0 || !(s[0].real() > 0.0)) {
    throw PreconditionError("phase class representative needs a positive real first coefficient");
  }
  return PhaseClassRep(std::move(s));
}

IntensitySpectrum intensity(const Signal& x) {
  const std::size_t n = x.degree();
  ComplexVector c(2 * n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t m = 0; m + k <= n; ++m) acc += x[m + k] * std::conj(x[m]);
    c[n + k] = acc;
    c[n - k] = std::conj(acc);
  }
  c[n] = c[n].real();
  return IntensitySpectrum(std::move(c));
}

double evaluate_intensity(const IntensitySpectrum& s, double theta, double eval_tol) {
  const auto n = static_cast<std::ptrdiff_t>(s.degree());
  Complex acc{0.0, 0.0};
  for (std::ptrdiff_t k = -n; k <= n; ++k) {
    acc += s.at(k) * std::polar(1.0, static_cast<double>(k) * theta);
  }
  if (std::abs(acc.imag()) > eval_tol * s.energy()) {
    throw InternalError("intensity evaluation is not real; spectrum is corrupted");
  }
  return acc.real();
}

Signal reflect_conjugate(const Signal& x) {
  const auto c = x.coeffs();
  ComplexVector out(c.size());
  std::transform(c.rbegin(), c.rend(), out.begin(), [](Complex z) { return std::conj(z); });
  return Signal(std::move(out), 0.0);
}

PhaseClassRep canonicalize_phase(const Signal& x) {
  const double r = std::abs(x[0]);
  const Complex unit = std::conj(x[0]) / r;
  ComplexVector out(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) out[n] = unit * x[n];
  out[0] = r;
  return PhaseClassRep(Signal(std::move(out), 0.0));
}

double relative_max_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw PreconditionError("vectors differ in length");
  double diff = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) diff = std::max(diff, std::abs(a[n] - b[n]));
  const double scale = max_abs_of(a);
  return scale > 0.0 ? diff / scale : diff;
}

bool trivial_equivalent(const Signal& a, const Signal& b, double tol) {
  if (a.size() != b.size()) throw PreconditionError("trivial_equivalent: length mismatch");
  const auto cb = canonicalize_phase(b);
  const auto ca = canonicalize_phase(a);
  if (relative_max_distance(ca.signal().coeffs(), cb.signal().coeffs()) <= tol) return true;
  const auto cr = canonicalize_phase(reflect_conjugate(a));
  return relative_max_distance(cr.signal().coeffs(), cb.signal().coeffs()) <= tol;
}

ComplexVector convolve(std::span<const Complex> x1, std::span<const Complex> x2) {
  if (x1.empty() || x2.empty()) throw PreconditionError("convolve: empty input");
  ComplexVector z(x1.size() + x2.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < x1.size(); ++i) {
    for (std::size_t j = 0; j < x2.size(); ++j) z[i + j] += x1[i] * x2[j];
  }
  return z;
}

double spectrum_distance(const IntensitySpectrum& s1, const IntensitySpectrum& s2) {
  if (s1.degree() != s2.degree()) throw PreconditionError("spectra differ in degree");
  return relative_max_distance(s1.coeffs(), s2.coeffs());
}

bool spectra_equal(const IntensitySpectrum& s1, const IntensitySpectrum& s2, double tol) {
  return spectrum_distance(s1, s2) <= tol;
}

}  // namespace phase_ambiguity
