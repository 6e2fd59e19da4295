#include "phase_ambiguity/incidence.hpp"

#include <algorithm>

#include "phase_ambiguity/errors.hpp"
#include "phase_ambiguity/polynomial.hpp"

namespace phase_ambiguity {

namespace {

void require_equi_intensity(const Signal& x, const Signal& xp, const Tolerances& tol) {
  if (x.size() != xp.size()) throw NotEquiIntensity("signals differ in length");
  const double d = spectrum_distance(intensity(x), intensity(xp));
  if (!(d <= tol.equivalence)) {
    throw NotEquiIntensity("signals do not share a Fourier intensity (relative gap " +
                           std::to_string(d) + ")");
  }
}

struct Classified {
  RootForm roots;
  PairClassification classification;
};

Classified classify_with_roots(const Signal& x, const Signal& xp, const Tolerances& tol) {
  require_equi_intensity(x, xp, tol);
  RootForm rx = to_root_form(x, tol);
  const RootForm rxp = to_root_form(xp, tol);
  const RootMatch match = match_roots(rx, rxp, tol.matching, tol.circle);

  PairClassification out;
  out.degenerate_roots = match.degenerate;
  FlipMask witness = match.mask;
  out.components.push_back(witness.popcount());
  out.witnesses.push_back(witness);
  for (const std::size_t i : match.degenerate) {
    witness = witness.with(i);
    out.components.push_back(witness.popcount());
    out.witnesses.push_back(witness);
  }
  return {std::move(rx), std::move(out)};
}

}  // namespace

PairClassification classify_pair(const Signal& x, const Signal& xp, const Tolerances& tol) {
  return classify_with_roots(x, xp, tol).classification;
}

std::pair<Signal, Signal> involution_partner(const Signal& x, const Signal& xp,
                                             const Tolerances& tol) {
  require_equi_intensity(x, xp, tol);
  return {x, reflect_conjugate(xp)};
}

ConvolutionCertificate convolution_factor(const Signal& x, const Signal& xp,
                                          const Tolerances& tol) {
  const auto [rx, cls] = classify_with_roots(x, xp, tol);
  const FlipMask mask = *std::min_element(
      cls.witnesses.begin(), cls.witnesses.end(),
      [](const FlipMask& a, const FlipMask& b) { return a.bits() < b.bits(); });

  ComplexVector kept;
  ComplexVector flipped;
  for (std::size_t i = 0; i < rx.degree(); ++i) {
    (mask.contains(i) ? flipped : kept).push_back(rx.roots()[i]);
  }

  ConvolutionCertificate cert;
  cert.k = mask.popcount();
  cert.mask = mask;
  cert.x1 = expand_roots(rx.leading(), kept);
  cert.x2 = expand_roots(1.0, flipped);
  cert.residual_x = relative_max_distance(x.coeffs(), convolve(cert.x1, cert.x2));

  ComplexVector x2_dot(cert.x2.rbegin(), cert.x2.rend());
  for (auto& z : x2_dot) z = std::conj(z);
  const Signal rebuilt(convolve(cert.x1, x2_dot), 0.0);
  cert.residual_xprime = relative_max_distance(canonicalize_phase(xp).signal().coeffs(),
                                               canonicalize_phase(rebuilt).signal().coeffs());
  return cert;
}

}  // namespace phase_ambiguity
