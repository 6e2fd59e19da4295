#pragma once

#include <json.hpp>

#include "phase_ambiguity/ambiguity_enum.hpp"
#include "phase_ambiguity/constraint_uniqueness.hpp"
#include "phase_ambiguity/incidence.hpp"
#include "phase_ambiguity/root_cover.hpp"
#include "phase_ambiguity/signal.hpp"

// JSON encodings. A complex number is [re, im]; every decoder throws
// PreconditionError on malformed input.
namespace phase_ambiguity::json_io {

using Json = nlohmann::ordered_json;

Json encode(Complex z);
Json encode_coeffs(std::span<const Complex> v);
/// {"signal": [[re, im], ...]}
Json encode(const Signal& x);
/// {"degree": N, "coeffs": [c[-N], ..., c[N]]}
Json encode(const IntensitySpectrum& s);
/// {"leading": [re, im], "roots": [...]}
Json encode(const RootForm& r);
/// {"source": spectrum, "classes": [{"mask_members": [...], "rep": signal}], ...}
Json encode(const CandidateSet& set);
Json encode(const RootPairing& p);
Json encode(const PairClassification& c);
/// {"k", "mask", "x1": signal, "x2": signal, "residuals": [r1, r2]}
Json encode(const ConvolutionCertificate& c);
Json encode(const WitnessReport& r);
Json encode(const UniquenessReport& r);

Complex decode_complex(const Json& j);
ComplexVector decode_coeffs(const Json& j);
/// Accepts {"signal": [...]} or a bare coefficient array.
Signal decode_signal(const Json& j, double support_tol = Tolerances{}.support);
IntensitySpectrum decode_spectrum(const Json& j);
RootForm decode_root_form(const Json& j);

std::string_view mode_name(WitnessMode m);
WitnessMode decode_mode(std::string_view name);

}  // namespace phase_ambiguity::json_io
