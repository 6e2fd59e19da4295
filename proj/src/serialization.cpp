#include "phase_ambiguity/serialization.hpp"

#include <string>

#include "phase_ambiguity/errors.hpp"

namespace phase_ambiguity::json_io {

// Adding 0.0 turns -0.0 into +0.0 so equal values print identically.
Json encode(Complex z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

Json encode_coeffs(std::span<const Complex> v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(encode(z));
  return out;
}

Json encode(const Signal& x) { return Json{{"signal", encode_coeffs(x.coeffs())}}; }

Json encode(const IntensitySpectrum& s) {
  return Json{{"degree", s.degree()}, {"coeffs", encode_coeffs(s.coeffs())}};
}

Json encode(const RootForm& r) {
  return Json{{"leading", encode(r.leading())}, {"roots", encode_coeffs(r.roots())}};
}

Json encode(const CandidateSet& set) {
  Json classes = Json::array();
  for (const auto& c : set.classes) {
    classes.push_back(Json{{"mask_members", c.mask_members},
                           {"rep", encode(set.representative(c).signal())}});
  }
  return Json{{"source", encode(set.source)},
              {"candidate_count", set.candidates.size()},
              {"distinct_count", set.distinct_count},
              {"classes", std::move(classes)}};
}

Json encode(const RootPairing& p) {
  Json pairs = Json::array();
  for (const auto& pr : p.pairs) {
    pairs.push_back(Json{{"inside", encode(pr.inside)}, {"outside", encode(pr.outside)}});
  }
  return Json{{"pairs", std::move(pairs)}, {"scale", p.scale}, {"degenerate", p.degenerate}};
}

Json encode(const PairClassification& c) {
  Json masks = Json::array();
  for (const auto& m : c.witnesses) masks.push_back(m.bits());
  return Json{{"components", c.components},
              {"masks", std::move(masks)},
              {"degenerate_roots", c.degenerate_roots}};
}

Json encode(const ConvolutionCertificate& c) {
  return Json{{"k", c.k},
              {"mask", c.mask.bits()},
              {"x1", Json{{"signal", encode_coeffs(c.x1)}}},
              {"x2", Json{{"signal", encode_coeffs(c.x2)}}},
              {"residuals", Json::array({c.residual_x, c.residual_xprime})}};
}

namespace {

Json encode_tuple(const SignalTuple& t) {
  Json out = Json::array();
  for (const auto& s : t) out.push_back(encode_coeffs(s.coeffs()));
  return out;
}

}  // namespace

Json encode(const WitnessReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violating_pairs) {
    violations.push_back(Json{{"masks", v.masks}, {"candidate", encode_tuple(v.candidate)}});
  }
  return Json{{"conclusion", r.conclusion == WitnessConclusion::WitnessHolds ? "WitnessHolds"
                                                                              : "WitnessFails"},
              {"mode", mode_name(r.mode)},
              {"total_pairs_checked", r.total_pairs_checked},
              {"violation_count", r.violating_pairs.size()},
              {"witness", encode_tuple(r.witness)},
              {"violating_pairs", std::move(violations)}};
}

Json encode(const UniquenessReport& r) {
  Json failing = Json::array();
  for (const auto& f : r.failing) failing.push_back(Json{{"trial", f.trial}, {"report", encode(f.report)}});
  return Json{{"trials", r.trials},
              {"failures", r.failures},
              {"failure_fraction", r.failure_fraction},
              {"failing", std::move(failing)}};
}

Complex decode_complex(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw PreconditionError("expected a complex number [re, im], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector decode_coeffs(const Json& j) {
  if (!j.is_array()) throw PreconditionError("expected an array of complex numbers");
  ComplexVector out;
  out.reserve(j.size());
  for (const auto& z : j) out.push_back(decode_complex(z));
  return out;
}

Signal decode_signal(const Json& j, double support_tol) {
  if (j.is_object()) {
    if (!j.contains("signal")) throw PreconditionError("expected an object with a \"signal\" field");
    return Signal(decode_coeffs(j.at("signal")), support_tol);
  }
  return Signal(decode_coeffs(j), support_tol);
}

IntensitySpectrum decode_spectrum(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs")) {
    throw PreconditionError("expected an object with \"degree\" and \"coeffs\" fields");
  }
  IntensitySpectrum s(decode_coeffs(j.at("coeffs")));
  if (j.contains("degree") && j.at("degree").get<std::size_t>() != s.degree()) {
    throw PreconditionError("spectrum degree disagrees with its coefficient count");
  }
  return s;
}

RootForm decode_root_form(const Json& j) {
  if (!j.is_object() || !j.contains("leading") || !j.contains("roots")) {
    throw PreconditionError("expected an object with \"leading\" and \"roots\" fields");
  }
  return RootForm(decode_complex(j.at("leading")), decode_coeffs(j.at("roots")));
}

std::string_view mode_name(WitnessMode m) {
  return m == WitnessMode::ModGlobalPhase ? "mod_global_phase" : "mod_trivial";
}

WitnessMode decode_mode(std::string_view name) {
  if (name == "mod_global_phase") return WitnessMode::ModGlobalPhase;
  if (name == "mod_trivial") return WitnessMode::ModTrivial;
  throw PreconditionError("unknown witness mode '" + std::string(name) + "'");
}

}  // namespace phase_ambiguity::json_io
