#include "phase_ambiguity/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "phase_ambiguity/ambiguity_enum.hpp"
#include "phase_ambiguity/constraint_uniqueness.hpp"
#include "phase_ambiguity/errors.hpp"
#include "phase_ambiguity/incidence.hpp"
#include "phase_ambiguity/parallel.hpp"
#include "phase_ambiguity/root_cover.hpp"
#include "phase_ambiguity/serialization.hpp"

namespace phase_ambiguity::cli {

namespace {

using json_io::Json;

struct CliConfig {
  Tolerances tol;
  std::uint64_t seed = 0;
  int json_indent = 2;
  std::string output;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") return Json::parse(in);
    std::ifstream file(path);
    if (!file) throw PreconditionError("cannot open input file '" + path + "'");
    return Json::parse(file);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("malformed JSON input: ") + e.what());
  }
}

bool looks_like_spectrum(const Json& j) { return j.is_object() && j.contains("coeffs"); }

IntensitySpectrum spectrum_or_signal(const Json& j, const Tolerances& tol) {
  if (looks_like_spectrum(j)) return json_io::decode_spectrum(j);
  return intensity(json_io::decode_signal(j, tol.support));
}

SignalTuple decode_tuple(const Json& j, const Tolerances& tol) {
  if (j.is_object() && j.contains("tuple")) {
    SignalTuple out;
    for (const auto& s : j.at("tuple")) out.push_back(json_io::decode_signal(s, tol.support));
    return out;
  }
  return {json_io::decode_signal(j, tol.support)};
}

struct ParsedConstraint {
  std::string name;
  std::optional<double> a;
  std::optional<std::size_t> L;
};

ParsedConstraint parse_constraint(const std::string& text) {
  ParsedConstraint pc;
  const auto colon = text.find(':');
  pc.name = text.substr(0, colon);
  const std::string params = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto value_of = [&](const std::string& key) -> std::optional<std::string> {
    const std::string prefix = key + "=";
    if (params.rfind(prefix, 0) != 0) return std::nullopt;
    return params.substr(prefix.size());
  };
  if (pc.name == "none") {
    if (!params.empty()) throw UsageError("constraint 'none' takes no parameters");
  } else if (pc.name == "fixed-last-modulus") {
    const auto v = value_of("a");
    if (!v) throw UsageError("expected fixed-last-modulus:a=<float>");
    try {
      std::size_t used = 0;
      pc.a = std::stod(*v, &used);
      if (used != v->size()) throw std::invalid_argument(*v);
    } catch (const std::exception&) {
      throw UsageError("cannot parse a in '" + text + "'");
    }
    if (!(*pc.a > 0.0)) throw UsageError("fixed-last-modulus needs a > 0");
  } else if (pc.name == "stft") {
    const auto v = value_of("L");
    std::size_t L = 0;
    if (!v || std::from_chars(v->data(), v->data() + v->size(), L).ec != std::errc{} || L == 0) {
      throw UsageError("expected stft:L=<positive int>");
    }
    pc.L = L;
  } else {
    throw UsageError("unknown constraint '" + text + "'");
  }
  return pc;
}

ConstraintSystem make_constraint(const ParsedConstraint& pc, std::size_t length) {
  if (pc.name == "none") return unconstrained(length);
  if (pc.name == "fixed-last-modulus") return fixed_last_modulus_constraint(*pc.a, length);
  return stft_constraint(*pc.L);
}

void emit_error(std::ostream& err, std::string_view code, std::string_view detail) {
  err << Json{{"error", code}, {"detail", detail}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CliConfig cfg;
  if (const char* env = std::getenv("PHASE_AMBIGUITY_THREADS")) {
    std::size_t threads = 0;
    const std::string_view v(env);
    if (std::from_chars(v.data(), v.data() + v.size(), threads).ec == std::errc{}) {
      set_thread_limit(threads);
    }
  }

  CLI::App app{"Enumerate, classify and certify the ambiguities of 1-D Fourier phase retrieval.\n"
               "Inputs and outputs are JSON; '-' or an omitted path reads stdin.",
               "phase-ambiguity"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--tol-support", cfg.tol.support, "Relative threshold for full support")->capture_default_str();
  app.add_option("--tol-residual", cfg.tol.residual, "Backward error accepted for a computed root")->capture_default_str();
  app.add_option("--tol-circle", cfg.tol.circle, "||beta|-1| at or below which a root is on the unit circle")->capture_default_str();
  app.add_option("--tol-matching", cfg.tol.matching, "Relative tolerance for matching root multisets")->capture_default_str();
  app.add_option("--tol-pairing", cfg.tol.pairing, "Relative tolerance for reciprocal-conjugate root pairs")->capture_default_str();
  app.add_option("--tol-dedup", cfg.tol.dedup, "Distance below which candidates coincide")->capture_default_str();
  app.add_option("--tol-predicate", cfg.tol.predicate, "Relative slack for constraint predicates")->capture_default_str();
  app.add_option("--tol-equivalence", cfg.tol.equivalence, "Tolerance for spectra and trivial-ambiguity comparisons")->capture_default_str();
  app.add_option("--max-n", cfg.tol.max_n, "Largest degree enumerated (at most 24)")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sampling subcommands")->capture_default_str();
  app.add_option("--json-indent", cfg.json_indent, "JSON indentation; negative prints one line")->capture_default_str();
  app.add_option("-o,--output", cfg.output, "Write the result here instead of stdout");

  std::string input;
  std::string input2;
  std::uint64_t mask_bits = 0;
  std::string constraint_text;
  std::string mode_text = "mod_global_phase";
  std::size_t trials = 100;
  std::size_t length = 0;

  auto* c_intensity = app.add_subcommand("intensity", "Signal -> intensity spectrum");
  auto* c_roots = app.add_subcommand("roots", "Signal -> root form");
  auto* c_synth = app.add_subcommand("synth", "Root form -> signal");
  auto* c_flip = app.add_subcommand("flip", "Flip the roots selected by --mask");
  c_flip->add_option("--mask", mask_bits, "Bit i flips root i")->required();
  auto* c_enumerate = app.add_subcommand("enumerate", "Signal or spectrum -> all equi-intensity classes");
  auto* c_classify = app.add_subcommand("classify", "Incidence component and convolution certificate of a pair");
  auto* c_factor = app.add_subcommand("factor", "Spectrum -> reciprocal-conjugate root pairs");
  auto* c_minphase = app.add_subcommand("minphase", "Spectrum -> minimum-phase signal");
  auto* c_recover = app.add_subcommand("recover", "Spectrum -> classes meeting a constraint");
  c_recover->add_option("--constraint", constraint_text, "fixed-last-modulus:a=<float> or none")->required();
  auto* c_witness = app.add_subcommand("witness", "Check a witness for a constraint");
  c_witness->add_option("--constraint", constraint_text, "fixed-last-modulus:a=<float>, stft:L=<int> or none")->required();
  c_witness->add_option("--mode", mode_text, "mod_global_phase or mod_trivial")->capture_default_str();
  auto* c_generic = app.add_subcommand("generic-test", "Monte-Carlo uniqueness test over a constraint's sampler");
  c_generic->add_option("--constraint", constraint_text, "fixed-last-modulus:a=<float>, stft:L=<int> or none")->required();
  c_generic->add_option("--mode", mode_text, "mod_global_phase or mod_trivial")->capture_default_str();
  c_generic->add_option("--trials", trials, "Number of samples")->capture_default_str();
  c_generic->add_option("--length", length, "Signal length N+1 (single-signal constraints)");

  for (auto* sub : {c_intensity, c_roots, c_synth, c_flip, c_enumerate, c_factor, c_minphase,
                    c_recover, c_witness}) {
    sub->add_option("input", input, "Input JSON file");
  }
  c_classify->add_option("x", input, "First signal, or an object {\"x\": ..., \"xp\": ...}");
  c_classify->add_option("xp", input2, "Second signal");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    err << app.help();
    return kUsage;
  }

  try {
    for (const double t : {cfg.tol.support, cfg.tol.residual, cfg.tol.circle, cfg.tol.matching,
                           cfg.tol.pairing, cfg.tol.dedup, cfg.tol.predicate, cfg.tol.equivalence}) {
      if (!(t > 0.0)) throw UsageError("tolerances must be positive");
    }
    if (cfg.tol.max_n > 24) throw UsageError("--max-n must not exceed 24");

    const Tolerances& tol = cfg.tol;
    Json result;
    if (c_intensity->parsed()) {
      result = json_io::encode(intensity(json_io::decode_signal(read_json(input, in), tol.support)));
    } else if (c_roots->parsed()) {
      result = json_io::encode(to_root_form(json_io::decode_signal(read_json(input, in), tol.support), tol));
    } else if (c_synth->parsed()) {
      result = json_io::encode(synthesize(json_io::decode_root_form(read_json(input, in))));
    } else if (c_flip->parsed()) {
      const RootForm r = json_io::decode_root_form(read_json(input, in));
      result = json_io::encode(flip(r, FlipMask(mask_bits, r.degree())));
    } else if (c_enumerate->parsed()) {
      const Json j = read_json(input, in);
      result = looks_like_spectrum(j)
                   ? json_io::encode(candidates_from_intensity(json_io::decode_spectrum(j), tol))
                   : json_io::encode(enumerate_candidates(json_io::decode_signal(j, tol.support), tol));
    } else if (c_classify->parsed()) {
      Json jx = read_json(input, in);
      Json jxp;
      if (input2.empty()) {
        if (!jx.is_object() || !jx.contains("x") || !jx.contains("xp")) {
          throw PreconditionError("classify needs two signals or an object with \"x\" and \"xp\"");
        }
        jxp = jx.at("xp");
        jx = Json(jx.at("x"));
      } else {
        jxp = read_json(input2, in);
      }
      const Signal x = json_io::decode_signal(jx, tol.support);
      const Signal xp = json_io::decode_signal(jxp, tol.support);
      result = json_io::encode(classify_pair(x, xp, tol));
      result["certificate"] = json_io::encode(convolution_factor(x, xp, tol));
    } else if (c_factor->parsed()) {
      result = json_io::encode(factor_intensity(spectrum_or_signal(read_json(input, in), tol), tol));
    } else if (c_minphase->parsed()) {
      result = json_io::encode(minimum_phase(spectrum_or_signal(read_json(input, in), tol), tol).signal());
    } else if (c_recover->parsed()) {
      const ParsedConstraint pc = parse_constraint(constraint_text);
      const IntensitySpectrum s = spectrum_or_signal(read_json(input, in), tol);
      std::vector<PhaseClassRep> found;
      if (pc.name == "fixed-last-modulus") {
        found = recover_with_last_modulus(s, *pc.a, tol.predicate, tol);
      } else if (pc.name == "none") {
        const CandidateSet set = candidates_from_intensity(s, tol);
        for (const auto& c : set.classes) found.push_back(set.representative(c));
      } else {
        throw PreconditionError("recover supports fixed-last-modulus and none only");
      }
      Json classes = Json::array();
      for (const auto& r : found) classes.push_back(json_io::encode(r.signal()));
      result = Json{{"constraint", constraint_text}, {"count", found.size()}, {"classes", std::move(classes)}};
    } else if (c_witness->parsed()) {
      const ParsedConstraint pc = parse_constraint(constraint_text);
      const SignalTuple w0 = decode_tuple(read_json(input, in), tol);
      const ConstraintSystem c = make_constraint(pc, w0.front().size());
      result = json_io::encode(check_witness(c, w0, json_io::decode_mode(mode_text), tol.predicate, tol));
    } else if (c_generic->parsed()) {
      const ParsedConstraint pc = parse_constraint(constraint_text);
      if (pc.name != "stft" && length < 2) throw UsageError("--length >= 2 is required for this constraint");
      const ConstraintSystem c = make_constraint(pc, length);
      result = json_io::encode(generic_uniqueness_test(c, trials, cfg.seed, json_io::decode_mode(mode_text),
                                                       tol.predicate, tol));
      result["constraint"] = constraint_text;
      result["seed"] = cfg.seed;
    }

    const std::string text = result.dump(cfg.json_indent < 0 ? -1 : cfg.json_indent);
    if (cfg.output.empty()) {
      out << text << '\n';
    } else {
      std::ofstream file(cfg.output);
      if (!file) throw PreconditionError("cannot open output file '" + cfg.output + "'");
      file << text << '\n';
    }
    return kOk;
  } catch (const UsageError& e) {
    emit_error(err, "usage", e.what());
    err << app.help();
    return kUsage;
  } catch (const PreconditionError& e) {
    emit_error(err, "precondition", e.what());
    return kPrecondition;
  } catch (const nlohmann::json::exception& e) {
    emit_error(err, "precondition", e.what());
    return kPrecondition;
  } catch (const NumericalError& e) {
    emit_error(err, "numerical", e.what());
    return kNumerical;
  } catch (const Error& e) {
    emit_error(err, "internal", e.what());
    return kNumerical;
  }
}

}  // namespace phase_ambiguity::cli
