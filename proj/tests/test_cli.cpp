#include <doctest.h>

#include <sstream>

#include "phase_ambiguity/cli.hpp"
#include "phase_ambiguity/errors.hpp"
#include "phase_ambiguity/serialization.hpp"
#include "support/helpers.hpp"

using namespace phase_ambiguity;
using json_io::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kGolden = R"({"signal": [[4.5,0],[9,0],[0.5,0],[1,0]]})";

}  // namespace

TEST_SUITE("serialization") {
  TEST_CASE("complex numbers and signals round trip") {
    const Signal x({Complex(0.1, -0.2), Complex(1.0 / 3.0, 2e-17), Complex(-7.0, 0.0)});
    const Json j = json_io::encode(x);
    CHECK(json_io::decode_signal(Json::parse(j.dump())) == x);
    CHECK(json_io::encode(Complex(-0.0, -0.0)).dump() == "[0.0,0.0]");
    CHECK(json_io::decode_complex(Json(2.5)) == Complex(2.5));
    CHECK_THROWS_AS(json_io::decode_complex(Json::parse("[1]")), PreconditionError);
    CHECK_THROWS_AS(json_io::decode_signal(Json::parse(R"({"x": []})")), PreconditionError);
  }

  TEST_CASE("spectra and root forms round trip") {
    const auto s = intensity(test_support::golden_x());
    const auto back = json_io::decode_spectrum(Json::parse(json_io::encode(s).dump()));
    CHECK(spectra_equal(s, back, 0.0));
    const RootForm r(3.0, {Complex(0, 3), Complex(0, -1.0 / 3.0), -0.5});
    const RootForm rb = json_io::decode_root_form(Json::parse(json_io::encode(r).dump()));
    CHECK(rb.leading() == r.leading());
    CHECK(rb.roots() == r.roots());
    CHECK_THROWS_AS(json_io::decode_spectrum(Json::parse(R"({"degree": 2, "coeffs": [1, 2, 1]})")),
                    PreconditionError);
  }

  TEST_CASE("witness modes") {
    CHECK(json_io::decode_mode("mod_global_phase") == WitnessMode::ModGlobalPhase);
    CHECK(json_io::decode_mode("mod_trivial") == WitnessMode::ModTrivial);
    CHECK(json_io::mode_name(WitnessMode::ModTrivial) == "mod_trivial");
    CHECK_THROWS_AS(json_io::decode_mode("other"), PreconditionError);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("enumerate the worked example") {
    const auto r = run_cli({"enumerate"}, kGolden);
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("classes").size() == 4);
    CHECK(j.at("candidate_count") == 8);
    CHECK(j.at("distinct_count") == 8);
  }

  TEST_CASE("classify the worked example") {
    const std::string pair =
        R"({"x": {"signal": [[4.5,0],[9,0],[0.5,0],[1,0]]}, "xp": [[1.5,0],[3,4],[1.5,8],[3,0]]})";
    const auto r = run_cli({"classify"}, pair);
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("components") == Json::parse("[1]"));
    CHECK(j.at("certificate").at("k") == 1);
  }

  TEST_CASE("recover with a fixed last modulus") {
    const auto spectrum = run_cli({"intensity"}, kGolden);
    REQUIRE(spectrum.code == 0);
    const auto one = run_cli({"recover", "--constraint", "fixed-last-modulus:a=1"}, spectrum.out);
    REQUIRE(one.code == 0);
    CHECK(Json::parse(one.out).at("count") == 1);
    const auto three = run_cli({"recover", "--constraint", "fixed-last-modulus:a=3"}, spectrum.out);
    CHECK(Json::parse(three.out).at("count") == 2);
  }

  TEST_CASE("roots output feeds synth") {
    const auto roots = run_cli({"roots"}, kGolden);
    REQUIRE(roots.code == 0);
    const auto synth = run_cli({"synth"}, roots.out);
    REQUIRE(synth.code == 0);
    const Signal back = json_io::decode_signal(Json::parse(synth.out));
    CHECK(relative_max_distance(test_support::golden_x().coeffs(), back.coeffs()) < 1e-12);

    const auto flipped = run_cli({"flip", "--mask", "0"}, roots.out);
    REQUIRE(flipped.code == 0);
    CHECK(Json::parse(flipped.out) == Json::parse(roots.out));
  }

  TEST_CASE("factor and minphase") {
    const auto f = run_cli({"factor"}, kGolden);
    REQUIRE(f.code == 0);
    CHECK(Json::parse(f.out).at("pairs").size() == 3);
    const auto m = run_cli({"minphase", "--json-indent", "-1"}, kGolden);
    REQUIRE(m.code == 0);
    const Signal mp = json_io::decode_signal(Json::parse(m.out));
    CHECK(test_support::max_abs_diff(mp.coeffs(), ComplexVector{0.5, 1.0, 4.5, 9.0}) < 1e-10);
  }

  TEST_CASE("witness and generic-test") {
    const auto w = run_cli({"witness", "--constraint", "fixed-last-modulus:a=2"},
                           R"({"signal": [[0.5,0],[0,0],[0,0],[0,0],[2,0]]})");
    REQUIRE(w.code == 0);
    CHECK(Json::parse(w.out).at("conclusion") == "WitnessHolds");

    const auto g = run_cli({"--seed", "5", "generic-test", "--constraint", "none", "--length", "4", "--trials", "3"});
    REQUIRE(g.code == 0);
    CHECK(Json::parse(g.out).at("failures") == 3);

    const auto s = run_cli({"generic-test", "--constraint", "stft:L=1", "--trials", "5"});
    REQUIRE(s.code == 0);
    CHECK(Json::parse(s.out).at("failures") == 0);
  }

  TEST_CASE("output is byte-identical across runs") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"enumerate"}, {"factor"}, {"--seed", "9", "generic-test", "--constraint", "none", "--length", "5", "--trials", "4"}}) {
      const auto a = run_cli(args, kGolden);
      const auto b = run_cli(args, kGolden);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("exit codes") {
    CHECK(run_cli({}).code == cli::kUsage);
    CHECK(run_cli({"frobnicate"}).code == cli::kUsage);
    CHECK(run_cli({"witness", "--constraint", "bogus"}, kGolden).code == cli::kUsage);

    const auto bad = run_cli({"intensity"}, R"({"signal": [[0,0],[1,0]]})");
    CHECK(bad.code == cli::kPrecondition);
    const Json e = Json::parse(bad.err);
    CHECK(e.at("error") == "precondition");
    CHECK(e.contains("detail"));

    CHECK(run_cli({"intensity"}, "not json").code == cli::kPrecondition);
    CHECK(run_cli({"classify"}, R"({"x": [[1,0],[2,0]], "xp": [[1,0],[3,0]]})").code == cli::kPrecondition);

    // c[0] lowered below |c[3]|: not a valid intensity.
    const auto pf = run_cli({"factor"}, R"({"degree": 3, "coeffs": [[4.5,0],[-11.25,0],[-36.5,0],[1,0],[-36.5,0],[-11.25,0],[4.5,0]]})");
    CHECK(pf.code == cli::kNumerical);
    CHECK(Json::parse(pf.err).at("error") == "numerical");

    CHECK(run_cli({"--help"}).code == cli::kOk);
  }
}
