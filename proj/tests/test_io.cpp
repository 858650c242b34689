#include "doctest.h"

#include "ocoh/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace ocoh;
using namespace ocoh::io;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kMinimal = R"({"field":"rational","algebra":{"dim":1,"mu":[[["1"]]]}})";

const char* kFixture = R"({
  "field": "rational",
  "algebra": {"dim": 2, "mu": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]]},
  "bimodule": "adjoint",
  "operators": {"T1": [["0","0"],["1","0"]], "T2": [["0","0"],["-1","0"]]}
})";

} // namespace

TEST_CASE("parallel and serial matrix assembly agree") {
    // must run before any other matrix assembly in this binary so the
    // OCOH_THREADS override is picked up by the worker-count cache
    setenv("OCOH_THREADS", "3", 1);
    WorkspaceDocument doc = parse_workspace(slurp(std::string(OCOH_FIXTURE_DIR) + "/kx2_pair.json"));
    CochainComplex cx = pair_complex(doc.context(), doc.pair());
    Matrix parallel = coboundary_matrix(cx, 2);
    Matrix serial(cx.dim(3), cx.dim(2));
    for (int j = 0; j < cx.dim(2); ++j) {
        Vec basis = zero_vec(cx.dim(2));
        basis[j] = Rational(1);
        Vec col = cx.apply(2, basis);
        for (int r = 0; r < cx.dim(3); ++r) serial.set(r, j, col[r]);
    }
    CHECK(parallel == serial);
}

TEST_CASE("workspace emit round-trip is lossless on every fixture") {
    for (const char* name : {"kx2_pair.json", "kx2_aybe.json", "kx2_deformation.json", "kx2_full_deformation.json",
                             "minimal_unit.json", "broken_pair.json"}) {
        WorkspaceDocument doc = parse_workspace(slurp(std::string(OCOH_FIXTURE_DIR) + "/" + name));
        const std::string once = emit_workspace(doc).dump(2);
        WorkspaceDocument again = parse_workspace(once);
        CHECK(emit_workspace(again).dump(2) == once);
    }
}

TEST_CASE("parse_workspace: minimal document") {
    WorkspaceDocument doc = parse_workspace(kMinimal);
    REQUIRE(doc.algebra.has_value());
    CHECK(doc.algebra->dim == 1);
    CHECK(doc.algebra->mu.at(0, 0, 0) == Rational(1));
    CHECK(doc.warnings.empty());
    Report rep = run_command("check", doc, {});
    CHECK(rep.all_pass());
}

TEST_CASE("parse_workspace: fixture with adjoint shorthand") {
    WorkspaceDocument doc = parse_workspace(kFixture);
    REQUIRE(doc.T1.has_value());
    REQUIRE(doc.T2.has_value());
    CHECK(doc.bimodule->left == doc.algebra->mu);
    Report rep = run_command("check", doc, {});
    CHECK(rep.all_pass());
}

TEST_CASE("parse_workspace: schema errors carry JSON paths") {
    CHECK_THROWS_WITH_AS(parse_workspace("{"), doctest::Contains("not valid JSON"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_workspace(R"({"field":"rational","algebra":{"dim":2,"mu":[[["1"]]]}})"),
                         doctest::Contains("$.algebra.mu"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_workspace(R"({"field":"rational","algebra":{"dim":1,"mu":[[["3/0"]]]}})"),
                         doctest::Contains("$.algebra.mu[0][0][0]"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_workspace(R"({"field":"real","algebra":{"dim":1,"mu":[[["1"]]]}})"),
                         doctest::Contains("$.field"), std::invalid_argument);
}

TEST_CASE("unknown keys become warnings, not errors") {
    WorkspaceDocument doc =
        parse_workspace(R"({"field":"rational","algebra":{"dim":1,"mu":[[["1"]]]},"extra":1})");
    REQUIRE(doc.warnings.size() == 1);
    CHECK(doc.warnings[0].find("extra") != std::string::npos);
}

TEST_CASE("reports: JSON round-trip and byte-identical determinism") {
    WorkspaceDocument doc = parse_workspace(kFixture);
    Report rep = run_command("check", doc, {});
    const std::string a = emit_report(rep, "json");
    const std::string b = emit_report(run_command("check", doc, {}), "json");
    CHECK(a == b);
    Json parsed = Json::parse(a); // round-trips as valid JSON
    CHECK(parsed["command"] == "check");
    CHECK(parsed["verdicts"].size() == rep.verdicts.size());

    const std::string text = emit_report(rep, "text");
    CHECK(text.find("compatible pair") != std::string::npos);

    Report empty;
    CHECK(emit_report(empty, "json") == "{}\n");
    CHECK_THROWS_AS(emit_report(rep, "yaml"), std::invalid_argument);
}

TEST_CASE("run_command: cohomology on zero operators gives dim A at degree 0") {
    WorkspaceDocument doc = parse_workspace(R"({
      "field": "rational",
      "algebra": {"dim": 2, "mu": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]]},
      "bimodule": "adjoint",
      "operators": {"T1": [["0","0"],["0","0"]], "T2": [["0","0"],["0","0"]]}
    })");
    CommandOptions opts;
    opts.complex_kind = "co";
    opts.degree = 0;
    Report rep = run_command("cohomology", doc, opts);
    CHECK(rep.data["cohomology_dim"] == 2);
    CHECK(rep.data["dim_cocycles"] == 2);
}

TEST_CASE("run_command: mc verdicts") {
    WorkspaceDocument doc = parse_workspace(kFixture);
    Report rep = run_command("mc", doc, {});
    CHECK(rep.all_pass());

    WorkspaceDocument broken = parse_workspace(R"({
      "field": "rational",
      "algebra": {"dim": 2, "mu": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]]},
      "bimodule": "adjoint",
      "operators": {"T1": [["0","0"],["0","1"]], "T2": [["0","0"],["0","0"]]}
    })");
    Report bad = run_command("mc", broken, {});
    CHECK_FALSE(bad.all_pass());
    CHECK_FALSE(bad.data["nonzero_components"].empty());
}

TEST_CASE("run_command: induce emits checkable blocks") {
    WorkspaceDocument doc = parse_workspace(kFixture);
    Report rep = run_command("induce", doc, {});
    CHECK(rep.all_pass());
    const Json& out = rep.data["induced"];
    CHECK(out.contains("compatible_algebra"));
    CHECK(out.contains("compatible_bimodule"));
    CHECK(out.contains("dendriform"));
    // the induced dendriform block parses back as a workspace
    Json ws = Json::object();
    ws["field"] = "rational";
    ws["dendriform"] = out["dendriform"];
    WorkspaceDocument round = parse_workspace(ws.dump());
    REQUIRE(round.dendriform.has_value());
    CHECK(check_compatible_dendriform(*round.dendriform).pass());
}

TEST_CASE("run_command: usage errors") {
    WorkspaceDocument doc = parse_workspace(kMinimal);
    CHECK_THROWS_AS(run_command("mc", doc, {}), std::invalid_argument);
    CHECK_THROWS_AS(run_command("nope", doc, {}), std::invalid_argument);
    CommandOptions opts;
    opts.complex_kind = "nope";
    opts.degree = 0;
    WorkspaceDocument fix = parse_workspace(kFixture);
    CHECK_THROWS_AS(run_command("cohomology", fix, opts), std::invalid_argument);
}
