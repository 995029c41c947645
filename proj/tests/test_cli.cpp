// Family-file parsing/emission unit tests plus end-to-end tests that drive
// the installed CLI binary as a subprocess and re-verify its certificates.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fla/corpus.hpp"
#include "fla/error.hpp"
#include "fla/familyfile.hpp"
#include "fla/frobenius.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace fla;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    REQUIRE(status != -1);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string fla_bin = FLA_CLI_PATH;

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << content;
    out.close();
    return path;
}

Rat json_rat(const nlohmann::json& v) {
    if (v.is_string()) return rat_parse(v.get<std::string>());
    REQUIRE(v.is_number_integer());
    return rat_parse(std::to_string(v.get<long long>()));
}

Vec json_vec(const nlohmann::json& v) {
    Vec out;
    for (const auto& entry : v) out.push_back(json_rat(entry));
    return out;
}

} // namespace

TEST_CASE("family file emit/parse round trip over the example corpus") {
    for (const char* name : {"B31", "B42", "D0", "Ln", "winternitz"}) {
        std::vector<int> params;
        if (std::string(name) == "D0" || std::string(name) == "Ln") params = {3};
        if (std::string(name) == "winternitz") params = {6};
        CAPTURE(name);
        const CorpusEntry entry = corpus_build(name, params);
        FamilyFile f;
        f.n = entry.algebra.n();
        f.generators = entry.generators;
        f.basis = entry.algebra.basis();
        if (entry.expected.frobenius_witness) f.alpha = *entry.expected.frobenius_witness;
        const std::string text = familyfile_emit(f);
        const FamilyFile g = familyfile_parse(text);
        CHECK(g.n == f.n);
        CHECK(g.generators == f.generators);
        REQUIRE(g.basis.has_value());
        CHECK(*g.basis == *f.basis);
        CHECK(g.alpha == f.alpha);
        CHECK(familyfile_emit(g) == text);
        CHECK(familyfile_algebra(g).span() == entry.algebra.span());
    }
}

TEST_CASE("family file parsing accepts both integer and string rationals") {
    const FamilyFile f = familyfile_parse(R"({
        "n": 2,
        "generators": [[["1/2", -3], [0, "7"]]],
        "alpha": ["-2/3", 5]
    })");
    CHECK(f.n == 2);
    REQUIRE(f.generators.size() == 1);
    CHECK(f.generators[0].at(0, 0) == Rat(1, 2));
    CHECK(f.generators[0].at(0, 1) == Rat(-3));
    CHECK(f.generators[0].at(1, 1) == Rat(7));
    REQUIRE(f.alpha.has_value());
    CHECK((*f.alpha)[0] == Rat(-2, 3));
    CHECK((*f.alpha)[1] == Rat(5));
}

TEST_CASE("family file parsing rejects malformed input") {
    auto rejects = [](const std::string& text) {
        CAPTURE(text);
        CHECK_THROWS_AS(familyfile_parse(text), InputError);
    };
    rejects("not json");
    rejects(R"({"generators": []})");                                  // missing n
    rejects(R"({"n": 2})");                                            // missing generators
    rejects(R"({"n": 0, "generators": []})");                          // n out of range
    rejects(R"({"n": 65, "generators": []})");                         // n above cap
    rejects(R"({"n": 2, "generators": [[[1, 0], [0, 1]]], "extra": 1})"); // unknown key
    rejects(R"({"n": 2, "generators": [[[0.5, 0], [0, 0]]]})");        // float entry
    rejects(R"({"n": 2, "generators": [[["1/0", 0], [0, 0]]]})");      // zero denominator
    rejects(R"({"n": 2, "generators": [[["x", 0], [0, 0]]]})");        // junk string
    rejects(R"({"n": 2, "generators": [[["1/-2", 0], [0, 0]]]})");     // negative denominator
    rejects(R"({"n": 2, "generators": [[[1, 0]]]})");                  // wrong row count
    rejects(R"({"n": 2, "generators": [[[1, 0], [0]]]})");             // ragged row
    rejects(R"({"n": 2, "generators": [[[1, 0], [0, 1]]], "alpha": [1]})"); // alpha length
}

TEST_CASE("family file rejects a basis that does not span the generator closure") {
    // Generators produce {I, E12, E13} but the declared basis spans {I, E12}.
    CHECK_THROWS_AS(familyfile_algebra(familyfile_parse(R"({
        "n": 3,
        "generators": [
            [[0, 1, 0], [0, 0, 0], [0, 0, 0]],
            [[0, 0, 1], [0, 0, 0], [0, 0, 0]]
        ],
        "basis": [
            [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            [[0, 1, 0], [0, 0, 0], [0, 0, 0]]
        ]
    })")),
                    InputError);
}

TEST_CASE("pipeline: closure of the four-generator example reports dimension five") {
    const RunResult r = run(fla_bin + " corpus gerstenhaber4 | " + fla_bin + " closure -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 6) == "dim 5\n");
}

TEST_CASE("pipeline: derivation dimensions of the cubic shift pencil agree at eight") {
    const RunResult r = run(fla_bin + " corpus D0 3 | " + fla_bin + " derive -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("derivations (direct): 8\n") != std::string::npos);
    CHECK(r.out.find("derivations (normalizer route): 8\n") != std::string::npos);
    CHECK(r.out.find("agreement: pass\n") != std::string::npos);
}

TEST_CASE("pipeline: rank-one column family has an exact no-open-orbit certificate") {
    const RunResult r = run(fla_bin + " corpus Ln 3 | " + fla_bin + " orbit -");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "no open orbit; certificate: det ≡ 0\n");
}

TEST_CASE("reports are byte-deterministic for a fixed seed") {
    for (const std::string& cmd :
         {fla_bin + " corpus B42 | " + fla_bin + " frobenius -",
          fla_bin + " corpus B42 | " + fla_bin + " --format json orbit -",
          fla_bin + " corpus circperm 5 | " + fla_bin + " --seed 42 classify -"}) {
        CAPTURE(cmd);
        const RunResult first = run(cmd);
        const RunResult second = run(cmd);
        CHECK(first.exit_code == 0);
        CHECK(second.exit_code == 0);
        CHECK(first.out == second.out);
        CHECK(!first.out.empty());
    }
}

TEST_CASE("exit codes: input errors are 2, unmet preconditions are 3") {
    CHECK(run("echo 'garbage' | " + fla_bin + " closure - 2>/dev/null").exit_code == 2);
    CHECK(run(fla_bin + " corpus nosuchfamily 2>/dev/null").exit_code == 2);
    CHECK(run(fla_bin + " corpus D0 2>/dev/null").exit_code == 2); // missing parameter
    CHECK(run(fla_bin + " closure /tmp/nonexistent-family-file.json 2>/dev/null").exit_code ==
          2);
    // Orbit analysis requires the algebra dimension to equal the ambient size.
    CHECK(run(fla_bin + " corpus gerstenhaber4 | " + fla_bin + " orbit - 2>/dev/null")
              .exit_code == 3);
    CHECK(run(fla_bin + " --help > /dev/null").exit_code == 0);
}

TEST_CASE("check command flags non-commuting generators with exit code 1") {
    const std::string path = write_temp(
        "fla_cli_noncommuting.json",
        R"({"n": 2, "generators": [[[0, 1], [0, 0]], [[0, 0], [1, 0]]]})");
    const RunResult r = run(fla_bin + " check " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("commuting: fail") != std::string::npos);
}

TEST_CASE("frobenius command rejects a degenerate covector from the input file") {
    // The rank-one column family with the covector picking the last column
    // direction: its coboundary two-form is degenerate.
    const std::string path = write_temp("fla_cli_degenerate_alpha.json", R"({
        "n": 3,
        "generators": [
            [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
            [[0, 0, 0], [0, 0, 1], [0, 0, 0]]
        ],
        "alpha": [0, 0, 1]
    })");
    const RunResult r = run(fla_bin + " frobenius " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("frobenius functional: no") != std::string::npos);
}

TEST_CASE("json orbit report round trip: witness re-verifies to the same verdict") {
    const RunResult r = run(fla_bin + " corpus B31 | " + fla_bin + " --format json orbit -");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json report = nlohmann::json::parse(r.out);
    CHECK(report.at("command") == "orbit");
    REQUIRE(report.at("open_orbit").get<bool>());
    CHECK(!report.at("probabilistic").get<bool>());
    const Vec witness = json_vec(report.at("witness"));
    const MatAlgebra b = corpus_build("B31", {}).algebra;
    REQUIRE(static_cast<int>(witness.size()) == b.n());
    // Independent re-verification of the certificate, as a fresh consumer of
    // the report would do.
    CHECK(det(orbital_matrix(b, witness)) != 0);
    const OrbitDecision again = open_orbit_exists(b);
    CHECK(again.open_orbit == report.at("open_orbit").get<bool>());
}

TEST_CASE("json zero-certificate report round trip for the column family") {
    const RunResult r = run(fla_bin + " corpus Ln 4 | " + fla_bin + " --format json orbit -");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json report = nlohmann::json::parse(r.out);
    CHECK(!report.at("open_orbit").get<bool>());
    CHECK(report.at("zero_certificate").get<bool>());
    CHECK(!report.at("probabilistic").get<bool>());
    CHECK(!report.contains("witness"));
    const OrbitDecision again = open_orbit_exists(corpus_build("Ln", {4}).algebra);
    CHECK(again.open_orbit == report.at("open_orbit").get<bool>());
    CHECK(again.zero_certificate == report.at("zero_certificate").get<bool>());
}

TEST_CASE("json frobenius report carries an exact functional that re-verifies") {
    const RunResult r =
        run(fla_bin + " corpus Bnp 5 2 | " + fla_bin + " --format json frobenius -");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json report = nlohmann::json::parse(r.out);
    REQUIRE(report.at("frobenius_functional").get<bool>());
    CHECK(report.at("commutator_recovery").get<bool>());
    CHECK(report.at("associator_left_symmetric").get<bool>());
    const Vec alpha = json_vec(report.at("alpha"));
    const LieAlg g = build_semidirect(corpus_build("Bnp", {5, 2}).algebra);
    REQUIRE(static_cast<int>(alpha.size()) == g.dim());
    CHECK(is_frobenius_functional(g, alpha));
}

TEST_CASE("corpus emission parses back to the same algebra") {
    for (const std::string spec : {"B42", "Bnn 4", "cartan_form 3 1", "D01 4"}) {
        CAPTURE(spec);
        const RunResult r = run(fla_bin + " corpus " + spec);
        REQUIRE(r.exit_code == 0);
        const FamilyFile f = familyfile_parse(r.out);
        std::istringstream words(spec);
        std::string name;
        words >> name;
        std::vector<int> params;
        int p;
        while (words >> p) params.push_back(p);
        const CorpusEntry entry = corpus_build(name, params);
        CHECK(familyfile_algebra(f).span() == entry.algebra.span());
        CHECK(f.generators == entry.generators);
    }
}

TEST_CASE("classify and build text reports name the expected structures") {
    const RunResult label = run(fla_bin + " corpus D0 3 | " + fla_bin + " classify -");
    CHECK(label.exit_code == 0);
    CHECK(label.out.find("label: D0^3\n") == 0);

    const RunResult built = run(fla_bin + " corpus B31 | " + fla_bin + " build -");
    CHECK(built.exit_code == 0);
    CHECK(built.out.find("jacobi: pass\n") != std::string::npos);
    CHECK(built.out.find("two-step solvable: yes\n") != std::string::npos);
    CHECK(built.out.find("[e2, e5] = e4\n") != std::string::npos);
    CHECK(built.out.find("[e3, e6] = e4\n") != std::string::npos);
}

TEST_CASE("suite command prints one line per criterion and passes") {
    const RunResult r = run(fla_bin + " suite");
    CHECK(r.exit_code == 0);
    for (int k = 1; k <= 10; ++k) {
        const std::string prefix = "criterion " + std::to_string(k) + " (";
        CAPTURE(k);
        CHECK(r.out.find(prefix) != std::string::npos);
    }
    CHECK(r.out.find(": FAIL") == std::string::npos);
    CHECK(r.out.find("suite: PASS\n") != std::string::npos);
}
