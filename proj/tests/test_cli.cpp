#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "rough/cli.hpp"
#include "rough/ingestion.hpp"

#include "generators.hpp"
#include "support.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = rough::run_cli(args, out, err);
    return RunResult{code, out.str(), err.str()};
}

const std::string kFixture = support::fixture_path("paper-a.json");

// a scratch file that cleans up after itself
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents, const std::string& name) {
        path = std::string("/tmp/rough_test_") + name;
        std::ofstream f(path, std::ios::binary);
        f << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("regions reproduces the worked instance") {
    const RunResult r = run({"regions", "-i", kFixture, "--beta", "1/4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "lower: {E6, E7}"));
    CHECK(contains(r.out, "upper: {E2, E3, E6, E7, E10, E11}"));
    CHECK(contains(r.out, "D:  {E6, E7}"));
    CHECK(contains(r.out, "BN: {E2, E3, E10, E11}"));
    CHECK(contains(r.out, "N:  {E1, E4, E5, E8, E9, E12}"));
    CHECK(contains(r.out, "accuracy: 1/3"));
}

TEST_CASE("regions with a separate upper error") {
    const RunResult r = run({"regions", "-i", kFixture, "--beta", "1/4", "--gamma", "1/3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "beta: 1/4"));
    CHECK(contains(r.out, "gamma: 1/3"));
    CHECK(contains(r.out, "lower: {E6, E7}"));
    CHECK(contains(r.out, "upper: {E2, E3, E6, E7, E10}"));
    CHECK(contains(r.out, "BN: {E2, E3, E10}"));
    CHECK(contains(r.out, "N:  {E1, E4, E5, E8, E9, E11, E12}"));
}

TEST_CASE("regions maps error kinds to exit codes") {
    SUBCASE("range violation is a validation error") {
        const RunResult r = run({"regions", "-i", kFixture, "--beta", "3/5"});
        CHECK(r.code == 1);
        CHECK(r.out.empty()); // never a partial report
        CHECK(contains(r.err, "PrecisionOutOfRange"));
    }
    SUBCASE("bad fraction syntax is a parse error") {
        const RunResult r = run({"regions", "-i", kFixture, "--beta", "x"});
        CHECK(r.code == 2);
    }
    SUBCASE("malformed document is a parse error") {
        TempFile broken("{ not json", "broken.json");
        const RunResult r = run({"regions", "-i", broken.path, "--beta", "0"});
        CHECK(r.code == 2);
        CHECK(r.out.empty());
    }
    SUBCASE("invalid partition is a validation error") {
        TempFile bad(R"({"universe": ["a","b"], "blocks": [["a"]], "target": []})", "bad.json");
        const RunResult r = run({"regions", "-i", bad.path, "--beta", "0"});
        CHECK(r.code == 1);
        CHECK(contains(r.err, "NotCovering"));
    }
    SUBCASE("missing file is a validation error") {
        const RunResult r = run({"regions", "-i", "/nonexistent.json", "--beta", "0"});
        CHECK(r.code == 1);
    }
    SUBCASE("usage errors are parse errors") {
        CHECK(run({"regions", "--beta", "0"}).code == 2);          // missing input
        CHECK(run({"regions", "-i", kFixture}).code == 2);         // missing beta
        CHECK(run({"nonsense"}).code == 2);                        // unknown command
        CHECK(run({"regions", "-i", kFixture, "--beta", "0", "--what"}).code == 2);
        CHECK(run({"regions", "-i", kFixture, "--beta", "0", "--format", "xml"}).code == 2);
        CHECK(run({"regions", "-i", kFixture, "--beta", "0", "--attrs", "a"}).code == 2);
    }
}

TEST_CASE("decimal thirds trigger a warning, exactly") {
    const RunResult r = run({"regions", "-i", kFixture, "--beta", "0.33"});
    CHECK(r.code == 0);
    CHECK(contains(r.err, "33/100"));
    CHECK(contains(r.err, "1/3"));
    // 33/100 < 1/3: E3 (degree 1/3) stays out of the lower approximation
    CHECK(contains(r.out, "lower: {E6, E7}"));

    const RunResult exact = run({"regions", "-i", kFixture, "--beta", "0.25"});
    CHECK(exact.err.empty());
    CHECK(contains(exact.out, "lower: {E6, E7}"));
}

TEST_CASE("thresholds lists degrees and critical values") {
    const RunResult r = run({"thresholds", "-i", kFixture});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "E7: 1/4"));
    CHECK(contains(r.out, "E10: 2/3"));
    CHECK(contains(r.out, "E11: 3/4"));
    CHECK(contains(r.out, "critical: 1/4, 1/3, 1/2"));
}

TEST_CASE("sweep prints one row per threshold") {
    const RunResult r = run({"sweep", "-i", kFixture});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "sweep (4 rows)"));
    CHECK(contains(r.out, "1/9"));
    CHECK(contains(r.out, "9/14"));
    CHECK(contains(r.out, "{E2, E3, E7, E10, E11}")); // classical boundary
    CHECK(contains(r.out, "{}"));                     // boundary gone at 1/2
}

TEST_CASE("lattice reports the closure and the laws") {
    const RunResult r = run({"lattice", "-i", kFixture, "--grid", "0,1/4,1/3,1/2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "family (4 elements)"));
    CHECK(contains(r.out, "family closed under join/meet: no"));
    CHECK(contains(r.out, "closure (12 elements)"));
    CHECK(contains(r.out, "idempotence: PASS"));
    CHECK(contains(r.out, "commutativity: PASS"));
    CHECK(contains(r.out, "associativity: PASS"));
    CHECK(contains(r.out, "absorption: PASS"));
    CHECK(contains(r.out, "join table"));
    CHECK(contains(r.out, "meet table"));

    SUBCASE("degenerate grid") {
        const RunResult one = run({"lattice", "-i", kFixture, "--grid", "0"});
        CHECK(one.code == 0);
        CHECK(contains(one.out, "family (1 elements)"));
        CHECK(contains(one.out, "closure (1 elements)"));
    }
    SUBCASE("default grid is the full critical grid") {
        const RunResult full = run({"lattice", "-i", kFixture});
        CHECK(full.code == 0);
        CHECK(contains(full.out, "grid: 0, 1/4, 1/3, 1/2"));
    }
}

TEST_CASE("check verifies the whole invariant battery") {
    const RunResult r = run({"check", "-i", kFixture});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "region-partition: PASS"));
    CHECK(contains(r.out, "zero-error-matches-classical: PASS"));
    CHECK(contains(r.out, "threshold-stability: PASS"));
    CHECK(contains(r.out, "lattice-laws: PASS"));
    CHECK(contains(r.out, "order-properties: PASS"));
    CHECK(contains(r.out, "all checks passed"));
    CHECK_FALSE(contains(r.out, "FAIL"));

    SUBCASE("degenerate instance") {
        TempFile tiny(R"({"universe": ["a"], "blocks": [["a"]], "target": ["a"]})", "tiny.json");
        const RunResult t = run({"check", "-i", tiny.path});
        CHECK(t.code == 0);
        CHECK(contains(t.out, "all checks passed"));
    }
}

TEST_CASE("identical invocations produce identical bytes") {
    for (const std::vector<std::string> args :
         {std::vector<std::string>{"regions", "-i", kFixture, "--beta", "1/4"},
          std::vector<std::string>{"thresholds", "-i", kFixture, "--format", "json"},
          std::vector<std::string>{"sweep", "-i", kFixture},
          std::vector<std::string>{"lattice", "-i", kFixture, "--grid", "0,1/4,1/3,1/2"},
          std::vector<std::string>{"check", "-i", kFixture, "--format", "json"}}) {
        const RunResult a = run(args);
        const RunResult b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("json output carries the same content as text") {
    const RunResult text = run({"regions", "-i", kFixture, "--beta", "1/4"});
    const RunResult json_run = run({"regions", "-i", kFixture, "--beta", "1/4", "--format", "json"});
    CHECK(json_run.code == 0);

    const auto doc = nlohmann::json::parse(json_run.out);
    CHECK(doc["command"] == "regions");
    CHECK(doc["parameters"]["beta"] == "1/4");
    CHECK(doc["result"]["accuracy"] == "1/3");
    CHECK(doc["result"]["lower"]["blocks"] == nlohmann::json::array({6, 7}));
    CHECK(doc["result"]["BN"]["blocks"] == nlohmann::json::array({2, 3, 10, 11}));
    CHECK(doc["result"]["N"]["elements"].size() == 7);

    // the same fractions and block sets appear in the text rendering
    CHECK(contains(text.out, "accuracy: 1/3"));
    for (const auto& b : doc["result"]["lower"]["blocks"])
        CHECK(contains(text.out, "E" + std::to_string(b.get<int>())));

    const auto lattice_doc = nlohmann::json::parse(
        run({"lattice", "-i", kFixture, "--grid", "0,1/4,1/3,1/2", "--format", "json"}).out);
    CHECK(lattice_doc["result"]["closure_size"] == 12);
    CHECK(lattice_doc["checks"]["closed"] == true);
    for (const auto& law : lattice_doc["checks"]["laws"]) CHECK(law["status"] == "PASS");

    const auto check_doc = nlohmann::json::parse(run({"check", "-i", kFixture, "--format", "json"}).out);
    for (const auto& c : check_doc["checks"]) CHECK(c["status"] == "PASS");
}

TEST_CASE("decision tables drive the same pipeline") {
    // blocks by (weather): {r1 r3}, {r2 r5}, {r4}; decision play=yes on r1, r4
    const char* csv = "id,weather,wind,play\n"
                      "r1,sunny,low,yes\n"
                      "r2,rainy,low,no\n"
                      "r3,sunny,high,no\n"
                      "r4,cloudy,low,yes\n"
                      "r5,rainy,high,no\n";
    TempFile table(csv, "table.csv");

    const RunResult r = run({"regions", "-i", table.path, "--table", "--attrs", "weather",
                             "--decision", "play=yes", "--beta", "0"});
    CHECK(r.code == 0);
    // E1 = {r1, r3} (half in the target), E2 = {r2, r5}, E3 = {r4}
    CHECK(contains(r.out, "lower: {E3}"));
    CHECK(contains(r.out, "upper: {E1, E3}"));
    CHECK(contains(r.out, "accuracy: 1/3"));

    SUBCASE("vprs over the table at the block's own degree") {
        const RunResult v = run({"regions", "-i", table.path, "--table", "--attrs", "weather",
                                 "--decision", "play=yes", "--beta", "1/2"});
        CHECK(v.code == 0);
        CHECK(contains(v.out, "lower: {E1, E3}"));
    }
    SUBCASE("two attributes refine to singletons") {
        const RunResult v = run({"thresholds", "-i", table.path, "--table", "--attrs",
                                 "weather,wind", "--decision", "play=yes"});
        CHECK(v.code == 0);
        CHECK(contains(v.out, "5 blocks"));
    }
    SUBCASE("unknown attribute is a validation error") {
        const RunResult v = run({"regions", "-i", table.path, "--table", "--attrs", "zz",
                                 "--decision", "play=yes", "--beta", "0"});
        CHECK(v.code == 1);
        CHECK(contains(v.err, "UnknownAttribute"));
    }
    SUBCASE("bad decision spec") {
        const RunResult v = run({"regions", "-i", table.path, "--table", "--attrs", "weather",
                                 "--decision", "play", "--beta", "0"});
        CHECK(v.code == 1);
    }
}

TEST_CASE("check passes on random fixtures") {
    std::mt19937 rng(515151);
    for (int trial = 0; trial < 25; ++trial) {
        const gen::RawInstance raw = gen::random_instance(rng, 8);
        rough::InstanceSpec spec;
        spec.universe = raw.labels;
        spec.blocks = raw.blocks;
        spec.target = raw.target;
        TempFile f(rough::emit_instance(spec), "random_check.json");
        const RunResult r = run({"check", "-i", f.path});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "all checks passed"));
    }
}

TEST_CASE("thresholds output is stable across reruns on a random fixture") {
    std::mt19937 rng(626262);
    const gen::RawInstance raw = gen::random_instance(rng, 10);
    rough::InstanceSpec spec;
    spec.universe = raw.labels;
    spec.blocks = raw.blocks;
    spec.target = raw.target;
    TempFile f(rough::emit_instance(spec), "random_thresholds.json");
    const RunResult a = run({"thresholds", "-i", f.path});
    const RunResult b = run({"thresholds", "-i", f.path});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("help is success") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"regions", "--help"}).code == 0);
}
