#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "symdg/cli.hpp"

using namespace symdg;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("schouten-square: verdicts and exit codes") {
    auto r = run({"schouten-square", th::fixture("so3_star.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "0\nPOISSON\n");

    auto bad = run({"schouten-square", th::fixture("nonpoisson.json")});
    CHECK(bad.code == 0);
    CHECK(bad.out.find("NOT-POISSON") != std::string::npos);
    CHECK(bad.out.find("@1^@2^@3") != std::string::npos);
}

TEST_CASE("bracket and tilde-pi output canonical expressions") {
    auto r = run({"bracket", th::fixture("r2_symplectic.json"), "dx1", "dx2"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");

    auto t = run({"tilde-pi", th::fixture("r2_symplectic.json"), "dx1", "dx2"});
    CHECK(t.code == 0);
    CHECK(t.out == "1\n");

    auto j = run({"bracket", th::fixture("r2_symplectic.json"), "2x1 dx1", "dx2", "--format",
                  "json"});
    CHECK(j.code == 0);
    CHECK(j.out == "{\"result\":\"2 dx1\"}\n");
}

TEST_CASE("verify: pass and counterexample exit codes") {
    auto ok = run({"verify", "jacobi", th::fixture("so3_star.json"), "--trials", "6", "--seed",
                   "1"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);

    auto bad = run({"verify", "jacobi", th::fixture("nonpoisson.json"), "--trials", "20",
                    "--seed", "1"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("counterexample") != std::string::npos);

    auto mt = run({"verify", "main-theorem", th::fixture("r2_symplectic.json"), "--trials", "4",
                   "--max-word-length", "3", "--seed", "1"});
    CHECK(mt.code == 0);
    CHECK(mt.out.find("plain variant: PASS") != std::string::npos);
}

TEST_CASE("verify: json report schema") {
    auto r = run({"verify", "module-rule", th::fixture("so3_star.json"), "--trials", "5",
                  "--seed", "3", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"check\":\"module-rule\"") != std::string::npos);
    CHECK(r.out.find("\"seed\":3") != std::string::npos);
    CHECK(r.out.find("\"trials\":5") != std::string::npos);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("usage and parse errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "no-such-check", th::fixture("so3_star.json")}).code == 2);
    CHECK(run({"verify", "jacobi", th::fixture("so3_star.json"), "--bogus"}).code == 2);
    CHECK(run({"verify", "jacobi", th::fixture("so3_star.json"), "--max-word-length", "9"}).code ==
          2);
    CHECK(run({"bracket", th::fixture("so3_star.json"), "dx1 +", "dx2"}).code == 2);
    CHECK(run({"bracket", th::fixture("so3_star.json"), "dx9", "dx2"}).code == 2);
    CHECK(run({"bracket", "/nonexistent.json", "dx1", "dx2"}).code == 2);
}

TEST_CASE("reports are byte-reproducible for a fixed seed") {
    std::vector<std::string> args = {"verify",  "nikonov", th::fixture("quadratic.json"),
                                     "--trials", "8",      "--seed",
                                     "42"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);

    // A failing run is reproducible too, counterexample included.
    std::vector<std::string> bad = {"verify",  "linfty", th::fixture("nonpoisson.json"),
                                    "--trials", "12",     "--seed",
                                    "7", "--max-word-length", "3"};
    auto c = run(bad);
    auto d = run(bad);
    CHECK(c.code == d.code);
    CHECK(c.out == d.out);
}
