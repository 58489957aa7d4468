#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <dickson/cli.hpp>

using namespace dickson;

namespace {

struct RunOutcome {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

RunOutcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen emits the family with coefficients, matching the library") {
    const RunOutcome r = run({"gen", "--kind", "3", "--n", "3"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j.at("status") == "pass");
    CHECK(j.at("payload").at("family") == "kth-kind");
    CHECK(j.at("payload").at("k") == 2);
    CHECK(j.at("payload").at("coefficients") == to_json(kth_kind(3, 2)));
    CHECK(j.at("payload").at("pretty") == "x^3 - a*x");
}

TEST_CASE("gen with a rational B routes to the Dickson-type family") {
    const RunOutcome r = run({"gen", "--n", "3", "--b", "2"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j.at("payload").at("family") == "dickson-type");
    CHECK(j.at("payload").at("coefficients") == to_json(first_kind(3)));

    const RunOutcome frac = run({"gen", "--n", "2", "--b", "7/3"});
    REQUIRE(frac.code == 0);
    CHECK(frac.json().at("payload").at("coefficients") ==
          to_json(dickson_type(2, Rational(7, 3))));

    // --b and --kind are mutually exclusive
    const RunOutcome both = run({"gen", "--n", "2", "--b", "1", "--kind", "2"});
    CHECK(both.code == 2);
    CHECK(both.err.find("usage error") != std::string::npos);
}

TEST_CASE("verify lemma reports a full pass over the range") {
    const RunOutcome r = run({"verify", "lemma", "--n-max", "16"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j.at("status") == "pass");
    CHECK(j.at("payload").at("checked") == 16);
    CHECK(j.at("payload").at("failures").empty());
    CHECK(j.at("payload").at("table").at("rows").size() == 16);
}

TEST_CASE("verify first and second sweep the classical forms") {
    for (const char* which : {"first", "second"}) {
        const RunOutcome r = run({"verify", which, "--n-max", "12"});
        REQUIRE(r.code == 0);
        CHECK(r.json().at("payload").at("check") == which);
        CHECK(r.json().at("status") == "pass");
    }
    const RunOutcome bad = run({"verify", "first", "--n-min", "5", "--n-max", "2"});
    CHECK(bad.code == 2);
}

TEST_CASE("verify functional passes and honors the seed") {
    const std::vector<std::string> args = {"verify",   "functional", "--n-max", "8",
                                           "--trials", "5",          "--seed",  "42"};
    const RunOutcome r = run(args);
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j.at("payload").at("failures") == 0);
    CHECK(j.at("payload").at("seed") == 42);
    CHECK(run(args).out == r.out);  // byte-identical rerun
}

TEST_CASE("particular prints the worked coefficient vector") {
    const RunOutcome r = run({"particular", "--n", "3", "--a", "1"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j.at("payload").at("b") == Json::array({"0", "-1", "0", "1"}));
    CHECK(j.at("payload").at("verified") == true);

    CHECK(run({"particular", "--n", "3", "--a", "0"}).code == 2);  // ZeroParameter
}

TEST_CASE("decompose reports the zero remainder") {
    const RunOutcome r = run({"decompose", "--n", "4", "--a", "2"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j.at("payload").at("remainder_zero") == true);
    CHECK(j.at("payload").at("remainder_solves_homogeneous") == true);
}

TEST_CASE("fit-stoll returns a verified basis") {
    const RunOutcome r = run({"fit-stoll", "--n", "2", "--k", "0"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j.at("payload").at("dimension").get<int>() >= 2);
    CHECK(j.at("payload").at("verified") == true);
    CHECK(j.at("payload").at("basis").size() ==
          j.at("payload").at("dimension").get<std::size_t>());
}

TEST_CASE("special evaluations round-trip the library values") {
    const RunOutcome g = run({"special", "gamma", "--x", "5"});
    REQUIRE(g.code == 0);
    CHECK(std::abs(g.json().at("payload").at("value").get<double>() - 24.0) < 1e-10);

    const RunOutcome f = run({"special", "2f1", "--a", "1", "--b", "1", "--c", "1",
                              "--z-re", "0.5"});
    REQUIRE(f.code == 0);
    CHECK(std::abs(f.json().at("payload").at("value").at("re").get<double>() - 2.0) < 1e-12);

    const RunOutcome p = run({"special", "p", "--n", "1", "--z", "1.5"});
    REQUIRE(p.code == 0);
    const Complex want = legendre_p_half(LegendreParams(1), 1.5);
    CHECK(p.json().at("payload").at("value").at("re").get<double>() == want.real());
    CHECK(p.json().at("payload").at("value").at("im").get<double>() == want.imag());

    const RunOutcome q = run({"special", "q", "--n", "1", "--z", "2"});
    REQUIRE(q.code == 0);
    CHECK(std::abs(q.json().at("payload").at("value").at("re").get<double>()) < 1e-15);

    const RunOutcome fc = run({"special", "fc", "--n", "2", "--x", "3"});
    REQUIRE(fc.code == 0);
    const Complex hom = homogeneous_eval(2, 1.0, 3.0, Complex(1, 0), Complex(0, 0));
    CHECK(fc.json().at("payload").at("value").at("re").get<double>() == hom.real());

    CHECK(run({"special", "gamma", "--x", "-1"}).code == 2);  // PoleError
}

TEST_CASE("special residual gates on the tolerance") {
    const RunOutcome pass = run({"special", "residual", "--n", "2", "--z", "1.5",
                                 "--which", "q"});
    REQUIRE(pass.code == 0);
    CHECK(pass.json().at("payload").at("residual").get<double>() < 1e-6);

    const RunOutcome fail = run({"special", "residual", "--n", "5", "--z", "1.2",
                                 "--which", "p", "--tol", "1e-12"});
    CHECK(fail.code == 1);
    CHECK(fail.json().at("status") == "fail");
}

TEST_CASE("fit-constants finds the zero constants") {
    const RunOutcome r = run({"fit-constants", "--n", "3"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j.at("payload").at("abs_A").get<double>() < 1e-6);
    CHECK(j.at("payload").at("abs_B").get<double>() < 1e-6);

    const RunOutcome explicit_xs =
        run({"fit-constants", "--n", "2", "--x", "2.2", "--x", "2.8", "--x", "3.5",
             "--x", "4.3"});
    REQUIRE(explicit_xs.code == 0);
    CHECK(explicit_xs.json().at("payload").at("samples").size() == 4);
}

TEST_CASE("ff eval and perm reproduce the worked residues") {
    const RunOutcome e = run({"ff", "eval", "--n", "3", "--k", "2", "--p", "7", "--a",
                              "1", "--x", "2"});
    REQUIRE(e.code == 0);
    CHECK(e.json().at("payload").at("value") == 6);
    CHECK(e.json().at("payload").at("exact_agrees") == true);

    const RunOutcome perm = run({"ff", "perm", "--n", "5", "--p", "7", "--a", "1"});
    REQUIRE(perm.code == 0);
    CHECK(perm.json().at("payload").at("is_permutation") == true);

    const RunOutcome all = run({"ff", "perm", "--n", "3", "--k", "2", "--p", "5",
                                "--all-a"});
    REQUIRE(all.code == 0);
    const Json rows = all.json().at("payload").at("table").at("rows");
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == Json::array({1, false}));  // x^3 - x is 3-to-1 at 0

    CHECK(run({"ff", "eval", "--n", "3", "--p", "6", "--a", "1", "--x", "2"}).code == 2);
}

TEST_CASE("verify ff agrees with the recurrence oracle on a small box") {
    const RunOutcome r = run({"verify", "ff", "--p-max", "12", "--n-max", "6",
                              "--k-max", "2"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j.at("payload").at("failures") == 0);
    CHECK(j.at("payload").at("checked").get<long>() > 0);
}

TEST_CASE("usage errors exit 2 with a diagnostic") {
    const RunOutcome none = run({});
    CHECK(none.code == 2);
    const RunOutcome unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("usage error") != std::string::npos);
    const RunOutcome missing = run({"gen"});
    CHECK(missing.code == 2);  // --n is required
    const RunOutcome badfmt = run({"gen", "--n", "2", "--format", "yaml"});
    CHECK(badfmt.code == 2);
}

TEST_CASE("text and csv formats") {
    const RunOutcome text = run({"verify", "lemma", "--n-max", "4", "--format", "text"});
    REQUIRE(text.code == 0);
    CHECK(text.out == "PASS lemma n=1..4 (0ms)\n");

    const RunOutcome csv = run({"special", "p", "--n", "1", "--z-min", "1.2", "--z-max",
                                "2.0", "--steps", "3", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("x,re,im,residual\n", 0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);  // header + 3 rows

    const RunOutcome bad = run({"gen", "--n", "2", "--format", "csv"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("reports are byte-identical across thread counts") {
    const std::vector<std::string> args = {"verify", "lemma", "--n-max", "10"};
    const RunOutcome base = run(args);
    REQUIRE(base.code == 0);
    ::setenv("DICKSON_THREADS", "3", 1);
    const RunOutcome threaded = run(args);
    ::unsetenv("DICKSON_THREADS");
    CHECK(threaded.out == base.out);
}

TEST_CASE("--out writes the report to a file and keeps stdout quiet") {
    const std::string path = "/tmp/dickson_cli_out_test.json";
    const RunOutcome r = run({"gen", "--n", "2", "--out", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream body;
    body << in.rdbuf();
    const Json j = Json::parse(body.str());
    CHECK(j.at("status") == "pass");
    CHECK(j.at("payload").at("coefficients") == to_json(kth_kind(2, 0)));
    std::remove(path.c_str());
}

TEST_CASE("timing is suppressed unless requested") {
    const RunOutcome off = run({"gen", "--n", "2"});
    CHECK(off.json().at("timing_ms") == 0);
    const RunOutcome on = run({"gen", "--n", "2", "--timing"});
    CHECK(on.json().at("timing_ms").get<long long>() >= 0);
}
