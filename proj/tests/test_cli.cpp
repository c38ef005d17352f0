#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "suites.hpp"

using namespace spinlab;
using suites::json;

namespace {

struct Result {
    int code;
    std::string out, err;
    json report() const { return json::parse(out); }
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("complex parsing")
{
    CHECK(suites::parse_complex("1.3") == cplx(1.3, 0));
    CHECK(suites::parse_complex("0.7+0.2i") == cplx(0.7, 0.2));
    CHECK(suites::parse_complex("-2i") == cplx(0, -2));
    CHECK(suites::parse_complex("i") == cplx(0, 1));
    CHECK(suites::parse_complex("-i") == cplx(0, -1));
    CHECK(suites::parse_complex("0.7,0.2") == cplx(0.7, 0.2));
    CHECK(suites::parse_complex("1e-3-2e+1i") == cplx(1e-3, -20));
    CHECK_THROWS_AS(suites::parse_complex("1.3x"), std::invalid_argument);
    CHECK_THROWS_AS(suites::parse_complex(""), std::invalid_argument);
}

TEST_CASE("verify suites and exit codes")
{
    CHECK(run({"verify", "ybe", "--model", "xxx", "--trials", "100", "--seed", "7"}).code == 0);
    CHECK(run({"verify", "ybe", "--model", "xxz", "--q", "0.9+0.3i"}).code == 0);
    CHECK(run({"verify", "fermion", "--L", "6"}).code == 0);
    CHECK(run({"verify", "fcr", "--model", "xxz", "--L", "5"}).code == 0);
    CHECK(run({"verify", "vectors", "--L", "5", "--M", "2"}).code == 0);
    CHECK(run({"verify", "hecke-algebra", "--n", "5"}).code == 0);
    CHECK(run({"verify", "log-derivative"}).code == 0);

    // q^4 = 1 is guarded
    const Result r = run({"verify", "ybe", "--model", "xxz", "--q", "i"});
    CHECK(r.code == 2);
    CHECK(r.err.find("root of unity") != std::string::npos);
    CHECK(run({"verify", "ybe", "--model", "xxz", "--q", "-1.0000001"}).code == 2);
    CHECK(run({"verify", "nosuch"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "ybe", "--format", "xml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("a tolerance below round-off makes a suite fail with exit 1")
{
    const Result r = run({"verify", "fcr", "--model", "xxx", "--L", "6", "--tol", "1e-30"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.report()["pass"].get<bool>());
}

TEST_CASE("bethe examples")
{
    const Result a = run({"bethe", "--model", "xxx", "--L", "4", "--M", "1"});
    REQUIRE(a.code == 0);
    CHECK(a.report()["sets"].size() == 3);

    const Result b = run({"bethe", "--model", "polaron", "--L", "6", "--M", "1", "--q", "1.3"});
    REQUIRE(b.code == 0);
    const json sets = b.report()["sets"];
    REQUIRE(sets.size() == 6);
    for (const auto& s : sets) {
        const cplx x(s["roots"][0][0].get<double>(), s["roots"][0][1].get<double>());
        CHECK(std::abs(std::pow(x, 6) - 1.0) < 1e-11);
    }

    const Result c = run({"bethe", "--model", "xxz", "--L", "4", "--M", "2", "--q", "1.3"});
    REQUIRE(c.code == 0);
    const json xxz = c.report();
    for (const auto& s : xxz["sets"]) CHECK(s["ed_distance"].get<double>() < 1e-7);

    CHECK(run({"bethe", "--model", "xxx", "--L", "4", "--M", "5"}).code == 2);
    CHECK(run({"bethe", "--model", "heisenberg"}).code == 2);
}

TEST_CASE("spectrum examples")
{
    const Result a = run({"spectrum", "--model", "polaron", "--L", "4", "--q", "1.3", "--format", "csv"});
    REQUIRE(a.code == 0);
    int counts[5] = {};
    std::istringstream in(a.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "M,index,eigenvalue_re");
    while (std::getline(in, line)) ++counts[std::stoi(line.substr(0, line.find(',')))];
    CHECK(counts[0] == 1);
    CHECK(counts[1] == 4);
    CHECK(counts[2] == 6);
    CHECK(counts[3] == 4);
    CHECK(counts[4] == 1);

    const Result b = run({"spectrum", "--model", "xxz-closed", "--L", "2"});
    REQUIRE(b.code == 0);
    std::size_t total = 0;
    const json spec = b.report();
    for (const auto& s : spec["sectors"]) total += s["eigenvalues"].size();
    CHECK(total == 4);

    CHECK(run({"spectrum", "--model", "polaron", "--L", "4", "--sector", "5"}).code == 2);
    CHECK(run({"spectrum", "--model", "polaron", "--L", "4", "--sector", "-1"}).code == 2);
    CHECK(run({"spectrum", "--model", "polaron", "--L", "16"}).code == 1);
    CHECK(run({"spectrum", "--model", "polaron", "--L", "16", "--sector", "1"}).code == 0);
}

TEST_CASE("csv warns when imaginary parts are dropped")
{
    const Result a = run({"spectrum", "--model", "polaron", "--L", "4", "--q", "0.7+0.2i", "--format", "csv"});
    CHECK(a.code == 0);
    CHECK(a.err.find("imaginary") != std::string::npos);
    const Result b = run({"spectrum", "--model", "polaron", "--L", "4", "--q", "1.3", "--format", "csv"});
    CHECK(b.err.empty());
}

TEST_CASE("compare examples")
{
    for (const char* L : {"4", "6"}) {
        const Result r = run({"compare", "--L", L, "--q", "1.3"});
        REQUIRE(r.code == 0);
        bool even_differs = false;
        const json rep = r.report();
        for (const auto& s : rep["sectors"]) {
            if (s["M"].get<int>() % 2) CHECK(s["equal"].get<bool>());
            if (s["M"].get<int>() % 2 == 0 && !s["equal"].get<bool>()) {
                even_differs = true;
                CHECK(s["diff"]["only_polaron"].size() + s["diff"]["only_xxz"].size() > 0);
            }
        }
        CHECK(even_differs);
    }
    CHECK(run({"compare", "--L", "3"}).code == 0);
}

TEST_CASE("hecke examples")
{
    const Result a = run({"hecke", "--n", "6", "--q", "1.3"});
    REQUIRE(a.code == 0);
    const json irreps = a.report()["irreps"];
    CHECK(irreps.size() == 11);
    for (const auto& ir : irreps)
        for (const auto& [label, v] : ir["factor_residuals"].items()) CHECK(v.get<double>() < 1e-6);

    const Result b = run({"hecke", "--n", "10", "--diagram", "8,2"});
    REQUIRE(b.code == 0);
    CHECK(b.report()["irreps"][0]["short_degree"] == 15);
    CHECK(b.report()["irreps"][0]["long_degree"] == 20);

    CHECK(run({"hecke", "--n", "14"}).code == 2);
    CHECK(run({"hecke", "--n", "7", "--diagram", "4,3"}).code == 2);
    CHECK(run({"hecke", "--n", "6", "--diagram", "4,1"}).code == 2);
    CHECK(run({"hecke", "--n", "6", "--diagram", "2,3,1"}).code == 2);
}

TEST_CASE("vector output lists the M sector")
{
    const Result r = run({"vector", "--model", "xxx", "--L", "5", "--roots", "0.3+0.1i; -0.2"});
    REQUIRE(r.code == 0);
    const json j = r.report();
    CHECK(j["M"] == 2);
    CHECK(j["entries"].size() == 10);
    CHECK(j["off_sector_weight"].get<double>() == 0.0);

    // four forms agree entrywise on XXX
    std::vector<json> forms;
    for (const char* f : {"algebraic", "coordinate", "fermionic", "inhomogeneous"})
        forms.push_back(run({"vector", "--model", "xxx", "--L", "5", "--roots", "0.3+0.1i;-0.2", "--form", f})
                            .report()["entries"]);
    for (std::size_t k = 1; k < forms.size(); ++k)
        for (std::size_t i = 0; i < forms[0].size(); ++i) {
            CHECK(std::abs(forms[k][i]["re"].get<double>() - forms[0][i]["re"].get<double>()) < 1e-12);
            CHECK(std::abs(forms[k][i]["im"].get<double>() - forms[0][i]["im"].get<double>()) < 1e-12);
        }
    CHECK(run({"vector", "--model", "xxx", "--L", "2", "--roots", "1;2;3"}).code == 2);
    CHECK(run({"vector", "--model", "xxx", "--L", "4", "--roots", "1", "--form", "magic"}).code == 2);
}

TEST_CASE("config file with flag override and byte-identical reruns")
{
    const std::string cfg = "test_cli_config.toml", out1 = "test_cli_a.json", out2 = "test_cli_b.json";
    std::ofstream(cfg) << "model = \"xxz\"\nL = 6\nM = 2\nq = \"1.3\"\nseed = 5\nstarts = 60\n";
    REQUIRE(run({"bethe", "--config", cfg, "--out", out1}).code == 0);
    REQUIRE(run({"bethe", "--config", cfg, "--out", out2}).code == 0);
    auto slurp = [](const std::string& p) {
        std::ifstream f(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(f), {});
    };
    const std::string a = slurp(out1);
    CHECK_FALSE(a.empty());
    CHECK(a == slurp(out2));
    const json j = json::parse(a);
    CHECK(j["model"] == "xxz");
    CHECK(j["L"] == 6);
    CHECK(j["starts"] == 60);

    const Result o = run({"bethe", "--config", cfg, "--M", "1"});
    CHECK(o.report()["M"] == 1);
    CHECK(run({"bethe", "--config", "missing.toml"}).code == 2);
    for (const auto& p : {cfg, out1, out2}) std::remove(p.c_str());
}

TEST_CASE("different seeds give different trial samples")
{
    const json a = run({"verify", "decomposition", "--seed", "1"}).report();
    const json b = run({"verify", "decomposition", "--seed", "2"}).report();
    CHECK(a["cuts"] != b["cuts"]);
    CHECK(run({"verify", "decomposition", "--seed", "1"}).out == a.dump(2) + "\n");
}
