#include "cli.hh"
#include "report.hh"

#include <drg/pipeline.hh>

#include <doctest.h>

#include <sstream>

using namespace drg;
using nlohmann::json;

namespace
{
    auto run(std::vector<std::string> args, std::string * err_text = nullptr) -> std::pair<int, std::string>
    {
        std::ostringstream out, err;
        int status = cli::run(args, out, err);
        if (err_text)
            *err_text = err.str();
        return { status, out.str() };
    }

    auto data(const std::string & name) -> std::string
    {
        return std::string{ DRG_TEST_DATA } + "/" + name;
    }

    auto analysis(const std::string & name, bool probe = false) -> LatticeReport
    {
        auto algebra = prepare(build_named(name), name);
        AnalysisOptions options;
        options.probe = probe;
        return analyze(algebra, options);
    }
}

TEST_CASE("significant-digit rounding")
{
    CHECK(cli::round_significant(1.0 / 3.0) == 0.333333333333);
    CHECK(cli::round_significant(123456.7890123456) == 123456.789012);
    CHECK(cli::round_significant(0.0) == 0.0);
    CHECK(cli::round_significant(-2.5e-17) == -2.5e-17);
}

TEST_CASE("structured report round-trips dimensions and verdicts")
{
    auto report = analysis("hypercube:3", true);
    auto text = cli::report_json(report).dump();
    auto doc = json::parse(text);
    CHECK(doc["schema"] == 1);
    CHECK(doc["graph"]["name"] == "hypercube:3");
    CHECK(doc["base_vertex"] == 0);
    CHECK(doc["pair_classification"]["P"] == 5);
    REQUIRE(doc["nodes"].size() == report.nodes.size());
    for (size_t r = 0 ; r < report.nodes.size() ; ++r) {
        CHECK(doc["nodes"][r]["name"] == report.nodes[r].name);
        CHECK(doc["nodes"][r]["numeric_dim"] == report.nodes[r].numeric.dim());
        CHECK(doc["nodes"][r]["closed_dim"] == report.nodes[r].closed_dim);
    }
    REQUIRE(doc["edges"].size() == 9);
    for (size_t r = 0 ; r < report.edges.size() ; ++r) {
        CHECK(doc["edges"][r]["lower"] == report.edges[r].lower);
        CHECK(doc["edges"][r]["numeric_dim"] == report.edges[r].complement.dim());
    }
    REQUIRE(doc["verdicts"].size() == report.verdicts.size());
    for (size_t r = 0 ; r < report.verdicts.size() ; ++r) {
        CHECK(doc["verdicts"][r]["name"] == report.verdicts[r].name);
        CHECK(doc["verdicts"][r]["passed"] == report.verdicts[r].passed);
        CHECK(doc["verdicts"][r]["residual"].get<double>() == cli::round_significant(report.verdicts[r].residual));
    }
    CHECK(doc["probe"]["T"] == 20);
    CHECK(doc["passed"] == true);
}

TEST_CASE("text report rows")
{
    std::ostringstream out;
    cli::write_text(out, analysis("hypercube:3"));
    CHECK(out.str().find("MM*+M*M  dim 20") != std::string::npos);
    CHECK(out.str().find("P = 5") != std::string::npos);
    CHECK(out.str().find("0 failed") != std::string::npos);
}

TEST_CASE("diagram labels")
{
    std::ostringstream cube, cycle;
    cli::write_dot(cube, analysis("hypercube:3"));
    cli::write_dot(cycle, analysis("cycle:7"));
    CHECK(cube.str().find("rankdir=BT") != std::string::npos);
    CHECK(cube.str().find("label=\"MM*∩M*M\\ndim=12\"") != std::string::npos);
    CHECK(cube.str().find("label=\"ℂI\\ndim=1\"") != std::string::npos);
    CHECK(cube.str().find("n3 -> n4 [label=\"⊥dim=5\"]") != std::string::npos);
    CHECK(cycle.str().find("n3 -> n4 [label=\"⊥dim=0\"]") != std::string::npos);
    CHECK(cycle.str().find("ℂI\\ndim=1") != std::string::npos);
}

TEST_CASE("command line: analyze")
{
    auto [status, out] = run({ "analyze", "--graph", "hypercube:3", "--format", "text" });
    CHECK(status == 0);
    CHECK(out.find("MM*+M*M  dim 20") != std::string::npos);
    CHECK(out.find("P = 5") != std::string::npos);

    auto [cycle_status, cycle_out] = run({ "analyze", "--graph", "cycle:7" });
    CHECK(cycle_status == 0);
    CHECK(cycle_out.find("P = 0") != std::string::npos);
    CHECK(cycle_out.find("FAIL") == std::string::npos);

    auto [file_status, file_out] = run({ "analyze", "--edges", data("cube.txt"), "--vertex", "5", "--format", "json" });
    CHECK(file_status == 0);
    CHECK(json::parse(file_out)["base_vertex"] == 5);
}

TEST_CASE("command line: input errors exit with status 2")
{
    std::string err;
    CHECK(run({ "analyze", "--edges", data("path_5.txt") }, &err).first == 2);
    CHECK(err.find("not distance-regular") != std::string::npos);
    CHECK(err.find("|Γ_") != std::string::npos);

    CHECK(run({ "analyze", "--edges", data("two_triangles.txt") }).first == 2);
    CHECK(run({ "analyze", "--edges", data("missing.txt") }).first == 2);
    CHECK(run({ "analyze" }).first == 2);
    CHECK(run({ "analyze", "--graph", "cycle:7", "--edges", data("cube.txt") }).first == 2);
    CHECK(run({ "analyze", "--graph", "cycle:7", "--format", "xml" }).first == 2);
    CHECK(run({ "analyze", "--graph", "cycle:7", "--vertex", "7" }).first == 2);
    CHECK(run({ "analyze", "--graph", "cycle:7", "--tol", "-1" }).first == 2);
    CHECK(run({ "frobnicate" }).first == 2);
    CHECK(run({ "verify", "--graph", "cycle:7", "--lemma", "9.9" }).first == 2);
    CHECK(run({ "--help" }).first == 0);
}

TEST_CASE("command line: an unattainable tolerance is a verification failure")
{
    auto [status, out] = run({ "verify", "--graph", "johnson:6,3", "--tol", "1e-30" });
    CHECK(status == 1);
    CHECK(out.find("FAIL") != std::string::npos);
}

TEST_CASE("command line: verify")
{
    auto [status, out] = run({ "verify", "--graph", "hamming:3,3" });
    CHECK(status == 0);
    CHECK(out.find("FAIL") == std::string::npos);

    auto [product_status, product_out] = run({ "verify", "--graph", "hypercube:4", "--lemma", "5.1" });
    CHECK(product_status == 0);
    int lines = 0;
    std::istringstream in{ product_out };
    for (std::string line ; std::getline(in, line) ;)
        lines += line.starts_with("PASS [5.1]");
    CHECK(lines == 625);
    CHECK(product_out.find("625 identities checked, 0 failed") != std::string::npos);

    auto [family_status, family_out] = run({ "verify", "--graph", "cycle:7", "--lemma", "4.*", "--format", "json" });
    CHECK(family_status == 0);
    for (const auto & v : json::parse(family_out)["verdicts"])
        CHECK(v["tag"].get<std::string>().starts_with("4."));
}

TEST_CASE("command line: diagram and all vertices")
{
    auto [status, out] = run({ "diagram", "--graph", "hypercube:3", "--probe" });
    CHECK(status == 0);
    CHECK(out.find("MM*∩M*M\\ndim=12") != std::string::npos);
    CHECK(out.find("MM*M\\ndim=20") != std::string::npos);

    auto [all_status, all_out] = run({ "analyze", "--graph", "cycle:6", "--all-vertices", "--format", "json" });
    CHECK(all_status == 0);
    auto doc = json::parse(all_out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 6);
    for (size_t x = 0 ; x < doc.size() ; ++x)
        CHECK(doc[x]["base_vertex"] == x);
}

TEST_CASE("output is deterministic")
{
    auto first = run({ "analyze", "--graph", "johnson:6,3", "--format", "json", "--probe" });
    auto second = run({ "analyze", "--graph", "johnson:6,3", "--format", "json", "--probe" });
    CHECK(first == second);
}

TEST_CASE("identity suite tags and filter")
{
    CHECK(matches_tag("5.*", "5.11"));
    CHECK(matches_tag("5.1", "5.1"));
    CHECK_FALSE(matches_tag("5.1", "5.11"));
    CHECK_FALSE(matches_tag("4.*", "5.1"));
    auto algebra = prepare(build_named("cycle:7"), "cycle:7");
    auto verdicts = verify_identities(algebra, {});
    for (const auto & v : verdicts)
        CHECK_MESSAGE(v.passed, v.name);
}
