#include "oracles.hh"

#include <drg/errors.hh>
#include <drg/graph.hh>

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

using namespace drg;

namespace
{
    auto open_data(const std::string & name) -> std::ifstream
    {
        std::ifstream in{ std::string{ DRG_TEST_DATA } + "/" + name };
        REQUIRE(in);
        return in;
    }

    auto error_of(const std::string & text) -> std::string
    {
        std::istringstream in{ text };
        try {
            load_edge_list(in);
        }
        catch (const InputError & e) {
            return e.what();
        }
        return "";
    }
}

TEST_CASE("named graphs have the expected size and diameter")
{
    struct Row { const char * name; int n, d; };
    for (auto [name, n, d] : { Row{ "hypercube:3", 8, 3 }, Row{ "hypercube:4", 16, 4 }, Row{ "hamming:3,3", 27, 3 },
            Row{ "johnson:6,3", 20, 3 }, Row{ "johnson:7,3", 35, 3 }, Row{ "cycle:7", 7, 3 }, Row{ "cycle:6", 6, 3 } }) {
        CAPTURE(name);
        auto g = build_named(name);
        CHECK(g.size() == n);
        CHECK(g.diameter() == d);
    }
}

TEST_CASE("Hamming graph distances agree with direct word comparison")
{
    for (auto [d, q] : { std::pair{ 3, 3 }, std::pair{ 4, 2 }, std::pair{ 3, 4 } }) {
        auto g = build_named(Family::hamming, std::vector{ d, q });
        auto expected = oracle::hamming_distances(d, q);
        for (int x = 0 ; x < g.size() ; ++x)
            for (int y = 0 ; y < g.size() ; ++y)
                REQUIRE(g.distance(x, y) == expected[x][y]);
    }
}

TEST_CASE("breadth-first distances agree with Floyd-Warshall")
{
    for (auto name : { "johnson:6,3", "cycle:9", "hamming:3,3" }) {
        auto g = build_named(name);
        auto expected = oracle::floyd_distances(g);
        for (int x = 0 ; x < g.size() ; ++x)
            for (int y = 0 ; y < g.size() ; ++y)
                REQUIRE(g.distance(x, y) == expected[x][y]);
    }
}

TEST_CASE("intersection arrays of the corpus")
{
    struct Row { const char * name; std::vector<std::int64_t> b, c; };
    for (const auto & [name, b, c] : { Row{ "hypercube:3", { 3, 2, 1 }, { 1, 2, 3 } }, Row{ "cycle:7", { 2, 1, 1 }, { 1, 1, 1 } },
            Row{ "hamming:3,3", { 6, 4, 2 }, { 1, 2, 3 } }, Row{ "johnson:6,3", { 9, 4, 1 }, { 1, 4, 9 } },
            Row{ "hypercube:4", { 4, 3, 2, 1 }, { 1, 2, 3, 4 } } }) {
        CAPTURE(name);
        auto ia = intersection_array(build_named(name));
        CHECK(ia.b == b);
        CHECK(ia.c == c);
        for (int i = 0 ; i <= ia.diameter ; ++i)
            CHECK(ia.a[i] + ia.b_at(i) + ia.c_at(i) == ia.valency());
    }
}

TEST_CASE("intersection numbers agree with brute-force counts at every pair")
{
    for (auto name : { "hypercube:3", "johnson:6,3", "cycle:7" }) {
        auto g = build_named(name);
        auto ia = intersection_array(g);
        auto dist = oracle::floyd_distances(g);
        for (int x = 0 ; x < g.size() ; ++x)
            for (int y = 0 ; y < g.size() ; ++y)
                for (int i = 0 ; i <= ia.diameter ; ++i)
                    for (int j = 0 ; j <= ia.diameter ; ++j)
                        REQUIRE(oracle::count(dist, x, y, i, j) == ia.p(dist[x][y], i, j));
    }
}

TEST_CASE("intersection array is invariant under relabelling")
{
    std::mt19937 rng{ 17 };
    for (auto name : { "hypercube:4", "johnson:6,3", "hamming:3,3" }) {
        auto g = build_named(name);
        std::vector<int> perm(g.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = g.relabelled(perm);
        auto a = intersection_array(g), b = intersection_array(h);
        CHECK(a.tensor == b.tensor);
        std::vector<int> da, db;
        for (int x = 0 ; x < g.size() ; ++x)
            for (int y = 0 ; y < g.size() ; ++y) {
                da.push_back(g.distance(x, y));
                db.push_back(h.distance(x, y));
            }
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        CHECK(da == db);
        CHECK(h.distance(perm[1], perm[2]) == g.distance(1, 2));
    }
}

TEST_CASE("path on five vertices is rejected with a counting witness")
{
    auto in = open_data("path_5.txt");
    auto g = load_edge_list(in);
    auto check = check_distance_regular(g);
    CHECK_FALSE(check.distance_regular);
    REQUIRE(check.witness);
    const auto & w = *check.witness;
    CHECK(g.distance(w.x, w.y) == w.h);
    CHECK(g.distance(w.other_x, w.other_y) == w.h);
    CHECK(w.count != w.other_count);

    auto dist = oracle::floyd_distances(g);
    CHECK(oracle::count(dist, w.x, w.y, w.i, w.j) == w.count);
    CHECK(oracle::count(dist, w.other_x, w.other_y, w.i, w.j) == w.other_count);
    CHECK_THROWS_AS(intersection_array(g), InputError);
    CHECK(describe(w).find("not distance-regular") != std::string::npos);
}

TEST_CASE("edge list of the cube loads and matches the named hypercube")
{
    auto in = open_data("cube.txt");
    auto g = load_edge_list(in);
    CHECK(g.size() == 8);
    CHECK(intersection_array(g).tensor == intersection_array(build_named("hypercube:3")).tensor);
}

TEST_CASE("edge list errors carry line numbers")
{
    CHECK(error_of("4\n0 1\n1 2\n2 x\n").find("line 4") != std::string::npos);
    CHECK(error_of("4\n0 1\n1 1\n").find("line 3") != std::string::npos);
    CHECK(error_of("4\n0 1\n1 0\n").find("line 3") != std::string::npos);
    CHECK(error_of("3\n0 5\n").find("line 2") != std::string::npos);
    CHECK(error_of("3\n0 1 2\n").find("line 2") != std::string::npos);
    CHECK(error_of("# nothing\n\n").find("empty") != std::string::npos);
    CHECK_THROWS_AS([] { auto in = open_data("two_triangles.txt"); load_edge_list(in); }(), InputError);
    CHECK_THROWS_AS([] { auto in = open_data("self_loop.txt"); load_edge_list(in); }(), InputError);
    CHECK_THROWS_AS([] { auto in = open_data("bad_token.txt"); load_edge_list(in); }(), InputError);
}

TEST_CASE("graph construction rejects bad inputs")
{
    std::vector<Edge> loop{ { 0, 0 } };
    CHECK_THROWS_AS(Graph::from_edges(2, loop), InputError);
    std::vector<Edge> none;
    CHECK_THROWS_AS(Graph::from_edges(0, none), InputError);
    CHECK_THROWS_AS(Graph::from_edges(2000, none), InputError);
    CHECK_THROWS_AS(build_named("hypercube:2"), InputError);
    CHECK_THROWS_AS(build_named("cycle:5"), InputError);
    CHECK_THROWS_AS(build_named("johnson:6,2"), InputError);
    CHECK_THROWS_AS(build_named("petersen"), InputError);
    CHECK_THROWS_AS(build_named("hamming:3"), InputError);
    CHECK_THROWS_AS(build_named("hamming:3,x"), InputError);
    CHECK_THROWS_AS(build_named("hypercube:11"), InputError);
    CHECK(family_name(parse_family("johnson")) == "johnson");
}
