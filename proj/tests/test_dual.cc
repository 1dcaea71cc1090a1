#include "fixtures.hh"
#include "oracles.hh"

#include <drg/errors.hh>

#include <doctest.h>

using namespace drg;

TEST_CASE("dual distance matrices agree with the eigenspace projectors at every base vertex")
{
    for (auto name : { "hypercube:3", "johnson:6,3" }) {
        auto g = build_named(name);
        auto spaces = oracle::eigenspaces(g);
        for (int x = 0 ; x < g.size() ; ++x) {
            fixture::Setup s{ name, x };
            for (int j = 0 ; j <= s.diameter() ; ++j)
                REQUIRE(max_abs(s.dual.dual_distance_matrix(j) - oracle::dual_distance(g, spaces, j, x)) < 1e-10);
        }
    }
}

TEST_CASE("dual idempotents partition the vertices by distance")
{
    fixture::Setup s{ "hamming:3,3", 5 };
    Matrix total = Matrix::Zero(s.n(), s.n());
    for (int i = 0 ; i <= s.diameter() ; ++i) {
        CHECK(s.dual.dual_idempotents[i].sum() == doctest::Approx(static_cast<double>(s.algebra.array.k[i])));
        for (int y = 0 ; y < s.n() ; ++y)
            CHECK(s.dual.dual_idempotents[i](y) == (s.graph().distance(5, y) == i ? 1.0 : 0.0));
        total += s.dual.dual_idempotent(i);
    }
    CHECK(max_abs(total - Matrix::Identity(s.n(), s.n())) == 0.0);
}

TEST_CASE("invalid base vertex is an input error")
{
    auto g = build_named("cycle:7");
    auto a = prepare(g, "cycle:7");
    CHECK_THROWS_AS(dual_algebra(a.graph, a.bose_mesner, a.spectrum, 7), InputError);
    CHECK_THROWS_AS(dual_algebra(a.graph, a.bose_mesner, a.spectrum, -1), InputError);
}

TEST_CASE("sandwich inner products agree with direct traces for every pair of tuples")
{
    for (auto name : { "hypercube:3", "cycle:7" }) {
        fixture::Setup s{ name };
        const int d = s.diameter();
        for (auto flavor : { TripleFlavor::dual_idempotent_sandwich, TripleFlavor::idempotent_sandwich,
                TripleFlavor::distance_sandwich })
            for (int a = 0 ; a < (d + 1) * (d + 1) * (d + 1) ; ++a)
                for (int b = 0 ; b < (d + 1) * (d + 1) * (d + 1) ; b += 3) {
                    TripleIndex l{ a / ((d + 1) * (d + 1)), (a / (d + 1)) % (d + 1), a % (d + 1) };
                    TripleIndex r{ b / ((d + 1) * (d + 1)), (b / (d + 1)) % (d + 1), b % (d + 1) };
                    auto check = inspect_triple_product(s.view, flavor, l, r);
                    REQUIRE(check.passed());
                }
    }
}

TEST_CASE("sandwich inner products against hand-built matrices")
{
    fixture::Setup s{ "hypercube:3" };
    auto spaces = oracle::eigenspaces(s.graph());
    auto g = s.graph();
    // E*_1 A_1 E*_2: edges from layer 1 to layer 2 of the cube, 6 of them
    Matrix e1 = Matrix::Zero(8, 8), e2 = Matrix::Zero(8, 8);
    for (int y = 0 ; y < 8 ; ++y) {
        e1(y, y) = g.distance(0, y) == 1;
        e2(y, y) = g.distance(0, y) == 2;
    }
    Matrix sandwich = e1 * oracle::distance_matrix(g, 1) * e2;
    CHECK(inner(sandwich, sandwich) == doctest::Approx(6.0));
    CHECK(triple_product_inner(s.view, TripleFlavor::dual_idempotent_sandwich, { 1, 1, 2 }, { 1, 1, 2 }) == doctest::Approx(6.0));

    Matrix other = spaces.projector[1] * oracle::dual_distance(g, spaces, 1) * spaces.projector[2];
    CHECK(triple_product_inner(s.view, TripleFlavor::idempotent_sandwich, { 1, 1, 2 }, { 1, 1, 2 })
            == doctest::Approx(inner(other, other)));
    CHECK(triple_product_closed_form(s.view, TripleFlavor::idempotent_sandwich, { 1, 1, 2 }, { 1, 2, 2 }) == 0.0);
}

TEST_CASE("zero products match vanishing parameters")
{
    for (auto name : { "hypercube:3", "cycle:7", "johnson:6,3", "hamming:3,3" }) {
        fixture::Setup s{ name };
        int zeros = 0;
        for (int h = 0 ; h <= s.diameter() ; ++h)
            for (int i = 0 ; i <= s.diameter() ; ++i)
                for (int j = 0 ; j <= s.diameter() ; ++j)
                    for (auto flavor : { TripleFlavor::dual_idempotent_sandwich, TripleFlavor::idempotent_sandwich }) {
                        auto check = inspect_zero_triple(s.view, h, i, j, flavor);
                        REQUIRE(check.consistent());
                        zeros += check.product_zero;
                        CHECK_NOTHROW(zero_triple_test(s.view, h, i, j, flavor));
                    }
        CHECK(zeros > 0);
    }
    fixture::Setup s{ "cycle:7" };
    CHECK_THROWS_AS(inspect_zero_triple(s.view, 1, 1, 1, TripleFlavor::distance_sandwich), InputError);
    CHECK(parse_flavor(flavor_name(TripleFlavor::idempotent_sandwich)) == TripleFlavor::idempotent_sandwich);
    CHECK_THROWS_AS(parse_flavor("AAA"), InputError);
}

TEST_CASE("an unattainable tolerance fails the dual construction or the sandwiches")
{
    auto a = prepare(build_named("johnson:6,3"), "johnson:6,3");
    Tolerance tiny;
    tiny.base = 1e-30;
    bool failed = false;
    try {
        auto dual = dual_algebra(a.graph, a.bose_mesner, a.spectrum, 0, tiny);
        AlgebraView view{ a.array, a.spectrum, a.bose_mesner, dual, tiny };
        for (int i = 0 ; i <= 3 && ! failed ; ++i)
            for (int j = 0 ; j <= 3 && ! failed ; ++j)
                failed = ! inspect_triple_product(view, TripleFlavor::idempotent_sandwich, { i, j, 1 }, { i, j, 1 }).passed();
    }
    catch (const VerificationError &) {
        failed = true;
    }
    CHECK(failed);
}
