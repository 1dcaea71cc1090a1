#include "fixtures.hh"
#include "oracles.hh"

#include <drg/bose_mesner.hh>
#include <drg/errors.hh>
#include <drg/tridiagonal.hh>

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include <random>

using namespace drg;

TEST_CASE("tridiagonal eigenvalues agree with a dense solver")
{
    std::mt19937 rng{ 5 };
    std::uniform_real_distribution<double> entry{ -3.0, 3.0 };
    for (int size : { 1, 2, 3, 5, 8, 13, 30 })
        for (int trial = 0 ; trial < 5 ; ++trial) {
            std::vector<double> d(size), e(size > 0 ? size - 1 : 0);
            Eigen::MatrixXd t = Eigen::MatrixXd::Zero(size, size);
            for (int r = 0 ; r < size ; ++r)
                t(r, r) = d[r] = entry(rng);
            for (int r = 0 ; r + 1 < size ; ++r) {
                e[r] = trial == 0 && r % 2 ? 0.0 : entry(rng);
                t(r, r + 1) = t(r + 1, r) = e[r];
            }
            auto got = symmetric_tridiagonal_eigenvalues(d, e);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
            REQUIRE(got.size() == static_cast<size_t>(size));
            for (int r = 0 ; r < size ; ++r)
                CHECK(got[r] == doctest::Approx(solver.eigenvalues()(r)).epsilon(1e-12).scale(10.0));
        }
}

TEST_CASE("tridiagonal eigenvalues of the path matrix")
{
    const int size = 6;
    std::vector<double> d(size, 0.0), e(size - 1, 1.0);
    auto got = symmetric_tridiagonal_eigenvalues(d, e);
    for (int r = 0 ; r < size ; ++r)
        CHECK(got[r] == doctest::Approx(2.0 * std::cos(M_PI * (size - r) / (size + 1))).epsilon(1e-13));
}

TEST_CASE("spectrum agrees with the dense adjacency eigendecomposition")
{
    for (auto name : fixture::corpus) {
        CAPTURE(name);
        fixture::Setup s{ name };
        auto spaces = oracle::eigenspaces(s.graph());
        const auto & spec = s.algebra.spectrum;
        REQUIRE(spec.theta.size() == spaces.theta.size());
        for (size_t j = 0 ; j < spec.theta.size() ; ++j) {
            CHECK(spec.theta[j] == doctest::Approx(spaces.theta[j]).epsilon(1e-10));
            CHECK(spec.multiplicities[j] == spaces.multiplicity[j]);
            for (int i = 0 ; i <= s.diameter() ; ++i)
                CHECK(spec.u(i, j) == doctest::Approx(oracle::cosine(s.graph(), spaces, i, static_cast<int>(j))).epsilon(1e-10));
        }
    }
}

TEST_CASE("hypercube spectrum and cosines")
{
    fixture::Setup s{ "hypercube:3" };
    const auto & spec = s.algebra.spectrum;
    const double theta[] = { 3.0, 1.0, -1.0, -3.0 };
    for (int j = 0 ; j < 4 ; ++j)
        CHECK(spec.theta[j] == doctest::Approx(theta[j]).epsilon(1e-13));
    CHECK(spec.multiplicities == std::vector<std::int64_t>{ 1, 3, 3, 1 });
    CHECK(spec.u(1, 1) == doctest::Approx(1.0 / 3.0));
    CHECK(spec.u(3, 3) == doctest::Approx(-1.0));
    CHECK(spec.u(2, 3) == doctest::Approx(1.0));
}

TEST_CASE("distance matrices satisfy the exact product law")
{
    for (auto name : fixture::corpus) {
        fixture::Setup s{ name };
        CHECK(product_law_error(s.algebra.bose_mesner.distance, s.algebra.array) == 0);
    }
    auto bad = intersection_array(build_named("hypercube:3"));
    bad.tensor[bad.tensor.size() - 1] += 1;
    CHECK(product_law_error(distance_matrices(build_named("hypercube:3")), bad) > 0);
}

TEST_CASE("primitive idempotents match the eigenspace projectors")
{
    for (auto name : fixture::corpus) {
        fixture::Setup s{ name };
        auto spaces = oracle::eigenspaces(s.graph());
        for (int j = 0 ; j <= s.diameter() ; ++j)
            CHECK(max_abs(s.algebra.bose_mesner.idempotents[j] - spaces.projector[j]) < 1e-10);
    }
}

TEST_CASE("Krein parameters agree with the cosine-sum formula and are nonnegative")
{
    for (auto name : fixture::corpus) {
        CAPTURE(name);
        fixture::Setup s{ name };
        auto spaces = oracle::eigenspaces(s.graph());
        const auto & q = s.algebra.bose_mesner.krein;
        for (int h = 0 ; h <= s.diameter() ; ++h)
            for (int i = 0 ; i <= s.diameter() ; ++i)
                for (int j = 0 ; j <= s.diameter() ; ++j) {
                    CHECK(q.q(h, i, j) == doctest::Approx(oracle::krein(s.graph(), spaces, h, i, j)).epsilon(1e-9).scale(1.0));
                    CHECK(q.q(h, i, j) > -1e-9);
                }
    }
}

TEST_CASE("spectrum rejects an intersection array that is not realizable")
{
    auto ia = intersection_array(build_named("hypercube:3"));
    CHECK_THROWS_AS(spectrum(ia, 9), VerificationError);
    Tolerance silly;
    silly.base = 1e-30;
    CHECK_THROWS_AS(spectrum(intersection_array(build_named("johnson:6,3")), 20, silly), VerificationError);
}
