#ifndef DRG_TESTS_FIXTURES_HH
#define DRG_TESTS_FIXTURES_HH

#include <drg/pipeline.hh>

#include <string>

namespace fixture
{
    /// One graph with its algebras at a chosen base vertex.
    struct Setup
    {
        drg::Algebra algebra;
        drg::DualAlgebra dual;
        drg::AlgebraView view;

        explicit Setup(const std::string & description, int x = 0, drg::Tolerance tolerance = {}) :
            algebra(drg::prepare(drg::build_named(description), description, tolerance)),
            dual(drg::dual_algebra(algebra.graph, algebra.bose_mesner, algebra.spectrum, x, tolerance)),
            view{ algebra.array, algebra.spectrum, algebra.bose_mesner, dual, tolerance }
        {
        }

        Setup(const Setup &) = delete;

        auto graph() const -> const drg::Graph & { return algebra.graph; }
        auto diameter() const -> int { return algebra.array.diameter; }
        auto n() const -> int { return algebra.graph.size(); }
    };

    inline const char * const corpus[] = { "hypercube:3", "hypercube:4", "cycle:7", "hamming:3,3", "johnson:6,3" };
}

#endif
