#ifndef DRG_PIPELINE_HH
#define DRG_PIPELINE_HH

#include <drg/bose_mesner.hh>
#include <drg/dual_algebra.hh>
#include <drg/graph.hh>
#include <drg/lattice.hh>

#include <string>
#include <string_view>
#include <vector>

namespace drg
{
    /// Everything that does not depend on the base vertex.
    struct Algebra
    {
        std::string name;
        Graph graph;
        IntersectionArray array;
        Spectrum spectrum;
        BoseMesner bose_mesner;
    };

    /// Throws InputError (carrying the counting witness) when the graph is not
    /// distance-regular, and VerificationError when a construction check fails.
    auto prepare(Graph graph, std::string name, Tolerance tolerance = {}) -> Algebra;

    struct AnalysisOptions
    {
        int base_vertex = 0;
        Tolerance tolerance;
        bool probe = false;
        ProbeOptions depth;
        SpanOptions span;
    };

    auto summarize(const Algebra & algebra) -> GraphSummary;

    /// Lattice report for one base vertex, including the product law,
    /// primitivity, and (optionally) the probe.
    auto analyze(const Algebra & algebra, const AnalysisOptions & options) -> LatticeReport;

    /// The batch identity suite, one verdict per checked identity. Tags:
    /// 3.1 sandwiches E*AE* and EA*E, 3.2 zero tests, 3.3 sandwiches AE*A,
    /// 4.1 traces, 4.2 orthogonality, 4.3 <A_i, A*_j>, 5.1 product inner
    /// products, 5.6 Gram matrices, 5.9 degenerate pairs, 5.11 primitivity.
    auto verify_identities(const Algebra & algebra, const AnalysisOptions & options) -> std::vector<Verdict>;

    /// "5.1" matches itself only; "5.*" matches every tag starting with "5.".
    auto matches_tag(std::string_view filter, std::string_view tag) -> bool;
}

#endif
