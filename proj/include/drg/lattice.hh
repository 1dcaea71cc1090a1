#ifndef DRG_LATTICE_HH
#define DRG_LATTICE_HH

#include <drg/bose_mesner.hh>
#include <drg/dual_algebra.hh>
#include <drg/graph.hh>
#include <drg/matspace.hh>

#include <optional>
#include <string>
#include <vector>

namespace drg
{
    enum class PairClass
    {
        plus_one,
        minus_one,
        generic
    };

    auto pair_class_name(PairClass c) -> std::string_view;

    /// Which u_i(θ_j) equal +1 or -1, and the count P of such pairs with 1 <= i, j <= D.
    struct PairClassification
    {
        std::vector<std::vector<PairClass>> table; ///< table[i][j] classifies u_i(θ_j)
        int count = 0;                             ///< P

        auto degenerate(int i, int j) const -> bool { return table[i][j] != PairClass::generic; }
        auto diameter() const -> int { return static_cast<int>(table.size()) - 1; }
    };

    /// Values within tolerance of ±1 are degenerate; values within ambiguity
    /// but outside tolerance throw VerificationError instead of being guessed.
    auto classify_pairs(const Spectrum & spectrum, double tolerance = 1e-8, double ambiguity = 1e-4) -> PairClassification;

    /// Whether every distance-i graph, 1 <= i <= D, is connected.
    auto is_primitive(const Graph & graph) -> bool;

    struct PrimitivityVerdict
    {
        bool primitive = false;
        bool count_zero = false;
        std::vector<int> disconnected_distances;
    };

    /// Decides primitivity combinatorially and throws VerificationError unless
    /// it agrees with P = 0.
    auto check_primitivity(const Graph & graph, const PairClassification & pairs) -> PrimitivityVerdict;

    struct Verdict
    {
        std::string tag;  ///< identity family, used for filtering
        std::string name;
        bool passed = false;
        double residual = 0.0;
        double threshold = 0.0;
        std::string detail;
    };

    struct LatticeNode
    {
        std::string name;
        int closed_dim = 0;
        MatrixSpace numeric;
        std::string basis_descriptor;
        int closed_basis_size = 0;
        double orthogonality_residual = 0.0; ///< largest |cos| between closed-form basis elements
    };

    struct LatticeEdge
    {
        std::string lower, upper;
        int closed_dim = 0;
        MatrixSpace complement;
        std::string basis_descriptor;
        int closed_basis_size = 0;
        double orthogonality_residual = 0.0; ///< largest |cos| between the closed-form complement and the lower node
    };

    struct ProbeResult
    {
        int product_mstar_m = 0;     ///< dim MM*M
        int product_m_mstar = 0;     ///< dim M*MM*
        int meet = 0;                ///< dim MM*M ∩ M*MM*
        int join = 0;                ///< dim MM*M + M*MM*
        int nonzero_p = 0;
        int nonzero_q = 0;
        int gram_rank_dual_sandwich = 0;  ///< Gram rank of all E*_i A_j E*_h
        int gram_rank_sandwich = 0;       ///< Gram rank of all E_i A*_j E_h
        bool contains_product_sum = false; ///< MM*+M*M inside the meet
        std::vector<int> chain;            ///< dims of words of length <= 1, 2, ...
        int algebra_dim = 0;               ///< dim T, if converged
        bool converged = false;
    };

    struct GraphSummary
    {
        std::string name;
        int vertices = 0;
        int diameter = 0;
        std::int64_t valency = 0;
        std::vector<std::int64_t> b, c;
    };

    struct LatticeReport
    {
        GraphSummary graph;
        int base_vertex = 0;
        std::vector<double> theta;
        std::vector<std::int64_t> multiplicities;
        PairClassification pairs;
        std::vector<LatticeNode> nodes;
        std::vector<LatticeEdge> edges;
        std::optional<ProbeResult> probe;
        std::vector<Verdict> verdicts;

        auto passed() const -> bool;
        auto node(std::string_view name) const -> const LatticeNode &;
    };

    /// Node names bottom to top.
    auto lattice_node_names() -> const std::vector<std::string> &;

    /// Builds every node and edge twice, from the closed-form orthogonal
    /// bases and from generic subspace arithmetic, and records a verdict for
    /// each reconciliation. Failures never abort the build.
    auto build_lattice(const AlgebraView & view, const PairClassification & pairs,
            const SpanOptions & options = {}) -> LatticeReport;

    struct GramCheck
    {
        Eigen::Matrix2d direct, expected;
        double determinant = 0.0, expected_determinant = 0.0;
        double sum_norm2 = 0.0, expected_sum_norm2 = 0.0;           ///< ||A_i A*_j + A*_j A_i||^2
        double difference_norm2 = 0.0, expected_difference_norm2 = 0.0;
        double sum_difference_inner = 0.0;                          ///< should vanish
        double residual = 0.0;  ///< largest residual, each relative to |X| k_i m_j (squared for the determinant)
        double threshold = 0.0;

        auto passed() const -> bool { return residual <= threshold; }
    };

    /// 2x2 Gram matrix of {A_i A*_j, A*_j A_i} against its closed form,
    /// together with its determinant and the norms of the sum and difference.
    auto inspect_gram_h(const AlgebraView & view, int i, int j) -> GramCheck;

    /// As inspect_gram_h, throwing VerificationError on failure.
    auto verify_gram_h(const AlgebraView & view, int i, int j) -> GramCheck;

    /// <A_i A*_j, A*_r A_s> and <A_i A*_j, A_r A*_s> against their closed forms.
    auto inspect_product_inner(const AlgebraView & view, int i, int j, int r, int s)
        -> std::pair<InnerProductCheck, InnerProductCheck>;

    struct ProbeOptions
    {
        int max_word_length = 8;
    };

    /// Numeric dimensions of the subspaces above MM*+M*M, cross-checked
    /// against parameter counts, plus dim T from growing words in M and M*.
    auto probe_upper(const AlgebraView & view, const LatticeReport & lattice,
            const ProbeOptions & probe = {}, const SpanOptions & options = {}) -> ProbeResult;

    /// Appends the probe's verdicts to the report.
    auto record_probe(LatticeReport & report, ProbeResult probe) -> void;
}

#endif
