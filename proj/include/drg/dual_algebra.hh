#ifndef DRG_DUAL_ALGEBRA_HH
#define DRG_DUAL_ALGEBRA_HH

#include <drg/bose_mesner.hh>
#include <drg/graph.hh>
#include <drg/linalg.hh>
#include <drg/tolerance.hh>

#include <string_view>
#include <vector>

namespace drg
{
    /**
     * The dual Bose-Mesner algebra with respect to a base vertex x. Every
     * element is diagonal, so only diagonals are stored.
     */
    struct DualAlgebra
    {
        int base_vertex = 0;
        std::vector<Vector> dual_idempotents; ///< diag(E*_i): indicator of dist(x, y) = i
        std::vector<Vector> dual_distance;    ///< diag(A*_i): |X| (E_i)_xy

        auto diameter() const -> int { return static_cast<int>(dual_idempotents.size()) - 1; }
        auto dual_idempotent(int i) const -> Matrix { return diagonal_matrix(dual_idempotents[i]); }
        auto dual_distance_matrix(int i) const -> Matrix { return diagonal_matrix(dual_distance[i]); }
    };

    /// Builds both bases of M* and checks their defining identities, the
    /// change of basis in both directions, and the Krein product law.
    auto dual_algebra(const Graph & graph, const BoseMesner & bm, const Spectrum & spectrum,
            int base_vertex, Tolerance tolerance = {}) -> DualAlgebra;

    /// Everything the verification operations read, from one graph and base vertex.
    struct AlgebraView
    {
        const IntersectionArray & array;
        const Spectrum & spectrum;
        const BoseMesner & bose_mesner;
        const DualAlgebra & dual;
        Tolerance tolerance;
    };

    enum class TripleFlavor
    {
        dual_idempotent_sandwich, ///< E*_i A_j E*_h
        idempotent_sandwich,      ///< E_i A*_j E_h
        distance_sandwich         ///< A_i E*_j A_h
    };

    auto flavor_name(TripleFlavor flavor) -> std::string_view;
    auto parse_flavor(std::string_view name) -> TripleFlavor;

    struct TripleIndex
    {
        int first, middle, last;
    };

    auto triple_product(const AlgebraView & view, TripleFlavor flavor, TripleIndex index) -> Matrix;

    /// The closed-form value of <lhs, rhs> for two triple products of one flavor.
    auto triple_product_closed_form(const AlgebraView & view, TripleFlavor flavor,
            TripleIndex lhs, TripleIndex rhs) -> double;

    struct InnerProductCheck
    {
        double closed_form = 0.0;
        double direct = 0.0;
        double residual = 0.0;
        double threshold = 0.0;

        auto passed() const -> bool { return residual <= threshold; }
    };

    /// Direct trace against closed form, without throwing.
    auto inspect_triple_product(const AlgebraView & view, TripleFlavor flavor,
            TripleIndex lhs, TripleIndex rhs) -> InnerProductCheck;

    /// Returns the closed-form inner product; throws VerificationError if the
    /// direct trace disagrees.
    auto triple_product_inner(const AlgebraView & view, TripleFlavor flavor,
            TripleIndex lhs, TripleIndex rhs) -> double;

    struct ZeroTripleCheck
    {
        bool product_zero = false;
        bool parameter_zero = false;
        double product_size = 0.0; ///< max |entry| of the product
        double parameter = 0.0;    ///< p^h_ij or q^h_ij

        auto consistent() const -> bool { return product_zero == parameter_zero; }
    };

    /// E*_i A_h E*_j = 0 against p^h_ij = 0, or E_i A*_h E_j = 0 against q^h_ij = 0.
    auto inspect_zero_triple(const AlgebraView & view, int h, int i, int j, TripleFlavor flavor) -> ZeroTripleCheck;

    /// Whether the product vanishes; throws VerificationError when that
    /// disagrees with the vanishing of the matching parameter.
    auto zero_triple_test(const AlgebraView & view, int h, int i, int j, TripleFlavor flavor) -> bool;
}

#endif
