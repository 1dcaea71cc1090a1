#ifndef DRG_BOSE_MESNER_HH
#define DRG_BOSE_MESNER_HH

#include <drg/graph.hh>
#include <drg/linalg.hh>
#include <drg/tolerance.hh>

#include <cstdint>
#include <span>
#include <vector>

namespace drg
{
    /**
     * Eigenvalues θ_0 > ... > θ_D of a distance-regular graph, their
     * multiplicities, and the table u(i, j) = u_i(θ_j) of normalized
     * cosine-sequence values.
     */
    struct Spectrum
    {
        std::vector<double> theta;
        std::vector<std::int64_t> multiplicities;
        Matrix u;

        auto diameter() const -> int { return static_cast<int>(theta.size()) - 1; }
    };

    /// Solves the (D+1)-dimensional tridiagonal eigenproblem of the
    /// intersection array, fills u by the three-term recurrence, and recovers
    /// multiplicities from the orthogonality relations. Throws
    /// VerificationError on a repeated eigenvalue, a non-integral
    /// multiplicity, or a failed recurrence/orthogonality residual.
    auto spectrum(const IntersectionArray & array, int vertex_count, Tolerance tolerance = {}) -> Spectrum;

    /// A_i with (A_i)_xy = 1 iff dist(x, y) = i.
    auto distance_matrices(const Graph & graph) -> std::vector<IntMatrix>;

    /// Largest |A_i A_j - sum_h p^h_ij A_h| entry over all i, j, in exact integers.
    auto product_law_error(std::span<const IntMatrix> distance, const IntersectionArray & array) -> std::int64_t;

    /// E_j = |X|^-1 m_j sum_i u_i(θ_j) A_i, checked to be a complete family of
    /// orthogonal idempotents with tr(E_j) = m_j.
    auto primitive_idempotents(std::span<const IntMatrix> distance, const Spectrum & spectrum,
            Tolerance tolerance = {}) -> std::vector<Matrix>;

    struct KreinParameters
    {
        int diameter = 0;
        std::vector<double> tensor;

        auto q(int h, int i, int j) const -> double
        {
            auto d = diameter + 1;
            return tensor[(h * d + i) * d + j];
        }
    };

    /// q^h_ij = (|X| / m_h) <E_i ∘ E_j, E_h>, checked by reconstructing every
    /// entrywise product and by nonnegativity.
    auto krein_parameters(std::span<const Matrix> idempotents, const Spectrum & spectrum,
            Tolerance tolerance = {}) -> KreinParameters;

    struct BoseMesner
    {
        std::vector<IntMatrix> distance;   ///< A_0 .. A_D
        std::vector<Matrix> distance_real; ///< the same, as doubles
        std::vector<Matrix> idempotents;   ///< E_0 .. E_D
        KreinParameters krein;

        auto diameter() const -> int { return static_cast<int>(distance.size()) - 1; }
        auto vertex_count() const -> int { return static_cast<int>(distance.front().rows()); }
    };

    auto bose_mesner(const Graph & graph, const Spectrum & spectrum, Tolerance tolerance = {}) -> BoseMesner;
}

#endif
