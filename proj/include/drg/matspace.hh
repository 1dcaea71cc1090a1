#ifndef DRG_MATSPACE_HH
#define DRG_MATSPACE_HH

#include <drg/linalg.hh>

#include <span>
#include <string>
#include <vector>

namespace drg
{
    struct SpanOptions
    {
        /// Gram-Schmidt residuals at or below rank_tolerance * (largest generator norm) are dropped.
        double rank_tolerance = 1e-8;
        /// Principal-angle cosines at or above 1 - angle_tolerance count as shared directions.
        double angle_tolerance = 1e-6;
        /// Decisions within this factor of a threshold are flagged as borderline.
        double warning_factor = 1e3;
        /// Containment residual allowed (relative to the tested matrix norm).
        double containment_tolerance = 1e-8;
    };

    /**
     * A subspace of the n x n real matrices under the trace inner product.
     *
     * The basis is kept orthonormal and stored as the columns of an
     * (n*n) x dim matrix of row-major flattenings. Each basis element carries
     * the label of the generator that introduced it; conditioning warnings
     * for near-threshold rank decisions ride along.
     */
    class MatrixSpace
    {
        private:
            int _side = 0;
            Eigen::MatrixXd _basis;
            std::vector<std::string> _provenance;
            std::vector<std::string> _warnings;

            friend class SpanBuilder;

        public:
            explicit MatrixSpace(int side = 0);

            auto side() const -> int { return _side; }
            auto dim() const -> int { return static_cast<int>(_basis.cols()); }
            auto basis_vectors() const -> const Eigen::MatrixXd & { return _basis; }
            auto basis(int r) const -> Matrix;
            auto provenance() const -> const std::vector<std::string> & { return _provenance; }
            auto warnings() const -> const std::vector<std::string> & { return _warnings; }

            /// Orthogonal projection of m onto the space.
            auto project(const Matrix & m) const -> Matrix;

            /// ||m - proj(m)||.
            auto residual(const Matrix & m) const -> double;
    };

    /// Modified Gram-Schmidt with one re-orthogonalization pass.
    auto span(int side, std::span<const Matrix> generators, std::span<const std::string> labels = {},
            const SpanOptions & options = {}) -> MatrixSpace;

    /// base followed by whatever new directions the generators add; the
    /// first base.dim() basis elements are base's own.
    auto extend(const MatrixSpace & base, std::span<const Matrix> generators,
            std::span<const std::string> labels = {}, const SpanOptions & options = {}) -> MatrixSpace;

    /// Basis elements first.. of space, as a space of their own.
    auto tail(const MatrixSpace & space, int first) -> MatrixSpace;

    /// Span of every product r s with r, s running over the two bases.
    auto product_space(const MatrixSpace & left, const MatrixSpace & right, const SpanOptions & options = {}) -> MatrixSpace;

    auto sum_space(const MatrixSpace & u, const MatrixSpace & w, const SpanOptions & options = {}) -> MatrixSpace;

    /// Intersection from the principal angles between the two subspaces,
    /// cross-checked against dim U + dim W - dim(U + W). Throws
    /// VerificationError with both counts when they disagree.
    auto intersect_space(const MatrixSpace & u, const MatrixSpace & w, const SpanOptions & options = {}) -> MatrixSpace;

    /// Orthogonal complement of u inside w. Throws VerificationError naming
    /// the offending basis element when u is not contained in w.
    auto complement_in(const MatrixSpace & u, const MatrixSpace & w, const SpanOptions & options = {}) -> MatrixSpace;

    auto contains(const MatrixSpace & u, const Matrix & m, const SpanOptions & options = {}) -> bool;

    /// True when every basis element of u lies in w.
    auto contains(const MatrixSpace & w, const MatrixSpace & u, const SpanOptions & options = {}) -> bool;

    struct GramRank
    {
        int rank = 0;
        double largest = 0.0;
        bool borderline = false;
    };

    /// Rank of the Gram matrix of the generators: eigenvalues at or above
    /// threshold * (largest eigenvalue) count.
    auto gram_rank(std::span<const Matrix> generators, double threshold = 1e-10, double warning_factor = 1e3) -> GramRank;

    /// Largest |<a, b>| / (||a|| ||b||) over distinct pairs; 0 for fewer than two.
    auto max_pairwise_cosine(std::span<const Matrix> elements) -> double;

    /// Largest |<m / ||m||, b>| over the orthonormal basis of u and the given m.
    auto max_cosine_to(const MatrixSpace & u, std::span<const Matrix> elements) -> double;
}

#endif
