#include <drg/matspace.hh>
#include <drg/errors.hh>

#include <algorithm>
#include <cmath>
#include <sstream>


using std::string;
using std::vector;

namespace drg
{
    namespace
    {
        auto flatten(const Matrix & m) -> Eigen::Map<const Eigen::VectorXd>
        {
            return { m.data(), m.size() };
        }

        auto unflatten(const Eigen::VectorXd & v, int side) -> Matrix
        {
            return Eigen::Map<const Matrix>(v.data(), side, side);
        }

        auto borderline(double value, double threshold, double factor) -> bool
        {
            return value > 0.0 && value >= threshold / factor && value <= threshold * factor;
        }
    }

    /// Grows an orthonormal basis one candidate at a time.
    class SpanBuilder
    {
        private:
            MatrixSpace _space;
            Eigen::MatrixXd _columns;
            int _used = 0;

        public:
            SpanBuilder(MatrixSpace start, int capacity) :
                _space(std::move(start))
            {
                auto rows = static_cast<Eigen::Index>(_space._side) * _space._side;
                int room = std::min<long>(static_cast<long>(capacity) + _space.dim(), rows);
                _columns.resize(rows, std::max(room, _space.dim()));
                _columns.leftCols(_space.dim()) = _space._basis;
                _used = _space.dim();
            }

            auto used() const -> int { return _used; }

            /// Returns true if the candidate contributed a new direction.
            auto offer(Eigen::VectorXd v, const string & label, double threshold, const SpanOptions & options) -> bool
            {
                for (int pass = 0 ; pass < 2 ; ++pass)
                    for (int k = 0 ; k < _used ; ++k)
                        v -= _columns.col(k).dot(v) * _columns.col(k);

                double residual = v.norm();
                if (borderline(residual, threshold, options.warning_factor)) {
                    std::ostringstream out;
                    out << "borderline rank decision for " << label << ": residual " << residual
                        << " vs threshold " << threshold;
                    _space._warnings.push_back(out.str());
                }
                if (residual <= threshold)
                    return false;
                if (_used == _columns.cols())
                    _columns.conservativeResize(Eigen::NoChange, _columns.cols() + 16);
                _columns.col(_used++) = v / residual;
                _space._provenance.push_back(label);
                return true;
            }

            auto warn(string message) -> void
            {
                _space._warnings.push_back(std::move(message));
            }

            /// The basis elements of space from index first on, as a space of their own.
            static auto tail(const MatrixSpace & space, int first) -> MatrixSpace
            {
                MatrixSpace result{ space._side };
                result._basis = space._basis.rightCols(space.dim() - first);
                result._provenance.assign(space._provenance.begin() + first, space._provenance.end());
                result._warnings = space._warnings;
                return result;
            }

            auto finish() && -> MatrixSpace
            {
                _space._basis = _columns.leftCols(_used);
                return std::move(_space);
            }
    };

    MatrixSpace::MatrixSpace(int side) :
        _side(side),
        _basis(static_cast<Eigen::Index>(side) * side, 0)
    {
    }

    auto MatrixSpace::basis(int r) const -> Matrix
    {
        return unflatten(_basis.col(r), _side);
    }

    auto MatrixSpace::project(const Matrix & m) const -> Matrix
    {
        Eigen::VectorXd coefficients = _basis.transpose() * flatten(m);
        return unflatten(_basis * coefficients, _side);
    }

    auto MatrixSpace::residual(const Matrix & m) const -> double
    {
        Eigen::VectorXd v = flatten(m);
        Eigen::VectorXd coefficients = _basis.transpose() * v;
        return (v - _basis * coefficients).norm();
    }

    auto span(int side, std::span<const Matrix> generators, std::span<const string> labels, const SpanOptions & options) -> MatrixSpace
    {
        return extend(MatrixSpace{ side }, generators, labels, options);
    }

    auto extend(const MatrixSpace & base, std::span<const Matrix> generators, std::span<const string> labels,
            const SpanOptions & options) -> MatrixSpace
    {
        double largest = 0.0;
        for (const auto & g : generators) {
            if (g.rows() != base.side() || g.cols() != base.side())
                throw InputError{ "extend: generator has the wrong shape" };
            largest = std::max(largest, g.norm());
        }
        SpanBuilder builder{ base, static_cast<int>(generators.size()) };
        double threshold = options.rank_tolerance * largest;
        for (std::size_t g = 0 ; g < generators.size() ; ++g)
            builder.offer(flatten(generators[g]), g < labels.size() ? labels[g] : "g" + std::to_string(g),
                    threshold, options);
        return std::move(builder).finish();
    }

    auto tail(const MatrixSpace & space, int first) -> MatrixSpace
    {
        return SpanBuilder::tail(space, first);
    }

    auto product_space(const MatrixSpace & left, const MatrixSpace & right, const SpanOptions & options) -> MatrixSpace
    {
        if (left.side() != right.side())
            throw InputError{ "product_space: sides differ" };
        vector<Matrix> products;
        vector<string> labels;
        products.reserve(static_cast<std::size_t>(left.dim()) * right.dim());
        vector<Matrix> right_basis;
        for (int s = 0 ; s < right.dim() ; ++s)
            right_basis.push_back(right.basis(s));
        for (int r = 0 ; r < left.dim() ; ++r) {
            Matrix l = left.basis(r);
            for (int s = 0 ; s < right.dim() ; ++s) {
                products.push_back(l * right_basis[s]);
                labels.push_back(left.provenance()[r] + "·" + right.provenance()[s]);
            }
        }
        return span(left.side(), products, labels, options);
    }

    auto sum_space(const MatrixSpace & u, const MatrixSpace & w, const SpanOptions & options) -> MatrixSpace
    {
        if (u.side() != w.side())
            throw InputError{ "sum_space: sides differ" };
        // both bases are orthonormal, so the threshold is relative to norm 1
        SpanBuilder builder{ MatrixSpace{ u.side() }, u.dim() + w.dim() };
        for (int r = 0 ; r < u.dim() ; ++r)
            builder.offer(u.basis_vectors().col(r), u.provenance()[r], options.rank_tolerance, options);
        for (int r = 0 ; r < w.dim() ; ++r)
            builder.offer(w.basis_vectors().col(r), w.provenance()[r], options.rank_tolerance, options);
        return std::move(builder).finish();
    }

    auto intersect_space(const MatrixSpace & u, const MatrixSpace & w, const SpanOptions & options) -> MatrixSpace
    {
        if (u.side() != w.side())
            throw InputError{ "intersect_space: sides differ" };

        SpanBuilder builder{ MatrixSpace{ u.side() }, std::min(u.dim(), w.dim()) };
        if (u.dim() > 0 && w.dim() > 0) {
            Eigen::MatrixXd cross = u.basis_vectors().transpose() * w.basis_vectors();
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(cross, Eigen::ComputeThinU);
            const auto & cosines = svd.singularValues();
            for (Eigen::Index k = 0 ; k < cosines.size() ; ++k) {
                double gap = 1.0 - cosines(k);
                std::ostringstream label;
                label << "principal vector " << k << " (cos " << cosines(k) << ")";
                if (borderline(gap, options.angle_tolerance, options.warning_factor))
                    builder.warn("borderline principal angle: " + label.str());
                if (gap <= options.angle_tolerance) {
                    Eigen::VectorXd v = u.basis_vectors() * svd.matrixU().col(k);
                    builder.offer(v, label.str(), options.rank_tolerance, options);
                }
            }
        }
        auto result = std::move(builder).finish();

        auto together = sum_space(u, w, options);
        int expected = u.dim() + w.dim() - together.dim();
        if (result.dim() != expected)
            throw VerificationError{ "intersect_space: principal angles give dimension " + std::to_string(result.dim())
                + " but dim U + dim W - dim(U + W) = " + std::to_string(expected) };
        return result;
    }

    auto complement_in(const MatrixSpace & u, const MatrixSpace & w, const SpanOptions & options) -> MatrixSpace
    {
        if (u.side() != w.side())
            throw InputError{ "complement_in: sides differ" };
        for (int r = 0 ; r < u.dim() ; ++r) {
            Eigen::VectorXd v = u.basis_vectors().col(r);
            double residual = (v - w.basis_vectors() * (w.basis_vectors().transpose() * v)).norm();
            if (residual > options.containment_tolerance) {
                std::ostringstream out;
                out << "complement_in: basis element " << r << " (" << u.provenance()[r]
                    << ") is not in the containing space, residual " << residual;
                throw VerificationError{ out.str() };
            }
        }

        SpanBuilder builder{ u, w.dim() };
        int before = builder.used();
        for (int r = 0 ; r < w.dim() ; ++r)
            builder.offer(w.basis_vectors().col(r), w.provenance()[r], options.rank_tolerance, options);
        auto extended = std::move(builder).finish();

        auto result = SpanBuilder::tail(extended, before);

        if (result.dim() != w.dim() - u.dim())
            throw VerificationError{ "complement_in: complement has dimension " + std::to_string(result.dim())
                + ", expected " + std::to_string(w.dim() - u.dim()) };
        return result;
    }

    auto contains(const MatrixSpace & u, const Matrix & m, const SpanOptions & options) -> bool
    {
        double size = m.norm();
        if (size == 0.0)
            return true;
        return u.residual(m) <= options.containment_tolerance * size;
    }

    auto contains(const MatrixSpace & w, const MatrixSpace & u, const SpanOptions & options) -> bool
    {
        for (int r = 0 ; r < u.dim() ; ++r)
            if (! contains(w, u.basis(r), options))
                return false;
        return true;
    }

    auto gram_rank(std::span<const Matrix> generators, double threshold, double warning_factor) -> GramRank
    {
        GramRank result;
        const auto count = static_cast<Eigen::Index>(generators.size());
        if (count == 0)
            return result;
        Eigen::MatrixXd gram(count, count);
        for (Eigen::Index r = 0 ; r < count ; ++r)
            for (Eigen::Index s = r ; s < count ; ++s)
                gram(r, s) = gram(s, r) = inner(generators[r], generators[s]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
        const auto & eigenvalues = solver.eigenvalues();
        result.largest = eigenvalues.maxCoeff();
        if (result.largest <= 0.0)
            return result;
        double cut = threshold * result.largest;
        for (Eigen::Index k = 0 ; k < count ; ++k) {
            if (eigenvalues(k) >= cut)
                ++result.rank;
            if (borderline(std::abs(eigenvalues(k)), cut, warning_factor))
                result.borderline = true;
        }
        return result;
    }

    auto max_pairwise_cosine(std::span<const Matrix> elements) -> double
    {
        double worst = 0.0;
        for (std::size_t r = 0 ; r < elements.size() ; ++r)
            for (std::size_t s = r + 1 ; s < elements.size() ; ++s) {
                double scale = elements[r].norm() * elements[s].norm();
                if (scale > 0.0)
                    worst = std::max(worst, std::abs(inner(elements[r], elements[s])) / scale);
            }
        return worst;
    }

    auto max_cosine_to(const MatrixSpace & u, std::span<const Matrix> elements) -> double
    {
        double worst = 0.0;
        for (const auto & m : elements) {
            double size = m.norm();
            if (size == 0.0 || u.dim() == 0)
                continue;
            Eigen::VectorXd cosines = u.basis_vectors().transpose() * flatten(m);
            worst = std::max(worst, cosines.cwiseAbs().maxCoeff() / size);
        }
        return worst;
    }
}
