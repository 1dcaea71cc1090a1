#include <drg/dual_algebra.hh>
#include <drg/errors.hh>

#include <cmath>
#include <sstream>
#include <string>

using std::string;
using std::string_view;
using std::vector;

namespace drg
{
    namespace
    {
        auto check(bool ok, const string & what, double residual, double threshold) -> void
        {
            if (! ok) {
                std::ostringstream out;
                out << "dual algebra: " << what << ": residual " << residual << " exceeds " << threshold;
                throw VerificationError{ out.str() };
            }
        }

        auto vmax_abs(const Vector & v) -> double
        {
            return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
        }

        auto kronecker(int a, int b) -> double
        {
            return a == b ? 1.0 : 0.0;
        }
    }

    auto dual_algebra(const Graph & graph, const BoseMesner & bm, const Spectrum & spec,
            int x, Tolerance tol) -> DualAlgebra
    {
        const int n = graph.size();
        const int size = graph.diameter() + 1;
        if (x < 0 || x >= n)
            throw InputError{ "base vertex " + std::to_string(x) + " out of range 0.." + std::to_string(n - 1) };

        DualAlgebra result;
        result.base_vertex = x;
        result.dual_idempotents.assign(size, Vector::Zero(n));
        for (int y = 0 ; y < n ; ++y)
            result.dual_idempotents[graph.distance(x, y)](y) = 1.0;
        for (int i = 0 ; i < size ; ++i)
            result.dual_distance.push_back(static_cast<double>(n) * bm.idempotents[i].row(x).transpose());

        const double scale = n;
        Vector identity_sum = Vector::Zero(n), dual_sum = Vector::Zero(n);
        for (int i = 0 ; i < size ; ++i) {
            const auto & estar = result.dual_idempotents[i];
            const auto & astar = result.dual_distance[i];
            identity_sum += estar;
            dual_sum += astar;

            // k_i read off the distance matrix at another vertex; exact integers
            auto k_i = bm.distance[i].row(0).sum();
            check(estar.sum() == static_cast<double>(k_i), "tr(E*_" + std::to_string(i) + ") = k_i",
                    std::abs(estar.sum() - static_cast<double>(k_i)), 0.0);

            double trace_error = std::abs(astar.sum() - (i == 0 ? scale : 0.0));
            check(trace_error <= tol.scaled(scale), "tr(A*_" + std::to_string(i) + ")", trace_error, tol.scaled(scale));

            // A*_i = m_i sum_h u_h(θ_i) E*_h
            Vector expansion = Vector::Zero(n);
            for (int h = 0 ; h < size ; ++h)
                expansion += static_cast<double>(spec.multiplicities[i]) * spec.u(h, i) * result.dual_idempotents[h];
            double r = vmax_abs(astar - expansion);
            check(r <= tol.scaled(scale), "A*_" + std::to_string(i) + " expansion in E*", r, tol.scaled(scale));

            // E*_i = |X|^-1 k_i sum_h u_i(θ_h) A*_h
            Vector inverse = Vector::Zero(n);
            for (int h = 0 ; h < size ; ++h)
                inverse += spec.u(i, h) * result.dual_distance[h];
            inverse *= static_cast<double>(k_i) / scale;
            r = vmax_abs(estar - inverse);
            check(r <= tol.scaled(1.0), "E*_" + std::to_string(i) + " expansion in A*", r, tol.scaled(1.0));

            for (int j = 0 ; j < size ; ++j) {
                Vector product = astar.cwiseProduct(result.dual_distance[j]);
                Vector krein = Vector::Zero(n);
                for (int h = 0 ; h < size ; ++h)
                    krein += bm.krein.q(h, i, j) * result.dual_distance[h];
                r = vmax_abs(product - krein);
                check(r <= tol.scaled(vmax_abs(product)), "A*_" + std::to_string(i) + " A*_" + std::to_string(j)
                        + " Krein product law", r, tol.scaled(vmax_abs(product)));
            }
        }

        // 0/1 diagonals summing to the identity are orthogonal idempotents
        check(identity_sum == Vector::Ones(n), "sum of E*_i = I", vmax_abs(identity_sum - Vector::Ones(n)), 0.0);
        double r = vmax_abs(result.dual_distance[0] - Vector::Ones(n));
        check(r <= tol.scaled(1.0), "A*_0 = I", r, tol.scaled(1.0));
        r = vmax_abs(dual_sum - scale * result.dual_idempotents[0]);
        check(r <= tol.scaled(scale), "sum of A*_i = |X| E*_0", r, tol.scaled(scale));

        return result;
    }

    auto flavor_name(TripleFlavor flavor) -> string_view
    {
        switch (flavor) {
            case TripleFlavor::dual_idempotent_sandwich: return "E*AE*";
            case TripleFlavor::idempotent_sandwich: return "EA*E";
            case TripleFlavor::distance_sandwich: return "AE*A";
        }
        return "?";
    }

    auto parse_flavor(string_view name) -> TripleFlavor
    {
        if (name == "E*AE*") return TripleFlavor::dual_idempotent_sandwich;
        if (name == "EA*E") return TripleFlavor::idempotent_sandwich;
        if (name == "AE*A") return TripleFlavor::distance_sandwich;
        throw InputError{ "unknown triple product flavor '" + string{ name } + "'" };
    }

    namespace
    {
        auto check_index(const AlgebraView & view, TripleIndex t) -> void
        {
            const int d = view.array.diameter;
            for (int v : { t.first, t.middle, t.last })
                if (v < 0 || v > d)
                    throw InputError{ "index " + std::to_string(v) + " outside 0.." + std::to_string(d) };
        }
    }

    auto triple_product(const AlgebraView & view, TripleFlavor flavor, TripleIndex t) -> Matrix
    {
        check_index(view, t);
        const auto & bm = view.bose_mesner;
        const auto & dual = view.dual;
        switch (flavor) {
            case TripleFlavor::dual_idempotent_sandwich:
                return dual.dual_idempotents[t.first].asDiagonal() * bm.distance_real[t.middle]
                    * dual.dual_idempotents[t.last].asDiagonal();
            case TripleFlavor::idempotent_sandwich:
                return bm.idempotents[t.first] * dual.dual_distance[t.middle].asDiagonal() * bm.idempotents[t.last];
            case TripleFlavor::distance_sandwich:
                return bm.distance_real[t.first] * dual.dual_idempotents[t.middle].asDiagonal() * bm.distance_real[t.last];
        }
        throw InputError{ "unknown triple product flavor" };
    }

    auto triple_product_closed_form(const AlgebraView & view, TripleFlavor flavor,
            TripleIndex lhs, TripleIndex rhs) -> double
    {
        check_index(view, lhs);
        check_index(view, rhs);
        const auto & ia = view.array;
        auto [i, j, h] = lhs;
        auto [r, s, t] = rhs;
        double deltas = kronecker(i, r) * kronecker(j, s) * kronecker(h, t);

        switch (flavor) {
            case TripleFlavor::dual_idempotent_sandwich:
                return deltas * static_cast<double>(ia.k[h] * ia.p(h, i, j));
            case TripleFlavor::idempotent_sandwich:
                return deltas * static_cast<double>(view.spectrum.multiplicities[h]) * view.bose_mesner.krein.q(h, i, j);
            case TripleFlavor::distance_sandwich: {
                std::int64_t total = 0;
                for (int l = 0 ; l <= ia.diameter ; ++l)
                    total += ia.k[l] * ia.p(l, i, r) * ia.p(l, j, s) * ia.p(l, h, t);
                return static_cast<double>(total);
            }
        }
        throw InputError{ "unknown triple product flavor" };
    }

    auto inspect_triple_product(const AlgebraView & view, TripleFlavor flavor,
            TripleIndex lhs, TripleIndex rhs) -> InnerProductCheck
    {
        Matrix left = triple_product(view, flavor, lhs);
        Matrix right = triple_product(view, flavor, rhs);
        InnerProductCheck result;
        result.closed_form = triple_product_closed_form(view, flavor, lhs, rhs);
        result.direct = inner(left, right);
        result.residual = std::abs(result.direct - result.closed_form);
        result.threshold = view.tolerance.scaled(norm(left) * norm(right));
        return result;
    }

    auto triple_product_inner(const AlgebraView & view, TripleFlavor flavor,
            TripleIndex lhs, TripleIndex rhs) -> double
    {
        auto c = inspect_triple_product(view, flavor, lhs, rhs);
        if (! c.passed()) {
            std::ostringstream out;
            out << flavor_name(flavor) << " inner product (" << lhs.first << "," << lhs.middle << "," << lhs.last
                << ") vs (" << rhs.first << "," << rhs.middle << "," << rhs.last << "): direct " << c.direct
                << " closed form " << c.closed_form;
            throw VerificationError{ out.str() };
        }
        return c.closed_form;
    }

    auto inspect_zero_triple(const AlgebraView & view, int h, int i, int j, TripleFlavor flavor) -> ZeroTripleCheck
    {
        ZeroTripleCheck result;
        switch (flavor) {
            case TripleFlavor::dual_idempotent_sandwich: {
                result.product_size = max_abs(triple_product(view, flavor, { i, h, j }));
                result.product_zero = result.product_size == 0.0;
                result.parameter = static_cast<double>(view.array.p(h, i, j));
                result.parameter_zero = view.array.p(h, i, j) == 0;
                break;
            }
            case TripleFlavor::idempotent_sandwich: {
                const double n = view.bose_mesner.vertex_count();
                result.product_size = max_abs(triple_product(view, flavor, { i, h, j }));
                result.product_zero = result.product_size <= view.tolerance.scaled(vmax_abs(view.dual.dual_distance[h]));
                result.parameter = view.bose_mesner.krein.q(h, i, j);
                result.parameter_zero = std::abs(result.parameter) <= view.tolerance.scaled(n);
                break;
            }
            case TripleFlavor::distance_sandwich:
                throw InputError{ "zero test is defined for E*AE* and EA*E only" };
        }
        return result;
    }

    auto zero_triple_test(const AlgebraView & view, int h, int i, int j, TripleFlavor flavor) -> bool
    {
        auto c = inspect_zero_triple(view, h, i, j, flavor);
        if (! c.consistent()) {
            std::ostringstream out;
            out << flavor_name(flavor) << " zero test at (h,i,j)=(" << h << "," << i << "," << j << "): product size "
                << c.product_size << " but parameter " << c.parameter;
            throw VerificationError{ out.str() };
        }
        return c.product_zero;
    }
}
