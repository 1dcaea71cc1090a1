#include <drg/lattice.hh>
#include <drg/errors.hh>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace drg
{
    auto pair_class_name(PairClass c) -> string_view
    {
        switch (c) {
            case PairClass::plus_one: return "plus_one";
            case PairClass::minus_one: return "minus_one";
            case PairClass::generic: return "generic";
        }
        return "?";
    }

    auto classify_pairs(const Spectrum & spec, double tolerance, double ambiguity) -> PairClassification
    {
        const int size = spec.diameter() + 1;
        PairClassification result;
        result.table.assign(size, vector<PairClass>(size, PairClass::generic));
        for (int i = 0 ; i < size ; ++i)
            for (int j = 0 ; j < size ; ++j) {
                double value = spec.u(i, j);
                double to_plus = std::abs(value - 1.0), to_minus = std::abs(value + 1.0);
                auto & cell = result.table[i][j];
                if (to_plus <= tolerance)
                    cell = PairClass::plus_one;
                else if (to_minus <= tolerance)
                    cell = PairClass::minus_one;
                else if (to_plus < ambiguity || to_minus < ambiguity) {
                    std::ostringstream out;
                    out.precision(17);
                    out << "u_" << i << "(θ_" << j << ") = " << value
                        << " is too close to ±1 to classify; review the tolerance";
                    throw VerificationError{ out.str() };
                }
                if (i >= 1 && j >= 1 && cell != PairClass::generic)
                    ++result.count;
            }
        return result;
    }

    auto is_primitive(const Graph & graph) -> bool
    {
        PairClassification none;
        return check_primitivity(graph, none).primitive;
    }

    auto check_primitivity(const Graph & graph, const PairClassification & pairs) -> PrimitivityVerdict
    {
        const int n = graph.size();
        PrimitivityVerdict result;
        for (int i = 1 ; i <= graph.diameter() ; ++i) {
            vector<char> seen(n, 0);
            vector<int> stack{ 0 };
            seen[0] = 1;
            int reached = 1;
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w = 0 ; w < n ; ++w)
                    if (! seen[w] && graph.distance(v, w) == i) {
                        seen[w] = 1;
                        ++reached;
                        stack.push_back(w);
                    }
            }
            if (reached != n)
                result.disconnected_distances.push_back(i);
        }
        result.primitive = result.disconnected_distances.empty();
        result.count_zero = pairs.count == 0;

        if (! pairs.table.empty() && result.primitive != result.count_zero)
            throw VerificationError{ string{ "primitivity mismatch: graph is " } + (result.primitive ? "primitive" : "imprimitive")
                + " but P = " + std::to_string(pairs.count) };
        return result;
    }

    auto LatticeReport::passed() const -> bool
    {
        return std::all_of(verdicts.begin(), verdicts.end(), [] (const Verdict & v) { return v.passed; });
    }

    auto LatticeReport::node(string_view name) const -> const LatticeNode &
    {
        for (const auto & n : nodes)
            if (n.name == name)
                return n;
        throw InputError{ "no lattice node named " + string{ name } };
    }

    auto lattice_node_names() -> const vector<string> &
    {
        static const vector<string> names{ "M∩M*", "M", "M*", "M+M*", "MM*∩M*M", "MM*", "M*M", "MM*+M*M" };
        return names;
    }

    namespace
    {
        struct ClosedForm
        {
            vector<Matrix> elements;
            vector<string> labels;

            auto add(Matrix m, string label) -> void
            {
                elements.push_back(std::move(m));
                labels.push_back(std::move(label));
            }
        };

        auto index_label(string_view stem, int i) -> string
        {
            return string{ stem } + "_" + std::to_string(i);
        }

        /// A_i A*_j and A*_j A_i for every (i, j).
        struct Products
        {
            vector<vector<Matrix>> mixed;    ///< [i][j] = A_i A*_j
            vector<vector<Matrix>> reversed; ///< [i][j] = A*_j A_i

            explicit Products(const AlgebraView & view)
            {
                const int size = view.array.diameter + 1;
                mixed.assign(size, vector<Matrix>(size));
                reversed.assign(size, vector<Matrix>(size));
                for (int i = 0 ; i < size ; ++i)
                    for (int j = 0 ; j < size ; ++j) {
                        const auto & a = view.bose_mesner.distance_real[i];
                        const auto & astar = view.dual.dual_distance[j];
                        mixed[i][j] = a * astar.asDiagonal();
                        reversed[i][j] = astar.asDiagonal() * a;
                    }
            }
        };

        auto mixed_label(int i, int j) -> string
        {
            return "A_" + std::to_string(i) + "·A*_" + std::to_string(j);
        }

        auto reversed_label(int i, int j) -> string
        {
            return "A*_" + std::to_string(j) + "·A_" + std::to_string(i);
        }

        class Builder
        {
            private:
                const AlgebraView & _view;
                const PairClassification & _pairs;
                const SpanOptions & _options;
                LatticeReport & _report;
                int _n;

            public:
                Builder(const AlgebraView & view, const PairClassification & pairs, const SpanOptions & options,
                        LatticeReport & report) :
                    _view(view), _pairs(pairs), _options(options), _report(report),
                    _n(view.bose_mesner.vertex_count())
                {
                }

                auto record(string tag, string name, bool passed, double residual, double threshold, string detail = "") -> void
                {
                    _report.verdicts.push_back(Verdict{ std::move(tag), std::move(name), passed, residual, threshold, std::move(detail) });
                }

                auto exact(string tag, string name, long long got, long long want) -> void
                {
                    record(std::move(tag), std::move(name), got == want, static_cast<double>(std::llabs(got - want)), 0.0,
                            "got " + std::to_string(got) + ", expected " + std::to_string(want));
                }

                /// Runs a subspace computation; a thrown error becomes a failed verdict and the zero space.
                auto attempt(const string & tag, const string & what, const std::function<MatrixSpace ()> & compute) -> MatrixSpace
                {
                    try {
                        return compute();
                    }
                    catch (const std::exception & e) {
                        record(tag, what, false, 0.0, 0.0, e.what());
                        return MatrixSpace{ _n };
                    }
                }

                auto node(const string & name, int closed_dim, const ClosedForm & closed, MatrixSpace numeric,
                        const string & descriptor, std::optional<GramRank> gram) -> void
                {
                    const string tag = "6.1";
                    double cosine = max_pairwise_cosine(closed.elements);
                    double tol = _view.tolerance.base;
                    record(tag, name + ": closed-form basis is orthogonal", cosine <= tol, cosine, tol);

                    double smallest = std::numeric_limits<double>::infinity();
                    for (const auto & m : closed.elements)
                        smallest = std::min(smallest, m.norm());
                    if (! closed.elements.empty())
                        record(tag, name + ": closed-form basis elements are nonzero", smallest > tol, smallest, tol);

                    exact(tag, name + ": closed-form basis size", static_cast<long long>(closed.elements.size()), closed_dim);
                    exact(tag, name + ": numeric dimension", numeric.dim(), closed_dim);
                    if (gram)
                        exact(tag, name + ": Gram rank of generators", gram->rank, closed_dim);

                    double worst = 0.0;
                    for (const auto & m : closed.elements)
                        if (double size = m.norm() ; size > 0.0)
                            worst = std::max(worst, numeric.residual(m) / size);
                    record(tag, name + ": closed-form basis lies in the numeric space", worst <= _options.containment_tolerance,
                            worst, _options.containment_tolerance);

                    auto closed_span = span(_n, closed.elements, closed.labels, _options);
                    double back = 0.0;
                    for (int r = 0 ; r < numeric.dim() ; ++r)
                        back = std::max(back, closed_span.residual(numeric.basis(r)));
                    record(tag, name + ": numeric space lies in the closed-form span", back <= _options.containment_tolerance,
                            back, _options.containment_tolerance);

                    for (const auto & w : numeric.warnings())
                        record(tag, name + ": conditioning", true, 0.0, 0.0, w);

                    _report.nodes.push_back(LatticeNode{ name, closed_dim, std::move(numeric), descriptor,
                            static_cast<int>(closed.elements.size()), cosine });
                }

                auto edge(const string & lower, const string & upper, int closed_dim, const ClosedForm & closed,
                        const string & descriptor) -> void
                {
                    const string tag = "6.2";
                    const string label = lower + " ⊆ " + upper;
                    const auto & low = _report.node(lower).numeric;
                    const auto & high = _report.node(upper).numeric;
                    double tol = _view.tolerance.base;

                    auto complement = attempt(tag, label + ": numeric complement",
                            [&] { return complement_in(low, high, _options); });

                    exact(tag, label + ": closed-form complement size", static_cast<long long>(closed.elements.size()), closed_dim);
                    exact(tag, label + ": numeric complement dimension", complement.dim(), closed_dim);
                    exact(tag, label + ": dim lower + dim complement = dim upper", low.dim() + complement.dim(), high.dim());

                    double orthogonality = max_cosine_to(low, closed.elements);
                    record(tag, label + ": closed-form complement is orthogonal to the lower node", orthogonality <= tol,
                            orthogonality, tol);
                    double pairwise = max_pairwise_cosine(closed.elements);
                    record(tag, label + ": closed-form complement basis is orthogonal", pairwise <= tol, pairwise, tol);

                    vector<Matrix> numeric_basis;
                    for (int r = 0 ; r < complement.dim() ; ++r)
                        numeric_basis.push_back(complement.basis(r));
                    double numeric_orthogonality = max_cosine_to(low, numeric_basis);
                    record(tag, label + ": numeric complement is orthogonal to the lower node", numeric_orthogonality <= tol,
                            numeric_orthogonality, tol);

                    double worst = 0.0;
                    for (const auto & m : closed.elements)
                        if (double size = m.norm() ; size > 0.0)
                            worst = std::max(worst, complement.residual(m) / size);
                    record(tag, label + ": closed-form complement lies in the numeric complement",
                            worst <= _options.containment_tolerance, worst, _options.containment_tolerance);

                    _report.edges.push_back(LatticeEdge{ lower, upper, closed_dim, std::move(complement), descriptor,
                            static_cast<int>(closed.elements.size()), orthogonality });
                }

                auto modular_law(const string & name, const MatrixSpace & u, const MatrixSpace & w,
                        const MatrixSpace & meet, const MatrixSpace & join) -> void
                {
                    exact("6.1", name + ": dim(U∩W) + dim(U+W) = dim U + dim W", meet.dim() + join.dim(), u.dim() + w.dim());
                }
        };
    }

    auto build_lattice(const AlgebraView & view, const PairClassification & pairs, const SpanOptions & options) -> LatticeReport
    {
        const int diameter = view.array.diameter;
        const int size = diameter + 1;
        const int n = view.bose_mesner.vertex_count();
        const int count = pairs.count;
        const auto & bm = view.bose_mesner;
        const auto & dual = view.dual;
        const auto & u = view.spectrum.u;

        LatticeReport report;
        report.base_vertex = dual.base_vertex;
        report.theta = view.spectrum.theta;
        report.multiplicities = view.spectrum.multiplicities;
        report.pairs = pairs;

        Builder builder{ view, pairs, options, report };
        Products products{ view };

        vector<Matrix> distance = bm.distance_real, dual_distance;
        vector<string> distance_labels, dual_labels;
        for (int i = 0 ; i < size ; ++i) {
            dual_distance.push_back(dual.dual_distance_matrix(i));
            distance_labels.push_back(index_label("A", i));
            dual_labels.push_back(index_label("A*", i));
        }
        vector<Matrix> both = distance, all_products, mixed_only, reversed_only;
        both.insert(both.end(), dual_distance.begin(), dual_distance.end());
        for (int i = 0 ; i < size ; ++i)
            for (int j = 0 ; j < size ; ++j) {
                mixed_only.push_back(products.mixed[i][j]);
                reversed_only.push_back(products.reversed[i][j]);
            }
        all_products = mixed_only;
        all_products.insert(all_products.end(), reversed_only.begin(), reversed_only.end());

        // numeric route: generic subspace arithmetic from generators
        auto m = builder.attempt("6.1", "M: span", [&] { return span(n, distance, distance_labels, options); });
        auto mstar = builder.attempt("6.1", "M*: span", [&] { return span(n, dual_distance, dual_labels, options); });
        auto meet_low = builder.attempt("6.1", "M∩M*: intersection", [&] { return intersect_space(m, mstar, options); });
        auto join_low = builder.attempt("6.1", "M+M*: sum", [&] { return sum_space(m, mstar, options); });
        auto mm = builder.attempt("6.1", "MM*: product", [&] { return product_space(m, mstar, options); });
        auto mstar_m = builder.attempt("6.1", "M*M: product", [&] { return product_space(mstar, m, options); });
        auto meet_high = builder.attempt("6.1", "MM*∩M*M: intersection", [&] { return intersect_space(mm, mstar_m, options); });
        auto join_high = builder.attempt("6.1", "MM*+M*M: sum", [&] { return sum_space(mm, mstar_m, options); });

        builder.modular_law("M, M*", m, mstar, meet_low, join_low);
        builder.modular_law("MM*, M*M", mm, mstar_m, meet_high, join_high);

        // closed-form route
        ClosedForm identity, m_basis, mstar_basis, low_join, high_meet, mm_basis, mstar_m_basis, high_join;
        identity.add(Matrix::Identity(n, n), "I");
        for (int i = 0 ; i < size ; ++i) {
            m_basis.add(distance[i], distance_labels[i]);
            mstar_basis.add(dual_distance[i], dual_labels[i]);
        }
        for (int i = diameter ; i >= 1 ; --i)
            low_join.add(distance[i], distance_labels[i]);
        low_join.add(Matrix::Identity(n, n), "I");
        for (int i = 1 ; i <= diameter ; ++i)
            low_join.add(dual_distance[i], dual_labels[i]);

        for (int i = 0 ; i < size ; ++i)
            for (int j = 0 ; j < size ; ++j) {
                const auto & x = products.mixed[i][j];
                const auto & y = products.reversed[i][j];
                mm_basis.add(x, mixed_label(i, j));
                mstar_m_basis.add(y, reversed_label(i, j));
                if (pairs.degenerate(i, j)) {
                    high_meet.add(x, mixed_label(i, j));
                    high_join.add(x, mixed_label(i, j));
                }
                else {
                    high_join.add(x + y, mixed_label(i, j) + "+" + reversed_label(i, j));
                    high_join.add(x - y, mixed_label(i, j) + "-" + reversed_label(i, j));
                }
            }

        const int d = diameter;
        builder.node("M∩M*", 1, identity, meet_low, "{I}", std::nullopt);
        builder.node("M", d + 1, m_basis, m, "{A_i : 0<=i<=D}", gram_rank(distance));
        builder.node("M*", d + 1, mstar_basis, mstar, "{A*_i : 0<=i<=D}", gram_rank(dual_distance));
        builder.node("M+M*", 2 * d + 1, low_join, join_low, "{A_D..A_1, I, A*_1..A*_D}", gram_rank(both));
        builder.node("MM*∩M*M", 2 * d + 1 + count, high_meet, meet_high, "{A_i·A*_j : 0<=i,j<=D, u_i(θ_j)=±1}", std::nullopt);
        builder.node("MM*", size * size, mm_basis, mm, "{A_i·A*_j : 0<=i,j<=D}", gram_rank(mixed_only));
        builder.node("M*M", size * size, mstar_m_basis, mstar_m, "{A*_j·A_i : 0<=i,j<=D}", gram_rank(reversed_only));
        builder.node("MM*+M*M", 2 * d * d + 2 * d + 1 - count, high_join, join_high,
                "{A_i·A*_j ± A*_j·A_i : u_i(θ_j)≠±1} ∪ {A_i·A*_j : u_i(θ_j)=±1}", gram_rank(all_products));

        // edge complements
        ClosedForm upper_distance, upper_dual, degenerate, generic_mixed, generic_reversed, against_mixed, against_reversed;
        for (int i = 1 ; i <= diameter ; ++i) {
            upper_distance.add(distance[i], distance_labels[i]);
            upper_dual.add(dual_distance[i], dual_labels[i]);
        }
        for (int i = 1 ; i <= diameter ; ++i)
            for (int j = 1 ; j <= diameter ; ++j) {
                const auto & x = products.mixed[i][j];
                const auto & y = products.reversed[i][j];
                if (pairs.degenerate(i, j)) {
                    degenerate.add(x, mixed_label(i, j));
                    continue;
                }
                double value = u(i, j);
                generic_mixed.add(x, mixed_label(i, j));
                generic_reversed.add(y, reversed_label(i, j));
                against_mixed.add(value * x - y, "u·" + mixed_label(i, j) + "-" + reversed_label(i, j));
                against_reversed.add(x - value * y, mixed_label(i, j) + "-u·" + reversed_label(i, j));
            }

        builder.edge("M∩M*", "M", d, upper_distance, "{A_i : 1<=i<=D}");
        builder.edge("M∩M*", "M*", d, upper_dual, "{A*_i : 1<=i<=D}");
        builder.edge("M", "M+M*", d, upper_dual, "{A*_i : 1<=i<=D}");
        builder.edge("M*", "M+M*", d, upper_distance, "{A_i : 1<=i<=D}");
        builder.edge("M+M*", "MM*∩M*M", count, degenerate, "{A_i·A*_j : 1<=i,j<=D, u_i(θ_j)=±1}");
        builder.edge("MM*∩M*M", "MM*", d * d - count, generic_mixed, "{A_i·A*_j : 1<=i,j<=D, u_i(θ_j)≠±1}");
        builder.edge("MM*∩M*M", "M*M", d * d - count, generic_reversed, "{A*_j·A_i : 1<=i,j<=D, u_i(θ_j)≠±1}");
        builder.edge("MM*", "MM*+M*M", d * d - count, against_mixed,
                "{u_i(θ_j)·A_i·A*_j - A*_j·A_i : 1<=i,j<=D, u_i(θ_j)≠±1}");
        builder.edge("M*M", "MM*+M*M", d * d - count, against_reversed,
                "{A_i·A*_j - u_i(θ_j)·A*_j·A_i : 1<=i,j<=D, u_i(θ_j)≠±1}");

        // Span(A_i A*_j, A*_j A_i) summands are mutually orthogonal across distinct pairs
        double cross = 0.0;
        for (int i = 0 ; i < size ; ++i)
            for (int j = 0 ; j < size ; ++j)
                for (int r = 0 ; r < size ; ++r)
                    for (int s = 0 ; s < size ; ++s) {
                        if (std::pair{ i, j } >= std::pair{ r, s })
                            continue;
                        for (const Matrix * x : { &products.mixed[i][j], &products.reversed[i][j] })
                            for (const Matrix * y : { &products.mixed[r][s], &products.reversed[r][s] })
                                cross = std::max(cross, std::abs(inner(*x, *y)) / (x->norm() * y->norm()));
                    }
        builder.record("5.4", "pair spans Span(A_i·A*_j, A*_j·A_i) are mutually orthogonal", cross <= view.tolerance.base,
                cross, view.tolerance.base);

        // degenerate pairs commute up to sign and do not vanish; generic pairs are independent
        double sign_residual = 0.0, smallest = std::numeric_limits<double>::infinity(), independence = 1.0;
        for (int i = 0 ; i < size ; ++i)
            for (int j = 0 ; j < size ; ++j) {
                const auto & x = products.mixed[i][j];
                const auto & y = products.reversed[i][j];
                if (pairs.degenerate(i, j)) {
                    double sign = pairs.table[i][j] == PairClass::plus_one ? 1.0 : -1.0;
                    sign_residual = std::max(sign_residual, max_abs(x - sign * y) / std::max(1.0, max_abs(x)));
                    smallest = std::min(smallest, x.norm());
                }
                else {
                    double c = inner(x, y) / (x.norm() * y.norm());
                    independence = std::min(independence, 1.0 - c * c);
                }
            }
        builder.record("5.9", "A_i·A*_j = ±A*_j·A_i when u_i(θ_j) = ±1", sign_residual <= view.tolerance.base,
                sign_residual, view.tolerance.base);
        builder.record("5.9", "A_i·A*_j ≠ 0 when u_i(θ_j) = ±1", smallest > view.tolerance.base, smallest, view.tolerance.base);
        builder.record("5.9", "A_i·A*_j, A*_j·A_i independent when u_i(θ_j) ≠ ±1", independence > view.tolerance.base,
                independence, view.tolerance.base);

        return report;
    }

    auto inspect_gram_h(const AlgebraView & view, int i, int j) -> GramCheck
    {
        const int d = view.array.diameter;
        if (i < 0 || j < 0 || i > d || j > d)
            throw InputError{ "Gram check index out of range" };
        const auto & a = view.bose_mesner.distance_real[i];
        const auto & astar = view.dual.dual_distance[j];
        Matrix x = a * astar.asDiagonal();
        Matrix y = astar.asDiagonal() * a;

        const double scale = static_cast<double>(view.bose_mesner.vertex_count()) * static_cast<double>(view.array.k[i])
            * static_cast<double>(view.spectrum.multiplicities[j]);
        const double value = view.spectrum.u(i, j);

        GramCheck result;
        result.direct << inner(x, x), inner(x, y), inner(y, x), inner(y, y);
        result.expected << scale, scale * value, scale * value, scale;
        result.determinant = result.direct.determinant();
        result.expected_determinant = scale * scale * (1.0 - value * value);
        result.sum_norm2 = (x + y).squaredNorm();
        result.expected_sum_norm2 = 2.0 * scale * (1.0 + value);
        result.difference_norm2 = (x - y).squaredNorm();
        result.expected_difference_norm2 = 2.0 * scale * (1.0 - value);
        result.sum_difference_inner = inner(x + y, x - y);

        result.residual = std::max({
            (result.direct - result.expected).cwiseAbs().maxCoeff() / scale,
            std::abs(result.determinant - result.expected_determinant) / (scale * scale),
            std::abs(result.sum_norm2 - result.expected_sum_norm2) / scale,
            std::abs(result.difference_norm2 - result.expected_difference_norm2) / scale,
            std::abs(result.sum_difference_inner) / scale });
        result.threshold = view.tolerance.base;
        return result;
    }

    auto verify_gram_h(const AlgebraView & view, int i, int j) -> GramCheck
    {
        auto result = inspect_gram_h(view, i, j);
        if (! result.passed()) {
            std::ostringstream out;
            out << "Gram matrix of A_" << i << "·A*_" << j << ", A*_" << j << "·A_" << i << ": relative residual "
                << result.residual << " exceeds " << result.threshold;
            throw VerificationError{ out.str() };
        }
        return result;
    }

    auto inspect_product_inner(const AlgebraView & view, int i, int j, int r, int s)
        -> std::pair<InnerProductCheck, InnerProductCheck>
    {
        const int d = view.array.diameter;
        for (int v : { i, j, r, s })
            if (v < 0 || v > d)
                throw InputError{ "product inner index out of range" };
        const auto & bm = view.bose_mesner;
        const auto & dual = view.dual;
        Matrix x = bm.distance_real[i] * dual.dual_distance[j].asDiagonal();
        Matrix reversed = dual.dual_distance[r].asDiagonal() * bm.distance_real[s];
        Matrix same = bm.distance_real[r] * dual.dual_distance[s].asDiagonal();

        const double scale = static_cast<double>(bm.vertex_count()) * static_cast<double>(view.array.k[i])
            * static_cast<double>(view.spectrum.multiplicities[j]);

        InnerProductCheck mixed;
        mixed.closed_form = (i == s && j == r) ? scale * view.spectrum.u(i, j) : 0.0;
        mixed.direct = inner(x, reversed);
        mixed.residual = std::abs(mixed.direct - mixed.closed_form);
        mixed.threshold = view.tolerance.scaled(x.norm() * reversed.norm());

        InnerProductCheck aligned;
        aligned.closed_form = (i == r && j == s) ? scale : 0.0;
        aligned.direct = inner(x, same);
        aligned.residual = std::abs(aligned.direct - aligned.closed_form);
        aligned.threshold = view.tolerance.scaled(x.norm() * same.norm());

        return { mixed, aligned };
    }
}
