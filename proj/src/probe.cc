#include <drg/lattice.hh>
#include <drg/errors.hh>

#include <string>

using std::string;
using std::vector;

namespace drg
{
    auto probe_upper(const AlgebraView & view, const LatticeReport & lattice, const ProbeOptions & probe,
            const SpanOptions & options) -> ProbeResult
    {
        if (probe.max_word_length < 1)
            throw InputError{ "word length cap must be at least 1" };

        const int diameter = view.array.diameter;
        const int size = diameter + 1;
        const int n = view.bose_mesner.vertex_count();
        const auto & bm = view.bose_mesner;
        const auto & dual = view.dual;

        ProbeResult result;
        const auto & m = lattice.node("M").numeric;
        const auto & mstar = lattice.node("M*").numeric;
        const auto & mm = lattice.node("MM*").numeric;
        const auto & mstar_m = lattice.node("M*M").numeric;

        auto upper_left = product_space(mm, m, options);
        auto upper_right = product_space(mstar_m, mstar, options);
        result.product_mstar_m = upper_left.dim();
        result.product_m_mstar = upper_right.dim();
        result.meet = intersect_space(upper_left, upper_right, options).dim();
        auto join = sum_space(upper_left, upper_right, options);
        result.join = join.dim();

        for (int h = 0 ; h < size ; ++h)
            for (int i = 0 ; i < size ; ++i)
                for (int j = 0 ; j < size ; ++j) {
                    if (view.array.p(h, i, j) != 0)
                        ++result.nonzero_p;
                    if (bm.krein.q(h, i, j) > view.tolerance.base)
                        ++result.nonzero_q;
                }

        vector<Matrix> dual_sandwiches, sandwiches;
        for (int i = 0 ; i < size ; ++i)
            for (int j = 0 ; j < size ; ++j)
                for (int h = 0 ; h < size ; ++h) {
                    dual_sandwiches.push_back(dual.dual_idempotents[i].asDiagonal() * bm.distance_real[j]
                            * dual.dual_idempotents[h].asDiagonal());
                    sandwiches.push_back(bm.idempotents[i] * dual.dual_distance[j].asDiagonal() * bm.idempotents[h]);
                }
        result.gram_rank_dual_sandwich = gram_rank(dual_sandwiches).rank;
        result.gram_rank_sandwich = gram_rank(sandwiches).rank;

        const auto & product_sum = lattice.node("MM*+M*M").numeric;
        auto meet = intersect_space(upper_left, upper_right, options);
        result.contains_product_sum = contains(meet, product_sum, options);

        // words of length <= L in M and M*: W_1 = M + M*, W_{L+1} = W_L + W_L (M + M*)
        const auto & letters_space = lattice.node("M+M*").numeric;
        vector<Matrix> letters;
        for (int r = 0 ; r < letters_space.dim() ; ++r)
            letters.push_back(letters_space.basis(r));

        MatrixSpace words = letters_space;
        int fresh_from = 0;
        result.chain.push_back(words.dim());
        for (int length = 2 ; length <= probe.max_word_length ; ++length) {
            auto fresh = tail(words, fresh_from);
            vector<Matrix> generators;
            vector<string> labels;
            for (int r = 0 ; r < fresh.dim() ; ++r) {
                Matrix word = fresh.basis(r);
                for (int t = 0 ; t < static_cast<int>(letters.size()) ; ++t) {
                    generators.push_back(word * letters[t]);
                    labels.push_back("w" + std::to_string(length) + "." + std::to_string(r) + "·" + std::to_string(t));
                }
            }
            const int before = words.dim();
            words = extend(words, generators, labels, options);
            if (words.dim() == before) {
                result.converged = true;
                break;
            }
            fresh_from = before;
            result.chain.push_back(words.dim());
            if (words.dim() == n * n) {
                result.converged = true;
                break;
            }
        }
        if (result.converged)
            result.algebra_dim = result.chain.back();
        return result;
    }

    auto record_probe(LatticeReport & report, ProbeResult probe) -> void
    {
        auto exact = [&] (const string & name, long long got, long long want) {
            report.verdicts.push_back(Verdict{ "probe", name, got == want, static_cast<double>(std::llabs(got - want)), 0.0,
                    "got " + std::to_string(got) + ", expected " + std::to_string(want) });
        };
        exact("dim M*MM* equals the number of nonzero p^h_ij", probe.product_m_mstar, probe.nonzero_p);
        exact("dim M*MM* equals the Gram rank of all E*_i A_j E*_h", probe.product_m_mstar, probe.gram_rank_dual_sandwich);
        exact("dim MM*M equals the number of nonzero q^h_ij", probe.product_mstar_m, probe.nonzero_q);
        exact("dim MM*M equals the Gram rank of all E_i A*_j E_h", probe.product_mstar_m, probe.gram_rank_sandwich);
        exact("dim(MM*M ∩ M*MM*) + dim(MM*M + M*MM*) = dim MM*M + dim M*MM*", probe.meet + probe.join,
                probe.product_mstar_m + probe.product_m_mstar);
        report.verdicts.push_back(Verdict{ "probe", "MM*+M*M lies in MM*M ∩ M*MM*", probe.contains_product_sum, 0.0, 0.0, "" });
        report.probe = std::move(probe);
    }
}
