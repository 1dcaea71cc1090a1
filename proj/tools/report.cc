#include "report.hh"

#include <cmath>
#include <cstdio>
#include <algorithm>
#include <map>
#include <sstream>

using nlohmann::json;
using std::string;

namespace drg::cli
{
    auto round_significant(double x, int digits) -> double
    {
        if (! std::isfinite(x) || x == 0.0)
            return x;
        char buffer[64];
        std::snprintf(buffer, sizeof buffer, "%.*g", digits, x);
        return std::stod(buffer);
    }

    namespace
    {
        auto number(double x) -> json
        {
            if (! std::isfinite(x))
                return nullptr;
            return round_significant(x);
        }

        auto text_number(double x) -> string
        {
            char buffer[64];
            std::snprintf(buffer, sizeof buffer, "%.3g", x);
            return buffer;
        }

        auto dot_escape(const string & s) -> string
        {
            string out;
            for (char c : s) {
                if (c == '"' || c == '\\')
                    out += '\\';
                out += c;
            }
            return out;
        }

        auto display_name(const string & node) -> string
        {
            return node == "M∩M*" ? "ℂI" : node;
        }
    }

    auto verdict_json(const Verdict & v) -> json
    {
        return json{
            { "tag", v.tag },
            { "name", v.name },
            { "passed", v.passed },
            { "residual", number(v.residual) },
            { "threshold", number(v.threshold) },
            { "detail", v.detail },
        };
    }

    auto report_json(const LatticeReport & report) -> json
    {
        json doc;
        doc["schema"] = schema_version;
        doc["graph"] = json{
            { "name", report.graph.name },
            { "vertices", report.graph.vertices },
            { "diameter", report.graph.diameter },
            { "valency", report.graph.valency },
            { "b", report.graph.b },
            { "c", report.graph.c },
        };
        doc["base_vertex"] = report.base_vertex;

        json theta = json::array();
        for (double t : report.theta)
            theta.push_back(number(t));
        doc["spectrum"] = json{ { "theta", theta }, { "multiplicities", report.multiplicities } };

        json table = json::array(), degenerate = json::array();
        for (size_t i = 0 ; i < report.pairs.table.size() ; ++i) {
            json row = json::array();
            for (size_t j = 0 ; j < report.pairs.table[i].size() ; ++j) {
                row.push_back(string{ pair_class_name(report.pairs.table[i][j]) });
                if (i >= 1 && j >= 1 && report.pairs.degenerate(static_cast<int>(i), static_cast<int>(j)))
                    degenerate.push_back(json::array({ i, j }));
            }
            table.push_back(row);
        }
        doc["pair_classification"] = json{ { "P", report.pairs.count }, { "table", table }, { "degenerate_pairs", degenerate } };

        json nodes = json::array();
        for (const auto & n : report.nodes)
            nodes.push_back(json{
                { "name", n.name },
                { "closed_dim", n.closed_dim },
                { "numeric_dim", n.numeric.dim() },
                { "basis", n.basis_descriptor },
                { "closed_basis_size", n.closed_basis_size },
                { "orthogonality_residual", number(n.orthogonality_residual) },
                { "warnings", n.numeric.warnings() },
            });
        doc["nodes"] = nodes;

        json edges = json::array();
        for (const auto & e : report.edges)
            edges.push_back(json{
                { "lower", e.lower },
                { "upper", e.upper },
                { "closed_dim", e.closed_dim },
                { "numeric_dim", e.complement.dim() },
                { "basis", e.basis_descriptor },
                { "closed_basis_size", e.closed_basis_size },
                { "orthogonality_residual", number(e.orthogonality_residual) },
            });
        doc["edges"] = edges;

        if (report.probe) {
            const auto & p = *report.probe;
            doc["probe"] = json{
                { "MM*M", p.product_mstar_m },
                { "M*MM*", p.product_m_mstar },
                { "MM*M∩M*MM*", p.meet },
                { "MM*M+M*MM*", p.join },
                { "nonzero_p", p.nonzero_p },
                { "nonzero_q", p.nonzero_q },
                { "gram_rank_dual_sandwich", p.gram_rank_dual_sandwich },
                { "gram_rank_sandwich", p.gram_rank_sandwich },
                { "contains_product_sum", p.contains_product_sum },
                { "word_chain", p.chain },
                { "T", p.converged ? json(p.algebra_dim) : json(nullptr) },
                { "converged", p.converged },
            };
        }
        else
            doc["probe"] = nullptr;

        json verdicts = json::array();
        for (const auto & v : report.verdicts)
            verdicts.push_back(verdict_json(v));
        doc["verdicts"] = verdicts;
        doc["passed"] = report.passed();
        return doc;
    }

    auto write_verdict_lines(std::ostream & out, std::span<const Verdict> verdicts) -> void
    {
        for (const auto & v : verdicts) {
            out << (v.passed ? "PASS" : "FAIL") << " [" << v.tag << "] " << v.name << "  residual "
                << text_number(v.residual) << " (threshold " << text_number(v.threshold) << ")";
            if (! v.detail.empty())
                out << "  " << v.detail;
            out << '\n';
        }
    }

    auto write_text(std::ostream & out, const LatticeReport & report) -> void
    {
        const auto & g = report.graph;
        out << "graph " << g.name << "  n=" << g.vertices << "  D=" << g.diameter << "  k=" << g.valency << '\n';
        out << "intersection array {";
        for (size_t i = 0 ; i < g.b.size() ; ++i)
            out << (i ? "," : "") << g.b[i];
        out << "; ";
        for (size_t i = 0 ; i < g.c.size() ; ++i)
            out << (i ? "," : "") << g.c[i];
        out << "}\n";
        out << "base vertex " << report.base_vertex << '\n';
        out << "eigenvalues";
        for (double t : report.theta)
            out << ' ' << round_significant(t, 10);
        out << "\nmultiplicities";
        for (auto m : report.multiplicities)
            out << ' ' << m;
        out << "\nP = " << report.pairs.count;
        if (report.pairs.count > 0) {
            out << "  pairs";
            for (int i = 1 ; i <= report.pairs.diameter() ; ++i)
                for (int j = 1 ; j <= report.pairs.diameter() ; ++j)
                    if (report.pairs.degenerate(i, j))
                        out << " (" << i << "," << j << ")"
                            << (report.pairs.table[i][j] == PairClass::plus_one ? "+" : "-");
        }
        out << "\n\nnodes\n";
        for (const auto & n : report.nodes)
            out << "  " << n.name << "  dim " << n.numeric.dim()
                << (n.numeric.dim() == n.closed_dim ? "" : "  (closed form " + std::to_string(n.closed_dim) + ")")
                << "  basis " << n.basis_descriptor << '\n';
        out << "\nedges\n";
        for (const auto & e : report.edges)
            out << "  " << e.lower << " ⊆ " << e.upper << "  ⊥dim " << e.complement.dim()
                << (e.complement.dim() == e.closed_dim ? "" : "  (closed form " + std::to_string(e.closed_dim) + ")")
                << "  basis " << e.basis_descriptor << '\n';

        if (report.probe) {
            const auto & p = *report.probe;
            out << "\nprobe (base vertex " << report.base_vertex << ")\n";
            out << "  MM*M  dim " << p.product_mstar_m << "  (nonzero q: " << p.nonzero_q << ")\n";
            out << "  M*MM*  dim " << p.product_m_mstar << "  (nonzero p: " << p.nonzero_p << ")\n";
            out << "  MM*M∩M*MM*  dim " << p.meet << '\n';
            out << "  MM*M+M*MM*  dim " << p.join << '\n';
            out << "  word chain";
            for (int d : p.chain)
                out << ' ' << d;
            out << '\n';
            if (p.converged)
                out << "  T  dim " << p.algebra_dim << '\n';
            else
                out << "  T  not converged\n";
        }

        long long failed = std::count_if(report.verdicts.begin(), report.verdicts.end(), [] (const Verdict & v) { return ! v.passed; });
        out << "\nverdicts  " << report.verdicts.size() - failed << " passed, " << failed << " failed\n";
        write_verdict_lines(out, report.verdicts);
    }

    auto write_dot(std::ostream & out, const LatticeReport & report, const string & graph_id) -> void
    {
        std::map<string, string> ids;
        out << "digraph " << graph_id << " {\n";
        out << "  rankdir=BT;\n";
        out << "  node [shape=box];\n";
        out << "  label=\"" << dot_escape(report.graph.name) << ", base vertex " << report.base_vertex << "\";\n";
        int counter = 0;
        for (const auto & n : report.nodes) {
            string id = "n" + std::to_string(counter++);
            ids[n.name] = id;
            out << "  " << id << " [label=\"" << dot_escape(display_name(n.name)) << "\\ndim=" << n.numeric.dim() << "\"];\n";
        }
        for (const auto & e : report.edges)
            out << "  " << ids.at(e.lower) << " -> " << ids.at(e.upper) << " [label=\"⊥dim=" << e.complement.dim() << "\"];\n";

        if (report.probe) {
            const auto & p = *report.probe;
            const int top = report.node("MM*+M*M").numeric.dim();
            out << "  p0 [label=\"MM*M∩M*MM*\\ndim=" << p.meet << "\", style=dashed];\n";
            out << "  p1 [label=\"MM*M\\ndim=" << p.product_mstar_m << "\", style=dashed];\n";
            out << "  p2 [label=\"M*MM*\\ndim=" << p.product_m_mstar << "\", style=dashed];\n";
            out << "  p3 [label=\"MM*M+M*MM*\\ndim=" << p.join << "\", style=dashed];\n";
            out << "  " << ids.at("MM*+M*M") << " -> p0 [label=\"⊥dim=" << p.meet - top << "\"];\n";
            out << "  p0 -> p1 [label=\"⊥dim=" << p.product_mstar_m - p.meet << "\"];\n";
            out << "  p0 -> p2 [label=\"⊥dim=" << p.product_m_mstar - p.meet << "\"];\n";
            out << "  p1 -> p3 [label=\"⊥dim=" << p.join - p.product_mstar_m << "\"];\n";
            out << "  p2 -> p3 [label=\"⊥dim=" << p.join - p.product_m_mstar << "\"];\n";
            if (p.converged) {
                out << "  p4 [label=\"T\\ndim=" << p.algebra_dim << "\", style=dashed];\n";
                out << "  p3 -> p4 [style=dotted, label=\"⊥dim=" << p.algebra_dim - p.join << "\"];\n";
            }
            else
                out << "  p4 [label=\"T\\nnot converged\", style=dashed];\n  p3 -> p4 [style=dotted];\n";
        }
        out << "}\n";
    }
}
