#include <drg/graph.hh>
#include <drg/errors.hh>

#include <algorithm>
#include <istream>
#include <queue>
#include <set>
#include <sstream>

using std::int64_t;
using std::set;
using std::span;
using std::string;
using std::vector;

namespace drg
{
    namespace
    {
        constexpr int unreachable = -1;

        auto line_error(int line, const string & what) -> InputError
        {
            return InputError{ "line " + std::to_string(line) + ": " + what };
        }
    }

    auto Graph::from_edges(int size, span<const Edge> edges, int max_vertices) -> Graph
    {
        if (size <= 0)
            throw InputError{ "graph has no vertices" };
        if (size > max_vertices)
            throw InputError{ "graph has " + std::to_string(size) + " vertices, more than the cap of "
                + std::to_string(max_vertices) };

        Graph g;
        g._size = size;
        g._neighbours.resize(size);

        set<Edge> seen;
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= size || v >= size)
                throw InputError{ "edge " + std::to_string(u) + " " + std::to_string(v) + " has an endpoint out of range" };
            if (u == v)
                throw InputError{ "self-loop at vertex " + std::to_string(u) };
            if (! seen.emplace(std::min(u, v), std::max(u, v)).second)
                throw InputError{ "duplicate edge " + std::to_string(u) + " " + std::to_string(v) };
            g._neighbours[u].push_back(v);
            g._neighbours[v].push_back(u);
        }
        for (auto & n : g._neighbours)
            std::sort(n.begin(), n.end());

        g._distances.assign(static_cast<std::size_t>(size) * size, unreachable);
        std::queue<int> frontier;
        for (int s = 0 ; s < size ; ++s) {
            auto * row = &g._distances[static_cast<std::size_t>(s) * size];
            row[s] = 0;
            frontier.push(s);
            while (! frontier.empty()) {
                int u = frontier.front();
                frontier.pop();
                for (int v : g._neighbours[u])
                    if (row[v] == unreachable) {
                        row[v] = row[u] + 1;
                        frontier.push(v);
                    }
            }
            for (int t = 0 ; t < size ; ++t) {
                if (row[t] == unreachable)
                    throw InputError{ "graph is disconnected: no path from " + std::to_string(s) + " to " + std::to_string(t) };
                g._diameter = std::max(g._diameter, row[t]);
            }
        }

        return g;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (int u = 0 ; u < _size ; ++u)
            for (int v : _neighbours[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::relabelled(span<const int> permutation) const -> Graph
    {
        if (static_cast<int>(permutation.size()) != _size)
            throw InputError{ "permutation size does not match the graph" };
        vector<Edge> mapped;
        for (auto [u, v] : edges())
            mapped.emplace_back(permutation[u], permutation[v]);
        return from_edges(_size, mapped, std::max(_size, default_max_vertices));
    }

    auto load_edge_list(std::istream & input, int max_vertices) -> Graph
    {
        std::optional<int> declared;
        vector<Edge> edges;
        set<std::pair<long long, long long>> seen;
        int max_index = -1;
        bool seen_content = false;

        string line;
        int line_number = 0;
        while (std::getline(input, line)) {
            ++line_number;
            auto first = line.find_first_not_of(" \t\r");
            if (first == string::npos || line[first] == '#')
                continue;

            std::istringstream fields{ line };
            vector<long long> values;
            string token;
            while (fields >> token) {
                std::size_t used = 0;
                long long value = 0;
                try {
                    value = std::stoll(token, &used);
                }
                catch (const std::exception &) {
                    throw line_error(line_number, "expected an integer, found '" + token + "'");
                }
                if (used != token.size())
                    throw line_error(line_number, "expected an integer, found '" + token + "'");
                values.push_back(value);
            }

            if (! seen_content && values.size() == 1) {
                seen_content = true;
                if (values[0] <= 0 || values[0] > max_vertices)
                    throw line_error(line_number, "vertex count " + std::to_string(values[0]) + " out of range");
                declared = static_cast<int>(values[0]);
                continue;
            }
            seen_content = true;

            if (values.size() != 2)
                throw line_error(line_number, "expected two endpoints");
            auto [u, v] = std::pair{ values[0], values[1] };
            if (u < 0 || v < 0 || u >= max_vertices || v >= max_vertices)
                throw line_error(line_number, "endpoint out of range");
            if (declared && (u >= *declared || v >= *declared))
                throw line_error(line_number, "endpoint exceeds declared vertex count " + std::to_string(*declared));
            if (u == v)
                throw line_error(line_number, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            max_index = std::max<int>(max_index, static_cast<int>(std::max(u, v)));

            // duplicates are reported here, where the line number is known
            if (! seen.emplace(std::min(u, v), std::max(u, v)).second)
                throw line_error(line_number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }

        int size = declared ? *declared : max_index + 1;
        if (size <= 0)
            throw InputError{ "edge list is empty" };
        return Graph::from_edges(size, edges, max_vertices);
    }

    auto describe(const RegularityWitness & w) -> string
    {
        std::ostringstream out;
        out << "not distance-regular: |Γ_" << w.i << "(x) ∩ Γ_" << w.j << "(y)| at distance h=" << w.h
            << " is " << w.count << " for (x,y)=(" << w.x << "," << w.y << ") but "
            << w.other_count << " for (x,y)=(" << w.other_x << "," << w.other_y << ")";
        return out.str();
    }

    auto check_distance_regular(const Graph & graph) -> RegularityCheck
    {
        const int n = graph.size();
        const int d = graph.diameter() + 1;

        vector<int64_t> reference(static_cast<std::size_t>(d) * d * d, 0);
        vector<std::optional<Edge>> representative(d);
        vector<int64_t> counts(static_cast<std::size_t>(d) * d);

        for (int x = 0 ; x < n ; ++x)
            for (int y = 0 ; y < n ; ++y) {
                std::fill(counts.begin(), counts.end(), 0);
                for (int z = 0 ; z < n ; ++z)
                    ++counts[graph.distance(x, z) * d + graph.distance(y, z)];

                int h = graph.distance(x, y);
                auto * table = &reference[static_cast<std::size_t>(h) * d * d];
                if (! representative[h]) {
                    representative[h] = Edge{ x, y };
                    std::copy(counts.begin(), counts.end(), table);
                    continue;
                }

                for (int i = 0 ; i < d ; ++i)
                    for (int j = 0 ; j < d ; ++j)
                        if (counts[i * d + j] != table[i * d + j]) {
                            auto [rx, ry] = *representative[h];
                            return RegularityCheck{ false,
                                RegularityWitness{ h, i, j, rx, ry, x, y, table[i * d + j], counts[i * d + j] },
                                std::nullopt };
                        }
            }

        IntersectionArray ia;
        ia.diameter = d - 1;
        ia.tensor = std::move(reference);
        for (int i = 0 ; i < d ; ++i) {
            ia.k.push_back(ia.p(0, i, i));
            ia.a.push_back(i == 0 ? 0 : ia.p(i, 1, i));
            if (i + 1 < d)
                ia.b.push_back(ia.p(i, 1, i + 1));
            if (i > 0)
                ia.c.push_back(ia.p(i, 1, i - 1));
        }
        return RegularityCheck{ true, std::nullopt, std::move(ia) };
    }

    auto is_distance_regular(const Graph & graph) -> bool
    {
        return check_distance_regular(graph).distance_regular;
    }

    auto intersection_array(const Graph & graph) -> IntersectionArray
    {
        auto check = check_distance_regular(graph);
        if (! check.distance_regular)
            throw InputError{ describe(*check.witness) };
        return std::move(*check.array);
    }
}
