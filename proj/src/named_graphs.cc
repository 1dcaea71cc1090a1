#include <drg/graph.hh>
#include <drg/errors.hh>

#include <bit>
#include <charconv>
#include <string>

using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace drg
{
    namespace
    {
        auto require_params(Family family, span<const int> params, std::size_t count) -> void
        {
            if (params.size() != count)
                throw InputError{ string{ family_name(family) } + " takes " + std::to_string(count)
                    + " parameter" + (count == 1 ? "" : "s") + ", got " + std::to_string(params.size()) };
        }

        auto checked_power(int base, int exponent) -> int
        {
            long long result = 1;
            for (int e = 0 ; e < exponent ; ++e) {
                result *= base;
                if (result > default_max_vertices)
                    throw InputError{ std::to_string(base) + "^" + std::to_string(exponent)
                        + " vertices exceeds the cap of " + std::to_string(default_max_vertices) };
            }
            return static_cast<int>(result);
        }

        auto hamming(int d, int q) -> Graph
        {
            int n = checked_power(q, d);
            vector<Edge> edges;
            for (int x = 0 ; x < n ; ++x) {
                // change one coordinate to a larger symbol so each edge appears once
                for (int coord = 0, place = 1 ; coord < d ; ++coord, place *= q) {
                    int digit = (x / place) % q;
                    for (int other = digit + 1 ; other < q ; ++other)
                        edges.emplace_back(x, x + (other - digit) * place);
                }
            }
            return Graph::from_edges(n, edges);
        }

        auto johnson(int n, int k) -> Graph
        {
            if (n > 30)
                throw InputError{ "johnson: n too large" };
            vector<unsigned> subsets;
            for (unsigned mask = 0 ; mask < (1u << n) ; ++mask)
                if (std::popcount(mask) == k) {
                    subsets.push_back(mask);
                    if (subsets.size() > static_cast<std::size_t>(default_max_vertices))
                        throw InputError{ "johnson: vertex count exceeds the cap of " + std::to_string(default_max_vertices) };
                }
            vector<Edge> edges;
            for (std::size_t u = 0 ; u < subsets.size() ; ++u)
                for (std::size_t v = u + 1 ; v < subsets.size() ; ++v)
                    if (std::popcount(subsets[u] & subsets[v]) == k - 1)
                        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            return Graph::from_edges(static_cast<int>(subsets.size()), edges);
        }

        auto cycle(int n) -> Graph
        {
            vector<Edge> edges;
            for (int v = 0 ; v < n ; ++v)
                edges.emplace_back(v, (v + 1) % n);
            return Graph::from_edges(n, edges);
        }
    }

    auto parse_family(string_view tag) -> Family
    {
        if (tag == "hypercube") return Family::hypercube;
        if (tag == "hamming") return Family::hamming;
        if (tag == "johnson") return Family::johnson;
        if (tag == "cycle") return Family::cycle;
        throw InputError{ "unknown graph family '" + string{ tag } + "'" };
    }

    auto family_name(Family family) -> string_view
    {
        switch (family) {
            case Family::hypercube: return "hypercube";
            case Family::hamming: return "hamming";
            case Family::johnson: return "johnson";
            case Family::cycle: return "cycle";
        }
        return "unknown";
    }

    auto build_named(Family family, span<const int> params) -> Graph
    {
        switch (family) {
            case Family::hypercube:
                require_params(family, params, 1);
                if (params[0] < 3)
                    throw InputError{ "hypercube: dimension must be at least 3" };
                return hamming(params[0], 2);

            case Family::hamming:
                require_params(family, params, 2);
                if (params[0] < 3 || params[1] < 2)
                    throw InputError{ "hamming: need d >= 3 and q >= 2" };
                return hamming(params[0], params[1]);

            case Family::johnson:
                require_params(family, params, 2);
                if (params[1] < 0 || params[1] > params[0] || std::min(params[1], params[0] - params[1]) < 3)
                    throw InputError{ "johnson: need min(k, n - k) >= 3" };
                return johnson(params[0], params[1]);

            case Family::cycle:
                require_params(family, params, 1);
                if (params[0] < 6)
                    throw InputError{ "cycle: need n >= 6" };
                if (params[0] > default_max_vertices)
                    throw InputError{ "cycle: vertex count exceeds the cap" };
                return cycle(params[0]);
        }
        throw InputError{ "unknown graph family" };
    }

    auto build_named(string_view description) -> Graph
    {
        auto colon = description.find(':');
        if (colon == string_view::npos)
            throw InputError{ "graph description '" + string{ description } + "' must look like family:p1,p2" };
        auto family = parse_family(description.substr(0, colon));

        vector<int> params;
        auto rest = description.substr(colon + 1);
        while (true) {
            auto comma = rest.find(',');
            auto field = rest.substr(0, comma);
            int value = 0;
            auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
                throw InputError{ "bad parameter '" + string{ field } + "' in '" + string{ description } + "'" };
            params.push_back(value);
            if (comma == string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        return build_named(family, params);
    }
}
