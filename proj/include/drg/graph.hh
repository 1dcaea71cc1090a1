#ifndef DRG_GRAPH_HH
#define DRG_GRAPH_HH

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace drg
{
    inline constexpr int default_max_vertices = 1024;

    using Edge = std::pair<int, int>;

    /**
     * A finite, simple, undirected, connected graph on vertices 0..n-1 with
     * its dense all-pairs distance table. Immutable once built.
     */
    class Graph
    {
        private:
            int _size = 0;
            int _diameter = 0;
            std::vector<std::vector<int>> _neighbours;
            std::vector<int> _distances;

            Graph() = default;

        public:
            /// Validates the edge set (no loops, no duplicates, endpoints in
            /// range, connected) and runs a breadth-first search from every vertex.
            static auto from_edges(int size, std::span<const Edge> edges,
                    int max_vertices = default_max_vertices) -> Graph;

            auto size() const -> int { return _size; }
            auto diameter() const -> int { return _diameter; }
            auto distance(int x, int y) const -> int { return _distances[x * _size + y]; }
            auto adjacent(int x, int y) const -> bool { return distance(x, y) == 1; }
            auto neighbours(int x) const -> const std::vector<int> & { return _neighbours[x]; }
            auto degree(int x) const -> int { return static_cast<int>(_neighbours[x].size()); }
            auto edges() const -> std::vector<Edge>;

            /// Same graph with vertex v renamed to permutation[v].
            auto relabelled(std::span<const int> permutation) const -> Graph;
    };

    /// Parses "u v" lines with an optional leading vertex count line. Blank
    /// lines and '#' comments are skipped. Errors carry the line number.
    auto load_edge_list(std::istream & input, int max_vertices = default_max_vertices) -> Graph;

    enum class Family
    {
        hypercube,
        hamming,
        johnson,
        cycle
    };

    auto parse_family(std::string_view tag) -> Family;
    auto family_name(Family family) -> std::string_view;

    /// hypercube(d), hamming(d, q), johnson(n, k), cycle(n); diameter is always >= 3.
    auto build_named(Family family, std::span<const int> params) -> Graph;

    /// Parses "family:p1,p2,..." and builds it.
    auto build_named(std::string_view description) -> Graph;

    struct IntersectionArray
    {
        int diameter = 0;
        std::vector<std::int64_t> b; ///< b_0 .. b_{D-1}
        std::vector<std::int64_t> c; ///< c_1 .. c_D, stored at index i-1
        std::vector<std::int64_t> a; ///< a_0 .. a_D
        std::vector<std::int64_t> k; ///< k_0 .. k_D
        std::vector<std::int64_t> tensor; ///< p^h_ij at (h * (D+1) + i) * (D+1) + j

        auto p(int h, int i, int j) const -> std::int64_t
        {
            auto d = diameter + 1;
            return tensor[(h * d + i) * d + j];
        }

        auto valency() const -> std::int64_t { return diameter > 0 ? k[1] : 0; }

        /// b_i for 0 <= i <= D, with b_D = 0.
        auto b_at(int i) const -> std::int64_t { return i < diameter ? b[i] : 0; }

        /// c_i for 0 <= i <= D, with c_0 = 0.
        auto c_at(int i) const -> std::int64_t { return i == 0 ? 0 : c[i - 1]; }
    };

    /// Two pairs at the same distance h whose |Γ_i(x) ∩ Γ_j(y)| counts differ.
    struct RegularityWitness
    {
        int h, i, j;
        int x, y;
        int other_x, other_y;
        std::int64_t count, other_count;
    };

    auto describe(const RegularityWitness & witness) -> std::string;

    struct RegularityCheck
    {
        bool distance_regular = false;
        std::optional<RegularityWitness> witness;
        std::optional<IntersectionArray> array;
    };

    /// Counts |Γ_i(x) ∩ Γ_j(y)| for every ordered pair; the first pair at each
    /// distance supplies the intersection numbers and every other pair is
    /// compared against it.
    auto check_distance_regular(const Graph & graph) -> RegularityCheck;

    auto is_distance_regular(const Graph & graph) -> bool;

    /// Throws InputError (with the witness) when the graph is not distance-regular.
    auto intersection_array(const Graph & graph) -> IntersectionArray;
}

#endif
