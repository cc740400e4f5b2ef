#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace icol
{
    using Vertex = int;
    using EdgeId = int;

    struct Edge
    {
        Vertex u;
        Vertex v;

        auto operator<=>(const Edge &) const = default;
    };

    /// Thrown for parameters outside a family's or operation's domain.
    class DomainError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Thrown when a pair of vertices is unreachable, or a graph is
    /// disconnected where connectivity is required.
    class InfiniteDistance : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Simple undirected graph in canonical form.
    ///
    /// Edges are stored with u < v, deduplicated and sorted lexicographically,
    /// so two equal graphs compare and serialise identically. Adjacency and
    /// incidence lists are derived from the edge list and sorted by neighbour.
    class Graph
    {
    public:
        Graph() = default;

        /// Builds the canonical graph. Pairs may be given in either
        /// orientation and in any order; duplicates are merged.
        /// Loops and out-of-range endpoints throw DomainError.
        Graph(int vertex_count, std::vector<Edge> edges);

        auto vertex_count() const -> int { return vertex_count_; }
        auto edge_count() const -> int { return static_cast<int>(edges_.size()); }
        auto edges() const -> const std::vector<Edge> & { return edges_; }
        auto edge(EdgeId e) const -> const Edge & { return edges_[e]; }

        auto degree(Vertex v) const -> int { return static_cast<int>(adjacency_[v].size()); }
        auto max_degree() const -> int;
        auto is_regular() const -> bool;

        auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return adjacency_[v]; }

        /// Edge ids incident to v, aligned with neighbours(v).
        auto incident(Vertex v) const -> const std::vector<EdgeId> & { return incident_[v]; }

        auto edge_index(Vertex a, Vertex b) const -> std::optional<EdgeId>;

        /// As edge_index, but throws DomainError if a and b are not adjacent.
        auto edge_at(Vertex a, Vertex b) const -> EdgeId;

        auto has_edge(Vertex a, Vertex b) const -> bool { return edge_index(a, b).has_value(); }

        auto is_connected() const -> bool;

        auto operator==(const Graph & other) const -> bool
        {
            return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
        }

    private:
        int vertex_count_ = 0;
        std::vector<Edge> edges_;
        std::vector<std::vector<Vertex>> adjacency_;
        std::vector<std::vector<EdgeId>> incident_;
    };

    // Family descriptions. Each variant documents its coordinate scheme; all
    // schemes are row-major bijections onto [0, vertex_count).

    struct FamilySpec;

    namespace family
    {
        /// P_n: vertex i is the i-th vertex along the path.
        struct Path { int n; };
        /// C_n: vertex i, edges i ~ i+1 and 0 ~ n-1.
        struct Cycle { int n; };
        struct Complete { int n; };
        /// K_{r,s}: x_i = i for i < r, y_j = r + j.
        struct CompleteBipartite { int r; int s; };
        /// Q_n: the vertex id is its bit-vector, first factor most significant.
        struct Hypercube { int n; };
        /// P_{d0} x P_{d1} x ...: id = ((c0 * d1) + c1) * d2 + ...
        struct Grid { std::vector<int> dims; };
        /// C(m,n) = P_m x C_n: v_j^{(i)} -> (i-1) * n + (j-1).
        struct Cylinder { int m; int n; };
        /// T(m,n) = C_m x C_n: v_j^{(i)} -> (i-1) * n + (j-1).
        struct Torus { int m; int n; };
        /// left x right: (u, v) -> u * |V(right)| + v.
        struct Product
        {
            std::shared_ptr<const FamilySpec> left;
            std::shared_ptr<const FamilySpec> right;
        };
    }

    struct FamilySpec
    {
        std::variant<family::Path, family::Cycle, family::Complete, family::CompleteBipartite,
            family::Hypercube, family::Grid, family::Cylinder, family::Torus, family::Product> variant;

        static auto path(int n) -> FamilySpec { return {family::Path{n}}; }
        static auto cycle(int n) -> FamilySpec { return {family::Cycle{n}}; }
        static auto complete(int n) -> FamilySpec { return {family::Complete{n}}; }
        static auto complete_bipartite(int r, int s) -> FamilySpec { return {family::CompleteBipartite{r, s}}; }
        static auto hypercube(int n) -> FamilySpec { return {family::Hypercube{n}}; }
        static auto grid(std::vector<int> dims) -> FamilySpec { return {family::Grid{std::move(dims)}}; }
        static auto cylinder(int m, int n) -> FamilySpec { return {family::Cylinder{m, n}}; }
        static auto torus(int m, int n) -> FamilySpec { return {family::Torus{m, n}}; }
        static auto product(FamilySpec a, FamilySpec b) -> FamilySpec;

        /// Throws DomainError naming the first out-of-range parameter.
        auto validate() const -> void;

        auto vertex_count() const -> int;

        /// Human-readable name, e.g. "C(3,5)" or "Q_3".
        auto name() const -> std::string;
    };

    /// Builds the family's graph. Grid, cylinder, torus and hypercube go through
    /// cartesian_product of their factors.
    auto realize(const FamilySpec & spec) -> Graph;

    auto cartesian_product(const Graph & g, const Graph & h) -> Graph;

    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto complete_bipartite_graph(int r, int s) -> Graph;

    /// BFS distances from source; unreachable vertices get -1.
    auto distances_from(const Graph & g, Vertex source) -> std::vector<int>;

    auto distance(const Graph & g, Vertex u, Vertex v) -> int;
    auto diameter(const Graph & g) -> int;

    /// Minimum vertex distance between the endpoints of two edges.
    auto edge_distance(const Graph & g, EdgeId e, EdgeId f) -> int;

    struct Bipartition
    {
        bool bipartite = false;
        /// side[v] in {0, 1}; empty when not bipartite.
        std::vector<int> side;
    };

    auto is_bipartite(const Graph & g) -> Bipartition;

    // Edge-list text format: "n m" followed by m lines "u v", 0-based, u < v.
    auto write_edge_list(std::ostream & out, const Graph & g) -> void;
    auto read_edge_list(std::istream & in) -> Graph;
    auto to_edge_list(const Graph & g) -> std::string;

    /// Thrown by the readers with a message naming the offending line or field.
    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}
