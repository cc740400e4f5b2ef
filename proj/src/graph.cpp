#include <icol/graph.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

namespace icol
{
    Graph::Graph(int vertex_count, std::vector<Edge> edges) :
        vertex_count_(vertex_count)
    {
        if (vertex_count < 0)
            throw DomainError("vertex_count must be nonnegative, got " + std::to_string(vertex_count));

        for (auto & [u, v] : edges) {
            if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
                throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
            if (u == v)
                throw DomainError("loop at vertex " + std::to_string(u));
            if (u > v)
                std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);

        adjacency_.assign(vertex_count_, {});
        incident_.assign(vertex_count_, {});
        std::vector<std::vector<std::pair<Vertex, EdgeId>>> pairs(vertex_count_);
        for (EdgeId e = 0 ; e < edge_count() ; ++e) {
            pairs[edges_[e].u].emplace_back(edges_[e].v, e);
            pairs[edges_[e].v].emplace_back(edges_[e].u, e);
        }
        for (Vertex v = 0 ; v < vertex_count_ ; ++v) {
            std::sort(pairs[v].begin(), pairs[v].end());
            for (auto & [w, e] : pairs[v]) {
                adjacency_[v].push_back(w);
                incident_[v].push_back(e);
            }
        }
    }

    auto Graph::max_degree() const -> int
    {
        int best = 0;
        for (auto & a : adjacency_)
            best = std::max(best, static_cast<int>(a.size()));
        return best;
    }

    auto Graph::is_regular() const -> bool
    {
        return std::all_of(adjacency_.begin(), adjacency_.end(),
                [&] (const auto & a) { return a.size() == adjacency_.front().size(); });
    }

    auto Graph::edge_index(Vertex a, Vertex b) const -> std::optional<EdgeId>
    {
        if (a > b)
            std::swap(a, b);
        Edge key{a, b};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
        if (it == edges_.end() || *it != key)
            return std::nullopt;
        return static_cast<EdgeId>(it - edges_.begin());
    }

    auto Graph::edge_at(Vertex a, Vertex b) const -> EdgeId
    {
        auto e = edge_index(a, b);
        if (! e)
            throw DomainError("no edge between " + std::to_string(a) + " and " + std::to_string(b));
        return *e;
    }

    auto Graph::is_connected() const -> bool
    {
        if (vertex_count_ <= 1)
            return true;
        auto d = distances_from(*this, 0);
        return std::none_of(d.begin(), d.end(), [] (int x) { return x < 0; });
    }

    auto FamilySpec::product(FamilySpec a, FamilySpec b) -> FamilySpec
    {
        return {family::Product{std::make_shared<const FamilySpec>(std::move(a)),
            std::make_shared<const FamilySpec>(std::move(b))}};
    }

    namespace
    {
        auto require(bool ok, const std::string & what) -> void
        {
            if (! ok)
                throw DomainError(what);
        }

        template <class... Ts>
        struct overloaded : Ts... { using Ts::operator()...; };
        template <class... Ts>
        overloaded(Ts...) -> overloaded<Ts...>;
    }

    auto FamilySpec::validate() const -> void
    {
        std::visit(overloaded{
            [] (const family::Path & p) { require(p.n >= 1, "Path: n must be >= 1, got " + std::to_string(p.n)); },
            [] (const family::Cycle & c) { require(c.n >= 3, "Cycle: n must be >= 3, got " + std::to_string(c.n)); },
            [] (const family::Complete & k) { require(k.n >= 1, "Complete: n must be >= 1, got " + std::to_string(k.n)); },
            [] (const family::CompleteBipartite & k) {
                require(k.r >= 1, "CompleteBipartite: r must be >= 1, got " + std::to_string(k.r));
                require(k.s >= 1, "CompleteBipartite: s must be >= 1, got " + std::to_string(k.s));
            },
            [] (const family::Hypercube & q) {
                require(q.n >= 1, "Hypercube: n must be >= 1, got " + std::to_string(q.n));
                require(q.n <= 20, "Hypercube: n must be <= 20, got " + std::to_string(q.n));
            },
            [] (const family::Grid & g) {
                require(! g.dims.empty(), "Grid: dims must be nonempty");
                for (std::size_t i = 0 ; i < g.dims.size() ; ++i)
                    require(g.dims[i] >= 1, "Grid: dims[" + std::to_string(i) + "] must be >= 1, got " + std::to_string(g.dims[i]));
            },
            [] (const family::Cylinder & c) {
                require(c.m >= 1, "Cylinder: m must be >= 1, got " + std::to_string(c.m));
                require(c.n >= 3, "Cylinder: n must be >= 3, got " + std::to_string(c.n));
            },
            [] (const family::Torus & t) {
                require(t.m >= 3, "Torus: m must be >= 3, got " + std::to_string(t.m));
                require(t.n >= 3, "Torus: n must be >= 3, got " + std::to_string(t.n));
            },
            [] (const family::Product & p) {
                require(p.left && p.right, "Product: both factors required");
                p.left->validate();
                p.right->validate();
            }
        }, variant);
    }

    auto FamilySpec::vertex_count() const -> int
    {
        return std::visit(overloaded{
            [] (const family::Path & p) { return p.n; },
            [] (const family::Cycle & c) { return c.n; },
            [] (const family::Complete & k) { return k.n; },
            [] (const family::CompleteBipartite & k) { return k.r + k.s; },
            [] (const family::Hypercube & q) { return 1 << q.n; },
            [] (const family::Grid & g) {
                int n = 1;
                for (int d : g.dims)
                    n *= d;
                return n;
            },
            [] (const family::Cylinder & c) { return c.m * c.n; },
            [] (const family::Torus & t) { return t.m * t.n; },
            [] (const family::Product & p) { return p.left->vertex_count() * p.right->vertex_count(); }
        }, variant);
    }

    auto FamilySpec::name() const -> std::string
    {
        using std::to_string;
        return std::visit(overloaded{
            [] (const family::Path & p) { return "P_" + to_string(p.n); },
            [] (const family::Cycle & c) { return "C_" + to_string(c.n); },
            [] (const family::Complete & k) { return "K_" + to_string(k.n); },
            [] (const family::CompleteBipartite & k) { return "K_{" + to_string(k.r) + "," + to_string(k.s) + "}"; },
            [] (const family::Hypercube & q) { return "Q_" + to_string(q.n); },
            [] (const family::Grid & g) {
                std::string s = "G(";
                for (std::size_t i = 0 ; i < g.dims.size() ; ++i)
                    s += (i ? "," : "") + to_string(g.dims[i]);
                return s + ")";
            },
            [] (const family::Cylinder & c) { return "C(" + to_string(c.m) + "," + to_string(c.n) + ")"; },
            [] (const family::Torus & t) { return "T(" + to_string(t.m) + "," + to_string(t.n) + ")"; },
            [] (const family::Product & p) { return p.left->name() + " x " + p.right->name(); }
        }, variant);
    }

    auto path_graph(int n) -> Graph
    {
        require(n >= 1, "Path: n must be >= 1, got " + std::to_string(n));
        std::vector<Edge> edges;
        for (int i = 0 ; i + 1 < n ; ++i)
            edges.push_back({i, i + 1});
        return Graph(n, std::move(edges));
    }

    auto cycle_graph(int n) -> Graph
    {
        require(n >= 3, "Cycle: n must be >= 3, got " + std::to_string(n));
        std::vector<Edge> edges;
        for (int i = 0 ; i + 1 < n ; ++i)
            edges.push_back({i, i + 1});
        edges.push_back({0, n - 1});
        return Graph(n, std::move(edges));
    }

    auto complete_graph(int n) -> Graph
    {
        require(n >= 1, "Complete: n must be >= 1, got " + std::to_string(n));
        std::vector<Edge> edges;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                edges.push_back({i, j});
        return Graph(n, std::move(edges));
    }

    auto complete_bipartite_graph(int r, int s) -> Graph
    {
        require(r >= 1, "CompleteBipartite: r must be >= 1, got " + std::to_string(r));
        require(s >= 1, "CompleteBipartite: s must be >= 1, got " + std::to_string(s));
        std::vector<Edge> edges;
        for (int i = 0 ; i < r ; ++i)
            for (int j = 0 ; j < s ; ++j)
                edges.push_back({i, r + j});
        return Graph(r + s, std::move(edges));
    }

    auto cartesian_product(const Graph & g, const Graph & h) -> Graph
    {
        const int nh = h.vertex_count();
        std::vector<Edge> edges;
        edges.reserve(g.vertex_count() * h.edge_count() + nh * g.edge_count());
        for (Vertex u = 0 ; u < g.vertex_count() ; ++u)
            for (auto & [a, b] : h.edges())
                edges.push_back({u * nh + a, u * nh + b});
        for (auto & [a, b] : g.edges())
            for (Vertex v = 0 ; v < nh ; ++v)
                edges.push_back({a * nh + v, b * nh + v});
        return Graph(g.vertex_count() * nh, std::move(edges));
    }

    auto realize(const FamilySpec & spec) -> Graph
    {
        spec.validate();
        return std::visit(overloaded{
            [] (const family::Path & p) { return path_graph(p.n); },
            [] (const family::Cycle & c) { return cycle_graph(c.n); },
            [] (const family::Complete & k) { return complete_graph(k.n); },
            [] (const family::CompleteBipartite & k) { return complete_bipartite_graph(k.r, k.s); },
            [] (const family::Hypercube & q) {
                Graph result = path_graph(2);
                for (int i = 1 ; i < q.n ; ++i)
                    result = cartesian_product(result, path_graph(2));
                return result;
            },
            [] (const family::Grid & g) {
                Graph result = path_graph(g.dims.front());
                for (std::size_t i = 1 ; i < g.dims.size() ; ++i)
                    result = cartesian_product(result, path_graph(g.dims[i]));
                return result;
            },
            [] (const family::Cylinder & c) { return cartesian_product(path_graph(c.m), cycle_graph(c.n)); },
            [] (const family::Torus & t) { return cartesian_product(cycle_graph(t.m), cycle_graph(t.n)); },
            [] (const family::Product & p) { return cartesian_product(realize(*p.left), realize(*p.right)); }
        }, spec.variant);
    }

    auto distances_from(const Graph & g, Vertex source) -> std::vector<int>
    {
        std::vector<int> dist(g.vertex_count(), -1);
        std::queue<Vertex> q;
        dist[source] = 0;
        q.push(source);
        while (! q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbours(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        return dist;
    }

    auto distance(const Graph & g, Vertex u, Vertex v) -> int
    {
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
            throw DomainError("vertex out of range");
        int d = distances_from(g, u)[v];
        if (d < 0)
            throw InfiniteDistance("infinite diameter: vertices " + std::to_string(u) + " and "
                    + std::to_string(v) + " are not connected");
        return d;
    }

    auto diameter(const Graph & g) -> int
    {
        int best = 0;
        for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
            for (int d : distances_from(g, v)) {
                if (d < 0)
                    throw InfiniteDistance("infinite diameter: graph is disconnected");
                best = std::max(best, d);
            }
        return best;
    }

    auto edge_distance(const Graph & g, EdgeId e, EdgeId f) -> int
    {
        if (e < 0 || f < 0 || e >= g.edge_count() || f >= g.edge_count())
            throw DomainError("edge id out of range");
        auto & a = g.edge(e);
        auto & b = g.edge(f);
        auto du = distances_from(g, a.u);
        auto dv = distances_from(g, a.v);
        int best = -1;
        for (int d : {du[b.u], du[b.v], dv[b.u], dv[b.v]})
            if (d >= 0 && (best < 0 || d < best))
                best = d;
        if (best < 0)
            throw InfiniteDistance("edges lie in different components");
        return best;
    }

    auto is_bipartite(const Graph & g) -> Bipartition
    {
        std::vector<int> side(g.vertex_count(), -1);
        for (Vertex s = 0 ; s < g.vertex_count() ; ++s) {
            if (side[s] >= 0)
                continue;
            side[s] = 0;
            std::queue<Vertex> q;
            q.push(s);
            while (! q.empty()) {
                Vertex v = q.front();
                q.pop();
                for (Vertex w : g.neighbours(v)) {
                    if (side[w] < 0) {
                        side[w] = 1 - side[v];
                        q.push(w);
                    }
                    else if (side[w] == side[v])
                        return {};
                }
            }
        }
        return {true, std::move(side)};
    }

    auto write_edge_list(std::ostream & out, const Graph & g) -> void
    {
        out << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (auto & [u, v] : g.edges())
            out << u << ' ' << v << '\n';
    }

    auto to_edge_list(const Graph & g) -> std::string
    {
        std::ostringstream s;
        write_edge_list(s, g);
        return s.str();
    }

    auto read_edge_list(std::istream & in) -> Graph
    {
        std::string line;
        int line_no = 0;
        auto next_line = [&] () -> bool {
            while (std::getline(in, line)) {
                ++line_no;
                if (line.find_first_not_of(" \t\r") != std::string::npos)
                    return true;
            }
            return false;
        };

        if (! next_line())
            throw ParseError("edge list: missing header line \"n m\"");
        long long n = -1, m = -1;
        {
            std::istringstream s(line);
            std::string extra;
            if (! (s >> n >> m) || (s >> extra) || n < 0 || m < 0)
                throw ParseError("edge list line " + std::to_string(line_no) + ": expected header \"n m\"");
        }

        std::vector<Edge> edges;
        std::set<Edge> seen;
        for (long long i = 0 ; i < m ; ++i) {
            if (! next_line())
                throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(i));
            std::istringstream s(line);
            long long u, v;
            std::string extra;
            if (! (s >> u >> v) || (s >> extra))
                throw ParseError("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError("edge list line " + std::to_string(line_no) + ": vertex out of range");
            if (u >= v)
                throw ParseError("edge list line " + std::to_string(line_no) + ": expected u < v");
            Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
            if (! seen.insert(e).second)
                throw ParseError("edge list line " + std::to_string(line_no) + ": duplicate edge");
            edges.push_back(e);
        }
        if (next_line())
            throw ParseError("edge list line " + std::to_string(line_no) + ": trailing content");

        return Graph(static_cast<int>(n), std::move(edges));
    }
}
