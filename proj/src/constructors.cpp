#include <icol/constructors.hpp>
#include <icol/verifier.hpp>

#include <algorithm>

namespace icol
{
    namespace
    {
        auto require(bool ok, const std::string & what) -> void
        {
            if (! ok)
                throw DomainError(what);
        }

        // Collects colour assignments edge by edge. Assigning the same colour
        // twice is harmless (overlapping index families); two different colours
        // on one edge is a construction bug.
        class Painter
        {
        public:
            explicit Painter(Graph g) :
                graph_(std::move(g)),
                colors_(graph_.edge_count(), 0)
            {
            }

            auto paint(Vertex a, Vertex b, Color c) -> void
            {
                EdgeId e = graph_.edge_at(a, b);
                if (colors_[e] != 0 && colors_[e] != c)
                    throw std::logic_error("edge (" + std::to_string(a) + "," + std::to_string(b)
                            + ") assigned both " + std::to_string(colors_[e]) + " and " + std::to_string(c));
                colors_[e] = c;
            }

            auto finish(int claimed_t, std::string name) && -> Construction
            {
                for (EdgeId e = 0 ; e < graph_.edge_count() ; ++e)
                    if (colors_[e] == 0)
                        throw std::logic_error(name + ": edge (" + std::to_string(graph_.edge(e).u) + ","
                                + std::to_string(graph_.edge(e).v) + ") left uncoloured");
                return {EdgeColoring(std::move(graph_), std::move(colors_)), claimed_t, std::move(name)};
            }

            auto graph() const -> const Graph & { return graph_; }

        private:
            Graph graph_;
            std::vector<Color> colors_;
        };

        // v_j^{(i)} in a ring-structured product with `width` vertices per ring,
        // 1-based; j wraps so that j = width + 1 means j = 1.
        struct Rings
        {
            int width;

            auto operator()(int i, int j) const -> Vertex
            {
                return (i - 1) * width + ((j - 1) % width);
            }
        };

        auto check_alpha(const Graph & g, const EdgeColoring & alpha, int r) -> int
        {
            require(g.vertex_count() >= 1, "base graph is empty");
            require(g.is_regular(), "base graph is not regular");
            require(g.degree(0) == r, "base graph is " + std::to_string(g.degree(0)) + "-regular, not "
                    + std::to_string(r) + "-regular");
            if (! (alpha.graph == g))
                throw PreconditionError("alpha is not a colouring of the given graph");
            if (! g.is_connected())
                throw PreconditionError("base graph must be connected");
            auto t = verify_lemma1(alpha);
            if (! t)
                throw PreconditionError("alpha is not an interval colouring: " + t.failure);
            return *t.t;
        }

        auto spectrum_max(const EdgeColoring & alpha, Vertex v) -> Color
        {
            Color best = 0;
            for (EdgeId e : alpha.graph.incident(v))
                best = std::max(best, alpha.colors[e]);
            return best;
        }
    }

    auto widest_path_coloring(int m) -> Construction
    {
        require(m >= 2, "path needs m >= 2 to have an edge, got " + std::to_string(m));
        Painter p(path_graph(m));
        for (int i = 1 ; i < m ; ++i)
            p.paint(i - 1, i, i);
        return std::move(p).finish(m - 1, "widest P_" + std::to_string(m));
    }

    auto widest_even_cycle_coloring(int n) -> Construction
    {
        require(n >= 2, "even cycle C_2n needs n >= 2, got " + std::to_string(n));
        const int len = 2 * n;
        Painter p(cycle_graph(len));
        for (int k = 0 ; k < len ; ++k)
            p.paint(k, (k + 1) % len, k <= n ? k + 1 : len - k + 1);
        return std::move(p).finish(n + 1, "widest C_" + std::to_string(len));
    }

    auto complete_bipartite_coloring(int r, int s) -> Construction
    {
        Painter p(complete_bipartite_graph(r, s));
        for (int i = 1 ; i <= r ; ++i)
            for (int j = 1 ; j <= s ; ++j)
                p.paint(i - 1, r + j - 1, i + j - 1);
        return std::move(p).finish(r + s - 1, "widest K_{" + std::to_string(r) + "," + std::to_string(s) + "}");
    }

    auto product_with_path(const Graph & g, const EdgeColoring & alpha, int r, int m) -> Construction
    {
        require(m >= 1, "path length m must be >= 1, got " + std::to_string(m));
        const int t_alpha = check_alpha(g, alpha, r);
        const int shift = r + 1;

        Painter p(cartesian_product(g, path_graph(m)));
        auto at = [&] (Vertex v, int i) { return v * m + (i - 1); };

        for (int i = 1 ; i <= m ; ++i)
            for (EdgeId e = 0 ; e < g.edge_count() ; ++e)
                p.paint(at(g.edge(e).u, i), at(g.edge(e).v, i), alpha.colors[e] + (i - 1) * shift);

        for (Vertex v = 0 ; v < g.vertex_count() ; ++v) {
            const Color top = spectrum_max(alpha, v);
            for (int i = 1 ; i < m ; ++i)
                p.paint(at(v, i), at(v, i + 1), top + (i - 1) * shift + 1);
        }
        return std::move(p).finish(t_alpha + (m - 1) * shift, "G x P_" + std::to_string(m));
    }

    auto product_with_even_cycle(const Graph & g, const EdgeColoring & alpha, int r, int n) -> Construction
    {
        require(n >= 2, "even cycle C_2n needs n >= 2, got " + std::to_string(n));
        const int t_alpha = check_alpha(g, alpha, r);
        const int len = 2 * n;

        Painter p(cartesian_product(g, cycle_graph(len)));
        auto at = [&] (Vertex v, int i) { return v * len + (i - 1); };
        auto layer_shift = [&] (int i) {
            if (i == 1)
                return 0;
            if (i <= n + 1)
                return (i - 1) * (r + 1) + 1;
            return (len + 1 - i) * (r + 1);
        };

        for (int i = 1 ; i <= len ; ++i)
            for (EdgeId e = 0 ; e < g.edge_count() ; ++e)
                p.paint(at(g.edge(e).u, i), at(g.edge(e).v, i), alpha.colors[e] + layer_shift(i));

        for (Vertex v = 0 ; v < g.vertex_count() ; ++v) {
            auto top = [&] (int i) { return spectrum_max(alpha, v) + layer_shift(i); };
            p.paint(at(v, 1), at(v, len), top(1) + 1);
            p.paint(at(v, 1), at(v, 2), top(1) + 2);
            for (int i = 2 ; i <= n ; ++i)
                p.paint(at(v, i), at(v, i + 1), top(i) + 1);
            for (int i = n + 2 ; i <= len ; ++i)
                p.paint(at(v, i - 1), at(v, i), top(i) + 1);
        }
        return std::move(p).finish(t_alpha + n * (r + 1) + 1, "G x C_" + std::to_string(len));
    }

    auto grid_widest(int m, int n) -> Construction
    {
        require(m >= 2, "grid needs m >= 2, got " + std::to_string(m));
        require(n >= 2, "grid needs n >= 2, got " + std::to_string(n));
        Painter p(realize(FamilySpec::grid({m, n})));
        Rings v{n};

        for (int i = 1 ; i <= m - 1 ; ++i)
            for (int j = 1 ; j <= n - 1 ; ++j)
                p.paint(v(i, j), v(i + 1, j), 2 * (i + j) - 3);
        for (int i = 1 ; i <= m - 1 ; ++i)
            p.paint(v(i, n), v(i + 1, n), 2 * (n + i) - 5);
        for (int j = 1 ; j <= n - 1 ; ++j)
            p.paint(v(1, j), v(1, j + 1), 2 * j);
        for (int i = 2 ; i <= m ; ++i)
            for (int j = 1 ; j <= n - 1 ; ++j)
                p.paint(v(i, j), v(i, j + 1), 2 * (i + j) - 4);

        return std::move(p).finish(2 * (m + n - 3), "widest G(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }

    auto prism_three_coloring(int n) -> Construction
    {
        require(n >= 1, "prism C(2,2n+1) needs n >= 1, got " + std::to_string(n));
        const int width = 2 * n + 1;
        Painter p(realize(FamilySpec::cylinder(2, width)));
        Rings v{width};

        // Ring: 1,3,1,3,... along v_1..v_{2n+1}, closing edge 2. Each ring
        // vertex then misses exactly one of {1,2,3}; the rung takes it.
        for (int i = 1 ; i <= 2 ; ++i) {
            for (int j = 1 ; j <= 2 * n ; ++j)
                p.paint(v(i, j), v(i, j + 1), j % 2 == 1 ? 1 : 3);
            p.paint(v(i, 1), v(i, width), 2);
        }
        for (int j = 1 ; j <= width ; ++j)
            p.paint(v(1, j), v(2, j), j == 1 ? 3 : j == width ? 1 : 2);

        return std::move(p).finish(3, "prism C(2," + std::to_string(width) + ")");
    }

    namespace
    {
        // Interval 6-colouring of the first three rings of C(rows, 2n+1).
        auto paint_odd_base(Painter & p, int n) -> void
        {
            const int width = 2 * n + 1;
            const int h = (n + 1) / 2;
            Rings v{width};

            p.paint(v(1, 1), v(2, 1), 6);
            for (int j = 2 ; j <= 2 * h ; ++j)
                p.paint(v(1, j), v(2, j), 4);

            p.paint(v(1, 2 * h + 1), v(2, 2 * h + 1), 2);
            for (int j = 2 * h + 2 ; j <= width ; ++j)
                p.paint(v(1, j), v(2, j), 3);

            p.paint(v(2, 1), v(3, 1), 3);
            for (int j = 2 ; j <= 2 * h ; ++j)
                p.paint(v(2, j), v(3, j), 2);

            for (int j = 2 * h + 1 ; j <= width ; ++j)
                p.paint(v(2, j), v(3, j), 1);

            for (int i = 1 ; i <= 2 ; ++i) {
                for (int j = 1 ; j <= h ; ++j) {
                    p.paint(v(i, 2 * j - 1), v(i, 2 * j), 5);
                    p.paint(v(i, 2 * j), v(i, 2 * j + 1), 3);
                }
                for (int j = h + 1 ; j <= n ; ++j) {
                    p.paint(v(i, 2 * j - 1), v(i, 2 * j), 4);
                    p.paint(v(i, 2 * j), v(i, 2 * j + 1), 2);
                }
                // Closing edge is coloured even when the range above is empty (n = 1).
                p.paint(v(i, 1), v(i, width), 4);
            }

            for (int j = 1 ; j <= h ; ++j) {
                p.paint(v(3, 2 * j - 1), v(3, 2 * j), 1);
                p.paint(v(3, 2 * j), v(3, 2 * j + 1), 3);
            }
            for (int j = h + 1 ; j <= n ; ++j) {
                p.paint(v(3, 2 * j - 1), v(3, 2 * j), 2);
                p.paint(v(3, 2 * j), v(3, 2 * j + 1), 3);
            }
            p.paint(v(3, 1), v(3, width), 2);
        }

        // Copies of the prism colouring on ring pairs (first, first+1), (first+2, first+3), ...
        // up to `rows`, with colour-4 rungs between consecutive pairs.
        auto paint_prism_stack(Painter & p, int n, int first, int rows) -> void
        {
            const int width = 2 * n + 1;
            Rings v{width};
            auto prism = prism_three_coloring(n);
            auto & pg = prism.coloring.graph;
            for (int top = first ; top + 1 <= rows ; top += 2) {
                for (EdgeId e = 0 ; e < pg.edge_count() ; ++e) {
                    auto [a, b] = pg.edge(e);
                    p.paint(a + (top - 1) * width, b + (top - 1) * width, prism.coloring.colors[e]);
                }
                if (top + 2 <= rows)
                    for (int j = 1 ; j <= width ; ++j)
                        p.paint(v(top + 1, j), v(top + 2, j), 4);
            }
        }
    }

    auto odd_cylinder_base(int n) -> Construction
    {
        require(n >= 1, "C(3,2n+1) needs n >= 1, got " + std::to_string(n));
        Painter p(realize(FamilySpec::cylinder(3, 2 * n + 1)));
        paint_odd_base(p, n);
        return std::move(p).finish(6, "minimal C(3," + std::to_string(2 * n + 1) + ")");
    }

    auto cylinder_minimal(int rows, int circumference) -> Construction
    {
        require(rows >= 3, "minimal cylinder needs rows >= 3, got " + std::to_string(rows));
        require(circumference >= 3 && circumference % 2 == 1,
                "minimal cylinder needs odd circumference >= 3, got " + std::to_string(circumference));
        const int n = (circumference - 1) / 2;
        Painter p(realize(FamilySpec::cylinder(rows, circumference)));
        Rings v{circumference};

        std::string name = "minimal C(" + std::to_string(rows) + "," + std::to_string(circumference) + ")";
        if (rows % 2 == 0) {
            paint_prism_stack(p, n, 1, rows);
            return std::move(p).finish(4, std::move(name));
        }

        paint_odd_base(p, n);
        if (rows > 3) {
            for (int j = 1 ; j <= circumference ; ++j)
                p.paint(v(3, j), v(4, j), 4);
            paint_prism_stack(p, n, 4, rows);
        }
        return std::move(p).finish(6, std::move(name));
    }

    auto cylinder_widest(int rows, int circumference) -> Construction
    {
        require(rows >= 2 && rows % 2 == 0, "widest cylinder needs even rows >= 2, got " + std::to_string(rows));
        require(circumference >= 3, "cylinder needs circumference >= 3, got " + std::to_string(circumference));
        const int m = rows / 2;
        Painter p(realize(FamilySpec::cylinder(rows, circumference)));
        Rings v{circumference};
        std::string name = "widest C(" + std::to_string(rows) + "," + std::to_string(circumference) + ")";

        if (circumference % 2 == 0) {
            const int n = circumference / 2;
            for (int i = 1 ; i <= m ; ++i) {
                for (int j = 1 ; j <= n ; ++j) {
                    p.paint(v(2 * i - 1, j), v(2 * i - 1, j + 1), 4 * i + 2 * j - 4);
                    p.paint(v(2 * i, j), v(2 * i, j + 1), 4 * i + 2 * j - 4);
                }
                for (int j = n + 1 ; j <= 2 * n - 1 ; ++j) {
                    p.paint(v(2 * i - 1, j), v(2 * i - 1, j + 1), 4 * i - 2 * j + 4 * n - 1);
                    p.paint(v(2 * i, j), v(2 * i, j + 1), 4 * i - 2 * j + 4 * n - 1);
                }
                p.paint(v(2 * i - 1, 1), v(2 * i - 1, 2 * n), 4 * i - 1);
                p.paint(v(2 * i, 1), v(2 * i, 2 * n), 4 * i - 1);
                for (int j = 1 ; j <= n ; ++j)
                    p.paint(v(2 * i - 1, j), v(2 * i, j), 4 * i + 2 * j - 5);
                for (int j = n + 1 ; j <= 2 * n ; ++j)
                    p.paint(v(2 * i - 1, j), v(2 * i, j), 4 * i - 2 * j + 4 * n);
            }
            for (int i = 1 ; i <= m - 1 ; ++i) {
                for (int j = 2 ; j <= n + 1 ; ++j)
                    p.paint(v(2 * i, j), v(2 * i + 1, j), 4 * i + 2 * j - 3);
                for (int j = n + 2 ; j <= 2 * n ; ++j)
                    p.paint(v(2 * i, j), v(2 * i + 1, j), 4 * i - 2 * j + 4 * n + 2);
                p.paint(v(2 * i, 1), v(2 * i + 1, 1), 4 * i);
            }
            return std::move(p).finish(4 * m + 2 * n - 2, std::move(name));
        }

        const int n = (circumference - 1) / 2;
        for (int i = 1 ; i <= m ; ++i) {
            for (int j = 1 ; j <= n + 1 ; ++j) {
                p.paint(v(2 * i - 1, j), v(2 * i - 1, j + 1), 4 * i + 2 * j - 4);
                p.paint(v(2 * i, j), v(2 * i, j + 1), 4 * i + 2 * j - 4);
            }
            for (int j = n + 2 ; j <= 2 * n ; ++j) {
                p.paint(v(2 * i - 1, j), v(2 * i - 1, j + 1), 4 * i - 2 * j + 4 * n + 1);
                p.paint(v(2 * i, j), v(2 * i, j + 1), 4 * i - 2 * j + 4 * n + 1);
            }
            p.paint(v(2 * i - 1, 1), v(2 * i - 1, 2 * n + 1), 4 * i - 1);
            p.paint(v(2 * i, 1), v(2 * i, 2 * n + 1), 4 * i - 1);
            for (int j = 1 ; j <= n + 2 ; ++j)
                p.paint(v(2 * i - 1, j), v(2 * i, j), 4 * i + 2 * j - 5);
            for (int j = n + 3 ; j <= 2 * n + 1 ; ++j)
                p.paint(v(2 * i - 1, j), v(2 * i, j), 4 * i - 2 * j + 4 * n + 2);
        }
        for (int i = 1 ; i <= m - 1 ; ++i) {
            for (int j = 2 ; j <= n + 1 ; ++j)
                p.paint(v(2 * i, j), v(2 * i + 1, j), 4 * i + 2 * j - 3);
            for (int j = n + 2 ; j <= 2 * n + 1 ; ++j)
                p.paint(v(2 * i, j), v(2 * i + 1, j), 4 * i - 2 * j + 4 * n + 4);
            p.paint(v(2 * i, 1), v(2 * i + 1, 1), 4 * i);
        }
        return std::move(p).finish(4 * m + 2 * n - 1, std::move(name));
    }

    auto transpose_product(const EdgeColoring & c, int a_vertices, int b_vertices) -> EdgeColoring
    {
        require(c.graph.vertex_count() == a_vertices * b_vertices, "transpose: vertex count mismatch");
        auto swap_id = [&] (Vertex x) { return (x % b_vertices) * a_vertices + x / b_vertices; };
        std::vector<Edge> edges;
        for (auto & [u, v] : c.graph.edges())
            edges.push_back({swap_id(u), swap_id(v)});
        Graph g(c.graph.vertex_count(), edges);
        std::vector<Color> colors(g.edge_count());
        for (EdgeId e = 0 ; e < c.graph.edge_count() ; ++e)
            colors[g.edge_at(edges[e].u, edges[e].v)] = c.colors[e];
        return EdgeColoring(std::move(g), std::move(colors));
    }

    namespace
    {
        auto torus_odd(int rows, int circumference) -> Construction
        {
            const int m = rows / 2;
            const int n = (circumference - 1) / 2;
            const int width = circumference;
            Painter p(realize(FamilySpec::torus(rows, circumference)));
            Rings v{width};
            const int last = 2 * m;

            for (int j = 1 ; j <= n + 1 ; ++j) {
                p.paint(v(1, j), v(1, j + 1), 2 * j);
                p.paint(v(last, j), v(last, j + 1), 2 * j);
            }
            for (int j = n + 2 ; j <= 2 * n ; ++j) {
                p.paint(v(1, j), v(1, j + 1), 2 * (2 * n + 1 - j) + 3);
                p.paint(v(last, j), v(last, j + 1), 2 * (2 * n + 1 - j) + 3);
            }
            p.paint(v(1, 1), v(1, width), 3);
            p.paint(v(last, 1), v(last, width), 3);

            for (int j = 1 ; j <= n + 2 ; ++j)
                p.paint(v(1, j), v(last, j), 2 * j - 1);
            for (int j = n + 3 ; j <= 2 * n + 1 ; ++j)
                p.paint(v(1, j), v(last, j), 2 * (2 * n + 3 - j));

            for (int i = 1 ; i <= m / 2 ; ++i) {
                for (int ring : {2 * i, 2 * i + 1, 2 * m - 2 * i, 2 * m - 2 * i + 1}) {
                    for (int j = 1 ; j <= n + 1 ; ++j)
                        p.paint(v(ring, j), v(ring, j + 1), 4 * i + 2 * j);
                    for (int j = n + 2 ; j <= 2 * n ; ++j)
                        p.paint(v(ring, j), v(ring, j + 1), 4 * i + 2 * (2 * n + 1 - j) + 3);
                    p.paint(v(ring, 1), v(ring, width), 4 * i + 3);
                }
            }

            for (int i = 1 ; i <= (m + 1) / 2 ; ++i) {
                for (int lower : {2 * i - 1, 2 * m - 2 * i + 1}) {
                    for (int j = 2 ; j <= n + 1 ; ++j)
                        p.paint(v(lower, j), v(lower + 1, j), 4 * i + 2 * j - 3);
                    for (int j = n + 2 ; j <= 2 * n + 1 ; ++j)
                        p.paint(v(lower, j), v(lower + 1, j), 4 * (n + 1 + i) - 2 * j);
                    p.paint(v(lower, 1), v(lower + 1, 1), 4 * i);
                }
            }

            for (int i = 1 ; i <= m / 2 ; ++i) {
                for (int lower : {2 * i, 2 * m - 2 * i}) {
                    for (int j = 1 ; j <= n + 2 ; ++j)
                        p.paint(v(lower, j), v(lower + 1, j), 4 * i + 2 * j - 1);
                    for (int j = n + 3 ; j <= 2 * n + 1 ; ++j)
                        p.paint(v(lower, j), v(lower + 1, j), 4 * i + 2 * (2 * n + 3 - j));
                }
            }

            const int t = m % 2 == 1 ? 2 * m + 2 * n + 2 : 2 * m + 2 * n + 3;
            return std::move(p).finish(t, "widest T(" + std::to_string(rows) + "," + std::to_string(circumference) + ")");
        }

        auto torus_even(int rows, int cols) -> Construction
        {
            const int m = rows / 2;
            const int n = cols / 2;
            std::string name = "widest T(" + std::to_string(rows) + "," + std::to_string(cols) + ")";

            // C_{2m} x C_{2n} directly gives m + 3n + 2; the transposed build gives n + 3m + 2.
            if (m + 3 * n >= n + 3 * m) {
                auto base = widest_even_cycle_coloring(m);
                auto c = product_with_even_cycle(base.coloring.graph, base.coloring, 2, n);
                return {std::move(c.coloring), c.claimed_t, std::move(name)};
            }
            auto base = widest_even_cycle_coloring(n);
            auto c = product_with_even_cycle(base.coloring.graph, base.coloring, 2, m);
            return {transpose_product(c.coloring, cols, rows), c.claimed_t, std::move(name)};
        }
    }

    auto torus_widest(int a, int b) -> Construction
    {
        require(a >= 3 && b >= 3, "torus needs both cycles of length >= 3");
        require(a % 2 == 0 || b % 2 == 0, "torus T(a,b) with a*b odd has no interval colouring");

        if (a % 2 == 0 && b % 2 == 0) {
            require(a >= 4 && b >= 4, "even torus needs both lengths >= 4");
            return torus_even(a, b);
        }
        if (a % 2 == 0) {
            require(a >= 4, "T(2m,2n+1) needs m >= 2, got rows " + std::to_string(a));
            return torus_odd(a, b);
        }
        require(b >= 4, "T(2n+1,2m) needs m >= 2, got columns " + std::to_string(b));
        auto c = torus_odd(b, a);
        return {transpose_product(c.coloring, b, a), c.claimed_t,
            "widest T(" + std::to_string(a) + "," + std::to_string(b) + ")"};
    }

    auto hypercube_widest(int n) -> Construction
    {
        require(n >= 1 && n <= 20, "hypercube dimension must be in [1, 20], got " + std::to_string(n));
        auto current = widest_path_coloring(2);
        for (int k = 1 ; k < n ; ++k) {
            auto next = product_with_path(current.coloring.graph, current.coloring, k, 2);
            current = std::move(next);
        }
        current.name = "widest Q_" + std::to_string(n);
        return current;
    }
}
