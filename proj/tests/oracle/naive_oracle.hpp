#pragma once

#include <icol/graph.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace icol::testing
{
    /// Every t for which g has an interval t-colouring, found by trying every
    /// colour in [1, |E|] on every edge in index order. The only pruning is
    /// the definition itself applied to partial colourings: colours at a
    /// vertex are distinct and span at most degree - 1. Shares no code with
    /// the solver.
    inline auto naive_feasible_t(const Graph & g) -> std::set<int>
    {
        const int m = g.edge_count();
        const int top = m;
        std::vector<int> colour(m, 0);
        std::vector<std::vector<int>> at(g.vertex_count());
        std::set<int> feasible;

        auto fits = [&] (int v, int c) {
            for (int x : at[v])
                if (x == c || std::abs(x - c) > g.degree(v) - 1)
                    return false;
            return true;
        };

        auto rec = [&] (auto & self, int e) -> void {
            if (e == m) {
                std::vector<bool> used(top + 1, false);
                int hi = 0;
                for (int c : colour) {
                    used[c] = true;
                    hi = std::max(hi, c);
                }
                for (int c = 1 ; c <= hi ; ++c)
                    if (! used[c])
                        return;
                feasible.insert(hi);
                return;
            }
            auto [u, v] = g.edge(e);
            for (int c = 1 ; c <= top ; ++c) {
                if (! fits(u, c) || ! fits(v, c))
                    continue;
                colour[e] = c;
                at[u].push_back(c);
                at[v].push_back(c);
                self(self, e + 1);
                at[u].pop_back();
                at[v].pop_back();
            }
        };
        if (m > 0)
            rec(rec, 0);
        return feasible;
    }

    /// Connected random graph: a random spanning tree plus extra edges, with
    /// maximum degree at most max_degree and at most max_edges edges.
    inline auto random_connected_graph(std::mt19937 & rng, int vertices, int max_edges, int max_degree) -> Graph
    {
        std::vector<Edge> edges;
        std::vector<int> degree(vertices, 0);
        for (int v = 1 ; v < vertices ; ++v) {
            std::vector<int> parents;
            for (int u = 0 ; u < v ; ++u)
                if (degree[u] < max_degree)
                    parents.push_back(u);
            int u = parents[std::uniform_int_distribution<int>(0, int(parents.size()) - 1)(rng)];
            edges.push_back({u, v});
            ++degree[u];
            ++degree[v];
        }
        int target = std::uniform_int_distribution<int>(vertices - 1, max_edges)(rng);
        for (int tries = 0 ; int(edges.size()) < target && tries < 200 ; ++tries) {
            int u = std::uniform_int_distribution<int>(0, vertices - 1)(rng);
            int v = std::uniform_int_distribution<int>(0, vertices - 1)(rng);
            if (u == v)
                continue;
            Edge e{std::min(u, v), std::max(u, v)};
            if (degree[u] >= max_degree || degree[v] >= max_degree
                    || std::find(edges.begin(), edges.end(), e) != edges.end())
                continue;
            edges.push_back(e);
            ++degree[u];
            ++degree[v];
        }
        return Graph(vertices, std::move(edges));
    }
}
