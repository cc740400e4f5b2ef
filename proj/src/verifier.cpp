#include <icol/verifier.hpp>

#include <algorithm>
#include <bit>
#include <numeric>

namespace icol
{
    EdgeColoring::EdgeColoring(Graph g, std::vector<Color> c) :
        graph(std::move(g)),
        colors(std::move(c))
    {
        if (static_cast<int>(colors.size()) != graph.edge_count())
            throw DomainError("colouring has " + std::to_string(colors.size()) + " colours for "
                    + std::to_string(graph.edge_count()) + " edges");
        for (std::size_t e = 0 ; e < colors.size() ; ++e)
            if (colors[e] < 1)
                throw DomainError("edge " + std::to_string(e) + " has colour " + std::to_string(colors[e]) + " < 1");
    }

    auto EdgeColoring::min_color() const -> Color
    {
        return colors.empty() ? 0 : *std::min_element(colors.begin(), colors.end());
    }

    auto EdgeColoring::max_color() const -> Color
    {
        return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
    }

    auto spectrum(const EdgeColoring & c, Vertex v) -> Spectrum
    {
        Spectrum s;
        s.degree = c.graph.degree(v);
        for (EdgeId e : c.graph.incident(v))
            s.colors.push_back(c.colors[e]);
        std::sort(s.colors.begin(), s.colors.end());
        s.colors.erase(std::unique(s.colors.begin(), s.colors.end()), s.colors.end());
        return s;
    }

    auto to_string(Failure f) -> std::string
    {
        switch (f) {
            case Failure::None:            return "none";
            case Failure::NotProper:       return "not proper";
            case Failure::NotInterval:     return "spectrum not an interval";
            case Failure::ColorOutOfRange: return "colour out of range";
            case Failure::ColorUnused:     return "colour unused";
            case Failure::BadClaim:        return "invalid t";
        }
        return "unknown";
    }

    auto VerifyReport::reason() const -> std::string
    {
        if (valid())
            return "";
        std::string r = to_string(failure);
        if (witness_vertex)
            r += " at vertex " + std::to_string(*witness_vertex);
        if (witness_edge)
            r += " on edge " + std::to_string(*witness_edge);
        if (witness_color)
            r += " (colour " + std::to_string(*witness_color) + ")";
        return r;
    }

    namespace
    {
        // First colour appearing twice among the incident edges of v.
        auto find_clash(const EdgeColoring & c, Vertex v) -> std::pair<EdgeId, Color>
        {
            auto & inc = c.graph.incident(v);
            for (std::size_t i = 0 ; i < inc.size() ; ++i)
                for (std::size_t j = 0 ; j < i ; ++j)
                    if (c.colors[inc[i]] == c.colors[inc[j]])
                        return {inc[i], c.colors[inc[i]]};
            return {-1, 0};
        }

        // Smallest colour missing from the interior of a non-interval spectrum.
        auto first_gap(const Spectrum & s) -> Color
        {
            for (std::size_t i = 1 ; i < s.colors.size() ; ++i)
                if (s.colors[i] != s.colors[i - 1] + 1)
                    return s.colors[i - 1] + 1;
            return 0;
        }
    }

    auto verify_interval(const EdgeColoring & c, int t) -> VerifyReport
    {
        VerifyReport r;
        r.t_claimed = t;

        std::vector<Color> used = c.colors;
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        r.colors_used = used;

        r.proper = true;
        r.all_vertex_spectra_intervals = true;
        std::optional<Vertex> first_clash, first_gap_vertex;
        Color gap_color = 0;
        for (Vertex v = 0 ; v < c.graph.vertex_count() ; ++v) {
            auto s = spectrum(c, v);
            if (! s.proper()) {
                r.proper = false;
                r.all_vertex_spectra_intervals = false;
                if (! first_clash)
                    first_clash = v;
            }
            else if (! s.is_interval()) {
                r.all_vertex_spectra_intervals = false;
                if (! first_gap_vertex) {
                    first_gap_vertex = v;
                    gap_color = first_gap(s);
                }
            }
        }

        if (t < 1) {
            r.failure = Failure::BadClaim;
            return r;
        }
        if (first_clash) {
            r.failure = Failure::NotProper;
            r.witness_vertex = *first_clash;
            auto [e, col] = find_clash(c, *first_clash);
            r.witness_edge = e;
            r.witness_color = col;
            return r;
        }
        if (first_gap_vertex) {
            r.failure = Failure::NotInterval;
            r.witness_vertex = *first_gap_vertex;
            r.witness_color = gap_color;
            return r;
        }
        for (EdgeId e = 0 ; e < c.graph.edge_count() ; ++e)
            if (c.colors[e] < 1 || c.colors[e] > t) {
                r.failure = Failure::ColorOutOfRange;
                r.witness_edge = e;
                r.witness_color = c.colors[e];
                return r;
            }
        for (Color k = 1, i = 0 ; k <= t ; ++k) {
            if (i < static_cast<int>(used.size()) && used[i] == k)
                ++i;
            else {
                r.failure = Failure::ColorUnused;
                r.witness_color = k;
                return r;
            }
        }
        return r;
    }

    auto verify_lemma1(const EdgeColoring & c) -> Lemma1Result
    {
        if (! c.graph.is_connected())
            throw PreconditionError("verify_lemma1 requires a connected graph");
        if (c.graph.edge_count() == 0)
            return {std::nullopt, "graph has no edges"};

        for (Vertex v = 0 ; v < c.graph.vertex_count() ; ++v) {
            auto s = spectrum(c, v);
            if (! s.proper())
                return {std::nullopt, "not proper at vertex " + std::to_string(v)};
            if (! s.is_interval())
                return {std::nullopt, "spectrum not an interval at vertex " + std::to_string(v)};
        }
        if (c.min_color() != 1)
            return {std::nullopt, "minimum colour is " + std::to_string(c.min_color()) + ", not 1"};
        return {c.max_color(), ""};
    }

    auto hypercube_dimension(const Graph & g) -> std::optional<int>
    {
        int nv = g.vertex_count();
        if (nv < 2 || ! std::has_single_bit(static_cast<unsigned>(nv)))
            return std::nullopt;
        int n = std::countr_zero(static_cast<unsigned>(nv));
        if (g.edge_count() != n * (nv / 2))
            return std::nullopt;
        for (auto & [u, v] : g.edges())
            if (! std::has_single_bit(static_cast<unsigned>(u ^ v)))
                return std::nullopt;
        return n;
    }

    auto span_table(const EdgeColoring & c) -> SpanTable
    {
        auto n = hypercube_dimension(c.graph);
        if (! n)
            throw DomainError("span_table requires a hypercube in bit-vector labelling");
        if (! verify_interval(c, c.max_color()).valid())
            throw PreconditionError("span_table requires a valid interval colouring");

        const auto & g = c.graph;
        std::vector<std::vector<int>> dist;
        dist.reserve(g.vertex_count());
        for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
            dist.push_back(distances_from(g, v));

        SpanTable table{*n, std::vector<int>(*n, 0)};
        for (EdgeId e = 0 ; e < g.edge_count() ; ++e)
            for (EdgeId f = e ; f < g.edge_count() ; ++f) {
                auto & a = g.edge(e);
                auto & b = g.edge(f);
                int d = std::min({dist[a.u][b.u], dist[a.u][b.v], dist[a.v][b.u], dist[a.v][b.v]});
                int span = std::abs(c.colors[e] - c.colors[f]);
                table.sp[d] = std::max(table.sp[d], span);
            }
        return table;
    }

    auto check_span_recurrence(const SpanTable & table) -> bool
    {
        for (int k = 1 ; k < table.n && k < static_cast<int>(table.sp.size()) ; ++k)
            if (table.sp[k] > table.sp[k - 1] + table.n - k)
                return false;
        return true;
    }

    auto hypercube_neighbor_witnesses(int n, Vertex u, Vertex v) -> std::vector<Vertex>
    {
        if (n < 1 || n > 30)
            throw DomainError("hypercube dimension out of range");
        const Vertex limit = Vertex{1} << n;
        if (u < 0 || v < 0 || u >= limit || v >= limit)
            throw DomainError("vertex outside Q_" + std::to_string(n));

        std::vector<Vertex> result;
        for (int b = 0 ; b < n ; ++b)
            if (((u ^ v) >> b) & 1)
                result.push_back(v ^ (Vertex{1} << b));
        std::sort(result.begin(), result.end());
        return result;
    }
}
