#pragma once

#include <icol/coloring.hpp>

#include <optional>
#include <string>
#include <vector>

namespace icol
{
    /// Colours seen at one vertex, as a (min, max, count) summary.
    struct Spectrum
    {
        /// Sorted, deduplicated incident colours.
        std::vector<Color> colors;
        /// Number of incident edges; colors.size() < degree means a clash.
        int degree = 0;

        auto min() const -> Color { return colors.empty() ? 0 : colors.front(); }
        auto max() const -> Color { return colors.empty() ? 0 : colors.back(); }
        auto count() const -> int { return static_cast<int>(colors.size()); }
        auto proper() const -> bool { return count() == degree; }
        auto is_interval() const -> bool { return proper() && (colors.empty() || max() - min() + 1 == count()); }
    };

    auto spectrum(const EdgeColoring & c, Vertex v) -> Spectrum;

    enum class Failure
    {
        None,
        /// Two edges at the witness vertex share the witness colour.
        NotProper,
        /// The witness vertex's colours are distinct but not consecutive.
        NotInterval,
        /// An edge carries a colour outside [1, t].
        ColorOutOfRange,
        /// The witness colour in [1, t] is not used anywhere.
        ColorUnused,
        BadClaim
    };

    auto to_string(Failure f) -> std::string;

    struct VerifyReport
    {
        bool proper = false;
        bool all_vertex_spectra_intervals = false;
        std::vector<Color> colors_used;
        int t_claimed = 0;

        Failure failure = Failure::None;
        std::optional<Vertex> witness_vertex;
        std::optional<EdgeId> witness_edge;
        std::optional<Color> witness_color;

        auto valid() const -> bool { return failure == Failure::None; }

        /// One-line explanation; empty when valid.
        auto reason() const -> std::string;
    };

    /// Full check: proper, every spectrum an interval, colours used are exactly [1, t].
    /// Connectivity is not required.
    auto verify_interval(const EdgeColoring & c, int t) -> VerifyReport;

    struct Lemma1Result
    {
        std::optional<int> t;
        std::string failure;

        explicit operator bool() const { return t.has_value(); }
    };

    /// Shortcut for connected graphs: per-vertex distinct consecutive colours
    /// and min colour 1 imply every colour up to the max is used, so the
    /// max is returned as t without scanning for gaps.
    /// Throws PreconditionError on a disconnected graph.
    auto verify_lemma1(const EdgeColoring & c) -> Lemma1Result;

    /// Dimension of the hypercube g is equal to, or nullopt.
    auto hypercube_dimension(const Graph & g) -> std::optional<int>;

    struct SpanTable
    {
        int n = 0;
        /// sp[k] = max |c(e) - c(f)| over edge pairs at edge distance k.
        std::vector<int> sp;

        auto operator==(const SpanTable &) const -> bool = default;
    };

    /// Exact table by iterating all edge pairs. Throws DomainError unless the
    /// graph is Q_n in the canonical bit-vector labelling, PreconditionError
    /// unless c is a valid interval colouring.
    auto span_table(const EdgeColoring & c) -> SpanTable;

    /// sp[k] <= sp[k-1] + n - k for every 1 <= k <= n-1.
    auto check_span_recurrence(const SpanTable & table) -> bool;

    /// For d(u,v) = k in Q_n, the k neighbours of v one step closer to u
    /// (flip each bit where u and v differ), in increasing order. Empty if u = v.
    auto hypercube_neighbor_witnesses(int n, Vertex u, Vertex v) -> std::vector<Vertex>;
}
