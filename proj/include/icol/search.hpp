#pragma once

#include <icol/coloring.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace icol
{
    enum class EdgeOrder
    {
        /// Breadth-first from a maximum-degree vertex, so every edge after the
        /// first touches an already constrained vertex.
        BreadthFirst,
        /// Canonical edge-id order.
        Index
    };

    struct Pruning
    {
        /// Reject a colour that would stretch a vertex's colours beyond its degree.
        bool window = true;
        /// Fail when fewer uncoloured edges remain than unused colours.
        bool surjectivity = true;
        /// The first edge only takes colours <= (t+1)/2; c -> t+1-c maps
        /// interval t-colourings onto interval t-colourings.
        bool reversal_symmetry = true;
    };

    struct SearchConfig
    {
        /// Largest t considered by compute_W and spectrum_profile; defaults to default_max_t(g).
        std::optional<int> max_t;
        EdgeOrder edge_order = EdgeOrder::BreadthFirst;
        long long node_budget = 100'000'000;
        double time_budget = 300.0;
        Pruning pruning;
        /// spectrum_profile may decide distinct t values in parallel.
        int workers = 1;
    };

    /// Reads INTERVAL_BUDGET_NODES, if set, into cfg.node_budget.
    auto apply_environment(SearchConfig cfg) -> SearchConfig;

    enum class SearchStatus
    {
        Found,
        Exhausted,
        BudgetExceeded
    };

    auto to_string(SearchStatus s) -> std::string;

    struct SearchOutcome
    {
        SearchStatus status = SearchStatus::Exhausted;
        int t = 0;
        /// Present iff status == Found; always a verified interval t-colouring.
        std::optional<EdgeColoring> coloring;
        long long nodes = 0;
        double seconds = 0.0;
    };

    /// Ceiling on W(g): for connected g the diameter bound (bipartite or
    /// general form), further capped by |E|; for disconnected g, |E|.
    auto default_max_t(const Graph & g) -> int;

    /// Complete backtracking decision for the existence of an interval
    /// t-colouring. t < max degree returns Exhausted without searching.
    /// Throws DomainError if g has no edges.
    auto exists_interval_t(const Graph & g, int t, const SearchConfig & cfg = {}) -> SearchOutcome;

    /// Visits every interval t-colouring of g (symmetry breaking is off).
    /// The visitor returns false to stop early; the outcome is then Found.
    auto enumerate_interval_t(const Graph & g, int t, const std::function<bool (const EdgeColoring &)> & visit,
            const SearchConfig & cfg = {}) -> SearchOutcome;

    struct ExtremeResult
    {
        /// Least (compute_w) or greatest (compute_W) feasible t; nullopt if none
        /// was found.
        std::optional<int> value;
        /// False if any t visited before reaching the answer ran out of budget.
        bool conclusive = true;
        std::optional<EdgeColoring> witness;
        long long nodes = 0;
        double seconds = 0.0;
    };

    /// Scans t upward from max degree. The node budget is shared by the whole scan.
    auto compute_w(const Graph & g, const SearchConfig & cfg = {}) -> ExtremeResult;

    /// Scans t downward from the configured ceiling.
    auto compute_W(const Graph & g, const SearchConfig & cfg = {}) -> ExtremeResult;

    enum class Existence
    {
        Yes,
        No,
        Inconclusive
    };

    auto to_string(Existence e) -> std::string;

    /// Per-t decision over [t_min, t_max], each t with its own budget.
    auto spectrum_profile(const Graph & g, int t_min, int t_max, const SearchConfig & cfg = {})
        -> std::map<int, Existence>;
}
