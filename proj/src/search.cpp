#include <icol/search.hpp>
#include <icol/verifier.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <future>
#include <queue>

namespace icol
{
    namespace
    {
        constexpr int max_supported_t = 256;

        using Clock = std::chrono::steady_clock;

        struct ColorSet
        {
            std::array<std::uint64_t, max_supported_t / 64 + 1> words{};

            auto test(Color c) const -> bool { return (words[c >> 6] >> (c & 63)) & 1; }
            auto flip(Color c) -> void { words[c >> 6] ^= std::uint64_t{1} << (c & 63); }
        };

        auto breadth_first_order(const Graph & g) -> std::vector<EdgeId>
        {
            std::vector<EdgeId> order;
            std::vector<bool> seen_vertex(g.vertex_count(), false), seen_edge(g.edge_count(), false);

            std::vector<Vertex> by_degree(g.vertex_count());
            for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
                by_degree[v] = v;
            std::stable_sort(by_degree.begin(), by_degree.end(),
                    [&] (Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

            for (Vertex root : by_degree) {
                if (seen_vertex[root])
                    continue;
                std::queue<Vertex> q;
                q.push(root);
                seen_vertex[root] = true;
                while (! q.empty()) {
                    Vertex v = q.front();
                    q.pop();
                    auto & nbrs = g.neighbours(v);
                    auto & inc = g.incident(v);
                    for (std::size_t i = 0 ; i < nbrs.size() ; ++i) {
                        if (! seen_edge[inc[i]]) {
                            seen_edge[inc[i]] = true;
                            order.push_back(inc[i]);
                        }
                        if (! seen_vertex[nbrs[i]]) {
                            seen_vertex[nbrs[i]] = true;
                            q.push(nbrs[i]);
                        }
                    }
                }
            }
            return order;
        }

        // Depth-first search over colour assignments. Each vertex keeps the
        // set of colours on its coloured edges plus their min and max; a
        // colour is admissible at v iff it is fresh at v and keeps max - min
        // below deg(v). When the last edge at v is coloured the colours are
        // then automatically consecutive.
        class IntervalSearch
        {
        public:
            IntervalSearch(const Graph & g, int t, const SearchConfig & cfg, bool enumerate) :
                g_(g),
                t_(t),
                cfg_(cfg),
                enumerate_(enumerate),
                order_(cfg.edge_order == EdgeOrder::BreadthFirst ? breadth_first_order(g) : index_order(g)),
                colors_(g.edge_count(), 0),
                seen_(g.vertex_count()),
                lo_(g.vertex_count(), 0),
                hi_(g.vertex_count(), 0),
                count_(g.vertex_count(), 0),
                uses_(t + 1, 0),
                unused_(t),
                start_(Clock::now())
            {
            }

            std::function<bool (const EdgeColoring &)> visit;

            auto run() -> SearchOutcome
            {
                SearchOutcome out;
                out.t = t_;
                auto r = descend(0);
                out.nodes = nodes_;
                out.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
                if (r == Result::Aborted)
                    out.status = SearchStatus::BudgetExceeded;
                else if (r == Result::Stop || found_any_)
                    out.status = SearchStatus::Found;
                else
                    out.status = SearchStatus::Exhausted;
                out.coloring = std::move(first_);
                return out;
            }

        private:
            enum class Result { Continue, Stop, Aborted };

            static auto index_order(const Graph & g) -> std::vector<EdgeId>
            {
                std::vector<EdgeId> order(g.edge_count());
                for (EdgeId e = 0 ; e < g.edge_count() ; ++e)
                    order[e] = e;
                return order;
            }

            auto admissible(Vertex x, Color c) const -> bool
            {
                if (seen_[x].test(c))
                    return false;
                if (count_[x] == 0 || ! cfg_.pruning.window)
                    return true;
                int lo = std::min(lo_[x], c), hi = std::max(hi_[x], c);
                return hi - lo < g_.degree(x);
            }

            auto push(Vertex x, Color c) -> bool
            {
                seen_[x].flip(c);
                saved_.push_back({lo_[x], hi_[x]});
                if (count_[x]++ == 0)
                    lo_[x] = hi_[x] = c;
                else {
                    lo_[x] = std::min(lo_[x], c);
                    hi_[x] = std::max(hi_[x], c);
                }
                return count_[x] < g_.degree(x) || hi_[x] - lo_[x] + 1 == g_.degree(x);
            }

            auto pop(Vertex x, Color c) -> void
            {
                seen_[x].flip(c);
                --count_[x];
                std::tie(lo_[x], hi_[x]) = saved_.back();
                saved_.pop_back();
            }

            auto out_of_budget() -> bool
            {
                if (nodes_ >= cfg_.node_budget)
                    return true;
                if ((nodes_ & 1023) == 0
                        && std::chrono::duration<double>(Clock::now() - start_).count() > cfg_.time_budget)
                    return true;
                return false;
            }

            auto emit() -> Result
            {
                EdgeColoring c(g_, colors_);
                // Soundness gate: nothing leaves the search unverified.
                if (! verify_interval(c, t_).valid())
                    throw std::logic_error("search produced an invalid colouring: " + verify_interval(c, t_).reason());
                found_any_ = true;
                if (! first_)
                    first_ = c;
                if (! enumerate_)
                    return Result::Stop;
                return visit && ! visit(c) ? Result::Stop : Result::Continue;
            }

            auto descend(std::size_t depth) -> Result
            {
                if (depth == order_.size())
                    return unused_ == 0 ? emit() : Result::Continue;

                const EdgeId e = order_[depth];
                const auto [u, v] = g_.edge(e);
                const int remaining = static_cast<int>(order_.size() - depth - 1);

                Color first = 1, last = t_;
                if (cfg_.pruning.window)
                    for (Vertex x : {u, v})
                        if (count_[x] > 0) {
                            first = std::max(first, hi_[x] - g_.degree(x) + 1);
                            last = std::min(last, lo_[x] + g_.degree(x) - 1);
                        }
                if (depth == 0 && cfg_.pruning.reversal_symmetry && ! enumerate_)
                    last = std::min(last, (t_ + 1) / 2);

                for (Color c = first ; c <= last ; ++c) {
                    if (! admissible(u, c) || ! admissible(v, c))
                        continue;

                    ++nodes_;
                    if (out_of_budget())
                        return Result::Aborted;

                    bool ok_u = push(u, c);
                    bool ok_v = push(v, c);
                    colors_[e] = c;
                    if (uses_[c]++ == 0)
                        --unused_;

                    Result r = Result::Continue;
                    if (ok_u && ok_v && ! (cfg_.pruning.surjectivity && unused_ > remaining))
                        r = descend(depth + 1);

                    if (--uses_[c] == 0)
                        ++unused_;
                    colors_[e] = 0;
                    pop(v, c);
                    pop(u, c);

                    if (r != Result::Continue)
                        return r;
                }
                return Result::Continue;
            }

            const Graph & g_;
            const int t_;
            const SearchConfig & cfg_;
            const bool enumerate_;
            std::vector<EdgeId> order_;
            std::vector<Color> colors_;
            std::vector<ColorSet> seen_;
            std::vector<int> lo_, hi_, count_;
            std::vector<std::pair<int, int>> saved_;
            std::vector<int> uses_;
            int unused_;
            long long nodes_ = 0;
            Clock::time_point start_;
            bool found_any_ = false;
            std::optional<EdgeColoring> first_;
        };

        auto check_searchable(const Graph & g, int t) -> void
        {
            if (g.edge_count() == 0)
                throw DomainError("search needs a graph with at least one edge");
            if (t > max_supported_t)
                throw DomainError("t = " + std::to_string(t) + " exceeds the supported maximum "
                        + std::to_string(max_supported_t));
        }

        auto run_search(const Graph & g, int t, const SearchConfig & cfg, bool enumerate,
                const std::function<bool (const EdgeColoring &)> & visit) -> SearchOutcome
        {
            check_searchable(g, t);
            if (t < g.max_degree() || t > g.edge_count()) {
                SearchOutcome out;
                out.t = t;
                out.status = SearchStatus::Exhausted;
                return out;
            }
            IntervalSearch search(g, t, cfg, enumerate);
            search.visit = visit;
            return search.run();
        }
    }

    auto apply_environment(SearchConfig cfg) -> SearchConfig
    {
        if (const char * s = std::getenv("INTERVAL_BUDGET_NODES")) {
            char * end = nullptr;
            long long n = std::strtoll(s, &end, 10);
            if (end != s && *end == '\0' && n > 0)
                cfg.node_budget = n;
        }
        return cfg;
    }

    auto to_string(SearchStatus s) -> std::string
    {
        switch (s) {
            case SearchStatus::Found:          return "found";
            case SearchStatus::Exhausted:      return "exhausted";
            case SearchStatus::BudgetExceeded: return "budget_exceeded";
        }
        return "unknown";
    }

    auto to_string(Existence e) -> std::string
    {
        switch (e) {
            case Existence::Yes:          return "yes";
            case Existence::No:           return "no";
            case Existence::Inconclusive: return "inconclusive";
        }
        return "unknown";
    }

    auto default_max_t(const Graph & g) -> int
    {
        if (! g.is_connected())
            return g.edge_count();
        const int d = diameter(g);
        const int delta = g.max_degree();
        const int bound = is_bipartite(g).bipartite ? d * (delta - 1) + 1 : (d + 1) * (delta - 1) + 1;
        return std::min(bound, g.edge_count());
    }

    auto exists_interval_t(const Graph & g, int t, const SearchConfig & cfg) -> SearchOutcome
    {
        return run_search(g, t, cfg, false, {});
    }

    auto enumerate_interval_t(const Graph & g, int t, const std::function<bool (const EdgeColoring &)> & visit,
            const SearchConfig & cfg) -> SearchOutcome
    {
        return run_search(g, t, cfg, true, visit);
    }

    namespace
    {
        template <typename Range>
        auto scan(const Graph & g, const SearchConfig & cfg, Range ts) -> ExtremeResult
        {
            ExtremeResult result;
            SearchConfig local = cfg;
            for (int t : ts) {
                local.node_budget = cfg.node_budget - result.nodes;
                local.time_budget = cfg.time_budget - result.seconds;
                if (local.node_budget <= 0 || local.time_budget <= 0) {
                    result.conclusive = false;
                    return result;
                }
                auto out = exists_interval_t(g, t, local);
                result.nodes += out.nodes;
                result.seconds += out.seconds;
                if (out.status == SearchStatus::BudgetExceeded) {
                    result.conclusive = false;
                    return result;
                }
                if (out.status == SearchStatus::Found) {
                    result.value = t;
                    result.witness = std::move(out.coloring);
                    return result;
                }
            }
            return result;
        }
    }

    auto compute_w(const Graph & g, const SearchConfig & cfg) -> ExtremeResult
    {
        check_searchable(g, 1);
        const int hi = cfg.max_t.value_or(default_max_t(g));
        std::vector<int> ts;
        for (int t = g.max_degree() ; t <= hi ; ++t)
            ts.push_back(t);
        return scan(g, cfg, ts);
    }

    auto compute_W(const Graph & g, const SearchConfig & cfg) -> ExtremeResult
    {
        check_searchable(g, 1);
        const int hi = cfg.max_t.value_or(default_max_t(g));
        std::vector<int> ts;
        for (int t = hi ; t >= g.max_degree() ; --t)
            ts.push_back(t);
        return scan(g, cfg, ts);
    }

    auto spectrum_profile(const Graph & g, int t_min, int t_max, const SearchConfig & cfg)
        -> std::map<int, Existence>
    {
        auto decide = [&] (int t) {
            auto out = exists_interval_t(g, t, cfg);
            switch (out.status) {
                case SearchStatus::Found:     return Existence::Yes;
                case SearchStatus::Exhausted: return Existence::No;
                default:                      return Existence::Inconclusive;
            }
        };

        std::map<int, Existence> profile;
        if (cfg.workers <= 1) {
            for (int t = std::max(1, t_min) ; t <= t_max ; ++t)
                profile[t] = decide(t);
            return profile;
        }

        // One task per t, at most `workers` in flight.
        std::vector<std::pair<int, std::future<Existence>>> pending;
        for (int t = std::max(1, t_min) ; t <= t_max ; ++t) {
            pending.emplace_back(t, std::async(std::launch::async, decide, t));
            if (static_cast<int>(pending.size()) >= cfg.workers) {
                for (auto & [k, f] : pending)
                    profile[k] = f.get();
                pending.clear();
            }
        }
        for (auto & [k, f] : pending)
            profile[k] = f.get();
        return profile;
    }
}
