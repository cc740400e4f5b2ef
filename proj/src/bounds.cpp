#include <icol/bounds.hpp>

#include <algorithm>
#include <numeric>

namespace icol
{
    auto to_string(Quantity q) -> std::string
    {
        return q == Quantity::LeastT ? "w" : "W";
    }

    auto to_string(PlanarKind k) -> std::string
    {
        switch (k) {
            case PlanarKind::Grid:             return "grid";
            case PlanarKind::Cylinder:         return "cylinder";
            case PlanarKind::NotPlanar:        return "not-planar";
            case PlanarKind::HypothesisNotMet: return "hypothesis-not-met";
        }
        return "unknown";
    }

    namespace
    {
        auto pick(const std::vector<BoundEntry> & entries, Quantity q, bool want_max) -> std::optional<long long>
        {
            std::optional<long long> best;
            for (auto & e : entries)
                if (e.quantity == q && (! best || (want_max ? e.value > *best : e.value < *best)))
                    best = e.value;
            return best;
        }
    }

    auto BoundReport::best_lower(Quantity q) const -> std::optional<long long>
    {
        return pick(lower_bounds, q, true);
    }

    auto BoundReport::best_upper(Quantity q) const -> std::optional<long long>
    {
        return pick(upper_bounds, q, false);
    }

    auto BoundReport::lower_from(Quantity q, const std::string & source) const -> std::optional<long long>
    {
        for (auto & e : lower_bounds)
            if (e.quantity == q && e.source == source)
                return e.value;
        return std::nullopt;
    }

    auto BoundReport::consistent() const -> bool
    {
        for (auto q : {Quantity::LeastT, Quantity::GreatestT}) {
            auto lo = best_lower(q), hi = best_upper(q);
            if (lo && hi && *lo > *hi)
                return false;
        }
        auto w_lo = best_lower(Quantity::LeastT), W_hi = best_upper(Quantity::GreatestT);
        return ! (w_lo && W_hi && *w_lo > *W_hi);
    }

    auto upper_bound(const Graph & g) -> UpperBound
    {
        const long long d = diameter(g);
        const long long delta = g.max_degree();
        if (is_bipartite(g).bipartite)
            return {d * (delta - 1) + 1, "diameter-bipartite"};
        return {(d + 1) * (delta - 1) + 1, "diameter-general"};
    }

    auto odd_part(long long n) -> OddPart
    {
        if (n < 1)
            throw DomainError("odd_part needs n >= 1");
        int q = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++q;
        }
        return {n, q};
    }

    auto complete_graph_lower(long long n) -> long long
    {
        auto [p, q] = odd_part(n);
        return 4 * n - 2 - p - q;
    }

    auto complete_times_cycle_lower(long long n) -> long long
    {
        auto [p, q] = odd_part(n);
        return 2 * n * n + 4 * n - 1 - p - q;
    }

    auto multi_grid_lower(std::vector<int> dims) -> long long
    {
        if (dims.size() < 2)
            throw DomainError("multi_grid_lower needs at least two dimensions");
        for (int d : dims)
            if (d < 2)
                throw DomainError("multi_grid_lower needs every dimension >= 2");
        std::sort(dims.begin(), dims.end(), std::greater<>());
        const long long k = static_cast<long long>(dims.size()) / 2;
        long long paired = 0;
        for (long long i = 0 ; i < 2 * k ; ++i)
            paired += dims[i];
        if (dims.size() % 2 == 0)
            return 2 * paired - 6 * k;
        return 2 * paired + dims.back() - 6 * k - 1;
    }

    namespace
    {
        enum class Shape { Path, Cycle, Other };

        auto shape_of(const Graph & g) -> Shape
        {
            if (! g.is_connected() || g.max_degree() > 2)
                return Shape::Other;
            if (g.edge_count() == g.vertex_count() - 1)
                return Shape::Path;
            if (g.edge_count() == g.vertex_count() && g.vertex_count() >= 3)
                return Shape::Cycle;
            return Shape::Other;
        }

        struct Collector
        {
            BoundReport & r;

            auto lower(Quantity q, long long v, std::string src) -> void { r.lower_bounds.push_back({q, v, std::move(src)}); }
            auto upper(Quantity q, long long v, std::string src) -> void { r.upper_bounds.push_back({q, v, std::move(src)}); }
            auto exact(Quantity q, long long v, const std::string & src) -> void
            {
                lower(q, v, src);
                upper(q, v, src);
            }
        };

        constexpr auto w = Quantity::LeastT;
        constexpr auto W = Quantity::GreatestT;

        auto gcd(long long a, long long b) -> long long { return std::gcd(a, b); }

        auto path_values(Collector & c, int n) -> void
        {
            if (n < 2)
                return;
            c.r.interval_colorable = true;
            c.exact(W, n - 1, "path-widest");
            c.exact(w, n == 2 ? 1 : 2, "grid-least");
        }

        auto cycle_values(Collector & c, int n) -> void
        {
            if (n % 2 == 1) {
                c.r.interval_colorable = false;
                c.r.notes.push_back("regular with chromatic index above maximum degree");
                return;
            }
            c.r.interval_colorable = true;
            c.exact(W, n / 2 + 1, "even-cycle-widest");
            c.exact(w, 2, "regular-class-one");
        }

        auto grid_values(Collector & c, const std::vector<int> & dims) -> void
        {
            std::vector<int> nontrivial;
            for (int d : dims)
                if (d >= 2)
                    nontrivial.push_back(d);
            if (nontrivial.empty())
                return;
            if (nontrivial.size() == 1) {
                path_values(c, nontrivial.front());
                return;
            }

            c.r.interval_colorable = true;
            int delta = 0;
            for (int d : nontrivial)
                delta += d == 2 ? 1 : 2;
            c.exact(w, delta, "grid-least");

            if (nontrivial.size() == 2) {
                const int m = nontrivial[0], n = nontrivial[1];
                c.lower(W, 2 * (m + n - 3), "grid-widest");
                if (m == 2 || n == 2)
                    c.exact(W, 2 * (m == 2 ? n : m) - 1, "ladder-widest");
                if (m >= 3 && n >= 3)
                    c.upper(w, 6, "planar-product");
                return;
            }

            const long long value = multi_grid_lower(nontrivial);
            c.lower(W, value, "multi-grid-widest");
            if (nontrivial.size() % 2 == 1) {
                // The odd form should equal the even form on the 2k largest
                // dimensions plus W of the remaining path.
                auto sorted = nontrivial;
                std::sort(sorted.begin(), sorted.end(), std::greater<>());
                const int last = sorted.back();
                sorted.pop_back();
                const long long split = multi_grid_lower(sorted) + (last - 1);
                if (value != split)
                    c.r.notes.push_back("odd-dimension grid bound " + std::to_string(value)
                            + " differs from sub-product bound " + std::to_string(split));
            }
        }

        auto cylinder_values(Collector & c, int m, int n) -> void
        {
            if (m == 1) {
                cycle_values(c, n);
                return;
            }
            c.r.interval_colorable = true;
            if (m == 2) {
                c.exact(w, 3, "prism");
                c.exact(W, n + 2, "prism");
            }
            if (n % 2 == 0) {
                const int half = n / 2;
                if (half >= 2)
                    c.lower(W, 3 * m + half - 2, "cylinder-even-prior");
                c.exact(w, m == 2 ? 3 : 4, "grid-least");
                if (m % 2 == 0 && half >= 2)
                    c.lower(W, 4 * (m / 2) + 2 * half - 2, "cylinder-widest");
            }
            else {
                const int half = (n - 1) / 2;
                if (m >= 3)
                    c.exact(w, m % 2 == 0 ? 4 : 6, "odd-cylinder-least");
                if (m % 2 == 0)
                    c.lower(W, 4 * (m / 2) + 2 * half - 1, "cylinder-widest");
            }
            if (m >= 3)
                c.upper(w, 6, "planar-product");
        }

        auto torus_values(Collector & c, int a, int b) -> void
        {
            if (a % 2 == 1 && b % 2 == 1) {
                c.r.interval_colorable = false;
                c.r.notes.push_back("torus with both cycle lengths odd");
                return;
            }
            c.r.interval_colorable = true;
            c.exact(w, 4, "regular-class-one");
            if (a % 2 == 0 && b % 2 == 0) {
                const int m = a / 2, n = b / 2;
                c.lower(W, std::max(3 * m + n, 3 * n + m), "torus-even-prior");
                c.lower(W, std::max(3 * m + n + 2, 3 * n + m + 2), "torus-widest");
                return;
            }
            const int even = a % 2 == 0 ? a : b;
            const int odd = a % 2 == 0 ? b : a;
            const int m = even / 2, n = (odd - 1) / 2;
            if (m >= 2)
                c.lower(W, m % 2 == 1 ? 2 * m + 2 * n + 2 : 2 * m + 2 * n + 3, "torus-widest");
        }

        auto catalogue(const FamilySpec & spec, BoundReport & r) -> void;

        auto product_values(Collector & c, const FamilySpec & left, const FamilySpec & right) -> void
        {
            auto lr = family_values(left);
            auto rr = family_values(right);
            if (lr.interval_colorable == true && rr.interval_colorable == true)
                c.r.interval_colorable = true;

            auto l_lo = lr.best_lower(W), r_lo = rr.best_lower(W);
            if (l_lo && r_lo)
                c.lower(W, *l_lo + *r_lo, "product-sum");
            auto l_w = lr.best_upper(w), r_w = rr.best_upper(w);
            if (l_w && r_w)
                c.upper(w, *l_w + *r_w, "product-sum");

            // Regular factor times a path, an even cycle or a hypercube.
            auto regular_extension = [&] (const FamilySpec & base, const BoundReport & base_report,
                    const FamilySpec & other) {
                auto g = realize(base);
                auto base_lo = base_report.best_lower(W);
                if (! base_lo || g.edge_count() == 0 || ! g.is_regular() || ! g.is_connected())
                    return;
                const long long r = g.degree(0);
                auto h = realize(other);
                auto s = shape_of(h);
                if (auto q = std::get_if<family::Hypercube>(&other.variant)) {
                    const long long n = q->n;
                    c.lower(W, *base_lo + n * (n + 2 * r + 1) / 2, "regular-times-hypercube");
                }
                else if (s == Shape::Path && h.vertex_count() >= 1) {
                    const long long m = h.vertex_count();
                    c.lower(W, *base_lo + (m - 1) + (m - 1) * r, "regular-times-path");
                }
                else if (s == Shape::Cycle && h.vertex_count() % 2 == 0 && h.vertex_count() >= 4) {
                    const long long n = h.vertex_count() / 2;
                    c.lower(W, *base_lo + (n + 1) + n * r, "regular-times-even-cycle");
                    auto k = std::get_if<family::Complete>(&base.variant);
                    if (k && k->n == h.vertex_count())
                        c.lower(W, complete_times_cycle_lower(n), "complete-times-cycle");
                }
            };
            regular_extension(left, lr, right);
            regular_extension(right, rr, left);

            auto planar = planar_product_class(left, right);
            if (planar.w_upper)
                c.upper(w, *planar.w_upper, "planar-product");
        }

        auto catalogue(const FamilySpec & spec, BoundReport & r) -> void
        {
            Collector c{r};
            if (auto p = std::get_if<family::Path>(&spec.variant))
                path_values(c, p->n);
            else if (auto cy = std::get_if<family::Cycle>(&spec.variant))
                cycle_values(c, cy->n);
            else if (auto k = std::get_if<family::Complete>(&spec.variant)) {
                if (k->n >= 2 && k->n % 2 == 0) {
                    r.interval_colorable = true;
                    c.exact(w, k->n - 1, "regular-class-one");
                    c.lower(W, complete_graph_lower(k->n / 2), "complete-graph-widest");
                }
                else if (k->n >= 3) {
                    r.interval_colorable = false;
                    r.notes.push_back("regular with chromatic index above maximum degree");
                }
            }
            else if (auto kb = std::get_if<family::CompleteBipartite>(&spec.variant)) {
                r.interval_colorable = true;
                c.exact(w, kb->r + kb->s - gcd(kb->r, kb->s), "complete-bipartite");
                c.exact(W, kb->r + kb->s - 1, "complete-bipartite");
            }
            else if (auto q = std::get_if<family::Hypercube>(&spec.variant)) {
                const long long n = q->n;
                r.interval_colorable = true;
                c.exact(w, n, "hypercube-least");
                c.lower(W, n * (n + 1) / 2, "hypercube-widest");
                c.upper(W, n * (n + 1) / 2, "hypercube-span");
            }
            else if (auto g = std::get_if<family::Grid>(&spec.variant))
                grid_values(c, g->dims);
            else if (auto cyl = std::get_if<family::Cylinder>(&spec.variant))
                cylinder_values(c, cyl->m, cyl->n);
            else if (auto t = std::get_if<family::Torus>(&spec.variant))
                torus_values(c, t->m, t->n);
            else if (auto pr = std::get_if<family::Product>(&spec.variant))
                product_values(c, *pr->left, *pr->right);
        }
    }

    auto family_values(const FamilySpec & spec) -> BoundReport
    {
        spec.validate();
        BoundReport r{spec, {}, {}, std::nullopt, std::nullopt, std::nullopt, std::nullopt, {}};
        catalogue(spec, r);

        if (spec.vertex_count() <= 4096) {
            auto g = realize(spec);
            if (g.edge_count() > 0 && g.is_connected()) {
                auto ub = upper_bound(g);
                r.upper_bounds.push_back({Quantity::GreatestT, ub.value, ub.source});
            }
        }
        return r;
    }

    auto planar_product_class(const FamilySpec & a, const FamilySpec & b) -> PlanarClass
    {
        a.validate();
        b.validate();
        if (a.vertex_count() < 3 || b.vertex_count() < 3)
            return {PlanarKind::HypothesisNotMet, std::nullopt, false};

        auto sa = shape_of(realize(a));
        auto sb = shape_of(realize(b));
        if (sa == Shape::Path && sb == Shape::Path)
            return {PlanarKind::Grid, 6, true};
        if ((sa == Shape::Path && sb == Shape::Cycle) || (sa == Shape::Cycle && sb == Shape::Path))
            return {PlanarKind::Cylinder, 6, true};
        return {PlanarKind::NotPlanar, std::nullopt, false};
    }
}
