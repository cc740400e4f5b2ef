#include <icol/catalog.hpp>

#include <charconv>
#include <sstream>

namespace icol
{
    auto to_string(Mode m) -> std::string
    {
        return m == Mode::Minimal ? "minimal" : "widest";
    }

    auto parse_mode(const std::string & s) -> std::optional<Mode>
    {
        if (s == "minimal")
            return Mode::Minimal;
        if (s == "widest")
            return Mode::Widest;
        return std::nullopt;
    }

    auto family_names() -> std::vector<std::string>
    {
        return {"path", "cycle", "complete", "complete-bipartite", "hypercube", "grid", "cylinder", "torus", "product"};
    }

    namespace
    {
        auto split(const std::string & s, char sep) -> std::vector<std::string>
        {
            std::vector<std::string> parts;
            std::string::size_type start = 0;
            while (true) {
                auto pos = s.find(sep, start);
                parts.push_back(s.substr(start, pos - start));
                if (pos == std::string::npos)
                    return parts;
                start = pos + 1;
            }
        }

        auto parse_ints(const std::string & family, const std::string & params) -> std::vector<int>
        {
            std::vector<int> values;
            if (params.empty())
                return values;
            for (auto & part : split(params, ',')) {
                int v = 0;
                auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
                if (part.empty() || ec != std::errc{} || end != part.data() + part.size())
                    throw ParseError(family + ": parameter \"" + part + "\" is not an integer");
                values.push_back(v);
            }
            return values;
        }

        auto expect_count(const std::string & family, const std::vector<int> & v, std::size_t n) -> void
        {
            if (v.size() != n)
                throw ParseError(family + ": expected " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s")
                        + ", got " + std::to_string(v.size()));
        }

        auto parse_single(const std::string & family, const std::string & params) -> FamilySpec
        {
            auto v = parse_ints(family, params);
            FamilySpec spec = FamilySpec::path(1);
            if (family == "path") {
                expect_count(family, v, 1);
                spec = FamilySpec::path(v[0]);
            }
            else if (family == "cycle") {
                expect_count(family, v, 1);
                spec = FamilySpec::cycle(v[0]);
            }
            else if (family == "complete") {
                expect_count(family, v, 1);
                spec = FamilySpec::complete(v[0]);
            }
            else if (family == "complete-bipartite") {
                expect_count(family, v, 2);
                spec = FamilySpec::complete_bipartite(v[0], v[1]);
            }
            else if (family == "hypercube") {
                expect_count(family, v, 1);
                spec = FamilySpec::hypercube(v[0]);
            }
            else if (family == "grid") {
                if (v.empty())
                    throw ParseError("grid: expected at least one dimension");
                spec = FamilySpec::grid(v);
            }
            else if (family == "cylinder") {
                expect_count(family, v, 2);
                spec = FamilySpec::cylinder(v[0], v[1]);
            }
            else if (family == "torus") {
                expect_count(family, v, 2);
                spec = FamilySpec::torus(v[0], v[1]);
            }
            else
                throw ParseError("unknown family \"" + family + "\"");
            spec.validate();
            return spec;
        }
    }

    auto parse_family(const std::string & family, const std::string & params) -> FamilySpec
    {
        if (family != "product" && ! family.empty())
            return parse_single(family, params);

        auto factors = split(params, '*');
        if (factors.size() < 2)
            throw ParseError("product: expected factors joined by '*', e.g. cycle:4*path:3");
        std::optional<FamilySpec> result;
        for (auto & factor : factors) {
            auto colon = factor.find(':');
            if (colon == std::string::npos)
                throw ParseError("product: factor \"" + factor + "\" must be written name:params");
            auto spec = parse_single(factor.substr(0, colon), factor.substr(colon + 1));
            result = result ? FamilySpec::product(*result, spec) : spec;
        }
        return *result;
    }

    auto supported_modes() -> std::string
    {
        return
            "  path            widest (n >= 2)\n"
            "  cycle           widest (even n)\n"
            "  complete        widest (n = 2)\n"
            "  complete-bipartite  widest\n"
            "  hypercube       minimal, widest\n"
            "  grid            widest (two dimensions, both >= 2)\n"
            "  cylinder        minimal (odd n, m >= 2), widest (even m)\n"
            "  torus           widest (at least one side even)\n"
            "  product         widest (left factor regular, connected and constructible; right factor a path or even cycle)\n";
    }

    namespace
    {
        auto hypercube_minimal(int n) -> Construction
        {
            auto g = realize(FamilySpec::hypercube(n));
            std::vector<Color> colors;
            for (auto & [u, v] : g.edges()) {
                int bit = 0;
                while (((u ^ v) >> bit) != 1)
                    ++bit;
                colors.push_back(bit + 1);
            }
            return {EdgeColoring(std::move(g), std::move(colors)), n, "Q_" + std::to_string(n) + " by direction"};
        }

        auto widest(const FamilySpec & spec) -> std::optional<Construction>
        {
            using namespace family;
            if (auto p = std::get_if<Path>(&spec.variant); p && p->n >= 2)
                return widest_path_coloring(p->n);
            if (auto c = std::get_if<Cycle>(&spec.variant); c && c->n % 2 == 0)
                return widest_even_cycle_coloring(c->n / 2);
            if (auto k = std::get_if<Complete>(&spec.variant); k && k->n == 2)
                return widest_path_coloring(2);
            if (auto k = std::get_if<CompleteBipartite>(&spec.variant))
                return complete_bipartite_coloring(k->r, k->s);
            if (auto q = std::get_if<Hypercube>(&spec.variant))
                return hypercube_widest(q->n);
            if (auto g = std::get_if<Grid>(&spec.variant); g && g->dims.size() == 2 && g->dims[0] >= 2 && g->dims[1] >= 2)
                return grid_widest(g->dims[0], g->dims[1]);
            if (auto c = std::get_if<Cylinder>(&spec.variant); c && c->m % 2 == 0)
                return cylinder_widest(c->m, c->n);
            if (auto t = std::get_if<Torus>(&spec.variant); t && (t->m % 2 == 0 || t->n % 2 == 0))
                return torus_widest(t->m, t->n);
            if (auto p = std::get_if<Product>(&spec.variant)) {
                auto base = widest(*p->left);
                if (! base || ! base->coloring.graph.is_regular() || ! base->coloring.graph.is_connected())
                    return std::nullopt;
                const auto & alpha = base->coloring;
                int r = alpha.graph.max_degree();
                std::optional<Construction> c;
                if (auto path = std::get_if<Path>(&p->right->variant))
                    c = product_with_path(alpha.graph, alpha, r, path->n);
                else if (auto cycle = std::get_if<Cycle>(&p->right->variant); cycle && cycle->n % 2 == 0)
                    c = product_with_even_cycle(alpha.graph, alpha, r, cycle->n / 2);
                if (c)
                    c->name = spec.name();
                return c;
            }
            return std::nullopt;
        }

        auto minimal(const FamilySpec & spec) -> std::optional<Construction>
        {
            using namespace family;
            if (auto q = std::get_if<Hypercube>(&spec.variant))
                return hypercube_minimal(q->n);
            if (auto c = std::get_if<Cylinder>(&spec.variant); c && c->n % 2 == 1) {
                if (c->m == 2)
                    return prism_three_coloring(c->n / 2);
                if (c->m >= 3)
                    return cylinder_minimal(c->m, c->n);
            }
            return std::nullopt;
        }
    }

    auto construct(const FamilySpec & spec, Mode mode) -> std::optional<Construction>
    {
        spec.validate();
        auto c = mode == Mode::Widest ? widest(spec) : minimal(spec);
        if (c && ! (c->coloring.graph == realize(spec)))
            throw std::logic_error("construction for " + spec.name() + " is not on the realized graph");
        return c;
    }
}
