#include <icol/matrix.hpp>
#include <icol/search.hpp>
#include <icol/verifier.hpp>

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace icol
{
    auto suite_name(Suite s) -> std::string
    {
        switch (s) {
            case Suite::Grid:               return "grid";
            case Suite::CylinderWidestEven: return "cylinder-widest-even";
            case Suite::CylinderWidestOdd:  return "cylinder-widest-odd";
            case Suite::CylinderMinimal:    return "cylinder-minimal";
            case Suite::TorusOdd:           return "torus-odd";
            case Suite::TorusEven:          return "torus-even";
            case Suite::Product:            return "product";
        }
        return "unknown";
    }

    auto all_suites() -> std::vector<Suite>
    {
        return {Suite::Grid, Suite::CylinderWidestEven, Suite::CylinderWidestOdd, Suite::CylinderMinimal,
            Suite::TorusOdd, Suite::TorusEven, Suite::Product};
    }

    auto parse_suite(const std::string & name) -> std::optional<Suite>
    {
        for (auto s : all_suites())
            if (suite_name(s) == name)
                return s;
        return std::nullopt;
    }

    auto default_range(Suite s) -> MatrixRange
    {
        switch (s) {
            case Suite::Grid:               return {2, 12, 2, 12};
            case Suite::CylinderWidestEven: return {1, 8, 2, 8};
            case Suite::CylinderWidestOdd:  return {1, 8, 1, 8};
            case Suite::CylinderMinimal:    return {3, 9, 1, 5};
            case Suite::TorusOdd:           return {2, 6, 1, 6};
            case Suite::TorusEven:          return {2, 5, 2, 5};
            case Suite::Product:            return {1, 5, 2, 4};
        }
        return {0, -1, 0, -1};
    }

    auto layers_reproduce(const EdgeColoring & product, const EdgeColoring & alpha, int layers,
            const std::vector<int> & shifts) -> bool
    {
        const auto & g = alpha.graph;
        for (int i = 0 ; i < layers ; ++i)
            for (EdgeId e = 0 ; e < g.edge_count() ; ++e) {
                auto idx = product.graph.edge_index(g.edge(e).u * layers + i, g.edge(e).v * layers + i);
                if (! idx || product.colors[*idx] - shifts[i] != alpha.colors[e])
                    return false;
            }
        return true;
    }

    namespace
    {
        auto evaluate(MatrixRow row, const EdgeColoring & coloring, const BoundReport & bounds) -> MatrixRow
        {
            auto report = verify_interval(coloring, row.claimed_t);
            row.verified = report.valid();
            row.reason = report.reason();
            row.upper = upper_bound(coloring.graph).value;

            std::ostringstream why;
            if (! row.verified)
                why << "verify: " << row.reason << "; ";
            if (row.claimed_t > row.upper)
                why << "t above diameter ceiling " << row.upper << "; ";
            if (auto hi = bounds.best_upper(Quantity::GreatestT); hi && row.claimed_t > *hi)
                why << "t above W upper bound " << *hi << "; ";
            if (auto lo = bounds.best_lower(Quantity::LeastT); lo && row.claimed_t < *lo)
                why << "t below w lower bound " << *lo << "; ";
            if (row.target && row.claimed_t != *row.target)
                why << "t differs from " << row.target_source << " value " << *row.target << "; ";
            if (! bounds.consistent())
                why << "bound report inconsistent; ";
            row.failure = why.str();
            row.ok = row.failure.empty();
            return row;
        }

        auto row_for(const Construction & c, FamilySpec family, std::optional<long long> target,
                std::string target_source) -> MatrixRow
        {
            MatrixRow row;
            row.instance = c.name;
            row.family = std::move(family);
            row.claimed_t = c.claimed_t;
            row.target = target;
            row.target_source = std::move(target_source);
            auto bounds = family_values(row.family);
            return evaluate(std::move(row), c.coloring, bounds);
        }

        auto widest_row(const Construction & c, FamilySpec family, const std::string & source) -> MatrixRow
        {
            auto target = family_values(family).lower_from(Quantity::GreatestT, source);
            return row_for(c, std::move(family), target, source);
        }

        struct Base
        {
            std::string name;
            FamilySpec family;
            EdgeColoring alpha;
            int r;
        };

        auto product_bases() -> std::vector<Base>
        {
            std::vector<Base> bases;
            bases.push_back({"K_2", FamilySpec::complete(2), widest_path_coloring(2).coloring, 1});
            bases.push_back({"C_4", FamilySpec::cycle(4), widest_even_cycle_coloring(2).coloring, 2});
            bases.push_back({"C_6", FamilySpec::cycle(6), widest_even_cycle_coloring(3).coloring, 2});
            auto k4 = compute_W(complete_graph(4));
            if (! k4.witness)
                throw std::logic_error("no interval colouring of K_4 found");
            bases.push_back({"K_4", FamilySpec::complete(4), *k4.witness, 3});
            return bases;
        }

        auto product_rows(const MatrixRange & range) -> std::vector<MatrixRow>
        {
            std::vector<MatrixRow> rows;
            for (auto & base : product_bases()) {
                const int t_alpha = base.alpha.max_color();
                for (int m = range.first_lo ; m <= range.first_hi ; ++m) {
                    auto c = product_with_path(base.alpha.graph, base.alpha, base.r, m);
                    c.name = base.name + " x P_" + std::to_string(m);
                    auto row = row_for(c, FamilySpec::product(base.family, FamilySpec::path(m)),
                            t_alpha + (m - 1) * (base.r + 1), "layered path extension");
                    std::vector<int> shifts;
                    for (int i = 1 ; i <= m ; ++i)
                        shifts.push_back((i - 1) * (base.r + 1));
                    if (! layers_reproduce(c.coloring, base.alpha, m, shifts)) {
                        row.ok = false;
                        row.failure += "layer restriction does not reproduce alpha; ";
                    }
                    rows.push_back(std::move(row));
                }
                for (int n = range.second_lo ; n <= range.second_hi ; ++n) {
                    auto c = product_with_even_cycle(base.alpha.graph, base.alpha, base.r, n);
                    c.name = base.name + " x C_" + std::to_string(2 * n);
                    auto row = row_for(c, FamilySpec::product(base.family, FamilySpec::cycle(2 * n)),
                            t_alpha + n * (base.r + 1) + 1, "layered even-cycle extension");
                    std::vector<int> shifts;
                    for (int i = 1 ; i <= 2 * n ; ++i)
                        shifts.push_back(i == 1 ? 0 : i <= n + 1 ? (i - 1) * (base.r + 1) + 1 : (2 * n + 1 - i) * (base.r + 1));
                    if (! layers_reproduce(c.coloring, base.alpha, 2 * n, shifts)) {
                        row.ok = false;
                        row.failure += "layer restriction does not reproduce alpha; ";
                    }
                    rows.push_back(std::move(row));
                }
            }
            return rows;
        }
    }

    auto run_suite(Suite s, const MatrixRange & range) -> std::vector<MatrixRow>
    {
        if (s == Suite::Product)
            return product_rows(range);

        std::vector<MatrixRow> rows;
        for (int a = range.first_lo ; a <= range.first_hi ; ++a)
            for (int b = range.second_lo ; b <= range.second_hi ; ++b) {
                try {
                    switch (s) {
                        case Suite::Grid:
                            rows.push_back(widest_row(grid_widest(a, b), FamilySpec::grid({a, b}), "grid-widest"));
                            break;
                        case Suite::CylinderWidestEven:
                            rows.push_back(widest_row(cylinder_widest(2 * a, 2 * b),
                                        FamilySpec::cylinder(2 * a, 2 * b), "cylinder-widest"));
                            break;
                        case Suite::CylinderWidestOdd:
                            rows.push_back(widest_row(cylinder_widest(2 * a, 2 * b + 1),
                                        FamilySpec::cylinder(2 * a, 2 * b + 1), "cylinder-widest"));
                            break;
                        case Suite::CylinderMinimal: {
                            auto family = FamilySpec::cylinder(a, 2 * b + 1);
                            auto target = family_values(family).lower_from(Quantity::LeastT, "odd-cylinder-least");
                            rows.push_back(row_for(cylinder_minimal(a, 2 * b + 1), family, target, "odd-cylinder-least"));
                            break;
                        }
                        case Suite::TorusOdd:
                            rows.push_back(widest_row(torus_widest(2 * a, 2 * b + 1),
                                        FamilySpec::torus(2 * a, 2 * b + 1), "torus-widest"));
                            break;
                        case Suite::TorusEven:
                            rows.push_back(widest_row(torus_widest(2 * a, 2 * b),
                                        FamilySpec::torus(2 * a, 2 * b), "torus-widest"));
                            break;
                        case Suite::Product:
                            break;
                    }
                }
                catch (const std::exception & e) {
                    MatrixRow row;
                    row.instance = suite_name(s) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                    row.failure = e.what();
                    rows.push_back(std::move(row));
                }
            }
        return rows;
    }

    auto format_table(const std::vector<MatrixRow> & rows) -> std::string
    {
        std::size_t width = 8;
        for (auto & r : rows)
            width = std::max(width, r.instance.size());

        std::ostringstream s;
        s << std::left << std::setw(width + 2) << "instance" << std::right
          << std::setw(6) << "t" << std::setw(8) << "target" << std::setw(8) << "upper"
          << std::setw(10) << "verified" << "  status\n";
        int failures = 0;
        for (auto & r : rows) {
            s << std::left << std::setw(width + 2) << r.instance << std::right
              << std::setw(6) << r.claimed_t
              << std::setw(8) << (r.target ? std::to_string(*r.target) : "-")
              << std::setw(8) << r.upper
              << std::setw(10) << (r.verified ? "yes" : "no")
              << "  " << (r.ok ? "ok" : "FAIL " + r.failure) << '\n';
            if (! r.ok)
                ++failures;
        }
        s << rows.size() << " rows, " << failures << " failed\n";
        return s.str();
    }

    auto format_records(const std::vector<MatrixRow> & rows) -> std::string
    {
        std::string out;
        for (auto & r : rows) {
            nlohmann::ordered_json doc;
            doc["instance"] = r.instance;
            doc["t"] = r.claimed_t;
            doc["target"] = r.target ? nlohmann::ordered_json(*r.target) : nlohmann::ordered_json(nullptr);
            doc["target_source"] = r.target_source;
            doc["upper"] = r.upper;
            doc["verified"] = r.verified;
            doc["ok"] = r.ok;
            doc["failure"] = r.failure;
            out += doc.dump() + "\n";
        }
        return out;
    }
}
