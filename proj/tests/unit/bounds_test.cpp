#include <icol/bounds.hpp>

#include <doctest.h>

using namespace icol;

namespace
{
    constexpr auto w = Quantity::LeastT;
    constexpr auto W = Quantity::GreatestT;
}

TEST_CASE("diameter ceilings")
{
    auto g34 = upper_bound(realize(FamilySpec::grid({3, 4})));
    CHECK(g34.value == 16);
    CHECK(g34.source == "diameter-bipartite");
    CHECK(upper_bound(realize(FamilySpec::torus(4, 4))).value == 13);

    auto k4c4 = upper_bound(realize(FamilySpec::product(FamilySpec::complete(4), FamilySpec::cycle(4))));
    CHECK(k4c4.value == 17);
    CHECK(k4c4.source == "diameter-general");

    CHECK_THROWS_AS(upper_bound(Graph(4, {{0, 1}, {2, 3}})), InfiniteDistance);
}

TEST_CASE("odd part")
{
    for (long long n = 1 ; n <= 64 ; ++n) {
        auto [p, q] = odd_part(n);
        CHECK(p % 2 == 1);
        CHECK((p << q) == n);
    }
    CHECK(odd_part(12).p == 3);
    CHECK(odd_part(12).q == 2);
}

TEST_CASE("complete graph arithmetic")
{
    CHECK(complete_graph_lower(4) == 11);
    for (long long n = 1 ; n <= 64 ; ++n) {
        // the even-cycle extension adds W(C_2n) + n r with r = 2n - 1
        CHECK(complete_times_cycle_lower(n) == complete_graph_lower(n) + (n + 1) + n * (2 * n - 1));
    }
}

TEST_CASE("multi-dimensional grids")
{
    CHECK(multi_grid_lower({3, 4}) == 2 * (3 + 4) - 6);
    CHECK(multi_grid_lower({2, 2, 2, 2}) == 2 * 8 - 12);
    CHECK(multi_grid_lower({5, 3, 4}) == 2 * (5 + 4) + 3 - 6 - 1);
    CHECK_THROWS_AS(multi_grid_lower({3}), DomainError);
    CHECK_THROWS_AS(multi_grid_lower({3, 1}), DomainError);
}

TEST_CASE("odd-dimension form matches the sub-product")
{
    for (int a = 2 ; a <= 6 ; ++a)
        for (int b = 2 ; b <= a ; ++b)
            for (int c = 2 ; c <= b ; ++c) {
                auto r = family_values(FamilySpec::grid({a, b, c}));
                CHECK(r.notes.empty());
                CHECK(multi_grid_lower({a, b, c}) == multi_grid_lower({a, b}) + (c - 1));
            }
}

TEST_CASE("catalogue values")
{
    auto q5 = family_values(FamilySpec::hypercube(5));
    CHECK(q5.lower_from(w, "hypercube-least") == 5);
    CHECK(q5.best_upper(w) == 5);
    CHECK(q5.best_lower(W) == 15);
    CHECK(q5.best_upper(W) == 15);

    auto k8 = family_values(FamilySpec::complete(8));
    CHECK(k8.lower_from(W, "complete-graph-widest") == 11);

    auto c48 = family_values(FamilySpec::cylinder(4, 8));
    CHECK(c48.lower_from(W, "cylinder-even-prior") == 14);
    CHECK(c48.lower_from(W, "cylinder-widest") == 14);

    auto k23 = family_values(FamilySpec::complete_bipartite(2, 3));
    CHECK(k23.best_lower(w) == 4);
    CHECK(k23.best_lower(W) == 4);

    CHECK(family_values(FamilySpec::grid({3, 4})).lower_from(W, "grid-widest") == 8);
    CHECK(family_values(FamilySpec::cylinder(2, 5)).best_upper(W) == 7);
    CHECK(family_values(FamilySpec::cylinder(3, 5)).lower_from(w, "odd-cylinder-least") == 6);
    CHECK(family_values(FamilySpec::cylinder(4, 5)).lower_from(w, "odd-cylinder-least") == 4);
    CHECK(family_values(FamilySpec::torus(6, 3)).lower_from(W, "torus-widest") == 10);
    CHECK(family_values(FamilySpec::torus(4, 3)).lower_from(W, "torus-widest") == 9);
    CHECK(family_values(FamilySpec::torus(4, 5)).lower_from(W, "torus-widest") == 11);
    CHECK(family_values(FamilySpec::torus(4, 6)).lower_from(W, "torus-widest") == 13);
    CHECK(family_values(FamilySpec::torus(4, 6)).lower_from(W, "torus-even-prior") == 11);
    CHECK(family_values(FamilySpec::cycle(5)).interval_colorable == false);
    CHECK(family_values(FamilySpec::torus(3, 5)).interval_colorable == false);

    auto k4c4 = family_values(FamilySpec::product(FamilySpec::complete(4), FamilySpec::cycle(4)));
    CHECK(k4c4.lower_from(W, "complete-times-cycle") == 2 * 4 + 8 - 1 - 1 - 1);
    CHECK(k4c4.lower_from(W, "regular-times-even-cycle") == 4 + 3 + 2 * 3);

    auto q3p4 = family_values(FamilySpec::product(FamilySpec::hypercube(3), FamilySpec::path(4)));
    CHECK(q3p4.lower_from(W, "regular-times-path") == 6 + 3 + 3 * 3);
    auto c4q3 = family_values(FamilySpec::product(FamilySpec::cycle(4), FamilySpec::hypercube(3)));
    CHECK(c4q3.lower_from(W, "regular-times-hypercube") == 3 + 3 * (3 + 4 + 1) / 2);
}

TEST_CASE("every catalogue report is consistent")
{
    std::vector<FamilySpec> specs;
    for (int n = 2 ; n <= 12 ; ++n) {
        specs.push_back(FamilySpec::path(n));
        specs.push_back(FamilySpec::complete(n));
        specs.push_back(FamilySpec::grid({n, 3}));
        specs.push_back(FamilySpec::cylinder(n, 5));
        specs.push_back(FamilySpec::cylinder(n, 6));
    }
    for (int n = 3 ; n <= 12 ; ++n) {
        specs.push_back(FamilySpec::cycle(n));
        specs.push_back(FamilySpec::torus(n, 4));
        specs.push_back(FamilySpec::torus(4, n));
    }
    for (int n = 1 ; n <= 8 ; ++n)
        specs.push_back(FamilySpec::hypercube(n));
    for (int r = 1 ; r <= 5 ; ++r)
        for (int s = 1 ; s <= 5 ; ++s)
            specs.push_back(FamilySpec::complete_bipartite(r, s));
    specs.push_back(FamilySpec::grid({2, 3, 4}));
    specs.push_back(FamilySpec::product(FamilySpec::cycle(6), FamilySpec::path(3)));
    for (auto & s : specs) {
        CAPTURE(s.name());
        CHECK(family_values(s).consistent());
    }
}

TEST_CASE("unknown families get only the ceiling")
{
    auto r = family_values(FamilySpec::product(FamilySpec::complete(3), FamilySpec::complete(3)));
    CHECK(r.lower_bounds.empty());
    REQUIRE(r.upper_bounds.size() == 1);
    CHECK(r.upper_bounds[0].source == "diameter-general");
}

TEST_CASE("planar products")
{
    auto grid = planar_product_class(FamilySpec::path(3), FamilySpec::path(5));
    CHECK(grid.kind == PlanarKind::Grid);
    CHECK(grid.w_upper == 6);
    CHECK(grid.interval_colorable);

    auto cyl = planar_product_class(FamilySpec::path(3), FamilySpec::cycle(5));
    CHECK(cyl.kind == PlanarKind::Cylinder);
    CHECK(cyl.w_upper == 6);
    CHECK(planar_product_class(FamilySpec::cycle(5), FamilySpec::path(3)).kind == PlanarKind::Cylinder);

    auto torus = planar_product_class(FamilySpec::cycle(4), FamilySpec::cycle(4));
    CHECK(torus.kind == PlanarKind::NotPlanar);
    CHECK_FALSE(torus.w_upper.has_value());

    CHECK(planar_product_class(FamilySpec::path(2), FamilySpec::cycle(5)).kind == PlanarKind::HypothesisNotMet);
    CHECK(planar_product_class(FamilySpec::complete(4), FamilySpec::path(3)).kind == PlanarKind::NotPlanar);
}
