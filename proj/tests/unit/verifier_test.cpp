#include <icol/constructors.hpp>
#include <icol/search.hpp>
#include <icol/verifier.hpp>

#include <doctest.h>

#include <random>

using namespace icol;

namespace
{
    auto star3() -> Graph
    {
        return Graph(4, {{0, 1}, {0, 2}, {0, 3}});
    }

    auto c4_alternating() -> EdgeColoring
    {
        auto g = cycle_graph(4);
        std::vector<Color> colors(4);
        colors[g.edge_at(0, 1)] = 1;
        colors[g.edge_at(1, 2)] = 2;
        colors[g.edge_at(2, 3)] = 1;
        colors[g.edge_at(0, 3)] = 2;
        return EdgeColoring(g, colors);
    }
}

TEST_CASE("spectrum")
{
    EdgeColoring c(star3(), {1, 2, 3});
    CHECK(spectrum(c, 0).colors == std::vector<Color>{1, 2, 3});
    CHECK(spectrum(c, 2).colors == std::vector<Color>{2});
    auto alt = c4_alternating();
    for (Vertex v = 0 ; v < 4 ; ++v)
        CHECK(spectrum(alt, v).colors == std::vector<Color>{1, 2});

    EdgeColoring clash(star3(), {1, 1, 2});
    CHECK_FALSE(spectrum(clash, 0).proper());
}

TEST_CASE("colourings reject nonpositive colours and size mismatches")
{
    CHECK_THROWS(EdgeColoring(star3(), {1, 0, 2}));
    CHECK_THROWS(EdgeColoring(star3(), {1, 2}));
}

TEST_CASE("verify_interval examples")
{
    auto alt = c4_alternating();
    CHECK(verify_interval(alt, 2).valid());

    auto c3 = cycle_graph(3);
    auto r = verify_interval(EdgeColoring(c3, {1, 2, 3}), 3);
    CHECK(r.failure == Failure::NotInterval);
    CHECK(r.witness_vertex.has_value());

    auto p2 = EdgeColoring(path_graph(2), {2});
    auto u = verify_interval(p2, 2);
    CHECK(u.failure == Failure::ColorUnused);
    CHECK(u.witness_color == 1);

    auto clash = verify_interval(EdgeColoring(star3(), {1, 1, 2}), 2);
    CHECK(clash.failure == Failure::NotProper);
    CHECK(clash.witness_vertex == 0);
    CHECK_FALSE(clash.proper);

    auto range = verify_interval(EdgeColoring(star3(), {2, 3, 4}), 3);
    CHECK(range.failure == Failure::ColorOutOfRange);

    CHECK_FALSE(verify_interval(alt, 3).valid());
}

TEST_CASE("valid reports have min colour 1 and max colour t")
{
    auto g = realize(FamilySpec::cylinder(2, 4));
    for (int t = 2 ; t <= 7 ; ++t)
        enumerate_interval_t(g, t, [&] (const EdgeColoring & c) {
            auto r = verify_interval(c, t);
            CHECK(r.valid());
            CHECK(c.min_color() == 1);
            CHECK(c.max_color() == t);
            CHECK(r.colors_used.size() == std::size_t(t));
            return true;
        });
}

TEST_CASE("consecutive-spectra shortcut examples")
{
    auto p4 = EdgeColoring(path_graph(4), {1, 2, 3});
    CHECK(verify_lemma1(p4).t == 3);
    CHECK(verify_lemma1(c4_alternating()).t == 2);

    Graph two(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(verify_lemma1(EdgeColoring(two, {1, 3})), PreconditionError);

    auto shifted = EdgeColoring(path_graph(4), {2, 3, 4});
    CHECK_FALSE(verify_lemma1(shifted).t.has_value());
    CHECK_FALSE(verify_lemma1(shifted).failure.empty());
}

TEST_CASE("consecutive-spectra shortcut agrees with the full check on connected graphs")
{
    std::mt19937 rng(11);
    std::vector<Graph> graphs{cycle_graph(4), cycle_graph(6), path_graph(5), complete_bipartite_graph(2, 3),
        realize(FamilySpec::grid({2, 3})), realize(FamilySpec::cylinder(2, 3)), complete_graph(4),
        realize(FamilySpec::hypercube(3))};
    for (auto & g : graphs) {
        // random colourings, mostly invalid
        std::vector<EdgeColoring> candidates;
        for (int trial = 0 ; trial < 3000 ; ++trial) {
            std::vector<Color> colors(g.edge_count());
            int top = std::uniform_int_distribution<int>(g.max_degree(), g.edge_count())(rng);
            for (auto & c : colors)
                c = std::uniform_int_distribution<int>(1, top)(rng);
            candidates.emplace_back(g, colors);
        }
        // every valid colouring at a handful of t, plus shifted copies
        for (int t = g.max_degree() ; t <= std::min(g.edge_count(), g.max_degree() + 4) ; ++t) {
            SearchConfig cfg;
            cfg.node_budget = 200000;
            int seen = 0;
            enumerate_interval_t(g, t, [&] (const EdgeColoring & c) {
                candidates.push_back(c);
                auto shifted = c.colors;
                for (auto & x : shifted)
                    ++x;
                candidates.emplace_back(g, shifted);
                return ++seen < 50;
            }, cfg);
        }
        for (auto & c : candidates) {
            auto l = verify_lemma1(c);
            bool full = verify_interval(c, c.max_color()).valid() && c.min_color() == 1;
            CHECK(l.t.has_value() == full);
            if (l.t)
                CHECK(*l.t == c.max_color());
        }
    }
}

TEST_CASE("hypercube recognition")
{
    for (int n = 1 ; n <= 5 ; ++n)
        CHECK(hypercube_dimension(realize(FamilySpec::hypercube(n))) == n);
    CHECK_FALSE(hypercube_dimension(cycle_graph(6)).has_value());
    CHECK_FALSE(hypercube_dimension(cycle_graph(4)).has_value());
    CHECK(hypercube_dimension(realize(FamilySpec::grid({2, 2}))) == 2);
    CHECK_FALSE(hypercube_dimension(realize(FamilySpec::grid({2, 4}))).has_value());
}

TEST_CASE("span table")
{
    auto q1 = EdgeColoring(realize(FamilySpec::hypercube(1)), {1});
    CHECK(span_table(q1).sp == std::vector<int>{0});

    CHECK_THROWS_AS(span_table(EdgeColoring(cycle_graph(6), {1, 2, 3, 4, 3, 2})), DomainError);
    auto q2 = realize(FamilySpec::hypercube(2));
    CHECK_THROWS_AS(span_table(EdgeColoring(q2, {1, 1, 1, 1})), PreconditionError);

    for (int n = 1 ; n <= 4 ; ++n) {
        auto c = hypercube_widest(n);
        auto table = span_table(c.coloring);
        CHECK(table.n == n);
        CHECK(table.sp[0] == n - 1);
        CHECK(check_span_recurrence(table));
        for (int s : table.sp)
            CHECK(s <= c.claimed_t - 1);
    }
}

TEST_CASE("span recurrence arithmetic")
{
    CHECK(check_span_recurrence({3, {2, 4, 5}}));
    CHECK_FALSE(check_span_recurrence({3, {2, 5, 5}}));
    CHECK_FALSE(check_span_recurrence({3, {2, 4, 6}}));
}

TEST_CASE("every interval colouring of Q_3 satisfies the span recurrence")
{
    auto q3 = realize(FamilySpec::hypercube(3));
    for (int t = 3 ; t <= 6 ; ++t) {
        int count = 0;
        enumerate_interval_t(q3, t, [&] (const EdgeColoring & c) {
            auto table = span_table(c);
            CHECK(table.sp[0] == 2);
            CHECK(check_span_recurrence(table));
            ++count;
            return count < 2000;
        });
        CHECK(count > 0);
    }
}

TEST_CASE("neighbour witnesses")
{
    CHECK(hypercube_neighbor_witnesses(3, 0b000, 0b011) == std::vector<Vertex>{0b001, 0b010});
    auto w = hypercube_neighbor_witnesses(3, 0b000, 0b111);
    CHECK(w.size() == 3);
    auto q3 = realize(FamilySpec::hypercube(3));
    for (auto x : w) {
        CHECK(q3.has_edge(x, 0b111));
        CHECK(distance(q3, 0, x) == 2);
    }
    CHECK(hypercube_neighbor_witnesses(3, 5, 5).empty());
}
