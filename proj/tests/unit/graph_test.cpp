#include <icol/graph.hpp>

#include <doctest.h>

#include <sstream>

using namespace icol;

TEST_CASE("graph canonicalises its edge list")
{
    Graph g(4, {{2, 1}, {0, 3}, {1, 2}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbours(0) == std::vector<Vertex>{1, 3});
    CHECK(g.edge_at(2, 1) == 2);
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
}

TEST_CASE("adjacency is symmetric and matches incidence")
{
    auto g = realize(FamilySpec::torus(3, 4));
    for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
        for (std::size_t i = 0 ; i < g.neighbours(v).size() ; ++i) {
            Vertex u = g.neighbours(v)[i];
            CHECK(g.has_edge(u, v));
            auto e = g.edge(g.incident(v)[i]);
            CHECK(((e.u == u && e.v == v) || (e.u == v && e.v == u)));
        }
}

TEST_CASE("realize small families")
{
    auto p2 = realize(FamilySpec::path(2));
    CHECK(p2.vertex_count() == 2);
    CHECK(p2.edge_count() == 1);

    auto p1 = realize(FamilySpec::path(1));
    CHECK(p1.vertex_count() == 1);
    CHECK(p1.edge_count() == 0);

    auto g22 = realize(FamilySpec::grid({2, 2}));
    CHECK(g22.vertex_count() == 4);
    CHECK(g22.edge_count() == 4);
    CHECK(g22.is_regular());
    CHECK(g22.max_degree() == 2);
    CHECK(g22.is_connected());

    auto q3 = realize(FamilySpec::hypercube(3));
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(q3.is_regular());
    CHECK(q3.max_degree() == 3);
}

TEST_CASE("out-of-range parameters name the parameter")
{
    auto message = [] (const FamilySpec & s) {
        try {
            s.validate();
        }
        catch (const DomainError & e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message(FamilySpec::cycle(2)).find("Cycle: n") != std::string::npos);
    CHECK(message(FamilySpec::torus(4, 2)).find("Torus: n") != std::string::npos);
    CHECK(message(FamilySpec::cylinder(0, 5)).find("Cylinder: m") != std::string::npos);
    CHECK(message(FamilySpec::grid({3, 0})).find("dims[1]") != std::string::npos);
    CHECK(message(FamilySpec::complete_bipartite(1, 0)).find("s must") != std::string::npos);
    CHECK_THROWS_AS(realize(FamilySpec::path(0)), DomainError);
}

TEST_CASE("cartesian product counts and ids")
{
    auto k2 = complete_graph(2);
    auto c4 = cartesian_product(k2, k2);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.is_regular());
    CHECK(c4.is_connected());

    auto p3 = path_graph(3);
    auto g = cartesian_product(p3, p3);
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 12);

    auto q3 = cartesian_product(realize(FamilySpec::hypercube(2)), k2);
    CHECK(q3 == realize(FamilySpec::hypercube(3)));

    // (u,v) -> u * |V(h)| + v
    auto c5 = cycle_graph(5);
    auto cyl = cartesian_product(path_graph(3), c5);
    CHECK(cyl.has_edge(1 * 5 + 4, 1 * 5 + 0));
    CHECK(cyl.has_edge(0 * 5 + 2, 1 * 5 + 2));
    CHECK_FALSE(cyl.has_edge(0 * 5 + 2, 1 * 5 + 3));
}

TEST_CASE("product laws over family pairs")
{
    std::vector<FamilySpec> factors{FamilySpec::path(1), FamilySpec::path(2), FamilySpec::path(4), FamilySpec::cycle(3),
        FamilySpec::cycle(6), FamilySpec::complete(4), FamilySpec::complete_bipartite(2, 3), FamilySpec::hypercube(2),
        FamilySpec::grid({2, 3}), FamilySpec::cylinder(2, 3)};
    for (auto & a : factors)
        for (auto & b : factors) {
            if (a.vertex_count() * b.vertex_count() > 200)
                continue;
            CAPTURE(a.name());
            CAPTURE(b.name());
            auto ga = realize(a), gb = realize(b);
            auto p = realize(FamilySpec::product(a, b));
            CHECK(p == cartesian_product(ga, gb));
            CHECK(p.vertex_count() == ga.vertex_count() * gb.vertex_count());
            CHECK(p.edge_count() == ga.vertex_count() * gb.edge_count() + gb.vertex_count() * ga.edge_count());
            for (Vertex u = 0 ; u < ga.vertex_count() ; ++u)
                for (Vertex v = 0 ; v < gb.vertex_count() ; ++v)
                    CHECK(p.degree(u * gb.vertex_count() + v) == ga.degree(u) + gb.degree(v));
            if (p.vertex_count() <= 100)
                CHECK(diameter(p) == diameter(ga) + diameter(gb));
        }
}

TEST_CASE("cylinder and torus realize the documented products")
{
    CHECK(realize(FamilySpec::cylinder(3, 5)) == cartesian_product(path_graph(3), cycle_graph(5)));
    CHECK(realize(FamilySpec::torus(4, 3)) == cartesian_product(cycle_graph(4), cycle_graph(3)));
    CHECK(realize(FamilySpec::grid({2, 3, 2})) == cartesian_product(cartesian_product(path_graph(2), path_graph(3)), path_graph(2)));
}

TEST_CASE("names")
{
    CHECK(FamilySpec::cylinder(3, 5).name() == "C(3,5)");
    CHECK(FamilySpec::hypercube(3).name() == "Q_3");
    CHECK(FamilySpec::grid({3, 4}).name() == "G(3,4)");
    CHECK(FamilySpec::complete_bipartite(2, 3).name() == "K_{2,3}");
    CHECK(FamilySpec::product(FamilySpec::cycle(4), FamilySpec::path(3)).name() == "C_4 x P_3");
}

TEST_CASE("distances")
{
    CHECK(diameter(cycle_graph(4)) == 2);
    CHECK(diameter(realize(FamilySpec::grid({3, 4}))) == 5);
    CHECK(diameter(realize(FamilySpec::torus(4, 4))) == 4);
    CHECK(distance(path_graph(5), 0, 4) == 4);

    Graph two_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(diameter(two_edges), InfiniteDistance);
    CHECK_THROWS_AS(distance(two_edges, 0, 3), InfiniteDistance);
    CHECK(distances_from(two_edges, 0)[3] == -1);
}

TEST_CASE("edge distance")
{
    auto c4 = cycle_graph(4);
    auto e = c4.edge_at(0, 1), f = c4.edge_at(2, 3);
    CHECK(edge_distance(c4, e, e) == 0);
    CHECK(edge_distance(c4, e, f) == 1);
    CHECK(edge_distance(c4, e, c4.edge_at(1, 2)) == 0);

    auto q3 = realize(FamilySpec::hypercube(3));
    CHECK(edge_distance(q3, q3.edge_at(0b000, 0b001), q3.edge_at(0b110, 0b111)) == 2);
}

TEST_CASE("bipartiteness")
{
    CHECK(is_bipartite(cycle_graph(4)).bipartite);
    CHECK_FALSE(is_bipartite(cycle_graph(3)).bipartite);
    for (int n = 1 ; n <= 4 ; ++n) {
        auto q = realize(FamilySpec::hypercube(n));
        auto b = is_bipartite(q);
        REQUIRE(b.bipartite);
        for (auto & [u, v] : q.edges())
            CHECK(b.side[u] != b.side[v]);
    }
}

TEST_CASE("edge list round trip")
{
    auto g = realize(FamilySpec::cylinder(3, 4));
    auto text = to_edge_list(g);
    CHECK(text.substr(0, text.find('\n')) == "12 20");
    std::istringstream in(text);
    CHECK(read_edge_list(in) == g);
    CHECK(to_edge_list(read_edge_list(*std::make_unique<std::istringstream>(text))) == text);
}

TEST_CASE("edge list errors name the line")
{
    auto error = [] (const std::string & text) {
        std::istringstream in(text);
        try {
            read_edge_list(in);
        }
        catch (const ParseError & e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(error("3 2\n0 1\n2 1\n").find("line 3") != std::string::npos);
    CHECK(error("3 2\n0 1\n0 1\n").find("line 3") != std::string::npos);
    CHECK(error("3 2\n0 1\n").find("no error") == std::string::npos);
    CHECK(error("3 1\n0 5\n").find("line 2") != std::string::npos);
    CHECK(error("x\n").find("line 1") != std::string::npos);
    CHECK(error("3 1\n0 1\n1 2\n").find("no error") == std::string::npos);
}
