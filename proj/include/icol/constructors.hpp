#pragma once

#include <icol/coloring.hpp>

#include <string>

namespace icol
{
    /// A formula-built colouring together with the number of colours the
    /// construction promises. The claim is not checked here; run the verifier.
    struct Construction
    {
        EdgeColoring coloring;
        int claimed_t = 0;
        std::string name;
    };

    /// P_m, edge i along the path gets colour i. t = m - 1. Needs m >= 2.
    auto widest_path_coloring(int m) -> Construction;

    /// C_{2n} coloured 1, 2, ..., n+1, n, ..., 2 around the cycle. t = n + 1. Needs n >= 2.
    auto widest_even_cycle_coloring(int n) -> Construction;

    /// K_{r,s}, edge x_i y_j gets i + j - 1. t = r + s - 1.
    auto complete_bipartite_coloring(int r, int s) -> Construction;

    /// Layered colouring of g x P_m from an interval colouring alpha of an
    /// r-regular connected g. Layer i is alpha shifted by (i-1)(r+1); the rung
    /// leaving layer i at v gets one more than the largest colour at v in
    /// layer i. t = t_alpha + (m-1)(r+1). The result lives on
    /// cartesian_product(g, path_graph(m)).
    auto product_with_path(const Graph & g, const EdgeColoring & alpha, int r, int m) -> Construction;

    /// Colouring of g x C_{2n} (n >= 2) from an interval colouring alpha of an
    /// r-regular connected g. Layers 2..n+1 climb by (r+1) with an extra +1
    /// offset, layers n+2..2n descend back, and the ring edges close the gap.
    /// t = t_alpha + n(r+1) + 1. The result lives on cartesian_product(g, cycle_graph(2n)).
    auto product_with_even_cycle(const Graph & g, const EdgeColoring & alpha, int r, int n) -> Construction;

    /// G(m,n), m, n >= 2. t = 2(m+n-3).
    auto grid_widest(int m, int n) -> Construction;

    /// Interval 3-colouring of the prism C(2, 2n+1), n >= 1.
    auto prism_three_coloring(int n) -> Construction;

    /// Interval 6-colouring of C(3, 2n+1), n >= 1, in which every vertex of
    /// the third ring sees exactly [1,3].
    auto odd_cylinder_base(int n) -> Construction;

    /// C(rows, circumference) with odd circumference and rows >= 3.
    /// t = 4 for even rows, 6 for odd rows.
    auto cylinder_minimal(int rows, int circumference) -> Construction;

    /// C(2m, 2n) with t = 4m + 2n - 2 (m >= 1, n >= 2), or
    /// C(2m, 2n+1) with t = 4m + 2n - 1 (m, n >= 1).
    auto cylinder_widest(int rows, int circumference) -> Construction;

    /// T(2m, 2n+1), m >= 2: t = 2m+2n+2 for odd m, 2m+2n+3 for even m.
    /// T(2m, 2n), m, n >= 2: built as C_{2a} x C_{2b} through
    /// product_with_even_cycle in the orientation maximising t, giving
    /// max(3m+n+2, 3n+m+2). Arguments may be given in either order.
    auto torus_widest(int a, int b) -> Construction;

    /// Q_n by repeated product_with_path from K_2. t = n(n+1)/2.
    auto hypercube_widest(int n) -> Construction;

    /// Moves a colouring of cartesian_product(A, B) onto cartesian_product(B, A).
    auto transpose_product(const EdgeColoring & c, int a_vertices, int b_vertices) -> EdgeColoring;
}
