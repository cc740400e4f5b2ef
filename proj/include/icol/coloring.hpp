#pragma once

#include <icol/graph.hpp>

#include <vector>

namespace icol
{
    using Color = int;

    /// Total map edge id -> positive colour, carried together with its graph.
    struct EdgeColoring
    {
        Graph graph;
        std::vector<Color> colors;

        EdgeColoring() = default;

        /// Throws DomainError unless colors has one entry >= 1 per edge.
        EdgeColoring(Graph g, std::vector<Color> c);

        auto color(EdgeId e) const -> Color { return colors[e]; }
        auto color(Vertex a, Vertex b) const -> Color { return colors[graph.edge_at(a, b)]; }

        auto min_color() const -> Color;
        auto max_color() const -> Color;

        auto operator==(const EdgeColoring &) const -> bool = default;
    };

    /// Thrown when an operation's documented precondition does not hold.
    class PreconditionError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };
}
