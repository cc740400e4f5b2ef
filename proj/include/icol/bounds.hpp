#pragma once

#include <icol/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace icol
{
    /// Which extremal colour count a bound talks about.
    enum class Quantity
    {
        LeastT,    // w(G)
        GreatestT  // W(G)
    };

    auto to_string(Quantity q) -> std::string;

    struct BoundEntry
    {
        Quantity quantity;
        long long value;
        /// Short id of the result the value comes from, e.g. "grid-widest".
        std::string source;

        auto operator==(const BoundEntry &) const -> bool = default;
    };

    struct BoundReport
    {
        FamilySpec family;
        /// quantity >= value
        std::vector<BoundEntry> lower_bounds;
        /// quantity <= value
        std::vector<BoundEntry> upper_bounds;
        /// Known membership in the interval-colourable class, when decided.
        std::optional<bool> interval_colorable;
        std::optional<int> constructed_t;
        std::optional<int> oracle_w;
        std::optional<int> oracle_W;
        std::vector<std::string> notes;

        auto best_lower(Quantity q) const -> std::optional<long long>;
        auto best_upper(Quantity q) const -> std::optional<long long>;
        auto lower_from(Quantity q, const std::string & source) const -> std::optional<long long>;

        /// Every lower <= every upper for each quantity, and w-lower <= W-upper.
        auto consistent() const -> bool;
    };

    struct UpperBound
    {
        long long value;
        std::string source;
    };

    /// Diameter ceiling on W: diam * (Delta - 1) + 1 for bipartite g,
    /// (diam + 1) * (Delta - 1) + 1 otherwise. Throws InfiniteDistance if g is
    /// disconnected.
    auto upper_bound(const Graph & g) -> UpperBound;

    /// n = p * 2^q with p odd.
    struct OddPart
    {
        long long p;
        int q;
    };

    auto odd_part(long long n) -> OddPart;

    /// Lower bound on W(K_{2n}): 4n - 2 - p - q.
    auto complete_graph_lower(long long n) -> long long;

    /// Lower bound on W(K_{2n} x C_{2n}): 2n^2 + 4n - 1 - p - q.
    auto complete_times_cycle_lower(long long n) -> long long;

    /// Lower bound on W for a grid with every dimension >= 2 and at least
    /// two dimensions, by pairing the largest dimensions.
    auto multi_grid_lower(std::vector<int> dims) -> long long;

    /// Every closed-form value that applies to the family, with attribution.
    /// Families outside the catalogue get only the diameter ceiling.
    auto family_values(const FamilySpec & spec) -> BoundReport;

    enum class PlanarKind
    {
        Grid,
        Cylinder,
        NotPlanar,
        HypothesisNotMet
    };

    auto to_string(PlanarKind k) -> std::string;

    struct PlanarClass
    {
        PlanarKind kind;
        /// Set for planar products: w <= 6, and the product is interval colourable.
        std::optional<int> w_upper;
        bool interval_colorable = false;
    };

    /// Family-level planarity of a x b for factors with at least three
    /// vertices: planar exactly when it is a grid of two paths or a cylinder.
    auto planar_product_class(const FamilySpec & a, const FamilySpec & b) -> PlanarClass;
}
