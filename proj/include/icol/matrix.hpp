#pragma once

#include <icol/bounds.hpp>
#include <icol/constructors.hpp>

#include <optional>
#include <string>
#include <vector>

namespace icol
{
    enum class Suite
    {
        Grid,               // G(m,n)
        CylinderWidestEven, // C(2m,2n)
        CylinderWidestOdd,  // C(2m,2n+1)
        CylinderMinimal,    // C(m,2n+1), m >= 3
        TorusOdd,           // T(2m,2n+1)
        TorusEven,          // T(2m,2n)
        Product             // {K_2, C_4, C_6, K_4} x P_m and x C_2n
    };

    auto suite_name(Suite s) -> std::string;
    auto parse_suite(const std::string & name) -> std::optional<Suite>;
    auto all_suites() -> std::vector<Suite>;

    /// Inclusive ranges for the suite's two parameters, named as in the enum comments.
    struct MatrixRange
    {
        int first_lo, first_hi;
        int second_lo, second_hi;
    };

    auto default_range(Suite s) -> MatrixRange;

    struct MatrixRow
    {
        std::string instance;
        FamilySpec family;
        int claimed_t = 0;
        bool verified = false;
        std::string reason;
        long long upper = 0;
        /// Value the construction is meant to attain, and its source id.
        std::optional<long long> target;
        std::string target_source;
        bool ok = false;
        std::string failure;
    };

    /// Restricting a layered product colouring to layer i and removing the
    /// layer's shift must give back alpha. `layers` is the second factor's order.
    auto layers_reproduce(const EdgeColoring & product, const EdgeColoring & alpha, int layers,
            const std::vector<int> & shifts) -> bool;

    /// Construct, verify and compare against the closed-form bounds, one row per instance.
    auto run_suite(Suite s, const MatrixRange & range) -> std::vector<MatrixRow>;

    /// Aligned text table with a trailing summary line.
    auto format_table(const std::vector<MatrixRow> & rows) -> std::string;

    /// One JSON object per line.
    auto format_records(const std::vector<MatrixRow> & rows) -> std::string;
}
