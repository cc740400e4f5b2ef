#pragma once

#include <icol/constructors.hpp>

#include <optional>
#include <string>
#include <vector>

namespace icol
{
    enum class Mode
    {
        Minimal,
        Widest
    };

    auto to_string(Mode m) -> std::string;
    auto parse_mode(const std::string & s) -> std::optional<Mode>;

    /// Builds a FamilySpec from a family name and comma-separated integers,
    /// e.g. ("cylinder", "3,5"). A product is written as factors joined by
    /// '*', each factor as name:params, e.g. "cycle:4*path:3", with
    /// family "product" or an empty family. Throws ParseError on malformed
    /// text and DomainError on out-of-range parameters.
    auto parse_family(const std::string & family, const std::string & params) -> FamilySpec;

    /// Accepted family names, in help order.
    auto family_names() -> std::vector<std::string>;

    /// Human-readable list of which (family, mode) pairs construct() supports.
    auto supported_modes() -> std::string;

    /// Formula construction for the family in the given mode, on exactly
    /// realize(spec). Returns nullopt when no construction covers the
    /// instance.
    auto construct(const FamilySpec & spec, Mode mode) -> std::optional<Construction>;
}
