#pragma once

#include <icol/coloring.hpp>
#include <icol/search.hpp>
#include <icol/verifier.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace icol
{
    /// Serialised (graph, t, colouring) triple with its verdict.
    ///
    /// On disk: {"n": int, "edges": [[u,v],...], "t": int, "colors": [...],
    /// "verdict": "valid"|"invalid", "reason": string|null}, keys in that
    /// order, edges in canonical order, colours aligned with edges.
    struct Certificate
    {
        EdgeColoring coloring;
        int t = 0;
        bool valid = false;
        std::optional<std::string> reason;

        auto operator==(const Certificate &) const -> bool = default;
    };

    /// Runs verify_interval and records the verdict.
    auto make_certificate(EdgeColoring coloring, int t) -> Certificate;

    /// Compact single-line JSON followed by a newline; byte-stable.
    auto write_certificate(std::ostream & out, const Certificate & cert) -> void;
    auto to_json_text(const Certificate & cert) -> std::string;

    /// Throws ParseError naming the offending field or JSON position. The
    /// stored verdict is read as-is; re-verify to trust it.
    auto read_certificate(std::istream & in) -> Certificate;
    auto parse_certificate(const std::string & text) -> Certificate;

    /// Undirected DOT graph, one edge statement per edge labelled with its colour.
    auto write_dot(std::ostream & out, const EdgeColoring & c, const std::string & name = "G") -> void;

    /// {"status": ..., "t": ..., "nodes": ..., "seconds": ...}
    auto outcome_record(const SearchOutcome & out) -> std::string;

    /// Writes to a sibling temporary file, then renames over path.
    auto write_file_atomically(const std::string & path, const std::string & contents) -> void;
}
