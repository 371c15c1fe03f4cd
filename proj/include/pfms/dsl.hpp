#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfms/model.hpp"

// Text format for problem-frames models (`.pfm`).
//
// Line-oriented, block-structured, `#` comments, UTF-8, LF or CRLF:
//
//   pfm-version 1
//   model <string>
//   facility <id> [<string>]
//   diagram <id> <string> {
//     machine <id> [facilities [<id>, ...]]
//     domain <id> [<string>] kind <B|C|X> [facilities [<id>, ...]]
//     requirement <id> <string> constrains [<id>, ...] refers [<id>, ...]
//     interface <id> -- <id> phenomena [<string>, ...]
//   }
//   correlation <id> <id> <high|low>        # absent pairs read as none
//   hint merge <id> <id> <accepted|rejected> [<string>]
//   similarity <id> <id> <int>              # declared counts; all pairs
//   similarity-all <int>                    # required with any similarity line
//
// Identifiers match [A-Za-z][A-Za-z0-9_]*; strings are double-quoted with
// \" and \\ escapes. Kind letters map B -> biddable, C -> causal,
// X -> lexical; the machine is its own keyword.

namespace pfms {

struct SourceSpan {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    int length = 0;

    bool operator==(const SourceSpan&) const = default;
};

struct ParseDiagnostic {
    SourceSpan span;
    Severity severity = Severity::error;
    std::string message;
    std::string expected;  // token description for syntax errors, else empty

    bool operator==(const ParseDiagnostic&) const = default;
};

// Outcome of parse(): `model` is present iff no error-severity diagnostic
// was produced. Parsing is total; malformed input yields diagnostics,
// never an exception.
struct ParseResult {
    std::optional<Model> model;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return model.has_value(); }
    bool has_errors() const;
};

ParseResult parse(std::string_view source);

// Canonical text for a valid model: sorted facility section, diagrams and
// their contents in model order, correlation/similarity pairs ordered by
// diagram position, LF line endings. parse(serialize(m)) is structurally
// equal to m, and serialize is byte-stable under that round trip.
std::string serialize(const Model& model);

}  // namespace pfms
