#pragma once

#include "typmod/cnf.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace typmod {

/// Structured diagnostic emitted while reading a document.
struct ParseWarning {
    enum class Kind { tautology_dropped, duplicate_literal, duplicate_clause };
    Kind kind;
    int line;
    std::string message;
};

struct ParseResult {
    CnfSystem system;
    std::vector<ParseWarning> warnings;
};

/// Reads standard DIMACS CNF: `p cnf B C` header, clauses as 0-terminated
/// signed integers, `c` comment lines. The extension `c var K NAME` attaches
/// a label to variable K. Tautological clauses are dropped with a warning;
/// duplicate literals within a clause are deduplicated with a warning;
/// duplicate clauses are kept but flagged.
ParseResult parse_dimacs(const std::string& text);

/// Header, one clause per line, `0` terminators; `c var` lines first when
/// any variable is named. parse_dimacs(render_dimacs(S)) is clause-set-equal
/// to S.
std::string render_dimacs(const CnfSystem& system);

/// One `warning: ...` line per record, for the diagnostic stream.
void write_warnings(std::ostream& out, const std::vector<ParseWarning>& warnings);

}  // namespace typmod
