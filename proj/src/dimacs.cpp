#include "typmod/dimacs.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace typmod {

namespace {

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') ++line;
        ++pos;
    }
    void skip_space_in_line() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    }
    void skip_to_eol() {
        while (!eof() && peek() != '\n') advance();
        if (!eof()) advance();
    }
};

bool read_int(Scanner& s, long& out) {
    s.skip_space_in_line();
    std::size_t start = s.pos;
    if (!s.eof() && (s.peek() == '-' || s.peek() == '+')) s.advance();
    while (!s.eof() && std::isdigit(static_cast<unsigned char>(s.peek()))) s.advance();
    if (s.pos == start || (s.pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s.text[start]))))
        return false;
    out = std::stol(s.text.substr(start, s.pos - start));
    return true;
}

}  // namespace

ParseResult parse_dimacs(const std::string& text) {
    Scanner s{text};
    int num_vars = -1;
    long num_clauses_declared = -1;
    std::vector<Clause> clauses;
    std::vector<std::string> names;
    bool any_name = false;
    std::vector<ParseWarning> warnings;
    std::set<Clause> seen;

    auto parse_name_comment = [&](const std::string& body, int line) {
        // body is the comment text after "c"
        std::istringstream in(body);
        std::string tag;
        long idx;
        std::string nm;
        if (!(in >> tag) || tag != "var") return;
        if (!(in >> idx >> nm)) throw ParseError(line, "malformed `c var` comment");
        if (idx < 1) throw ParseError(line, "variable index in `c var` must be positive");
        if (names.size() < static_cast<std::size_t>(idx)) names.resize(static_cast<std::size_t>(idx));
        names[static_cast<std::size_t>(idx) - 1] = nm;
        any_name = true;
    };

    while (!s.eof()) {
        s.skip_space_in_line();
        if (s.eof()) break;
        char c = s.peek();
        if (c == '\n') {
            s.advance();
            continue;
        }
        if (c == 'c') {
            int line = s.line;
            std::size_t start = s.pos + 1;
            s.skip_to_eol();
            std::size_t end = s.pos;
            parse_name_comment(text.substr(start, end - start), line);
            continue;
        }
        if (c == 'p') {
            if (num_vars >= 0) throw ParseError(s.line, "duplicate header");
            int line = s.line;
            std::size_t start = s.pos;
            s.skip_to_eol();
            std::istringstream in(text.substr(start, s.pos - start));
            std::string p, cnf;
            long b = 0, cc = 0;
            if (!(in >> p >> cnf >> b >> cc) || p != "p" || cnf != "cnf" || b < 1 || cc < 0)
                throw ParseError(line, "malformed header (expected `p cnf B C` with B >= 1)");
            num_vars = static_cast<int>(b);
            num_clauses_declared = cc;
            continue;
        }
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            if (num_vars < 0) throw ParseError(s.line, "clause before header");
            int line = s.line;
            Clause raw;
            bool terminated = false;
            while (true) {
                long v;
                if (!read_int(s, v)) {
                    // allow newlines inside a clause, like most tools do
                    s.skip_space_in_line();
                    if (!s.eof() && s.peek() == '\n') {
                        s.advance();
                        if (!s.eof() && (s.peek() == 'c' || s.peek() == 'p'))
                            throw ParseError(s.line, "clause missing `0` terminator");
                        if (s.eof()) throw ParseError(line, "clause missing `0` terminator");
                        continue;
                    }
                    throw ParseError(s.line, s.eof() ? "clause missing `0` terminator"
                                                     : "unexpected character in clause");
                }
                if (v == 0) {
                    terminated = true;
                    break;
                }
                long var = v < 0 ? -v : v;
                if (var > num_vars)
                    throw ParseError(line, "variable index " + std::to_string(var) +
                                               " out of range (header declares " +
                                               std::to_string(num_vars) + ")");
                raw.push_back(Lit(static_cast<int>(v)));
            }
            if (!terminated) throw ParseError(line, "clause missing `0` terminator");

            if (is_tautology(raw)) {
                warnings.push_back({ParseWarning::Kind::tautology_dropped, line,
                                    "tautological clause dropped"});
                continue;
            }
            Clause norm = raw;
            std::sort(norm.begin(), norm.end());
            norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
            if (norm.size() != raw.size())
                warnings.push_back({ParseWarning::Kind::duplicate_literal, line,
                                    "duplicate literal removed within clause"});
            if (!seen.insert(norm).second)
                warnings.push_back({ParseWarning::Kind::duplicate_clause, line,
                                    "duplicate clause"});
            clauses.push_back(std::move(norm));
            continue;
        }
        throw ParseError(s.line, std::string("unexpected character `") + c + "`");
    }

    if (num_vars < 0) throw ParseError(s.line, "missing header");
    if (any_name) {
        if (names.size() > static_cast<std::size_t>(num_vars))
            throw ParseError(1, "`c var` index exceeds declared variable count");
        names.resize(static_cast<std::size_t>(num_vars));
    } else {
        names.clear();
    }
    (void)num_clauses_declared;  // informative only; actual count wins

    return ParseResult{CnfSystem(num_vars, std::move(clauses), std::move(names)), std::move(warnings)};
}

std::string render_dimacs(const CnfSystem& system) {
    std::ostringstream out;
    for (int v = 1; v <= system.var_count(); ++v)
        if (!system.name(v).empty()) out << "c var " << v << " " << system.name(v) << "\n";
    out << "p cnf " << system.var_count() << " " << system.clause_count() << "\n";
    for (const Clause& c : system.clauses()) {
        for (Lit l : c) out << l.code << " ";
        out << "0\n";
    }
    return out.str();
}

void write_warnings(std::ostream& out, const std::vector<ParseWarning>& warnings) {
    for (const auto& w : warnings)
        out << "warning: line " << w.line << ": " << w.message << "\n";
}

}  // namespace typmod
