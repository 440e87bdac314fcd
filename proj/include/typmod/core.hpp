#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace typmod {

// Exact counts can reach 2^B; never rounded.
using BigCount = boost::multiprecision::cpp_int;
// Evidence values are exact rationals, kept in lowest terms by cpp_rational.
using Rat = boost::multiprecision::cpp_rational;

/// A literal in DIMACS convention: +v or -v over 1-based variable indices.
struct Lit {
    int code = 0;

    Lit() = default;
    explicit Lit(int c) : code(c) {}
    static Lit pos(int var) { return Lit(var); }
    static Lit neg(int var) { return Lit(-var); }

    int var() const { return code < 0 ? -code : code; }
    bool positive() const { return code > 0; }
    Lit operator~() const { return Lit(-code); }

    friend bool operator==(Lit a, Lit b) { return a.code == b.code; }
    friend bool operator!=(Lit a, Lit b) { return a.code != b.code; }
    friend bool operator<(Lit a, Lit b) {
        if (a.var() != b.var()) return a.var() < b.var();
        return a.code > b.code;  // positive before negative
    }
};

/// A clause is a set of literals: sorted by variable, no duplicates,
/// never both polarities of one variable.
using Clause = std::vector<Lit>;

/// Total assignment over a system's variables (index 0 holds variable 1).
struct Model {
    std::vector<std::uint8_t> value;

    bool truth(int var) const { return value[static_cast<std::size_t>(var) - 1] != 0; }
    bool satisfies(Lit l) const { return truth(l.var()) == l.positive(); }
    bool satisfies(const Clause& c) const {
        for (Lit l : c)
            if (satisfies(l)) return true;
        return false;
    }
    std::vector<Lit> literals() const {
        std::vector<Lit> out;
        out.reserve(value.size());
        for (std::size_t i = 0; i < value.size(); ++i)
            out.push_back(value[i] ? Lit::pos(static_cast<int>(i) + 1)
                                   : Lit::neg(static_cast<int>(i) + 1));
        return out;
    }

    friend bool operator==(const Model& a, const Model& b) { return a.value == b.value; }
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Raised by operations whose result is undefined on unsatisfiable systems
/// (evidence is a ratio with |MOD(S)| in the denominator).
struct InconsistentSystemError : std::runtime_error {
    InconsistentSystemError() : std::runtime_error("system is unsatisfiable; evidence undefined") {}
    explicit InconsistentSystemError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Refusal of an enumeration-based operation beyond its configured cap.
struct ResourceGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace typmod
