#pragma once

#include "typmod/cnf.hpp"

#include <memory>
#include <set>
#include <string>

namespace typmod {

/// Propositional formula over a system's variables.
class Formula {
public:
    enum class Op { atom, lnot, land, lor, implies, iff };

    static Formula atom(int var);
    static Formula lnot(Formula f);
    static Formula land(Formula a, Formula b);
    static Formula lor(Formula a, Formula b);
    static Formula implies(Formula a, Formula b);
    static Formula iff(Formula a, Formula b);

    Op op() const { return node_->op; }
    int var() const { return node_->var; }
    const Formula& left() const;
    const Formula& right() const;

    bool eval(const Model& m) const;
    std::set<int> variables() const;
    std::string to_string(const CnfSystem& system) const;

private:
    struct Node {
        Op op;
        int var = 0;
        std::shared_ptr<const Node> a, b;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static bool eval_node(const Node& n, const Model& m);

    std::shared_ptr<const Node> node_;
};

/// Grammar: atoms are variable names or `vK` for index K; operators
/// `! & | -> <->` with that precedence (tightest first), parentheses,
/// `->` right-associative. Position-carrying errors; unknown atoms rejected.
Formula parse_formula(const std::string& text, const CnfSystem& system);

struct FormulaError : std::runtime_error {
    std::size_t position;
    FormulaError(std::size_t pos, const std::string& what)
        : std::runtime_error("position " + std::to_string(pos) + ": " + what), position(pos) {}
};

/// Returns S with F added as CNF clauses. When F mentions at most
/// `direct_expansion_limit` distinct variables the expansion is written
/// directly over F's own variables; otherwise a definitional translation
/// appends auxiliary variables, each functionally determined by the
/// originals, so the model count over the extended variable set equals
/// |MOD(S union {F})| over the original set.
CnfSystem attach_formula(const CnfSystem& system, const Formula& f,
                         int direct_expansion_limit = 12);

/// CNF clauses of F alone (same translation policy as attach_formula);
/// `aux_count` receives the number of auxiliary variables appended after
/// system.var_count().
std::vector<Clause> formula_clauses(const CnfSystem& system, const Formula& f,
                                    int direct_expansion_limit, int& aux_count);

}  // namespace typmod
