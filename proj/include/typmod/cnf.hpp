#pragma once

#include "typmod/core.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace typmod {

/// A CNF system: an ordered set of variables (some possibly auxiliary,
/// appended by definitional clause transformations) and a list of clauses.
/// Immutable after construction; safe to share across threads.
class CnfSystem {
public:
    /// `num_vars` declared variables, all of them base (user) variables.
    explicit CnfSystem(int num_vars, std::vector<Clause> clauses = {},
                       std::vector<std::string> names = {});

    /// Full constructor; auxiliary variables occupy indices
    /// (num_base_vars, num_vars].
    CnfSystem(int num_vars, int num_base_vars, std::vector<Clause> clauses,
              std::vector<std::string> names);

    int var_count() const { return num_vars_; }
    int base_var_count() const { return num_base_vars_; }
    bool has_aux_vars() const { return num_base_vars_ < num_vars_; }
    std::size_t clause_count() const { return clauses_.size(); }
    const std::vector<Clause>& clauses() const { return clauses_; }

    /// Empty string when the variable is unnamed.
    const std::string& name(int var) const;
    /// Name if present, otherwise "vK".
    std::string display_name(int var) const;
    std::string display(Lit l) const;
    std::optional<int> var_by_name(const std::string& name) const;

    /// New system with `extra` clauses appended (variables unchanged).
    CnfSystem with_clauses(const std::vector<Clause>& extra) const;
    /// New system whose base variables are unchanged but with `count`
    /// auxiliary variables and their defining clauses appended.
    CnfSystem with_aux(int count, const std::vector<Clause>& extra) const;

    friend bool operator==(const CnfSystem& a, const CnfSystem& b);

private:
    void check_clause(const Clause& c) const;

    int num_vars_;
    int num_base_vars_;
    std::vector<Clause> clauses_;
    std::vector<std::string> names_;  // empty or size num_vars_
    std::unordered_map<std::string, int> by_name_;
};

/// Sorts by variable, removes duplicate literals. Throws DomainError if the
/// clause is tautological (both polarities of a variable).
Clause normalize_clause(Clause c);

/// True when the clause contains both polarities of some variable.
bool is_tautology(const Clause& c);

}  // namespace typmod
