#include "typmod/cnf.hpp"

#include <algorithm>

namespace typmod {

bool is_tautology(const Clause& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c[i].var() == c[j].var() && c[i].code != c[j].code) return true;
    return false;
}

Clause normalize_clause(Clause c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i].var() == c[i + 1].var())
            throw DomainError("tautological clause");
    return c;
}

CnfSystem::CnfSystem(int num_vars, std::vector<Clause> clauses, std::vector<std::string> names)
    : CnfSystem(num_vars, num_vars, std::move(clauses), std::move(names)) {}

CnfSystem::CnfSystem(int num_vars, int num_base_vars, std::vector<Clause> clauses,
                     std::vector<std::string> names)
    : num_vars_(num_vars), num_base_vars_(num_base_vars) {
    if (num_vars_ < 1) throw DomainError("a system needs at least one variable");
    if (num_base_vars_ < 1 || num_base_vars_ > num_vars_)
        throw DomainError("base variable count out of range");
    if (!names.empty() && names.size() != static_cast<std::size_t>(num_vars_))
        throw DomainError("name list size does not match variable count");
    clauses_.reserve(clauses.size());
    for (auto& c : clauses) {
        Clause n = normalize_clause(std::move(c));
        check_clause(n);
        clauses_.push_back(std::move(n));
    }
    names_ = std::move(names);
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) continue;
        auto [it, fresh] = by_name_.emplace(names_[i], static_cast<int>(i) + 1);
        (void)it;
        if (!fresh) throw DomainError("duplicate variable name: " + names_[i]);
    }
}

void CnfSystem::check_clause(const Clause& c) const {
    for (Lit l : c)
        if (l.var() < 1 || l.var() > num_vars_)
            throw DomainError("clause references undeclared variable " + std::to_string(l.var()));
}

const std::string& CnfSystem::name(int var) const {
    static const std::string empty;
    if (names_.empty()) return empty;
    return names_[static_cast<std::size_t>(var) - 1];
}

std::string CnfSystem::display_name(int var) const {
    const std::string& n = name(var);
    return n.empty() ? "v" + std::to_string(var) : n;
}

std::string CnfSystem::display(Lit l) const {
    return (l.positive() ? "" : "-") + display_name(l.var());
}

std::optional<int> CnfSystem::var_by_name(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

CnfSystem CnfSystem::with_clauses(const std::vector<Clause>& extra) const {
    std::vector<Clause> all = clauses_;
    all.insert(all.end(), extra.begin(), extra.end());
    return CnfSystem(num_vars_, num_base_vars_, std::move(all), names_);
}

CnfSystem CnfSystem::with_aux(int count, const std::vector<Clause>& extra) const {
    std::vector<std::string> names = names_;
    if (!names.empty()) names.resize(static_cast<std::size_t>(num_vars_ + count));
    std::vector<Clause> all = clauses_;
    all.insert(all.end(), extra.begin(), extra.end());
    return CnfSystem(num_vars_ + count, num_base_vars_, std::move(all), std::move(names));
}

bool operator==(const CnfSystem& a, const CnfSystem& b) {
    return a.num_vars_ == b.num_vars_ && a.num_base_vars_ == b.num_base_vars_ &&
           a.clauses_ == b.clauses_ && a.names_ == b.names_;
}

}  // namespace typmod
