#include "akc/cnf.hpp"

#include <algorithm>

namespace akc {

void validate_restricted(const CnfFormula& phi) {
    if (phi.num_vars < 1) throw FormulaError("formula has no variables");
    std::vector<int> uses(phi.num_vars, 0);
    std::vector<char> pos(phi.num_vars, 0), neg(phi.num_vars, 0);
    for (size_t j = 0; j < phi.clauses.size(); ++j) {
        const auto& clause = phi.clauses[j];
        if (clause.size() > 3) {
            throw FormulaError("clause " + std::to_string(j + 1) + " has " +
                               std::to_string(clause.size()) + " literals (at most 3 allowed)");
        }
        std::vector<int> seen;
        for (const Lit& lit : clause) {
            if (lit.var < 0 || lit.var >= phi.num_vars) {
                throw FormulaError("clause " + std::to_string(j + 1) +
                                   " references variable out of range");
            }
            if (std::find(seen.begin(), seen.end(), lit.var) != seen.end()) {
                throw FormulaError("clause " + std::to_string(j + 1) + " uses variable x" +
                                   std::to_string(lit.var + 1) + " twice");
            }
            seen.push_back(lit.var);
            ++uses[lit.var];
            (lit.positive ? pos : neg)[lit.var] = 1;
        }
    }
    for (int i = 0; i < phi.num_vars; ++i) {
        if (uses[i] > 3) {
            throw FormulaError("variable x" + std::to_string(i + 1) + " used in " +
                               std::to_string(uses[i]) + " clauses (at most 3 allowed)");
        }
        if (!pos[i]) {
            throw FormulaError("variable x" + std::to_string(i + 1) +
                               " never used in positive polarity");
        }
        if (!neg[i]) {
            throw FormulaError("variable x" + std::to_string(i + 1) +
                               " never used in negative polarity");
        }
    }
}

int literal_occurrences(const CnfFormula& phi, int var, bool positive) {
    int count = 0;
    for (const auto& clause : phi.clauses) {
        for (const Lit& lit : clause) {
            if (lit.var == var && lit.positive == positive) ++count;
        }
    }
    return count;
}

bool clause_satisfied(const std::vector<Lit>& clause, const std::vector<bool>& assignment) {
    for (const Lit& lit : clause) {
        if (assignment[lit.var] == lit.positive) return true;
    }
    return false;
}

bool satisfies(const CnfFormula& phi, const std::vector<bool>& assignment) {
    for (const auto& clause : phi.clauses) {
        if (!clause_satisfied(clause, assignment)) return false;
    }
    return true;
}

}  // namespace akc
