#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace akc {

struct FormulaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One literal: variable index (0-based) plus sign.
struct Lit {
    int var = 0;
    bool positive = true;

    bool operator==(const Lit&) const = default;
};

// CNF formula. Clauses hold literals sorted by variable; an empty clause is
// legal for the SAT oracle but formulas fed to the reductions must pass
// validate_restricted first.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<Lit>> clauses;

    bool operator==(const CnfFormula&) const = default;
};

// Checks the restricted shape the reductions require:
//   - every clause has at most 3 literals, over distinct variables;
//   - every variable occurs in at most 3 clauses;
//   - every variable occurs at least once positively and once negatively.
// Throws FormulaError naming the violated restriction. Planarity of the
// associated formula graph is not checked here; it is a corpus-level trust
// tag backed by the Euler bound.
void validate_restricted(const CnfFormula& phi);

// Occurrence count of one literal (variable + polarity) across clauses.
int literal_occurrences(const CnfFormula& phi, int var, bool positive);

bool clause_satisfied(const std::vector<Lit>& clause, const std::vector<bool>& assignment);
bool satisfies(const CnfFormula& phi, const std::vector<bool>& assignment);

}  // namespace akc
