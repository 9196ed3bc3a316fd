#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bm/graph.hpp"

namespace bm {

// CNF with signed 1-based literals; clause sizes 2 or 3 throughout this
// project. Satisfaction is always in the exactly-one-true sense.
struct Formula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    bool operator==(const Formula&) const = default;
};

// Occurrence-limited fragment fed to the hardness construction: clause sizes
// in {2,3} with distinct variables, every variable at most 3 occurrences, at
// most 2 positive and at most 1 negative.
bool is_well_formed_sat3(const Formula& f);

// Splits every variable with k >= 3 occurrences into k fresh variables (one
// per occurrence, in clause order) bound by the 2-clauses (x_j, -x_{j+1}) and
// (x_k, -x_1). Input must be positive with 3-literal clauses; the output is
// well-formed in the sense above and preserves exactly-one-true
// satisfiability.
Formula transform_formula(const Formula& f);

// Oracle: some assignment makes exactly one literal true in every clause.
// Throws std::invalid_argument for more than 24 variables.
bool brute_one_in_three(const Formula& f);

// DIMACS-like format: `c` comments, `p x13 <nvars> <nclauses>`, clause lines
// of signed ints terminated by 0.
Formula parse_formula(std::istream& in);
Formula parse_formula_text(const std::string& text);
std::string emit_formula(const Formula& f);

}  // namespace bm
