#include "bm/formula.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bm {

bool is_well_formed_sat3(const Formula& f) {
    std::vector<int> pos(f.num_vars + 1, 0), neg(f.num_vars + 1, 0);
    for (const auto& clause : f.clauses) {
        if (clause.size() != 2 && clause.size() != 3) return false;
        std::vector<int> vars;
        for (int lit : clause) {
            int v = std::abs(lit);
            if (lit == 0 || v > f.num_vars) return false;
            vars.push_back(v);
            (lit > 0 ? pos : neg)[v] += 1;
        }
        std::sort(vars.begin(), vars.end());
        if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) return false;
    }
    for (int v = 1; v <= f.num_vars; ++v) {
        if (pos[v] > 2 || neg[v] > 1) return false;
        if (pos[v] + neg[v] > 3) return false;
    }
    return true;
}

Formula transform_formula(const Formula& f) {
    std::vector<int> occurrences(f.num_vars + 1, 0);
    for (const auto& clause : f.clauses)
        for (int lit : clause) {
            if (lit <= 0) throw std::invalid_argument("transform_formula requires a positive formula");
            if (lit > f.num_vars) throw std::invalid_argument("literal out of range");
            ++occurrences[lit];
        }
    for (const auto& clause : f.clauses)
        if (clause.size() != 3)
            throw std::invalid_argument("transform_formula requires 3-literal clauses");

    Formula out;
    out.num_vars = f.num_vars;
    out.clauses = f.clauses;

    for (int v = 1; v <= f.num_vars; ++v) {
        const int k = occurrences[v];
        if (k < 3) continue;
        // fresh variables out.num_vars+1 .. out.num_vars+k replace the
        // occurrences of v in clause order
        std::vector<int> fresh(k);
        for (int j = 0; j < k; ++j) fresh[j] = out.num_vars + 1 + j;
        out.num_vars += k;
        int next = 0;
        for (auto& clause : out.clauses)
            for (int& lit : clause)
                if (lit == v) lit = fresh[next++];
        for (int j = 0; j < k; ++j)
            out.clauses.push_back({fresh[j], -fresh[(j + 1) % k]});
    }
    return out;
}

bool brute_one_in_three(const Formula& f) {
    if (f.num_vars > 24) throw std::invalid_argument("brute_one_in_three limited to 24 variables");
    for (std::uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
        bool ok = true;
        for (const auto& clause : f.clauses) {
            int truths = 0;
            for (int lit : clause) {
                bool val = (mask >> (std::abs(lit) - 1)) & 1u;
                if (lit < 0) val = !val;
                truths += val;
            }
            if (truths != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

Formula parse_formula(std::istream& in) {
    Formula f;
    bool have_header = false;
    int expected_clauses = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first) || first == "c") continue;
        if (first == "p") {
            std::string kind;
            if (!(ss >> kind >> f.num_vars >> expected_clauses) || kind != "x13")
                throw ParseError(lineno, "malformed problem line, expected 'p x13 <vars> <clauses>'");
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(lineno, "clause before problem line");
        auto to_lit = [&](const std::string& tok) {
            std::size_t pos = 0;
            int value;
            try {
                value = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError(lineno, "malformed literal '" + tok + "'");
            }
            if (pos != tok.size()) throw ParseError(lineno, "malformed literal '" + tok + "'");
            return value;
        };
        std::vector<int> clause;
        int lit = to_lit(first);
        std::string tok;
        while (lit != 0) {
            if (std::abs(lit) > f.num_vars) throw ParseError(lineno, "literal out of range");
            clause.push_back(lit);
            if (!(ss >> tok)) throw ParseError(lineno, "clause not terminated by 0");
            lit = to_lit(tok);
        }
        f.clauses.push_back(std::move(clause));
    }
    if (!have_header) throw ParseError(lineno, "missing problem line");
    if (static_cast<int>(f.clauses.size()) != expected_clauses)
        throw ParseError(lineno, "clause count mismatch");
    return f;
}

Formula parse_formula_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_formula(ss);
}

std::string emit_formula(const Formula& f) {
    std::ostringstream out;
    out << "p x13 " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

}  // namespace bm
