#pragma once

// 3-SAT instances with exactly three (not necessarily distinct) literals per
// clause, DIMACS CNF I/O, and the ground-truth satisfaction predicates.
// Literals are signed 1-based variable indices.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pforest/graph.hpp"

namespace pforest {

using Clause = std::array<int, 3>;
using Assignment = std::vector<std::uint8_t>;  // index 0 is variable 1

struct CnfInstance {
    int num_vars = 0;
    std::vector<Clause> clauses;

    void validate() const {
        if (num_vars < 0) throw error("cnf: negative variable count");
        for (const auto& c : clauses)
            for (int lit : c)
                if (lit == 0 || std::abs(lit) > num_vars)
                    throw error("cnf: literal out of range");
    }
};

inline bool literal_value(int lit, const Assignment& a) {
    bool v = a[std::abs(lit) - 1] != 0;
    return lit > 0 ? v : !v;
}

inline bool clause_satisfied(const Clause& c, const Assignment& a) {
    return literal_value(c[0], a) || literal_value(c[1], a) ||
           literal_value(c[2], a);
}

// Not-all-equal: the clause holds at least one true and one false literal.
inline bool clause_nae_satisfied(const Clause& c, const Assignment& a) {
    bool any_true = false, any_false = false;
    for (int lit : c) (literal_value(lit, a) ? any_true : any_false) = true;
    return any_true && any_false;
}

inline bool satisfies(const CnfInstance& cnf, const Assignment& a) {
    if (static_cast<int>(a.size()) != cnf.num_vars)
        throw error("assignment length != variable count");
    for (const auto& c : cnf.clauses)
        if (!clause_satisfied(c, a)) return false;
    return true;
}

inline bool nae_satisfies(const CnfInstance& cnf, const Assignment& a) {
    if (static_cast<int>(a.size()) != cnf.num_vars)
        throw error("assignment length != variable count");
    for (const auto& c : cnf.clauses)
        if (!clause_nae_satisfied(c, a)) return false;
    return true;
}

// DIMACS CNF: 'c' comment lines, one 'p cnf <vars> <clauses>' header, then
// whitespace-separated literals with each clause terminated by 0. Clauses
// must have exactly three literals.
inline CnfInstance parse_dimacs_cnf(std::istream& in) {
    CnfInstance cnf;
    bool header_seen = false;
    int expected_clauses = 0;
    std::vector<int> pending;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            if (header_seen || !(ls >> fmt >> cnf.num_vars >> expected_clauses) ||
                fmt != "cnf" || cnf.num_vars < 0 || expected_clauses < 0)
                throw error("dimacs: bad problem line");
            header_seen = true;
            continue;
        }
        if (!header_seen) throw error("dimacs: clause before problem line");
        std::istringstream nums(line);
        int lit;
        while (nums >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw error("dimacs: clause must have exactly 3 literals");
                cnf.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
            } else {
                pending.push_back(lit);
            }
        }
        if (nums.fail() && !nums.eof()) throw error("dimacs: bad literal token");
    }
    if (!header_seen) throw error("dimacs: missing problem line");
    if (!pending.empty()) throw error("dimacs: unterminated clause");
    if (static_cast<int>(cnf.clauses.size()) != expected_clauses)
        throw error("dimacs: clause count does not match header");
    cnf.validate();
    return cnf;
}

inline CnfInstance parse_dimacs_cnf_string(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs_cnf(in);
}

inline void write_dimacs_cnf(std::ostream& out, const CnfInstance& cnf) {
    out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
    for (const auto& c : cnf.clauses)
        out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
}

}  // namespace pforest
