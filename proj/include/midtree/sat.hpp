#pragma once

#include <array>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "midtree/errors.hpp"

namespace midtree {

/// Sign assignment h : [1,V] -> {-1,+1}.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::vector<int> signs) : signs_(std::move(signs)) {
        for (int s : signs_)
            if (s != -1 && s != 1) throw Error(Err::InvalidInput, "assignment signs must be +-1");
    }

    int vars() const { return static_cast<int>(signs_.size()); }

    int operator()(int v) const {
        if (v < 1 || v > vars()) throw Error(Err::Range, "variable index out of range");
        return signs_[v - 1];
    }

    const std::vector<int>& signs() const { return signs_; }

    bool operator==(const Assignment& o) const { return signs_ == o.signs_; }
    bool operator!=(const Assignment& o) const { return !(*this == o); }

private:
    std::vector<int> signs_;
};

/// A 3-SAT case: V variables, C clauses, per clause three distinct variables
/// in increasing order with polarities.
struct SatCase {
    int V = 0;
    int C = 0;
    std::vector<std::array<int, 3>> vars;   // clause c (0-based) -> variable indices, ascending
    std::vector<std::array<int, 3>> signs;  // clause c -> polarities in {-1,+1}

    int var(int c, int a) const { return vars.at(c - 1).at(a); }    // c in [1,C], a in [0,2]
    int sign(int c, int a) const { return signs.at(c - 1).at(a); }
};

inline SatCase make_case(int V, std::vector<std::array<int, 3>> literal_clauses) {
    if (V < 1) throw Error(Err::Range, "need at least one variable");
    SatCase P;
    P.V = V;
    P.C = static_cast<int>(literal_clauses.size());
    for (auto& lits : literal_clauses) {
        std::array<int, 3> vs{}, ss{};
        for (int a = 0; a < 3; ++a) {
            int lit = lits[a];
            if (lit == 0) throw Error(Err::Parse, "literal 0 inside a clause");
            int v = lit > 0 ? lit : -lit;
            if (v > V) throw Error(Err::Range, "variable index exceeds declared count");
            vs[a] = v;
            ss[a] = lit > 0 ? 1 : -1;
        }
        // Normalize to ascending variable order, polarities riding along.
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (vs[b] < vs[a]) {
                    std::swap(vs[a], vs[b]);
                    std::swap(ss[a], ss[b]);
                }
        if (vs[0] == vs[1] || vs[1] == vs[2])
            throw Error(Err::DuplicateVariable, "clause repeats a variable");
        P.vars.push_back(vs);
        P.signs.push_back(ss);
    }
    return P;
}

/// DIMACS CNF subset: every clause must have exactly three distinct variables.
inline SatCase parse_dimacs(std::istream& in) {
    int V = -1, C = -1;
    std::vector<std::array<int, 3>> clauses;
    std::vector<int> pending;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            ls >> p >> fmt >> V >> C;
            if (fmt != "cnf" || V < 1 || C < 0) throw Error(Err::Parse, "bad DIMACS problem line");
            continue;
        }
        long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw Error(Err::ClauseArity, "clause must have exactly 3 literals");
                clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
            } else {
                pending.push_back(static_cast<int>(lit));
            }
        }
    }
    if (V < 0) throw Error(Err::Parse, "missing DIMACS problem line");
    if (!pending.empty()) throw Error(Err::ClauseArity, "trailing clause without terminating 0");
    if (C >= 0 && static_cast<int>(clauses.size()) != C)
        throw Error(Err::Parse, "clause count does not match problem line");
    return make_case(V, std::move(clauses));
}

inline SatCase parse_dimacs_string(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

/// Number of literal agreements of clause c under h.
inline int agreements(const SatCase& P, const Assignment& h, int c) {
    if (h.vars() != P.V) throw Error(Err::InvalidInput, "assignment size does not match case");
    int n = 0;
    for (int a = 0; a < 3; ++a)
        if (h(P.var(c, a)) == P.sign(c, a)) ++n;
    return n;
}

inline bool is_satisfied(const SatCase& P, const Assignment& h) {
    for (int c = 1; c <= P.C; ++c)
        if (agreements(P, h, c) == 0) return false;
    return true;
}

} // namespace midtree
