#pragma once

#include <array>

#include "midtree/encode.hpp"
#include "midtree/tree_metric.hpp"

namespace midtree {

/// Alternating sum of the four open-interval path sums around the variable
/// position v, read for side s:
///   t_(A_{v,s},A_{v,-s}) - t_(A_{v,-s},A_{>v}) + t_(A_{>v},A_{<v}) - t_(A_{<v},A_{v,s})
/// By the partition lemma this is 4*t(A_{v,s} u A_{<v}) - 4*t(A_{>v} u A_{<v}),
/// so it is strictly positive exactly when the tree splits position v toward s.
inline Rational splitting_statistic(const TreeMetric& t, const VariableSplits& splits, int v,
                                    int s) {
    if (v < 1 || v > splits.vars() || (s != 1 && s != -1))
        throw Error(Err::Range, "variable position out of range");
    Split as = splits.leaf(v, s);
    Split ao = splits.leaf(v, -s);
    Split up = splits.above(v);
    Split dn = splits.below(v);
    Rational tau = path_sum(t, EdgeInterval::open(as, ao));
    tau -= path_sum(t, EdgeInterval::open(ao, up));
    tau += path_sum(t, EdgeInterval::open(up, dn));
    tau -= path_sum(t, EdgeInterval::open(dn, as));
    return tau;
}

/// h_t(v) = s when the statistic is positive for s; +1 when neither side is.
inline Assignment extract_assignment(const TreeMetric& t, const SatCase& P) {
    CaseLayout layout(P);
    if (layout.ground() != t.ground())
        throw Error(Err::InvalidInput, "tree ground set does not match the encoded case");
    VariableSplits splits(layout);
    std::vector<int> h(P.V, 1);
    for (int v = 1; v <= P.V; ++v) {
        if (splitting_statistic(t, splits, v, 1) > 0)
            h[v - 1] = 1;
        else if (splitting_statistic(t, splits, v, -1) > 0)
            h[v - 1] = -1;
    }
    return Assignment(std::move(h));
}

struct ClauseAudit {
    std::array<Rational, 3> terms;  // statistic at (var(c,a), sign(c,a)) for a = 0,1,2
    Rational sum;
};

/// The three per-literal statistics of clause c and their sum. On any
/// realization the sum is strictly positive, so some literal extracts true.
inline ClauseAudit audit_clause(const TreeMetric& t, const SatCase& P, int c) {
    if (c < 1 || c > P.C) throw Error(Err::Range, "clause index out of range");
    CaseLayout layout(P);
    if (layout.ground() != t.ground())
        throw Error(Err::InvalidInput, "tree ground set does not match the encoded case");
    VariableSplits splits(layout);
    ClauseAudit audit;
    audit.sum = 0;
    for (int a = 0; a < 3; ++a) {
        audit.terms[a] = splitting_statistic(t, splits, P.var(c, a), P.sign(c, a));
        audit.sum += audit.terms[a];
    }
    return audit;
}

} // namespace midtree
