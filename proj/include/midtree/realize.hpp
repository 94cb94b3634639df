#pragma once

#include <array>
#include <vector>

#include "midtree/realization.hpp"
#include "midtree/reduction.hpp"

namespace midtree {

/// How the leaf-edge correction is produced.
enum class CorrectionMode {
    Recursion,   // the closed-form recursion over each block's 12-step chain
    ChainSolve,  // re-derive each step from measured slacks with unit margin
};

namespace detail {

inline unsigned exp_mod4(int a) { return static_cast<unsigned>(((a % 4) + 4) % 4); }

} // namespace detail

inline Rational cherry_length(const SatCase& P, int c, int p, int q) {
    return pow10q(2 * P.V + 4 * c + detail::exp_mod4(p + q - 1));
}

inline Rational base_pendant_length(const SatCase& P, int c, int p, int q, int e) {
    Rational r = pow10q(2 * P.V + 4 * P.C + 4 + 4 * c + p);
    r += 2 * pow10q(2 * P.V + 4 * c + detail::exp_mod4(p + q));
    if (e != 0) r += pow10q(2 * P.V + 4 * c + detail::exp_mod4(p + q + e));
    return r;
}

/// The scaffold tree for (P,h): length-6 splitting edges encoding h, the
/// power-of-ten ladder on the chain, and the clause copies hung in by f.
/// The splitting edge at position v groups the leaf block OPPOSITE to h(v)
/// with everything above v (equivalently, the h(v) block with everything
/// below), which is the configuration the extraction statistic reads as
/// h_t(v) = h(v).
inline TreeMetric build_base_tree(const CaseLayout& layout, const Assignment& h) {
    const SatCase& P = layout.sat_case();
    if (h.vars() != P.V) throw Error(Err::InvalidInput, "assignment size does not match case");
    VariableSplits splits(layout);
    TreeMetric t(layout.ground());

    auto put = [&](const Split& s, const Rational& len) {
        if (t.has_edge(s)) throw Error(Err::InvalidInput, "duplicate edge in base construction");
        t.set_length(s, len);
    };

    for (int v = 1; v <= P.V; ++v)
        put(Split::of(splits.above_set(v) | splits.leaf_block(v, -h(v))), Rational(6));
    for (int v = 0; v <= P.V; ++v) put(splits.above(v), pow10q(P.V));
    for (int v = 0; v <= P.V + 1; ++v)
        for (int s : {-1, 1}) put(splits.leaf(v, s), pow10q(P.V + v + (s + 1) / 2));
    for (int c = 1; c <= P.C; ++c)
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q) {
                GadgetIndex mate = gadget_mate(GadgetIndex{c, p, q, -1});
                IndexSet pairset(layout.size());
                pairset.set(layout.gadget_element(c, p, q, -1));
                pairset.set(layout.gadget_element(c, mate.p, mate.q, mate.e));
                put(Split::of(std::move(pairset)), cherry_length(P, c, p, q));
                for (int e : {-1, 0, 1})
                    put(Split::leaf(layout.size(), layout.gadget_element(c, p, q, e)),
                        base_pendant_length(P, c, p, q, e));
            }
    return t;
}

/// Per-clause correction values, indexed [q][e+1]; identical across blocks.
using ClauseCorrection = std::array<std::array<Rational, 3>, 4>;

/// The 12-step recursion: each step adds the agreement count of the clause,
/// and the two within-position steps transfer the base-tree distance between
/// the images of the adjacent elements. Here u is the plain leaf distance in
/// the base tree (half of the doubled closed-interval sum).
inline std::vector<ClauseCorrection> leaf_correction(const CaseLayout& layout, const Assignment& h,
                                                     const TreeMetric& base) {
    const SatCase& P = layout.sat_case();
    std::vector<ClauseCorrection> out(P.C);
    for (int c = 1; c <= P.C; ++c) {
        Rational n_agree = agreements(P, h, c);
        auto u = [&](int q1, int e1, int q2, int e2) {
            return leaf_distance(base, clause_map_target(P, c, q1, e1),
                                 clause_map_target(P, c, q2, e2));
        };
        ClauseCorrection& tp = out[c - 1];
        auto at = [&tp](int q, int e) -> Rational& { return tp[q][e + 1]; };
        at(0, -1) = 0;
        for (int q = 0; q < 4; ++q) {
            if (q != 0) at(q, -1) = at(q - 1, 1) + n_agree;
            at(q, 0) = at(q, -1) - u(q, -1, q, 0) + n_agree;
            at(q, 1) = at(q, 0) + u(q, 0, q, 1) + n_agree;
        }
    }
    return out;
}

struct RealizationBuild {
    MidpointsStructure structure;  // the encoded case
    TreeMetric base;
    TreeMetric tree;  // base + correction + unit pendants on conscripted slots
    RealizationReport report;
};

struct BuildOptions {
    CorrectionMode mode = CorrectionMode::Recursion;
    CheckOptions check;
};

namespace detail {

/// One ordered-pair slack under a candidate tree (positive means satisfied).
inline Rational pair_slack(const MidpointsStructure& m, const TreeMetric& t, std::size_t x,
                           std::size_t xp) {
    const IndexSet& mid = m.midpoint(std::min(x, xp), std::max(x, xp));
    IndexSet mid_x = mid.test(x) ? mid : ~mid;
    IndexSet mid_xp = ~mid_x;
    Split mid_split = Split::of(mid);
    Rational lhs = 0, rhs = 0;
    for (const auto& [split, len] : t.support()) {
        IndexSet ux = split.side_containing(x);
        if (ux.is_subset_of(mid_x)) lhs += 2 * len;
        if (split == mid_split) continue;
        IndexSet uxp = split.side_containing(xp);
        if (uxp.is_subset_of(mid_xp)) rhs += 2 * len;
    }
    return lhs - rhs;
}

/// Walks each block's 12-step chain, reading the needed increment for every
/// step off the measured slack of its ordered pair and adding a unit margin.
/// Cross-validates the recursion's distance bookkeeping.
inline void chain_solve_correction(const MidpointsStructure& m, const CaseLayout& layout,
                                   TreeMetric& tree) {
    const SatCase& P = layout.sat_case();
    for (int c = 1; c <= P.C; ++c)
        for (int p = 0; p < 4; ++p) {
            std::array<std::array<Rational, 3>, 4> tp{};
            auto at = [&tp](int q, int e) -> Rational& { return tp[q][e + 1]; };
            auto idx = [&](int q, int e) { return layout.gadget_element(c, p, q, e); };
            // step(prev -> next): slack of the ordered pair (next, prev).
            auto step = [&](int qp, int ep, int qn, int en) {
                Rational s0 = pair_slack(m, tree, idx(qn, en), idx(qp, ep));
                at(qn, en) = at(qp, ep) - s0 / 2 + 1;
            };
            at(0, -1) = 0;
            for (int q = 0; q < 4; ++q) {
                if (q != 0) step(q - 1, 1, q, -1);
                step(q, -1, q, 0);
                step(q, 0, q, 1);
            }
            for (int q = 0; q < 4; ++q)
                for (int e : {-1, 0, 1})
                    tree.add_length(Split::leaf(layout.size(), idx(q, e)), at(q, e));
        }
}

} // namespace detail

/// Assembles and verifies a candidate realization for (P,h). Satisfaction is
/// not required: a non-satisfying h produces a tree whose verification report
/// carries at least one violation.
inline RealizationBuild build_realization(const SatCase& P, const Assignment& h,
                                          const BuildOptions& opts = {}) {
    CaseLayout layout(P);
    VariableSplits splits(layout);
    RealizationBuild out{encode_case(P), build_base_tree(layout, h), TreeMetric{}, {}};
    out.tree = out.base;

    // Conscripted variable slots carry gadget leaves; give their own pendant
    // edges unit length so every forced edge of the structure is present.
    for (int v = 0; v <= P.V + 1; ++v)
        for (int s : {-1, 1})
            if (splits.leaf_block(v, s).count() > 1)
                out.tree.add_length(Split::leaf(layout.size(), layout.variable_element(v, s)),
                                    Rational(1));

    if (opts.mode == CorrectionMode::Recursion) {
        auto correction = leaf_correction(layout, h, out.base);
        for (int c = 1; c <= P.C; ++c)
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q)
                    for (int e : {-1, 0, 1})
                        out.tree.add_length(
                            Split::leaf(layout.size(), layout.gadget_element(c, p, q, e)),
                            correction[c - 1][q][e + 1]);
    } else {
        detail::chain_solve_correction(out.structure, layout, out.tree);
    }

    for (const auto& [split, len] : out.tree.edges_sorted())
        if (len < 0) throw Error(Err::Nonnegativity, "assembled edge length below zero");

    out.report = check_realization(out.structure, out.tree, opts.check);
    return out;
}

} // namespace midtree
