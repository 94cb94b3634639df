#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "midtree/midpoints.hpp"
#include "midtree/tree_metric.hpp"

namespace midtree {

struct OrderedPairCheck {
    std::size_t x = 0, xp = 0;  // the ordered pair (x, x')
    Rational lhs, rhs;

    Rational slack() const { return lhs - rhs; }
    bool ok() const { return lhs > rhs; }
};

struct RealizationReport {
    bool ok = false;
    std::size_t pairs_checked = 0;
    std::vector<OrderedPairCheck> violations;
    // Populated only when requested; one entry per ordered pair in scan order.
    std::vector<OrderedPairCheck> all_checks;
};

struct CheckOptions {
    bool collect_all = false;
    bool stop_at_first_violation = false;
};

/// The polynomial-time certificate verifier: for every ordered pair (x,x')
/// evaluates the strict inequality
///     path_sum [{x}, m{x,x'}]  >  path_sum [{x'}, m{x,x'})
/// over the tree's support. Verdict ok iff all 2*C(n,2) checks are strict.
/// Violations are report-carried; only precondition failures throw.
inline RealizationReport check_realization(const MidpointsStructure& m, const TreeMetric& t,
                                           const CheckOptions& opts = {}) {
    if (m.ground() != t.ground())
        throw Error(Err::InvalidInput, "structure and tree use different ground sets");
    if (!validate_midpoints(m).ok) throw Error(Err::InvalidInput, "invalid midpoints structure");
    if (!validate_tree(t).ok) throw Error(Err::InvalidInput, "tree support is not pairwise compatible");

    const std::size_t n = m.size();
    auto sup = t.support();
    const std::size_t e = sup.size();
    std::vector<IndexSet> canon(e), comp(e);
    std::vector<Rational> len(e);
    for (std::size_t k = 0; k < e; ++k) {
        canon[k] = sup[k].first.side();
        comp[k] = ~canon[k];
        len[k] = sup[k].second;
    }

    RealizationReport rep;
    rep.ok = true;

    auto evaluate = [&](std::size_t x, std::size_t xp, const IndexSet& mid_x,
                        const IndexSet& mid_xp, const IndexSet& mid_canon) {
        Rational lhs = 0, rhs = 0;
        for (std::size_t k = 0; k < e; ++k) {
            const IndexSet& ux = canon[k].test(x) ? canon[k] : comp[k];
            if (ux.is_subset_of(mid_x)) lhs += 2 * len[k];
            if (canon[k] == mid_canon) continue;  // half-open: drop the midpoint edge
            const IndexSet& uxp = canon[k].test(xp) ? canon[k] : comp[k];
            if (uxp.is_subset_of(mid_xp)) rhs += 2 * len[k];
        }
        OrderedPairCheck chk{x, xp, std::move(lhs), std::move(rhs)};
        ++rep.pairs_checked;
        if (!chk.ok()) {
            rep.ok = false;
            rep.violations.push_back(chk);
        }
        if (opts.collect_all) rep.all_checks.push_back(std::move(chk));
    };

    for (std::size_t j = 1; j < n && !(opts.stop_at_first_violation && !rep.ok); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const IndexSet& mid = m.midpoint(i, j);  // contains j, not i
            IndexSet midc = ~mid;
            IndexSet mid_canon = mid.test(0) ? midc : mid;
            evaluate(j, i, mid, midc, mid_canon);
            evaluate(i, j, midc, mid, mid_canon);
            if (opts.stop_at_first_violation && !rep.ok) break;
        }
    }
    return rep;
}

/// The splits forced positive in every realization: images of the midpoint
/// map plus all leaf edges, as unoriented splits.
inline std::vector<Split> midpoints_geometry(const MidpointsStructure& m) {
    std::vector<Split> out;
    const std::size_t n = m.size();
    for (std::size_t x = 0; x < n; ++x) out.push_back(Split::leaf(n, x));
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) out.push_back(Split::of(m.midpoint(i, j)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Reads the order information off a generic tree: z goes to m{x,y} exactly
/// when z is strictly closer to the pair's max. Ties abort with GENERIC_TIE.
inline MidpointsStructure derive_from_tree(const TreeMetric& t) {
    if (!validate_tree(t).ok) throw Error(Err::InvalidInput, "tree support is not pairwise compatible");
    const std::size_t n = t.size();
    auto sup = t.support();

    // Distance matrix via edge separations.
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [split, length] : sup) {
        const IndexSet& side = split.side();
        for (std::size_t a = 0; a < n; ++a) {
            bool sa = side.test(a);
            for (std::size_t b = a + 1; b < n; ++b)
                if (sa != side.test(b)) {
                    d[a][b] += length;
                    d[b][a] += length;
                }
        }
    }

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            if (d[x][y] == 0)
                throw Error(Err::GenericTie, "zero distance between '" + t.ground().id(x) +
                                                 "' and '" + t.ground().id(y) + "'");
            for (std::size_t z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                if (d[z][x] == d[z][y])
                    throw Error(Err::GenericTie, "tie at anchor '" + t.ground().id(z) +
                                                     "' between '" + t.ground().id(x) + "' and '" +
                                                     t.ground().id(y) + "'");
            }
        }

    MidpointsStructure m(t.ground());
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            IndexSet mid(n);
            for (std::size_t z = 0; z < n; ++z)
                if (d[z][j] < d[z][i]) mid.set(z);
            m.set_midpoint(i, j, std::move(mid));
        }
    return m;
}

} // namespace midtree
