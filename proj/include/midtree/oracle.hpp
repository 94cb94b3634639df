#pragma once

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <vector>

#include "midtree/lp.hpp"
#include "midtree/realization.hpp"
#include "midtree/sat.hpp"

namespace midtree {

/// A maximal pairwise-compatible split system on n leaves: n leaf splits plus
/// n-3 internal splits.
using Topology = std::vector<Split>;

namespace detail {

struct WorkTree {
    // Edge list over vertex ids; leaves are 0..n-1, internal vertices follow.
    std::vector<std::pair<int, int>> edges;
    int next_vertex = 0;
};

inline void emit_topology(const WorkTree& w, std::size_t n, std::vector<Topology>& out) {
    // Side of each edge away from leaf 0, collected by walking the tree.
    std::vector<std::vector<std::pair<int, int>>> adj(w.next_vertex);
    for (int e = 0; e < static_cast<int>(w.edges.size()); ++e) {
        auto [a, b] = w.edges[e];
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }
    Topology topo;
    for (auto [a, b] : w.edges) {
        IndexSet side(n);
        // Leaves reachable from b without crossing the edge (a,b).
        std::vector<int> stack{b};
        std::vector<char> seen(w.next_vertex, 0);
        seen[a] = seen[b] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v < static_cast<int>(n)) side.set(static_cast<std::size_t>(v));
            for (auto [u, e] : adj[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        topo.push_back(Split::of(std::move(side)));
    }
    std::sort(topo.begin(), topo.end());
    out.push_back(std::move(topo));
}

inline void grow(WorkTree& w, std::size_t next_leaf, std::size_t n, std::vector<Topology>& out) {
    if (next_leaf == n) {
        emit_topology(w, n, out);
        return;
    }
    const std::size_t ecount = w.edges.size();
    for (std::size_t e = 0; e < ecount; ++e) {
        auto [a, b] = w.edges[e];
        int mid = w.next_vertex++;
        w.edges[e] = {a, mid};
        w.edges.push_back({mid, b});
        w.edges.push_back({mid, static_cast<int>(next_leaf)});
        grow(w, next_leaf + 1, n, out);
        w.edges.pop_back();
        w.edges.pop_back();
        w.edges[e] = {a, b};
        --w.next_vertex;
    }
}

} // namespace detail

/// Every labeled binary topology on n leaves exactly once, in a fixed
/// insertion order; there are (2n-5)!! of them.
inline std::vector<Topology> enumerate_topologies(std::size_t n, std::size_t cap = 8) {
    if (n < 3) throw Error(Err::Range, "topology enumeration needs n >= 3");
    if (n > cap) throw Error(Err::CapExceeded, "leaf count above the configured cap");
    detail::WorkTree w;
    w.next_vertex = static_cast<int>(n) + 1;
    w.edges = {{0, static_cast<int>(n)}, {1, static_cast<int>(n)}, {2, static_cast<int>(n)}};
    std::vector<Topology> out;
    detail::grow(w, 3, n, out);
    return out;
}

struct OracleResult {
    bool realizable = false;
    std::optional<TreeMetric> witness;
};

/// Condition-3 rows for a fixed edge set: one row per ordered pair, with
/// coefficients +2 on edges of the closed interval and -2 on edges of the
/// half-open one.
inline std::vector<std::vector<Rational>> feasibility_rows(const MidpointsStructure& m,
                                                           const std::vector<Split>& edge_vars) {
    const std::size_t n = m.size();
    const std::size_t k = edge_vars.size();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(n * (n - 1));
    auto add_row = [&](std::size_t x, std::size_t xp, const IndexSet& mid_x, const IndexSet& mid_xp,
                       const Split& mid_split) {
        std::vector<Rational> row(k, Rational(0));
        for (std::size_t u = 0; u < k; ++u) {
            IndexSet ux = edge_vars[u].side_containing(x);
            if (ux.is_subset_of(mid_x)) row[u] += 2;
            if (edge_vars[u] == mid_split) continue;
            IndexSet uxp = edge_vars[u].side_containing(xp);
            if (uxp.is_subset_of(mid_xp)) row[u] -= 2;
        }
        rows.push_back(std::move(row));
    };
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const IndexSet& mid = m.midpoint(i, j);
            IndexSet midc = ~mid;
            Split mid_split = Split::of(mid);
            add_row(j, i, mid, midc, mid_split);
            add_row(i, j, midc, mid, mid_split);
        }
    return rows;
}

/// Exact strict feasibility of the realization inequalities over a fixed
/// edge set. Any midpoint set that is not one of the edges is forced to
/// length zero, which no realization allows, so such systems are rejected
/// up front. A returned witness is re-verified through check_realization.
inline OracleResult strict_feasible(const std::vector<Split>& edge_vars,
                                    const MidpointsStructure& m) {
    if (!validate_midpoints(m).ok) throw Error(Err::InvalidInput, "invalid midpoints structure");
    std::unordered_set<Split, SplitHash> have(edge_vars.begin(), edge_vars.end());
    const std::size_t n = m.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (!have.count(Split::of(m.midpoint(i, j)))) return {};

    auto rows = feasibility_rows(m, edge_vars);
    StrictFeasibility fs = strict_feasibility(rows, edge_vars.size());
    if (!fs.feasible) return {};

    TreeMetric t(m.ground());
    for (std::size_t u = 0; u < edge_vars.size(); ++u) t.set_length(edge_vars[u], fs.lengths[u]);
    RealizationReport rep = check_realization(m, t);
    if (!rep.ok) throw Error(Err::InvalidInput, "feasibility witness failed re-verification");
    OracleResult res;
    res.realizable = true;
    res.witness = std::move(t);
    return res;
}

/// Scans every binary topology. Sound (each witness re-verified) and complete
/// over binary systems: any realization's support extends to a binary system
/// by zero-length padding, which changes no interval sum.
inline OracleResult brute_realizable(const MidpointsStructure& m, std::size_t cap = 8) {
    const std::size_t n = m.size();
    if (!validate_midpoints(m).ok) throw Error(Err::InvalidInput, "invalid midpoints structure");
    if (n == 2) {
        // One edge only; its positivity realizes the lone legal structure.
        TreeMetric t(m.ground());
        t.set_length(Split::leaf(2, 1), Rational(1));
        RealizationReport rep = check_realization(m, t);
        OracleResult res;
        res.realizable = rep.ok;
        if (rep.ok) res.witness = std::move(t);
        return res;
    }
    for (const Topology& topo : enumerate_topologies(n, cap)) {
        OracleResult res = strict_feasible(topo, m);
        if (res.realizable) return res;
    }
    return {};
}

/// Exhaustive satisfying-assignment enumeration, ascending in the sign mask
/// (bit v-1 set means h(v) = +1).
inline std::vector<Assignment> sat_bruteforce(const SatCase& P, int cap = 24) {
    if (P.V > cap) throw Error(Err::CapExceeded, "variable count above the configured cap");
    std::vector<Assignment> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << P.V); ++mask) {
        std::vector<int> h(P.V);
        for (int v = 1; v <= P.V; ++v) h[v - 1] = (mask >> (v - 1)) & 1 ? 1 : -1;
        Assignment a(std::move(h));
        if (is_satisfied(P, a)) out.push_back(std::move(a));
    }
    return out;
}

} // namespace midtree
