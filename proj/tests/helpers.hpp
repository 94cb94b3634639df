#pragma once

#include <random>
#include <string>
#include <vector>

#include "midtree/midtree.hpp"

// Shared builders and independent oracles for the test suites. Everything in
// here stays independent of the interval-sum path it is used to check:
// distances are computed directly from edge separations.

namespace testutil {

using namespace midtree;

inline GroundSet letters(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back(std::string(1, static_cast<char>('a' + i)));
    return GroundSet(std::move(ids));
}

inline SatCase example_case() {
    // (x or not y or z) and (w or x or y) over w,x,y,z = 1..4
    return make_case(4, {{2, -3, 4}, {1, 2, 3}});
}

/// The closed-form chain tree realizing the variable structure: unit tail
/// edges, pendant ladder 10^(v + (s+1)/2), first pendant degenerate.
inline TreeMetric chain_tree(int V) {
    GroundSet g = variable_ground(V);
    const std::size_t n = g.size();
    TreeMetric t{std::move(g)};
    for (int v = 1; v <= V + 1; ++v) {
        IndexSet tail(n);
        for (std::size_t u = x0_index(v, -1); u < n; ++u) tail.set(u);
        t.set_length(Split::of(std::move(tail)), Rational(1));
    }
    for (int v = 0; v <= V + 1; ++v)
        for (int s : {-1, 1}) {
            Rational len = (v == 0 && s == -1) ? Rational(0) : pow10q(v + (s + 1) / 2);
            t.set_length(Split::leaf(n, x0_index(v, s)), len);
        }
    return t;
}

/// Random positive-length tree on a random binary topology.
inline TreeMetric random_tree(std::mt19937_64& rng, std::size_t n, long max_len = 997) {
    auto topologies = enumerate_topologies(n);
    const Topology& topo = topologies[rng() % topologies.size()];
    TreeMetric t(plain_ground(n));
    for (const Split& s : topo)
        t.set_length(s, Rational(static_cast<long>(rng() % max_len) + 1));
    return t;
}

/// Random tree that derive_from_tree accepts (all relevant distances distinct).
inline TreeMetric random_generic_tree(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        TreeMetric t = random_tree(rng, n);
        try {
            derive_from_tree(t);
            return t;
        } catch (const Error& e) {
            if (e.code() != Err::GenericTie) throw;
        }
    }
}

inline std::vector<std::vector<Rational>> distance_matrix(const TreeMetric& t) {
    const std::size_t n = t.size();
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [split, len] : t.support()) {
        const IndexSet& side = split.side();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (side.test(a) != side.test(b)) {
                    d[a][b] += len;
                    d[b][a] += len;
                }
    }
    return d;
}

/// Distance-semantics realization oracle: z sits in m{x,y} exactly when z is
/// strictly closer to the pair's max.
inline bool realizes_by_distances(const MidpointsStructure& m, const TreeMetric& t) {
    auto d = distance_matrix(t);
    const std::size_t n = m.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const IndexSet& mid = m.midpoint(i, j);
            for (std::size_t z = 0; z < n; ++z) {
                if (mid.test(z)) {
                    if (!(d[z][j] < d[z][i])) return false;
                } else {
                    if (!(d[z][i] < d[z][j])) return false;
                }
            }
        }
    return true;
}

/// Same oracle through the triples axioms: x <_z y demands d(x,z) < d(y,z).
inline bool realizes_triples_by_distances(const TriplesStructure& r, const TreeMetric& t) {
    auto d = distance_matrix(t);
    const std::size_t n = r.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            const IndexSet& zs = r.closer(a, b);
            for (std::size_t z = 0; z < n; ++z)
                if (zs.test(z) && !(d[a][z] < d[b][z])) return false;
        }
    return true;
}

inline IndexSet set_of(std::size_t n, std::initializer_list<std::size_t> idx) {
    return IndexSet::of(n, idx);
}

} // namespace testutil
