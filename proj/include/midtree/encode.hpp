#pragma once

#include <array>
#include <vector>

#include "midtree/combine.hpp"
#include "midtree/midpoints.hpp"
#include "midtree/sat.hpp"
#include "midtree/split.hpp"

namespace midtree {

// ---------------------------------------------------------------------------
// Variable chain structure (two elements per variable plus four end elements).
// ---------------------------------------------------------------------------

inline std::size_t x0_index(int v, int s) { return 2 * v + (s + 1) / 2; }

inline GroundSet variable_ground(int V) {
    if (V < 1) throw Error(Err::Range, "need at least one variable");
    std::vector<std::string> ids;
    for (int v = 0; v <= V + 1; ++v)
        for (int s : {-1, 1}) ids.push_back(variable_id(v, s));
    return GroundSet(std::move(ids));
}

/// Midpoints: the tail set {x_{u,r} : u >= v} exactly for the consecutive
/// pairs (x_{v-1,1}, x_{v,-1}); the singleton of the larger element otherwise.
inline MidpointsStructure build_variable_structure(int V) {
    GroundSet g = variable_ground(V);
    const std::size_t n = g.size();
    MidpointsStructure m(std::move(g));
    auto key = [](std::size_t idx) {  // 2v + s
        int v = static_cast<int>(idx) / 2;
        int s = (idx % 2) ? 1 : -1;
        return 2 * v + s;
    };
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            IndexSet mid(n);
            if (key(i) == key(j)) {
                int v = static_cast<int>(j) / 2;
                for (std::size_t u = x0_index(v, -1); u < n; ++u) mid.set(u);
            } else {
                mid.set(j);
            }
            m.set_midpoint(i, j, std::move(mid));
        }
    return m;
}

// ---------------------------------------------------------------------------
// Clause gadget: 48 elements in four 12-element blocks.
// ---------------------------------------------------------------------------

struct GadgetIndex {
    int c = 1, p = 0, q = 0, e = 0;

    bool operator==(const GadgetIndex& o) const {
        return c == o.c && p == o.p && q == o.q && e == o.e;
    }
};

inline void check_gadget_ranges(int p, int q, int e) {
    if (p < 0 || p > 3 || q < 0 || q > 3 || e < -1 || e > 1)
        throw Error(Err::Range, "gadget coordinates out of range");
}

/// The pairing involution: mate of (p,q,e) is ((p+e) mod 4, (q+e) mod 4, -e).
/// e = 0 elements are fixed; the sum p+q+e is invariant.
inline GadgetIndex gadget_mate(const GadgetIndex& y) {
    check_gadget_ranges(y.p, y.q, y.e);
    return GadgetIndex{y.c, (y.p + y.e + 4) % 4, (y.q + y.e + 4) % 4, -y.e};
}

/// The 12-slot order on (position, side) pairs that drives both the block
/// order and the singleton/doubleton rule.
inline const std::array<std::pair<int, int>, 12>& slot_order() {
    static const std::array<std::pair<int, int>, 12> order = {{{0, 0},
                                                               {1, 0},
                                                               {0, 1},
                                                               {1, -1},
                                                               {2, 0},
                                                               {1, 1},
                                                               {2, -1},
                                                               {3, 0},
                                                               {3, 1},
                                                               {0, -1},
                                                               {2, 1},
                                                               {3, -1}}};
    return order;
}

inline int slot_rank(int k, int e) {
    const auto& order = slot_order();
    for (int r = 0; r < 12; ++r)
        if (order[r].first == k && order[r].second == e) return r;
    throw Error(Err::Range, "bad slot");
}

/// Phase of a block element. Within one block the structure is the 12-slot
/// total order applied to (phase, e); blocks differ by this relabeling, which
/// is what makes the order compatible with the involution.
inline int gadget_phase(int p, int q) { return (p + q) % 4; }

inline int gadget_rank_in_block(int p, int q, int e) {
    return slot_rank(gadget_phase(p, q), e);
}

/// Order position of (p,q,e) inside one clause copy (block-major).
inline int gadget_position(int p, int q, int e) {
    check_gadget_ranges(p, q, e);
    return 12 * p + gadget_rank_in_block(p, q, e);
}

inline GadgetIndex gadget_at_position(int c, int pos) {
    int p = pos / 12;
    auto [k, e] = slot_order()[pos % 12];
    int q = (k - p + 4) % 4;
    return GadgetIndex{c, p, q, e};
}

inline GroundSet clause_ground(int c) {
    std::vector<std::string> ids;
    for (int pos = 0; pos < 48; ++pos) {
        GadgetIndex y = gadget_at_position(c, pos);
        ids.push_back(gadget_id(y.c, y.p, y.q, y.e));
    }
    return GroundSet(std::move(ids));
}

/// The 48-element clause structure. Cross-block midpoints are singletons of
/// the larger element. Within a block, writing k for the phase:
///   singleton  iff rank(k',e') < rank(k,0), or k'=k, e'=0, e=1;
///   doubleton {y, mate(y)} otherwise.
inline MidpointsStructure build_clause_structure(int c) {
    GroundSet g = clause_ground(c);
    MidpointsStructure m(std::move(g));
    for (int jp = 1; jp < 48; ++jp)
        for (int ip = 0; ip < jp; ++ip) {
            GadgetIndex yj = gadget_at_position(c, jp);
            GadgetIndex yi = gadget_at_position(c, ip);
            IndexSet mid(48);
            mid.set(jp);
            if (yi.p == yj.p) {
                int ki = gadget_phase(yi.p, yi.q), kj = gadget_phase(yj.p, yj.q);
                bool singleton = slot_rank(ki, yi.e) < slot_rank(kj, 0) ||
                                 (ki == kj && yi.e == 0 && yj.e == 1);
                if (!singleton) {
                    GadgetIndex mate = gadget_mate(yj);
                    mid.set(gadget_position(mate.p, mate.q, mate.e));
                }
            }
            m.set_midpoint(ip, jp, std::move(mid));
        }
    return m;
}

inline MidpointsStructure build_clause_gadget() { return build_clause_structure(1); }

// ---------------------------------------------------------------------------
// The combining maps and the full encoder.
// ---------------------------------------------------------------------------

/// Image of gadget element (q,e) of clause c among the variable elements.
inline std::size_t clause_map_target(const SatCase& P, int c, int q, int e) {
    if (c < 1 || c > P.C) throw Error(Err::Range, "clause index out of range");
    check_gadget_ranges(0, q, e);
    if (e == 1) return clause_map_target(P, c, (q + 1) % 4, -1);
    if (e == 0) return q < 3 ? x0_index(P.var(c, q), -P.sign(c, q)) : x0_index(0, 1);
    return q < 3 ? x0_index(P.var(c, q), P.sign(c, q)) : x0_index(P.V + 1, 1);
}

/// The map f restricted to one clause copy, into an encoder ground whose
/// prefix is the variable ground.
inline CombineMap build_clause_map(const SatCase& P, int c, const GroundSet& target) {
    GroundSet src = clause_ground(c);
    std::vector<std::size_t> map(48);
    for (int pos = 0; pos < 48; ++pos) {
        GadgetIndex y = gadget_at_position(c, pos);
        map[pos] = clause_map_target(P, c, y.q, y.e);
    }
    return CombineMap(std::move(src), target, std::move(map));
}

/// Sequentially glues one clause copy per clause onto the variable structure.
/// |result| = 2V + 4 + 48C.
inline MidpointsStructure encode_case(const SatCase& P) {
    MidpointsStructure m = build_variable_structure(P.V);
    for (int c = 1; c <= P.C; ++c) {
        MidpointsStructure mc = build_clause_structure(c);
        CombineMap f = build_clause_map(P, c, m.ground());
        m = combine(m, mc, f);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Index arithmetic over the encoder ground, and the named splits.
// ---------------------------------------------------------------------------

/// Element layout of an encoded case: the variable elements first, then one
/// 48-element segment per clause. Also carries the map f as index arithmetic.
class CaseLayout {
public:
    explicit CaseLayout(SatCase P) : P_(std::move(P)) {
        std::vector<std::string> ids;
        for (int v = 0; v <= P_.V + 1; ++v)
            for (int s : {-1, 1}) ids.push_back(variable_id(v, s));
        for (int c = 1; c <= P_.C; ++c)
            for (int pos = 0; pos < 48; ++pos) {
                GadgetIndex y = gadget_at_position(c, pos);
                ids.push_back(gadget_id(y.c, y.p, y.q, y.e));
            }
        ground_ = GroundSet(std::move(ids));
    }

    const SatCase& sat_case() const { return P_; }
    const GroundSet& ground() const { return ground_; }
    std::size_t size() const { return ground_.size(); }
    std::size_t x0_size() const { return 2 * P_.V + 4; }

    std::size_t variable_element(int v, int s) const {
        if (v < 0 || v > P_.V + 1 || (s != -1 && s != 1))
            throw Error(Err::Range, "variable element out of range");
        return x0_index(v, s);
    }

    std::size_t gadget_element(int c, int p, int q, int e) const {
        if (c < 1 || c > P_.C) throw Error(Err::Range, "clause index out of range");
        return x0_size() + 48 * (c - 1) + gadget_position(p, q, e);
    }

    bool is_gadget(std::size_t idx) const { return idx >= x0_size(); }

    GadgetIndex gadget_at(std::size_t idx) const {
        if (!is_gadget(idx)) throw Error(Err::Range, "not a gadget element");
        std::size_t off = idx - x0_size();
        return gadget_at_position(static_cast<int>(off / 48) + 1, static_cast<int>(off % 48));
    }

    /// f, as index arithmetic (identity on the variable prefix).
    std::size_t f(std::size_t idx) const {
        if (!is_gadget(idx)) return idx;
        GadgetIndex y = gadget_at(idx);
        return clause_map_target(P_, y.c, y.q, y.e);
    }

private:
    SatCase P_;
    GroundSet ground_;
};

/// The f-preimage splits around each variable position: the two leaf-side
/// blocks, everything above, everything below. For every v in [1,V] the four
/// blocks partition the ground set.
class VariableSplits {
public:
    explicit VariableSplits(const CaseLayout& layout) : n_(layout.size()), V_(layout.sat_case().V) {
        std::size_t slots = 2 * (V_ + 2);
        block_.assign(slots, IndexSet(n_));
        for (std::size_t idx = 0; idx < n_; ++idx) block_[layout.f(idx)].set(idx);
    }

    int vars() const { return V_; }

    /// f^{-1}{x_{v,s}} as an index set.
    const IndexSet& leaf_block(int v, int s) const { return block_.at(x0_index(v, s)); }

    IndexSet above_set(int v) const {
        IndexSet out(n_);
        for (int u = v + 1; u <= V_ + 1; ++u)
            for (int s : {-1, 1}) out = out | leaf_block(u, s);
        return out;
    }

    IndexSet below_set(int v) const {
        IndexSet out(n_);
        for (int u = 0; u < v; ++u)
            for (int s : {-1, 1}) out = out | leaf_block(u, s);
        return out;
    }

    Split leaf(int v, int s) const { return Split::of(leaf_block(v, s)); }
    Split above(int v) const { return Split::of(above_set(v)); }
    Split below(int v) const { return Split::of(below_set(v)); }

private:
    std::size_t n_;
    int V_;
    std::vector<IndexSet> block_;
};

} // namespace midtree
