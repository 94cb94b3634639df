#pragma once

#include <vector>

#include "midtree/midpoints.hpp"

namespace midtree {

/// Triples structure: for each anchor z a complete antisymmetric closer-than
/// relation <_z on the other elements. Stored as, for each ordered pair
/// (a,b), the anchor set {z : a <_z b}. The axioms pin the diagonal behavior
/// (a is always closest to itself) and exclusivity; transitivity is not
/// required.
class TriplesStructure {
public:
    TriplesStructure() = default;

    explicit TriplesStructure(GroundSet ground)
        : ground_(std::move(ground)),
          closer_(ground_.size() * ground_.size(), IndexSet(ground_.size())) {}

    const GroundSet& ground() const { return ground_; }
    std::size_t size() const { return ground_.size(); }

    /// Anchors z with a <_z b (a strictly closer to z than b is).
    const IndexSet& closer(std::size_t a, std::size_t b) const {
        return closer_[a * ground_.size() + b];
    }

    void set_closer(std::size_t a, std::size_t b, IndexSet zs) {
        if (a == b) throw Error(Err::InvalidInput, "closer-than relation needs distinct elements");
        if (zs.universe_size() != ground_.size())
            throw Error(Err::InvalidInput, "anchor set over wrong ground size");
        closer_[a * ground_.size() + b] = std::move(zs);
    }

    bool operator==(const TriplesStructure& o) const {
        return ground_ == o.ground_ && closer_ == o.closer_;
    }
    bool operator!=(const TriplesStructure& o) const { return !(*this == o); }

private:
    GroundSet ground_;
    std::vector<IndexSet> closer_;
};

inline ValidationReport validate_triples(const TriplesStructure& r) {
    ValidationReport rep;
    std::size_t n = r.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (r.closer(a, a).any()) rep.violations.push_back({a, a, "irreflexivity (x <_z x set)"});
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            const IndexSet& w = r.closer(a, b);
            if (!w.test(a)) rep.violations.push_back({a, b, "self-closeness (x <_x y missing)"});
            if (a < b) {
                const IndexSet& v = r.closer(b, a);
                if (w.intersects(v))
                    rep.violations.push_back({a, b, "exclusivity (both x <_z y and y <_z x)"});
                if ((w | v).count() != n)
                    rep.violations.push_back({a, b, "completeness (neither x <_z y nor y <_z x)"});
            }
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

/// For y < x and every anchor z: z in m{x,y} puts x closer at z, otherwise y.
inline TriplesStructure to_triples(const MidpointsStructure& m) {
    if (!validate_midpoints(m).ok) throw Error(Err::InvalidInput, "invalid midpoints structure");
    TriplesStructure r(m.ground());
    std::size_t n = m.size();
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const IndexSet& mid = m.midpoint(i, j);
            r.set_closer(j, i, mid);
            r.set_closer(i, j, ~mid);
        }
    }
    return r;
}

/// For x < y: m{x,y} = {z : y <_z x}.
inline MidpointsStructure to_midpoints(const TriplesStructure& r) {
    if (!validate_triples(r).ok) throw Error(Err::InvalidInput, "invalid triples structure");
    MidpointsStructure m(r.ground());
    std::size_t n = r.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) m.set_midpoint(i, j, r.closer(j, i));
    return m;
}

} // namespace midtree
