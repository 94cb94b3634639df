#pragma once

#include "midtree/errors.hpp"
#include "midtree/indexset.hpp"

namespace midtree {

/// An unoriented bipartition of the ground set, stored canonically as the
/// side that does not contain element 0. The trivial split is rejected.
class Split {
public:
    Split() = default;

    static Split of(IndexSet side) {
        std::size_t n = side.universe_size();
        if (side.none() || side.count() == n)
            throw Error(Err::InvalidInput, "trivial split");
        if (side.test(0)) side = ~side;
        Split s;
        s.side_ = std::move(side);
        return s;
    }

    static Split leaf(std::size_t n, std::size_t x) {
        IndexSet s(n);
        s.set(x);
        return of(std::move(s));
    }

    /// The canonical side (never contains element 0).
    const IndexSet& side() const { return side_; }
    IndexSet other_side() const { return ~side_; }
    std::size_t universe_size() const { return side_.universe_size(); }

    /// The orientation of this split containing element x.
    IndexSet side_containing(std::size_t x) const {
        return side_.test(x) ? side_ : ~side_;
    }

    bool operator==(const Split& o) const { return side_ == o.side_; }
    bool operator!=(const Split& o) const { return !(*this == o); }
    bool operator<(const Split& o) const { return side_ < o.side_; }

    std::size_t hash() const { return side_.hash(); }

private:
    IndexSet side_;
};

struct SplitHash {
    std::size_t operator()(const Split& s) const { return s.hash(); }
};

/// True iff some pair of opposite sides is disjoint; pairwise compatibility
/// is what lets a split system embed in one tree.
inline bool is_compatible(const Split& a, const Split& b) {
    if (a.universe_size() != b.universe_size())
        throw Error(Err::InvalidInput, "splits over different ground sets");
    const IndexSet& sa = a.side();
    const IndexSet& sb = b.side();
    if (!sa.intersects(sb)) return true;       // A ∩ B = ∅
    if (sa.is_subset_of(sb)) return true;      // A ⊆ B
    if (sb.is_subset_of(sa)) return true;      // B ⊆ A
    IndexSet un = sa | sb;                     // A ∪ B = X, i.e. complements disjoint
    return un.count() == un.universe_size();
}

/// The chain condition: U lies between S and T if some orientation of U is
/// sandwiched between orientations of S and T.
inline bool lies_between(const Split& s, const Split& u, const Split& t) {
    const IndexSet ss = s.side();
    const IndexSet sc = s.other_side();
    const IndexSet ts = t.side();
    const IndexSet tc = t.other_side();
    for (IndexSet const& uu : {u.side(), u.other_side()}) {
        bool lower = ss.is_subset_of(uu) || sc.is_subset_of(uu);
        if (!lower) continue;
        if (uu.is_subset_of(ts) || uu.is_subset_of(tc)) return true;
    }
    return false;
}

/// The relation S:T:U (T on every tree path between edges S and U).
inline bool betweenness(const Split& s, const Split& t, const Split& u) {
    return lies_between(s, t, u);
}

} // namespace midtree
