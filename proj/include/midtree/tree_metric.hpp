#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "midtree/ground.hpp"
#include "midtree/rational.hpp"
#include "midtree/split.hpp"

namespace midtree {

/// Sparse assignment of nonnegative exact-rational lengths to splits.
/// Length attaches to the unoriented edge; canonical storage makes the two
/// orientations the same key. Zero-length entries are permitted (they pin a
/// topology without contributing to any sum).
class TreeMetric {
public:
    TreeMetric() = default;

    explicit TreeMetric(GroundSet ground) : ground_(std::move(ground)) {}

    const GroundSet& ground() const { return ground_; }
    std::size_t size() const { return ground_.size(); }

    void set_length(const Split& s, const Rational& len) {
        if (s.universe_size() != ground_.size())
            throw Error(Err::InvalidInput, "split over wrong ground size");
        if (len < 0) throw Error(Err::Nonnegativity, "negative edge length");
        auto it = index_.find(s);
        if (it != index_.end()) {
            edges_[it->second].second = len;
            return;
        }
        index_.emplace(s, edges_.size());
        edges_.emplace_back(s, len);
    }

    void add_length(const Split& s, const Rational& delta) {
        auto it = index_.find(s);
        if (it == index_.end()) {
            set_length(s, delta);
            return;
        }
        Rational next = edges_[it->second].second + delta;
        if (next < 0) throw Error(Err::Nonnegativity, "negative edge length");
        edges_[it->second].second = next;
    }

    Rational length(const Split& s) const {
        auto it = index_.find(s);
        return it == index_.end() ? Rational(0) : edges_[it->second].second;
    }

    bool has_edge(const Split& s) const { return index_.count(s) > 0; }

    /// All stored edges (including explicit zeros), in deterministic order.
    std::vector<std::pair<Split, Rational>> edges_sorted() const {
        auto out = edges_;
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    /// Positive-length edges in deterministic order.
    std::vector<std::pair<Split, Rational>> support() const {
        std::vector<std::pair<Split, Rational>> out;
        for (const auto& e : edges_)
            if (e.second > 0) out.push_back(e);
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

private:
    GroundSet ground_;
    std::vector<std::pair<Split, Rational>> edges_;
    std::unordered_map<Split, std::size_t, SplitHash> index_;
};

/// Report-carried compatibility check over the positive support.
struct TreeViolation {
    Split a, b;
};

struct TreeReport {
    bool ok = true;
    std::vector<TreeViolation> incompatible;
};

inline TreeReport validate_tree(const TreeMetric& t) {
    TreeReport rep;
    auto sup = t.support();
    for (std::size_t i = 0; i < sup.size(); ++i)
        for (std::size_t j = i + 1; j < sup.size(); ++j)
            if (!is_compatible(sup[i].first, sup[j].first))
                rep.incompatible.push_back({sup[i].first, sup[j].first});
    rep.ok = rep.incompatible.empty();
    return rep;
}

/// Edge interval between two splits, with a closure flag at each end.
struct EdgeInterval {
    Split from, to;
    bool closed_from = true;
    bool closed_to = true;

    static EdgeInterval closed(Split a, Split b) { return {std::move(a), std::move(b), true, true}; }
    static EdgeInterval half_open(Split a, Split b) { return {std::move(a), std::move(b), true, false}; }
    static EdgeInterval open(Split a, Split b) { return {std::move(a), std::move(b), false, false}; }
};

/// Members of the interval among the tree's stored edges plus the endpoints.
/// Membership is unoriented; an open end drops that endpoint edge entirely.
inline std::vector<Split> interval_members(const TreeMetric& t, const EdgeInterval& iv) {
    if (!is_compatible(iv.from, iv.to))
        throw Error(Err::Disconnected, "interval endpoints are incompatible splits");
    std::vector<Split> candidates;
    for (const auto& e : t.edges_sorted()) candidates.push_back(e.first);
    for (const Split& s : {iv.from, iv.to})
        if (!t.has_edge(s)) candidates.push_back(s);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<Split> out;
    for (const Split& u : candidates) {
        if (!iv.closed_from && u == iv.from) continue;
        if (!iv.closed_to && u == iv.to) continue;
        if (lies_between(iv.from, u, iv.to)) out.push_back(u);
    }
    return out;
}

/// Sum of 2 * length over the member edges (each unoriented edge counts for
/// both of its subset orientations). Monotone under interval inclusion.
inline Rational path_sum(const TreeMetric& t, const EdgeInterval& iv) {
    Rational sum = 0;
    for (const Split& u : interval_members(t, iv)) sum += 2 * t.length(u);
    return sum;
}

inline Rational leaf_distance(const TreeMetric& t, std::size_t x, std::size_t y) {
    if (x == y) return Rational(0);
    std::size_t n = t.size();
    EdgeInterval iv = EdgeInterval::closed(Split::leaf(n, x), Split::leaf(n, y));
    return path_sum(t, iv) / 2;
}

} // namespace midtree
