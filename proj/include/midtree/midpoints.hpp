#pragma once

#include <string>
#include <vector>

#include "midtree/ground.hpp"
#include "midtree/indexset.hpp"

namespace midtree {

struct PairViolation {
    std::size_t i = 0, j = 0;
    std::string what;
};

struct ValidationReport {
    bool ok = true;
    std::vector<PairViolation> violations;
};

/// Midpoints structure: each unordered pair {x,y} carries the subset of the
/// ground set lying on the far side of the pair's midpoint, oriented toward
/// the larger element. Axiom: the pair's max is in the set, its min is not.
class MidpointsStructure {
public:
    MidpointsStructure() = default;

    explicit MidpointsStructure(GroundSet ground)
        : ground_(std::move(ground)), mid_(pair_count(ground_.size()), IndexSet(ground_.size())) {}

    static std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

    // Pair index for i < j.
    static std::size_t pair_index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

    const GroundSet& ground() const { return ground_; }
    std::size_t size() const { return ground_.size(); }

    const IndexSet& midpoint(std::size_t i, std::size_t j) const {
        order(i, j);
        return mid_[pair_index(i, j)];
    }

    void set_midpoint(std::size_t i, std::size_t j, IndexSet m) {
        order(i, j);
        if (m.universe_size() != ground_.size())
            throw Error(Err::InvalidInput, "midpoint set over wrong ground size");
        mid_[pair_index(i, j)] = std::move(m);
    }

    bool operator==(const MidpointsStructure& o) const {
        return ground_ == o.ground_ && mid_ == o.mid_;
    }
    bool operator!=(const MidpointsStructure& o) const { return !(*this == o); }

private:
    static void order(std::size_t& i, std::size_t& j) {
        if (i == j) throw Error(Err::InvalidInput, "midpoint of a pair needs distinct elements");
        if (i > j) std::swap(i, j);
    }

    GroundSet ground_;
    std::vector<IndexSet> mid_;
};

/// Checks the max-in/min-out axiom on every pair. Violations are reported,
/// never thrown.
inline ValidationReport validate_midpoints(const MidpointsStructure& m) {
    ValidationReport rep;
    std::size_t n = m.size();
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const IndexSet& mid = m.midpoint(i, j);
            if (!mid.test(j))
                rep.violations.push_back({i, j, "max element not in midpoint set"});
            if (mid.test(i))
                rep.violations.push_back({i, j, "min element in midpoint set"});
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

} // namespace midtree
