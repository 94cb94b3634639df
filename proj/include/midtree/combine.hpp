#pragma once

#include <vector>

#include "midtree/midpoints.hpp"

namespace midtree {

/// Total assignment from a source ground set into a target ground set.
class CombineMap {
public:
    CombineMap() = default;

    CombineMap(GroundSet source, GroundSet target, std::vector<std::size_t> map)
        : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
        if (map_.size() != source_.size())
            throw Error(Err::InvalidInput, "combine map must be total on the source");
        for (std::size_t v : map_)
            if (v >= target_.size()) throw Error(Err::Range, "combine map image outside target");
    }

    const GroundSet& source() const { return source_; }
    const GroundSet& target() const { return target_; }
    std::size_t apply(std::size_t y) const { return map_.at(y); }

private:
    GroundSet source_, target_;
    std::vector<std::size_t> map_;
};

/// Glues a structure on Y onto a structure on X along f : Y -> X. The result
/// lives on X followed by Y (every X element below every Y element):
///   pairs in X pick up the f-preimage of their old midpoint,
///   cross pairs get the singleton {y},
///   pairs in Y keep their old midpoint.
inline MidpointsStructure combine(const MidpointsStructure& m, const MidpointsStructure& n,
                                  const CombineMap& f) {
    if (f.source() != n.ground() || f.target() != m.ground())
        throw Error(Err::InvalidInput, "combine map endpoints do not match the structures");
    if (!validate_midpoints(m).ok || !validate_midpoints(n).ok)
        throw Error(Err::InvalidInput, "combine requires valid structures");

    const std::size_t nx = m.size(), ny = n.size(), nz = nx + ny;
    std::vector<std::string> ids = m.ground().ids();
    for (const auto& id : n.ground().ids()) {
        if (m.ground().contains(id))
            throw Error(Err::Disjointness, "element '" + id + "' appears in both ground sets");
        ids.push_back(id);
    }
    MidpointsStructure out{GroundSet(std::move(ids))};

    auto lift_x = [&](const IndexSet& sx) {
        IndexSet s(nz);
        for (std::size_t a = 0; a < nx; ++a)
            if (sx.test(a)) s.set(a);
        for (std::size_t y = 0; y < ny; ++y)
            if (sx.test(f.apply(y))) s.set(nx + y);
        return s;
    };

    for (std::size_t j = 1; j < nx; ++j)
        for (std::size_t i = 0; i < j; ++i) out.set_midpoint(i, j, lift_x(m.midpoint(i, j)));

    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y) {
            IndexSet s(nz);
            s.set(nx + y);
            out.set_midpoint(x, nx + y, std::move(s));
        }

    for (std::size_t j = 1; j < ny; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const IndexSet& sy = n.midpoint(i, j);
            IndexSet s(nz);
            for (std::size_t y = 0; y < ny; ++y)
                if (sy.test(y)) s.set(nx + y);
            out.set_midpoint(nx + i, nx + j, std::move(s));
        }

    return out;
}

} // namespace midtree
