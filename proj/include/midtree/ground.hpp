#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "midtree/errors.hpp"

namespace midtree {

/// A finite totally ordered element set. The order is the storage order;
/// index 0 is the least element.
class GroundSet {
public:
    GroundSet() = default;

    explicit GroundSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
        if (ids_.size() < 2) throw Error(Err::InvalidInput, "ground set needs at least 2 elements");
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            if (ids_[i].empty()) throw Error(Err::InvalidInput, "empty element identifier");
            auto [it, fresh] = index_.emplace(ids_[i], i);
            (void)it;
            if (!fresh) throw Error(Err::InvalidInput, "duplicate element identifier '" + ids_[i] + "'");
        }
    }

    std::size_t size() const { return ids_.size(); }
    const std::string& id(std::size_t i) const { return ids_.at(i); }
    const std::vector<std::string>& ids() const { return ids_; }

    std::size_t index(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw Error(Err::InvalidInput, "unknown element '" + id + "'");
        return it->second;
    }

    bool contains(const std::string& id) const { return index_.count(id) > 0; }

    bool operator==(const GroundSet& o) const { return ids_ == o.ids_; }
    bool operator!=(const GroundSet& o) const { return !(*this == o); }

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Canonical renderings for the structured elements of the reduction.
// Variable elements are "x{v},{s}", clause elements "x{c},{p},{q},{e}".
inline std::string variable_id(int v, int s) {
    return "x" + std::to_string(v) + "," + std::to_string(s);
}

inline std::string gadget_id(int c, int p, int q, int e) {
    return "x" + std::to_string(c) + "," + std::to_string(p) + "," + std::to_string(q) + "," +
           std::to_string(e);
}

} // namespace midtree
