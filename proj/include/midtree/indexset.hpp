#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace midtree {

/// Packed bit-vector over element indices. Subset and intersection tests are
/// word-parallel; these run in the inner loop of the realization checker.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static IndexSet of(std::size_t n, std::initializer_list<std::size_t> idx) {
        IndexSet s(n);
        for (auto i : idx) s.set(i);
        return s;
    }

    std::size_t universe_size() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    bool is_subset_of(const IndexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const IndexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    IndexSet operator~() const {
        IndexSet r = *this;
        for (auto& w : r.w_) w = ~w;
        r.trim();
        return r;
    }

    IndexSet operator|(const IndexSet& o) const {
        IndexSet r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
        return r;
    }

    IndexSet operator&(const IndexSet& o) const {
        IndexSet r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
        return r;
    }

    IndexSet minus(const IndexSet& o) const {
        IndexSet r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
        return r;
    }

    bool operator==(const IndexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const IndexSet& o) const { return !(*this == o); }

    // Deterministic total order (numeric on the packed words, high word first).
    bool operator<(const IndexSet& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (std::size_t i = w_.size(); i-- > 0;)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    std::size_t hash() const {
        std::size_t h = n_;
        for (auto w : w_) h ^= std::hash<std::uint64_t>()(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (std::uint64_t(1) << (n_ & 63)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct IndexSetHash {
    std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

} // namespace midtree
