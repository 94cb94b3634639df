#pragma once

#include <random>
#include <string>
#include <thread>
#include <vector>

#include "midtree/oracle.hpp"

namespace midtree {

inline GroundSet plain_ground(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("e" + std::to_string(i));
    return GroundSet(std::move(ids));
}

/// Number of legal structures on n elements: each pair leaves n-2 free
/// membership bits.
inline std::uint64_t structure_space_size(std::size_t n) {
    std::uint64_t per_pair = std::uint64_t(1) << (n - 2);
    std::uint64_t total = 1;
    for (std::size_t p = 0; p < MidpointsStructure::pair_count(n); ++p) total *= per_pair;
    return total;
}

/// The code-th structure in the deterministic enumeration of all legal
/// structures on n elements.
inline MidpointsStructure structure_from_code(const GroundSet& g, std::uint64_t code) {
    const std::size_t n = g.size();
    MidpointsStructure m{g};
    const std::uint64_t per_pair = std::uint64_t(1) << (n - 2);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            std::uint64_t bits = code % per_pair;
            code /= per_pair;
            IndexSet mid(n);
            mid.set(j);
            std::size_t b = 0;
            for (std::size_t z = 0; z < n; ++z) {
                if (z == i || z == j) continue;
                if ((bits >> b) & 1) mid.set(z);
                ++b;
            }
            m.set_midpoint(i, j, std::move(mid));
        }
    return m;
}

/// Uniform over the legal midpoint sets of every pair, independently; covers
/// non-realizable structures as well.
inline MidpointsStructure random_structure(const GroundSet& g, std::mt19937_64& rng) {
    const std::size_t n = g.size();
    MidpointsStructure m{g};
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            IndexSet mid(n);
            mid.set(j);
            for (std::size_t z = 0; z < n; ++z) {
                if (z == i || z == j) continue;
                if (rng() & 1) mid.set(z);
            }
            m.set_midpoint(i, j, std::move(mid));
        }
    return m;
}

struct CensusRow {
    std::size_t n = 0;
    std::uint64_t examined = 0;
    std::uint64_t realizable = 0;
};

/// Exhaustive realizability census over every legal structure on n elements.
/// Cells are independent; results merge by count, so the worker split does
/// not affect the output.
inline CensusRow exhaustive_census(std::size_t n, unsigned jobs = 1) {
    const std::uint64_t total = structure_space_size(n);
    GroundSet g = plain_ground(n);
    auto topologies = n >= 3 ? enumerate_topologies(n) : std::vector<Topology>{};
    auto realizable = [&](std::uint64_t code) {
        MidpointsStructure m = structure_from_code(g, code);
        if (n == 2) return brute_realizable(m).realizable;
        for (const Topology& topo : topologies)
            if (strict_feasible(topo, m).realizable) return true;
        return false;
    };

    CensusRow row{n, total, 0};
    if (jobs <= 1) {
        for (std::uint64_t code = 0; code < total; ++code)
            if (realizable(code)) ++row.realizable;
        return row;
    }
    std::vector<std::uint64_t> counts(jobs, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            for (std::uint64_t code = w; code < total; code += jobs)
                if (realizable(code)) ++counts[w];
        });
    for (auto& th : pool) th.join();
    for (auto c : counts) row.realizable += c;
    return row;
}

/// Sampled census for sizes where exhaustion is out of reach.
inline CensusRow sampled_census(std::size_t n, std::uint64_t samples, std::uint64_t seed) {
    GroundSet g = plain_ground(n);
    std::mt19937_64 rng(seed);
    CensusRow row{n, samples, 0};
    for (std::uint64_t s = 0; s < samples; ++s)
        if (brute_realizable(random_structure(g, rng)).realizable) ++row.realizable;
    return row;
}

} // namespace midtree
