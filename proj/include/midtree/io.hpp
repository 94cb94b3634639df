#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "midtree/midpoints.hpp"
#include "midtree/realization.hpp"
#include "midtree/sat.hpp"
#include "midtree/tree_metric.hpp"
#include "midtree/triples.hpp"

// Line-oriented text formats with exact integers and ratios. Every file
// starts with a self-describing header line naming format and version.

namespace midtree {

namespace io_detail {

inline std::string next_line(std::istream& in, const char* what) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        return line;
    }
    throw Error(Err::Parse, std::string("unexpected end of file while reading ") + what);
}

inline void expect_header(std::istream& in, const std::string& format) {
    std::string line = next_line(in, "header");
    if (line != "midtree " + format + " 1")
        throw Error(Err::Parse, "expected header 'midtree " + format + " 1', got '" + line + "'");
}

inline std::size_t keyed_count(std::istream& in, const std::string& key) {
    std::istringstream ls(next_line(in, key.c_str()));
    std::string word;
    long long count = -1;
    ls >> word >> count;
    if (word != key || count < 0) throw Error(Err::Parse, "expected '" + key + " <count>' line");
    return static_cast<std::size_t>(count);
}

inline GroundSet read_ground(std::istream& in) {
    std::size_t n = keyed_count(in, "elements");
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back(next_line(in, "element id"));
    return GroundSet(std::move(ids));
}

inline void write_ground(std::ostream& out, const GroundSet& g) {
    out << "elements " << g.size() << "\n";
    for (const auto& id : g.ids()) out << id << "\n";
}

} // namespace io_detail

// --- Midpoints structure ----------------------------------------------------
// One record per pair i<j: "i j k m1 ... mk" with sorted member indices.

inline void write_structure(std::ostream& out, const MidpointsStructure& m) {
    out << "midtree structure 1\n";
    io_detail::write_ground(out, m.ground());
    const std::size_t n = m.size();
    out << "pairs " << MidpointsStructure::pair_count(n) << "\n";
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto members = m.midpoint(i, j).indices();
            out << i << " " << j << " " << members.size();
            for (auto z : members) out << " " << z;
            out << "\n";
        }
}

inline MidpointsStructure read_structure(std::istream& in) {
    io_detail::expect_header(in, "structure");
    GroundSet g = io_detail::read_ground(in);
    const std::size_t n = g.size();
    std::size_t pairs = io_detail::keyed_count(in, "pairs");
    if (pairs != MidpointsStructure::pair_count(n))
        throw Error(Err::Parse, "pair count does not match element count");
    MidpointsStructure m{std::move(g)};
    std::vector<char> seen(pairs, 0);
    for (std::size_t r = 0; r < pairs; ++r) {
        std::istringstream ls(io_detail::next_line(in, "pair record"));
        std::size_t i, j, k;
        if (!(ls >> i >> j >> k)) throw Error(Err::Parse, "bad pair record");
        if (i >= j || j >= n) throw Error(Err::Parse, "bad pair indices");
        IndexSet mid(n);
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t z;
            if (!(ls >> z) || z >= n) throw Error(Err::Parse, "bad midpoint member");
            mid.set(z);
        }
        std::size_t pi = MidpointsStructure::pair_index(i, j);
        if (seen[pi]) throw Error(Err::Parse, "duplicate pair record");
        seen[pi] = 1;
        m.set_midpoint(i, j, std::move(mid));
    }
    return m;
}

// --- Triples structure -------------------------------------------------------
// One record per pair i<j: the anchors closer to element i than to element j.

inline void write_triples(std::ostream& out, const TriplesStructure& r) {
    out << "midtree triples 1\n";
    io_detail::write_ground(out, r.ground());
    const std::size_t n = r.size();
    out << "pairs " << MidpointsStructure::pair_count(n) << "\n";
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto members = r.closer(i, j).indices();
            out << i << " " << j << " " << members.size();
            for (auto z : members) out << " " << z;
            out << "\n";
        }
}

inline TriplesStructure read_triples(std::istream& in) {
    io_detail::expect_header(in, "triples");
    GroundSet g = io_detail::read_ground(in);
    const std::size_t n = g.size();
    std::size_t pairs = io_detail::keyed_count(in, "pairs");
    if (pairs != MidpointsStructure::pair_count(n))
        throw Error(Err::Parse, "pair count does not match element count");
    TriplesStructure r{std::move(g)};
    for (std::size_t rec = 0; rec < pairs; ++rec) {
        std::istringstream ls(io_detail::next_line(in, "pair record"));
        std::size_t i, j, k;
        if (!(ls >> i >> j >> k)) throw Error(Err::Parse, "bad pair record");
        if (i >= j || j >= n) throw Error(Err::Parse, "bad pair indices");
        IndexSet closer_i(n);
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t z;
            if (!(ls >> z) || z >= n) throw Error(Err::Parse, "bad anchor index");
            closer_i.set(z);
        }
        r.set_closer(i, j, closer_i);
        r.set_closer(j, i, ~closer_i);
    }
    return r;
}

// --- Tree metric --------------------------------------------------------------
// One record per edge: "k i1 ... ik length", canonical-side member indices and
// the length as an exact integer or integer ratio.

inline void write_tree(std::ostream& out, const TreeMetric& t) {
    out << "midtree tree 1\n";
    io_detail::write_ground(out, t.ground());
    auto edges = t.edges_sorted();
    out << "edges " << edges.size() << "\n";
    for (const auto& [split, len] : edges) {
        auto members = split.side().indices();
        out << members.size();
        for (auto i : members) out << " " << i;
        out << " " << to_string(len) << "\n";
    }
}

inline TreeMetric read_tree(std::istream& in) {
    io_detail::expect_header(in, "tree");
    GroundSet g = io_detail::read_ground(in);
    const std::size_t n = g.size();
    std::size_t edges = io_detail::keyed_count(in, "edges");
    TreeMetric t{std::move(g)};
    for (std::size_t r = 0; r < edges; ++r) {
        std::istringstream ls(io_detail::next_line(in, "edge record"));
        std::size_t k;
        if (!(ls >> k)) throw Error(Err::Parse, "bad edge record");
        IndexSet side(n);
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t i;
            if (!(ls >> i) || i >= n) throw Error(Err::Parse, "bad edge member index");
            side.set(i);
        }
        std::string token;
        if (!(ls >> token)) throw Error(Err::Parse, "missing edge length");
        Rational len = parse_rational(token);
        if (len < 0) throw Error(Err::Parse, "negative edge length");
        Split s = Split::of(std::move(side));
        if (t.has_edge(s)) throw Error(Err::Parse, "duplicate edge record");
        t.set_length(s, len);
    }
    return t;
}

// --- Assignment ---------------------------------------------------------------

inline void write_assignment(std::ostream& out, const Assignment& h) {
    out << "midtree assignment 1\n";
    out << "vars " << h.vars() << "\n";
    for (int v = 1; v <= h.vars(); ++v) out << (v > 1 ? " " : "") << h(v) * v;
    out << "\n";
}

/// Accepts the structured format or a bare signed variable list such as
/// "1 -2 -3 4". Every variable from 1..V must appear exactly once.
inline Assignment read_assignment(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream ss(text);
    std::string first;
    ss >> first;
    std::vector<long> lits;
    if (first == "midtree") {
        std::istringstream structured(text);
        io_detail::expect_header(structured, "assignment");
        std::size_t vars = io_detail::keyed_count(structured, "vars");
        std::istringstream ls(io_detail::next_line(structured, "assignment body"));
        long lit;
        while (ls >> lit) lits.push_back(lit);
        if (lits.size() != vars) throw Error(Err::Parse, "assignment body does not match vars");
    } else {
        std::istringstream all(text);
        long lit;
        while (all >> lit) lits.push_back(lit);
    }
    if (lits.empty()) throw Error(Err::Parse, "empty assignment");
    std::vector<int> signs(lits.size(), 0);
    for (long lit : lits) {
        long v = lit > 0 ? lit : -lit;
        if (v < 1 || v > static_cast<long>(lits.size()))
            throw Error(Err::Parse, "assignment variable out of range");
        if (signs[v - 1] != 0) throw Error(Err::Parse, "assignment repeats a variable");
        signs[v - 1] = lit > 0 ? 1 : -1;
    }
    return Assignment(std::move(signs));
}

// --- Verification report --------------------------------------------------------

inline void write_report(std::ostream& out, const GroundSet& g, const RealizationReport& rep) {
    out << "midtree report 1\n";
    out << "pairs " << rep.pairs_checked << "\n";
    out << (rep.ok ? "ok" : "violated") << " " << rep.violations.size() << "\n";
    for (const auto& v : rep.violations)
        out << "violation " << g.id(v.x) << " " << g.id(v.xp) << " lhs " << to_string(v.lhs)
            << " rhs " << to_string(v.rhs) << " slack " << to_string(v.slack()) << "\n";
}

} // namespace midtree
