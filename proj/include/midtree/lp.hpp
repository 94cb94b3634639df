#pragma once

#include <cstddef>
#include <vector>

#include "midtree/rational.hpp"

namespace midtree {

/// Dense exact-rational simplex for   max c.x  s.t.  M x <= d,  x >= 0
/// with d >= 0, so the slack basis is feasible from the start. Entering
/// columns follow Dantzig's rule (first-by-index among maxima) for a bounded
/// number of pivots, then Bland's rule permanently; the cone subproblems here
/// are fully degenerate, where Bland alone crawls and Dantzig alone may cycle.
class SimplexResult {
public:
    bool unbounded = false;
    Rational value;
    std::vector<Rational> x;     // primal solution (empty when unbounded)
    std::vector<Rational> dual;  // one multiplier per row (empty when unbounded)
    std::vector<Rational> ray;   // improving ray in x-space (unbounded only)
};

inline SimplexResult simplex_max(const std::vector<Rational>& c,
                                 const std::vector<std::vector<Rational>>& M,
                                 const std::vector<Rational>& d) {
    const std::size_t m = M.size();
    const std::size_t nv = c.size();
    const std::size_t cols = nv + m;

    std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        if (d[i] < 0) throw Error(Err::InvalidInput, "simplex_max needs d >= 0");
        for (std::size_t j = 0; j < nv; ++j) tab[i][j] = M[i][j];
        tab[i][nv + i] = 1;
        tab[i][cols] = d[i];
    }
    std::vector<Rational> z(cols + 1, Rational(0));
    for (std::size_t j = 0; j < nv; ++j) z[j] = c[j];
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = nv + i;

    constexpr long kDantzigPivotBudget = 4000;
    long pivots = 0;
    for (;;) {
        std::size_t enter = cols;
        if (pivots < kDantzigPivotBudget) {
            for (std::size_t j = 0; j < cols; ++j)
                if (z[j] > 0 && (enter == cols || z[j] > z[enter])) enter = j;
        } else {
            for (std::size_t j = 0; j < cols; ++j)
                if (z[j] > 0) {
                    enter = j;
                    break;
                }
        }
        if (enter == cols) break;  // optimal

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rational ratio = tab[i][cols] / tab[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) {
            SimplexResult r;
            r.unbounded = true;
            r.ray.assign(nv, Rational(0));
            if (enter < nv) r.ray[enter] = 1;
            for (std::size_t i = 0; i < m; ++i)
                if (basis[i] < nv) r.ray[basis[i]] = -tab[i][enter];
            return r;
        }

        ++pivots;
        Rational piv = tab[leave][enter];
        for (auto& v : tab[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rational f = tab[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        Rational fz = z[enter];
        if (fz != 0)
            for (std::size_t j = 0; j <= cols; ++j) z[j] -= fz * tab[leave][j];
        basis[leave] = enter;
    }

    SimplexResult r;
    r.value = -z[cols];
    r.x.assign(nv, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < nv) r.x[basis[i]] = tab[i][cols];
    r.dual.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) r.dual[i] = -z[nv + i];
    return r;
}

struct StrictFeasibility {
    bool feasible = false;
    std::vector<Rational> lengths;          // witness with every row slack >= 1
    std::vector<std::size_t> certificate;   // row indices of an infeasible subsystem
    std::vector<Rational> certificate_mul;  // Farkas multipliers for those rows
};

/// Decides {A t >= 1 componentwise, t >= 0}. Homogeneity of the underlying
/// strict system makes the unit slack lossless: any t with A t > 0 scales to
/// slack >= 1. Works on a growing active set of rows; each subsystem is
/// decided through its bounded dual
///     max 1.y  s.t.  A_W^T y <= 0, y >= 0,
/// whose unboundedness is a Farkas certificate and whose optimal multipliers
/// are a primal witness. Only rows the current witness fails at zero or below
/// join the active set; rows with small positive slack are handled by the
/// final scaling.
inline StrictFeasibility strict_feasibility(const std::vector<std::vector<Rational>>& rows,
                                            std::size_t nvars, std::size_t batch = 512) {
    StrictFeasibility out;
    std::vector<std::size_t> active;
    std::vector<char> in_active(rows.size(), 0);
    std::vector<Rational> t(nvars, Rational(0));

    for (;;) {
        if (!active.empty()) {
            std::vector<std::vector<Rational>> M(nvars, std::vector<Rational>(active.size()));
            for (std::size_t j = 0; j < active.size(); ++j)
                for (std::size_t v = 0; v < nvars; ++v) M[v][j] = rows[active[j]][v];
            std::vector<Rational> c(active.size(), Rational(1));
            std::vector<Rational> d(nvars, Rational(0));
            SimplexResult res = simplex_max(c, M, d);
            if (res.unbounded) {
                out.feasible = false;
                for (std::size_t j = 0; j < active.size(); ++j)
                    if (res.ray[j] != 0) {
                        out.certificate.push_back(active[j]);
                        out.certificate_mul.push_back(res.ray[j]);
                    }
                return out;
            }
            t = res.dual;
        }

        std::size_t added = 0;
        Rational min_dot;
        bool min_set = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (in_active[i]) continue;
            Rational dot = 0;
            for (std::size_t v = 0; v < nvars; ++v)
                if (rows[i][v] != 0) dot += rows[i][v] * t[v];
            if (dot <= 0) {
                if (added < batch) {
                    active.push_back(i);
                    in_active[i] = 1;
                    ++added;
                }
            } else if (!min_set || dot < min_dot) {
                min_dot = dot;
                min_set = true;
            }
        }
        if (added == 0) {
            if (min_set && min_dot < 1) {
                Rational scale = 1 / min_dot;
                for (auto& v : t) v *= scale;
            }
            out.feasible = true;
            out.lengths = t;
            return out;
        }
    }
}

} // namespace midtree
