// The numerical Gorenstein criterion and its independent h-vector oracle.
//
// The criterion applies to connected ladders whose sizes are all at least
// 2 and which admit no corner split. reduce_components() establishes that
// normal form: it splits disconnected ladders, splits at every corner
// where the two inequalities
//
//     b_{i+1} >= d_j - t_j + 2,   a_i <= c_{j+1} + t_{j+1} - 2
//
// hold, and eliminates size-1 regions by deleting their variables (those
// variables lie in the ideal, so the quotient is unchanged up to a
// polynomial extension). Components that end up with a linear or zero
// ideal are polynomial rings and therefore Gorenstein outright.
//
// The oracle is Stanley's symmetry criterion: the quotient is a graded CM
// domain, so it is Gorenstein exactly when its h-vector is palindromic.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ladet/hilbert.hpp"
#include "ladet/ideal.hpp"
#include "ladet/ladder.hpp"

namespace ladet {

namespace detail {

// Rebuilds a ladder from a cell subset and a slice of the lower corners,
// recomputing the upper staircase. Throws if the corner description does
// not reproduce the cells, which would mean the subset is not a ladder.
inline Ladder from_cells(int m, int n, const std::vector<Cell>& cells,
                         std::vector<Cell> lows, std::vector<int> ts) {
    Ladder built(m, n, staircase_upper(cells), std::move(lows), std::move(ts));
    if (built.cells() != cells)
        throw std::logic_error("component cells do not form a corner-describable ladder");
    return built;
}

// Translates a ladder to a tight ambient grid. The upper corners are
// rebuilt from the cells: the original ones can sit outside the occupied
// bounding box, since they only delimit.
inline Ladder normalized(const Ladder& L) {
    const auto& cs = L.cells();
    if (cs.empty()) throw std::domain_error("cannot normalize an empty ladder");
    int minr = cs.front().row, maxr = cs.front().row;
    int minc = cs.front().col, maxc = cs.front().col;
    for (const Cell& c : cs) {
        minr = std::min(minr, c.row);
        maxr = std::max(maxr, c.row);
        minc = std::min(minc, c.col);
        maxc = std::max(maxc, c.col);
    }
    auto shift = [&](const std::vector<Cell>& v) {
        std::vector<Cell> out;
        for (const Cell& c : v) out.push_back({c.row - minr + 1, c.col - minc + 1});
        return out;
    };
    return from_cells(maxr - minr + 1, maxc - minc + 1, shift(cs), shift(L.lower_corners()),
                      L.sizes());
}

} // namespace detail

// Splits and reductions of the remarks preceding the criterion, applied
// to a fixpoint. Output components are pruned, normalized to a tight
// ambient grid, and either have all sizes >= 2 or are all-ones.
inline std::vector<Ladder> reduce_components(const Ladder& input) {
    std::vector<Ladder> out;
    std::vector<Ladder> queue{prune(input)};

    while (!queue.empty()) {
        Ladder L = detail::normalized(queue.back());
        queue.pop_back();
        const auto& low = L.lower_corners();
        const auto& up = L.upper_corners();
        const auto& t = L.sizes();
        const int k = L.k();
        const int h = static_cast<int>(up.size());

        // a) disconnection between consecutive subladders
        int split_at = -1;
        for (int j = 0; j + 1 < k && split_at < 0; ++j) {
            bool meet = false;
            for (const Cell& c : L.cells())
                if (L.in_subladder(j, c) && L.in_subladder(j + 1, c)) { meet = true; break; }
            if (!meet) split_at = j;
        }
        if (split_at >= 0) {
            for (int side = 0; side < 2; ++side) {
                int lo = side == 0 ? 0 : split_at + 1;
                int hi = side == 0 ? split_at : k - 1;
                std::set<Cell> part;
                for (int j = lo; j <= hi; ++j)
                    for (const Cell& c : L.cells())
                        if (L.in_subladder(j, c)) part.insert(c);
                std::vector<Cell> cells(part.begin(), part.end());
                std::vector<Cell> lows(low.begin() + lo, low.begin() + hi + 1);
                std::vector<int> ts(t.begin() + lo, t.begin() + hi + 1);
                queue.push_back(prune(detail::from_cells(L.m(), L.n(), cells, lows, ts)));
            }
            continue;
        }

        // b) corner split where both displayed inequalities hold
        bool split_done = false;
        for (int i = 0; i + 1 < h && !split_done; ++i) {
            for (int j = 0; j + 1 < k && !split_done; ++j) {
                if (!(up[i + 1].row >= low[j].row - t[j] + 2)) continue;
                if (!(up[i].col <= low[j + 1].col + t[j + 1] - 2)) continue;
                // the two boxes must contain their corner slices
                if (low[j].col > up[i].col || up[i].row > low[j].row) continue;
                if (low[j + 1].row < up[i + 1].row || up[i + 1].col < low[j + 1].col) continue;
                {
                    std::vector<Cell> lows(low.begin(), low.begin() + j + 1);
                    std::vector<int> ts(t.begin(), t.begin() + j + 1);
                    std::vector<Cell> ups(up.begin(), up.begin() + i + 1);
                    queue.push_back(prune(Ladder(low[j].row, up[i].col, ups, lows, ts)));
                }
                {
                    int dr = up[i + 1].row - 1, dc = low[j + 1].col - 1;
                    std::vector<Cell> lows, ups;
                    std::vector<int> ts(t.begin() + j + 1, t.end());
                    for (int l = j + 1; l < k; ++l) lows.push_back({low[l].row - dr, low[l].col - dc});
                    for (int l = i + 1; l < h; ++l) ups.push_back({up[l].row - dr, up[l].col - dc});
                    queue.push_back(prune(Ladder(L.m() - dr, L.n() - dc, ups, lows, ts)));
                }
                split_done = true;
            }
        }
        if (split_done) continue;

        // c) eliminate a size-1 region unless the whole vector is ones:
        // its variables generate a linear piece of the ideal, and the
        // quotient is the mixed ladder ring on the remaining cells
        bool all_ones = *std::max_element(t.begin(), t.end()) == 1;
        int lin = -1;
        for (int j = 0; j < k && lin < 0; ++j)
            if (t[j] == 1 && !all_ones) lin = j;
        if (lin >= 0) {
            std::set<Cell> kill;
            for (const Cell& c : L.cells())
                if (L.in_subladder(lin, c)) kill.insert(c);
            std::vector<Cell> rest;
            for (const Cell& c : L.cells())
                if (!kill.count(c)) rest.push_back(c);
            if (rest.empty()) continue;  // quotient is the base field: Gorenstein, nothing to emit
            std::vector<Cell> lows;
            std::vector<int> ts;
            for (int j = 0; j < k; ++j)
                if (j != lin) {
                    lows.push_back(low[j]);
                    ts.push_back(t[j]);
                }
            Ladder next = detail::from_cells(L.m(), L.n(), rest, lows, ts);
            try {
                queue.push_back(prune(next));
            } catch (const std::domain_error&) {
                // no minor survives: the ideal restricts to zero and the
                // quotient is a polynomial ring, so nothing to emit
            }
            continue;
        }

        out.push_back(L);
    }
    std::sort(out.begin(), out.end(), [](const Ladder& a, const Ladder& b) {
        return a.cells() < b.cells();
    });
    return out;
}

struct ComponentReport {
    explicit ComponentReport(Ladder l) : ladder(std::move(l)) {}

    Ladder ladder;
    bool all_ones = false;  // linear ideal: Gorenstein without conditions
    std::vector<int> J, H, u;  // one-based corner indices
    bool cond1 = true, cond2 = true, cond3 = true;
    bool gorenstein = true;
};

struct GorensteinReport {
    std::vector<ComponentReport> components;
    bool verdict = true;
    std::optional<bool> oracle_verdict;
};

inline ComponentReport evaluate_component(const Ladder& L) {
    ComponentReport rep(L);
    const auto& low = L.lower_corners();
    const auto& up = L.upper_corners();
    const auto& t = L.sizes();
    const int k = L.k();

    if (*std::max_element(t.begin(), t.end()) == 1) {
        rep.all_ones = true;
        return rep;
    }

    std::set<int> HJ;
    for (int j = 0; j + 1 < k; ++j) {
        if (low[j].col + t[j] == low[j + 1].col + t[j + 1]) {
            rep.J.push_back(j + 1);
            HJ.insert(j + 1);
        }
        if (low[j].row - t[j] == low[j + 1].row - t[j + 1]) {
            rep.H.push_back(j + 2);
            HJ.insert(j + 2);
        }
    }
    for (int j = 1; j <= k; ++j)
        if (!HJ.count(j)) rep.u.push_back(j);

    rep.cond1 = (L.m() - t[k - 1] == L.n() - t[0]);
    const auto& u = rep.u;
    for (std::size_t j = 0; j + 1 < u.size(); ++j) {
        int uj = u[j] - 1, uj1 = u[j + 1] - 1, u1 = u[0] - 1;
        if (low[uj1].col - low[uj].row != 2 + t[u1] - t[uj] - t[uj1]) rep.cond2 = false;
    }
    for (std::size_t i = 0; i + 1 < up.size(); ++i)
        if (up[i].col - up[i + 1].row != t[0] - 2) rep.cond3 = false;

    rep.gorenstein = rep.cond1 && rep.cond2 && rep.cond3;
    return rep;
}

inline GorensteinReport ag_criterion(const Ladder& L) {
    GorensteinReport rep;
    for (const Ladder& comp : reduce_components(L)) {
        rep.components.push_back(evaluate_component(comp));
        rep.verdict = rep.verdict && rep.components.back().gorenstein;
    }
    return rep;
}

// Stanley symmetry: palindromic h-vector. Runs on the initial ideal of
// the verified candidate basis.
inline bool symmetry_oracle(const Ladder& L, std::uint32_t p, long budget = kDefaultPairBudget) {
    std::vector<Polynomial> cand = candidate_gb(L, p);
    VerifyResult vr = verify_gb(cand, budget);
    if (!vr.ok)
        throw std::logic_error("symmetry oracle: candidate basis failed verification");
    MonomialIdeal lt = initial_ideal(cand);
    HilbertData hd = hilbert(lt, static_cast<int>(L.cells().size()));
    return palindromic(hd.h_vector);
}

inline GorensteinReport gorenstein_with_oracle(const Ladder& L, std::uint32_t p,
                                               long budget = kDefaultPairBudget) {
    GorensteinReport rep = ag_criterion(L);
    rep.oracle_verdict = symmetry_oracle(L, p, budget);
    return rep;
}

} // namespace ladet
