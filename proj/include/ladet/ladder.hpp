// Ladders of indeterminates inside an m x n matrix.
//
// A ladder is described by its upper and lower outside corners. The upper
// corners bound it from the top right, the lower corners from the bottom
// left, and membership is the intersection of the two staircase regions:
//
//     x[r,c] in L  <=>  (exists i: b_i <= r, c <= a_i)
//                  and  (exists j: r <= d_j, c_j <= c)
//
// Each lower corner (d_j, c_j) carries a minor size t_j; the one-sided
// subladder L_j is the part of L weakly above-right of that corner. The
// derived constructions here (L', B, L_min, L_max, M, N) are the corner
// manipulations the height, Gorenstein and biliaison computations run on.
//
// Ladders may sit inside a proper submatrix of the ambient grid, and a
// corner's quadrant may be contained in a neighbour's; both situations
// arise for the intermediate ladders of a biliaison chain and are legal.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ladet/cell.hpp"

namespace ladet {

struct Region {
    int i = 0;
    int j = 0;                // 1 <= i <= j <= k
    std::vector<Cell> cells;  // sorted row-major; may be empty
    int t = 1;                // min size over subladders containing the region
};

class Ladder {
public:
    // upper: (b_i, a_i), both coordinates strictly increasing.
    // lower: (d_j, c_j), both coordinates nondecreasing, pairwise distinct.
    // t: one minor size per lower corner.
    Ladder(int m, int n, std::vector<Cell> upper, std::vector<Cell> lower, std::vector<int> t)
        : m_(m), n_(n), upper_(std::move(upper)), lower_(std::move(lower)), t_(std::move(t)) {
        if (m_ < 1 || n_ < 1 || m_ > 64 || n_ > 64)
            throw std::invalid_argument("ambient dimensions out of range");
        if (upper_.empty())
            throw std::invalid_argument("ladder needs at least one upper corner");
        if (lower_.size() != t_.size())
            throw std::invalid_argument("size vector length must match lower corner count");
        for (const Cell& u : upper_)
            if (u.row < 1 || u.row > m_ || u.col < 1 || u.col > n_)
                throw std::invalid_argument("upper corner out of bounds");
        for (std::size_t i = 1; i < upper_.size(); ++i)
            if (upper_[i - 1].row >= upper_[i].row || upper_[i - 1].col >= upper_[i].col)
                throw std::invalid_argument("upper corners must strictly increase in rows and columns");
        for (const Cell& l : lower_)
            if (l.row < 1 || l.row > m_ || l.col < 1 || l.col > n_)
                throw std::invalid_argument("lower corner out of bounds");
        for (std::size_t j = 1; j < lower_.size(); ++j) {
            if (lower_[j - 1].row > lower_[j].row || lower_[j - 1].col > lower_[j].col)
                throw std::invalid_argument("lower corners must be nondecreasing in rows and columns");
            if (lower_[j - 1] == lower_[j])
                throw std::invalid_argument("lower corners must be distinct");
        }
        for (int tj : t_)
            if (tj < 1) throw std::invalid_argument("minor sizes must be positive");
        rebuild_cells();
    }

    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<Cell>& upper_corners() const { return upper_; }
    const std::vector<Cell>& lower_corners() const { return lower_; }
    const std::vector<int>& sizes() const { return t_; }
    int k() const { return static_cast<int>(lower_.size()); }

    // Cells of L, sorted row-major. Empty only for corner lists whose
    // staircases fail to intersect.
    const std::vector<Cell>& cells() const { return cells_; }

    bool contains(const Cell& c) const {
        if (c.row < 1 || c.row > m_ || c.col < 1 || c.col > n_) return false;
        bool under = false;
        for (const Cell& u : upper_)
            if (u.row <= c.row && c.col <= u.col) { under = true; break; }
        if (!under) return false;
        for (const Cell& l : lower_)
            if (c.row <= l.row && l.col <= c.col) return true;
        return false;
    }

    bool in_subladder(int j, const Cell& c) const {
        return c.row <= lower_[j].row && c.col >= lower_[j].col && contains(c);
    }

    // The one-sided ladder L_j, j zero-based. Its upper corners are the
    // slice of this ladder's corners that fall inside the quadrant.
    Ladder subladder(int j) const {
        check_index(j);
        std::vector<Cell> ups;
        for (const Cell& u : upper_)
            if (u.row <= lower_[j].row && u.col >= lower_[j].col) ups.push_back(u);
        if (ups.empty())
            throw std::domain_error("degenerate ladder: subladder has no upper corner");
        return Ladder(m_, n_, ups, {lower_[j]}, {t_[j]});
    }

    bool same_shape(const Ladder& o) const {
        return m_ == o.m_ && n_ == o.n_ && upper_ == o.upper_ && lower_ == o.lower_ && t_ == o.t_;
    }

    // One-sided: one of the two staircases is trivial (a single corner),
    // or all lower corners sit on the first column or all on the last row.
    bool one_sided() const {
        if (upper_.size() == 1 || lower_.size() == 1) return true;
        bool first_col = true, last_row = true;
        for (const Cell& l : lower_) {
            first_col = first_col && l.col == 1;
            last_row = last_row && l.row == m_;
        }
        return first_col || last_row;
    }

private:
    void check_index(int j) const {
        if (j < 0 || j >= k()) throw std::out_of_range("subladder index out of range");
    }

    void rebuild_cells() {
        cells_.clear();
        for (int r = 1; r <= m_; ++r)
            for (int c = 1; c <= n_; ++c)
                if (contains({r, c})) cells_.push_back({r, c});
    }

    int m_, n_;
    std::vector<Cell> upper_;
    std::vector<Cell> lower_;
    std::vector<int> t_;
    std::vector<Cell> cells_;
};

// ---------------------------------------------------------------------
// Minor reachability. A cell of the one-sided ladder L_j is "used" if it
// lies in some t_j x t_j minor of L_j. Rows of a one-sided ladder are
// column intervals, so a row set R admits a minor exactly when the
// intersection of its row intervals is at least t columns wide.

namespace detail {

struct RowSpan {
    int row;
    int lo;
    int hi;
};

inline std::vector<RowSpan> row_spans(const Ladder& L, int j) {
    std::vector<RowSpan> spans;
    const Cell corner = L.lower_corners()[j];
    for (int r = 1; r <= corner.row; ++r) {
        int lo = 0, hi = -1;
        for (int c = std::max(1, corner.col); c <= L.n(); ++c) {
            if (L.contains({r, c})) {
                if (lo == 0) lo = c;
                hi = c;
            }
        }
        if (lo != 0) spans.push_back({r, lo, hi});
    }
    return spans;
}

// Marks every cell of L_j covered by a t_j-minor of L_j.
inline void mark_used(const Ladder& L, int j, std::set<Cell>& used) {
    const int t = L.sizes()[j];
    std::vector<RowSpan> spans = row_spans(L, j);
    if (static_cast<int>(spans.size()) < t) return;
    std::vector<int> pick(t);

    struct Walk {
        const std::vector<RowSpan>& spans;
        int t;
        std::set<Cell>& used;
        std::vector<int>& pick;
        void run(int from, int depth, int lo, int hi) {
            if (hi - lo + 1 < t) return;  // interval can only shrink
            if (depth == t) {
                for (int idx = 0; idx < t; ++idx)
                    for (int c = lo; c <= hi; ++c)
                        used.insert({spans[pick[idx]].row, c});
                return;
            }
            for (int i = from; i <= static_cast<int>(spans.size()) - (t - depth); ++i) {
                pick[depth] = i;
                run(i + 1, depth + 1, std::max(lo, spans[i].lo), std::min(hi, spans[i].hi));
            }
        }
    };
    Walk{spans, t, used, pick}.run(0, 0, 1, L.n());
}

inline std::vector<Cell> used_cells(const Ladder& L) {
    std::set<Cell> used;
    for (int j = 0; j < L.k(); ++j) mark_used(L, j, used);
    return {used.begin(), used.end()};
}

// Upper corners of a cell set: the jump points of the running maximum
// column, scanned top to bottom.
inline std::vector<Cell> staircase_upper(const std::vector<Cell>& cells) {
    std::map<int, int> maxcol;
    for (const Cell& c : cells) {
        auto [it, fresh] = maxcol.insert({c.row, c.col});
        if (!fresh) it->second = std::max(it->second, c.col);
    }
    std::vector<Cell> ups;
    int best = 0;
    for (const auto& [row, mc] : maxcol) {
        if (mc > best) {
            ups.push_back({row, mc});
            best = mc;
        }
    }
    return ups;
}

} // namespace detail

// ---------------------------------------------------------------------
// Validation against the three standing assumptions. Violations are data,
// not exceptions; an empty report means the ladder is admissible.

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline ValidationReport validate(const Ladder& L) {
    ValidationReport rep;

    // Nondegeneracy: every entry lies in some t_j-minor of its L_j, and
    // every subladder admits at least one minor of its size. A subladder
    // with no minor contributes the zero ideal, which sits inside every
    // other region's ideal no matter what the corner inequalities say.
    std::vector<Cell> used = detail::used_cells(L);
    for (const Cell& c : L.cells())
        if (!std::binary_search(used.begin(), used.end(), c))
            rep.violations.push_back("nondeg: entry " + to_string(c) + " lies in no minor");
    for (int j = 0; j < L.k(); ++j) {
        std::set<Cell> probe;
        detail::mark_used(L, j, probe);
        if (probe.empty())
            rep.violations.push_back("nondeg: subladder " + std::to_string(j + 1) + " admits no " +
                                     std::to_string(L.sizes()[j]) + "-minor");
    }

    // Corner distinctness. The constructor enforces these, so violations
    // here can only come from a corrupted value; a one-cell ladder, whose
    // upper corner sits on its lower corner, is fine.
    for (std::size_t a = 0; a < L.lower_corners().size(); ++a)
        for (std::size_t b = a + 1; b < L.lower_corners().size(); ++b)
            if (L.lower_corners()[a] == L.lower_corners()[b])
                rep.violations.push_back("corners: duplicate lower corner at " +
                                         to_string(L.lower_corners()[a]));
    for (std::size_t a = 0; a < L.upper_corners().size(); ++a)
        for (std::size_t b = a + 1; b < L.upper_corners().size(); ++b)
            if (L.upper_corners()[a].row == L.upper_corners()[b].row ||
                L.upper_corners()[a].col == L.upper_corners()[b].col)
                rep.violations.push_back("corners: upper corners share a row or column");

    // The displayed inequalities between consecutive lower corners.
    const auto& low = L.lower_corners();
    const auto& t = L.sizes();
    for (int j = 0; j + 1 < L.k(); ++j) {
        if (!(low[j + 1].row - low[j].row > t[j + 1] - t[j]))
            rep.violations.push_back("assumpt: d_" + std::to_string(j + 2) + "-d_" + std::to_string(j + 1) +
                                     " = " + std::to_string(low[j + 1].row - low[j].row) +
                                     " is not > t_" + std::to_string(j + 2) + "-t_" + std::to_string(j + 1) +
                                     " = " + std::to_string(t[j + 1] - t[j]));
        if (!(low[j + 1].col - low[j].col > t[j] - t[j + 1]))
            rep.violations.push_back("assumpt: c_" + std::to_string(j + 2) + "-c_" + std::to_string(j + 1) +
                                     " = " + std::to_string(low[j + 1].col - low[j].col) +
                                     " is not > t_" + std::to_string(j + 1) + "-t_" + std::to_string(j + 2) +
                                     " = " + std::to_string(t[j] - t[j + 1]));
    }
    return rep;
}

// Deletes every entry not involved in any minor. Corners whose region
// admits no minor are dropped together with their size entry; the
// survivors keep their positions, since a region with any minor has one
// through its own corner.
inline Ladder prune(const Ladder& L) {
    std::vector<Cell> used = detail::used_cells(L);
    if (used.empty()) throw std::domain_error("degenerate ladder: no minor exists");

    std::vector<Cell> lows;
    std::vector<int> ts;
    for (int j = 0; j < L.k(); ++j) {
        std::set<Cell> probe;
        detail::mark_used(L, j, probe);
        if (!probe.empty()) {
            lows.push_back(L.lower_corners()[j]);
            ts.push_back(L.sizes()[j]);
        }
    }
    if (used.size() == L.cells().size() && static_cast<int>(lows.size()) == L.k()) return L;

    Ladder pruned(L.m(), L.n(), detail::staircase_upper(used), lows, ts);
    if (pruned.cells() != used)
        throw std::logic_error("prune: recomputed corners do not reproduce the used cell set");
    return pruned;
}

// ---------------------------------------------------------------------
// Region decomposition L_{i,j} = (L_i \ L_{i-1}) cap (L_j \ L_{j+1}).

inline std::vector<Region> regions(const Ladder& L) {
    const int k = L.k();
    const auto& low = L.lower_corners();
    auto in_Lidx = [&](int idx, const Cell& c) {  // idx zero-based; out of range = empty
        if (idx < 0 || idx >= k) return false;
        return c.row <= low[idx].row && c.col >= low[idx].col;
    };
    std::vector<Region> out;
    for (int i = 1; i <= k; ++i) {
        for (int j = i; j <= k; ++j) {
            Region reg;
            reg.i = i;
            reg.j = j;
            for (const Cell& c : L.cells())
                if (in_Lidx(i - 1, c) && !in_Lidx(i - 2, c) && in_Lidx(j - 1, c) && !in_Lidx(j, c))
                    reg.cells.push_back(c);
            if (reg.cells.empty()) {
                reg.t = 1;
            } else {
                int best = 0;
                for (int l = 0; l < k; ++l) {
                    bool inside = true;
                    for (const Cell& c : reg.cells)
                        if (!in_Lidx(l, c)) { inside = false; break; }
                    if (inside && (best == 0 || L.sizes()[l] < best)) best = L.sizes()[l];
                }
                reg.t = best;
            }
            out.push_back(reg);
        }
    }
    return out;
}

// ---------------------------------------------------------------------
// The deletion set B. In region L_{i,j} the first t_{i,j} - t_{i,j+1}
// columns and the last t_{i,j} - t_{i-1,j} rows are deleted, reading the
// size of a missing or empty neighbour region as 1. With that convention
// the column deletions along a row of the band L_i \ L_{i-1} telescope
// to t_i - 1 and the row deletions along a column of L_j \ L_{j+1}
// telescope to t_j - 1, so in the single-region case B is the first t-1
// columns together with the last t-1 rows. A region's first columns span
// all of its rows and its last rows span all of its columns, so the
// counts are unambiguous.

inline std::vector<Cell> derived_B(const Ladder& L) {
    std::vector<Region> regs = regions(L);
    std::map<std::pair<int, int>, int> tmap;  // empty regions carry t = 1 already
    for (const Region& r : regs) tmap[{r.i, r.j}] = r.t;
    auto t_at = [&](int i, int j) {
        auto it = tmap.find({i, j});
        return it == tmap.end() ? 1 : it->second;
    };

    std::set<Cell> B;
    for (const Region& r : regs) {
        if (r.cells.empty()) continue;
        int del_cols = std::max(0, r.t - t_at(r.i, r.j + 1));
        int del_rows = std::max(0, r.t - t_at(r.i - 1, r.j));

        int min_col = r.cells.front().col, max_row = 0;
        for (const Cell& c : r.cells) {
            min_col = std::min(min_col, c.col);
            max_row = std::max(max_row, c.row);
        }
        for (const Cell& c : r.cells)
            if (c.col <= min_col + del_cols - 1 || c.row >= max_row - del_rows + 1)
                B.insert(c);
    }
    return {B.begin(), B.end()};
}

// ---------------------------------------------------------------------
// L': same upper corners, lower corners shifted to (d_j-t_j+1, c_j+t_j-1).
// Its entry count is the height of I_t(L). Corners whose quadrant leaves
// the grid contribute nothing and are dropped, as are dominated corners;
// L' carries the all-ones size vector. The result can be empty.

inline std::optional<Ladder> derived_Lprime(const Ladder& L) {
    std::vector<Cell> shifted;
    for (int j = 0; j < L.k(); ++j)
        shifted.push_back({L.lower_corners()[j].row - L.sizes()[j] + 1,
                           L.lower_corners()[j].col + L.sizes()[j] - 1});
    std::sort(shifted.begin(), shifted.end());
    std::vector<Cell> lows;
    for (const Cell& s : shifted) {
        if (s.row < 1 || s.col > L.n()) continue;
        bool dominated = false;
        for (const Cell& o : shifted)
            if (!(o == s) && o.row >= s.row && o.col <= s.col) {
                dominated = true;
                break;
            }
        if (!dominated && (lows.empty() || !(lows.back() == s))) lows.push_back(s);
    }
    if (lows.empty()) return std::nullopt;
    return Ladder(L.m(), L.n(), L.upper_corners(), lows, std::vector<int>(lows.size(), 1));
}

inline std::vector<Cell> lprime_cells(const Ladder& L) {
    std::optional<Ladder> lp = derived_Lprime(L);
    if (!lp) return {};
    return lp->cells();
}

// ---------------------------------------------------------------------
// L_min and L_max of the localization argument: each lower border is
// trimmed or padded to make the size vector uniform. L_max may need a
// larger ambient grid; the applied column shift is reported so callers
// can compare against the original coordinates.

struct MinMaxPair {
    Ladder min_ladder;
    Ladder max_ladder;
    int max_col_shift = 0;
};

inline MinMaxPair derived_min_max(const Ladder& L) {
    int t_min = *std::min_element(L.sizes().begin(), L.sizes().end());
    int t_max = *std::max_element(L.sizes().begin(), L.sizes().end());

    std::vector<Cell> min_lows;
    for (int j = 0; j < L.k(); ++j) {
        int delta = L.sizes()[j] - t_min;
        Cell corner{L.lower_corners()[j].row - delta, L.lower_corners()[j].col + delta};
        if (corner.row < 1 || corner.col > L.n() || !L.contains(corner))
            throw std::domain_error("degenerate ladder: L_min corner leaves the ladder");
        min_lows.push_back(corner);
    }
    Ladder lmin(L.m(), L.n(), L.upper_corners(), min_lows, std::vector<int>(L.k(), t_min));

    int shift = 0, grow_m = L.m();
    for (int j = 0; j < L.k(); ++j) {
        int delta = t_max - L.sizes()[j];
        shift = std::max(shift, 1 - (L.lower_corners()[j].col - delta));
        grow_m = std::max(grow_m, L.lower_corners()[j].row + delta);
    }
    std::vector<Cell> max_lows, max_ups;
    for (int j = 0; j < L.k(); ++j) {
        int delta = t_max - L.sizes()[j];
        max_lows.push_back({L.lower_corners()[j].row + delta, L.lower_corners()[j].col - delta + shift});
    }
    for (const Cell& u : L.upper_corners()) max_ups.push_back({u.row, u.col + shift});
    Ladder lmax(grow_m, L.n() + shift, max_ups, max_lows, std::vector<int>(L.k(), t_max));
    return {std::move(lmin), std::move(lmax), shift};
}

// ---------------------------------------------------------------------
// The biliaison ladders M and N. M deletes the last row and first column
// of the i-th lower step and decrements t_i; when the chosen corner
// shares its row or column with a neighbour the construction slides to
// that neighbour, as in the proof. N splits the corner in two and repeats
// the size entry; it is L minus the single entry at the corner.

struct DerivedM {
    Ladder ladder;
    int i_used = 0;  // zero-based index of the corner actually consumed
};

inline int adjust_corner_index(const Ladder& L, int i) {
    const auto& low = L.lower_corners();
    for (int guard = 0; guard <= L.k(); ++guard) {
        if (i > 0 && low[i - 1].row == low[i].row) { i -= 1; continue; }
        if (i + 1 < L.k() && low[i + 1].col == low[i].col) { i += 1; continue; }
        return i;
    }
    throw std::logic_error("corner adjustment did not terminate");
}

inline DerivedM derived_M(const Ladder& L, int i) {
    if (i < 0 || i >= L.k()) throw std::out_of_range("corner index out of range");
    if (L.sizes()[i] < 2) throw std::invalid_argument("derived_M needs t_i >= 2");
    i = adjust_corner_index(L, i);
    if (L.sizes()[i] < 2)
        throw std::logic_error("corner adjustment reached a linear step");

    std::vector<Cell> lows = L.lower_corners();
    lows[i] = {lows[i].row - 1, lows[i].col + 1};
    std::vector<int> ts = L.sizes();
    ts[i] -= 1;
    return {Ladder(L.m(), L.n(), L.upper_corners(), lows, ts), i};
}

struct DerivedN {
    Ladder ladder;
    std::vector<int> tau;
};

inline DerivedN derived_N(const Ladder& L, int i_used) {
    if (i_used < 0 || i_used >= L.k()) throw std::out_of_range("corner index out of range");
    const Cell corner = L.lower_corners()[i_used];
    std::vector<Cell> lows;
    std::vector<int> tau;
    for (int j = 0; j < L.k(); ++j) {
        if (j == i_used) {
            lows.push_back({corner.row - 1, corner.col});
            lows.push_back({corner.row, corner.col + 1});
            tau.push_back(L.sizes()[j]);
            tau.push_back(L.sizes()[j]);
        } else {
            lows.push_back(L.lower_corners()[j]);
            tau.push_back(L.sizes()[j]);
        }
    }
    return {Ladder(L.m(), L.n(), L.upper_corners(), lows, tau), tau};
}

// Reflection along the skew diagonal: rows and columns swap roles and the
// corner lists reverse. Mixed ladder determinantal ideals are stable
// under it, which is the transpose symmetry the Gorenstein tests use.
inline Ladder transposed(const Ladder& L) {
    std::vector<Cell> ups, lows;
    std::vector<int> ts;
    for (auto it = L.upper_corners().rbegin(); it != L.upper_corners().rend(); ++it)
        ups.push_back({L.n() + 1 - it->col, L.m() + 1 - it->row});
    for (int j = L.k() - 1; j >= 0; --j) {
        lows.push_back({L.n() + 1 - L.lower_corners()[j].col, L.m() + 1 - L.lower_corners()[j].row});
        ts.push_back(L.sizes()[j]);
    }
    return Ladder(L.n(), L.m(), ups, lows, ts);
}

} // namespace ladet
