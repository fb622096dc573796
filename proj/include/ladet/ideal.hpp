// Minor enumeration for mixed ladder determinantal ideals.
//
// I_t(L) = I_{t_1}(L_1) + ... + I_{t_k}(L_k): one batch of t_j x t_j
// minors per one-sided subladder. generators() collects the full batch
// with duplicates merged; candidate_gb() applies the row/column count
// filter that cuts the list down to a Groebner basis of I_t(L) under the
// skew-diagonal order.

#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ladet/ladder.hpp"
#include "ladet/polynomial.hpp"

namespace ladet {

struct MinorSpec {
    std::vector<int> rows;  // strictly increasing
    std::vector<int> cols;  // strictly increasing
    int home_j = 0;         // zero-based index of the certifying subladder

    bool same_support(const MinorSpec& o) const { return rows == o.rows && cols == o.cols; }

    bool operator<(const MinorSpec& o) const {
        if (rows != o.rows) return rows < o.rows;
        return cols < o.cols;
    }
};

inline Polynomial minor_polynomial(const MinorSpec& spec, std::uint32_t p) {
    return generic_minor(spec.rows, spec.cols, p);
}

// Minor of the ladder with the zero convention: if any entry of the
// selected submatrix falls outside L the symbol denotes 0.
inline Polynomial ladder_minor(const Ladder& L, const std::vector<int>& rows,
                               const std::vector<int>& cols, std::uint32_t p) {
    for (int r : rows)
        for (int c : cols)
            if (!L.contains({r, c})) return Polynomial::zero(p);
    return generic_minor(rows, cols, p);
}

namespace detail {

inline void increasing_tuples(int lo, int hi, int len,
                              const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> tup(len);
    struct Rec {
        int hi, len;
        std::vector<int>& tup;
        const std::function<void(const std::vector<int>&)>& emit;
        void run(int from, int depth) {
            if (depth == len) { emit(tup); return; }
            for (int v = from; v <= hi - (len - depth - 1); ++v) {
                tup[depth] = v;
                run(v + 1, depth + 1);
            }
        }
    };
    if (len >= 1 && lo <= hi - len + 1) Rec{hi, len, tup, emit}.run(lo, 0);
}

} // namespace detail

// All t_j x t_j minors fully contained in L_j, in (rows, cols) lex order.
inline std::vector<MinorSpec> enumerate_minors(const Ladder& L, int j) {
    if (j < 0 || j >= L.k()) throw std::out_of_range("subladder index out of range");
    const Cell corner = L.lower_corners()[j];
    const int t = L.sizes()[j];
    std::vector<MinorSpec> out;
    detail::increasing_tuples(1, corner.row, t, [&](const std::vector<int>& rows) {
        detail::increasing_tuples(corner.col, L.n(), t, [&](const std::vector<int>& cols) {
            for (int r : rows)
                for (int c : cols)
                    if (!L.contains({r, c})) return;
            out.push_back({rows, cols, j});
        });
    });
    return out;
}

struct IdealGenerators {
    std::vector<MinorSpec> provenance;
    std::vector<Polynomial> gens;
    std::uint32_t p = kDefaultPrime;
};

// Union over j with duplicate supports merged; the surviving copy keeps
// the smallest certifying j.
inline IdealGenerators generators(const Ladder& L, std::uint32_t p) {
    std::vector<MinorSpec> merged;
    for (int j = 0; j < L.k(); ++j)
        for (const MinorSpec& ms : enumerate_minors(L, j)) {
            bool dup = false;
            for (const MinorSpec& seen : merged)
                if (seen.same_support(ms)) { dup = true; break; }
            if (!dup) merged.push_back(ms);
        }
    std::sort(merged.begin(), merged.end());
    IdealGenerators ig;
    ig.p = p;
    ig.provenance = merged;
    for (const MinorSpec& ms : merged) ig.gens.push_back(minor_polynomial(ms, p));
    return ig;
}

// The candidate Groebner basis G = union of G_j. A minor of L_j survives
// when, for every earlier subladder L_i, fewer than t_i of its rows lie
// in L_i, and for every later L_i with strictly smaller size, fewer than
// t_i of its columns lie in L_i.
//
// Counting rows against all earlier subladders makes a minor contained in
// several L_j appear exactly once, certified by the smallest j. The
// column count is restricted to t_i < t_j: for t_i = t_j it could only
// trigger on that same duplicate, which the row count already handles,
// and for t_i > t_j it cannot trigger at all.
inline std::vector<MinorSpec> candidate_gb_specs(const Ladder& L) {
    const auto& low = L.lower_corners();
    std::vector<MinorSpec> out;
    for (int j = 0; j < L.k(); ++j) {
        for (const MinorSpec& ms : enumerate_minors(L, j)) {
            bool keep = true;
            for (int i = 0; i < j && keep; ++i) {
                int rows_in = 0;
                for (int r : ms.rows)
                    if (r <= low[i].row) ++rows_in;
                if (rows_in >= L.sizes()[i]) keep = false;
            }
            for (int i = j + 1; i < L.k() && keep; ++i) {
                if (L.sizes()[i] >= L.sizes()[j]) continue;
                int cols_in = 0;
                for (int c : ms.cols)
                    if (c >= low[i].col) ++cols_in;
                if (cols_in >= L.sizes()[i]) keep = false;
            }
            if (keep) out.push_back(ms);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Polynomial> candidate_gb(const Ladder& L, std::uint32_t p) {
    std::vector<Polynomial> out;
    for (const MinorSpec& ms : candidate_gb_specs(L)) out.push_back(minor_polynomial(ms, p));
    return out;
}

} // namespace ladet
