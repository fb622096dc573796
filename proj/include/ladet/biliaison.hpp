// The descending chain of elementary biliaisons.
//
// One step replaces (L, t) by (M, t') with t_i decremented at the chosen
// corner, pivoting on (N, tau) where the corner splits in two and t_i
// repeats. The step is certified by three algebraic checks:
//
//   (a) heights: ht I_t(L) = ht I_{t'}(M) = c and ht I_tau(N) = c - 1,
//       all through the corner count |L'|;
//   (b) containment: every generator of I_tau(N) reduces to zero against
//       the verified bases of I_t(L) and I_{t'}(M), so both varieties are
//       divisors on the pivot;
//   (c) the ratio identity: for index tuples (I, J) and (K, Q), with
//       minors through the corner written big(I,J) and their size-(t-1)
//       companions small(I,J),
//
//           big(I,J) small(K,Q) - big(K,Q) small(I,J)
//
//       reduces to zero against the basis of I_tau(N). A minor symbol
//       whose entries leave the ladder denotes zero, and big(I,J)
//       vanishes that way exactly when small(I,J) does.
//
// Iterating consumes sum(t_j) - k steps and lands on the linear ideal of
// the cells of L', for the L the chain started from.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ladet/groebner.hpp"
#include "ladet/hilbert.hpp"
#include "ladet/ideal.hpp"
#include "ladet/ladder.hpp"

namespace ladet {

struct StepChecks {
    int height_before = 0;
    int height_middle = 0;
    int height_pivot = 0;
    bool heights_ok = false;
    bool containment_ok = false;
    bool paired_vanishing_ok = false;
    bool ratio_ok = false;
    bool budget_exceeded = false;
    bool verified() const {
        return !budget_exceeded && heights_ok && containment_ok && paired_vanishing_ok && ratio_ok;
    }
};

struct BiliaisonStep {
    Ladder before;
    int i_used = 0;  // zero-based corner index actually consumed
    Ladder middle;   // M with t' = t minus one at i_used
    Ladder pivot;    // N with tau = t with the entry repeated
    StepChecks checks;
};

inline std::vector<Polynomial> verified_candidate(const Ladder& L, std::uint32_t p, long budget) {
    std::vector<Polynomial> cand = candidate_gb(L, p);
    if (!cand.empty()) {
        VerifyResult vr = verify_gb(cand, budget);
        if (!vr.ok) throw std::logic_error("candidate basis failed Buchberger verification");
    }
    return cand;
}

inline StepChecks verify_step(const Ladder& L, int i_used, const Ladder& M, const Ladder& N,
                              std::uint32_t p, long budget = kDefaultPairBudget) {
    StepChecks ck;
    ck.height_before = height_combinatorial(L);
    ck.height_middle = height_combinatorial(M);
    ck.height_pivot = height_combinatorial(N);
    ck.heights_ok = ck.height_middle == ck.height_before &&
                    ck.height_pivot == ck.height_before - 1;

    try {
        std::vector<Polynomial> gb_L = verified_candidate(L, p, budget);
        std::vector<Polynomial> gb_M = verified_candidate(M, p, budget);
        std::vector<Polynomial> gb_N = verified_candidate(N, p, budget);

        ck.containment_ok = true;
        for (const Polynomial& g : generators(N, p).gens)
            if (!reduce(g, gb_L).is_zero() || !reduce(g, gb_M).is_zero()) {
                ck.containment_ok = false;
                break;
            }

        const Cell corner = L.lower_corners()[i_used];
        const int t = L.sizes()[i_used];

        // all index tuples 1 <= i_1 < ... < i_{t-1} < d, c < j_1 < ... <= n
        std::vector<std::pair<std::vector<int>, std::vector<int>>> tuples;
        std::vector<std::vector<int>> row_tuples, col_tuples;
        detail::increasing_tuples(1, corner.row - 1, t - 1,
                                  [&](const std::vector<int>& v) { row_tuples.push_back(v); });
        detail::increasing_tuples(corner.col + 1, L.n(), t - 1,
                                  [&](const std::vector<int>& v) { col_tuples.push_back(v); });
        for (const auto& r : row_tuples)
            for (const auto& c : col_tuples) tuples.push_back({r, c});

        std::vector<Polynomial> bigs, smalls;
        ck.paired_vanishing_ok = true;
        for (const auto& [rows, cols] : tuples) {
            std::vector<int> brows = rows, bcols{corner.col};
            brows.push_back(corner.row);
            bcols.insert(bcols.end(), cols.begin(), cols.end());
            Polynomial big = ladder_minor(L, brows, bcols, p);
            Polynomial small = ladder_minor(L, rows, cols, p);
            if (big.is_zero() != small.is_zero()) ck.paired_vanishing_ok = false;
            bigs.push_back(big);
            smalls.push_back(small);
        }

        ck.ratio_ok = true;
        for (std::size_t a = 0; a < tuples.size() && ck.ratio_ok; ++a)
            for (std::size_t b = a + 1; b < tuples.size() && ck.ratio_ok; ++b) {
                Polynomial cross = bigs[a] * smalls[b] - bigs[b] * smalls[a];
                if (!reduce(cross, gb_N).is_zero()) ck.ratio_ok = false;
            }
    } catch (const BudgetExceeded&) {
        ck.budget_exceeded = true;
    }
    return ck;
}

// One elementary biliaison at the smallest corner with t_i >= 2.
inline BiliaisonStep build_step(const Ladder& L, std::uint32_t p, bool verify = true,
                                long budget = kDefaultPairBudget) {
    int start = -1;
    for (int i = 0; i < L.k(); ++i)
        if (L.sizes()[i] >= 2) { start = i; break; }
    if (start < 0) throw std::domain_error("chain complete: all minor sizes are 1");

    DerivedM dm = derived_M(L, start);
    DerivedN dn = derived_N(L, dm.i_used);
    BiliaisonStep step{L, dm.i_used, dm.ladder, dn.ladder, {}};
    if (verify)
        step.checks = verify_step(L, dm.i_used, dm.ladder, dn.ladder, p, budget);
    else {
        step.checks.height_before = height_combinatorial(L);
        step.checks.height_middle = height_combinatorial(dm.ladder);
        step.checks.height_pivot = height_combinatorial(dn.ladder);
        step.checks.heights_ok = step.checks.height_middle == step.checks.height_before &&
                                 step.checks.height_pivot == step.checks.height_before - 1;
    }
    return step;
}

struct BiliaisonChain {
    std::vector<BiliaisonStep> steps;
    std::optional<Ladder> terminal;
    int expected_length = 0;  // sum(t_j) - k of the initial ladder
    bool length_ok = false;
    bool terminal_ok = false;   // terminal cells = cells of L' of the start
    bool all_verified = false;  // every step passed verify_step
};

inline BiliaisonChain build_chain(const Ladder& start, std::uint32_t p, bool verify = true,
                                  long budget = kDefaultPairBudget) {
    BiliaisonChain chain;
    for (int tj : start.sizes()) chain.expected_length += tj - 1;

    Ladder current = start;
    while (true) {
        bool linear = true;
        for (int tj : current.sizes())
            if (tj > 1) { linear = false; break; }
        if (linear) break;
        BiliaisonStep step = build_step(current, p, verify, budget);
        current = step.middle;
        chain.steps.push_back(std::move(step));
        if (static_cast<int>(chain.steps.size()) > chain.expected_length)
            throw std::logic_error("biliaison chain exceeded its expected length");
    }

    chain.terminal = current;
    chain.length_ok = static_cast<int>(chain.steps.size()) == chain.expected_length;
    chain.terminal_ok = current.cells() == lprime_cells(start);
    chain.all_verified = true;
    for (const BiliaisonStep& s : chain.steps)
        chain.all_verified = chain.all_verified && s.checks.verified();
    if (!verify) chain.all_verified = false;
    return chain;
}

} // namespace ladet
