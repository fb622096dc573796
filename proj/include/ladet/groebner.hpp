// Polynomial reduction, S-pairs, Buchberger completion and verification.
//
// Everything here is deterministic: divisor selection walks the basis in
// index order, the pair queue is ordered by the lcm monomial, and the
// completed basis comes back monic, reduced and sorted. Completion and
// verification both count pair reductions against a budget and fail
// loudly rather than returning a wrong answer.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ladet/polynomial.hpp"

namespace ladet {

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

constexpr long kDefaultPairBudget = 100000;

// Full normal form: repeatedly cancel the top reducible term against the
// first basis element whose leading monomial divides it; terms with no
// divisor move to the remainder.
inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
    Polynomial rem(f.modulus());
    Polynomial work = f;
    while (!work.is_zero()) {
        const Term lt = work.leading_term();
        bool reduced = false;
        for (const Polynomial& g : basis) {
            if (g.is_zero()) throw std::invalid_argument("reduction against zero polynomial");
            if (g.leading_monomial().divides(lt.mono)) {
                Monomial q = lt.mono / g.leading_monomial();
                Fp c = lt.coeff / g.leading_term().coeff;
                work = work - g.times_term(q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem = rem + Polynomial(lt.mono, lt.coeff);
            work = work - Polynomial(lt.mono, lt.coeff);
        }
    }
    return rem;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of zero");
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.times_term(l / f.leading_monomial(), f.leading_term().coeff.inverse());
    Polynomial b = g.times_term(l / g.leading_monomial(), g.leading_term().coeff.inverse());
    return a - b;
}

struct VerifyResult {
    bool ok = true;
    // Failing pair, as indices into the candidate list, with the nonzero
    // normal form of its S-polynomial.
    int first = -1;
    int second = -1;
    Polynomial witness{kDefaultPrime};
};

// Buchberger's criterion, with the coprimality shortcut. Pairs are
// checked in index order.
inline VerifyResult verify_gb(const std::vector<Polynomial>& candidate,
                              long budget = kDefaultPairBudget) {
    long spent = 0;
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        for (std::size_t j = i + 1; j < candidate.size(); ++j) {
            if (coprime(candidate[i].leading_monomial(), candidate[j].leading_monomial()))
                continue;
            if (++spent > budget) throw BudgetExceeded("verify_gb: pair budget exceeded");
            Polynomial nf = reduce(s_polynomial(candidate[i], candidate[j]), candidate);
            if (!nf.is_zero())
                return {false, static_cast<int>(i), static_cast<int>(j), nf};
        }
    }
    return {};
}

struct GroebnerBasis {
    std::vector<Polynomial> basis;  // monic, reduced, sorted by ascending leading monomial
    bool verified = false;
    long pair_reductions = 0;
};

// Buchberger completion with the normal pair-selection strategy (smallest
// lcm first) and the coprimality and chain criteria.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                                long budget = kDefaultPairBudget) {
    if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
    const std::uint32_t p = gens.front().modulus();

    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) throw std::invalid_argument("buchberger: all generators are zero");

    struct Pair {
        Monomial l;
        std::size_t i, j;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        auto c = mono_compare(a.l, b.l);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            queue.push_back({lcm(basis[i].leading_monomial(), basis[j].leading_monomial()), i, j});
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            queue.push_back({lcm(basis[i].leading_monomial(), basis[j].leading_monomial()), i, j});
    std::sort(queue.begin(), queue.end(), pair_less);

    long spent = 0;
    while (!queue.empty()) {
        Pair pr = queue.front();
        queue.erase(queue.begin());
        done.insert({pr.i, pr.j});

        if (coprime(basis[pr.i].leading_monomial(), basis[pr.j].leading_monomial()))
            continue;
        // chain criterion: some h with LT(h) | lcm and both (i,h), (h,j) settled
        bool chained = false;
        for (std::size_t h = 0; h < basis.size() && !chained; ++h) {
            if (h == pr.i || h == pr.j) continue;
            if (!basis[h].leading_monomial().divides(pr.l)) continue;
            auto key = [](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (done.count(key(pr.i, h)) && done.count(key(h, pr.j))) chained = true;
        }
        if (chained) continue;

        if (++spent > budget) throw BudgetExceeded("buchberger: pair budget exceeded");
        Polynomial nf = reduce(s_polynomial(basis[pr.i], basis[pr.j]), basis);
        if (!nf.is_zero()) {
            basis.push_back(nf.monic());
            push_pairs_for(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose leading monomial another divides
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // reduce tails against the rest
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = reduce(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return mono_less(a.leading_monomial(), b.leading_monomial());
    });

    GroebnerBasis gb;
    gb.basis = std::move(reduced);
    gb.pair_reductions = spent;
    gb.verified = true;  // completion terminates only when every pair reduces to zero
    (void)p;
    return gb;
}

struct MonomialIdeal {
    std::vector<Monomial> min_gens;  // sorted ascending, none divides another
};

inline MonomialIdeal minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), mono_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> keep;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && gens[j].divides(gens[i]) && gens[j] != gens[i]) redundant = true;
        if (!redundant) keep.push_back(gens[i]);
    }
    return {keep};
}

inline MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
    if (!gb.verified) throw std::invalid_argument("initial ideal of an unverified basis");
    std::vector<Monomial> lts;
    for (const Polynomial& g : gb.basis) lts.push_back(g.leading_monomial());
    return minimalize(std::move(lts));
}

inline MonomialIdeal initial_ideal(const std::vector<Polynomial>& verified_basis) {
    std::vector<Monomial> lts;
    for (const Polynomial& g : verified_basis) lts.push_back(g.leading_monomial());
    return minimalize(std::move(lts));
}

} // namespace ladet
