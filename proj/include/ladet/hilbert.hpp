// Heights, Hilbert series and h-vectors.
//
// Three independent height computations are provided: the corner count
// |L'|, the deletion count |L \ B|, and an exact minimum vertex cover of
// the leading-term ideal. The Hilbert series of a monomial ideal comes
// from the usual pivot-splitting recursion and yields the Krull dimension
// as a fourth route. The acceptance suite requires all four to agree.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ladet/groebner.hpp"
#include "ladet/ladder.hpp"

namespace ladet {

inline int height_combinatorial(const Ladder& L) {
    return static_cast<int>(lprime_cells(L).size());
}

inline int height_B(const Ladder& L) {
    return static_cast<int>(L.cells().size() - derived_B(L).size());
}

// ---------------------------------------------------------------------
// Exact minimum vertex cover (hitting set) of squarefree generators, by
// branch and bound over the variables of a least uncovered generator.

constexpr int kDefaultCoverCap = 24;

inline int height_vertex_cover(const MonomialIdeal& I, int cap = kDefaultCoverCap) {
    std::set<Cell> varset;
    for (const Monomial& g : I.min_gens) {
        if (!g.squarefree())
            throw std::invalid_argument("vertex cover needs squarefree generators");
        for (const auto& f : g.factors()) varset.insert(f.first);
    }
    if (static_cast<int>(varset.size()) > cap)
        throw BudgetExceeded("vertex cover: variable cap exceeded");
    if (I.min_gens.empty()) return 0;

    std::vector<std::vector<Cell>> supports;
    for (const Monomial& g : I.min_gens) {
        std::vector<Cell> s;
        for (const auto& f : g.factors()) s.push_back(f.first);
        supports.push_back(s);
    }

    struct Search {
        const std::vector<std::vector<Cell>>& supports;
        int best;
        std::set<Cell> chosen;

        void run(std::size_t depth) {
            if (static_cast<int>(chosen.size()) >= best) return;
            // first generator not yet hit
            const std::vector<Cell>* open = nullptr;
            for (const auto& s : supports) {
                bool hit = false;
                for (const Cell& v : s)
                    if (chosen.count(v)) { hit = true; break; }
                if (!hit) { open = &s; break; }
            }
            if (!open) {
                best = static_cast<int>(chosen.size());
                return;
            }
            for (const Cell& v : *open) {
                chosen.insert(v);
                run(depth + 1);
                chosen.erase(v);
            }
        }
    };
    Search s{supports, static_cast<int>(varset.size()) + 1, {}};
    s.run(0);
    return s.best;
}

// ---------------------------------------------------------------------
// Hilbert series of R/I for a monomial ideal I in num_vars variables:
// series = numerator(z) / (1-z)^dim after full cancellation.

struct HilbertData {
    std::vector<long long> h_vector;  // numerator coefficients, h_vector[0] = 1
    int dim = 0;                      // Krull dimension of R/I
    long long degree = 0;             // numerator evaluated at 1
    int num_vars = 0;
    int height() const { return num_vars - dim; }
};

namespace detail {

using ZPoly = std::vector<long long>;  // coefficients, index = z-exponent

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

inline ZPoly zp_add(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

inline ZPoly zp_one_minus_z_pow(int d) {
    // (1 - z^d)
    ZPoly r(d + 1, 0);
    r[0] = 1;
    r[d] = -1;
    return r;
}

inline std::string gens_key(const std::vector<Monomial>& gens) {
    std::string key;
    for (const Monomial& m : gens) {
        for (const auto& f : m.factors())
            key += std::to_string(f.first.row) + "," + std::to_string(f.first.col) + "^" +
                   std::to_string(f.second) + " ";
        key += ";";
    }
    return key;
}

// Numerator of the Hilbert series over (1-z)^num_vars. The recursion
// splits on a pivot variable: HS(R/I) = z HS(R/(I:x)) + HS(R/(I+x)),
// and killing a variable contributes one (1-z) factor. Subideals repeat
// across branches, so results are memoized on the canonical generator
// list.
inline ZPoly hilbert_numerator(std::vector<Monomial> gens, std::map<std::string, ZPoly>& memo) {
    MonomialIdeal minimal = minimalize(std::move(gens));
    const std::vector<Monomial>& g = minimal.min_gens;
    if (g.empty()) return {1};
    if (g.front().is_unit()) return {0};  // unit ideal

    std::string key = gens_key(g);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    // frequency of each variable across generators
    std::map<Cell, int> freq;
    for (const Monomial& m : g)
        for (const auto& f : m.factors()) freq[f.first] += 1;
    Cell pivot{};
    int best = 0;
    for (const auto& [v, c] : freq)
        if (c > best) { pivot = v; best = c; }

    if (best <= 1) {
        // pairwise disjoint supports: numerator is the product of (1 - z^deg)
        ZPoly r{1};
        for (const Monomial& m : g) r = zp_mul(r, zp_one_minus_z_pow(m.degree()));
        memo[key] = r;
        return r;
    }

    std::vector<Monomial> colon, plus;
    plus.push_back(Monomial(pivot));
    for (const Monomial& m : g) {
        int e = m.exponent_of(pivot);
        if (e > 0)
            colon.push_back(m / Monomial(pivot));
        else {
            colon.push_back(m);
            plus.push_back(m);
        }
    }
    ZPoly with = hilbert_numerator(std::move(colon), memo);
    ZPoly without = hilbert_numerator(std::move(plus), memo);
    // z * with + without
    ZPoly shifted(with.size() + 1, 0);
    for (std::size_t i = 0; i < with.size(); ++i) shifted[i + 1] = with[i];
    ZPoly result = zp_add(shifted, without);
    memo[key] = result;
    return result;
}

} // namespace detail

inline HilbertData hilbert(const MonomialIdeal& I, int num_vars) {
    std::set<Cell> varset;
    for (const Monomial& m : I.min_gens)
        for (const auto& f : m.factors()) varset.insert(f.first);
    if (static_cast<int>(varset.size()) > num_vars)
        throw std::invalid_argument("hilbert: more variables in generators than num_vars");

    std::map<std::string, detail::ZPoly> memo;
    detail::ZPoly num = detail::hilbert_numerator(I.min_gens, memo);

    // cancel (1-z)^e
    int e = 0;
    auto value_at_one = [](const detail::ZPoly& q) {
        long long s = 0;
        for (long long c : q) s += c;
        return s;
    };
    while (!(num.size() == 1 && num[0] == 0) && value_at_one(num) == 0) {
        // divide by (1-z): q(z) = (1-z) r(z) with r_i = q_0 + ... + q_i
        detail::ZPoly r(num.size() - 1, 0);
        long long acc = 0;
        for (std::size_t i = 0; i + 1 < num.size(); ++i) {
            acc += num[i];
            r[i] = acc;
        }
        num = std::move(r);
        while (num.size() > 1 && num.back() == 0) num.pop_back();
        ++e;
    }

    HilbertData hd;
    hd.h_vector = num;
    hd.num_vars = num_vars;
    hd.dim = num_vars - e;
    hd.degree = value_at_one(num);
    return hd;
}

inline bool palindromic(const std::vector<long long>& v) {
    for (std::size_t i = 0, j = v.size(); i < j; ++i)
        if (v[i] != v[j - 1 - i]) return false;
    return true;
}

} // namespace ladet
