#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ladet/hilbert.hpp"
#include "ladet/ideal.hpp"
#include "suite.hpp"

using namespace ladet;

namespace {

constexpr std::uint32_t P = kDefaultPrime;

MonomialIdeal lt_ideal(const Ladder& L) {
    std::vector<Polynomial> cand = candidate_gb(L, P);
    REQUIRE(verify_gb(cand).ok);
    return initial_ideal(cand);
}

// Brute-force Hilbert function: count degree-d monomials in the given
// variables that no generator divides.
long long hf_brute(const MonomialIdeal& I, const std::vector<Cell>& vars, int d) {
    long long count = 0;
    std::vector<int> exps(vars.size(), 0);
    struct Rec {
        const MonomialIdeal& I;
        const std::vector<Cell>& vars;
        std::vector<int>& exps;
        long long& count;
        void run(std::size_t idx, int remaining) {
            if (idx + 1 == exps.size()) {
                exps[idx] = remaining;
                Monomial m;
                for (std::size_t v = 0; v < vars.size(); ++v)
                    if (exps[v] > 0) m = m * Monomial(vars[v], exps[v]);
                bool divisible = false;
                for (const Monomial& g : I.min_gens)
                    if (g.divides(m)) { divisible = true; break; }
                if (!divisible) ++count;
                return;
            }
            for (int e = 0; e <= remaining; ++e) {
                exps[idx] = e;
                run(idx + 1, remaining - e);
            }
        }
    };
    if (vars.empty()) return d == 0 ? 1 : 0;
    Rec{I, vars, exps, count}.run(0, d);
    return count;
}

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Hilbert function predicted by the computed h-vector and dimension.
long long hf_predicted(const HilbertData& hd, int d) {
    long long s = 0;
    for (std::size_t i = 0; i < hd.h_vector.size(); ++i) {
        int shift = d - static_cast<int>(i);
        if (shift < 0) continue;
        if (hd.dim == 0)
            s += (shift == 0) ? hd.h_vector[i] : 0;
        else
            s += hd.h_vector[i] * binom(hd.dim - 1 + shift, hd.dim - 1);
    }
    return s;
}

} // namespace

TEST_CASE("heights of full matrices") {
    for (const char* name : {"matrix_2x2_t2", "matrix_2x3_t2", "matrix_3x3_t2", "matrix_3x3_t3",
                             "matrix_3x4_t2", "matrix_3x4_t3"}) {
        CAPTURE(name);
        const Ladder& L = suite::get(name);
        int m = L.m(), n = L.n(), t = L.sizes().front();
        CHECK(height_combinatorial(L) == (m - t + 1) * (n - t + 1));
        CHECK(height_B(L) == (m - t + 1) * (n - t + 1));
    }
    CHECK(height_combinatorial(suite::get("twosided_3x3")) == 3);
    CHECK(height_B(suite::get("twosided_3x3")) == 3);

    Ladder ones(3, 3, {{1, 3}}, {{2, 1}, {3, 2}}, {1, 1});
    CHECK(height_combinatorial(ones) == static_cast<int>(ones.cells().size()));
}

TEST_CASE("exact vertex cover") {
    MonomialIdeal one_edge = minimalize({Monomial({1, 2}) * Monomial({2, 1})});
    CHECK(height_vertex_cover(one_edge) == 1);

    MonomialIdeal vars = minimalize({Monomial({1, 1}), Monomial({1, 2}), Monomial({2, 2})});
    CHECK(height_vertex_cover(vars) == 3);

    CHECK(height_vertex_cover(lt_ideal(suite::get("twosided_3x3"))) == 3);

    MonomialIdeal square = minimalize({Monomial({1, 1}, 2)});
    CHECK_THROWS_AS(height_vertex_cover(square), std::invalid_argument);
    CHECK_THROWS_AS(height_vertex_cover(lt_ideal(suite::get("matrix_3x3_t2")), 4), BudgetExceeded);
}

TEST_CASE("hilbert data on known ideals") {
    MonomialIdeal zero;
    HilbertData free_ring = hilbert(zero, 5);
    CHECK(free_ring.h_vector == std::vector<long long>{1});
    CHECK(free_ring.dim == 5);
    CHECK(free_ring.degree == 1);

    MonomialIdeal quadric = minimalize({Monomial({1, 2}) * Monomial({2, 1})});
    HilbertData q = hilbert(quadric, 4);
    CHECK(q.h_vector == std::vector<long long>{1, 1});
    CHECK(q.dim == 3);

    HilbertData seg = hilbert(lt_ideal(suite::get("matrix_3x3_t2")), 9);
    CHECK(seg.dim == 5);
    CHECK(seg.degree == 6);

    HilbertData two_three = hilbert(lt_ideal(suite::get("matrix_2x3_t2")), 6);
    CHECK(two_three.h_vector == std::vector<long long>{1, 2});
    CHECK(two_three.dim == 4);
}

TEST_CASE("hilbert series matches the brute-force count") {
    for (const char* name : {"matrix_2x3_t2", "matrix_3x3_t2", "twosided_3x3", "mixed_4x4"}) {
        CAPTURE(name);
        const Ladder& L = suite::get(name);
        MonomialIdeal I = lt_ideal(L);
        HilbertData hd = hilbert(I, static_cast<int>(L.cells().size()));
        for (int d = 0; d <= 4; ++d)
            CHECK(hf_brute(I, L.cells(), d) == hf_predicted(hd, d));
    }
}

TEST_CASE("four independent heights agree across the suite") {
    for (const auto& entry : suite::all()) {
        CAPTURE(entry.name);
        const Ladder& L = entry.ladder;
        MonomialIdeal I = lt_ideal(L);
        int h1 = height_combinatorial(L);
        int h2 = height_B(L);
        int h3 = height_vertex_cover(I);
        HilbertData hd = hilbert(I, static_cast<int>(L.cells().size()));
        CHECK(h1 == h2);
        CHECK(h2 == h3);
        CHECK(h3 == hd.height());
    }
}

TEST_CASE("h-vectors are nonnegative across the suite") {
    for (const auto& entry : suite::all()) {
        CAPTURE(entry.name);
        HilbertData hd = hilbert(lt_ideal(entry.ladder),
                                 static_cast<int>(entry.ladder.cells().size()));
        for (long long h : hd.h_vector) CHECK(h >= 0);
        CHECK(hd.h_vector.front() == 1);
    }
}
