#include <doctest.h>

#include <algorithm>
#include <set>

#include "ladet/groebner.hpp"
#include "ladet/ideal.hpp"
#include "suite.hpp"

using namespace ladet;

namespace {
constexpr std::uint32_t P = kDefaultPrime;
}

TEST_CASE("minor enumeration counts") {
    Ladder two(2, 2, {{1, 2}}, {{2, 1}}, {2});
    CHECK(enumerate_minors(two, 0).size() == 1);

    Ladder three(3, 3, {{1, 3}}, {{3, 1}}, {2});
    CHECK(enumerate_minors(three, 0).size() == 9);

    const Ladder& L = suite::get("twosided_3x3");
    auto f1 = enumerate_minors(L, 0);
    auto f2 = enumerate_minors(L, 1);
    CHECK(f1.size() == 3);
    CHECK(f2.size() == 3);
    // the shared minor shows up in both batches
    bool shared = false;
    for (const auto& a : f1)
        for (const auto& b : f2)
            if (a.same_support(b)) shared = true;
    CHECK(shared);
}

TEST_CASE("generator lists merge duplicates") {
    Ladder ones(3, 3, {{1, 3}}, {{2, 1}, {3, 2}}, {1, 1});
    CHECK(generators(ones, P).gens.size() == ones.cells().size());

    IdealGenerators ig = generators(suite::get("twosided_3x3"), P);
    CHECK(ig.gens.size() == 5);
    for (std::size_t i = 0; i < ig.gens.size(); ++i)
        CHECK(ig.gens[i] == minor_polynomial(ig.provenance[i], P));
}

TEST_CASE("candidate basis of the two-corner ladder") {
    const Ladder& L = suite::get("twosided_3x3");
    auto specs = candidate_gb_specs(L);
    CHECK(specs.size() == 5);

    // the shared minor is excluded from exactly one batch
    int copies = 0;
    for (const auto& s : specs)
        if (s.rows == std::vector<int>{1, 2} && s.cols == std::vector<int>{2, 3}) ++copies;
    CHECK(copies == 1);

    // its leading terms are the five skew-diagonal quadrics
    std::set<std::string> lts;
    for (const Polynomial& g : candidate_gb(L, P)) {
        CHECK(g.leading_monomial().squarefree());
        lts.insert(to_string(g.leading_monomial()));
    }
    std::set<std::string> expected = {"x[1,2]*x[2,1]", "x[1,3]*x[2,1]", "x[1,3]*x[2,2]",
                                      "x[1,3]*x[3,2]", "x[2,3]*x[3,2]"};
    CHECK(lts == expected);
}

TEST_CASE("one-sided ladders keep every minor") {
    for (const char* name : {"matrix_3x3_t2", "matrix_3x4_t3", "onesided_stair_3x3"}) {
        const Ladder& L = suite::get(name);
        CAPTURE(name);
        CHECK(L.one_sided());
        CHECK(candidate_gb_specs(L).size() == enumerate_minors(L, 0).size());
    }
    CHECK(suite::get("onesided_mixed_4x4").one_sided());
    CHECK(suite::get("twosided_3x3").one_sided());  // a trivial upper boundary suffices
    CHECK_FALSE(suite::get("gorenstein_4x4").one_sided());
    CHECK_FALSE(suite::get("cond3_violator_4x4").one_sided());
}

TEST_CASE("all-ones ladders keep each cell once") {
    Ladder ones(3, 3, {{1, 3}}, {{2, 1}, {3, 2}}, {1, 1});
    auto specs = candidate_gb_specs(ones);
    CHECK(specs.size() == ones.cells().size());
    std::set<Cell> seen;
    for (const auto& s : specs) seen.insert({s.rows[0], s.cols[0]});
    CHECK(seen.size() == specs.size());
}

TEST_CASE("mixed sizes filter by row membership") {
    // 1-minors of the size-1 strip plus the 2-minors clear of it
    const Ladder& L = suite::get("mixed_4x4");
    auto specs = candidate_gb_specs(L);
    int linear = 0, quadratic = 0;
    for (const auto& s : specs) {
        if (s.rows.size() == 1) ++linear;
        if (s.rows.size() == 2) {
            ++quadratic;
            CHECK(s.rows.front() >= 3);  // no row inside the linear strip
        }
    }
    CHECK(linear == 8);
    CHECK(quadratic == 3);
}

TEST_CASE("ladder minors honour the zero convention") {
    const Ladder& L = suite::get("twosided_3x3");
    CHECK(ladder_minor(L, {2, 3}, {1, 2}, P).is_zero());  // uses the missing corner cell
    CHECK_FALSE(ladder_minor(L, {1, 2}, {1, 2}, P).is_zero());
    CHECK(ladder_minor(L, {1, 2}, {1, 2}, P) == generic_minor({1, 2}, {1, 2}, P));
}

TEST_CASE("candidate leading terms are supported inside the ladder") {
    for (const auto& entry : suite::all()) {
        CAPTURE(entry.name);
        for (const Polynomial& g : candidate_gb(entry.ladder, P)) {
            CHECK(g.leading_monomial().squarefree());
            for (const auto& f : g.leading_monomial().factors())
                CHECK(entry.ladder.contains(f.first));
        }
    }
}
