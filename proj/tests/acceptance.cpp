// Acceptance suite. Runs every acceptance criterion against the fixed
// ladder suite and prints one PASS/FAIL line per criterion. The first
// argument is the CLI binary, the second the directory of ladder
// documents; both are supplied by the build.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ladet/biliaison.hpp"
#include "ladet/gorenstein.hpp"
#include "ladet/groebner.hpp"
#include "ladet/hilbert.hpp"
#include "ladet/ideal.hpp"
#include "ladet/ladder.hpp"
#include "ladet/reisner.hpp"
#include "suite.hpp"

namespace {

constexpr std::uint32_t P = ladet::kDefaultPrime;

std::string g_cli;
std::string g_data;
int g_failures = 0;

struct Check {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

void report(int number, const std::string& what, const Check& c) {
    if (c.ok) {
        std::cout << "[PASS] criterion " << number << ": " << what << "\n";
    } else {
        std::cout << "[FAIL] criterion " << number << ": " << what << " -- " << c.detail << "\n";
        ++g_failures;
    }
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return res;
}

std::set<std::string> lt_set(const std::vector<ladet::Monomial>& gens) {
    std::set<std::string> s;
    for (const auto& m : gens) s.insert(ladet::to_string(m));
    return s;
}

void criterion_1_groebner() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    c.expect(suite::all().size() >= 12, "suite is too small");
    for (const auto& entry : suite::all()) {
        std::vector<ladet::Polynomial> cand = ladet::candidate_gb(entry.ladder, P);
        ladet::VerifyResult vr = ladet::verify_gb(cand);
        c.expect(vr.ok, entry.name + ": candidate basis failed verification");
        ladet::GroebnerBasis gb = ladet::buchberger(ladet::generators(entry.ladder, P).gens);
        c.expect(lt_set(ladet::initial_ideal(gb).min_gens) ==
                     lt_set(ladet::initial_ideal(cand).min_gens),
                 entry.name + ": completion disagrees on the leading-term ideal");
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 60.0, "runtime over 60 s");
    report(1, "candidate Groebner bases verified; completion agrees (suite of " +
                  std::to_string(suite::all().size()) + ")",
           c);
}

void criterion_2_heights() {
    Check c;
    for (const auto& entry : suite::all()) {
        const ladet::Ladder& L = entry.ladder;
        std::vector<ladet::Polynomial> cand = ladet::candidate_gb(L, P);
        ladet::MonomialIdeal lt = ladet::initial_ideal(cand);
        int h1 = ladet::height_combinatorial(L);
        int h2 = ladet::height_B(L);
        int h3 = ladet::height_vertex_cover(lt);
        int h4 = ladet::hilbert(lt, static_cast<int>(L.cells().size())).height();
        c.expect(h1 == h2 && h2 == h3 && h3 == h4,
                 entry.name + ": heights " + std::to_string(h1) + "/" + std::to_string(h2) + "/" +
                     std::to_string(h3) + "/" + std::to_string(h4));
    }
    for (int m = 2; m <= 4; ++m)
        for (int n = m; n <= 4; ++n)
            for (int t = 1; t <= m; ++t) {
                ladet::Ladder L(m, n, {{1, n}}, {{m, 1}}, {t});
                c.expect(ladet::height_combinatorial(L) == (m - t + 1) * (n - t + 1),
                         "classical formula fails on the full matrix");
                c.expect(ladet::height_B(L) == (m - t + 1) * (n - t + 1),
                         "deletion count fails on the full matrix");
            }
    report(2, "four-way height agreement, classical matrix formula included", c);
}

void criterion_3_cohen_macaulay() {
    Check c;
    int checked = 0;
    for (const auto& entry : suite::all()) {
        const ladet::Ladder& L = entry.ladder;
        std::vector<ladet::Polynomial> cand = ladet::candidate_gb(L, P);
        ladet::MonomialIdeal lt = ladet::initial_ideal(cand);
        int nv = static_cast<int>(L.cells().size());
        if (nv <= ladet::kDefaultReisnerCap) {
            ++checked;
            c.expect(ladet::reisner_cm_check(lt, nv, P), entry.name + ": Reisner check failed");
        }
        ladet::HilbertData hd = ladet::hilbert(lt, nv);
        for (long long h : hd.h_vector)
            c.expect(h >= 0, entry.name + ": negative h-vector entry");
    }
    c.expect(checked >= 10, "too few ladders under the Reisner cap");
    report(3, "Reisner criterion passes (" + std::to_string(checked) +
                  " ladders); h-vectors nonnegative",
           c);
}

void criterion_4_gorenstein() {
    Check c;
    for (const auto& entry : suite::all()) {
        ladet::GorensteinReport rep = ladet::gorenstein_with_oracle(entry.ladder, P);
        c.expect(rep.oracle_verdict.has_value() && rep.verdict == *rep.oracle_verdict,
                 entry.name + ": criterion and oracle disagree");
    }
    c.expect(ladet::ag_criterion(suite::get("matrix_3x3_t2")).verdict,
             "square matrix should be Gorenstein");
    c.expect(!ladet::ag_criterion(suite::get("matrix_2x3_t2")).verdict,
             "non-square matrix should not be Gorenstein");
    c.expect(ladet::ag_criterion(suite::get("twosided_3x3")).verdict,
             "the two-corner ladder should be Gorenstein");

    // at least two ladders violating exactly one of the three conditions
    int single_violators = 0;
    for (const char* name : {"matrix_3x4_t2", "cond2_violator_4x4", "cond3_violator_4x4"}) {
        ladet::GorensteinReport rep = ladet::ag_criterion(suite::get(name));
        if (rep.components.size() != 1) continue;
        const auto& comp = rep.components.front();
        int failed = (comp.cond1 ? 0 : 1) + (comp.cond2 ? 0 : 1) + (comp.cond3 ? 0 : 1);
        if (failed == 1) ++single_violators;
    }
    c.expect(single_violators >= 2, "need two single-condition violators in the suite");
    report(4, "numerical criterion agrees with the h-vector symmetry oracle", c);
}

void criterion_5_biliaison() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    for (const auto& entry : suite::all()) {
        const ladet::Ladder& L = entry.ladder;
        ladet::BiliaisonChain chain = ladet::build_chain(L, P, true);
        int expected = 0;
        for (int t : L.sizes()) expected += t - 1;
        c.expect(static_cast<int>(chain.steps.size()) == expected,
                 entry.name + ": wrong chain length");
        c.expect(chain.terminal_ok, entry.name + ": terminal ideal is not I_1(L')");
        int height = ladet::height_combinatorial(L);
        for (const ladet::BiliaisonStep& s : chain.steps) {
            c.expect(!s.checks.budget_exceeded, entry.name + ": verification budget exceeded");
            c.expect(s.checks.height_before == height && s.checks.height_middle == height &&
                         s.checks.height_pivot == height - 1,
                     entry.name + ": step heights are not c/c/c-1");
            c.expect(s.checks.containment_ok, entry.name + ": pivot containment failed");
            c.expect(s.checks.paired_vanishing_ok, entry.name + ": paired vanishing failed");
            c.expect(s.checks.ratio_ok, entry.name + ": ratio identity failed");
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 300.0, "runtime over 5 minutes");
    report(5, "biliaison chains: length, heights, containments, ratio identity", c);
}

void criterion_6_determinism() {
    Check c;
    const char* commands[] = {"validate", "gb", "height", "hilbert", "gorenstein", "biliaison",
                              "cm-check"};
    for (const auto& entry : suite::all()) {
        for (const char* cmd : commands) {
            std::string args = std::string(cmd) + " " + g_data + "/" + entry.name + ".json";
            CliResult first = run_cli(args);
            CliResult second = run_cli(args);
            c.expect(first.exit_code == second.exit_code && first.out == second.out,
                     entry.name + "/" + cmd + ": output differs between runs");
            if (!c.ok) break;
        }
        if (!c.ok) break;
    }
    report(6, "CLI reports are byte-identical across reruns", c);
}

void criterion_7_negative_controls() {
    Check c;

    // a perturbed candidate must be rejected with a concrete certificate
    std::vector<ladet::Polynomial> broken =
        ladet::candidate_gb(suite::get("matrix_2x3_t2"), P);
    const ladet::Term& tail = broken[1].terms().back();
    broken[1] = broken[1] + ladet::Polynomial(tail.mono, tail.coeff);
    ladet::VerifyResult vr = ladet::verify_gb(broken);
    c.expect(!vr.ok, "perturbed basis was accepted");
    c.expect(vr.first >= 0 && vr.second > vr.first, "no failing pair reported");
    c.expect(!vr.ok && !vr.witness.is_zero(), "no nonzero normal form reported");

    // a hand-edited height expectation must make the height command exit 1
    std::string good = g_data + "/twosided_3x3.json";
    std::ifstream in(good);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string body = buf.str();
    std::string tmp = "acceptance_height_mismatch.json";
    {
        std::ofstream out(tmp);
        std::string patched = body;
        patched.replace(patched.rfind('}'), 1, ", \"expected_height\": 4}");
        out << patched;
    }
    CliResult bad = run_cli("height " + tmp);
    c.expect(bad.exit_code == 1, "height command accepted a wrong expected height");
    {
        std::ofstream out(tmp);
        std::string patched = body;
        patched.replace(patched.rfind('}'), 1, ", \"expected_height\": 3}");
        out << patched;
    }
    CliResult ok = run_cli("height " + tmp);
    c.expect(ok.exit_code == 0, "height command rejected the correct expected height");

    // exit code contract: malformed input is 2, an exhausted budget is 3
    {
        std::ofstream out(tmp);
        out << "{ not json";
    }
    c.expect(run_cli("validate " + tmp).exit_code == 2, "parse error should exit 2");
    c.expect(run_cli("gb --verify --budget 1 " + g_data + "/matrix_3x3_t2.json").exit_code == 3,
             "exhausted budget should exit 3");
    std::remove(tmp.c_str());

    report(7, "negative controls: broken basis rejected, height mismatch exits 1", c);
}

bool suite_matches_documents() {
    for (const auto& entry : suite::all()) {
        CliResult res = run_cli("validate " + g_data + "/" + entry.name + ".json");
        if (res.exit_code != 0) {
            std::cout << "[FAIL] setup: document " << entry.name << " does not validate\n";
            return false;
        }
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <ladet-cli> <data-dir>\n";
        return 2;
    }
    g_cli = argv[1];
    g_data = argv[2];

    if (!suite_matches_documents()) return 1;

    criterion_1_groebner();
    criterion_2_heights();
    criterion_3_cohen_macaulay();
    criterion_4_gorenstein();
    criterion_5_biliaison();
    criterion_6_determinism();
    criterion_7_negative_controls();

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
}
