// Command line front end.
//
// Reads a JSON ladder document, runs one computation, writes a JSON
// report to stdout and a short summary to stderr. Reports are
// deterministic: the same document produces byte-identical output.
//
// Exit codes: 0 success, 1 mathematical check failure, 2 input error,
// 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ladet/biliaison.hpp"
#include "ladet/gorenstein.hpp"
#include "ladet/groebner.hpp"
#include "ladet/hilbert.hpp"
#include "ladet/ideal.hpp"
#include "ladet/ladder.hpp"
#include "ladet/ladder_json.hpp"
#include "ladet/reisner.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Options {
    std::string file;
    bool verify = false;
    bool oracle = false;
    std::optional<std::uint64_t> prime;
    std::optional<long> budget;
};

ladet::LadderDocument load(const Options& opt) {
    std::ifstream in(opt.file);
    if (!in) throw ladet::DocumentError("cannot open " + opt.file);
    nlohmann::json raw;
    try {
        raw = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ladet::DocumentError(std::string("JSON parse error: ") + e.what());
    }
    ladet::LadderDocument doc = ladet::parse_document(raw);
    if (opt.prime) doc.field_prime = ladet::checked_prime(*opt.prime);
    if (opt.budget) doc.buchberger_budget = *opt.budget;
    return doc;
}

void emit(const ordered_json& report, const std::string& summary) {
    std::cout << report.dump(2) << "\n";
    std::cerr << summary << "\n";
}

ordered_json base_report(const char* command, const ladet::LadderDocument& doc) {
    ordered_json j;
    j["command"] = command;
    j["field_prime"] = doc.field_prime;
    j["budgets"] = {{"buchberger", doc.buchberger_budget},
                    {"cover_cap", doc.cover_cap},
                    {"reisner_cap", doc.reisner_cap}};
    return j;
}

// Commands other than `validate` refuse inadmissible ladders up front.
class InvalidLadder : public std::runtime_error {
public:
    explicit InvalidLadder(std::vector<std::string> violations)
        : std::runtime_error("ladder fails validation"), violations(std::move(violations)) {}
    std::vector<std::string> violations;
};

ladet::Ladder checked_ladder(const ladet::LadderDocument& doc) {
    try {
        ladet::Ladder L = doc.to_ladder();
        ladet::ValidationReport vr = ladet::validate(L);
        if (!vr.ok()) throw InvalidLadder(vr.violations);
        return L;
    } catch (const std::invalid_argument& e) {
        throw InvalidLadder({std::string("structure: ") + e.what()});
    }
}

int cmd_validate(const Options& opt) {
    ladet::LadderDocument doc = load(opt);
    ordered_json rep = base_report("validate", doc);
    try {
        ladet::Ladder L = doc.to_ladder();
        ladet::ValidationReport vr = ladet::validate(L);
        rep["ok"] = vr.ok();
        rep["violations"] = vr.violations;
        rep["normalized"] = ladet::ladder_json(L);
        rep["cells"] = L.cells().size();
        emit(rep, vr.ok() ? "ok" : "invalid: " + std::to_string(vr.violations.size()) + " violation(s)");
        return vr.ok() ? kExitOk : kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        rep["ok"] = false;
        rep["violations"] = {std::string("structure: ") + e.what()};
        emit(rep, std::string("invalid: ") + e.what());
        return kExitCheckFailed;
    }
}

int cmd_gb(const Options& opt) {
    ladet::LadderDocument doc = load(opt);
    ladet::Ladder L = checked_ladder(doc);
    ordered_json rep = base_report("gb", doc);
    std::vector<ladet::MinorSpec> specs = ladet::candidate_gb_specs(L);
    std::vector<ladet::Polynomial> basis = ladet::candidate_gb(L, doc.field_prime);
    rep["basis_size"] = basis.size();
    ordered_json lts = ordered_json::array();
    for (const auto& g : basis) lts.push_back(ladet::to_string(g.leading_monomial()));
    rep["leading_terms"] = lts;
    if (opt.verify) {
        ladet::VerifyResult vr = ladet::verify_gb(basis, doc.buchberger_budget);
        rep["verified"] = vr.ok;
        if (!vr.ok) {
            rep["certificate"] = {{"pair", {vr.first, vr.second}},
                                  {"normal_form", ladet::to_string(vr.witness)}};
            emit(rep, "candidate basis FAILED verification");
            return kExitCheckFailed;
        }
    }
    emit(rep, "basis size " + std::to_string(basis.size()) +
                  (opt.verify ? ", verified" : ""));
    return kExitOk;
}

int cmd_height(const Options& opt) {
    ladet::LadderDocument doc = load(opt);
    ladet::Ladder L = checked_ladder(doc);
    ordered_json rep = base_report("height", doc);

    int h_lprime = ladet::height_combinatorial(L);
    int h_b = ladet::height_B(L);
    std::vector<ladet::Polynomial> basis = ladet::candidate_gb(L, doc.field_prime);
    ladet::VerifyResult vr = ladet::verify_gb(basis, doc.buchberger_budget);
    if (!vr.ok) throw std::logic_error("candidate basis failed verification");
    ladet::MonomialIdeal lt = ladet::initial_ideal(basis);
    int h_cover = ladet::height_vertex_cover(lt, doc.cover_cap);
    ladet::HilbertData hd = ladet::hilbert(lt, static_cast<int>(L.cells().size()));
    int h_hilbert = hd.height();

    rep["height_lprime"] = h_lprime;
    rep["height_b"] = h_b;
    rep["height_cover"] = h_cover;
    rep["height_hilbert"] = h_hilbert;
    bool agree = h_lprime == h_b && h_b == h_cover && h_cover == h_hilbert;
    rep["agree"] = agree;
    if (doc.expected_height) {
        rep["expected_height"] = *doc.expected_height;
        rep["expected_match"] = agree && *doc.expected_height == h_lprime;
    }
    bool ok = agree && (!doc.expected_height || *doc.expected_height == h_lprime);
    emit(rep, ok ? "height " + std::to_string(h_lprime)
                 : "HEIGHT DISAGREEMENT: " + std::to_string(h_lprime) + "/" + std::to_string(h_b) +
                       "/" + std::to_string(h_cover) + "/" + std::to_string(h_hilbert));
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_hilbert(const Options& opt) {
    ladet::LadderDocument doc = load(opt);
    ladet::Ladder L = checked_ladder(doc);
    ordered_json rep = base_report("hilbert", doc);
    std::vector<ladet::Polynomial> basis = ladet::candidate_gb(L, doc.field_prime);
    ladet::VerifyResult vr = ladet::verify_gb(basis, doc.buchberger_budget);
    if (!vr.ok) throw std::logic_error("candidate basis failed verification");
    ladet::HilbertData hd =
        ladet::hilbert(ladet::initial_ideal(basis), static_cast<int>(L.cells().size()));
    rep["num_vars"] = hd.num_vars;
    rep["h_vector"] = hd.h_vector;
    rep["dim"] = hd.dim;
    rep["degree"] = hd.degree;
    emit(rep, "dim " + std::to_string(hd.dim) + ", degree " + std::to_string(hd.degree));
    return kExitOk;
}

int cmd_gorenstein(const Options& opt) {
    ladet::LadderDocument doc = load(opt);
    ladet::Ladder L = checked_ladder(doc);
    ordered_json rep = base_report("gorenstein", doc);
    ladet::GorensteinReport gr = opt.oracle
                                     ? ladet::gorenstein_with_oracle(L, doc.field_prime,
                                                                     doc.buchberger_budget)
                                     : ladet::ag_criterion(L);
    ordered_json comps = ordered_json::array();
    for (const auto& c : gr.components) {
        ordered_json cj;
        cj["ladder"] = ladet::ladder_json(c.ladder);
        cj["all_ones"] = c.all_ones;
        cj["J"] = c.J;
        cj["H"] = c.H;
        cj["u"] = c.u;
        cj["conditions"] = {c.cond1, c.cond2, c.cond3};
        cj["gorenstein"] = c.gorenstein;
        comps.push_back(cj);
    }
    rep["components"] = comps;
    rep["verdict"] = gr.verdict;
    bool ok = true;
    if (gr.oracle_verdict) {
        rep["oracle"] = *gr.oracle_verdict;
        rep["agree"] = *gr.oracle_verdict == gr.verdict;
        ok = *gr.oracle_verdict == gr.verdict;
    }
    emit(rep, std::string(gr.verdict ? "Gorenstein" : "not Gorenstein") +
                  (gr.oracle_verdict ? (ok ? ", oracle agrees" : ", ORACLE DISAGREES") : ""));
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_biliaison(const Options& opt) {
    ladet::LadderDocument doc = load(opt);
    ladet::Ladder L = checked_ladder(doc);
    ordered_json rep = base_report("biliaison", doc);
    ladet::BiliaisonChain chain =
        ladet::build_chain(L, doc.field_prime, opt.verify, doc.buchberger_budget);
    ordered_json steps = ordered_json::array();
    for (const auto& s : chain.steps) {
        ordered_json sj;
        sj["before"] = ladet::ladder_json(s.before);
        sj["corner_used"] = s.i_used + 1;
        sj["middle"] = ladet::ladder_json(s.middle);
        sj["pivot"] = ladet::ladder_json(s.pivot);
        sj["heights"] = {s.checks.height_before, s.checks.height_middle, s.checks.height_pivot};
        sj["heights_ok"] = s.checks.heights_ok;
        if (opt.verify) {
            sj["containment_ok"] = s.checks.containment_ok;
            sj["paired_vanishing_ok"] = s.checks.paired_vanishing_ok;
            sj["ratio_ok"] = s.checks.ratio_ok;
            sj["budget_exceeded"] = s.checks.budget_exceeded;
        }
        steps.push_back(sj);
    }
    rep["steps"] = steps;
    rep["length"] = chain.steps.size();
    rep["expected_length"] = chain.expected_length;
    rep["length_ok"] = chain.length_ok;
    ordered_json terminal = ordered_json::array();
    if (chain.terminal)
        for (const ladet::Cell& c : chain.terminal->cells()) terminal.push_back({c.row, c.col});
    rep["terminal"] = terminal;
    rep["terminal_matches_lprime"] = chain.terminal_ok;
    if (opt.verify) rep["verified"] = chain.all_verified;

    bool over_budget = false;
    for (const auto& s : chain.steps) over_budget = over_budget || s.checks.budget_exceeded;
    bool ok = chain.length_ok && chain.terminal_ok && (!opt.verify || chain.all_verified);
    emit(rep, ok ? std::to_string(chain.steps.size()) + " step(s)" +
                       (opt.verify ? ", all checks passed" : "")
                 : (over_budget ? "chain constructed but not fully verified: budget exceeded"
                                : "CHAIN CHECK FAILED"));
    if (ok) return kExitOk;
    return over_budget ? kExitBudget : kExitCheckFailed;
}

int cmd_cm_check(const Options& opt) {
    ladet::LadderDocument doc = load(opt);
    ladet::Ladder L = checked_ladder(doc);
    ordered_json rep = base_report("cm-check", doc);
    std::vector<ladet::Polynomial> basis = ladet::candidate_gb(L, doc.field_prime);
    ladet::VerifyResult vr = ladet::verify_gb(basis, doc.buchberger_budget);
    if (!vr.ok) throw std::logic_error("candidate basis failed verification");
    bool cm = ladet::reisner_cm_check(ladet::initial_ideal(basis),
                                      static_cast<int>(L.cells().size()), doc.field_prime,
                                      doc.reisner_cap);
    rep["cm"] = cm;
    emit(rep, cm ? "Cohen-Macaulay" : "NOT Cohen-Macaulay");
    return cm ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on mixed ladder determinantal ideals"};
    app.require_subcommand(1);

    Options opt;
    int (*handler)(const Options&) = nullptr;

    auto add = [&](const char* name, const char* desc, int (*fn)(const Options&), bool verify_flag,
                   bool oracle_flag) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("file", opt.file, "ladder document (JSON)")->required();
        sub->add_option("--prime", [&opt](const std::vector<std::string>& v) {
            try {
                opt.prime = std::stoull(v.front());
            } catch (const std::exception&) {
                return false;
            }
            return true;
        }, "override the field characteristic");
        sub->add_option("--budget", [&opt](const std::vector<std::string>& v) {
            try {
                opt.budget = std::stol(v.front());
            } catch (const std::exception&) {
                return false;
            }
            return true;
        }, "override the pair-reduction budget");
        if (verify_flag) sub->add_flag("--verify", opt.verify, "run the Buchberger certificate");
        if (oracle_flag) sub->add_flag("--oracle", opt.oracle, "also run the h-vector symmetry oracle");
        sub->callback([&handler, fn]() { handler = fn; });
    };

    add("validate", "check the standing assumptions", cmd_validate, false, false);
    add("gb", "candidate Groebner basis", cmd_gb, true, false);
    add("height", "height by four independent routes", cmd_height, false, false);
    add("hilbert", "h-vector, dimension and degree", cmd_hilbert, false, false);
    add("gorenstein", "numerical Gorenstein criterion", cmd_gorenstein, false, true);
    add("biliaison", "elementary biliaison chain down to a linear ideal", cmd_biliaison, true, false);
    add("cm-check", "Reisner criterion on the initial ideal", cmd_cm_check, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInput : kExitOk;
    }

    try {
        return handler(opt);
    } catch (const InvalidLadder& e) {
        std::cerr << "invalid ladder:\n";
        for (const std::string& v : e.violations) std::cerr << "  " << v << "\n";
        return kExitCheckFailed;
    } catch (const ladet::DocumentError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ladet::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
