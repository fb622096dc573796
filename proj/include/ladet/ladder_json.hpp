// JSON ladder documents, the CLI's input format.
//
// Required keys: "m", "n", "upper" (list of [b, a]), "lower" (list of
// [d, c]), "t" (list of sizes). Optional: "field_prime",
// "buchberger_budget", "cover_cap", "reisner_cap", and "expected_height"
// for cross-checking a hand-computed height.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ladet/field.hpp"
#include "ladet/groebner.hpp"
#include "ladet/hilbert.hpp"
#include "ladet/ladder.hpp"
#include "ladet/reisner.hpp"

namespace ladet {

struct LadderDocument {
    int m = 0;
    int n = 0;
    std::vector<Cell> upper;
    std::vector<Cell> lower;
    std::vector<int> t;
    std::uint32_t field_prime = kDefaultPrime;
    long buchberger_budget = kDefaultPairBudget;
    int cover_cap = kDefaultCoverCap;
    int reisner_cap = kDefaultReisnerCap;
    std::optional<long long> expected_height;

    Ladder to_ladder() const { return Ladder(m, n, upper, lower, t); }
};

class DocumentError : public std::runtime_error {
public:
    explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

inline LadderDocument parse_document(const nlohmann::json& j) {
    LadderDocument doc;
    auto need = [&](const char* key) -> const nlohmann::json& {
        if (!j.contains(key)) throw DocumentError(std::string("missing key \"") + key + "\"");
        return j.at(key);
    };
    auto corners = [&](const char* key) {
        std::vector<Cell> out;
        for (const auto& pair : need(key)) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                !pair[1].is_number_integer())
                throw DocumentError(std::string("\"") + key + "\" entries must be [row, col] pairs");
            out.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
        return out;
    };
    if (!need("m").is_number_integer() || !need("n").is_number_integer())
        throw DocumentError("\"m\" and \"n\" must be integers");
    doc.m = j.at("m").get<int>();
    doc.n = j.at("n").get<int>();
    doc.upper = corners("upper");
    doc.lower = corners("lower");
    for (const auto& v : need("t")) {
        if (!v.is_number_integer()) throw DocumentError("\"t\" entries must be integers");
        doc.t.push_back(v.get<int>());
    }
    if (j.contains("field_prime")) doc.field_prime = checked_prime(j.at("field_prime").get<std::uint64_t>());
    if (j.contains("buchberger_budget")) doc.buchberger_budget = j.at("buchberger_budget").get<long>();
    if (j.contains("cover_cap")) doc.cover_cap = j.at("cover_cap").get<int>();
    if (j.contains("reisner_cap")) doc.reisner_cap = j.at("reisner_cap").get<int>();
    if (j.contains("expected_height")) doc.expected_height = j.at("expected_height").get<long long>();
    return doc;
}

inline nlohmann::ordered_json corners_json(const std::vector<Cell>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Cell& c : v) arr.push_back({c.row, c.col});
    return arr;
}

inline nlohmann::ordered_json ladder_json(const Ladder& L) {
    nlohmann::ordered_json j;
    j["m"] = L.m();
    j["n"] = L.n();
    j["upper"] = corners_json(L.upper_corners());
    j["lower"] = corners_json(L.lower_corners());
    j["t"] = L.sizes();
    return j;
}

} // namespace ladet
