#pragma once

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "josephus/explorer.hpp"
#include "josephus/types.hpp"

// Serialization of outcomes, verification reports and survey tables.
// JSON keys and CSV columns are part of the tool's external interface.

namespace josephus::io {

using nlohmann::json;

inline json to_json(const explore::Value& v) {
    if (std::holds_alternative<Count>(v)) return std::get<Count>(v);
    if (std::holds_alternative<std::vector<Label>>(v)) return std::get<std::vector<Label>>(v);
    return nullptr;
}

/// Scalar as a number, set as space-separated labels, absent as empty.
inline std::string to_csv_field(const explore::Value& v) {
    if (std::holds_alternative<Count>(v)) return std::to_string(std::get<Count>(v));
    if (std::holds_alternative<std::vector<Label>>(v)) {
        std::string s;
        for (Label x : std::get<std::vector<Label>>(v)) {
            if (!s.empty()) s += ' ';
            s += std::to_string(x);
        }
        return s;
    }
    return "";
}

inline json to_json(const explore::SweepRange& r) {
    return {{"k_min", r.k_min},         {"k_max", r.k_max},         {"n_min", r.n_min},
            {"n_max", r.n_max},         {"lives_min", r.lives_min}, {"lives_max", r.lives_max},
            {"coprime_only", r.coprime_only}};
}

inline json to_json(const explore::VerificationReport& rep) {
    json mm = json::array();
    for (const auto& m : rep.mismatches) {
        json row = {{"k", m.config.k}, {"n", m.config.n}, {"lives", m.config.lives}};
        if (m.config.soldier) row["soldier"] = *m.config.soldier;
        row["expected"] = to_json(m.expected);
        row["oracle"] = to_json(m.oracle);
        mm.push_back(std::move(row));
    }
    return {{"subject", std::string(explore::to_string(rep.subject))},
            {"range", to_json(rep.range)},
            {"checked", rep.checked},
            {"complete", rep.complete},
            {"mismatch_count", rep.mismatches.size()},
            {"mismatches", std::move(mm)}};
}

inline std::string to_csv(const explore::VerificationReport& rep) {
    std::ostringstream os;
    os << "subject,k,n,lives,expected,oracle\n";
    const auto subject = explore::to_string(rep.subject);
    for (const auto& m : rep.mismatches) {
        os << subject << ',' << m.config.k << ',' << m.config.n << ',' << m.config.lives << ','
           << to_csv_field(m.expected) << ',' << to_csv_field(m.oracle) << '\n';
    }
    return os.str();
}

inline json outcome_json(const GameOutcome& o) {
    json order = json::array();
    for (const auto& e : o.order) order.push_back({e.soldier, e.ordinal});
    json j = {{"n", o.config.n}, {"k", o.config.k}, {"lives", o.config.lives}};
    j["survivor"] = o.survivor ? json(*o.survivor) : json(nullptr);
    j["order"] = std::move(order);
    return j;
}

inline json to_json(const std::vector<explore::SurvivorRow>& rows) {
    json a = json::array();
    for (const auto& r : rows) a.push_back({{"n", r.n}, {"k", r.k}, {"lives", r.lives}, {"survivor", r.survivor}});
    return a;
}

inline std::string to_csv(const std::vector<explore::SurvivorRow>& rows) {
    std::ostringstream os;
    os << "n,k,lives,survivor\n";
    for (const auto& r : rows) os << r.n << ',' << r.k << ',' << r.lives << ',' << r.survivor << '\n';
    return os.str();
}

inline json to_json(const std::vector<explore::NonCoprimeRow>& rows) {
    json a = json::array();
    for (const auto& r : rows) {
        json row = {{"n", r.n}, {"k", r.k}, {"lives", r.lives}, {"survivor", r.survivor}};
        row["scaled_prediction"] = r.scaled_prediction ? json(*r.scaled_prediction) : json(nullptr);
        row["scaling_holds"] = r.scaling_holds ? json(*r.scaling_holds) : json(nullptr);
        a.push_back(std::move(row));
    }
    return a;
}

inline std::string to_csv(const std::vector<explore::NonCoprimeRow>& rows) {
    std::ostringstream os;
    os << "n,k,lives,survivor,scaled_prediction,scaling_holds\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.k << ',' << r.lives << ',' << r.survivor << ',';
        if (r.scaled_prediction) os << *r.scaled_prediction;
        os << ',';
        if (r.scaling_holds) os << (*r.scaling_holds ? "yes" : "no");
        os << '\n';
    }
    return os.str();
}

}  // namespace josephus::io
