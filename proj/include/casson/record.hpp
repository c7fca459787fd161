#pragma once

// Structured CLI output: one record per invariant query, lossless JSON
// round-trip, and the fixed-column CSV rows used by the table command.

#include "casson/rational.hpp"
#include "casson/twist.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace casson {

using ordered_json = nlohmann::ordered_json;

struct OutputRecord {
    std::string invariant;
    std::vector<std::pair<std::string, std::string>> inputs;
    BigRat value;
    std::optional<AdmissibilityReport> admissibility;
    std::vector<std::string> provenance;

    friend bool operator==(const OutputRecord& a, const OutputRecord& b) {
        auto adm_eq = [](const std::optional<AdmissibilityReport>& x,
                         const std::optional<AdmissibilityReport>& y) {
            if (x.has_value() != y.has_value()) return false;
            if (!x) return true;
            return x->admissible == y->admissible && x->strict_boundary == y->strict_boundary &&
                   x->alexander_obstruction == y->alexander_obstruction &&
                   x->boundary == y->boundary && x->reason == y->reason;
        };
        return a.invariant == b.invariant && a.inputs == b.inputs && a.value == b.value &&
               adm_eq(a.admissibility, b.admissibility) && a.provenance == b.provenance;
    }
};

namespace detail {

// integers are emitted as JSON numbers when they fit, strings otherwise
inline ordered_json json_of_bigint(const BigInt& v) {
    static const BigInt lo = -(BigInt(1) << 53), hi = BigInt(1) << 53;
    if (v > lo && v < hi) return static_cast<long long>(v);
    return v.str();
}

inline BigInt bigint_of_json(const ordered_json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<long long>());
}

} // namespace detail

inline ordered_json to_json(const AdmissibilityReport& r) {
    ordered_json j;
    j["admissible"] = r.admissible;
    j["strict_boundary"] = r.strict_boundary;
    j["alexander_obstruction"] = r.alexander_obstruction;
    j["boundary_slopes"] = r.boundary;
    j["reason"] = r.reason;
    return j;
}

inline AdmissibilityReport admissibility_from_json(const ordered_json& j) {
    AdmissibilityReport r;
    r.admissible = j.at("admissible").get<bool>();
    r.strict_boundary = j.at("strict_boundary").get<bool>();
    r.alexander_obstruction = j.at("alexander_obstruction").get<bool>();
    r.boundary = j.at("boundary_slopes").get<std::vector<long>>();
    r.reason = j.at("reason").get<std::string>();
    return r;
}

inline ordered_json to_json(const OutputRecord& rec) {
    ordered_json j;
    j["invariant"] = rec.invariant;
    ordered_json in = ordered_json::object();
    for (const auto& [k, v] : rec.inputs) in[k] = v;
    j["inputs"] = in;
    j["value"] = {{"num", detail::json_of_bigint(rat_num(rec.value))},
                  {"den", detail::json_of_bigint(rat_den(rec.value))}};
    if (rec.admissibility) j["admissibility"] = to_json(*rec.admissibility);
    j["provenance"] = rec.provenance;
    return j;
}

inline OutputRecord record_from_json(const ordered_json& j) {
    OutputRecord rec;
    rec.invariant = j.at("invariant").get<std::string>();
    for (const auto& [k, v] : j.at("inputs").items())
        rec.inputs.emplace_back(k, v.get<std::string>());
    rec.value = BigRat(detail::bigint_of_json(j.at("value").at("num")),
                       detail::bigint_of_json(j.at("value").at("den")));
    if (j.contains("admissibility"))
        rec.admissibility = admissibility_from_json(j.at("admissibility"));
    rec.provenance = j.at("provenance").get<std::vector<std::string>>();
    return rec;
}

inline std::string to_text(const OutputRecord& rec) {
    std::ostringstream os;
    os << rec.invariant << "(";
    for (size_t i = 0; i < rec.inputs.size(); ++i)
        os << (i ? ", " : "") << rec.inputs[i].first << "=" << rec.inputs[i].second;
    os << ") = " << rec.value.str();
    if (rec.admissibility) {
        os << "\n  admissible: " << (rec.admissibility->admissible ? "yes" : "no") << " ("
           << rec.admissibility->reason << ")";
    }
    if (!rec.provenance.empty()) {
        os << "\n  via:";
        for (const auto& p : rec.provenance) os << " " << p;
    }
    return os.str();
}

// ---- table rows -----------------------------------------------------------------

struct TableRow {
    std::string family;
    std::string key;   // xi or tuple
    std::string slope; // empty for Seifert rows
    std::optional<BigRat> lambda;
    bool admissible = true;
    std::optional<long long> cs;
};

inline std::string csv_header() {
    return "family,xi_or_tuple,slope,lambda_num,lambda_den,admissible,cs_norm";
}

inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string to_csv(const TableRow& r) {
    std::ostringstream os;
    os << r.family << "," << csv_quote(r.key) << "," << r.slope << ",";
    if (r.lambda) os << rat_num(*r.lambda).str() << "," << rat_den(*r.lambda).str();
    else os << ",";
    os << "," << (r.admissible ? "true" : "false") << ",";
    if (r.cs) os << *r.cs;
    return os.str();
}

inline ordered_json to_json(const TableRow& r) {
    ordered_json j;
    j["family"] = r.family;
    j["xi_or_tuple"] = r.key;
    j["slope"] = r.slope;
    if (r.lambda)
        j["value"] = {{"num", detail::json_of_bigint(rat_num(*r.lambda))},
                      {"den", detail::json_of_bigint(rat_den(*r.lambda))}};
    else
        j["value"] = nullptr;
    j["admissible"] = r.admissible;
    if (r.cs) j["cs_norm"] = *r.cs;
    return j;
}

} // namespace casson
