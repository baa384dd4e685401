#ifndef SEVENCORE_RECORDS_HPP
#define SEVENCORE_RECORDS_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "series.hpp"
#include "verify.hpp"
#include "version.hpp"

namespace sevencore
{

using json = nlohmann::json;

// One line of a scan cache file.
struct cache_record
{
    std::string check;
    std::uint64_t range = 0;
    std::string status;
    std::vector<std::uint64_t> exceptions;
    std::string timestamp;
    std::string version;

    friend bool operator==(const cache_record&, const cache_record&) = default;
};

// What a command produced for one input: a coefficient or count, a scan
// report, or a cache hit standing in for a scan.
using record_payload = std::variant<integer, scan_report, cache_record>;

struct output_record
{
    std::string command;
    json inputs = json::object();
    record_payload result;
    double elapsed_ms = 0.0;
    std::string version = version_string;

    friend bool operator==(const output_record&, const output_record&) = default;
};

// Integers travel as decimal strings so that no JSON reader rounds them.
inline json integer_to_json(const integer& v) { return v.str(); }

inline integer integer_from_json(const json& j)
{
    if (!j.is_string()) {
        throw error("expected a decimal integer string");
    }
    const auto& s = j.get_ref<const std::string&>();
    const auto digits = s.size() - (s.starts_with('-') ? 1 : 0);
    if (digits == 0 || s.find_first_not_of("0123456789", s.size() - digits) != std::string::npos) {
        throw error("not a decimal integer: '" + s + "'");
    }
    return integer(s);
}

inline json to_json(const scan_report& r)
{
    json j;
    j["name"] = r.name;
    j["range"] = r.range;
    j["status"] = to_string(r.status);
    j["expected_exceptions"] = r.expected_exceptions;
    j["exceptions_found"] = r.exceptions_found;
    j["equalities"] = r.equalities;
    if (r.first_failure) {
        j["first_failure"] = {{"n", r.first_failure->n},
                              {"lhs", integer_to_json(r.first_failure->lhs)},
                              {"rhs", integer_to_json(r.first_failure->rhs)}};
    } else {
        j["first_failure"] = nullptr;
    }
    j["route_samples"] = r.route_samples;
    j["routes_agree"] = r.routes_agree;
    j["notes"] = r.notes;
    return j;
}

inline scan_report scan_report_from_json(const json& j)
{
    scan_report r;
    r.name = j.at("name").get<std::string>();
    r.range = j.at("range").get<std::uint64_t>();
    const auto status = j.at("status").get<std::string>();
    if (status != "VERIFIED" && status != "FAILED") {
        throw error("unknown scan status '" + status + "'");
    }
    r.status = status == "VERIFIED" ? scan_status::VERIFIED : scan_status::FAILED;
    r.expected_exceptions = j.at("expected_exceptions").get<std::vector<std::uint64_t>>();
    r.exceptions_found = j.at("exceptions_found").get<std::vector<std::uint64_t>>();
    r.equalities = j.at("equalities").get<std::vector<std::uint64_t>>();
    if (!j.at("first_failure").is_null()) {
        const auto& f = j.at("first_failure");
        r.first_failure =
            scan_failure{f.at("n").get<std::uint64_t>(), integer_from_json(f.at("lhs")), integer_from_json(f.at("rhs"))};
    }
    r.route_samples = j.at("route_samples").get<std::size_t>();
    r.routes_agree = j.at("routes_agree").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

inline json to_json(const cache_record& c)
{
    return {{"check", c.check},         {"range", c.range},         {"status", c.status},
            {"exceptions", c.exceptions}, {"timestamp", c.timestamp}, {"version", c.version}};
}

// Throws error with a short reason when the object is not a cache record.
inline cache_record cache_record_from_json(const json& j)
{
    if (!j.is_object()) {
        throw error("record is not a JSON object");
    }
    for (const char* key : {"check", "range", "status", "exceptions", "timestamp", "version"}) {
        if (!j.contains(key)) {
            throw error(std::string("missing field '") + key + "'");
        }
    }
    cache_record c;
    try {
        c.check = j.at("check").get<std::string>();
        c.range = j.at("range").get<std::uint64_t>();
        c.status = j.at("status").get<std::string>();
        c.exceptions = j.at("exceptions").get<std::vector<std::uint64_t>>();
        c.timestamp = j.at("timestamp").get<std::string>();
        c.version = j.at("version").get<std::string>();
    } catch (const json::exception& e) {
        throw error(std::string("bad field type: ") + e.what());
    }
    if (c.status != "VERIFIED" && c.status != "FAILED") {
        throw error("unknown status '" + c.status + "'");
    }
    return c;
}

inline json to_json(const output_record& rec)
{
    json result;
    if (const auto* v = std::get_if<integer>(&rec.result)) {
        result = {{"kind", "integer"}, {"value", integer_to_json(*v)}};
    } else if (const auto* r = std::get_if<scan_report>(&rec.result)) {
        result = {{"kind", "scan"}, {"report", to_json(*r)}};
    } else {
        result = {{"kind", "cached"}, {"record", to_json(std::get<cache_record>(rec.result))}};
    }
    return {{"command", rec.command},
            {"inputs", rec.inputs},
            {"result", result},
            {"elapsed_ms", rec.elapsed_ms},
            {"version", rec.version}};
}

// Checks an object against the documented record schema
// (docs/output-record.schema.json). Returns the first problem, if any.
inline std::optional<std::string> schema_problem(const json& j)
{
    if (!j.is_object()) {
        return "record is not an object";
    }
    const std::vector<std::string> keys{"command", "elapsed_ms", "inputs", "result", "version"};
    for (const auto& k : keys) {
        if (!j.contains(k)) {
            return "missing '" + k + "'";
        }
    }
    if (j.size() != keys.size()) {
        return "unexpected top-level key";
    }
    static const std::vector<std::string> commands{"coeff", "count", "verify", "scan", "selftest"};
    if (!j["command"].is_string()
        || std::find(commands.begin(), commands.end(), j["command"].get<std::string>()) == commands.end()) {
        return "'command' must be one of coeff, count, verify, scan, selftest";
    }
    if (!j["inputs"].is_object()) {
        return "'inputs' must be an object";
    }
    if (!j["elapsed_ms"].is_number() || j["elapsed_ms"].get<double>() < 0) {
        return "'elapsed_ms' must be a non-negative number";
    }
    if (!j["version"].is_string()) {
        return "'version' must be a string";
    }
    const auto& res = j["result"];
    if (!res.is_object() || !res.contains("kind") || !res["kind"].is_string()) {
        return "'result' must be an object with a string 'kind'";
    }
    const auto kind = res["kind"].get<std::string>();
    try {
        if (kind == "integer") {
            if (res.size() != 2 || !res.contains("value")) {
                return "integer result needs exactly 'kind' and 'value'";
            }
            integer_from_json(res["value"]);
        } else if (kind == "scan") {
            if (res.size() != 2 || !res.contains("report")) {
                return "scan result needs exactly 'kind' and 'report'";
            }
            scan_report_from_json(res["report"]);
        } else if (kind == "cached") {
            if (res.size() != 2 || !res.contains("record")) {
                return "cached result needs exactly 'kind' and 'record'";
            }
            cache_record_from_json(res["record"]);
        } else {
            return "unknown result kind '" + kind + "'";
        }
    } catch (const std::exception& e) {
        return std::string("bad result: ") + e.what();
    }
    return std::nullopt;
}

inline output_record output_record_from_json(const json& j)
{
    if (auto problem = schema_problem(j)) {
        throw error("output record does not match schema: " + *problem);
    }
    output_record rec;
    rec.command = j["command"].get<std::string>();
    rec.inputs = j["inputs"];
    rec.elapsed_ms = j["elapsed_ms"].get<double>();
    rec.version = j["version"].get<std::string>();
    const auto& res = j["result"];
    const auto kind = res["kind"].get<std::string>();
    if (kind == "integer") {
        rec.result = integer_from_json(res["value"]);
    } else if (kind == "scan") {
        rec.result = scan_report_from_json(res["report"]);
    } else {
        rec.result = cache_record_from_json(res["record"]);
    }
    return rec;
}

// ---------------------------------------------------------------------------
// Flat CSV projection: one row per record.

inline const char* csv_header() { return "command,subject,n,value,status,exceptions,elapsed_ms,version"; }

namespace detail
{

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

inline std::string space_list(const std::vector<std::uint64_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? " " : "") + std::to_string(v[i]);
    }
    return s;
}

inline std::string input_text(const json& inputs, const char* key)
{
    if (!inputs.contains(key)) {
        return "";
    }
    const auto& v = inputs[key];
    return v.is_string() ? v.get<std::string>() : v.dump();
}

} // namespace detail

inline std::string to_csv_row(const output_record& rec)
{
    std::string subject, n, value, status, exceptions;
    if (const auto* v = std::get_if<integer>(&rec.result)) {
        subject = detail::input_text(rec.inputs, rec.command == "count" ? "form" : "series");
        n = detail::input_text(rec.inputs, "n");
        value = v->str();
    } else if (const auto* r = std::get_if<scan_report>(&rec.result)) {
        subject = r->name;
        n = std::to_string(r->range);
        status = to_string(r->status);
        exceptions = detail::space_list(r->exceptions_found);
    } else {
        const auto& c = std::get<cache_record>(rec.result);
        subject = c.check;
        n = std::to_string(c.range);
        status = c.status;
        exceptions = detail::space_list(c.exceptions);
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", rec.elapsed_ms);
    std::string row;
    for (const auto& f : {rec.command, subject, n, value, status, exceptions, std::string(ms), rec.version}) {
        row += (row.empty() ? "" : ",") + detail::csv_field(f);
    }
    return row;
}

} // namespace sevencore

#endif
