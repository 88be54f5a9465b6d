#ifndef SUMPROD_REPORT_HPP
#define SUMPROD_REPORT_HPP

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bounds.hpp"
#include "error.hpp"

namespace sumprod {

using Json = nlohmann::json;

inline constexpr std::string_view report_schema = "sumprod.report.v1";

/// One flattened report row. JSON objects keep their keys sorted, which makes
/// the serialized form canonical.
using ReportRecord = Json;

enum class ReportFormat { jsonl, csv };

inline ReportFormat parse_format(std::string_view s) {
    if (s == "jsonl") return ReportFormat::jsonl;
    if (s == "csv") return ReportFormat::csv;
    fail(ErrorCode::config_error, "format: expected jsonl or csv, got '" + std::string(s) + "'");
}

inline Json optional_json(const auto& opt) { return opt ? Json(*opt) : Json(nullptr); }

/// Header fields shared by every record kind.
inline ReportRecord base_record(std::string_view kind, u64 p, u64 order, u64 generator, std::string poly, u64 seed) {
    ReportRecord r = Json::object();
    r["schema"] = report_schema;
    r["inequality"] = kind;
    r["p"] = p;
    r["order"] = order;
    r["generator"] = generator;
    r["poly"] = std::move(poly);
    r["seed"] = seed;
    r["params"] = Json::object();
    r["premise"] = nullptr;
    r["clause"] = nullptr;
    r["lhs"] = nullptr;
    r["rhs"] = nullptr;
    r["ratio"] = nullptr;
    r["metrics"] = nullptr;
    r["error"] = nullptr;
    r["outcome"] = nullptr;
    return r;
}

inline void apply_verdict(ReportRecord& r, const Verdict& v) {
    r["inequality"] = to_string(v.id);
    r["premise"] = v.premise_met ? "met" : "not_met";
    r["clause"] = v.failing_clause.empty() ? Json(nullptr) : Json(v.failing_clause);
    r["lhs"] = optional_json(v.lhs);
    r["rhs"] = optional_json(v.rhs);
    r["ratio"] = optional_json(v.ratio);
    r["outcome"] = to_string(v.outcome);
}

inline Json to_json(const GrowthProbe& g) {
    return Json{{"sum_size", g.sum_size},
                {"diff_size", g.diff_size},
                {"sum_ratio_4_3", g.sum_ratio_4_3},
                {"diff_ratio_4_3", g.diff_ratio_4_3},
                {"sum_ratio_3_2", g.sum_ratio_3_2},
                {"diff_ratio_3_2", g.diff_ratio_3_2},
                {"sum_ratio_5_3_log", optional_json(g.sum_ratio_5_3_log)},
                {"diff_ratio_5_3_log", optional_json(g.diff_ratio_5_3_log)}};
}

inline Json to_json(const FactorizationProbe& f) {
    return Json{{"size_a", f.size_a},
                {"size_b", f.size_b},
                {"image_size", f.image_size},
                {"is_representation", f.is_representation},
                {"product_bound", f.product_bound},
                {"exponent_a", optional_json(f.exponent_a)},
                {"exponent_b", optional_json(f.exponent_b)},
                {"in_window", f.in_window},
                {"order_exponent", optional_json(f.order_exponent)},
                {"below_p_power", f.below_p_power},
                {"q_for_delta", f.q_for_delta}};
}

/// Fixed CSV column order.
inline const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols = {"schema", "inequality", "p",      "order",   "generator", "poly",
                                                  "seed",   "premise",    "clause", "lhs",     "rhs",       "ratio",
                                                  "outcome", "params",    "metrics", "error",  "wall_time_ms"};
    return cols;
}

namespace detail {

inline std::string csv_cell(const Json& v) {
    if (v.is_null()) return "";
    std::string raw = v.is_string() ? v.get<std::string>() : v.dump();
    if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

inline void write_report(std::ostream& os, const std::vector<ReportRecord>& records, ReportFormat format) {
    if (format == ReportFormat::jsonl) {
        for (const auto& r : records) os << r.dump() << '\n';
        return;
    }
    const auto& cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& r : records) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const auto it = r.find(cols[i]);
            os << (i ? "," : "") << (it == r.end() ? std::string() : detail::csv_cell(*it));
        }
        os << '\n';
    }
}

inline std::string render_report(const std::vector<ReportRecord>& records, ReportFormat format) {
    std::ostringstream os;
    write_report(os, records, format);
    return os.str();
}

inline void emit_report(const std::vector<ReportRecord>& records, ReportFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::io_error, "cannot open " + path + " for writing");
    write_report(out, records, format);
    out.flush();
    if (!out) fail(ErrorCode::io_error, "write to " + path + " failed");
}

}  // namespace sumprod

#endif  // SUMPROD_REPORT_HPP
