#pragma once

#include <cctype>
#include <ostream>
#include <string>

#include "json.hpp"

#include "dickson/errors.hpp"
#include "dickson/polynomial.hpp"
#include "dickson/rational.hpp"
#include "dickson/specfn.hpp"

namespace dickson {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };
enum class Status { Pass, Fail, Error };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Error: return "error";
    }
    return "error";
}

struct RunReport {
    std::string command;  // argv echo
    Status status = Status::Pass;
    std::string summary;  // one-line description used by the text format
    Json payload;
    long long timing_ms = 0;
};

// --- value serialization ---------------------------------------------------

inline Json to_json(const Rational& r) { return r.to_string(); }

inline Json to_json(const Complex& z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

/// Ascending coefficient array, rationals as "p/q" strings.
inline Json to_json(const Poly<Rational>& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

/// Nested ascending arrays: outer index = x-degree, inner = a-degree.
inline Json to_json(const ParamPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

inline Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "text") return Format::Text;
    throw FormatUnsupported("unknown format '" + name + "'");
}

// --- emission ----------------------------------------------------------------

namespace detail {

inline std::string csv_cell(const Json& cell) {
    if (cell.is_string()) return cell.get<std::string>();
    return cell.dump();
}

}  // namespace detail

/// Deterministic byte stream for a report. CSV is only defined for
/// payloads carrying a "table" object ({"columns": [...], "rows": [[...]]}).
inline void emit_report(const RunReport& r, Format format, std::ostream& os) {
    switch (format) {
        case Format::Json: {
            Json j{{"command", r.command},
                   {"status", status_name(r.status)},
                   {"summary", r.summary},
                   {"payload", r.payload},
                   {"timing_ms", r.timing_ms}};
            os << j.dump(2) << "\n";
            return;
        }
        case Format::Csv: {
            if (!r.payload.is_object() || !r.payload.contains("table"))
                throw FormatUnsupported("csv output needs a tabular payload");
            const Json& table = r.payload.at("table");
            const Json& columns = table.at("columns");
            std::string line;
            for (const auto& c : columns) {
                if (!line.empty()) line += ",";
                line += c.get<std::string>();
            }
            os << line << "\n";
            for (const auto& row : table.at("rows")) {
                line.clear();
                for (const auto& cell : row) {
                    if (!line.empty()) line += ",";
                    line += detail::csv_cell(cell);
                }
                os << line << "\n";
            }
            return;
        }
        case Format::Text: {
            std::string tag = status_name(r.status);
            for (auto& ch : tag) ch = char(::toupper((unsigned char)ch));
            os << tag << " " << r.summary << " (" << r.timing_ms << "ms)\n";
            return;
        }
    }
}

}  // namespace dickson
