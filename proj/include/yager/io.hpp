#pragma once

#include <charconv>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "yager/claims.hpp"
#include "yager/distribution.hpp"
#include "yager/error.hpp"
#include "yager/format.hpp"
#include "yager/measures.hpp"
#include "yager/negation.hpp"

// Interchange formats: distributions as JSON arrays or comma lists,
// measure sets and claim reports as JSON objects with fixed key order, and
// negation traces as JSON Lines.

namespace yager {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

}  // namespace detail

/// Parses "0.4,0.3,0.2,0.1" or "[0.4,0.3,0.2,0.1]" into raw values.
inline std::vector<double> parse_values(std::string_view text) {
    const std::string_view body = detail::trim(text);
    std::vector<double> values;
    if (!body.empty() && body.front() == '[') {
        ordered_json parsed;
        try {
            parsed = ordered_json::parse(body);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(Errc::InvalidArgument, std::string("malformed JSON array: ") + e.what());
        }
        if (!parsed.is_array()) throw Error(Errc::InvalidArgument, "expected a JSON array of numbers");
        for (std::size_t i = 0; i < parsed.size(); ++i) {
            if (!parsed[i].is_number()) {
                throw Error(Errc::InvalidArgument, "entry " + std::to_string(i + 1) + " (" +
                                                       parsed[i].dump() + ") is not a number");
            }
            values.push_back(parsed[i].get<double>());
        }
        return values;
    }
    std::size_t start = 0;
    std::size_t index = 1;
    while (start <= body.size()) {
        const std::size_t comma = body.find(',', start);
        const std::size_t stop = comma == std::string_view::npos ? body.size() : comma;
        const std::string_view field = detail::trim(body.substr(start, stop - start));
        double v = 0.0;
        const char* first = field.data();
        if (!field.empty() && field.front() == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, field.data() + field.size(), v);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw Error(Errc::InvalidArgument, "entry " + std::to_string(index) + " ('" +
                                                   std::string(field) + "') is not a number");
        }
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
        ++index;
    }
    return values;
}

inline Distribution parse_distribution(std::string_view text, bool renormalize = false) {
    return Distribution::make(parse_values(text), renormalize);
}

inline ordered_json to_json(const Distribution& d) {
    ordered_json arr = ordered_json::array();
    for (double p : d) arr.push_back(p);
    return arr;
}

inline ordered_json to_json(const MeasureSet& m) {
    ordered_json j;
    j["H"] = m.H;
    j["H1"] = m.H1;
    j["J"] = m.J;
    j["VH"] = m.VH;
    j["VJ"] = m.VJ;
    return j;
}

inline ordered_json to_json(const ClaimReport& r) {
    ordered_json j;
    j["claim"] = claim_info(r.claim).tag;
    j["verdict"] = to_string(r.verdict);
    j["trials"] = r.trials_run;
    j["seed"] = r.seed;
    j["tolerance"] = r.tolerance;
    j["failures"] = r.failures;
    if (r.counterexample) {
        j["counterexample"] = {{"p", to_json(r.counterexample->p)},
                               {"lhs", r.counterexample->lhs},
                               {"rhs", r.counterexample->rhs},
                               {"margin", r.counterexample->margin}};
    } else {
        j["counterexample"] = nullptr;
    }
    if (r.max_observed) {
        j["max_observed"] = {{"p", to_json(r.max_observed->p)}, {"value", r.max_observed->value}};
    }
    ordered_json metrics = ordered_json::object();
    for (const auto& [name, value] : r.metrics) metrics[name] = value;
    j["metrics"] = metrics;
    j["statement"] = claim_info(r.claim).statement;
    return j;
}

inline ordered_json step_to_json(const TraceStep& step, const MeasureSet& shown) {
    ordered_json j;
    j["k"] = step.k;
    j["p"] = to_json(step.dist);
    const ordered_json measures = to_json(shown);
    for (const auto& [key, value] : measures.items()) j[key] = value;
    return j;
}

inline ordered_json trace_summary_json(const NegationTrace& trace) {
    ordered_json j;
    if (trace.converged_at) j["converged_at"] = *trace.converged_at;
    else j["converged_at"] = nullptr;
    j["tolerance"] = trace.tolerance;
    return j;
}

/// One object per step followed by the summary object, LF terminated.
inline void write_trace_jsonl(std::ostream& out, const NegationTrace& trace, bool bits = false) {
    for (const TraceStep& step : trace.steps) {
        out << step_to_json(step, bits ? to_bits(step.measures) : step.measures).dump() << '\n';
    }
    out << trace_summary_json(trace).dump() << '\n';
}

/// Header-first CSV with unquoted fields.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(const std::vector<std::string>& names) {
        columns_ = names.size();
        write_fields(names);
    }

    void row(const std::vector<double>& values) {
        if (values.size() != columns_) {
            throw Error(Errc::InvalidArgument, "CSV row has " + std::to_string(values.size()) +
                                                   " fields, header has " + std::to_string(columns_));
        }
        std::vector<std::string> fields;
        fields.reserve(values.size());
        for (double v : values) fields.push_back(format_double(v));
        write_fields(fields);
    }

    void raw_row(const std::vector<std::string>& fields) {
        if (fields.size() != columns_) {
            throw Error(Errc::InvalidArgument, "CSV row has " + std::to_string(fields.size()) +
                                                   " fields, header has " + std::to_string(columns_));
        }
        write_fields(fields);
    }

private:
    void write_fields(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out_ << ',';
            out_ << fields[i];
        }
        out_ << '\n';
    }

    std::ostream& out_;
    std::size_t columns_ = 0;
};

}  // namespace yager
