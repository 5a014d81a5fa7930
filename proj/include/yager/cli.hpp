#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "yager/claims.hpp"
#include "yager/distribution.hpp"
#include "yager/error.hpp"
#include "yager/io.hpp"
#include "yager/measures.hpp"
#include "yager/negation.hpp"
#include "yager/sweep.hpp"

// Command-line front end. Each command is a thin wrapper over the library;
// run() takes the argument list and output streams so it can be driven
// in-process.

namespace yager::cli {

struct DistArgs {
    std::string probs;
    bool renormalize = false;
};

namespace detail {

inline void add_dist_options(CLI::App& cmd, DistArgs& args) {
    cmd.add_option("-p,--probs", args.probs, "Distribution as a comma list or JSON array")
        ->required();
    cmd.add_flag("--renormalize", args.renormalize, "Divide nonnegative values by their sum");
}

inline void add_format_option(CLI::App& cmd, std::string& format) {
    cmd.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

inline void add_log_base_option(CLI::App& cmd, std::string& base) {
    cmd.add_option("--log-base", base, "Display base for logarithmic measures")
        ->check(CLI::IsMember({"e", "2"}))
        ->capture_default_str();
}

inline std::vector<std::string> prob_columns(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("p_" + std::to_string(i));
    return names;
}

inline void write_sweep(std::ostream& out, const Sweep& sweep, bool csv) {
    if (csv) {
        CsvWriter w(out);
        std::vector<std::string> header{sweep.x_name};
        header.insert(header.end(), sweep.columns.begin(), sweep.columns.end());
        w.header(header);
        for (const SweepRow& row : sweep.rows) {
            std::vector<double> values{row.x};
            values.insert(values.end(), row.values.begin(), row.values.end());
            w.row(values);
        }
        return;
    }
    for (const SweepRow& row : sweep.rows) {
        ordered_json j;
        j[sweep.x_name] = row.x;
        for (std::size_t c = 0; c < sweep.columns.size(); ++c) j[sweep.columns[c]] = row.values[c];
        out << j.dump() << '\n';
    }
}

inline std::string optional_field(const std::optional<Counterexample>& ce, double Counterexample::*field) {
    return ce ? format_double((*ce).*field) : std::string{};
}

}  // namespace detail

inline void cmd_measure(std::ostream& out, const Distribution& d, bool csv, bool bits) {
    MeasureSet m = measure_all(d);
    if (bits) m = to_bits(m);
    if (csv) {
        CsvWriter w(out);
        w.header({"H", "H1", "J", "VH", "VJ"});
        w.row({m.H, m.H1, m.J, m.VH, m.VJ});
    } else {
        out << to_json(m).dump() << '\n';
    }
}

inline void cmd_negate(std::ostream& out, const Distribution& d, std::size_t k, bool csv) {
    const Distribution q = negate_k(d, k);
    if (csv) {
        CsvWriter w(out);
        w.header(detail::prob_columns(q.size()));
        w.row(std::vector<double>(q.begin(), q.end()));
    } else {
        out << to_json(q).dump() << '\n';
    }
}

inline void cmd_iterate(std::ostream& out, const Distribution& d, std::size_t steps, double tol,
                        bool csv, bool bits) {
    const NegationTrace trace = trace_negation(d, steps, tol);
    if (!csv) {
        write_trace_jsonl(out, trace, bits);
        return;
    }
    CsvWriter w(out);
    std::vector<std::string> header{"k", "H", "H1", "J", "VH", "VJ"};
    const auto probs = detail::prob_columns(d.size());
    header.insert(header.end(), probs.begin(), probs.end());
    w.header(header);
    for (const TraceStep& step : trace.steps) {
        const MeasureSet m = bits ? to_bits(step.measures) : step.measures;
        std::vector<double> row{static_cast<double>(step.k), m.H, m.H1, m.J, m.VH, m.VJ};
        row.insert(row.end(), step.dist.begin(), step.dist.end());
        w.row(row);
    }
}

inline void cmd_sweep_n2(std::ostream& out, std::size_t steps, bool csv, bool bits) {
    detail::write_sweep(out, sweep_n2(steps, bits), csv);
}

inline void cmd_sweep_n(std::ostream& out, std::size_t n_min, std::size_t n_max, bool csv, bool bits) {
    detail::write_sweep(out, sweep_n(n_min, n_max, bits), csv);
}

inline void cmd_check(std::ostream& out, const CheckConfig& config, const std::vector<ClaimId>& ids,
                      bool csv) {
    std::vector<ClaimReport> reports;
    if (ids.empty()) {
        reports = check_all(config);
    } else {
        for (ClaimId id : ids) reports.push_back(check_claim(id, config));
    }
    if (!csv) {
        for (const ClaimReport& r : reports) out << to_json(r).dump() << '\n';
        return;
    }
    CsvWriter w(out);
    w.header({"claim", "verdict", "trials", "failures", "seed", "tolerance", "lhs", "rhs", "margin"});
    for (const ClaimReport& r : reports) {
        w.raw_row({std::string(claim_info(r.claim).tag), std::string(to_string(r.verdict)),
                   std::to_string(r.trials_run), std::to_string(r.failures), std::to_string(r.seed),
                   format_double(r.tolerance),
                   detail::optional_field(r.counterexample, &Counterexample::lhs),
                   detail::optional_field(r.counterexample, &Counterexample::rhs),
                   detail::optional_field(r.counterexample, &Counterexample::margin)});
    }
}

/// Parses `args` (without the program name) and runs the selected command.
/// Returns the process exit status: 0 on success, nonzero on bad input or
/// execution errors. Claim refutations are findings and still return 0.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Yager negation of discrete distributions and its uncertainty measures", "yager"};
    app.require_subcommand(1);

    DistArgs dist;
    std::string format = "json";
    std::string log_base = "e";
    std::size_t negate_steps = 1;
    std::size_t iterate_steps = kDefaultTraceSteps;
    std::size_t sweep_steps = kDefaultSweepSteps;
    double iterate_tol = kDefaultTraceTolerance;
    std::size_t sweep_n_min = 2;
    std::size_t sweep_n_max = 100;
    CheckConfig config;
    std::vector<std::string> claim_tags;

    auto* measure = app.add_subcommand("measure", "Print H, H1, J, VH and VJ of a distribution");
    detail::add_dist_options(*measure, dist);

    auto* neg = app.add_subcommand("negate", "Print the k-fold negation of a distribution");
    detail::add_dist_options(*neg, dist);

    auto* iterate = app.add_subcommand("iterate", "Trace repeated negation towards uniform");
    detail::add_dist_options(*iterate, dist);
    iterate->add_option("--tol", iterate_tol, "Sup-norm convergence tolerance")->capture_default_str();

    auto* sweep2 = app.add_subcommand("sweep-n2", "Measures of (p1, 1-p1) and its negation over p1");
    auto* sweepn = app.add_subcommand("sweep-n", "Measures of uniform(n) over a range of n");
    sweepn->add_option("--n-min", sweep_n_min, "Smallest n")->capture_default_str();
    sweepn->add_option("--n-max", sweep_n_max, "Largest n")->capture_default_str();

    auto* check = app.add_subcommand("check", "Verify or refute the claim registry");
    check->add_option("--seed", config.seed, "Sampler seed")->capture_default_str();
    check->add_option("--trials", config.trials, "Random trials per n")->capture_default_str();
    check->add_option("--n-min", config.n_range.min, "Smallest n")->capture_default_str();
    check->add_option("--n-max", config.n_range.max, "Largest n")->capture_default_str();
    check->add_option("--tol", config.tolerance, "Comparison tolerance")->capture_default_str();
    check->add_option("--claims", claim_tags, "Claims to check (default: all)")->delimiter(',');
    check->add_option("--workers", config.workers, "Worker threads (0 = all cores)")->capture_default_str();

    for (auto* cmd : {measure, neg, iterate, sweep2, sweepn, check}) detail::add_format_option(*cmd, format);
    for (auto* cmd : {measure, iterate, sweep2, sweepn}) detail::add_log_base_option(*cmd, log_base);
    neg->add_option("-k,--steps", negate_steps, "Number of negations")->capture_default_str();
    iterate->add_option("-k,--steps", iterate_steps, "Maximum number of negations")->capture_default_str();
    sweep2->add_option("-k,--steps", sweep_steps, "Grid intervals on p1")->capture_default_str();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    const bool csv = format == "csv";
    const bool bits = log_base == "2";
    try {
        if (measure->parsed()) {
            cmd_measure(out, parse_distribution(dist.probs, dist.renormalize), csv, bits);
        } else if (neg->parsed()) {
            cmd_negate(out, parse_distribution(dist.probs, dist.renormalize), negate_steps, csv);
        } else if (iterate->parsed()) {
            cmd_iterate(out, parse_distribution(dist.probs, dist.renormalize), iterate_steps, iterate_tol, csv,
                        bits);
        } else if (sweep2->parsed()) {
            cmd_sweep_n2(out, sweep_steps, csv, bits);
        } else if (sweepn->parsed()) {
            cmd_sweep_n(out, sweep_n_min, sweep_n_max, csv, bits);
        } else if (check->parsed()) {
            std::vector<ClaimId> ids;
            for (const std::string& tag : claim_tags) ids.push_back(parse_claim_id(tag));
            cmd_check(out, config, ids, csv);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace yager::cli
