#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "yager/distribution.hpp"
#include "yager/error.hpp"
#include "yager/measures.hpp"

namespace yager {

inline constexpr double kDefaultTraceTolerance = 1e-9;
inline constexpr std::size_t kDefaultTraceSteps = 100;

/// Yager negation p_i -> (1 - p_i) / (n - 1). Every output entry lies in
/// [0, 1/(n-1)] and uniform(n) is the unique fixed point.
inline Distribution negate(const Distribution& d) {
    const double denom = static_cast<double>(d.size() - 1);
    std::vector<double> out;
    out.reserve(d.size());
    for (double p : d) out.push_back((1.0 - p) / denom);
    return Distribution::make(out);
}

/// k-fold negation in O(n) via the solved recurrence
/// p_i^(k) = 1/n + (-1/(n-1))^k (p_i - 1/n).
inline Distribution negate_k(const Distribution& d, std::size_t k) {
    if (k == 0) return d;
    if (k == 1) return negate(d);
    const double n = static_cast<double>(d.size());
    const double u = 1.0 / n;
    const double factor = std::pow(-1.0 / (n - 1.0), static_cast<double>(k));
    std::vector<double> out;
    out.reserve(d.size());
    for (double p : d) out.push_back(std::clamp(u + factor * (p - u), 0.0, 1.0));
    return Distribution::make(out);
}

struct TraceStep {
    std::size_t k = 0;
    Distribution dist;
    MeasureSet measures;
};

struct NegationTrace {
    std::vector<TraceStep> steps;
    std::optional<std::size_t> converged_at;
    double tolerance = kDefaultTraceTolerance;
};

/// Repeatedly negates d, recording measures at every iterate, until the
/// sup-norm distance to uniform is within tolerance or max_steps negations
/// have been applied. For n = 2 a non-uniform input oscillates with period
/// two and never converges.
inline NegationTrace trace_negation(const Distribution& d,
                                    std::size_t max_steps = kDefaultTraceSteps,
                                    double tolerance = kDefaultTraceTolerance) {
    if (max_steps < 1) throw Error(Errc::InvalidArgument, "max_steps must be >= 1");
    if (!(tolerance > 0.0)) {
        throw Error(Errc::InvalidArgument, "tolerance must be > 0, got " + format_double(tolerance));
    }
    NegationTrace trace;
    trace.tolerance = tolerance;
    Distribution current = d;
    for (std::size_t k = 0;; ++k) {
        trace.steps.push_back({k, current, measure_all(current)});
        if (deviation_from_uniform(current) <= tolerance) {
            trace.converged_at = k;
            break;
        }
        if (k == max_steps) break;
        current = negate(current);
    }
    return trace;
}

}  // namespace yager
