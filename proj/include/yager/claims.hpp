#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "yager/distribution.hpp"
#include "yager/error.hpp"
#include "yager/majorization.hpp"
#include "yager/measures.hpp"
#include "yager/negation.hpp"
#include "yager/sampler.hpp"

// Randomized verification of the nine negation/uncertainty claims.
//
// Every claim is decided sample by sample. Samples are visited in a fixed
// global order: the fixed fixtures first, then for each n in ascending order
// the deterministic uniform-perturbation probe (maximizer claims only) and the
// seeded random trials. The reported counterexample is the failing sample
// with the smallest global index, so a report does not depend on how many
// workers evaluated the random trials.

namespace yager {

enum class ClaimId { C1 = 1, C2, C3, C4, C5, C6, C7, C8, C9 };

enum class ClaimKind {
    NegationInequality,  // measure(negate(p)) >= measure(p) for every p
    UniformLimit,        // behaviour of measure(uniform(n)) as n grows
    NegatedMaximizer,    // measure(negate(p)) is largest at p = uniform(n)
};

enum class Measure { H, VH, VJ };

enum class Verdict { Confirmed, Refuted, Vacuous };

constexpr std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Confirmed: return "CONFIRMED";
        case Verdict::Refuted: return "REFUTED";
        case Verdict::Vacuous: return "VACUOUS";
    }
    return "UNKNOWN";
}

struct Claim {
    ClaimId id;
    std::string_view tag;
    std::string_view statement;
    ClaimKind kind;
    Measure measure;
};

inline const std::array<Claim, 9>& claim_registry() {
    static const std::array<Claim, 9> registry{{
        {ClaimId::C1, "C1", "H(negate(P)) >= H(P) for every distribution P",
         ClaimKind::NegationInequality, Measure::H},
        {ClaimId::C2, "C2", "VH(negate(P)) >= VH(P) for every distribution P",
         ClaimKind::NegationInequality, Measure::VH},
        {ClaimId::C3, "C3", "VJ(negate(P)) >= VJ(P) for every distribution P",
         ClaimKind::NegationInequality, Measure::VJ},
        {ClaimId::C4, "C4", "H(uniform(n)) = ln n grows strictly with n and is unbounded",
         ClaimKind::UniformLimit, Measure::H},
        {ClaimId::C5, "C5", "VH(uniform(n)) = 0 for every n", ClaimKind::UniformLimit,
         Measure::VH},
        {ClaimId::C6, "C6", "|VJ(uniform(n))| decreases with n towards the limit 0",
         ClaimKind::UniformLimit, Measure::VJ},
        {ClaimId::C7, "C7", "H(negate(P)) is maximized at P = uniform(n)",
         ClaimKind::NegatedMaximizer, Measure::H},
        {ClaimId::C8, "C8", "VH(negate(P)) is maximized at P = uniform(n)",
         ClaimKind::NegatedMaximizer, Measure::VH},
        {ClaimId::C9, "C9", "VJ(negate(P)) is maximized at P = uniform(n)",
         ClaimKind::NegatedMaximizer, Measure::VJ},
    }};
    return registry;
}

inline const Claim& claim_info(ClaimId id) {
    return claim_registry()[static_cast<std::size_t>(id) - 1];
}

inline ClaimId parse_claim_id(std::string_view tag) {
    for (const Claim& c : claim_registry()) {
        if (c.tag == tag) return c.id;
    }
    throw Error(Errc::UnknownClaim, "unknown claim '" + std::string(tag) + "' (expected C1..C9)");
}

struct NRange {
    std::size_t min = 3;
    std::size_t max = 8;

    bool contains(std::size_t n) const noexcept { return n >= min && n <= max; }
};

inline constexpr std::size_t kMaxClaimN = 10000;

struct CheckConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 10000;
    NRange n_range{};
    double tolerance = 1e-9;
    unsigned workers = 0;  // 0 selects std::thread::hardware_concurrency()
};

struct Counterexample {
    Distribution p;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
};

struct Extremum {
    Distribution p;
    double value = 0.0;
};

/// Verdict for one claim. For inequality claims lhs is the side the claim
/// says is larger (the negated measure) and margin is how far it falls short;
/// for maximizer claims lhs is the value at uniform and rhs the sample value.
struct ClaimReport {
    ClaimId claim = ClaimId::C1;
    Verdict verdict = Verdict::Vacuous;
    std::size_t trials_run = 0;
    std::size_t failures = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    std::optional<Counterexample> counterexample;
    std::optional<Extremum> max_observed;
    std::vector<std::pair<std::string, double>> metrics;
};

/// The worked examples whose values are fixed in advance; always evaluated
/// when their size lies in the checked range.
inline const std::vector<Distribution>& claim_fixtures() {
    static const std::vector<Distribution> fixtures{
        Distribution::make({0.4, 0.3, 0.2, 0.1}),
        Distribution::make({0.6, 0.3, 0.1}),
    };
    return fixtures;
}

inline double evaluate_measure(Measure m, const Distribution& d) {
    switch (m) {
        case Measure::H: return entropy(d);
        case Measure::VH: return varentropy(d);
        case Measure::VJ: return varextropy(d);
    }
    return 0.0;
}

/// uniform(n) +/- eps (e_i - e_j) for eps in {1e-3, 1e-2}, preceded by
/// uniform(n) itself. All ordered pairs for n <= 64; beyond that only pairs
/// touching coordinate 0, which are permutation-equivalent to the rest.
inline std::vector<Distribution> uniform_perturbation_probe(std::size_t n) {
    std::vector<Distribution> probe;
    probe.push_back(Distribution::uniform(n));
    const double u = 1.0 / static_cast<double>(n);
    std::vector<double> base(n, u);
    for (double eps : {1e-3, 1e-2}) {
        if (eps > u) continue;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (n > 64 && i != 0 && j != 0) continue;
                std::vector<double> p = base;
                p[i] += eps;
                p[j] -= eps;
                probe.push_back(Distribution::make(p));
            }
        }
    }
    return probe;
}

namespace detail {

struct SampleOutcome {
    bool failed = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double value = 0.0;     // sample's negated measure (maximizer claims)
    bool decreased = false;  // measure(negate(p)) <= measure(p)
    bool oracle_disagrees = false;
};

// Per-claim evaluation of one distribution, given the reference value at
// uniform for maximizer claims.
inline SampleOutcome evaluate_sample(const Claim& claim, const Distribution& p,
                                     double uniform_reference, double tolerance) {
    SampleOutcome out;
    const Distribution q = negate(p);
    if (claim.kind == ClaimKind::NegationInequality) {
        out.lhs = evaluate_measure(claim.measure, q);
        out.rhs = evaluate_measure(claim.measure, p);
        out.decreased = out.lhs <= out.rhs;
        out.failed = out.lhs < out.rhs - tolerance;
        if (claim.id == ClaimId::C1) {
            // Entropy is Schur-concave, so p majorizing negate(p) independently
            // implies the inequality.
            const bool majorized = majorizes(p, q);
            out.oracle_disagrees = majorized == out.failed;
            out.failed = out.failed || !majorized;
        }
    } else {
        out.value = evaluate_measure(claim.measure, q);
        out.lhs = uniform_reference;
        out.rhs = out.value;
        out.failed = out.value > uniform_reference + tolerance;
    }
    return out;
}

struct Aggregate {
    std::size_t evaluated = 0;
    std::size_t failures = 0;
    std::size_t decreased = 0;
    std::size_t disagreements = 0;
    std::uint64_t first_failure = std::numeric_limits<std::uint64_t>::max();
    std::optional<Counterexample> counterexample;
    std::uint64_t max_index = std::numeric_limits<std::uint64_t>::max();
    std::optional<Extremum> max_observed;

    void add(std::uint64_t index, const Distribution& p, const SampleOutcome& s, bool track_max) {
        ++evaluated;
        if (s.decreased) ++decreased;
        if (s.oracle_disagrees) ++disagreements;
        if (s.failed) {
            ++failures;
            if (index < first_failure) {
                first_failure = index;
                counterexample = Counterexample{p, s.lhs, s.rhs, failure_margin(s)};
            }
        }
        if (track_max) consider_max(index, Extremum{p, s.value});
    }

    void consider_max(std::uint64_t index, const Extremum& e) {
        if (!max_observed || e.value > max_observed->value ||
            (e.value == max_observed->value && index < max_index)) {
            max_observed = e;
            max_index = index;
        }
    }

    // Order-independent: counts add, minima and maxima are keyed by index.
    void merge(const Aggregate& other) {
        evaluated += other.evaluated;
        failures += other.failures;
        decreased += other.decreased;
        disagreements += other.disagreements;
        if (other.counterexample && other.first_failure < first_failure) {
            first_failure = other.first_failure;
            counterexample = other.counterexample;
        }
        if (other.max_observed) consider_max(other.max_index, *other.max_observed);
    }

    static double failure_margin(const SampleOutcome& s) { return s.rhs - s.lhs; }
};

inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Evaluates random trials [0, trials) for one n; trial t has global index
// base + t.
inline Aggregate run_random_trials(const Claim& claim, const CheckConfig& config, std::size_t n,
                                   double uniform_reference, std::uint64_t base) {
    const SimplexSamplerConfig sampler{config.seed, n, config.trials};
    const bool track_max = claim.kind == ClaimKind::NegatedMaximizer;
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(resolve_workers(config.workers), config.trials));

    auto run_block = [&](std::size_t begin, std::size_t end, Aggregate& agg) {
        for (std::size_t t = begin; t < end; ++t) {
            const Distribution p = sample_uniform_simplex(sampler, t);
            agg.add(base + t, p, evaluate_sample(claim, p, uniform_reference, config.tolerance),
                    track_max);
        }
    };

    std::vector<Aggregate> partial(workers);
    if (workers == 1) {
        run_block(0, config.trials, partial[0]);
        return partial[0];
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = config.trials * w / workers;
            const std::size_t end = config.trials * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] {
                try {
                    run_block(begin, end, partial[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    Aggregate total;
    for (const Aggregate& a : partial) total.merge(a);
    return total;
}

inline void validate_config(const CheckConfig& config) {
    if (config.trials < 1) throw Error(Errc::InvalidArgument, "trials must be >= 1");
    if (config.n_range.min < 2 || config.n_range.max > kMaxClaimN ||
        config.n_range.min > config.n_range.max) {
        throw Error(Errc::InvalidArgument,
                    "n range [" + std::to_string(config.n_range.min) + ", " +
                        std::to_string(config.n_range.max) + "] must satisfy 2 <= n_min <= n_max <= " +
                        std::to_string(kMaxClaimN));
    }
    if (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance)) {
        throw Error(Errc::InvalidArgument,
                    "tolerance must be positive and finite, got " + format_double(config.tolerance));
    }
}

inline ClaimReport finish_sampled(const Claim& claim, const CheckConfig& config,
                                  const Aggregate& agg, std::size_t random_trials,
                                  std::size_t random_decreased, double probe_excess) {
    ClaimReport r;
    r.claim = claim.id;
    r.seed = config.seed;
    r.tolerance = config.tolerance;
    r.trials_run = agg.evaluated;
    r.failures = agg.failures;
    r.counterexample = agg.counterexample;
    r.verdict = agg.evaluated == 0 ? Verdict::Vacuous
                : agg.failures > 0 ? Verdict::Refuted
                                   : Verdict::Confirmed;
    if (claim.kind == ClaimKind::NegationInequality) {
        r.metrics.emplace_back("fraction_negation_decreased",
                               random_trials == 0 ? 0.0
                                                  : static_cast<double>(random_decreased) /
                                                        static_cast<double>(random_trials));
        if (claim.id == ClaimId::C1) {
            r.metrics.emplace_back("majorization_disagreements",
                                   static_cast<double>(agg.disagreements));
        }
    } else {
        r.max_observed = agg.max_observed;
        r.metrics.emplace_back("probe_max_minus_uniform", probe_excess);
    }
    return r;
}

inline ClaimReport check_sampled_claim(const Claim& claim, const CheckConfig& config) {
    const bool maximizer = claim.kind == ClaimKind::NegatedMaximizer;
    const bool track_max = maximizer;
    Aggregate agg;
    std::uint64_t index = 0;

    auto reference_for = [&](std::size_t n) {
        return maximizer ? evaluate_measure(claim.measure, negate(Distribution::uniform(n))) : 0.0;
    };

    for (const Distribution& fixture : claim_fixtures()) {
        if (!config.n_range.contains(fixture.size())) continue;
        const double ref = reference_for(fixture.size());
        agg.add(index++, fixture, evaluate_sample(claim, fixture, ref, config.tolerance), track_max);
    }

    std::size_t random_trials = 0;
    std::size_t random_decreased = 0;
    double probe_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t n = config.n_range.min; n <= config.n_range.max; ++n) {
        const double ref = reference_for(n);
        if (maximizer) {
            for (const Distribution& p : uniform_perturbation_probe(n)) {
                const SampleOutcome s = evaluate_sample(claim, p, ref, config.tolerance);
                probe_excess = std::max(probe_excess, s.value - ref);
                agg.add(index++, p, s, track_max);
            }
        }
        const Aggregate random = run_random_trials(claim, config, n, ref, index);
        index += config.trials;
        // n = 2 leaves every measure unchanged, so it says nothing about direction.
        if (n >= 3) {
            random_trials += random.evaluated;
            random_decreased += random.decreased;
        }
        agg.merge(random);
    }
    return finish_sampled(claim, config, agg, random_trials, random_decreased, probe_excess);
}

}  // namespace detail

/// n_min, every power of two strictly between, and n_max.
inline std::vector<std::size_t> limit_grid(const NRange& range) {
    std::vector<std::size_t> grid{range.min};
    for (std::size_t n = 2; n < range.max; n *= 2) {
        if (n > range.min) grid.push_back(n);
    }
    if (range.max != range.min) grid.push_back(range.max);
    return grid;
}

namespace detail {

inline ClaimReport check_limit_claim(const Claim& claim, const CheckConfig& config) {
    ClaimReport r;
    r.claim = claim.id;
    r.seed = config.seed;
    r.tolerance = config.tolerance;

    std::vector<std::size_t> grid = limit_grid(config.n_range);
    if (claim.id == ClaimId::C6) std::erase_if(grid, [](std::size_t n) { return n < 3; });
    r.trials_run = grid.size();

    std::optional<double> previous;
    std::size_t compared_pairs = 0;
    auto fail = [&](std::size_t n, double lhs, double rhs, double margin) {
        ++r.failures;
        if (!r.counterexample) r.counterexample = Counterexample{Distribution::uniform(n), lhs, rhs, margin};
    };

    for (std::size_t n : grid) {
        const Distribution u = Distribution::uniform(n);
        const double v = evaluate_measure(claim.measure, u);
        switch (claim.id) {
            case ClaimId::C4: {
                const double ln_n = std::log(static_cast<double>(n));
                if (std::abs(v - ln_n) > config.tolerance) fail(n, v, ln_n, std::abs(v - ln_n));
                if (previous) {
                    ++compared_pairs;
                    if (!(v > *previous)) fail(n, v, *previous, *previous - v);
                }
                previous = v;
                break;
            }
            case ClaimId::C5:
                ++compared_pairs;
                if (std::abs(v) > config.tolerance) fail(n, v, 0.0, std::abs(v));
                break;
            default: {
                const double magnitude = std::abs(v);
                if (previous) {
                    ++compared_pairs;
                    if (!(magnitude < *previous)) fail(n, magnitude, *previous, magnitude - *previous);
                }
                previous = magnitude;
                break;
            }
        }
        if (n == grid.back()) r.metrics.emplace_back("value_at_n_max", v);
    }
    r.metrics.emplace_back("grid_points", static_cast<double>(grid.size()));
    r.verdict = r.failures > 0 ? Verdict::Refuted
                : compared_pairs == 0 ? Verdict::Vacuous
                                      : Verdict::Confirmed;
    return r;
}

}  // namespace detail

inline ClaimReport check_claim(ClaimId id, const CheckConfig& config) {
    detail::validate_config(config);
    const Claim& claim = claim_info(id);
    if (claim.kind == ClaimKind::UniformLimit) return detail::check_limit_claim(claim, config);
    return detail::check_sampled_claim(claim, config);
}

inline std::vector<ClaimReport> check_all(const CheckConfig& config) {
    detail::validate_config(config);
    std::vector<ClaimReport> reports;
    for (const Claim& c : claim_registry()) reports.push_back(check_claim(c.id, config));
    return reports;
}

}  // namespace yager
