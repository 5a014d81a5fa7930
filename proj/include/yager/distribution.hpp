#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "yager/error.hpp"
#include "yager/format.hpp"

namespace yager {

/// Absolute tolerance on |sum(p) - 1| accepted by validation.
inline constexpr double kSumTolerance = 1e-9;

/// A validated point on the probability simplex with at least two outcomes.
///
/// Instances are immutable once built; the only way to obtain one is through
/// make() or uniform(), both of which enforce n >= 2, finite entries in
/// [0, 1], and a sum within kSumTolerance of one.
class Distribution {
public:
    static Distribution make(std::span<const double> values, bool renormalize = false) {
        if (values.size() < 2) {
            throw Error(Errc::TooFewOutcomes,
                        "a distribution needs at least 2 outcomes, got " +
                            std::to_string(values.size()));
        }
        std::vector<double> probs(values.begin(), values.end());
        if (renormalize) {
            double total = 0.0;
            bool ok = true;
            for (double v : probs) {
                if (!std::isfinite(v) || v < 0.0) {
                    ok = false;
                    break;
                }
                total += v;
            }
            if (ok && std::isfinite(total) && total > 0.0) {
                for (double& v : probs) v /= total;
            }
        }
        validate(probs);
        return Distribution(std::move(probs));
    }

    static Distribution make(std::initializer_list<double> values, bool renormalize = false) {
        return make(std::span<const double>(values.begin(), values.size()), renormalize);
    }

    static Distribution uniform(std::size_t n) {
        if (n < 2) {
            throw Error(Errc::TooFewOutcomes,
                        "uniform distribution needs n >= 2, got " + std::to_string(n));
        }
        return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
    }

    /// Throws NotADistribution naming the first offending entry.
    static void validate(std::span<const double> probs) {
        if (probs.size() < 2) {
            throw Error(Errc::TooFewOutcomes,
                        "a distribution needs at least 2 outcomes, got " +
                            std::to_string(probs.size()));
        }
        double total = 0.0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            const double v = probs[i];
            const char* problem = !std::isfinite(v) ? "is not finite"
                                  : v < 0.0         ? "is negative"
                                  : v > 1.0         ? "exceeds 1"
                                                    : nullptr;
            if (problem != nullptr) {
                throw Error(Errc::NotADistribution,
                            "entry " + std::to_string(i + 1) + " (p_" + std::to_string(i + 1) +
                                " = " + format_double(v) + ") " + problem);
            }
            total += v;
        }
        if (std::abs(total - 1.0) > kSumTolerance) {
            throw Error(Errc::NotADistribution,
                        "probabilities sum = " + format_double(total) + ", expected 1 within " +
                            format_double(kSumTolerance));
        }
    }

    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const noexcept { return probs_[i]; }
    std::span<const double> probs() const noexcept { return probs_; }
    auto begin() const noexcept { return probs_.begin(); }
    auto end() const noexcept { return probs_.end(); }

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    explicit Distribution(std::vector<double> probs) : probs_(std::move(probs)) {}

    std::vector<double> probs_;
};

/// Largest absolute deviation of any entry from 1/n.
inline double deviation_from_uniform(const Distribution& d) noexcept {
    const double u = 1.0 / static_cast<double>(d.size());
    double worst = 0.0;
    for (double p : d) worst = std::max(worst, std::abs(p - u));
    return worst;
}

inline double sup_distance(const Distribution& a, const Distribution& b) {
    if (a.size() != b.size()) {
        throw Error(Errc::DimensionMismatch, "distributions have different sizes (" +
                                                 std::to_string(a.size()) + " vs " +
                                                 std::to_string(b.size()) + ")");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace yager
