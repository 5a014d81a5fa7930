#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "yager/distribution.hpp"
#include "yager/error.hpp"
#include "yager/measures.hpp"
#include "yager/negation.hpp"

// Figure data: measure curves over a swept parameter.

namespace yager {

inline constexpr std::size_t kDefaultSweepSteps = 200;

struct SweepRow {
    double x = 0.0;
    std::vector<double> values;  // one per Sweep::columns entry
};

struct Sweep {
    std::string x_name;
    std::vector<std::string> columns;
    std::vector<SweepRow> rows;
};

/// P = (p1, 1 - p1) with p1 = i/steps, i = 0..steps, against its negation.
/// Endpoints are kept and use the 0 ln 0 = 0 convention.
inline Sweep sweep_n2(std::size_t steps = kDefaultSweepSteps, bool bits = false) {
    if (steps < 2) throw Error(Errc::InvalidArgument, "sweep needs steps >= 2, got " + std::to_string(steps));
    Sweep s{"p1", {"H_P", "H_neg", "VH_P", "VH_neg", "VJ_P", "VJ_neg"}, {}};
    s.rows.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        const double p1 = static_cast<double>(i) / static_cast<double>(steps);
        const Distribution p = Distribution::make({p1, 1.0 - p1});
        MeasureSet mp = measure_all(p);
        MeasureSet mq = measure_all(negate(p));
        if (bits) {
            mp = to_bits(mp);
            mq = to_bits(mq);
        }
        s.rows.push_back({p1, {mp.H, mq.H, mp.VH, mq.VH, mp.VJ, mq.VJ}});
    }
    return s;
}

/// Uniform distribution measures for every n in [n_min, n_max].
inline Sweep sweep_n(std::size_t n_min, std::size_t n_max, bool bits = false) {
    if (n_min < 2 || n_min > n_max) {
        throw Error(Errc::InvalidArgument, "sweep needs 2 <= n_min <= n_max, got [" +
                                               std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
    }
    Sweep s{"n", {"H_uniform", "VH_uniform", "VJ_uniform"}, {}};
    s.rows.reserve(n_max - n_min + 1);
    for (std::size_t n = n_min; n <= n_max; ++n) {
        MeasureSet m = measure_all(Distribution::uniform(n));
        m.VJ = uniform_varextropy(n);
        if (bits) m = to_bits(m);
        s.rows.push_back({static_cast<double>(n), {m.H, m.VH, m.VJ}});
    }
    return s;
}

}  // namespace yager
