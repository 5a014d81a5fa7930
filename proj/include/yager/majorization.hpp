#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "yager/distribution.hpp"
#include "yager/error.hpp"

namespace yager {

/// True iff p majorizes q: for every k the k largest entries of p sum to at
/// least the k largest entries of q. `slack` absorbs rounding in the partial
/// sums; both totals are already one within kSumTolerance.
inline bool majorizes(const Distribution& p, const Distribution& q, double slack = 1e-12) {
    if (p.size() != q.size()) {
        throw Error(Errc::DimensionMismatch, "majorization needs equal sizes (" +
                                                 std::to_string(p.size()) + " vs " +
                                                 std::to_string(q.size()) + ")");
    }
    std::vector<double> a(p.begin(), p.end());
    std::vector<double> b(q.begin(), q.end());
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    double sa = 0.0;
    double sb = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        sa += a[k];
        sb += b[k];
        if (sa + slack < sb) return false;
    }
    return true;
}

}  // namespace yager
