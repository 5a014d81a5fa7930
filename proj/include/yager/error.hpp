#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace yager {

enum class Errc {
    TooFewOutcomes,
    NotADistribution,
    DimensionMismatch,
    UnknownClaim,
    InvalidArgument,
};

constexpr std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::TooFewOutcomes: return "TooFewOutcomes";
        case Errc::NotADistribution: return "NotADistribution";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::UnknownClaim: return "UnknownClaim";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace yager
