#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace altsnake {

/// Exact integer used for exponents, multiplicities and coefficients.
using Integer = boost::multiprecision::cpp_int;

/// Endpoint type for intervals and ranks.
using Index = std::int64_t;

inline std::optional<std::int64_t> toInt64(const Integer& v) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        return std::nullopt;
    return static_cast<std::int64_t>(v);
}

inline std::string toString(const Integer& v) { return v.str(); }

/// C(n, k) exactly; zero outside 0 <= k <= n.
Integer binomial(Index n, Index k);

}  // namespace altsnake
