#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace plab {

/// Exact count. Backed by GMP; every partition count in the library uses it.
using Count = mpz_class;

inline std::string to_decimal(const Count& c) { return c.get_str(10); }

/// Parses a non-empty string of ASCII digits. Throws std::invalid_argument otherwise.
Count parse_decimal(std::string_view digits);

/// Ordinary binomial C(x, t); zero when x < t.
Count binomial(std::uint64_t x, std::uint64_t t);

} // namespace plab
