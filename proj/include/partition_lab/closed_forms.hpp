#pragma once

#include "partition_lab/count.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace plab {

/// Closed form of S_2 or S_3 on one residue class of n:
///   S(n) = sum_t coeffs[t] * C((n - shift) / period, t).
struct ResidueClassForm {
    std::uint32_t level = 2;
    std::uint32_t residue_mod3 = 0;  ///< unused for level 2
    bool odd = false;
    std::uint32_t shift = 0;
    std::uint32_t period = 2;
    std::vector<std::uint64_t> coeffs;

    bool contains(std::uint32_t n) const noexcept;
    Count evaluate(std::uint32_t n) const;
    std::string class_name() const;
};

/// Coefficient tables: two forms for level 2, six for level 3.
std::span<const ResidueClassForm> s2_forms();
std::span<const ResidueClassForm> s3_forms();

/// Picks the form in `forms` whose class contains n and evaluates it.
/// Throws std::domain_error when no form applies.
Count evaluate_closed(std::span<const ResidueClassForm> forms, std::uint32_t n);

/// S_2(n) for n >= 4; throws std::domain_error below.
Count s2_closed(std::uint32_t n);
/// S_3(n) for n >= 9; throws std::domain_error below.
Count s3_closed(std::uint32_t n);

inline constexpr std::uint32_t s2_closed_min_n = 4;
inline constexpr std::uint32_t s3_closed_min_n = 9;

} // namespace plab
