#include "partition_lab/count.hpp"

#include <algorithm>
#include <stdexcept>

namespace plab {

Count parse_decimal(std::string_view digits)
{
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw std::invalid_argument("not a decimal count: '" + std::string(digits) + "'");
    return Count(std::string(digits), 10);
}

Count binomial(std::uint64_t x, std::uint64_t t)
{
    Count out;
    if (x < t)
        return out;
    mpz_bin_uiui(out.get_mpz_t(), x, t);
    return out;
}

} // namespace plab
