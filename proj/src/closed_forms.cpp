#include "partition_lab/closed_forms.hpp"

#include <stdexcept>

namespace plab {

namespace {

// clang-format off
const std::vector<ResidueClassForm> level2 = {
    {2, 0, true,  5, 2, {2, 6, 6, 2}},
    {2, 0, false, 4, 2, {1, 4, 5, 2}},
};

const std::vector<ResidueClassForm> level3 = {
    {3, 0, true,   9, 6, { 1,  48, 310,  695, 648, 216}},
    {3, 1, false, 10, 6, { 2,  72, 390,  788, 684, 216}},
    {3, 2, true,  11, 6, { 5, 105, 483,  887, 720, 216}},
    {3, 0, false, 12, 6, {10, 148, 590,  992, 756, 216}},
    {3, 1, true,  13, 6, {18, 203, 712, 1103, 792, 216}},
    {3, 2, false, 14, 6, {30, 272, 850, 1220, 828, 216}},
};
// clang-format on

} // namespace

bool ResidueClassForm::contains(std::uint32_t n) const noexcept
{
    if (n < shift || (n % 2 == 1) != odd)
        return false;
    return level == 2 || n % 3 == residue_mod3;
}

Count ResidueClassForm::evaluate(std::uint32_t n) const
{
    if (!contains(n))
        throw std::domain_error("n = " + std::to_string(n) + " is outside class " + class_name());
    std::uint32_t x = (n - shift) / period;
    Count total;
    for (std::size_t t = 0; t < coeffs.size(); ++t)
        total += binomial(x, t) * coeffs[t];
    return total;
}

std::string ResidueClassForm::class_name() const
{
    std::string parity = odd ? "odd" : "even";
    if (level == 2)
        return "S_2, n " + parity;
    return "S_3, n = " + std::to_string(residue_mod3) + " mod 3, n " + parity;
}

std::span<const ResidueClassForm> s2_forms() { return level2; }
std::span<const ResidueClassForm> s3_forms() { return level3; }

Count evaluate_closed(std::span<const ResidueClassForm> forms, std::uint32_t n)
{
    for (const auto& form : forms)
        if (form.contains(n))
            return form.evaluate(n);
    throw std::domain_error("no closed form covers n = " + std::to_string(n));
}

Count s2_closed(std::uint32_t n)
{
    if (n < s2_closed_min_n)
        throw std::domain_error("s2_closed requires n >= 4, got " + std::to_string(n));
    return evaluate_closed(level2, n);
}

Count s3_closed(std::uint32_t n)
{
    if (n < s3_closed_min_n)
        throw std::domain_error("s3_closed requires n >= 9, got " + std::to_string(n));
    return evaluate_closed(level3, n);
}

} // namespace plab
