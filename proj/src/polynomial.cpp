#include "partition_lab/polynomial.hpp"

#include <algorithm>

namespace plab {

QPolynomial::QPolynomial(std::vector<Count> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

QPolynomial QPolynomial::monomial(std::size_t exponent, const Count& coeff)
{
    std::vector<Count> c(exponent + 1);
    c[exponent] = coeff;
    return QPolynomial(std::move(c));
}

Count QPolynomial::coefficient(std::size_t exponent) const
{
    return exponent < coeffs_.size() ? coeffs_[exponent] : Count(0);
}

Count QPolynomial::coefficient_sum() const
{
    Count total;
    for (const auto& c : coeffs_)
        total += c;
    return total;
}

bool QPolynomial::is_palindromic() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

QPolynomial QPolynomial::shifted(std::size_t exponent) const
{
    if (is_zero())
        return {};
    std::vector<Count> c(exponent);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return QPolynomial(std::move(c));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<Count> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return QPolynomial(std::move(c));
}

std::string QPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        const Count& c = coeffs_[e];
        if (c == 0)
            continue;
        bool negative = c < 0;
        Count magnitude = abs(c);
        if (!out.empty())
            out += negative ? " - " : " + ";
        else if (negative)
            out += "-";
        if (magnitude != 1 || e == 0)
            out += magnitude.get_str();
        if (e >= 1)
            out += "q";
        if (e >= 2)
            out += "^" + std::to_string(e);
    }
    return out;
}

void QPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

} // namespace plab
