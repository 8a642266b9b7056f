#pragma once

#include "partition_lab/count.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace plab {

/// Dense polynomial in q with exact integer coefficients; coeffs()[e] is the
/// coefficient of q^e. Trailing zeros are trimmed, so the zero polynomial has
/// no coefficients.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Count> coeffs);
    QPolynomial(std::initializer_list<long> coeffs);

    static QPolynomial monomial(std::size_t exponent, const Count& coeff = 1);

    std::span<const Count> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Count coefficient(std::size_t exponent) const;

    /// Value at q = 1.
    Count coefficient_sum() const;
    bool is_palindromic() const;

    /// Multiply by q^exponent.
    QPolynomial shifted(std::size_t exponent) const;

    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator-=(const QPolynomial& rhs);
    friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
    friend QPolynomial operator-(QPolynomial lhs, const QPolynomial& rhs) { return lhs -= rhs; }
    friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    /// "1 + q + 2q^2" style rendering.
    std::string to_string() const;

private:
    void trim();
    std::vector<Count> coeffs_;
};

/// Sparse Laurent polynomial in Vars variables with exact integer coefficients.
/// Zero coefficients are never stored.
template <std::size_t Vars>
class SparsePoly {
public:
    using Exponent = std::array<int, Vars>;
    using Keep = std::function<bool(const Exponent&)>;

    SparsePoly() = default;

    static SparsePoly constant(const Count& c)
    {
        SparsePoly out;
        out.add(Exponent{}, c);
        return out;
    }
    static SparsePoly term(const Exponent& e, const Count& c)
    {
        SparsePoly out;
        out.add(e, c);
        return out;
    }

    void add(const Exponent& e, const Count& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Count coefficient(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Count(0) : it->second;
    }

    const std::map<Exponent, Count>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Product, discarding every monomial for which keep() is false. Truncating
    /// eagerly is only sound when keep() describes a down-closed region in
    /// exponents that can only grow under multiplication.
    SparsePoly multiply(const SparsePoly& rhs, const Keep& keep = {}) const
    {
        SparsePoly out;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : rhs.terms_) {
                Exponent e;
                for (std::size_t v = 0; v < Vars; ++v)
                    e[v] = ea[v] + eb[v];
                if (!keep || keep(e))
                    out.add(e, ca * cb);
            }
        return out;
    }

    SparsePoly filtered(const Keep& keep) const
    {
        SparsePoly out;
        for (const auto& [e, c] : terms_)
            if (keep(e))
                out.terms_.emplace(e, c);
        return out;
    }

    SparsePoly& operator+=(const SparsePoly& rhs)
    {
        for (const auto& [e, c] : rhs.terms_)
            add(e, c);
        return *this;
    }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    std::map<Exponent, Count> terms_;
};

using BivariatePoly = SparsePoly<2>;
using TrivariatePoly = SparsePoly<3>;

template <std::size_t Vars>
struct MonomialMismatch {
    typename SparsePoly<Vars>::Exponent exponent;
    Count lhs;
    Count rhs;
};

/// First monomial (in exponent order) whose coefficients differ.
template <std::size_t Vars>
std::optional<MonomialMismatch<Vars>> first_difference(const SparsePoly<Vars>& lhs,
                                                       const SparsePoly<Vars>& rhs)
{
    std::optional<MonomialMismatch<Vars>> best;
    auto consider = [&](const auto& e) {
        if (best && !(e < best->exponent))
            return;
        Count a = lhs.coefficient(e), b = rhs.coefficient(e);
        if (a != b)
            best = MonomialMismatch<Vars>{e, a, b};
    };
    for (const auto& [e, c] : lhs.terms())
        consider(e);
    for (const auto& [e, c] : rhs.terms())
        consider(e);
    return best;
}

} // namespace plab
