#include "partition_lab/qbinomial.hpp"

#include "partition_lab/euler.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace plab {

namespace {

std::mutex memo_mutex;
std::map<std::pair<std::uint32_t, std::uint32_t>, QPolynomial> memo;

template <std::size_t Vars>
std::string format_monomial(const std::array<const char*, Vars>& names,
                            const typename SparsePoly<Vars>::Exponent& e)
{
    std::string out;
    for (std::size_t v = 0; v < Vars; ++v) {
        if (e[v] == 0)
            continue;
        if (!out.empty())
            out += ' ';
        out += names[v];
        if (e[v] != 1)
            out += "^" + std::to_string(e[v]);
    }
    return out.empty() ? "1" : out;
}

template <std::size_t Vars>
IdentityReport compare(const SparsePoly<Vars>& lhs, const SparsePoly<Vars>& rhs,
                       const std::array<const char*, Vars>& names, std::string region)
{
    IdentityReport report;
    report.lhs_terms = lhs.size();
    report.rhs_terms = rhs.size();
    report.region = std::move(region);
    auto diff = first_difference(lhs, rhs);
    report.equal = !diff;
    if (diff)
        report.first_difference = format_monomial<Vars>(names, diff->exponent) + ": lhs " +
                                  diff->lhs.get_str() + ", rhs " + diff->rhs.get_str();
    return report;
}

// 1 / (1 - q^step * t^t_step) as a series, truncated by keep.
TrivariatePoly geometric(int q_step, int t_step, const TrivariatePoly::Keep& keep)
{
    TrivariatePoly out;
    for (int j = 0;; ++j) {
        TrivariatePoly::Exponent e{q_step * j, t_step * j, 0};
        if (!keep(e))
            break;
        out.add(e, 1);
        if (q_step == 0 && t_step == 0)
            break;
    }
    return out;
}

} // namespace

QPolynomial qbinom(std::uint32_t n, std::uint32_t k)
{
    if (k > n)
        return {};
    if (k == 0 || k == n)
        return QPolynomial{1};
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = memo.find({n, k}); it != memo.end())
            return it->second;
    }
    QPolynomial value = qbinom(n - 1, k - 1) + qbinom(n - 1, k).shifted(k);
    std::lock_guard lock(memo_mutex);
    return memo.try_emplace({n, k}, std::move(value)).first->second;
}

PascalReport verify_pascal(std::uint32_t n, std::uint32_t k)
{
    if (k < 1 || k > n)
        throw std::invalid_argument("verify_pascal requires 1 <= k <= n");
    PascalReport report{.n = n, .k = k};
    const QPolynomial whole = qbinom(n, k);
    const QPolynomial upper = qbinom(n - 1, k);
    const QPolynomial lower = qbinom(n - 1, k - 1);

    report.first_holds = whole == upper.shifted(k) + lower;
    report.second_holds = whole == upper + lower.shifted(n - k);

    QPolynomial rest = whole - lower;
    if (upper.is_zero()) {
        if (rest.is_zero())
            report.first_exponent = k;
    }
    else if (!rest.is_zero()) {
        auto coeffs = rest.coeffs();
        auto lowest = static_cast<std::size_t>(
            std::find_if(coeffs.begin(), coeffs.end(), [](const Count& c) { return c != 0; }) -
            coeffs.begin());
        if (rest == upper.shifted(lowest))
            report.first_exponent = lowest;
    }
    return report;
}

IdentityReport verify_finite_qbt(std::uint32_t n)
{
    if (n > 30)
        throw std::invalid_argument("verify_finite_qbt is limited to n <= 30");
    BivariatePoly product = BivariatePoly::constant(1);
    for (int k = 0; k < static_cast<int>(n); ++k) {
        BivariatePoly factor = BivariatePoly::constant(1);
        factor.add({k, 1}, 1);
        product = product.multiply(factor);
    }
    BivariatePoly sum;
    for (std::uint32_t k = 0; k <= n; ++k) {
        auto gauss = qbinom(n, k);
        int offset = static_cast<int>(k * (k - 1) / 2);
        for (std::size_t e = 0; e < gauss.coeffs().size(); ++e)
            sum.add({offset + static_cast<int>(e), static_cast<int>(k)}, gauss.coeffs()[e]);
    }
    return compare<2>(product, sum, {"q", "t"}, "all monomials");
}

InfiniteQbtReport verify_infinite_qbt_truncated(std::uint32_t K, std::uint32_t Dq, std::uint32_t Dt)
{
    if (K == 0 || Dq == 0 || Dt == 0)
        throw std::invalid_argument("truncation orders must be positive");
    InfiniteQbtReport report;
    report.q_max = std::min(K, Dq);
    report.t_max = std::min(K, Dt);
    report.clipped = Dq > K || Dt > K;
    const int q_max = static_cast<int>(report.q_max);
    const int t_max = static_cast<int>(report.t_max);
    const TrivariatePoly::Keep keep = [&](const TrivariatePoly::Exponent& e) {
        return e[0] <= q_max && e[1] <= t_max;
    };

    // sum side: (a;q)_k / (q;q)_k t^k for k <= K
    TrivariatePoly sum;
    TrivariatePoly a_pochhammer = TrivariatePoly::constant(1);
    TrivariatePoly inverse_q_pochhammer = TrivariatePoly::constant(1);
    for (int k = 0; k <= static_cast<int>(K) && k <= t_max; ++k) {
        if (k > 0) {
            TrivariatePoly factor = TrivariatePoly::constant(1);
            factor.add({k - 1, 0, 1}, -1);
            a_pochhammer = a_pochhammer.multiply(factor, keep);
            inverse_q_pochhammer = inverse_q_pochhammer.multiply(geometric(k, 0, keep), keep);
        }
        sum += a_pochhammer.multiply(inverse_q_pochhammer, keep)
                   .multiply(TrivariatePoly::term({0, k, 0}, 1), keep);
    }

    auto product_from = [&](int first) {
        TrivariatePoly product = TrivariatePoly::constant(1);
        for (int k = first; k <= static_cast<int>(K); ++k) {
            TrivariatePoly numerator = TrivariatePoly::constant(1);
            numerator.add({k, 1, 1}, -1);
            product = product.multiply(numerator, keep).multiply(geometric(k, 1, keep), keep);
        }
        return product;
    };

    std::string region = "q^i t^j a^l with i <= " + std::to_string(q_max) + ", j <= " + std::to_string(t_max);
    report.standard = compare<3>(sum, product_from(0), {"q", "t", "a"}, region);
    report.product_from_one = compare<3>(sum, product_from(1), {"q", "t", "a"}, region);
    return report;
}

IdentityReport verify_jacobi_truncated(std::uint32_t J, std::uint32_t D)
{
    if (J == 0 || D == 0)
        throw std::invalid_argument("truncation orders must be positive");
    if (D > 2 * J)
        throw std::invalid_argument("verify_jacobi_truncated requires D <= 2J (D = " + std::to_string(D) +
                                    ", J = " + std::to_string(J) + ")");
    const int d = static_cast<int>(D);
    const BivariatePoly::Keep keep = [d](const BivariatePoly::Exponent& e) { return e[0] <= d; };

    BivariatePoly product = BivariatePoly::constant(1);
    for (int j = 1; j <= static_cast<int>(J); ++j) {
        BivariatePoly plus_z = BivariatePoly::constant(1);
        plus_z.add({2 * j - 1, 1}, 1);
        BivariatePoly plus_inverse_z = BivariatePoly::constant(1);
        plus_inverse_z.add({2 * j - 1, -1}, 1);
        BivariatePoly minus_q = BivariatePoly::constant(1);
        minus_q.add({2 * j, 0}, -1);
        product = product.multiply(plus_z, keep).multiply(plus_inverse_z, keep).multiply(minus_q, keep);
    }
    BivariatePoly theta;
    for (int j = -static_cast<int>(J); j <= static_cast<int>(J); ++j)
        theta.add({j * j, j}, 1);
    return compare<2>(product, theta.filtered(keep), {"q", "z"}, "q-degree <= " + std::to_string(D));
}

std::vector<Partition> gaussian_witnesses(std::uint32_t N, std::uint32_t K, std::uint32_t r)
{
    if (K > N)
        return {};
    return enumerate_restricted(N + 1 + r, PartitionConstraint::exactly_with_greatest(K + 1, N - K + 1));
}

InterpretationReport interpretation_check(std::uint32_t n, std::uint32_t m, std::uint32_t r,
                                          bool with_witnesses)
{
    if (n + m > 14)
        throw std::invalid_argument("interpretation_check is limited to n + m <= 14");
    InterpretationReport report;
    report.n = n;
    report.m = m;
    report.r = r;
    report.coefficient = qbinom(n + m, n).coefficient(r);
    auto new_reading = PartitionConstraint::exactly_with_greatest(n + 1, m + 1);
    auto classical = PartitionConstraint::at_most_each_at_most(m, n);
    report.new_count = count_restricted(n + m + 1 + r, new_reading);
    report.classical_count = count_restricted(r, classical);
    report.consistent = report.coefficient == report.new_count && report.new_count == report.classical_count;
    if (with_witnesses) {
        report.new_witnesses = enumerate_restricted(n + m + 1 + r, new_reading);
        report.classical_witnesses = enumerate_restricted(r, classical);
    }
    return report;
}

GridReport grid_identity(std::uint32_t N)
{
    if (N == 0 || N > 60)
        throw std::invalid_argument("grid_identity requires 1 <= N <= 60");
    GridReport report;
    report.N = N;
    for (std::uint32_t a = 1; a <= N; ++a)
        for (std::uint32_t b = 1; a + b <= N + 1; ++b)
            report.grid_sum += qbinom(a + b - 2, a - 1).coefficient(N - a - b + 1);
    PartitionTable table(N);
    report.expected = table[N];
    report.equal = report.grid_sum == report.expected;
    return report;
}

DualityReport duality_check(std::uint32_t N, std::uint32_t a, std::uint32_t b)
{
    if (N == 0 || N > 60)
        throw std::invalid_argument("duality_check requires 1 <= N <= 60");
    DualityReport report{.N = N, .a = a, .b = b};
    auto forward = PartitionConstraint::exactly_with_greatest(a, b);
    auto backward = PartitionConstraint::exactly_with_greatest(b, a);
    report.forward = count_restricted(N, forward);
    report.backward = count_restricted(N, backward);
    report.counts_equal = report.forward == report.backward;

    auto lhs = enumerate_restricted(N, forward);
    auto rhs = enumerate_restricted(N, backward);
    std::vector<Partition> image;
    image.reserve(lhs.size());
    for (const auto& p : lhs)
        image.push_back(conjugate(p));
    std::sort(image.begin(), image.end());
    std::sort(rhs.begin(), rhs.end());
    report.bijection = image == rhs && std::adjacent_find(image.begin(), image.end()) == image.end();
    return report;
}

} // namespace plab
