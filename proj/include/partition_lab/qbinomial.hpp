#pragma once

#include "partition_lab/count.hpp"
#include "partition_lab/partition.hpp"
#include "partition_lab/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plab {

/// Gaussian polynomial [n k]: zero when k > n, otherwise the degree k(n-k)
/// polynomial built from [n k] = [n-1 k-1] + q^k [n-1 k]. Results are
/// memoized in a process-wide table guarded by a mutex; concurrent fills of
/// the same key store the same value.
QPolynomial qbinom(std::uint32_t n, std::uint32_t k);

/// Checks  [n k] = q^k [n-1 k] + [n-1 k-1]  and  [n k] = [n-1 k] + q^(n-k) [n-1 k-1].
/// first_exponent is the exponent r that makes  [n k] = q^r [n-1 k] + [n-1 k-1]
/// hold (k itself when k = n, where the q^r term vanishes for every r).
struct PascalReport {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    bool first_holds = false;
    bool second_holds = false;
    std::optional<std::size_t> first_exponent;
};

PascalReport verify_pascal(std::uint32_t n, std::uint32_t k);

/// Outcome of an exact expansion of both sides of an identity.
struct IdentityReport {
    bool equal = false;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    std::string first_difference;  ///< empty when equal
    std::string region;            ///< monomials compared
};

/// prod_{k=0}^{n-1} (1 + q^k t) = sum_{k=0}^{n} q^{k(k-1)/2} [n k] t^k, in (q, t).
/// Refuses n > 30.
IdentityReport verify_finite_qbt(std::uint32_t n);

/// sum_{k>=0} (a;q)_k / (q;q)_k t^k = prod_{k>=0} (1 - q^k a t) / (1 - q^k t),
/// in (q, t, a), with the sum cut at k = K, the product cut at k = K, and
/// monomials compared only where neither cut can reach: q and t exponents
/// at most K (further capped by Dq, Dt).
struct InfiniteQbtReport {
    IdentityReport standard;          ///< product over k >= 0
    IdentityReport product_from_one;  ///< the same with the product started at k = 1
    std::uint32_t q_max = 0;
    std::uint32_t t_max = 0;
    bool clipped = false;  ///< Dq or Dt exceeded K and the region was reduced
};

InfiniteQbtReport verify_infinite_qbt_truncated(std::uint32_t K, std::uint32_t Dq, std::uint32_t Dt);

/// prod_{j=1}^{J} (1 + q^{2j-1} z)(1 + q^{2j-1} / z)(1 - q^{2j}) against
/// sum_{|j|<=J} q^{j^2} z^j, on q-degree <= D. Requires D <= 2J, since the
/// first omitted factor reaches q^{2J+1}.
IdentityReport verify_jacobi_truncated(std::uint32_t J, std::uint32_t D);

/// Coefficient of q^r in [n+m n] against
///   new reading:       partitions of n+m+1+r into exactly n+1 parts, greatest m+1;
///   classical reading: partitions of r into at most m parts, each <= n.
struct InterpretationReport {
    std::uint32_t n = 0, m = 0, r = 0;
    Count coefficient;
    Count new_count;
    Count classical_count;
    bool consistent = false;
    std::vector<Partition> new_witnesses;
    std::vector<Partition> classical_witnesses;
};

/// Refuses n + m > 14.
InterpretationReport interpretation_check(std::uint32_t n, std::uint32_t m, std::uint32_t r,
                                          bool with_witnesses = false);

/// Partitions attached to q^r in [N K] by the new reading:
/// N+1+r into K+1 parts with greatest part N-K+1.
std::vector<Partition> gaussian_witnesses(std::uint32_t N, std::uint32_t K, std::uint32_t r);

/// Sum over a, b >= 1, a + b <= N + 1 of the coefficient of q^{N-a-b+1} in
/// [a+b-2 a-1], compared with p(N). Refuses N > 60.
struct GridReport {
    std::uint32_t N = 0;
    Count grid_sum;
    Count expected;
    bool equal = false;
};

GridReport grid_identity(std::uint32_t N);

/// Partitions of N into a parts with greatest b, against b parts with
/// greatest a, plus a check that conjugation maps one witness set onto the
/// other. Refuses N > 60.
struct DualityReport {
    std::uint32_t N = 0, a = 0, b = 0;
    Count forward;
    Count backward;
    bool counts_equal = false;
    bool bijection = false;
};

DualityReport duality_check(std::uint32_t N, std::uint32_t a, std::uint32_t b);

} // namespace plab
