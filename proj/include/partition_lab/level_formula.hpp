#pragma once

#include "partition_lab/count.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace plab {

// Level decomposition p(n) = S_1(n) + S_2(n) + ... + S_K(n), K = floor(sqrt(n)).
//
// S_1(n) = n. For level k >= 2 the outer indices (a_3, ..., a_k), all >= 1,
// run over
//     1 <= a_m <= floor((n - (k^2 - m) - sum_{l > m} l (a_l - 1)) / m),
// outermost a_k first. Each index vector contributes
//     (a_3 * ... * a_k) * sum_{i=1}^{floor(R/2)} i (R - 1 - 2(i - 1)),
//     R = n - (k^2 - 2) - sum_m m (a_m - 1).
// Level 2 has no outer indices.

/// Outer indices of one level-k summand; indices[0] is a_3, indices.back() is a_k.
struct LevelIndexVector {
    std::uint32_t level = 2;
    std::vector<std::uint32_t> indices;

    /// Compact label as used for sub-level rows: "S_421" for k = 4, a_4 = 2,
    /// a_3 = 1. Indices of 10 or more are written in parentheses.
    std::string label() const;

    friend bool operator==(const LevelIndexVector&, const LevelIndexVector&) = default;
};

/// One summand S_{k a_k ... a_3}(n). Zero when R <= 0.
Count s_inner(std::uint32_t k, std::uint32_t n, const LevelIndexVector& v);

/// The inner sum over i alone, sum_{i=1}^{floor(R/2)} i (R - 1 - 2(i - 1)),
/// evaluated in closed form; zero for R <= 1.
Count inner_sum(std::int64_t r);

/// Calls visit for every admissible index vector of level k >= 3, in the
/// nesting order (a_k slowest, a_3 fastest).
void for_each_index_vector(std::uint32_t k, std::uint32_t n,
                           const std::function<void(const LevelIndexVector&)>& visit);

std::vector<LevelIndexVector> index_vectors(std::uint32_t k, std::uint32_t n);

enum class Strategy {
    nested,    ///< visit every index vector
    memoized,  ///< fold the inner sums into tables keyed by the remaining budget
};

struct EvaluationOptions {
    Strategy strategy = Strategy::nested;
    /// Only affects Strategy::nested. Results are identical either way.
    bool parallel = false;
    unsigned threads = 0;  ///< 0 = hardware concurrency
};

/// S_k(n) for k >= 1.
Count s_level(std::uint32_t k, std::uint32_t n, const EvaluationOptions& options = {});

struct LevelBreakdown {
    std::uint32_t n = 0;
    std::map<std::uint32_t, Count> per_level;
    Count total;
    /// Set for n = 0, where the level sum is empty and p(0) = 1 is taken by convention.
    bool by_convention = false;

    friend bool operator==(const LevelBreakdown&, const LevelBreakdown&) = default;
};

LevelBreakdown p_combinatorial(std::uint32_t n, const EvaluationOptions& options = {});

/// Memo of the nested sums as a function of the remaining budget.
///
/// With F_2(B) = inner_sum(B) and
///     F_m(B) = sum_{a >= 1} a * F_{m-1}(B - m (a - 1)),
/// the level-k sum is S_k(n) = F_k(n - k^2 + 2): the upper bound of each
/// index coincides with the point where the inner budget drops below 2 and
/// everything inside vanishes. Each row is filled in O(B) additions via
///     G_m(B) = F_{m-1}(B) + G_m(B - m),  F_m(B) = G_m(B) + F_m(B - m).
class NestedSumTable {
public:
    NestedSumTable(std::uint32_t max_level, std::uint32_t max_n);

    std::uint32_t max_level() const noexcept { return max_level_; }
    std::uint32_t max_n() const noexcept { return max_n_; }

    /// S_k(n); requires k <= max_level and n <= max_n.
    Count s_level(std::uint32_t k, std::uint32_t n) const;

private:
    std::uint32_t max_level_;
    std::uint32_t max_n_;
    std::vector<std::vector<Count>> rows_;  // rows_[m - 2][B]
};

std::uint32_t isqrt(std::uint64_t n) noexcept;

} // namespace plab
