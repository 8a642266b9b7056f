#include "partition_lab/level_formula.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <stdexcept>
#include <thread>

namespace plab {

using u128 = unsigned __int128;

namespace {

Count to_count(u128 value)
{
    Count hi(static_cast<unsigned long>(value >> 64));
    Count lo(static_cast<unsigned long>(value & ~std::uint64_t{0}));
    return (hi << 64) + lo;
}

u128 inner_sum_u128(std::int64_t r)
{
    if (r <= 1)
        return 0;
    if (r < (std::int64_t{1} << 20)) {
        std::uint64_t h = static_cast<std::uint64_t>(r / 2);
        std::uint64_t rr = static_cast<std::uint64_t>(r);
        return (rr + 1) * (h * (h + 1) / 2) - h * (h + 1) * (2 * h + 1) / 3;
    }
    u128 h = static_cast<u128>(r / 2);
    u128 big_r = static_cast<u128>(r);
    return (big_r + 1) * h * (h + 1) / 2 - h * (h + 1) * (2 * h + 1) / 3;
}

// Running sum that stays in 128 bits until it would overflow.
class Accumulator {
public:
    void add(u128 value)
    {
        u128 next;
        if (__builtin_add_overflow(small_, value, &next)) {
            big_ += to_count(small_);
            small_ = value;
        }
        else {
            small_ = next;
        }
    }
    void add(const Count& value) { big_ += value; }
    Count result() const { return big_ + to_count(small_); }

private:
    u128 small_ = 0;
    Count big_;
};

// Visits every index vector below position m (1-based level index, a_m is
// indices[m - 3]). `slack` is n - k^2 - sum_{l > m} l (a_l - 1), so the bound
// on a_m is floor((slack + m) / m).
template <class Leaf>
void walk(std::uint32_t m, std::int64_t slack, std::vector<std::uint32_t>& indices, Leaf&& leaf)
{
    if (m < 3) {
        leaf(slack);
        return;
    }
    if (slack < 0)
        return;
    std::int64_t top = (slack + m) / m;
    for (std::int64_t a = 1; a <= top; ++a) {
        indices[m - 3] = static_cast<std::uint32_t>(a);
        walk(m - 1, slack - static_cast<std::int64_t>(m) * (a - 1), indices, leaf);
    }
}

void sum_subtree_big(std::uint32_t m, std::int64_t slack, const Count& weight, Accumulator& acc)
{
    if (m < 3) {
        u128 inner = inner_sum_u128(slack + 2);
        if (inner != 0)
            acc.add(weight * to_count(inner));
        return;
    }
    if (slack < 0)
        return;
    std::int64_t top = (slack + m) / m;
    for (std::int64_t a = 1; a <= top; ++a)
        sum_subtree_big(m - 1, slack - static_cast<std::int64_t>(m) * (a - 1), weight * a, acc);
}

// Sums the subtree below a_m; `weight` is the product of the indices chosen
// so far. Switches to big-integer weights once the product leaves 64 bits.
void sum_subtree(std::uint32_t m, std::int64_t slack, std::uint64_t weight, Accumulator& acc)
{
    if (m < 3) {
        // slack + 2 is the inner budget R
        u128 inner = inner_sum_u128(slack + 2);
        if (inner >> 64)
            acc.add(to_count(weight) * to_count(inner));
        else
            acc.add(static_cast<u128>(weight) * inner);
        return;
    }
    if (slack < 0)
        return;
    std::int64_t top = (slack + m) / m;
    for (std::int64_t a = 1; a <= top; ++a) {
        std::int64_t rest = slack - static_cast<std::int64_t>(m) * (a - 1);
        std::uint64_t next;
        if (__builtin_mul_overflow(weight, static_cast<std::uint64_t>(a), &next))
            sum_subtree_big(m - 1, rest, to_count(weight) * a, acc);
        else
            sum_subtree(m - 1, rest, next, acc);
    }
}

std::int64_t level_slack(std::uint32_t k, std::uint32_t n)
{
    return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k) * k;
}

Count s_level_nested_sequential(std::uint32_t k, std::uint32_t n)
{
    Accumulator acc;
    sum_subtree(k, level_slack(k, n), 1, acc);
    return acc.result();
}

// Tasks are (level, value of the outermost index a_k); each task's subtree
// is summed independently and the totals are combined in task order.
struct Task {
    std::uint32_t level;
    std::int64_t outer;
};

std::vector<Count> run_tasks(std::uint32_t n, const std::vector<Task>& tasks, unsigned threads)
{
    std::vector<Count> results(tasks.size());
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const Task& task = tasks[i];
            std::uint32_t k = task.level;
            Accumulator acc;
            if (k == 2) {
                sum_subtree(2, level_slack(k, n), 1, acc);
            }
            else {
                std::int64_t slack = level_slack(k, n) - static_cast<std::int64_t>(k) * (task.outer - 1);
                sum_subtree(k - 1, slack, static_cast<std::uint64_t>(task.outer), acc);
            }
            results[i] = acc.result();
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();
    return results;
}

std::vector<Task> level_tasks(std::uint32_t k, std::uint32_t n)
{
    std::vector<Task> tasks;
    std::int64_t slack = level_slack(k, n);
    if (slack < 0)
        return tasks;
    if (k == 2) {
        tasks.push_back({2, 0});
        return tasks;
    }
    for (std::int64_t a = 1; a <= (slack + k) / k; ++a)
        tasks.push_back({k, a});
    return tasks;
}

} // namespace

std::uint32_t isqrt(std::uint64_t n) noexcept
{
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return static_cast<std::uint32_t>(r);
}

std::string LevelIndexVector::label() const
{
    std::string out = "S_" + std::to_string(level);
    for (auto it = indices.rbegin(); it != indices.rend(); ++it)
        out += *it < 10 ? std::to_string(*it) : "(" + std::to_string(*it) + ")";
    return out;
}

Count inner_sum(std::int64_t r) { return to_count(inner_sum_u128(r)); }

Count s_inner(std::uint32_t k, std::uint32_t n, const LevelIndexVector& v)
{
    if (k < 2)
        throw std::invalid_argument("s_inner requires level k >= 2");
    if (v.level != k || v.indices.size() != k - 2)
        throw std::invalid_argument("index vector does not belong to level " + std::to_string(k));
    Count weight = 1;
    std::int64_t correction = 0;
    for (std::size_t pos = 0; pos < v.indices.size(); ++pos) {
        std::uint32_t a = v.indices[pos];
        if (a < 1)
            throw std::invalid_argument("index vector components must be >= 1");
        std::int64_t m = static_cast<std::int64_t>(pos) + 3;
        weight *= a;
        correction += m * (a - 1);
    }
    std::int64_t r = static_cast<std::int64_t>(n) - (static_cast<std::int64_t>(k) * k - 2) - correction;
    Count sum;
    for (std::int64_t i = 1; i <= r / 2; ++i) {
        std::int64_t summand = i * (r - 1 - 2 * (i - 1));
        assert(summand >= 1);
        sum += summand;
    }
    return weight * sum;
}

void for_each_index_vector(std::uint32_t k, std::uint32_t n,
                           const std::function<void(const LevelIndexVector&)>& visit)
{
    if (k < 3)
        throw std::invalid_argument("index vectors exist for levels k >= 3");
    LevelIndexVector v{k, std::vector<std::uint32_t>(k - 2, 1)};
    walk(k, level_slack(k, n), v.indices, [&](std::int64_t) { visit(v); });
}

std::vector<LevelIndexVector> index_vectors(std::uint32_t k, std::uint32_t n)
{
    std::vector<LevelIndexVector> out;
    for_each_index_vector(k, n, [&](const LevelIndexVector& v) { out.push_back(v); });
    return out;
}

Count s_level(std::uint32_t k, std::uint32_t n, const EvaluationOptions& options)
{
    if (k < 1)
        throw std::invalid_argument("s_level requires level k >= 1");
    if (k == 1)
        return Count(n);
    if (static_cast<std::uint64_t>(k) * k > n)
        return Count(0);
    if (options.strategy == Strategy::memoized)
        return NestedSumTable(k, n).s_level(k, n);
    if (!options.parallel)
        return s_level_nested_sequential(k, n);
    Count total;
    for (const auto& part : run_tasks(n, level_tasks(k, n), options.threads))
        total += part;
    return total;
}

LevelBreakdown p_combinatorial(std::uint32_t n, const EvaluationOptions& options)
{
    LevelBreakdown out;
    out.n = n;
    if (n == 0) {
        out.total = 1;
        out.by_convention = true;
        return out;
    }
    std::uint32_t top = isqrt(n);
    out.per_level[1] = Count(n);

    if (options.strategy == Strategy::memoized) {
        NestedSumTable table(top, n);
        for (std::uint32_t k = 2; k <= top; ++k)
            out.per_level[k] = table.s_level(k, n);
    }
    else if (options.parallel) {
        std::vector<Task> tasks;
        for (std::uint32_t k = 2; k <= top; ++k) {
            auto more = level_tasks(k, n);
            tasks.insert(tasks.end(), more.begin(), more.end());
        }
        auto results = run_tasks(n, tasks, options.threads);
        for (std::uint32_t k = 2; k <= top; ++k)
            out.per_level[k] = 0;
        for (std::size_t i = 0; i < tasks.size(); ++i)
            out.per_level[tasks[i].level] += results[i];
    }
    else {
        for (std::uint32_t k = 2; k <= top; ++k)
            out.per_level[k] = s_level_nested_sequential(k, n);
    }

    for (const auto& [k, value] : out.per_level)
        out.total += value;
    return out;
}

NestedSumTable::NestedSumTable(std::uint32_t max_level, std::uint32_t max_n)
    : max_level_(max_level), max_n_(max_n)
{
    if (max_level < 2)
        return;
    const std::size_t width = std::size_t{max_n} + 3;
    rows_.reserve(max_level - 1);
    std::vector<Count> base(width);
    for (std::size_t b = 0; b < width; ++b)
        base[b] = inner_sum(static_cast<std::int64_t>(b));
    rows_.push_back(std::move(base));
    for (std::uint32_t m = 3; m <= max_level; ++m) {
        const auto& prev = rows_.back();
        std::vector<Count> stride_sum(width), row(width);
        for (std::size_t b = 0; b < width; ++b) {
            stride_sum[b] = prev[b];
            if (b >= m)
                stride_sum[b] += stride_sum[b - m];
            row[b] = stride_sum[b];
            if (b >= m)
                row[b] += row[b - m];
        }
        rows_.push_back(std::move(row));
    }
}

Count NestedSumTable::s_level(std::uint32_t k, std::uint32_t n) const
{
    if (k == 1)
        return Count(n);
    if (k > max_level_ || n > max_n_)
        throw std::out_of_range("NestedSumTable lookup outside the built range");
    std::int64_t budget = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k) * k + 2;
    if (budget < 2)
        return Count(0);
    return rows_[k - 2][static_cast<std::size_t>(budget)];
}

} // namespace plab
