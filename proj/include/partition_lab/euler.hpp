#pragma once

#include "partition_lab/count.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

namespace plab {

/// p(0..max_n) from Euler's pentagonal recurrence
///   p(n) = sum_{k>=1} (-1)^{k-1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ],
/// with p(0) = 1 and p(n) = 0 for n < 0.
///
/// A finished table is immutable and safe to read from several threads.
/// extend() mutates and must be serialized by the caller.
class PartitionTable {
public:
    explicit PartitionTable(std::uint32_t max_n = 0);

    /// Adopts values loaded from elsewhere (e.g. the cache file). The values
    /// are trusted apart from a check that values[0] = 1.
    static PartitionTable from_values(std::vector<Count> values);

    std::uint32_t max_n() const noexcept { return static_cast<std::uint32_t>(values_.size() - 1); }
    std::span<const Count> values() const noexcept { return values_; }
    const Count& operator[](std::uint32_t n) const { return values_.at(n); }

    /// Appends entries up to new_max_n; no-op when already long enough.
    void extend(std::uint32_t new_max_n);

private:
    PartitionTable(std::vector<Count> values, int) : values_(std::move(values)) {}
    std::vector<Count> values_;
};

PartitionTable build_table(std::uint32_t max_n);

/// p(n), extending the table on demand.
const Count& p_euler(std::uint32_t n, PartitionTable& table);

class CacheParseError : public std::runtime_error {
public:
    CacheParseError(std::size_t line, const std::string& detail);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Cache format: plain text, line i (0-based) is the decimal expansion of p(i).
void save_table(const PartitionTable& table, const std::filesystem::path& path);
PartitionTable load_table(const std::filesystem::path& path);

/// Leading (k = 1) term of the Hardy-Ramanujan-Rademacher series, with the
/// derivative taken analytically:
///   estimate = (c*l*cosh(c*l) - sinh(c*l)) / (2 l^3) / (pi*sqrt(2)),
///   c = pi*sqrt(2/3), l = sqrt(n - 1/24).
/// Double precision; sinh overflows once c*l passes ~710 (n around 76000).
struct EstimateReport {
    std::uint32_t n = 0;
    double lambda_n = 0.0;
    double estimate = 0.0;
    std::int64_t rounded = 0;
};

EstimateReport hr_leading_estimate(std::uint32_t n);

} // namespace plab
