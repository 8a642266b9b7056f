#include "partition_lab/euler.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

namespace plab {

PartitionTable::PartitionTable(std::uint32_t max_n) : values_{Count(1)}
{
    extend(max_n);
}

PartitionTable PartitionTable::from_values(std::vector<Count> values)
{
    if (values.empty() || values.front() != 1)
        throw std::invalid_argument("partition table must start with p(0) = 1");
    return PartitionTable(std::move(values), 0);
}

void PartitionTable::extend(std::uint32_t new_max_n)
{
    values_.reserve(std::size_t{new_max_n} + 1);
    for (std::uint64_t n = values_.size(); n <= new_max_n; ++n) {
        Count value;
        for (std::uint64_t k = 1;; ++k) {
            std::uint64_t first = k * (3 * k - 1) / 2;
            if (first > n)
                break;
            std::uint64_t second = k * (3 * k + 1) / 2;
            if (k % 2 == 1) {
                value += values_[n - first];
                if (second <= n)
                    value += values_[n - second];
            }
            else {
                value -= values_[n - first];
                if (second <= n)
                    value -= values_[n - second];
            }
        }
        values_.push_back(std::move(value));
    }
}

PartitionTable build_table(std::uint32_t max_n) { return PartitionTable(max_n); }

const Count& p_euler(std::uint32_t n, PartitionTable& table)
{
    if (n > table.max_n())
        table.extend(n);
    return table[n];
}

CacheParseError::CacheParseError(std::size_t line, const std::string& detail)
    : std::runtime_error("partition cache line " + std::to_string(line) + ": " + detail), line_(line)
{
}

void save_table(const PartitionTable& table, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write partition cache " + path.string());
    for (const auto& value : table.values())
        out << value.get_str(10) << '\n';
    if (!out)
        throw std::runtime_error("failed writing partition cache " + path.string());
}

PartitionTable load_table(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read partition cache " + path.string());
    std::vector<Count> values;
    std::string line;
    for (std::size_t index = 0; std::getline(in, line); ++index) {
        try {
            values.push_back(parse_decimal(line));
        }
        catch (const std::invalid_argument&) {
            throw CacheParseError(index, "expected decimal digits, got '" + line + "'");
        }
    }
    if (values.empty())
        throw CacheParseError(0, "empty cache file");
    if (values.front() != 1)
        throw CacheParseError(0, "p(0) must be 1");
    return PartitionTable::from_values(std::move(values));
}

EstimateReport hr_leading_estimate(std::uint32_t n)
{
    if (n == 0)
        throw std::domain_error("hr_leading_estimate requires n >= 1");
    using std::numbers::pi;
    const double c = pi * std::sqrt(2.0 / 3.0);
    const double lambda = std::sqrt(static_cast<double>(n) - 1.0 / 24.0);
    const double x = c * lambda;
    const double derivative = (x * std::cosh(x) - std::sinh(x)) / (2.0 * lambda * lambda * lambda);
    EstimateReport report;
    report.n = n;
    report.lambda_n = lambda;
    report.estimate = derivative / (pi * std::sqrt(2.0));
    report.rounded = std::llround(report.estimate);
    return report;
}

} // namespace plab
