#pragma once

#include "partition_lab/count.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plab {

using Part = std::uint32_t;

/// A partition of n stored with non-increasing parts, e.g. 4 = (2,1,1).
/// The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are positive and non-increasing.
    explicit Partition(std::vector<Part> parts);

    /// Accepts the ascending digit notation used for small fixtures ("2224" is
    /// (4,2,2,2)) or a bracketed list in any order ("[10,3,3]").
    static Partition parse(std::string_view text);

    std::span<const Part> parts() const noexcept { return parts_; }
    std::uint64_t sum() const noexcept { return sum_; }
    std::size_t length() const noexcept { return parts_.size(); }
    Part greatest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Ascending digit string when every part is below 10 ("1144"), otherwise
    /// a bracketed non-increasing list ("[12,4,1]"). Empty partition is "()".
    std::string ascending_string() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<Part> parts_;
    std::uint64_t sum_ = 0;
};

/// Thrown when a request would exceed a configured size cap.
class CapExceeded : public std::length_error {
public:
    CapExceeded(std::string_view what_is_capped, std::uint64_t requested, std::uint64_t cap);
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t cap_;
};

struct Limits {
    std::uint32_t enumeration_cap = 60;
    std::uint32_t restricted_cap = 200;
};

/// Restriction on (number of parts, size of parts), e.g. "exactly 4 parts,
/// greatest part equal to 4" or "at most m parts, each at most n".
struct PartitionConstraint {
    enum class PartsMode { exactly, at_most };
    enum class PartMode { greatest_equals, each_at_most };

    PartsMode parts_mode = PartsMode::at_most;
    std::uint32_t parts = 0;
    PartMode part_mode = PartMode::each_at_most;
    std::uint32_t part_bound = 0;

    static PartitionConstraint exactly_with_greatest(std::uint32_t parts, std::uint32_t greatest)
    {
        return {PartsMode::exactly, parts, PartMode::greatest_equals, greatest};
    }
    static PartitionConstraint at_most_each_at_most(std::uint32_t parts, std::uint32_t bound)
    {
        return {PartsMode::at_most, parts, PartMode::each_at_most, bound};
    }

    bool matches(const Partition& p) const noexcept;
    std::string to_string() const;
};

/// Visits every partition of n in lexicographically increasing order of the
/// non-increasing part sequence: for n = 4 the order is 1111, 211, 22, 31, 4.
void for_each_partition(std::uint32_t n, const std::function<void(const Partition&)>& visit,
                        const Limits& limits = {});

/// All partitions of n in the order of for_each_partition. Refuses n above
/// limits.enumeration_cap with CapExceeded.
std::vector<Partition> enumerate_partitions(std::uint32_t n, const Limits& limits = {});

/// Partitions of n satisfying c, generated directly from the bounds (no
/// filtering of the full list), in the same canonical order.
std::vector<Partition> enumerate_restricted(std::uint32_t n, const PartitionConstraint& c,
                                            const Limits& limits = {});

/// Exact count of partitions of n satisfying c, by dynamic programming.
/// Refuses n above limits.restricted_cap.
Count count_restricted(std::uint32_t n, const PartitionConstraint& c, const Limits& limits = {});

/// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

/// Side of the Durfee square: largest d with parts[d-1] >= d.
std::uint32_t durfee_side(const Partition& p) noexcept;

} // namespace plab
