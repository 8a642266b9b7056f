#include "partition_lab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace plab {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be non-increasing");
        sum_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text)
{
    std::vector<Part> parts;
    if (text == "()" || text.empty())
        return {};
    if (text.front() == '[') {
        if (text.back() != ']')
            throw std::invalid_argument("unterminated partition list: " + std::string(text));
        auto body = text.substr(1, text.size() - 2);
        while (!body.empty()) {
            auto comma = body.find(',');
            auto item = body.substr(0, comma);
            while (!item.empty() && item.front() == ' ')
                item.remove_prefix(1);
            while (!item.empty() && item.back() == ' ')
                item.remove_suffix(1);
            Part value = 0;
            auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc() || end != item.data() + item.size())
                throw std::invalid_argument("bad partition part '" + std::string(item) + "'");
            parts.push_back(value);
            body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
        }
    }
    else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("bad digit in partition '" + std::string(text) + "'");
            parts.push_back(static_cast<Part>(ch - '0'));
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::string Partition::ascending_string() const
{
    if (parts_.empty())
        return "()";
    if (greatest() >= 10)
        return to_string();
    std::string out;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
        out.push_back(static_cast<char>('0' + *it));
    return out;
}

std::string Partition::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

CapExceeded::CapExceeded(std::string_view what_is_capped, std::uint64_t requested, std::uint64_t cap)
    : std::length_error(std::string(what_is_capped) + ": n = " + std::to_string(requested) +
                        " exceeds the configured cap of " + std::to_string(cap)),
      cap_(cap)
{
}

bool PartitionConstraint::matches(const Partition& p) const noexcept
{
    bool parts_ok = parts_mode == PartsMode::exactly ? p.length() == parts : p.length() <= parts;
    bool bound_ok = part_mode == PartMode::greatest_equals ? p.greatest() == part_bound
                                                           : p.greatest() <= part_bound;
    return parts_ok && bound_ok;
}

std::string PartitionConstraint::to_string() const
{
    std::string out = parts_mode == PartsMode::exactly ? "exactly " : "at most ";
    out += std::to_string(parts) + " parts, ";
    out += part_mode == PartMode::greatest_equals ? "greatest = " : "each <= ";
    return out + std::to_string(part_bound);
}

namespace {

// Depth-first generator over non-increasing sequences. Parts at every
// position are tried in ascending order, which yields lexicographic order.
struct Generator {
    std::vector<Part> prefix;
    std::size_t min_parts = 0;
    std::size_t max_parts = 0;
    const std::function<void(const Partition&)>& visit;

    void run(std::uint64_t remaining, Part lo, Part hi)
    {
        if (remaining == 0) {
            if (prefix.size() >= min_parts)
                visit(Partition(prefix));
            return;
        }
        if (prefix.size() >= max_parts)
            return;
        std::uint64_t slots = max_parts - prefix.size();
        hi = static_cast<Part>(std::min<std::uint64_t>(hi, remaining));
        for (std::uint64_t v = lo; v <= hi; ++v) {
            // the rest must fit into slots - 1 parts of size <= v
            if (remaining - v > v * (slots - 1))
                continue;
            prefix.push_back(static_cast<Part>(v));
            run(remaining - v, 1, static_cast<Part>(v));
            prefix.pop_back();
        }
    }
};

} // namespace

void for_each_partition(std::uint32_t n, const std::function<void(const Partition&)>& visit,
                        const Limits& limits)
{
    if (n > limits.enumeration_cap)
        throw CapExceeded("partition enumeration", n, limits.enumeration_cap);
    Generator gen{{}, 0, n, visit};
    gen.run(n, 1, n);
}

std::vector<Partition> enumerate_partitions(std::uint32_t n, const Limits& limits)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, limits);
    return out;
}

std::vector<Partition> enumerate_restricted(std::uint32_t n, const PartitionConstraint& c,
                                            const Limits& limits)
{
    if (n > limits.restricted_cap)
        throw CapExceeded("restricted enumeration", n, limits.restricted_cap);
    std::vector<Partition> out;
    std::function<void(const Partition&)> collect = [&](const Partition& p) { out.push_back(p); };
    using C = PartitionConstraint;
    std::size_t min_parts = c.parts_mode == C::PartsMode::exactly ? c.parts : 0;
    Generator gen{{}, min_parts, c.parts, collect};
    if (c.part_mode == C::PartMode::greatest_equals) {
        if (c.part_bound == 0) {
            if (n == 0 && min_parts == 0)
                out.emplace_back();
            return out;
        }
        if (n == 0)
            return out;
        gen.run(n, c.part_bound, c.part_bound);
    }
    else {
        gen.run(n, 1, c.part_bound);
    }
    return out;
}

namespace {

// table[j][s]: partitions of s into exactly j parts, each <= max_part.
std::vector<std::vector<Count>> parts_by_count(std::uint32_t n, std::uint32_t max_parts,
                                               std::uint32_t max_part)
{
    max_parts = std::min(max_parts, n);
    max_part = std::min(max_part, n);
    std::vector<std::vector<Count>> table(max_parts + 1, std::vector<Count>(n + 1));
    table[0][0] = 1;
    for (std::uint32_t v = 1; v <= max_part; ++v)
        for (std::uint32_t j = 1; j <= max_parts; ++j)
            for (std::uint32_t s = v; s <= n; ++s)
                table[j][s] += table[j - 1][s - v];
    return table;
}

Count count_bounded(std::uint32_t n, bool exact_parts, std::uint32_t parts, std::uint32_t max_part)
{
    if (exact_parts && parts > n)
        return parts == 0 && n == 0 ? Count(1) : Count(0);
    auto table = parts_by_count(n, parts, max_part);
    if (exact_parts)
        return table[parts][n];
    Count total;
    for (const auto& row : table)
        total += row[n];
    return total;
}

} // namespace

Count count_restricted(std::uint32_t n, const PartitionConstraint& c, const Limits& limits)
{
    if (n > limits.restricted_cap)
        throw CapExceeded("restricted counting", n, limits.restricted_cap);
    using C = PartitionConstraint;
    bool exact = c.parts_mode == C::PartsMode::exactly;
    if (c.part_mode == C::PartMode::each_at_most)
        return count_bounded(n, exact, c.parts, c.part_bound);

    // greatest part fixed: peel it, the remaining parts are bounded by it
    if (c.part_bound == 0)
        return Count(n == 0 && (!exact || c.parts == 0) ? 1 : 0);
    if (c.parts == 0 || n < c.part_bound)
        return Count(0);
    return count_bounded(n - c.part_bound, exact, c.parts - 1, c.part_bound);
}

Partition conjugate(const Partition& p)
{
    auto parts = p.parts();
    std::vector<Part> out(p.greatest(), 0);
    for (Part part : parts)
        for (Part col = 0; col < part; ++col)
            ++out[col];
    return Partition(std::move(out));
}

std::uint32_t durfee_side(const Partition& p) noexcept
{
    auto parts = p.parts();
    std::uint32_t d = 0;
    while (d < parts.size() && parts[d] >= d + 1)
        ++d;
    return d;
}

} // namespace plab
