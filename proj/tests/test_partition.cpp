#include "partition_lab/partition.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace plab;

namespace {

std::set<std::string> ascending_set(const std::vector<Partition>& ps)
{
    std::set<std::string> out;
    for (const auto& p : ps)
        out.insert(p.ascending_string());
    return out;
}

// Filtered full enumeration, the oracle for the restricted routines.
Count filtered_count(std::uint32_t n, const PartitionConstraint& c)
{
    Count total;
    for_each_partition(n, [&](const Partition& p) {
        if (c.matches(p))
            ++total;
    });
    return total;
}

} // namespace

TEST_CASE("partition construction validates the parts")
{
    CHECK(Partition({3, 1, 1}).sum() == 5);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition().sum() == 0);
    CHECK(Partition().empty());
}

TEST_CASE("parse accepts ascending digits and bracketed lists")
{
    CHECK(Partition::parse("2224") == Partition({4, 2, 2, 2}));
    CHECK(Partition::parse("[10,3,12]") == Partition({12, 10, 3}));
    CHECK(Partition::parse("()") == Partition());
    CHECK_THROWS(Partition::parse("12a"));
    CHECK_THROWS(Partition::parse("[3,x]"));
    CHECK(Partition({4, 4, 1, 1}).ascending_string() == "1144");
    CHECK(Partition({12, 1}).ascending_string() == "[12,1]");
}

TEST_CASE("enumerate_partitions of 4")
{
    auto ps = enumerate_partitions(4);
    REQUIRE(ps.size() == 5);
    CHECK(ascending_set(ps) == std::set<std::string>{"1111", "112", "13", "22", "4"});
    // canonical order: lexicographic on the non-increasing sequences
    CHECK(std::is_sorted(ps.begin(), ps.end()));
    CHECK(ps.front() == Partition({1, 1, 1, 1}));
    CHECK(ps.back() == Partition({4}));
}

TEST_CASE("enumerate_partitions edge cases and cap")
{
    auto zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());
    CHECK(enumerate_partitions(10).size() == 42);

    CHECK_THROWS_AS(enumerate_partitions(61), CapExceeded);
    try {
        enumerate_partitions(61);
    }
    catch (const CapExceeded& e) {
        CHECK(e.cap() == 60);
        CHECK(std::string(e.what()).find("60") != std::string::npos);
    }
    Limits wide;
    wide.enumeration_cap = 70;
    CHECK_NOTHROW(for_each_partition(61, [](const Partition&) {}, wide));
}

TEST_CASE("every enumerated partition is distinct and valid")
{
    for (std::uint32_t n = 0; n <= 25; ++n) {
        auto ps = enumerate_partitions(n);
        CHECK(std::adjacent_find(ps.begin(), ps.end(), [](auto& a, auto& b) { return !(a < b); }) == ps.end());
        for (const auto& p : ps)
            CHECK(p.sum() == n);
    }
}

TEST_CASE("count_restricted examples")
{
    auto c = PartitionConstraint::exactly_with_greatest(4, 4);
    CHECK(count_restricted(10, c) == 3);
    CHECK(ascending_set(enumerate_restricted(10, c)) == std::set<std::string>{"1144", "1234", "2224"});
    CHECK(count_restricted(0, PartitionConstraint::at_most_each_at_most(5, 7)) == 1);
    CHECK(count_restricted(7, PartitionConstraint::at_most_each_at_most(3, 2)) == 0);
    CHECK_THROWS_AS(count_restricted(201, PartitionConstraint::at_most_each_at_most(3, 2)), CapExceeded);
}

TEST_CASE("peeling the greatest part")
{
    // exactly k parts, greatest g  ==  n - g into k - 1 parts each <= g
    for (std::uint32_t n = 1; n <= 30; ++n)
        for (std::uint32_t k = 1; k <= n; ++k)
            for (std::uint32_t g = 1; g <= n; ++g) {
                Count direct = count_restricted(n, PartitionConstraint::exactly_with_greatest(k, g));
                Count peeled = n >= g ? count_restricted(n - g, {PartitionConstraint::PartsMode::exactly, k - 1,
                                                                 PartitionConstraint::PartMode::each_at_most, g})
                                      : Count(0);
                CHECK(direct == peeled);
            }
}

TEST_CASE("dynamic program agrees with filtered enumeration for every constraint kind")
{
    using C = PartitionConstraint;
    for (std::uint32_t n = 0; n <= 18; ++n)
        for (auto pm : {C::PartsMode::exactly, C::PartsMode::at_most})
            for (auto bm : {C::PartMode::greatest_equals, C::PartMode::each_at_most})
                for (std::uint32_t a = 0; a <= n + 1; ++a)
                    for (std::uint32_t b = 0; b <= n + 1; ++b) {
                        C c{pm, a, bm, b};
                        Count expected = filtered_count(n, c);
                        CAPTURE(n);
                        CAPTURE(c.to_string());
                        CHECK(count_restricted(n, c) == expected);
                        CHECK(enumerate_restricted(n, c).size() == expected.get_ui());
                    }
}

TEST_CASE("restricted enumeration matches filtering, in canonical order")
{
    auto c = PartitionConstraint::at_most_each_at_most(4, 5);
    std::vector<Partition> filtered;
    for_each_partition(15, [&](const Partition& p) {
        if (c.matches(p))
            filtered.push_back(p);
    });
    CHECK(enumerate_restricted(15, c) == filtered);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(Partition({4, 2, 2, 2})) == Partition({4, 4, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition({5})) == Partition({1, 1, 1, 1, 1}));
}

TEST_CASE("durfee_side")
{
    CHECK(durfee_side(Partition({2, 2})) == 2);
    CHECK(durfee_side(Partition({4, 1})) == 1);
    CHECK(durfee_side(Partition({3, 3, 3})) == 3);
    CHECK(durfee_side(Partition()) == 0);
}

TEST_CASE("properties over all partitions up to 40")
{
    Limits limits;
    for (std::uint32_t n = 0; n <= 40; ++n) {
        Count total;
        std::map<std::pair<std::size_t, Part>, Count> signatures;
        for_each_partition(n, [&](const Partition& p) {
            ++total;
            Partition c = conjugate(p);
            CHECK(conjugate(c) == p);
            CHECK(c.length() == p.greatest());
            CHECK(c.greatest() == p.length());
            CHECK(durfee_side(c) == durfee_side(p));
            ++signatures[{p.length(), p.greatest()}];
        }, limits);
        CHECK(total == count_restricted(n, PartitionConstraint::at_most_each_at_most(n, n)));

        Count signature_sum;
        for (std::uint32_t a = 0; a <= n; ++a)
            for (std::uint32_t b = 0; b <= n; ++b) {
                Count forward = count_restricted(n, PartitionConstraint::exactly_with_greatest(a, b));
                CHECK(forward == count_restricted(n, PartitionConstraint::exactly_with_greatest(b, a)));
                auto it = signatures.find({a, b});
                CHECK(forward == (it == signatures.end() ? Count(0) : it->second));
                signature_sum += forward;
            }
        CHECK(signature_sum == total);
    }
}

TEST_CASE("random partitions: conjugation is an involution that swaps shape statistics")
{
    std::mt19937 rng(20261018);
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<Part> len(0, 30), part(1, 50);
        std::vector<Part> parts(len(rng));
        for (auto& p : parts)
            p = part(rng);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        Partition p(parts);
        Partition c = conjugate(p);
        CHECK(conjugate(c) == p);
        CHECK(c.sum() == p.sum());
        CHECK(c.length() == p.greatest());
        CHECK(durfee_side(c) == durfee_side(p));
        CHECK(Partition::parse(p.to_string()) == p);
    }
}
