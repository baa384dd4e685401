#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace sevencore;

namespace
{

bool hook_oracle(const std::vector<unsigned>& parts, unsigned t)
{
    const auto hooks = oracle::hook_lengths(parts);
    return std::none_of(hooks.begin(), hooks.end(), [t](unsigned h) { return h % t == 0; });
}

} // namespace

TEST(Partition, Validation)
{
    EXPECT_NO_THROW(partition({3, 3, 1}));
    EXPECT_THROW(partition({1, 2}), out_of_range);
    EXPECT_THROW(partition({2, 0}), out_of_range);
    EXPECT_EQ(partition({4, 2, 1}).size(), 7U);
    EXPECT_EQ(partition({4, 2, 1}).beta_set(), (std::vector<unsigned>{6, 3, 1}));
}

TEST(IsTCore, Examples)
{
    EXPECT_TRUE(is_t_core(partition({1}), 7));
    EXPECT_FALSE(is_t_core(partition({7}), 7));
    EXPECT_TRUE(is_t_core(partition({4, 2, 1}), 7));
    EXPECT_TRUE(is_t_core(partition(), 3));
    EXPECT_THROW(is_t_core(partition({1}), 0), out_of_range);
}

// (3) has hooks 3, 2, 1. Its only first-column hook is 3, which is odd, yet
// the 2-hook in the second cell can be removed.
TEST(IsTCore, NotDecidedByFirstColumnAlone) { EXPECT_FALSE(is_t_core(partition({3}), 2)); }

TEST(IsTCore, MatchesHookLengthOracle)
{
    for (unsigned n = 0; n <= 18; ++n) {
        for_each_partition(n, [&](const std::vector<unsigned>& parts) {
            for (unsigned t = 1; t <= 9; ++t) {
                ASSERT_EQ(is_t_core(partition(parts), t), hook_oracle(parts, t)) << "n = " << n << ", t = " << t;
            }
        });
    }
}

TEST(Enumeration, CountsArePartitionNumbers)
{
    const auto p = oracle::partition_numbers(30);
    for (unsigned n = 0; n <= 30; ++n) {
        std::uint64_t count = 0;
        for_each_partition(n, [&](const std::vector<unsigned>& parts) {
            ASSERT_TRUE(std::is_sorted(parts.rbegin(), parts.rend()));
            ++count;
        });
        ASSERT_EQ(count, p[n]) << n;
    }
}

TEST(Oracle, Examples)
{
    EXPECT_EQ(a_t_oracle(6, 7), 11U);
    EXPECT_EQ(a_t_oracle(7, 7), 8U); // every hook partition of 7 has a 7-hook at its corner
    EXPECT_EQ(a_t_oracle(0, 7), 1U);
    EXPECT_EQ(a_t_oracle(3, 2), 1U);
    EXPECT_THROW(a_t_oracle(61, 7), too_large);
}

TEST(Series, FirstSevenCoreCoefficients)
{
    const auto a7 = a_t_series(7, 6);
    EXPECT_EQ(a7, qseries(std::vector<integer>{1, 1, 2, 3, 5, 7, 11}));
}

TEST(Series, MatchesOracle)
{
    for (unsigned t : {2, 3, 5, 7, 11}) {
        const auto s = a_t_series(t, 40);
        for (unsigned n = 0; n <= 40; ++n) {
            ASSERT_EQ(s[n], a_t_oracle(n, t)) << "t = " << t << ", n = " << n;
        }
    }
}

TEST(Series, Positivity)
{
    for (unsigned t = 4; t <= 12; ++t) {
        const auto s = a_t_series(t, 500);
        for (std::size_t n = 0; n <= 500; ++n) {
            ASSERT_GT(s[n], 0) << "t = " << t << ", n = " << n;
        }
    }
}
