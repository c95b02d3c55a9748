#include <gtest/gtest.h>

#include "coxdepth/patterns.hpp"
#include "coxdepth/stats.hpp"
#include "test_util.hpp"

using namespace coxdepth;
using coxdepth::testing::P;

namespace {

// Pattern containment by trying every index subset.
bool contains_by_subsets(const Permutation& w, const Permutation& p)
{
    const int n = w.size();
    const int k = p.size();
    if (k > n) return false;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        std::vector<int> vals;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) vals.push_back(w(i + 1));
        }
        bool ok = true;
        for (int a = 0; a < k && ok; ++a) {
            for (int b = a + 1; b < k && ok; ++b) {
                ok = (vals[static_cast<std::size_t>(a)] < vals[static_cast<std::size_t>(b)]) == (p(a + 1) < p(b + 1));
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST(Patterns, Examples)
{
    const auto hit = contains_pattern(P("3241576"), P("1234"));
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(*hit, (std::vector<int>{1, 3, 5, 6}));
    EXPECT_FALSE(contains_pattern(P("3241576"), P("4321")).has_value());
    EXPECT_TRUE(avoids(P("12"), P("321")));
    for (const char* p : {"1", "21", "231", "3412", "2413"}) EXPECT_FALSE(avoids(P(p), P(p)));
}

TEST(Patterns, MatchesSubsetSearch)
{
    std::mt19937 rng(3);
    const std::vector<Permutation> pats = {P("321"), P("231"), P("3412"), P("2143"), P("1324")};
    for (int trial = 0; trial < 400; ++trial) {
        const auto w = coxdepth::testing::random_permutation(rng, 1 + trial % 9);
        for (const auto& p : pats) {
            const auto hit = contains_pattern(w, p);
            ASSERT_EQ(hit.has_value(), contains_by_subsets(w, p));
            if (hit) {
                ASSERT_EQ(hit->size(), static_cast<std::size_t>(p.size()));
                ASSERT_TRUE(std::is_sorted(hit->begin(), hit->end()));
            }
        }
    }
}

TEST(Classes, Examples)
{
    EXPECT_TRUE(is_fc(P("3412")));
    EXPECT_FALSE(is_fc(P("321")));
    EXPECT_TRUE(is_fc(Permutation::identity(4)));
    EXPECT_FALSE(is_boolean(P("3412")));
    EXPECT_FALSE(is_boolean(P("4231")));
    EXPECT_TRUE(is_boolean(P("2341")));
    EXPECT_TRUE(is_free(P("213")));
    EXPECT_FALSE(is_free(P("231")));
    EXPECT_TRUE(is_free(Permutation::identity(3)));
    EXPECT_TRUE(cycles_are_intervals(P("2341")));
    EXPECT_FALSE(cycles_are_intervals(P("3412")));
}

TEST(Classes, Characterizations)
{
    for (int n = 1; n <= 7; ++n) {
        for_each_permutation(n, [](const Permutation& w) {
            ASSERT_EQ(is_fc(w), depth(w) == length(w)) << format_permutation(w);
            ASSERT_EQ(is_boolean(w), length(w) == reflection_length(w)) << format_permutation(w);
            ASSERT_EQ(is_boolean(w), depth(w) == reflection_length(w)) << format_permutation(w);
            if (is_boolean(w)) {
                ASSERT_TRUE(cycles_are_intervals(w));
                ASSERT_EQ(static_cast<Count>(support(w).size()), length(w));
            }
            // free: no two adjacent simple reflections in the support
            const auto s = support(w);
            bool spread = true;
            for (std::size_t k = 0; k + 1 < s.size(); ++k) spread = spread && s[k + 1] != s[k] + 1;
            ASSERT_EQ(is_free(w), spread) << format_permutation(w);
        });
    }
}

TEST(Support, Examples)
{
    EXPECT_TRUE(support(Permutation::identity(5)).empty());
    EXPECT_EQ(support(P("2143")), (std::vector<int>{1, 3}));
    EXPECT_EQ(support(P("2341")), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(support(P("4231")), (std::vector<int>{1, 2, 3}));
}
