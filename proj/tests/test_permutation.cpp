#include <gtest/gtest.h>

#include <set>

#include "coxdepth/permutation.hpp"
#include "test_util.hpp"

using namespace coxdepth;
using coxdepth::testing::P;

TEST(Parse, DigitsAndSeparatedForms)
{
    EXPECT_EQ(P("2431756"), Permutation({2, 4, 3, 1, 7, 5, 6}));
    EXPECT_EQ(P("10,2,3,4,5,6,7,8,9,1").size(), 10);
    EXPECT_EQ(P(" 3 1 2 "), P("312"));
    EXPECT_EQ(P("3, 1,2"), P("312"));
    EXPECT_EQ(P("1"), Permutation::identity(1));
}

TEST(Parse, ErrorCodes)
{
    auto code = [](const char* text) {
        try {
            parse_permutation(text);
        } catch (const PermutationError& e) {
            return e.code();
        }
        ADD_FAILURE() << "no error for " << text;
        return PermErrc::size_mismatch;
    };
    EXPECT_EQ(code(""), PermErrc::empty);
    EXPECT_EQ(code("   "), PermErrc::empty);
    EXPECT_EQ(code("1123"), PermErrc::repeated_value);
    EXPECT_EQ(code("12x3"), PermErrc::malformed_token);
    EXPECT_EQ(code("1,-2"), PermErrc::malformed_token);
    EXPECT_EQ(code("1,2a"), PermErrc::malformed_token);
    EXPECT_EQ(code("1 3"), PermErrc::value_out_of_range);
    EXPECT_EQ(code("0"), PermErrc::value_out_of_range);
    EXPECT_EQ(code("1,99999999999"), PermErrc::value_out_of_range);
}

TEST(Format, RoundTrip)
{
    EXPECT_EQ(format_permutation(P("3715246")), "3715246");
    EXPECT_EQ(format_permutation(P("10,2,3,4,5,6,7,8,9,1")), "10,2,3,4,5,6,7,8,9,1");
    EXPECT_EQ(format_transposition({4, 2}), "(2 4)");
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto w = coxdepth::testing::random_permutation(rng, 1 + trial % 12);
        EXPECT_EQ(parse_permutation(format_permutation(w)), w);
    }
}

TEST(Transposition, NormalizesAndRejects)
{
    const Transposition t(5, 2);
    EXPECT_EQ(t.i, 2);
    EXPECT_EQ(t.j, 5);
    EXPECT_EQ(t.weight(), 3);
    EXPECT_FALSE(t.is_simple());
    EXPECT_TRUE(Transposition(3, 4).is_simple());
    EXPECT_THROW(Transposition(2, 2), PermutationError);
    EXPECT_THROW(Transposition(0, 2), PermutationError);
}

TEST(Compose, ConventionIsFunctionComposition)
{
    // (a*b)(i) = a(b(i))
    const auto a = P("231");
    const auto b = P("213");
    EXPECT_EQ(compose(a, b), P("321"));
    EXPECT_EQ(compose(b, a), P("132"));
    EXPECT_THROW(compose(P("12"), P("123")), PermutationError);
}

TEST(Compose, TranspositionActions)
{
    const auto w = P("3715246");
    // right multiplication swaps positions, left swaps values
    EXPECT_EQ(apply_transposition_right(w, {1, 2}), P("7315246"));
    EXPECT_EQ(apply_transposition_left({1, 2}, w), P("3725146"));
    EXPECT_EQ(apply_transposition_right(w, {1, 2}), compose(w, Permutation::from_transposition(7, {1, 2})));
    EXPECT_EQ(apply_transposition_left({1, 2}, w), compose(Permutation::from_transposition(7, {1, 2}), w));
    EXPECT_THROW(apply_transposition_right(w, {3, 8}), PermutationError);
    EXPECT_THROW(apply_transposition_left({3, 8}, w), PermutationError);
}

TEST(Compose, ProductOfFactors)
{
    const std::vector<Transposition> f = {{1, 2}, {2, 3}};
    // s1 s2 = 231
    EXPECT_EQ(product(3, f), P("231"));
    EXPECT_EQ(product(4, std::vector<Transposition>{}), Permutation::identity(4));
}

TEST(Inverse, GroupLaws)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 9;
        const auto a = coxdepth::testing::random_permutation(rng, n);
        const auto b = coxdepth::testing::random_permutation(rng, n);
        EXPECT_TRUE(compose(a, inverse(a)).is_identity());
        EXPECT_TRUE(compose(inverse(a), a).is_identity());
        EXPECT_EQ(inverse(compose(a, b)), compose(inverse(b), inverse(a)));
        EXPECT_EQ(inverse(inverse(a)), a);
    }
}

TEST(Cycles, CanonicalForm)
{
    const auto c = cycle_decomposition(P("3715246"));
    const std::vector<std::vector<int>> expected = {{1, 3}, {2, 7, 6, 4, 5}};
    EXPECT_EQ(c.cycles, expected);
    EXPECT_EQ(cycle_decomposition(Permutation::identity(4)).count(), 4u);
    EXPECT_EQ(cycle_decomposition(P("2341")).count(), 1u);
}

TEST(Cycles, PartitionTheSet)
{
    for (int n = 1; n <= 6; ++n) {
        for_each_permutation(n, [&](const Permutation& w) {
            std::set<int> seen;
            std::size_t total = 0;
            for (const auto& cycle : cycle_decomposition(w).cycles) {
                EXPECT_EQ(cycle.front(), *std::min_element(cycle.begin(), cycle.end()));
                for (std::size_t k = 0; k < cycle.size(); ++k) {
                    EXPECT_EQ(w(cycle[k]), cycle[(k + 1) % cycle.size()]);
                    seen.insert(cycle[k]);
                }
                total += cycle.size();
            }
            EXPECT_EQ(total, static_cast<std::size_t>(n));
            EXPECT_EQ(seen.size(), static_cast<std::size_t>(n));
        });
    }
}

TEST(Enumerate, LexOrderAndRanks)
{
    std::vector<Permutation> seen;
    for_each_permutation(4, [&](const Permutation& w) { seen.push_back(w); });
    ASSERT_EQ(seen.size(), 24u);
    EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    for (std::size_t r = 0; r < seen.size(); ++r) {
        EXPECT_EQ(lex_rank(seen[r]), r);
        EXPECT_EQ(lex_unrank(4, r), seen[r]);
    }
    EXPECT_THROW(lex_unrank(4, 24), std::out_of_range);
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(8), 40320);
}

TEST(Construct, RejectsInvalidWindows)
{
    EXPECT_THROW(Permutation({}), PermutationError);
    EXPECT_THROW(Permutation({1, 1}), PermutationError);
    EXPECT_THROW(Permutation({2, 3}), PermutationError);
    EXPECT_TRUE(Permutation::identity(5).is_identity());
    EXPECT_FALSE(P("21").is_identity());
}
