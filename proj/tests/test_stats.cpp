#include <gtest/gtest.h>

#include <map>
#include <queue>

#include "coxdepth/stats.hpp"
#include "test_util.hpp"

using namespace coxdepth;
using coxdepth::testing::P;

namespace {

// Depth straight from its definition: cheapest product of transpositions
// t_ij, each costing j - i, found by Dijkstra over S_n.
std::map<Permutation, Count> brute_depths(int n)
{
    std::map<Permutation, Count> dist;
    using Item = std::pair<Count, Permutation>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist.emplace(Permutation::identity(n), 0);
    pq.emplace(0, Permutation::identity(n));
    while (!pq.empty()) {
        auto [d, w] = pq.top();
        pq.pop();
        if (d > dist.at(w)) continue;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                Permutation next = apply_transposition_right(w, {i, j});
                const Count nd = d + (j - i);
                auto it = dist.find(next);
                if (it == dist.end() || nd < it->second) {
                    dist[next] = nd;
                    pq.emplace(nd, std::move(next));
                }
            }
        }
    }
    return dist;
}

Count inversions_by_bubble_sort(const Permutation& w)
{
    std::vector<int> v(w.window().begin(), w.window().end());
    Count swaps = 0;
    for (std::size_t pass = 0; pass < v.size(); ++pass) {
        for (std::size_t k = 0; k + 1 < v.size(); ++k) {
            if (v[k] > v[k + 1]) {
                std::swap(v[k], v[k + 1]);
                ++swaps;
            }
        }
    }
    return swaps;
}

}  // namespace

TEST(Stats, RunningExamples)
{
    EXPECT_EQ(length(P("2431756")), 6);
    EXPECT_EQ(length(P("4321")), 6);
    EXPECT_EQ(reflection_length(P("2431756")), 4);
    EXPECT_EQ(reflection_length(P("3412")), 2);
    EXPECT_EQ(depth(P("2431756")), 5);
    EXPECT_EQ(depth(P("3412")), 4);
    EXPECT_EQ(depth(P("3715246")), 8);
    EXPECT_EQ(drop(P("3241")), 4);
    EXPECT_EQ(drop(P("7213645")), 8);
    EXPECT_EQ(depth(P("2736541")), 8);
    EXPECT_EQ(descents(P("7213645")), 3);
    EXPECT_EQ(excedances(P("2736541")), 3);
    EXPECT_EQ(excedances(P("3241")), 2);
}

TEST(Stats, IdentityIsZero)
{
    for (int n = 1; n <= 9; ++n) {
        const auto e = Permutation::identity(n);
        EXPECT_EQ(length(e), 0);
        EXPECT_EQ(reflection_length(e), 0);
        EXPECT_EQ(depth(e), 0);
        EXPECT_EQ(drop(e), 0);
        EXPECT_EQ(descents(e), 0);
        EXPECT_EQ(excedances(e), 0);
    }
}

TEST(Stats, DepthFormulaMatchesDefinition)
{
    for (int n = 1; n <= 5; ++n) {
        const auto dist = brute_depths(n);
        ASSERT_EQ(dist.size(), static_cast<std::size_t>(factorial(n)));
        for (const auto& [w, d] : dist) EXPECT_EQ(depth(w), d) << format_permutation(w);
    }
}

TEST(Stats, RandomProperties)
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + trial % 14;
        const auto w = coxdepth::testing::random_permutation(rng, n);
        EXPECT_EQ(length(w), inversions_by_bubble_sort(w));
        EXPECT_LE(reflection_length(w), depth(w));
        EXPECT_LE(depth(w), length(w));
        EXPECT_EQ(depth(w), depth(inverse(w)));
        EXPECT_EQ(length(w), length(inverse(w)));
        EXPECT_EQ(reflection_length(w), reflection_length(inverse(w)));
        EXPECT_LE(depth(w), max_depth_bound(n));
        EXPECT_EQ(depth(w) == reflection_length(w), length(w) == reflection_length(w));
    }
}

TEST(Stats, TranspositionDelta)
{
    EXPECT_EQ(depth_after_transposition(Permutation::identity(4), 1, 3), 2);
    EXPECT_EQ(depth_after_transposition(Permutation::identity(4), 1, 2), 1);
    // w(i) < w(j) < i < j leaves the excedance set alone
    const auto w = P("12534");
    EXPECT_EQ(depth_after_transposition(w, 4, 5), depth(w));
    for (int n = 1; n <= 6; ++n) {
        for_each_permutation(n, [&](const Permutation& v) {
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    if (v(i) > v(j)) continue;
                    ASSERT_EQ(depth_after_transposition(v, i, j), depth(apply_transposition_right(v, {i, j})));
                }
            }
        });
    }
}

TEST(Stats, TranspositionDeltaRejectsBadInput)
{
    const auto w = P("2143");
    EXPECT_THROW(depth_after_transposition(w, 1, 2), std::invalid_argument);  // w(1) > w(2)
    EXPECT_THROW(depth_after_transposition(w, 2, 2), std::invalid_argument);
    EXPECT_THROW(depth_after_transposition(w, 3, 1), std::invalid_argument);
    EXPECT_THROW(depth_after_transposition(w, 0, 2), std::invalid_argument);
    EXPECT_THROW(depth_after_transposition(w, 1, 5), std::invalid_argument);
}

TEST(Stats, ExtremalDepth)
{
    EXPECT_EQ(max_depth_bound(8), 16);
    EXPECT_EQ(max_depth_count(8), 576);
    EXPECT_EQ(max_depth_bound(5), 6);
    EXPECT_EQ(max_depth_count(5), 20);
    EXPECT_EQ(max_depth_bound(1), 0);
    EXPECT_EQ(max_depth_count(1), 1);
    EXPECT_EQ(max_depth_count(20), 3628800LL * 3628800LL);
    EXPECT_THROW(max_depth_bound(0), std::out_of_range);
    EXPECT_THROW(max_depth_count(21), std::out_of_range);
    for (int n = 1; n <= 8; ++n) {
        Count best = 0;
        Count hits = 0;
        for_each_permutation(n, [&](const Permutation& w) {
            const Count d = depth(w);
            if (d > best) {
                best = d;
                hits = 0;
            }
            if (d == best) ++hits;
        });
        EXPECT_EQ(best, max_depth_bound(n));
        EXPECT_EQ(hits, max_depth_count(n));
    }
}

TEST(Stats, ExcedanceInversionBound)
{
    // dep(w) >= number of excedances, and drop(w) >= descents
    for_each_permutation(6, [](const Permutation& w) {
        EXPECT_GE(depth(w), excedances(w));
        EXPECT_GE(drop(w), descents(w));
    });
}
