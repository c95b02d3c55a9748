#include <gtest/gtest.h>

#include "coxdepth/decomp.hpp"
#include "coxdepth/stats.hpp"
#include "test_util.hpp"

using namespace coxdepth;
using coxdepth::testing::P;

namespace {

std::vector<Transposition> labels(const SortTrace& trace)
{
    std::vector<Transposition> out;
    for (const auto& step : trace.steps) out.push_back(step.transposition);
    return out;
}

}  // namespace

TEST(Selection, WorkedChains)
{
    const std::vector<Transposition> first = {{5, 7}, {5, 6}, {2, 4}, {1, 2}};
    EXPECT_EQ(labels(selection_sort_trace(P("2431756"))), first);
    const std::vector<Transposition> second = {{2, 7}, {2, 6}, {4, 5}, {2, 4}, {1, 3}};
    EXPECT_EQ(labels(selection_sort_trace(P("3715246"))), second);
    EXPECT_TRUE(selection_sort_trace(Permutation::identity(5)).steps.empty());
}

TEST(Selection, SortingIndex)
{
    EXPECT_EQ(sorting_index(P("2431756")), 6);
    EXPECT_EQ(sorting_index(P("3715246")), 14);
    EXPECT_EQ(sorting_index(Permutation::identity(6)), 0);
}

TEST(Selection, StepsMoveLargestMisplacedValue)
{
    for (int n = 1; n <= 7; ++n) {
        for_each_permutation(n, [&](const Permutation& w) {
            const auto trace = selection_sort_trace(w);
            ASSERT_EQ(static_cast<Count>(trace.steps.size()), reflection_length(w));
            Permutation cur = w;
            for (const auto& step : trace.steps) {
                ASSERT_EQ(step.before, cur);
                ASSERT_EQ(step.side, Side::right);
                int largest = 0;
                for (int i = 1; i <= n; ++i) {
                    if (cur(i) != i) largest = std::max(largest, cur(i));
                }
                cur = apply_transposition_right(cur, step.transposition);
                ASSERT_EQ(step.after, cur);
                ASSERT_EQ(cur(largest), largest);
            }
            ASSERT_TRUE(cur.is_identity());
            ASSERT_GE(sorting_index(w), depth(w));
            const auto f = selection_factorization(w);
            ASSERT_EQ(f.evaluate(n), w);
            ASSERT_EQ(f.total_weight(), sorting_index(w));
        });
    }
}

TEST(Shallow, WorkedExample)
{
    const auto f = shallow_decomp(P("3715246"));
    const std::vector<Transposition> u = {{6, 7}, {4, 6}, {2, 4}, {1, 3}};
    const std::vector<Transposition> v = {{4, 5}};
    EXPECT_EQ(f.left, u);
    EXPECT_EQ(f.right, v);
    EXPECT_EQ(f.total_weight(), 8);
    const std::vector<Count> weights = {1, 2, 2, 2, 1};
    EXPECT_EQ(f.depth_weights(), weights);
    const std::vector<Side> sides = {Side::left, Side::left, Side::left, Side::left, Side::right};
    EXPECT_EQ(f.sides(), sides);
    EXPECT_TRUE(verify_factorization(P("3715246"), f).all_passed());
}

TEST(Shallow, RunningExampleCostsFive)
{
    const auto w = P("2431756");
    const auto f = shallow_decomp(w);
    EXPECT_EQ(f.size(), 4u);
    EXPECT_EQ(f.total_weight(), 5);
    EXPECT_EQ(f.evaluate(7), w);
}

TEST(Shallow, IdentityIsEmpty)
{
    const auto f = shallow_decomp(Permutation::identity(4));
    EXPECT_EQ(f.size(), 0u);
    EXPECT_EQ(f.total_weight(), 0);
    EXPECT_TRUE(shallow_trace(Permutation::identity(4)).steps.empty());
}

TEST(Shallow, CertificatesExhaustive)
{
    for (int n = 1; n <= 8; ++n) {
        for_each_permutation(n, [&](const Permutation& w) {
            const auto f = shallow_decomp(w);
            ASSERT_EQ(f.evaluate(n), w) << format_permutation(w);
            ASSERT_EQ(static_cast<Count>(f.size()), reflection_length(w)) << format_permutation(w);
            ASSERT_EQ(f.total_weight(), depth(w)) << format_permutation(w);
        });
    }
}

TEST(Shallow, TraceEndsAtIdentity)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 12;
        const auto w = coxdepth::testing::random_permutation(rng, n);
        const auto trace = shallow_trace(w);
        Permutation cur = w;
        for (const auto& step : trace.steps) {
            ASSERT_EQ(step.before, cur);
            cur = step.side == Side::right ? apply_transposition_right(cur, step.transposition)
                                           : apply_transposition_left(step.transposition, cur);
            ASSERT_EQ(step.after, cur);
        }
        EXPECT_TRUE(cur.is_identity());
        const auto f = shallow_decomp(w);
        EXPECT_EQ(f.evaluate(n), w);
        EXPECT_EQ(f.total_weight(), depth(w));
    }
}

TEST(Verify, ReportsFailures)
{
    const auto w = P("3715246");
    Factorization wrong;
    wrong.right = {{1, 2}};
    const auto bad = verify_factorization(w, wrong);
    EXPECT_FALSE(bad.all_passed());
    ASSERT_NE(bad.find("product"), nullptr);
    EXPECT_FALSE(bad.find("product")->passed);

    // the selection factorization multiplies out but is too heavy
    const auto heavy = verify_factorization(w, selection_factorization(w));
    EXPECT_TRUE(heavy.find("product")->passed);
    EXPECT_TRUE(heavy.find("reflection_length")->passed);
    EXPECT_FALSE(heavy.find("depth")->passed);
    EXPECT_EQ(heavy.find("nonsense"), nullptr);

    const std::vector<Transposition> expected = {{1, 3}, {2, 4}, {4, 5}, {2, 6}, {2, 7}};
    EXPECT_EQ(selection_factorization(w).factors(), expected);
}

TEST(Render, TraceLines)
{
    const std::string text = render_trace(shallow_trace(P("3715246")));
    EXPECT_EQ(text,
              "3715246 --(6 7)[L]--> 3615247\n"
              "3615247 --(4 6)[L]--> 3415267\n"
              "3415267 --(4 5)[R]--> 3412567\n"
              "3412567 --(2 4)[L]--> 3214567\n"
              "3214567 --(1 3)[L]--> 1234567\n");
    EXPECT_EQ(render_trace(SortTrace{}), "");
}
