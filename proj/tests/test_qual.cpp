#include "support.hpp"
#include "tlf/check.hpp"
#include "tlf/errors.hpp"
#include "tlf/oracle.hpp"
#include "tlf/qual.hpp"

#include <gtest/gtest.h>

using namespace tlf;
using namespace tlf::test;

namespace
{

std::vector<double> ones_at(int T, std::initializer_list<int> ts)
{
    std::vector<double> v(static_cast<std::size_t>(T + 1), 0.0);
    for (int t : ts)
        v[static_cast<std::size_t>(t)] = 1.0;
    return v;
}

} // namespace

TEST(QualDiscrete, FinallyOfSinglePoint)
{
    const SignalBundle x = discrete_bundle({{"p", "00000100000"}});
    EXPECT_EQ(eval_qual_discrete(parse("F[1,4] p"), x), ones_at(10, {1, 2, 3, 4}));
}

TEST(QualDiscrete, GoldenSignal)
{
    const SignalBundle x = golden_signal();
    EXPECT_EQ(eval_qual_discrete(parse("O[1,4] p"), x), ones_at(12, {3, 4, 5, 6, 7, 8, 9, 10}));
    EXPECT_EQ(eval_qual_discrete(parse("G[0,2] p"), x), ones_at(12, {2, 3, 4}));
}

TEST(QualDiscrete, UntilWithVacuousHold)
{
    // j = 1 needs no hold on [1,0]
    const SignalBundle x = discrete_bundle({{"p", "0000"}, {"q", "0100"}});
    EXPECT_EQ(eval_qual_discrete(parse("p U[1,2] q"), x), ones_at(3, {0}));
    EXPECT_EQ(eval_qual_discrete(parse("p S[1,2] q"), x), ones_at(3, {2}));
}

TEST(QualDiscrete, RejectsSmoothKernels)
{
    EXPECT_THROW((void)eval_qual_discrete(parse("F[1,2] p"), golden_signal(), KernelSpec::parse("gauss:3")),
                 kernel_shape_error);
}

TEST(QualContinuous, OnceWindow)
{
    const SignalBundle x = continuous_bundle(12, {{"p", {{2, 6}}}});
    EXPECT_EQ(eval_qual_continuous(parse("O[2,3] p"), x), SpanSet(Span::right_open(4, 9)));
    EXPECT_EQ(eval_qual_continuous(parse("F[0,0] p"), x), SpanSet(Span::right_open(2, 6)));
}

TEST(QualContinuous, SinceBlockAcrossGap)
{
    // q a single block, p covering the gap that follows it
    const SignalBundle x = continuous_bundle(12, {{"p", {{3, 10}}}, {"q", {{1, 3.5}}}});
    const Formula f = parse("p S[2,4] q");
    EXPECT_EQ(eval_qual_continuous(f, x), oracle_continuous(f, x));
    EXPECT_TRUE(eval_qual_continuous(f, x).contains(5));
}

TEST(QualContinuous, IsolatedPoint)
{
    const SignalBundle x = continuous_bundle(10, {{"p", {{0, 2}}}, {"q", {{2, 3}}}});
    EXPECT_EQ(eval_qual_continuous(parse("p U[2,2] q"), x), SpanSet(Span::point(0)));
}

TEST(QualContinuous, Rejections)
{
    const SignalBundle x = continuous_bundle(12, {{"p", {{2, 6}}}});
    EXPECT_THROW((void)eval_qual_continuous(parse("F(1,2] p"), x), open_interval_unsupported);
    EXPECT_THROW((void)eval_qual_continuous(parse("F[1,2] p"), x, KernelSpec::parse("sigmoid:5")),
                 kernel_shape_error);
    EXPECT_THROW((void)eval_qual_continuous(parse("F[1,2] p"), golden_signal()), domain_mismatch);
}

TEST(QualProperty, OutputsAreBooleanAndDual)
{
    Rng rng(31);
    for (int k = 0; k < 300; ++k)
    {
        const Formula phi = random_formula(rng, GenOptions{3, 6});
        const SignalBundle x = random_discrete_bundle(rng, 24);
        const TimeInterval i = TimeInterval::closed(k % 3, k % 3 + k % 5);
        const std::vector<double> g = eval_qual_discrete(Formula::globally(i, phi), x);
        std::vector<double> dual;
        try
        {
            dual = eval_qual_discrete(Formula::finally(i, to_pnf(Formula::negation(phi))), x);
        }
        catch (const unsupported_negation&)
        {
            dual = eval_qual_discrete(Formula::finally(i, Formula::negation(phi)), x);
        }
        for (std::size_t t = 0; t < g.size(); ++t)
        {
            EXPECT_TRUE(g[t] == 0.0 || g[t] == 1.0);
            EXPECT_EQ(g[t], 1.0 - dual[t]);
        }
    }
}

TEST(QualProperty, ContinuousMatchesOracle)
{
    Rng rng(37);
    for (int k = 0; k < 200; ++k)
    {
        const Formula f = random_formula(rng);
        const SignalBundle x = random_continuous_bundle(rng, 16);
        ASSERT_EQ(eval_qual_continuous(f, x), oracle_continuous(f, x)) << to_string(f);
    }
}
