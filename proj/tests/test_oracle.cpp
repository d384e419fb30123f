#include "support.hpp"
#include "tlf/check.hpp"
#include "tlf/errors.hpp"
#include "tlf/oracle.hpp"

#include <gtest/gtest.h>

using namespace tlf;
using namespace tlf::test;

TEST(OracleDiscrete, PointQueries)
{
    const SignalBundle x = golden_signal();
    EXPECT_TRUE(oracle_discrete(parse("O[1,4] p"), x, 3));
    EXPECT_FALSE(oracle_discrete(parse("O[1,4] p"), x, 1));
    EXPECT_TRUE(oracle_discrete(parse("G[0,0] p"), x, 2));
    EXPECT_THROW((void)oracle_discrete(parse("q"), x, 0), unknown_proposition);
    EXPECT_THROW((void)oracle_discrete(parse("p"), x, 13), out_of_domain);
}

TEST(OracleDiscrete, UntilUsesStrictInterior)
{
    // p U[2,2] q at 0 needs q(2) and p on (0,2) = {1} only
    const SignalBundle x = discrete_bundle({{"p", "0100"}, {"q", "0010"}});
    EXPECT_TRUE(oracle_discrete(parse("p U[2,2] q"), x, 0));
    EXPECT_FALSE(oracle_discrete(parse("p U[2,2] q"), x, 1));
    EXPECT_TRUE(oracle_discrete(parse("p U[1,1] q"), x, 1));
}

TEST(OracleDiscrete, GloballyIsClippedToDomain)
{
    const SignalBundle x = discrete_bundle({{"p", "0011"}});
    EXPECT_EQ(oracle_discrete_trace(parse("G[1,5] p"), x), (std::vector<bool>{false, true, true, true}));
}

TEST(OracleContinuous, OnceAndHistorically)
{
    const SignalBundle x = continuous_bundle(12, {{"p", {{2, 6}}}});
    EXPECT_EQ(oracle_continuous(parse("O[2,3] p"), x), SpanSet(Span::right_open(4, 9)));
    EXPECT_EQ(oracle_continuous(parse("H[0,2] p"), x), SpanSet(Span::right_open(4, 6)));
    EXPECT_EQ(oracle_continuous(parse("F[0,0] p"), x), SpanSet(Span::right_open(2, 6)));
    EXPECT_THROW((void)oracle_continuous(parse("F(0,1] p"), x), open_interval_unsupported);
}

TEST(OracleContinuous, PunctualSatisfaction)
{
    // O[2,4] p at 7: the witness j = 5 sits on the window's edge
    const SignalBundle x = continuous_bundle(30, {{"p", {{5, 7}}}});
    EXPECT_TRUE(oracle_continuous(parse("O[2,4] p"), x).contains(7));
    EXPECT_FALSE(oracle_continuous(parse("O[2,4] p"), x).contains(11));
}

TEST(OracleContinuous, IsolatedPointFromUntil)
{
    // q(t + 2) needs t in [0,1); p on (t, t + 2) needs t + 2 <= 2
    const SignalBundle x = continuous_bundle(10, {{"p", {{0, 2}}}, {"q", {{2, 3}}}});
    const SpanSet s = oracle_continuous(parse("p U[2,2] q"), x);
    EXPECT_EQ(s, SpanSet(Span::point(0)));
    EXPECT_EQ(s.isolated_points(), std::vector<double>{0});
    EXPECT_TRUE(sample_oracle_continuous(parse("p U[2,2] q"), x, 0.01).front());
}

TEST(OracleContinuous, UntilWithZeroLowerBound)
{
    // a = 0 admits j = t, so q itself satisfies the formula
    const SignalBundle x = continuous_bundle(10, {{"p", {{0, 2}, {3, 10}}}, {"q", {{2, 3}}}});
    const SpanSet s = oracle_continuous(parse("(p | q) U[0,4] q"), x);
    EXPECT_TRUE(s.contains(0));
    EXPECT_TRUE(s.contains(2.5));
    EXPECT_FALSE(s.contains(3));
}

TEST(OracleContinuous, Since)
{
    const SignalBundle x = continuous_bundle(12, {{"p", {{3, 9}}}, {"q", {{2, 4}}}});
    const SpanSet s = oracle_continuous(parse("p S[2,4] q"), x);
    const std::vector<bool> dense = sample_oracle_continuous(parse("p S[2,4] q"), x, 0.01);
    const std::vector<double> ts = sample_grid(12, 0.01);
    for (std::size_t k = 0; k < ts.size(); ++k)
        EXPECT_EQ(s.contains(ts[k]), dense[k]) << ts[k];
    EXPECT_TRUE(s.contains(6));
    EXPECT_FALSE(s.contains(9));
}

TEST(OracleSampling, TrivialCases)
{
    const SignalBundle empty = continuous_bundle(5, {{"p", {}}});
    for (bool b : sample_oracle_continuous(parse("F[1,2] p"), empty, 0.01))
        EXPECT_FALSE(b);
    for (bool b : sample_oracle_continuous(parse("true"), empty, 0.01))
        EXPECT_TRUE(b);
}

TEST(OracleProperty, DenseSamplingAgreesWithSets)
{
    Rng rng(21);
    GenOptions gen;
    gen.max_depth = 3;
    for (int k = 0; k < 200; ++k)
    {
        const Formula f = random_formula(rng, gen);
        const SignalBundle x = random_continuous_bundle(rng, 12);
        const SpanSet s = oracle_continuous(f, x);
        const std::vector<double> ts = sample_grid(x.domain_end(), 0.05);
        const std::vector<bool> dense = sample_oracle_continuous(f, x, 0.05);
        for (std::size_t i = 0; i < ts.size(); ++i)
            ASSERT_EQ(s.contains(ts[i]), dense[i]) << to_string(f) << " at " << ts[i];
    }
}

TEST(OracleProperty, DualityAndDerivedOperators)
{
    Rng rng(23);
    for (int k = 0; k < 300; ++k)
    {
        const Formula phi = random_formula(rng, GenOptions{3, 6});
        const TimeInterval i = TimeInterval::closed(k % 4, k % 4 + k % 3);
        const SignalBundle xd = random_discrete_bundle(rng, 20);
        const SignalBundle xc = random_continuous_bundle(rng, 12);
        const Formula g = Formula::globally(i, phi);
        const Formula dual = Formula::negation(Formula::finally(i, Formula::negation(phi)));
        EXPECT_EQ(oracle_discrete_trace(g, xd), oracle_discrete_trace(dual, xd));
        EXPECT_EQ(oracle_continuous(g, xc), oracle_continuous(dual, xc));
        for (const Formula& f : {Formula::finally(i, phi), Formula::once(i, phi), Formula::globally(i, phi),
                                 Formula::historically(i, phi)})
        {
            EXPECT_EQ(oracle_discrete_trace(f, xd), oracle_discrete_trace(derived_expansions(f), xd))
                << to_string(f);
            EXPECT_EQ(oracle_continuous(f, xc), oracle_continuous(derived_expansions(f), xc)) << to_string(f);
        }
    }
}
