#include "tlf/span_set.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tlf;

TEST(SpanSet, NormalizesAdjacentSpans)
{
    const SpanSet s({Span::right_open(2, 4), Span::right_open(0, 2)});
    ASSERT_EQ(s.spans().size(), 1u);
    EXPECT_EQ(s.spans()[0], Span::right_open(0, 4));
}

TEST(SpanSet, KeepsOpenGapBetweenOpenEnds)
{
    const SpanSet s({Span::right_open(0, 2), Span::open(2, 4)});
    EXPECT_EQ(s.spans().size(), 2u);
    EXPECT_FALSE(s.contains(2));
    EXPECT_EQ(s.excluded_points(), std::vector<double>{2});
}

TEST(SpanSet, DropsEmptySpans)
{
    const SpanSet s({Span::right_open(3, 3), Span::open(5, 5), Span{4, 1, true, true}});
    EXPECT_TRUE(s.empty());
}

TEST(SpanSet, ComplementWithinUniverse)
{
    const Span dom = Span::right_open(0, 12);
    const SpanSet s(Span::right_open(2, 6));
    EXPECT_EQ(s.complement(dom), SpanSet({Span::right_open(0, 2), Span::right_open(6, 12)}));
    EXPECT_EQ(SpanSet().complement(dom), SpanSet(dom));
    EXPECT_TRUE(SpanSet(dom).complement(dom).empty());
}

TEST(SpanSet, ComplementOfPointLeavesHole)
{
    const Span dom = Span::right_open(0, 10);
    const SpanSet c = SpanSet(Span::point(4)).complement(dom);
    EXPECT_FALSE(c.contains(4));
    EXPECT_TRUE(c.contains(3.999));
    EXPECT_TRUE(c.contains(4.001));
    EXPECT_EQ(c.excluded_points(), std::vector<double>{4});
}

TEST(SpanSet, IsolatedPoints)
{
    const SpanSet s({Span::point(1), Span::right_open(2, 3), Span::point(3)});
    EXPECT_EQ(s.isolated_points(), (std::vector<double>{1, 3}));
    EXPECT_TRUE(s.contains(3));
    EXPECT_EQ(s.spans().back(), Span::closed(2, 3));
}

TEST(SpanSet, IntersectAndUnite)
{
    EXPECT_EQ(SpanSet(Span::right_open(0, 3)).intersect(SpanSet(Span::right_open(2, 5))),
              SpanSet(Span::right_open(2, 3)));
    EXPECT_TRUE(SpanSet(Span::right_open(0, 1)).intersect(SpanSet(Span::right_open(2, 3))).empty());
    EXPECT_EQ(SpanSet(Span::right_open(0, 2)).unite(SpanSet(Span::right_open(2, 4))),
              SpanSet(Span::right_open(0, 4)));
}

TEST(SpanSet, DilateAndMeasure)
{
    const SpanSet s({Span::right_open(1, 2), Span::right_open(5, 6)});
    EXPECT_EQ(s.dilate(Span::closed(-1, 1)), SpanSet({Span::right_open(0, 3), Span::right_open(4, 7)}));
    EXPECT_DOUBLE_EQ(s.measure(), 2.0);
}

TEST(SpanSet, MinkowskiSumOfEmptySpanIsEmpty)
{
    EXPECT_TRUE(minkowski_sum(Span::right_open(6, 5), Span::closed(0, 1)).empty());
    EXPECT_TRUE(minkowski_sum(Span::closed(0, 1), Span::open(2, 2)).empty());
}

namespace
{

SpanSet random_set(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> grid(0, 40);
    std::bernoulli_distribution coin(0.5);
    std::vector<Span> spans;
    for (int k = 0; k < 4; ++k)
    {
        double a = grid(rng) / 4.0;
        double b = grid(rng) / 4.0;
        if (a > b)
            std::swap(a, b);
        spans.push_back({a, b, coin(rng), coin(rng)});
    }
    return SpanSet(spans);
}

} // namespace

TEST(SpanSetProperty, DeMorganAndDoubleComplement)
{
    std::mt19937_64 rng(7);
    const Span dom = Span::right_open(0, 10);
    for (int k = 0; k < 500; ++k)
    {
        const SpanSet a = random_set(rng).intersect(dom);
        const SpanSet b = random_set(rng).intersect(dom);
        EXPECT_EQ(a.unite(b).complement(dom), a.complement(dom).intersect(b.complement(dom)));
        EXPECT_EQ(a.complement(dom).complement(dom), a);
        EXPECT_EQ(SpanSet(a.spans()), a);
    }
}

TEST(SpanSetProperty, MembershipMatchesSpans)
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k)
    {
        std::vector<Span> raw;
        const SpanSet a = random_set(rng);
        const SpanSet b = random_set(rng);
        for (int i = 0; i <= 80; ++i)
        {
            const double t = i / 8.0;
            EXPECT_EQ(a.unite(b).contains(t), a.contains(t) || b.contains(t));
            EXPECT_EQ(a.intersect(b).contains(t), a.contains(t) && b.contains(t));
        }
    }
}
