#pragma once

#include <vector>

namespace tlf
{

// A real interval with independently open or closed ends. A single point is
// the closed span [t,t].
struct Span
{
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = true;
    bool hi_closed = false;

    static Span closed(double lo, double hi) { return {lo, hi, true, true}; }
    static Span right_open(double lo, double hi) { return {lo, hi, true, false}; }
    static Span open(double lo, double hi) { return {lo, hi, false, false}; }
    static Span point(double t) { return {t, t, true, true}; }

    [[nodiscard]] bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
    [[nodiscard]] bool is_point() const { return lo == hi && lo_closed && hi_closed; }
    [[nodiscard]] bool contains(double t) const
    {
        return (lo < t || (lo_closed && lo == t)) && (t < hi || (hi_closed && hi == t));
    }

    friend bool operator==(const Span&, const Span&) = default;
};

// Intersection of two spans; may be empty.
[[nodiscard]] Span intersect(const Span& a, const Span& b);

// Minkowski sum {x + y : x in a, y in b}.
[[nodiscard]] Span minkowski_sum(const Span& a, const Span& b);

// Finite union of spans kept in normal form: sorted, pairwise disjoint and
// never touching (two spans sharing an endpoint that one of them contains
// are merged). Equality of normal forms is equality of sets, so satisfaction
// sets with isolated points compare exactly.
class SpanSet
{
public:
    SpanSet() = default;
    explicit SpanSet(std::vector<Span> spans);
    explicit SpanSet(const Span& span) : SpanSet(std::vector<Span>{span}) {}

    [[nodiscard]] const std::vector<Span>& spans() const { return _spans; }
    [[nodiscard]] bool empty() const { return _spans.empty(); }
    [[nodiscard]] bool contains(double t) const;

    [[nodiscard]] SpanSet unite(const SpanSet& other) const;
    [[nodiscard]] SpanSet intersect(const SpanSet& other) const;
    [[nodiscard]] SpanSet intersect(const Span& window) const;
    [[nodiscard]] SpanSet complement(const Span& universe) const;

    // Minkowski sum with a span, e.g. dilation by a window support.
    [[nodiscard]] SpanSet dilate(const Span& by) const;

    // Total length of the set.
    [[nodiscard]] double measure() const;

    // Points of the set that are not in the right-open reading of its spans
    // (closed right ends and degenerate points) ...
    [[nodiscard]] std::vector<double> isolated_points() const;
    // ... and points of the right-open reading that the set lacks (open left ends).
    [[nodiscard]] std::vector<double> excluded_points() const;

    friend bool operator==(const SpanSet&, const SpanSet&) = default;

private:
    std::vector<Span> _spans;
};

} // namespace tlf
