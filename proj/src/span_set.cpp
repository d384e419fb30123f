#include "tlf/span_set.hpp"

#include <algorithm>

namespace tlf
{

Span intersect(const Span& a, const Span& b)
{
    Span r;
    if (a.lo > b.lo)
    {
        r.lo = a.lo;
        r.lo_closed = a.lo_closed;
    }
    else if (b.lo > a.lo)
    {
        r.lo = b.lo;
        r.lo_closed = b.lo_closed;
    }
    else
    {
        r.lo = a.lo;
        r.lo_closed = a.lo_closed && b.lo_closed;
    }

    if (a.hi < b.hi)
    {
        r.hi = a.hi;
        r.hi_closed = a.hi_closed;
    }
    else if (b.hi < a.hi)
    {
        r.hi = b.hi;
        r.hi_closed = b.hi_closed;
    }
    else
    {
        r.hi = a.hi;
        r.hi_closed = a.hi_closed && b.hi_closed;
    }
    return r;
}

Span minkowski_sum(const Span& a, const Span& b)
{
    if (a.empty() || b.empty())
        return {0.0, 0.0, false, false};
    return {a.lo + b.lo, a.hi + b.hi, a.lo_closed && b.lo_closed, a.hi_closed && b.hi_closed};
}

SpanSet::SpanSet(std::vector<Span> spans)
{
    std::erase_if(spans, [](const Span& s) { return s.empty(); });
    std::sort(spans.begin(), spans.end(), [](const Span& x, const Span& y) {
        if (x.lo != y.lo)
            return x.lo < y.lo;
        return x.lo_closed && !y.lo_closed;
    });

    for (const Span& s : spans)
    {
        if (_spans.empty())
        {
            _spans.push_back(s);
            continue;
        }
        Span& cur = _spans.back();
        const bool touches = s.lo < cur.hi || (s.lo == cur.hi && (cur.hi_closed || s.lo_closed));
        if (!touches)
        {
            _spans.push_back(s);
            continue;
        }
        if (s.hi > cur.hi)
        {
            cur.hi = s.hi;
            cur.hi_closed = s.hi_closed;
        }
        else if (s.hi == cur.hi)
        {
            cur.hi_closed = cur.hi_closed || s.hi_closed;
        }
    }
}

bool SpanSet::contains(double t) const
{
    // First span whose upper end is not left of t.
    auto it = std::lower_bound(_spans.begin(), _spans.end(), t,
                               [](const Span& s, double v) { return s.hi < v; });
    for (; it != _spans.end() && it->lo <= t; ++it)
    {
        if (it->contains(t))
            return true;
    }
    return false;
}

SpanSet SpanSet::unite(const SpanSet& other) const
{
    std::vector<Span> all = _spans;
    all.insert(all.end(), other._spans.begin(), other._spans.end());
    return SpanSet(std::move(all));
}

SpanSet SpanSet::intersect(const SpanSet& other) const
{
    std::vector<Span> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < _spans.size() && j < other._spans.size())
    {
        const Span& a = _spans[i];
        const Span& b = other._spans[j];
        out.push_back(tlf::intersect(a, b));
        // Advance whichever span ends first; an open end precedes a closed one.
        const bool a_first = a.hi < b.hi || (a.hi == b.hi && !a.hi_closed);
        if (a_first)
            ++i;
        else
            ++j;
    }
    return SpanSet(std::move(out));
}

SpanSet SpanSet::intersect(const Span& window) const
{
    return intersect(SpanSet(window));
}

SpanSet SpanSet::complement(const Span& universe) const
{
    std::vector<Span> gaps;
    double pos = universe.lo;
    bool pos_closed = universe.lo_closed;
    for (const Span& s : intersect(universe)._spans)
    {
        gaps.push_back({pos, s.lo, pos_closed, !s.lo_closed});
        pos = s.hi;
        pos_closed = !s.hi_closed;
    }
    gaps.push_back({pos, universe.hi, pos_closed, universe.hi_closed});
    return SpanSet(std::move(gaps));
}

SpanSet SpanSet::dilate(const Span& by) const
{
    if (by.empty())
        return {};
    std::vector<Span> out;
    out.reserve(_spans.size());
    for (const Span& s : _spans)
        out.push_back(minkowski_sum(s, by));
    return SpanSet(std::move(out));
}

double SpanSet::measure() const
{
    double total = 0.0;
    for (const Span& s : _spans)
        total += s.hi - s.lo;
    return total;
}

std::vector<double> SpanSet::isolated_points() const
{
    std::vector<double> pts;
    for (const Span& s : _spans)
    {
        if (s.is_point() || s.hi_closed)
            pts.push_back(s.hi);
    }
    return pts;
}

std::vector<double> SpanSet::excluded_points() const
{
    std::vector<double> pts;
    for (const Span& s : _spans)
    {
        if (!s.lo_closed && s.lo < s.hi)
            pts.push_back(s.lo);
    }
    return pts;
}

} // namespace tlf
