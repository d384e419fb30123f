#include "tlf/signal.hpp"

#include "tlf/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tlf
{

DiscreteTrace::DiscreteTrace(std::string name, std::vector<std::uint8_t> values)
    : _name(std::move(name)), _values(std::move(values))
{
    if (_values.empty())
        throw domain_error("discrete trace '" + _name + "' has no samples");
    for (std::size_t i = 0; i < _values.size(); ++i)
    {
        if (_values[i] > 1)
            throw domain_error("discrete trace '" + _name + "' has non-Boolean value at t=" + std::to_string(i));
    }
}

IntervalSet::IntervalSet(std::vector<Interval> intervals, double domain_end) : _domain_end(domain_end)
{
    if (!(domain_end >= 0.0) || !std::isfinite(domain_end))
        throw domain_error("signal domain end must be a finite non-negative number");
    std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (const Interval& iv : intervals)
    {
        if (!(0.0 <= iv.lo && iv.lo < iv.hi && iv.hi <= domain_end))
        {
            throw domain_error("interval [" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) +
                               ") is empty or outside [0," + std::to_string(domain_end) + ")");
        }
        if (!_intervals.empty() && iv.lo < _intervals.back().hi)
            throw domain_error("overlapping intervals at t=" + std::to_string(iv.lo));
        if (!_intervals.empty() && iv.lo == _intervals.back().hi)
            _intervals.back().hi = iv.hi;
        else
            _intervals.push_back(iv);
    }
}

IntervalSet IntervalSet::from_spans(const SpanSet& set, double domain_end)
{
    IntervalSet out(domain_end);
    const SpanSet clipped = set.intersect(Span::right_open(0.0, domain_end));
    for (const Span& s : clipped.spans())
    {
        if (s.lo >= s.hi)
            continue;
        if (!out._intervals.empty() && out._intervals.back().hi == s.lo)
            out._intervals.back().hi = s.hi;
        else
            out._intervals.push_back({s.lo, s.hi});
    }
    return out;
}

bool IntervalSet::contains(double t) const
{
    auto it = std::upper_bound(_intervals.begin(), _intervals.end(), t,
                               [](double v, const Interval& iv) { return v < iv.hi; });
    return it != _intervals.end() && it->lo <= t;
}

SpanSet IntervalSet::to_spans() const
{
    std::vector<Span> spans;
    spans.reserve(_intervals.size());
    for (const Interval& iv : _intervals)
        spans.push_back(Span::right_open(iv.lo, iv.hi));
    return SpanSet(std::move(spans));
}

double IntervalSet::measure() const
{
    double total = 0.0;
    for (const Interval& iv : _intervals)
        total += iv.hi - iv.lo;
    return total;
}

IntervalSet complement(const IntervalSet& s)
{
    const Span universe = Span::right_open(0.0, s.domain_end());
    return IntervalSet::from_spans(s.to_spans().complement(universe), s.domain_end());
}

namespace
{

void require_same_domain(const IntervalSet& a, const IntervalSet& b)
{
    if (a.domain_end() != b.domain_end())
        throw domain_mismatch("interval sets have different domains");
}

} // namespace

IntervalSet unite(const IntervalSet& a, const IntervalSet& b)
{
    require_same_domain(a, b);
    return IntervalSet::from_spans(a.to_spans().unite(b.to_spans()), a.domain_end());
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b)
{
    require_same_domain(a, b);
    return IntervalSet::from_spans(a.to_spans().intersect(b.to_spans()), a.domain_end());
}

PiecewiseLinear::PiecewiseLinear(std::vector<Knot> knots, double domain_end)
    : _knots(std::move(knots)), _domain_end(domain_end)
{
    for (std::size_t i = 0; i < _knots.size(); ++i)
    {
        if (_knots[i].t < 0.0 || _knots[i].t > domain_end)
            throw domain_error("knot time outside the signal domain");
        if (i > 0 && _knots[i].t < _knots[i - 1].t)
            throw domain_error("knot times must be non-decreasing");
        if (i >= 3 && _knots[i].t == _knots[i - 3].t)
            throw domain_error("at most three knots may share a time");
    }
}

double PiecewiseLinear::value_at(double t) const
{
    if (t < 0.0 || t > _domain_end)
        throw out_of_domain("time " + std::to_string(t) + " outside [0," + std::to_string(_domain_end) + "]");
    if (_knots.empty())
        return 0.0;
    auto first = std::lower_bound(_knots.begin(), _knots.end(), t, [](const Knot& k, double v) { return k.t < v; });
    auto last = std::upper_bound(first, _knots.end(), t, [](double v, const Knot& k) { return v < k.t; });
    const auto same = last - first;
    if (same == 1)
        return first->v;
    if (same == 2)
        return (first + 1)->v;
    if (same == 3)
        return (first + 1)->v;
    if (first == _knots.begin())
        return first->v;
    if (first == _knots.end())
        return _knots.back().v;
    const Knot& a = *(first - 1);
    const Knot& b = *first;
    return a.v + (b.v - a.v) * (t - a.t) / (b.t - a.t);
}

void SignalBundle::add(const std::string& name, PropositionSignal signal)
{
    if (const auto* d = std::get_if<DiscreteTrace>(&signal))
    {
        if (_kind != TimeKind::discrete || d->t_end() != t_end() || static_cast<double>(d->t_end()) != _domain_end)
            throw domain_mismatch("proposition '" + name + "' does not match the bundle's discrete domain");
    }
    else
    {
        const auto& c = std::get<IntervalSet>(signal);
        if (_kind != TimeKind::continuous || c.domain_end() != _domain_end)
            throw domain_mismatch("proposition '" + name + "' does not match the bundle's continuous domain");
    }
    _props.insert_or_assign(name, std::move(signal));
}

const DiscreteTrace& SignalBundle::discrete(const std::string& name) const
{
    auto it = _props.find(name);
    if (it == _props.end())
        throw unknown_proposition(name);
    const auto* d = std::get_if<DiscreteTrace>(&it->second);
    if (!d)
        throw domain_mismatch("proposition '" + name + "' is not a discrete trace");
    return *d;
}

const IntervalSet& SignalBundle::continuous(const std::string& name) const
{
    auto it = _props.find(name);
    if (it == _props.end())
        throw unknown_proposition(name);
    const auto* c = std::get_if<IntervalSet>(&it->second);
    if (!c)
        throw domain_mismatch("proposition '" + name + "' is not a continuous signal");
    return *c;
}

double value_at(const IntervalSet& s, double t)
{
    if (t < 0.0 || t >= s.domain_end())
        throw out_of_domain("time " + std::to_string(t) + " outside [0," + std::to_string(s.domain_end()) + ")");
    return s.contains(t) ? 1.0 : 0.0;
}

double value_at(const PiecewiseLinear& s, double t)
{
    return s.value_at(t);
}

double value_at(const DiscreteTrace& s, int t)
{
    if (t < 0 || t > s.t_end())
        throw out_of_domain("time " + std::to_string(t) + " outside {0.." + std::to_string(s.t_end()) + "}");
    return s[t] ? 1.0 : 0.0;
}

} // namespace tlf
