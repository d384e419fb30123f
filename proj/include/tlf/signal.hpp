#pragma once

#include "tlf/span_set.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tlf
{

enum class TimeKind
{
    discrete,
    continuous
};

// Boolean signal over the integer domain {0, 1, ..., t_end}.
class DiscreteTrace
{
public:
    DiscreteTrace() = default;
    // Throws domain_error unless every value is 0 or 1 and the length is t_end + 1.
    DiscreteTrace(std::string name, std::vector<std::uint8_t> values);

    [[nodiscard]] const std::string& name() const { return _name; }
    [[nodiscard]] int t_end() const { return static_cast<int>(_values.size()) - 1; }
    [[nodiscard]] const std::vector<std::uint8_t>& values() const { return _values; }
    [[nodiscard]] bool operator[](int t) const { return _values[static_cast<std::size_t>(t)] != 0; }

    friend bool operator==(const DiscreteTrace&, const DiscreteTrace&) = default;

private:
    std::string _name;
    std::vector<std::uint8_t> _values;
};

// Left-closed right-open interval [lo, hi).
struct Interval
{
    double lo = 0.0;
    double hi = 0.0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

// Piecewise-constant cadlag Boolean signal on [0, domain_end), stored as the
// set of times where it is 1. Intervals are sorted, disjoint and merged, so
// isolated points cannot be expressed.
class IntervalSet
{
public:
    IntervalSet() = default;
    explicit IntervalSet(double domain_end) : _domain_end(domain_end) {}

    // Strict constructor for external data: intervals must satisfy
    // 0 <= lo < hi <= domain_end and must not overlap (touching is merged).
    // Throws domain_error otherwise.
    IntervalSet(std::vector<Interval> intervals, double domain_end);

    // The right-open reading of a span set clipped to [0, domain_end).
    static IntervalSet from_spans(const SpanSet& set, double domain_end);

    [[nodiscard]] double domain_end() const { return _domain_end; }
    [[nodiscard]] const std::vector<Interval>& intervals() const { return _intervals; }
    [[nodiscard]] bool empty() const { return _intervals.empty(); }
    [[nodiscard]] bool contains(double t) const;
    [[nodiscard]] SpanSet to_spans() const;
    [[nodiscard]] double measure() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> _intervals;
    double _domain_end = 0.0;
};

[[nodiscard]] IntervalSet complement(const IntervalSet& s);
// Both throw domain_mismatch when the domains differ.
[[nodiscard]] IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
[[nodiscard]] IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);

// Real-valued discrete result trace over {0..t_end}.
struct QuantTraceD
{
    std::vector<double> values;

    [[nodiscard]] int t_end() const { return static_cast<int>(values.size()) - 1; }
    friend bool operator==(const QuantTraceD&, const QuantTraceD&) = default;
};

struct Knot
{
    double t = 0.0;
    double v = 0.0;

    friend bool operator==(const Knot&, const Knot&) = default;
};

// Continuous real-valued trace given by knots with linear interpolation.
// Knot times are non-decreasing. A time carrying two knots is a jump
// (left limit, then value); three knots give left limit, the value at that
// instant, and right limit. The value is held constant after the last knot.
class PiecewiseLinear
{
public:
    PiecewiseLinear() = default;
    PiecewiseLinear(std::vector<Knot> knots, double domain_end);

    [[nodiscard]] const std::vector<Knot>& knots() const { return _knots; }
    [[nodiscard]] double domain_end() const { return _domain_end; }
    [[nodiscard]] double value_at(double t) const;

    friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

private:
    std::vector<Knot> _knots;
    double _domain_end = 0.0;
};

using PropositionSignal = std::variant<DiscreteTrace, IntervalSet>;

// All propositions of one input, sharing a time kind and domain.
class SignalBundle
{
public:
    SignalBundle() = default;
    SignalBundle(TimeKind kind, double domain_end) : _kind(kind), _domain_end(domain_end) {}

    // Throws domain_mismatch if the signal's kind or domain disagrees.
    void add(const std::string& name, PropositionSignal signal);

    [[nodiscard]] TimeKind time_kind() const { return _kind; }
    [[nodiscard]] double domain_end() const { return _domain_end; }
    // Discrete time: the last index T.
    [[nodiscard]] int t_end() const { return static_cast<int>(_domain_end); }
    [[nodiscard]] const std::map<std::string, PropositionSignal>& propositions() const { return _props; }

    // Throw unknown_proposition when absent, domain_mismatch on the wrong kind.
    [[nodiscard]] const DiscreteTrace& discrete(const std::string& name) const;
    [[nodiscard]] const IntervalSet& continuous(const std::string& name) const;

    friend bool operator==(const SignalBundle&, const SignalBundle&) = default;

private:
    TimeKind _kind = TimeKind::discrete;
    double _domain_end = 0.0;
    std::map<std::string, PropositionSignal> _props;
};

// Point queries; all throw out_of_domain outside the signal's domain.
[[nodiscard]] double value_at(const IntervalSet& s, double t);
[[nodiscard]] double value_at(const PiecewiseLinear& s, double t);
[[nodiscard]] double value_at(const DiscreteTrace& s, int t);

} // namespace tlf
