#pragma once

#include "tlf/signal.hpp"
#include "tlf/span_set.hpp"

#include <string>
#include <vector>

namespace tlf
{

enum class TraceFormat
{
    json,
    csv
};

// {"time":"discrete"|"continuous","T":<n>,"props":{"p":[0,1,...] | [[lo,hi],...]}}
// Throws parse_error on malformed text, domain_error on invalid contents.
[[nodiscard]] SignalBundle parse_bundle_json(const std::string& text);
// Canonical text: keys in the order time, T, props; integral numbers without
// a fraction. parse_bundle_json(to_json(b)) == b.
[[nodiscard]] std::string to_json(const SignalBundle& bundle);

// Discrete only: header "t,p1,p2,...", one row per integer t starting at 0.
[[nodiscard]] SignalBundle parse_bundle_csv(const std::string& text);
[[nodiscard]] std::string to_csv(const SignalBundle& bundle);

// Reads a file; throws parse_error if it cannot be opened.
[[nodiscard]] SignalBundle load_bundle(const std::string& path, TraceFormat format);
// Format from the extension (.csv means csv, anything else json).
[[nodiscard]] SignalBundle load_bundle(const std::string& path);

// "t,value" rows for t = 0..T.
[[nodiscard]] std::string values_csv(const std::vector<double>& values);
// "t,value" rows, one per knot.
[[nodiscard]] std::string knots_csv(const PiecewiseLinear& f);
// {"T":..,"intervals":[[lo,hi],..],"isolated_points":[..],"excluded_points":[..]}
// where intervals is the right-open reading of the set.
[[nodiscard]] std::string satisfaction_json(const SpanSet& set, double domain_end);

} // namespace tlf
