#pragma once

#include "tlf/piecewise.hpp"
#include "tlf/signal.hpp"
#include "tlf/span_set.hpp"

#include <string>
#include <vector>

namespace tlf
{

struct Panel
{
    std::string title;
    // Polyline vertices; a vertical jump is two vertices at the same t.
    std::vector<Knot> points;
    double y_max = 1.0;
};

[[nodiscard]] Panel step_panel(const std::string& title, const std::vector<double>& values);
[[nodiscard]] Panel set_panel(const std::string& title, const SpanSet& set, double domain_end);
[[nodiscard]] Panel function_panel(const std::string& title, const PiecewisePolynomial& f, double step = 0.01);

// Standalone SVG with one stacked panel per entry, one <path> each.
[[nodiscard]] std::string render_svg(const std::vector<Panel>& panels, const std::string& title);

} // namespace tlf
