#include "tlf/plot.hpp"

#include "tlf/format.hpp"

#include <algorithm>
#include <cstdio>

namespace tlf
{

namespace
{

constexpr double kWidth = 800.0;
constexpr double kPanelHeight = 110.0;
constexpr double kMarginLeft = 60.0;
constexpr double kMarginRight = 20.0;
constexpr double kTitleHeight = 30.0;
constexpr double kGap = 25.0;

std::string fixed(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s)
    {
        switch (c)
        {
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '&':
            out += "&amp;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

} // namespace

Panel step_panel(const std::string& title, const std::vector<double>& values)
{
    Panel p{title, {}, 1.0};
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        const auto t = static_cast<double>(i);
        p.points.push_back({t, values[i]});
        p.points.push_back({t + 1.0, values[i]});
        p.y_max = std::max(p.y_max, values[i]);
    }
    return p;
}

Panel set_panel(const std::string& title, const SpanSet& set, double domain_end)
{
    Panel p{title, {}, 1.0};
    p.points.push_back({0.0, set.contains(0.0) ? 1.0 : 0.0});
    const SpanSet clipped = set.intersect(Span::right_open(0.0, domain_end));
    for (const Span& s : clipped.spans())
    {
        if (s.lo > 0.0)
        {
            p.points.push_back({s.lo, 0.0});
            p.points.push_back({s.lo, 1.0});
        }
        if (s.hi < domain_end)
        {
            p.points.push_back({s.hi, 1.0});
            p.points.push_back({s.hi, 0.0});
        }
    }
    p.points.push_back({domain_end, p.points.back().v});
    return p;
}

Panel function_panel(const std::string& title, const PiecewisePolynomial& f, double step)
{
    Panel p{title, f.to_piecewise_linear(step).knots(), 1.0};
    for (const Knot& k : p.points)
        p.y_max = std::max(p.y_max, k.v);
    return p;
}

std::string render_svg(const std::vector<Panel>& panels, const std::string& title)
{
    const double height = kTitleHeight + static_cast<double>(panels.size()) * (kPanelHeight + kGap);
    double t_max = 1.0;
    for (const Panel& p : panels)
    {
        for (const Knot& k : p.points)
            t_max = std::max(t_max, k.t);
    }
    const double plot_w = kWidth - kMarginLeft - kMarginRight;

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth) + "\" height=\"" +
                      fixed(height) + "\" viewBox=\"0 0 " + fixed(kWidth) + " " + fixed(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fixed(kWidth / 2) + "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">" + escape(title) + "</text>\n";

    for (std::size_t i = 0; i < panels.size(); ++i)
    {
        const Panel& p = panels[i];
        const double top = kTitleHeight + static_cast<double>(i) * (kPanelHeight + kGap);
        const double bottom = top + kPanelHeight;
        auto x = [&](double t) { return kMarginLeft + plot_w * t / t_max; };
        auto y = [&](double v) { return bottom - kPanelHeight * v / p.y_max; };

        svg += "<g class=\"panel\">\n";
        svg += "<text x=\"4\" y=\"" + fixed(top + 12) + "\" font-family=\"sans-serif\" font-size=\"11\">" +
               escape(p.title) + "</text>\n";
        svg += "<line x1=\"" + fixed(kMarginLeft) + "\" y1=\"" + fixed(bottom) + "\" x2=\"" +
               fixed(kMarginLeft + plot_w) + "\" y2=\"" + fixed(bottom) + "\" stroke=\"#999\"/>\n";
        svg += "<line x1=\"" + fixed(kMarginLeft) + "\" y1=\"" + fixed(top) + "\" x2=\"" + fixed(kMarginLeft) +
               "\" y2=\"" + fixed(bottom) + "\" stroke=\"#999\"/>\n";
        svg += "<text x=\"" + fixed(kMarginLeft - 4) + "\" y=\"" + fixed(top + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"9\">" + format_number(p.y_max) +
               "</text>\n";
        svg += "<text x=\"" + fixed(kMarginLeft + plot_w) + "\" y=\"" + fixed(bottom + 12) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"9\">" + format_number(t_max) +
               "</text>\n";
        std::string d;
        for (std::size_t k = 0; k < p.points.size(); ++k)
            d += (k == 0 ? "M" : " L") + fixed(x(p.points[k].t)) + "," + fixed(y(p.points[k].v));
        if (d.empty())
            d = "M" + fixed(x(0.0)) + "," + fixed(y(0.0));
        svg += "<path d=\"" + d + "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
        svg += "</g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace tlf
