#pragma once

#include "tlf/formula.hpp"
#include "tlf/signal.hpp"
#include "tlf/span_set.hpp"

#include <string>

namespace tlf
{

enum class KernelShape
{
    rect,
    singular,
    gaussian,
    sigmoid_edge
};

// future: support <-b,-a>, pairs with F and U. past: support <a,b>, pairs
// with O and S. centered: symmetric about 0, used for rate estimation.
enum class Direction
{
    future,
    past,
    centered
};

// Kernel choice as given on the command line: rect | gauss:<r> | sigmoid:<k>.
struct KernelSpec
{
    KernelShape shape = KernelShape::rect;
    double param = 0.0;

    // Throws invalid_param on malformed text or a non-positive parameter.
    static KernelSpec parse(const std::string& text);
    [[nodiscard]] bool is_smooth() const
    {
        return shape == KernelShape::gaussian || shape == KernelShape::sigmoid_edge;
    }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const KernelSpec&, const KernelSpec&) = default;
};

class Kernel
{
public:
    [[nodiscard]] KernelShape shape() const { return _shape; }
    [[nodiscard]] const TimeInterval& interval() const { return _interval; }
    [[nodiscard]] Direction direction() const { return _direction; }
    [[nodiscard]] TimeKind time_kind() const { return _kind; }
    [[nodiscard]] bool normalized() const { return _normalized; }
    // gaussian: 1/sigma; sigmoid_edge: steepness; otherwise 0.
    [[nodiscard]] double param() const { return _param; }

    // |I|: b - a + 1 points in discrete time, b - a in continuous time, 1 for
    // singular windows.
    [[nodiscard]] double size() const;

    // Nominal support: <-b,-a> (future) or <a,b> (past).
    [[nodiscard]] Span nominal_support() const { return _nominal; }
    // Where eval can be non-zero; wider than the nominal support for smooth shapes.
    [[nodiscard]] Span support() const { return _support; }

    // Kernel value at t (an integer in discrete time). A continuous singular
    // window is a Dirac marker: it is applied as a shift and eval returns 0.
    [[nodiscard]] double eval(double t) const;

    // Integral of eval over [lo, hi] (continuous only, smooth and rect shapes).
    [[nodiscard]] double integral(double lo, double hi) const;

    // Sum (discrete) or adaptive quadrature (continuous) of eval. A continuous
    // singular window reports its symbolic mass of 1.
    [[nodiscard]] double mass() const;

    friend Kernel rect_window(const TimeInterval&, Direction, TimeKind, bool);
    friend Kernel singular_window(double, Direction, TimeKind);
    friend Kernel gaussian_window(const TimeInterval&, Direction, double, TimeKind);
    friend Kernel sigmoid_window(const TimeInterval&, Direction, double, TimeKind);
    friend Kernel centered_rect(double);
    friend Kernel centered_gaussian(double);

private:
    Kernel() = default;
    [[nodiscard]] double shape_value(double t) const;
    void normalize();

    KernelShape _shape = KernelShape::rect;
    TimeInterval _interval;
    Direction _direction = Direction::future;
    TimeKind _kind = TimeKind::continuous;
    bool _normalized = true;
    double _param = 0.0;
    Span _nominal;
    Span _support;
    double _scale = 1.0;
};

// Singular intervals delegate to singular_window.
[[nodiscard]] Kernel rect_window(const TimeInterval& i, Direction dir, TimeKind kind, bool normalized);
[[nodiscard]] Kernel singular_window(double a, Direction dir, TimeKind kind);
// sigma = 1 / sigma_reciprocal; mean at the centre of the nominal support;
// truncated 3 sigma beyond it and renormalized. Throws invalid_param.
[[nodiscard]] Kernel gaussian_window(const TimeInterval& i, Direction dir, double sigma_reciprocal,
                                     TimeKind kind = TimeKind::continuous);
// Product of logistic edges at the support ends, support widened by 4/k per
// side and renormalized. Throws invalid_param.
[[nodiscard]] Kernel sigmoid_window(const TimeInterval& i, Direction dir, double steepness,
                                    TimeKind kind = TimeKind::continuous);
// Window for operator interval i under a kernel spec. Singular intervals
// always give the shift kernel.
[[nodiscard]] Kernel make_window(const KernelSpec& spec, const TimeInterval& i, Direction dir, TimeKind kind,
                                 bool normalized);

// Continuous rate windows: rect on [-width/2, width/2] with height 1/width,
// and an untruncated N(0, sigma).
[[nodiscard]] Kernel centered_rect(double width);
[[nodiscard]] Kernel centered_gaussian(double sigma);

// Discrete convolutions over the domain {0..T}; samples outside the domain
// contribute nothing.
//   out[i] = max_j min(v[j], w[i - j])
[[nodiscard]] std::vector<double> maxmin_convolve(const std::vector<double>& v, const Kernel& w);
//   out[i] = sum_j v[j] * w[i - j]
[[nodiscard]] std::vector<double> convolve(const std::vector<double>& v, const Kernel& w);

} // namespace tlf
