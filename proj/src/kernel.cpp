#include "tlf/kernel.hpp"

#include "tlf/errors.hpp"
#include "tlf/format.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

namespace tlf
{

namespace
{

constexpr double kQuadTol = 1e-10;
constexpr unsigned kQuadDepth = 40;

double std_normal_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double logistic(double x)
{
    if (x >= 0.0)
        return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

template <class F>
double integrate(F&& f, double lo, double hi)
{
    if (!(lo < hi))
        return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, kQuadDepth, kQuadTol);
}

// Integer points of a span, ascending.
std::vector<long> integer_points(const Span& s)
{
    std::vector<long> out;
    if (s.empty())
        return out;
    auto lo = static_cast<long>(std::ceil(s.lo));
    auto hi = static_cast<long>(std::floor(s.hi));
    if (!s.lo_closed && static_cast<double>(lo) == s.lo)
        ++lo;
    if (!s.hi_closed && static_cast<double>(hi) == s.hi)
        --hi;
    for (long k = lo; k <= hi; ++k)
        out.push_back(k);
    return out;
}

Span oriented(const TimeInterval& i, Direction dir)
{
    if (dir == Direction::future)
        return {-i.hi, -i.lo, !i.hi_open, !i.lo_open};
    return {i.lo, i.hi, !i.lo_open, !i.hi_open};
}

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw invalid_param(std::string(what) + " must be a positive number, got " + format_number(v));
}

} // namespace

KernelSpec KernelSpec::parse(const std::string& text)
{
    if (text == "rect")
        return {};
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw invalid_param("unknown kernel '" + text + "' (expected rect, gauss:<r> or sigmoid:<k>)");
    const std::string name = text.substr(0, colon);
    KernelSpec spec;
    if (name == "gauss")
        spec.shape = KernelShape::gaussian;
    else if (name == "sigmoid")
        spec.shape = KernelShape::sigmoid_edge;
    else
        throw invalid_param("unknown kernel '" + name + "'");
    try
    {
        std::size_t used = 0;
        spec.param = std::stod(text.substr(colon + 1), &used);
        if (used != text.size() - colon - 1)
            throw invalid_param("trailing characters in kernel parameter");
    }
    catch (const std::logic_error&)
    {
        throw invalid_param("kernel parameter is not a number: '" + text.substr(colon + 1) + "'");
    }
    require_positive(spec.param, "kernel parameter");
    return spec;
}

std::string KernelSpec::to_string() const
{
    switch (shape)
    {
    case KernelShape::gaussian:
        return "gauss:" + format_number(param);
    case KernelShape::sigmoid_edge:
        return "sigmoid:" + format_number(param);
    default:
        return "rect";
    }
}

double Kernel::size() const
{
    if (_shape == KernelShape::singular)
        return 1.0;
    if (_kind == TimeKind::discrete)
        return static_cast<double>(integer_points(_nominal).size());
    return _nominal.hi - _nominal.lo;
}

double Kernel::shape_value(double t) const
{
    switch (_shape)
    {
    case KernelShape::rect:
        return _nominal.contains(t) ? 1.0 : 0.0;
    case KernelShape::singular:
        return t == _nominal.lo ? 1.0 : 0.0;
    case KernelShape::gaussian: {
        const double sigma = 1.0 / _param;
        const double mu = 0.5 * (_nominal.lo + _nominal.hi);
        const double z = (t - mu) / sigma;
        return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
    }
    case KernelShape::sigmoid_edge:
        return logistic(_param * (t - _nominal.lo)) * logistic(-_param * (t - _nominal.hi));
    }
    return 0.0;
}

double Kernel::eval(double t) const
{
    if (_kind == TimeKind::discrete && t != std::floor(t))
        return 0.0;
    if (_kind == TimeKind::continuous && _shape == KernelShape::singular)
        return 0.0;
    if (!_support.contains(t))
        return 0.0;
    return _scale * shape_value(t);
}

double Kernel::integral(double lo, double hi) const
{
    if (_kind != TimeKind::continuous)
        throw kernel_shape_error("kernel integral is defined for continuous windows only");
    if (_shape == KernelShape::singular)
        return (lo <= _nominal.lo && _nominal.lo <= hi) ? 1.0 : 0.0;
    lo = std::max(lo, _support.lo);
    hi = std::min(hi, _support.hi);
    if (!(lo < hi))
        return 0.0;
    switch (_shape)
    {
    case KernelShape::rect:
        return _scale * (hi - lo);
    case KernelShape::gaussian: {
        const double sigma = 1.0 / _param;
        const double mu = 0.5 * (_nominal.lo + _nominal.hi);
        return _scale * (std_normal_cdf((hi - mu) / sigma) - std_normal_cdf((lo - mu) / sigma));
    }
    default: {
        auto f = [this](double t) { return shape_value(t); };
        double total = 0.0;
        // Split at the edges, where a steep sigmoid changes fastest.
        std::vector<double> cuts{lo};
        for (double c : {_nominal.lo, _nominal.hi})
        {
            if (lo < c && c < hi)
                cuts.push_back(c);
        }
        cuts.push_back(hi);
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
            total += integrate(f, cuts[k], cuts[k + 1]);
        return _scale * total;
    }
    }
}

double Kernel::mass() const
{
    if (_kind == TimeKind::discrete)
    {
        double total = 0.0;
        for (long k : integer_points(_support))
            total += eval(static_cast<double>(k));
        return total;
    }
    if (_shape == KernelShape::singular)
        return 1.0;
    auto f = [this](double t) { return eval(t); };
    if (_shape == KernelShape::rect)
        return integrate(f, _nominal.lo, _nominal.hi);
    std::vector<double> cuts{_support.lo};
    for (double c : {_nominal.lo, _nominal.hi})
    {
        if (_support.lo < c && c < _support.hi)
            cuts.push_back(c);
    }
    cuts.push_back(_support.hi);
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
        total += integrate(f, cuts[k], cuts[k + 1]);
    return total;
}

void Kernel::normalize()
{
    _scale = 1.0;
    if (_kind == TimeKind::discrete)
    {
        double total = 0.0;
        for (long k : integer_points(_support))
            total += shape_value(static_cast<double>(k));
        if (!(total > 0.0))
            throw invalid_param("window has no mass on the integer grid");
        _scale = 1.0 / total;
        return;
    }
    _scale = 1.0 / integral(_support.lo, _support.hi);
}

Kernel rect_window(const TimeInterval& i, Direction dir, TimeKind kind, bool normalized)
{
    if (i.is_singular())
        return singular_window(i.lo, dir, kind);
    Kernel k;
    k._shape = KernelShape::rect;
    k._interval = i;
    k._direction = dir;
    k._kind = kind;
    k._normalized = normalized;
    k._nominal = oriented(i, dir);
    k._support = k._nominal;
    k._scale = normalized ? 1.0 / k.size() : 1.0;
    return k;
}

Kernel singular_window(double a, Direction dir, TimeKind kind)
{
    Kernel k;
    k._shape = KernelShape::singular;
    k._interval = TimeInterval::singular(a);
    k._direction = dir;
    k._kind = kind;
    k._nominal = oriented(k._interval, dir);
    k._support = k._nominal;
    return k;
}

Kernel gaussian_window(const TimeInterval& i, Direction dir, double sigma_reciprocal, TimeKind kind)
{
    require_positive(sigma_reciprocal, "Gaussian reciprocal standard deviation");
    Kernel k;
    k._shape = KernelShape::gaussian;
    k._interval = i;
    k._direction = dir;
    k._kind = kind;
    k._param = sigma_reciprocal;
    k._nominal = oriented(i, dir);
    const double sigma = 1.0 / sigma_reciprocal;
    k._support = Span::closed(k._nominal.lo - 3.0 * sigma, k._nominal.hi + 3.0 * sigma);
    k.normalize();
    return k;
}

Kernel sigmoid_window(const TimeInterval& i, Direction dir, double steepness, TimeKind kind)
{
    require_positive(steepness, "sigmoid steepness");
    Kernel k;
    k._shape = KernelShape::sigmoid_edge;
    k._interval = i;
    k._direction = dir;
    k._kind = kind;
    k._param = steepness;
    k._nominal = oriented(i, dir);
    k._support = Span::closed(k._nominal.lo - 4.0 / steepness, k._nominal.hi + 4.0 / steepness);
    k.normalize();
    return k;
}

Kernel make_window(const KernelSpec& spec, const TimeInterval& i, Direction dir, TimeKind kind, bool normalized)
{
    if (i.is_singular())
        return singular_window(i.lo, dir, kind);
    switch (spec.shape)
    {
    case KernelShape::gaussian:
        return gaussian_window(i, dir, spec.param, kind);
    case KernelShape::sigmoid_edge:
        return sigmoid_window(i, dir, spec.param, kind);
    default:
        return rect_window(i, dir, kind, normalized);
    }
}

Kernel centered_rect(double width)
{
    require_positive(width, "window width");
    Kernel k;
    k._shape = KernelShape::rect;
    k._interval = TimeInterval::closed(0.0, width);
    k._direction = Direction::centered;
    k._kind = TimeKind::continuous;
    k._nominal = Span::closed(-0.5 * width, 0.5 * width);
    k._support = k._nominal;
    k._scale = 1.0 / width;
    return k;
}

Kernel centered_gaussian(double sigma)
{
    require_positive(sigma, "Gaussian standard deviation");
    Kernel k;
    k._shape = KernelShape::gaussian;
    k._interval = TimeInterval::closed(0.0, 0.0);
    k._direction = Direction::centered;
    k._kind = TimeKind::continuous;
    k._param = 1.0 / sigma;
    k._nominal = Span::point(0.0);
    // Mass beyond 8 sigma is below double precision; no renormalization.
    k._support = Span::closed(-8.0 * sigma, 8.0 * sigma);
    return k;
}

std::vector<double> maxmin_convolve(const std::vector<double>& v, const Kernel& w)
{
    const std::vector<long> offsets = integer_points(w.support());
    const auto n = static_cast<long>(v.size());
    std::vector<double> out(v.size(), 0.0);
    for (long i = 0; i < n; ++i)
    {
        double acc = 0.0;
        for (long d : offsets)
        {
            const long j = i - d;
            if (j >= 0 && j < n)
                acc = std::max(acc, std::min(v[static_cast<std::size_t>(j)], w.eval(static_cast<double>(d))));
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

std::vector<double> convolve(const std::vector<double>& v, const Kernel& w)
{
    const std::vector<long> offsets = integer_points(w.support());
    const auto n = static_cast<long>(v.size());
    std::vector<double> out(v.size(), 0.0);
    for (long i = 0; i < n; ++i)
    {
        double acc = 0.0;
        for (long d : offsets)
        {
            const long j = i - d;
            if (j >= 0 && j < n)
                acc += v[static_cast<std::size_t>(j)] * w.eval(static_cast<double>(d));
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

} // namespace tlf
