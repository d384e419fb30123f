#include "tlf/quant.hpp"

#include "tlf/errors.hpp"
#include "tlf/oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace tlf
{

namespace
{

Direction direction_of(Op op)
{
    return op == Op::finally || op == Op::globally || op == Op::until ? Direction::future : Direction::past;
}

void check_input(const Formula& f, const QuantOptions& opt)
{
    if (!is_pnf(f))
        throw not_pnf("quantitative semantics needs positive normal form: " + to_string(f));
    require_closed_intervals(f);
    if (!(opt.sample_step > 0.0))
        throw invalid_param("sample step must be positive");
}

void check_smooth_use(const Formula& f, const QuantOptions& opt)
{
    if (opt.kernel.is_smooth() && (f.op == Op::globally || f.op == Op::historically || f.op == Op::until ||
                                   f.op == Op::since))
        throw kernel_shape_error("kernel " + opt.kernel.to_string() + " applies to F and O only, not to " +
                                 to_string(f));
}

// ---------------------------------------------------------------------------
// Discrete

std::vector<double> discrete(const Formula& f, const SignalBundle& x, const QuantOptions& opt);

// min over (i + I) or (i - I), restricted to {0..T} unless unclipped; empty -> 1.
std::vector<double> window_min(const std::vector<double>& v, double lo, double hi, Direction dir, bool unclipped)
{
    const auto n = static_cast<long>(v.size());
    std::vector<double> out(v.size(), 1.0);
    for (long i = 0; i < n; ++i)
    {
        double m = 1.0;
        for (auto d = static_cast<long>(lo); d <= static_cast<long>(hi); ++d)
        {
            const long j = dir == Direction::future ? i + d : i - d;
            if (j >= 0 && j < n)
                m = std::min(m, v[static_cast<std::size_t>(j)]);
            else if (unclipped)
                m = 0.0;
        }
        out[static_cast<std::size_t>(i)] = m;
    }
    return out;
}

// (1/|I|) sum over j in I of G_[1,j-1] phi[i] * psi[i + j], or the past mirror.
std::vector<double> bounded_until(const std::vector<double>& phi, const std::vector<double>& psi,
                                  const TimeInterval& iv, Direction dir)
{
    const auto n = static_cast<long>(phi.size());
    const auto a = static_cast<long>(iv.lo);
    const auto b = static_cast<long>(iv.hi);
    const auto size = static_cast<double>(b - a + 1);
    std::vector<double> out(phi.size(), 0.0);
    for (long j = a; j <= b; ++j)
    {
        const std::vector<double> hold = window_min(phi, 1.0, static_cast<double>(j - 1), dir, false);
        for (long i = 0; i < n; ++i)
        {
            const long k = dir == Direction::future ? i + j : i - j;
            if (k >= 0 && k < n)
                out[static_cast<std::size_t>(i)] += hold[static_cast<std::size_t>(i)] * psi[static_cast<std::size_t>(k)];
        }
    }
    for (double& v : out)
        v /= size;
    return out;
}

std::vector<double> discrete(const Formula& f, const SignalBundle& x, const QuantOptions& opt)
{
    check_smooth_use(f, opt);
    const auto n = static_cast<std::size_t>(x.t_end() + 1);
    switch (f.op)
    {
    case Op::prop: {
        const DiscreteTrace& p = x.discrete(f.name);
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = p[static_cast<int>(i)] ? 1.0 : 0.0;
        return v;
    }
    case Op::top:
        return std::vector<double>(n, 1.0);
    case Op::bottom:
        return std::vector<double>(n, 0.0);
    case Op::negation: {
        std::vector<double> v = discrete(f.arg(), x, opt);
        for (double& e : v)
            e = 1.0 - e;
        return v;
    }
    case Op::disjunction:
    case Op::conjunction: {
        const std::vector<double> a = discrete(f.arg(0), x, opt);
        const std::vector<double> b = discrete(f.arg(1), x, opt);
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = f.op == Op::disjunction ? std::max(a[i], b[i]) : std::min(a[i], b[i]);
        return v;
    }
    case Op::finally:
    case Op::once:
        return convolve(discrete(f.arg(), x, opt),
                        make_window(opt.kernel, f.interval, direction_of(f.op), TimeKind::discrete, true));
    case Op::globally:
    case Op::historically:
        return window_min(discrete(f.arg(), x, opt), f.interval.lo, f.interval.hi, direction_of(f.op),
                          opt.unclipped_globally);
    case Op::until:
    case Op::since:
        return bounded_until(discrete(f.arg(0), x, opt), discrete(f.arg(1), x, opt), f.interval,
                             direction_of(f.op));
    }
    return {};
}

// ---------------------------------------------------------------------------
// Continuous

// integral over [0,T) of f(j) w(t - j) dj at grid times.
PiecewisePolynomial smooth_convolution(const PiecewisePolynomial& f, const Kernel& w, double step)
{
    const double T = f.domain_end();
    const Span supp = w.support();
    const std::vector<double> ts = sample_grid(T, step);
    std::vector<double> vs;
    vs.reserve(ts.size());
    const bool boolean = f.is_boolean();
    const SpanSet ones = boolean ? f.ones() : SpanSet();
    for (double t : ts)
    {
        const double lo = std::max(0.0, t - supp.hi);
        const double hi = std::min(T, t - supp.lo);
        double acc = 0.0;
        if (lo < hi && boolean)
        {
            const SpanSet hit = ones.intersect(Span::closed(lo, hi));
            for (const Span& s : hit.spans())
                acc += w.integral(t - s.hi, t - s.lo);
        }
        else if (lo < hi)
        {
            for (std::size_t k = 0; k < f.segments(); ++k)
            {
                const double p = std::max(lo, f.breaks()[k]);
                const double q = std::min(hi, f.segment_end(k));
                if (!(p < q))
                    continue;
                const Polynomial& piece = f.pieces()[k];
                const double x0 = f.breaks()[k];
                auto g = [&](double j) { return piece(j - x0) * w.eval(t - j); };
                acc += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, p, q, 30, 1e-10);
            }
        }
        vs.push_back(acc);
    }
    return PiecewisePolynomial::from_samples(ts, vs, T);
}

PiecewisePolynomial continuous(const Formula& f, const SignalBundle& x, const QuantOptions& opt)
{
    check_smooth_use(f, opt);
    const double T = x.domain_end();
    const double a = f.interval.lo;
    const double b = f.interval.hi;
    switch (f.op)
    {
    case Op::prop:
        return PiecewisePolynomial::indicator(x.continuous(f.name).to_spans(), T);
    case Op::top:
        return {1.0, T};
    case Op::bottom:
        return {0.0, T};
    case Op::negation:
        return one_minus(continuous(f.arg(), x, opt));
    case Op::disjunction:
        return pointwise_max(continuous(f.arg(0), x, opt), continuous(f.arg(1), x, opt));
    case Op::conjunction:
        return pointwise_min(continuous(f.arg(0), x, opt), continuous(f.arg(1), x, opt));
    case Op::finally:
    case Op::once: {
        const PiecewisePolynomial v = continuous(f.arg(), x, opt);
        const double sign = f.op == Op::finally ? 1.0 : -1.0;
        if (f.interval.is_singular())
            return shift(v, sign * a, 0.0);
        if (opt.kernel.is_smooth())
        {
            return smooth_convolution(
                v, make_window(opt.kernel, f.interval, direction_of(f.op), TimeKind::continuous, true),
                opt.sample_step);
        }
        return f.op == Op::finally ? window_integral(v, a, b, 1.0 / (b - a))
                                   : window_integral(v, -b, -a, 1.0 / (b - a));
    }
    case Op::globally:
    case Op::historically: {
        const PiecewisePolynomial v = continuous(f.arg(), x, opt);
        const bool future = f.op == Op::globally;
        PiecewisePolynomial out = window_inf(v, future ? Span::closed(a, b) : Span::closed(-b, -a), 1.0);
        if (opt.unclipped_globally)
        {
            const Span inside = future ? Span::right_open(0.0, T - b) : Span::right_open(b, T);
            out = pointwise_min(out, PiecewisePolynomial::indicator(SpanSet(inside), T));
        }
        return out;
    }
    case Op::until:
    case Op::since: {
        const PiecewisePolynomial phi = continuous(f.arg(0), x, opt);
        const PiecewisePolynomial psi = continuous(f.arg(1), x, opt);
        const bool future = f.op == Op::until;
        if (f.interval.is_singular())
        {
            // G_(0,a) phi * F_{a} psi
            const Span open = future ? Span::open(0.0, a) : Span::open(-a, 0.0);
            return product(window_inf(phi, open, 1.0), shift(psi, future ? a : -a, 0.0));
        }
        if (!phi.is_boolean())
            throw unsupported_operand("left operand of " + std::string(future ? "U" : "S") +
                                      " must be Boolean-valued in continuous time: " + to_string(f.arg(0)));
        return future ? reach_integral_future(phi.ones(), psi, a, b, 1.0 / (b - a))
                      : reach_integral_past(phi.ones(), psi, a, b, 1.0 / (b - a));
    }
    }
    return {};
}

} // namespace

QuantTraceD eval_quant_discrete(const Formula& f, const SignalBundle& x, const QuantOptions& opt)
{
    check_input(f, opt);
    if (x.time_kind() != TimeKind::discrete)
        throw domain_mismatch("discrete evaluation needs a discrete signal");
    return {discrete(f, x, opt)};
}

PiecewisePolynomial eval_quant_continuous(const Formula& f, const SignalBundle& x, const QuantOptions& opt)
{
    check_input(f, opt);
    if (x.time_kind() != TimeKind::continuous)
        throw domain_mismatch("continuous evaluation needs a continuous signal");
    return continuous(f, x, opt);
}

PiecewisePolynomial spike_rate(const std::vector<double>& spikes, const Kernel& window, double T, double step)
{
    if (window.time_kind() != TimeKind::continuous)
        throw kernel_shape_error("spike rates need a continuous window");
    for (double s : spikes)
    {
        if (s < 0.0 || s > T)
            throw domain_error("spike time outside [0,T]");
    }
    if (window.shape() == KernelShape::rect)
    {
        // count of spikes s with t - s in the support, divided by the width
        const Span supp = window.support();
        auto count = [&](double t) {
            return static_cast<double>(
                std::count_if(spikes.begin(), spikes.end(), [&](double s) { return supp.contains(t - s); }));
        };
        std::vector<double> cand{0.0};
        for (double s : spikes)
        {
            cand.push_back(s + supp.lo);
            cand.push_back(s + supp.hi);
        }
        std::erase_if(cand, [&](double c) { return !(c >= 0.0 && c < T); });
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::vector<double> pvs;
        std::vector<Polynomial> pieces;
        const double width = window.size();
        for (std::size_t k = 0; k < cand.size(); ++k)
        {
            const double end = k + 1 < cand.size() ? cand[k + 1] : T;
            pvs.push_back(count(cand[k]) / width);
            pieces.push_back(Polynomial::constant(count(0.5 * (cand[k] + end)) / width));
        }
        return PiecewisePolynomial(std::move(cand), std::move(pvs), std::move(pieces), T).simplified();
    }
    const std::vector<double> ts = sample_grid(T, step);
    std::vector<double> vs;
    vs.reserve(ts.size());
    for (double t : ts)
    {
        double acc = 0.0;
        for (double s : spikes)
            acc += window.eval(t - s);
        vs.push_back(acc);
    }
    return PiecewisePolynomial::from_samples(ts, vs, T);
}

PiecewisePolynomial binned_rate(const std::vector<double>& spikes, double width, double T)
{
    if (!(width > 0.0))
        throw invalid_param("bin width must be positive");
    std::vector<double> breaks;
    std::vector<double> pvs;
    std::vector<Polynomial> pieces;
    for (long k = 0; static_cast<double>(k) * width < T; ++k)
    {
        const double lo = static_cast<double>(k) * width;
        const double hi = lo + width;
        const auto n = std::count_if(spikes.begin(), spikes.end(), [&](double s) { return lo <= s && s < hi; });
        const double rate = static_cast<double>(n) / width;
        breaks.push_back(lo);
        pvs.push_back(rate);
        pieces.push_back(Polynomial::constant(rate));
    }
    if (breaks.empty())
        return {0.0, T};
    return PiecewisePolynomial(std::move(breaks), std::move(pvs), std::move(pieces), T);
}

} // namespace tlf
