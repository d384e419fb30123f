#include "tlf/qual.hpp"

#include "tlf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tlf
{

namespace
{

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_kernel(const KernelSpec& kernel)
{
    if (kernel.is_smooth())
        throw kernel_shape_error("qualitative semantics needs a rect window, got " + kernel.to_string());
}

std::vector<double> complement(std::vector<double> v)
{
    for (double& x : v)
        x = 1.0 - x;
    return v;
}

std::vector<double> pointwise(const std::vector<double>& a, const std::vector<double>& b, bool take_max)
{
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = take_max ? std::max(a[i], b[i]) : std::min(a[i], b[i]);
    return out;
}

Direction direction_of(Op op)
{
    return op == Op::finally || op == Op::globally || op == Op::until ? Direction::future : Direction::past;
}

// max_j min(phi[j], w[i-j]) with the unnormalized window of I.
std::vector<double> diamond(const std::vector<double>& v, const TimeInterval& i, Direction dir)
{
    return maxmin_convolve(v, rect_window(i, dir, TimeKind::discrete, false));
}

std::vector<double> box(const std::vector<double>& v, const TimeInterval& i, Direction dir)
{
    return complement(diamond(complement(v), i, dir));
}

// max over j in I of min(G_[1,j-1] phi, F_{j} psi), or the past mirror.
std::vector<double> bounded_until(const std::vector<double>& phi, const std::vector<double>& psi,
                                  const TimeInterval& i, Direction dir)
{
    std::vector<double> out(phi.size(), 0.0);
    const auto a = static_cast<long>(i.lo);
    const auto b = static_cast<long>(i.hi);
    for (long j = a; j <= b; ++j)
    {
        // [1, j-1] is empty for j <= 1 and the box over it is 1.
        const std::vector<double> hold =
            j >= 2 ? box(phi, TimeInterval::closed(1.0, static_cast<double>(j - 1)), dir)
                   : std::vector<double>(phi.size(), 1.0);
        const std::vector<double> hit = diamond(psi, TimeInterval::singular(static_cast<double>(j)), dir);
        out = pointwise(out, pointwise(hold, hit, false), true);
    }
    return out;
}

std::vector<double> discrete(const Formula& f, const SignalBundle& x)
{
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
    case Op::negation:
        return complement(discrete(f.arg(), x));
    case Op::disjunction:
        return pointwise(discrete(f.arg(0), x), discrete(f.arg(1), x), true);
    case Op::conjunction:
        return pointwise(discrete(f.arg(0), x), discrete(f.arg(1), x), false);
    case Op::finally:
    case Op::once:
        return diamond(discrete(f.arg(), x), f.interval, direction_of(f.op));
    case Op::globally:
    case Op::historically:
        return box(discrete(f.arg(), x), f.interval, direction_of(f.op));
    case Op::until:
    case Op::since:
        return bounded_until(discrete(f.arg(0), x), discrete(f.arg(1), x), f.interval, direction_of(f.op));
    }
    return {};
}

// sup_j min(phi(j), w(t - j)): t lies in sat(phi) dilated by the window support.
SpanSet diamond(const SpanSet& s, const TimeInterval& i, Direction dir, const Span& dom)
{
    return s.dilate(rect_window(i, dir, TimeKind::continuous, false).support()).intersect(dom);
}

SpanSet box(const SpanSet& s, const TimeInterval& i, Direction dir, const Span& dom)
{
    return diamond(s.complement(dom), i, dir, dom).complement(dom);
}

// sup over j in [a,b] of min(G_(0,j) phi, F_{j} psi). Times past T never
// falsify the open-window box, so sat(phi) is extended by [T, inf). For t in
// a component [l, r) of that set the box holds for every j <= r - t, hence
// the until holds iff psi meets [t + a, min(t + b, r)]. Elsewhere only j = 0
// qualifies.
SpanSet until(const SpanSet& phi, const SpanSet& psi, double a, double b, double T)
{
    const SpanSet hold = phi.unite(SpanSet(Span::closed(T, kInf)));
    std::vector<Span> out;
    if (a == 0.0)
        out = psi.spans();
    for (const Span& c : hold.spans())
    {
        if (!(c.lo < c.hi))
            continue;
        const double l = c.lo;
        const double r = c.hi;
        for (const Span& j : psi.spans())
        {
            // psi meets [t + a, min(t + b, r)] for a closed window:
            //   window non-empty:   t <= r - a
            //   t + a before j.hi:  t <(=) j.hi - a
            //   t + b after j.lo:   t >(=) j.lo - b
            //   r after j.lo:       r >(=) j.lo
            if (!(r > j.lo || (r == j.lo && j.lo_closed)))
                continue;
            Span t = Span::right_open(l, r);
            t = intersect(t, Span{-kInf, r - a, false, true});
            t = intersect(t, Span{-kInf, j.hi - a, false, j.hi_closed});
            t = intersect(t, Span{j.lo - b, kInf, j.lo_closed, false});
            out.push_back(t);
        }
    }
    return SpanSet(std::move(out));
}

// Mirror image with H_(0,j) and O_{j}: sat(phi) extended by (-inf, 0), t in a
// component (l, r], psi meets [max(t - b, l), t - a].
SpanSet since(const SpanSet& phi, const SpanSet& psi, double a, double b)
{
    const SpanSet hold = phi.unite(SpanSet(Span{-kInf, 0.0, false, false}));
    std::vector<Span> out;
    if (a == 0.0)
        out = psi.spans();
    for (const Span& c : hold.spans())
    {
        if (!(c.lo < c.hi))
            continue;
        const double l = c.lo;
        const double r = c.hi;
        for (const Span& j : psi.spans())
        {
            //   window non-empty:   t >= l + a
            //   t - a after j.lo:   t >(=) j.lo + a
            //   t - b before j.hi:  t <(=) j.hi + b
            //   l before j.hi:      l <(=) j.hi
            if (!(l < j.hi || (l == j.hi && j.hi_closed)))
                continue;
            Span t{l, r, false, true};
            t = intersect(t, Span{l + a, kInf, true, false});
            t = intersect(t, Span{j.lo + a, kInf, j.lo_closed, false});
            t = intersect(t, Span{-kInf, j.hi + b, false, j.hi_closed});
            out.push_back(t);
        }
    }
    return SpanSet(std::move(out));
}

SpanSet continuous(const Formula& f, const SignalBundle& x)
{
    const Span dom = Span::right_open(0.0, x.domain_end());
    switch (f.op)
    {
    case Op::prop:
        return x.continuous(f.name).to_spans();
    case Op::top:
        return SpanSet(dom);
    case Op::bottom:
        return {};
    case Op::negation:
        return continuous(f.arg(), x).complement(dom);
    case Op::disjunction:
        return continuous(f.arg(0), x).unite(continuous(f.arg(1), x));
    case Op::conjunction:
        return continuous(f.arg(0), x).intersect(continuous(f.arg(1), x));
    case Op::finally:
    case Op::once:
        return diamond(continuous(f.arg(), x), f.interval, direction_of(f.op), dom);
    case Op::globally:
    case Op::historically:
        return box(continuous(f.arg(), x), f.interval, direction_of(f.op), dom);
    case Op::until:
        return until(continuous(f.arg(0), x), continuous(f.arg(1), x), f.interval.lo, f.interval.hi,
                     x.domain_end())
            .intersect(dom);
    case Op::since:
        return since(continuous(f.arg(0), x), continuous(f.arg(1), x), f.interval.lo, f.interval.hi)
            .intersect(dom);
    }
    return {};
}

} // namespace

std::vector<double> eval_qual_discrete(const Formula& f, const SignalBundle& x, const KernelSpec& kernel)
{
    check_kernel(kernel);
    require_closed_intervals(f);
    if (x.time_kind() != TimeKind::discrete)
        throw domain_mismatch("discrete evaluation needs a discrete signal");
    return discrete(f, x);
}

SpanSet eval_qual_continuous(const Formula& f, const SignalBundle& x, const KernelSpec& kernel)
{
    check_kernel(kernel);
    require_closed_intervals(f);
    if (x.time_kind() != TimeKind::continuous)
        throw domain_mismatch("continuous evaluation needs a continuous signal");
    return continuous(f, x);
}

} // namespace tlf
