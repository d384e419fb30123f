#include "tlf/oracle.hpp"

#include "tlf/errors.hpp"

#include <cmath>

namespace tlf
{

namespace
{

// Offsets d with d in I, as a span (open bounds allowed in discrete time).
Span offsets(const TimeInterval& i)
{
    return {i.lo, i.hi, !i.lo_open, !i.hi_open};
}

std::vector<bool> discrete_trace(const Formula& f, const SignalBundle& x)
{
    const int T = x.t_end();
    const auto n = static_cast<std::size_t>(T + 1);
    std::vector<bool> out(n, false);
    auto in = [&](int t) { return t >= 0 && t <= T; };

    switch (f.op)
    {
    case Op::prop: {
        const DiscreteTrace& p = x.discrete(f.name);
        for (int i = 0; i <= T; ++i)
            out[static_cast<std::size_t>(i)] = p[i];
        return out;
    }
    case Op::top:
        return std::vector<bool>(n, true);
    case Op::bottom:
        return out;
    default:
        break;
    }

    std::vector<std::vector<bool>> sub;
    for (const Formula& a : f.args)
        sub.push_back(discrete_trace(a, x));
    const Span off = offsets(f.interval);
    const int lo = static_cast<int>(std::floor(f.interval.lo));
    const int hi = static_cast<int>(std::ceil(f.interval.hi));

    for (int i = 0; i <= T; ++i)
    {
        bool v = false;
        switch (f.op)
        {
        case Op::negation:
            v = !sub[0][static_cast<std::size_t>(i)];
            break;
        case Op::disjunction:
            v = sub[0][static_cast<std::size_t>(i)] || sub[1][static_cast<std::size_t>(i)];
            break;
        case Op::conjunction:
            v = sub[0][static_cast<std::size_t>(i)] && sub[1][static_cast<std::size_t>(i)];
            break;
        case Op::finally:
        case Op::once:
            // exists j in (i +- I) cap T with phi(j)
            for (int d = lo; d <= hi && !v; ++d)
            {
                const int j = f.op == Op::finally ? i + d : i - d;
                v = off.contains(d) && in(j) && sub[0][static_cast<std::size_t>(j)];
            }
            break;
        case Op::globally:
        case Op::historically:
            // forall j in (i +- I) cap T, phi(j)
            v = true;
            for (int d = lo; d <= hi && v; ++d)
            {
                const int j = f.op == Op::globally ? i + d : i - d;
                if (off.contains(d) && in(j))
                    v = sub[0][static_cast<std::size_t>(j)];
            }
            break;
        case Op::until:
            // exists j in (i + I) cap T: psi(j) and forall k in (i, j): phi(k)
            for (int d = lo; d <= hi && !v; ++d)
            {
                const int j = i + d;
                if (!off.contains(d) || !in(j) || !sub[1][static_cast<std::size_t>(j)])
                    continue;
                bool hold = true;
                for (int k = i + 1; k < j && hold; ++k)
                    hold = sub[0][static_cast<std::size_t>(k)];
                v = hold;
            }
            break;
        case Op::since:
            // exists j in (i - I) cap T: psi(j) and forall k in (j, i): phi(k)
            for (int d = lo; d <= hi && !v; ++d)
            {
                const int j = i - d;
                if (!off.contains(d) || !in(j) || !sub[1][static_cast<std::size_t>(j)])
                    continue;
                bool hold = true;
                for (int k = j + 1; k < i && hold; ++k)
                    hold = sub[0][static_cast<std::size_t>(k)];
                v = hold;
            }
            break;
        default:
            break;
        }
        out[static_cast<std::size_t>(i)] = v;
    }
    return out;
}

Span domain_of(const SignalBundle& x)
{
    return Span::right_open(0.0, x.domain_end());
}

// {t : [t+a, t+b] meets S}
SpanSet sat_finally(const SpanSet& s, double a, double b)
{
    std::vector<Span> out;
    for (const Span& p : s.spans())
        out.push_back({p.lo - b, p.hi - a, p.lo_closed, p.hi_closed});
    return SpanSet(std::move(out));
}

// {t : [t-b, t-a] meets S}
SpanSet sat_once(const SpanSet& s, double a, double b)
{
    std::vector<Span> out;
    for (const Span& p : s.spans())
        out.push_back({p.lo + a, p.hi + b, p.lo_closed, p.hi_closed});
    return SpanSet(std::move(out));
}

// {t : [t+a, t+b] cap [0,T) inside S}; the quantifier ignores times outside
// the domain, so S is padded on both sides first.
SpanSet sat_globally(const SpanSet& s, double a, double b, double T)
{
    const SpanSet padded = s.unite(SpanSet({Span::open(-b - 1.0, 0.0), Span::closed(T, T + b + 1.0)}));
    std::vector<Span> out;
    for (const Span& p : padded.spans())
        out.push_back({p.lo - a, p.hi - b, p.lo_closed, p.hi_closed});
    return SpanSet(std::move(out));
}

// {t : [t-b, t-a] cap [0,T) inside S}
SpanSet sat_historically(const SpanSet& s, double a, double b, double T)
{
    const SpanSet padded = s.unite(SpanSet({Span::open(-b - 1.0, 0.0), Span::closed(T, T + b + 1.0)}));
    std::vector<Span> out;
    for (const Span& p : padded.spans())
        out.push_back({p.lo + b, p.hi + a, p.lo_closed, p.hi_closed});
    return SpanSet(std::move(out));
}

// Marking algorithm. A time t in [l, r), for a component <l, r> of sat(phi),
// satisfies phi U_I psi through a witness j in psi with j in (l, r]: then
// (t, j) lies inside the component. The witness must sit at distance d in I
// after t, with d > 0 (d = 0 is the a = 0 case, where psi(t) alone suffices
// because (t, t) is empty).
SpanSet sat_until(const SpanSet& phi, const SpanSet& psi, double a, double b)
{
    const Span reach = a > 0.0 ? Span::closed(-b, -a) : Span{-b, 0.0, true, false};
    std::vector<Span> out;
    if (a == 0.0)
        out = psi.spans();
    for (const Span& c : phi.spans())
    {
        if (!(c.lo < c.hi))
            continue;
        const Span starts = Span::right_open(c.lo, c.hi);
        const Span witnesses{c.lo, c.hi, false, true};
        for (const Span& j : psi.spans())
            out.push_back(intersect(starts, minkowski_sum(intersect(j, witnesses), reach)));
    }
    return SpanSet(std::move(out));
}

// Mirror image: t in (l, r], witness j in psi with j in [l, r) at distance d
// in I before t.
SpanSet sat_since(const SpanSet& phi, const SpanSet& psi, double a, double b)
{
    const Span reach = a > 0.0 ? Span::closed(a, b) : Span{0.0, b, false, true};
    std::vector<Span> out;
    if (a == 0.0)
        out = psi.spans();
    for (const Span& c : phi.spans())
    {
        if (!(c.lo < c.hi))
            continue;
        const Span ends{c.lo, c.hi, false, true};
        const Span witnesses = Span::right_open(c.lo, c.hi);
        for (const Span& j : psi.spans())
            out.push_back(intersect(ends, minkowski_sum(intersect(j, witnesses), reach)));
    }
    return SpanSet(std::move(out));
}

SpanSet continuous_sat(const Formula& f, const SignalBundle& x)
{
    const Span dom = domain_of(x);
    const double T = x.domain_end();
    if (f.is_temporal() && !f.interval.is_closed())
        throw open_interval_unsupported("continuous-time operators need closed bounds: " + to_string(f));
    const double a = f.interval.lo;
    const double b = f.interval.hi;

    switch (f.op)
    {
    case Op::prop:
        return x.continuous(f.name).to_spans();
    case Op::top:
        return SpanSet(dom);
    case Op::bottom:
        return {};
    case Op::negation:
        return continuous_sat(f.arg(), x).complement(dom);
    case Op::disjunction:
        return continuous_sat(f.arg(0), x).unite(continuous_sat(f.arg(1), x));
    case Op::conjunction:
        return continuous_sat(f.arg(0), x).intersect(continuous_sat(f.arg(1), x));
    case Op::finally:
        return sat_finally(continuous_sat(f.arg(), x), a, b).intersect(dom);
    case Op::once:
        return sat_once(continuous_sat(f.arg(), x), a, b).intersect(dom);
    case Op::globally:
        return sat_globally(continuous_sat(f.arg(), x), a, b, T).intersect(dom);
    case Op::historically:
        return sat_historically(continuous_sat(f.arg(), x), a, b, T).intersect(dom);
    case Op::until:
        return sat_until(continuous_sat(f.arg(0), x), continuous_sat(f.arg(1), x), a, b).intersect(dom);
    case Op::since:
        return sat_since(continuous_sat(f.arg(0), x), continuous_sat(f.arg(1), x), a, b).intersect(dom);
    }
    return {};
}

bool inside(const SpanSet& s, const Span& w)
{
    return w.empty() || s.intersect(w) == SpanSet(w);
}

bool meets(const SpanSet& s, const Span& w)
{
    return !w.empty() && !s.intersect(w).empty();
}

} // namespace

std::vector<bool> oracle_discrete_trace(const Formula& f, const SignalBundle& x)
{
    if (x.time_kind() != TimeKind::discrete)
        throw domain_mismatch("discrete oracle needs a discrete signal");
    return discrete_trace(f, x);
}

bool oracle_discrete(const Formula& f, const SignalBundle& x, int i)
{
    if (i < 0 || i > x.t_end())
        throw out_of_domain("time " + std::to_string(i) + " outside {0.." + std::to_string(x.t_end()) + "}");
    return oracle_discrete_trace(f, x)[static_cast<std::size_t>(i)];
}

SpanSet oracle_continuous(const Formula& f, const SignalBundle& x)
{
    if (x.time_kind() != TimeKind::continuous)
        throw domain_mismatch("continuous oracle needs a continuous signal");
    return continuous_sat(f, x);
}

std::vector<double> sample_grid(double domain_end, double step)
{
    if (!(step > 0.0))
        throw invalid_param("sample step must be positive");
    std::vector<double> ts;
    const double n = std::round(1.0 / step);
    const bool exact = n >= 1.0 && std::abs(n * step - 1.0) < 1e-12;
    for (long k = 0;; ++k)
    {
        const double t = exact ? static_cast<double>(k) / n : static_cast<double>(k) * step;
        if (t >= domain_end)
            break;
        ts.push_back(t);
    }
    return ts;
}

std::vector<bool> sample_oracle_continuous(const Formula& f, const SignalBundle& x, double step)
{
    if (x.time_kind() != TimeKind::continuous)
        throw domain_mismatch("continuous sampler needs a continuous signal");
    if (f.is_temporal() && !f.interval.is_closed())
        throw open_interval_unsupported("continuous-time operators need closed bounds: " + to_string(f));
    const Span dom = domain_of(x);
    std::vector<SpanSet> sub;
    for (const Formula& g : f.args)
        sub.push_back(oracle_continuous(g, x));
    const double a = f.interval.lo;
    const double b = f.interval.hi;

    std::vector<bool> out;
    for (double t : sample_grid(x.domain_end(), step))
    {
        bool v = false;
        switch (f.op)
        {
        case Op::prop:
            v = x.continuous(f.name).contains(t);
            break;
        case Op::top:
            v = true;
            break;
        case Op::bottom:
            break;
        case Op::negation:
            v = !sub[0].contains(t);
            break;
        case Op::disjunction:
            v = sub[0].contains(t) || sub[1].contains(t);
            break;
        case Op::conjunction:
            v = sub[0].contains(t) && sub[1].contains(t);
            break;
        case Op::finally:
            v = meets(sub[0], intersect(Span::closed(t + a, t + b), dom));
            break;
        case Op::once:
            v = meets(sub[0], intersect(Span::closed(t - b, t - a), dom));
            break;
        case Op::globally:
            v = inside(sub[0], intersect(Span::closed(t + a, t + b), dom));
            break;
        case Op::historically:
            v = inside(sub[0], intersect(Span::closed(t - b, t - a), dom));
            break;
        case Op::until: {
            // Furthest rho with (t, rho) inside sat(phi).
            double rho = t;
            for (const Span& s : sub[0].spans())
            {
                if (s.lo <= t && t < s.hi)
                    rho = s.hi;
            }
            v = t + a <= std::min(t + b, rho) && meets(sub[1], Span::closed(t + a, std::min(t + b, rho)));
            v = v || (a == 0.0 && sub[1].contains(t));
            break;
        }
        case Op::since: {
            double lambda = t;
            for (const Span& s : sub[0].spans())
            {
                if (s.lo < t && t <= s.hi)
                    lambda = s.lo;
            }
            v = std::max(t - b, lambda) <= t - a && meets(sub[1], Span::closed(std::max(t - b, lambda), t - a));
            v = v || (a == 0.0 && sub[1].contains(t));
            break;
        }
        }
        out.push_back(v);
    }
    return out;
}

} // namespace tlf
