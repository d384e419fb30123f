#include "tlf/check.hpp"

#include "tlf/errors.hpp"
#include "tlf/format.hpp"
#include "tlf/io.hpp"
#include "tlf/oracle.hpp"
#include "tlf/qual.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace tlf
{

namespace
{

int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p)
{
    return std::bernoulli_distribution(p)(rng);
}

TimeInterval random_interval(Rng& rng, int max_bound)
{
    const int a = uniform(rng, 0, max_bound);
    if (coin(rng, 0.2))
        return TimeInterval::singular(a);
    return TimeInterval::closed(a, uniform(rng, a, max_bound));
}

Formula random_leaf(Rng& rng, const GenOptions& opt)
{
    if (coin(rng, 0.1))
        return coin(rng, 0.5) ? Formula::truth() : Formula::falsity();
    Formula p = Formula::prop(opt.props[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(opt.props.size()) - 1))]);
    if (opt.pnf && coin(rng, 0.3))
        return Formula::negation(std::move(p));
    return p;
}

// Fragment whose continuous quantitative value stays in {0,1}: Boolean
// connectives, G, H, and the singular operators (pure shifts).
Formula random_boolean(Rng& rng, const GenOptions& opt, int depth)
{
    if (depth <= 0 || coin(rng, 0.35))
        return random_leaf(rng, opt);
    const int a = uniform(rng, 0, opt.max_bound);
    switch (uniform(rng, 0, 5))
    {
    case 0:
        return Formula::conjunction(random_boolean(rng, opt, depth - 1), random_boolean(rng, opt, depth - 1));
    case 1:
        return Formula::disjunction(random_boolean(rng, opt, depth - 1), random_boolean(rng, opt, depth - 1));
    case 2:
        return Formula::globally(random_interval(rng, opt.max_bound), random_boolean(rng, opt, depth - 1));
    case 3:
        return Formula::historically(random_interval(rng, opt.max_bound), random_boolean(rng, opt, depth - 1));
    case 4:
        return coin(rng, 0.5) ? Formula::finally(TimeInterval::singular(a), random_boolean(rng, opt, depth - 1))
                              : Formula::once(TimeInterval::singular(a), random_boolean(rng, opt, depth - 1));
    default:
        return coin(rng, 0.5) ? Formula::until(TimeInterval::singular(a), random_boolean(rng, opt, depth - 1),
                                               random_boolean(rng, opt, depth - 1))
                              : Formula::since(TimeInterval::singular(a), random_boolean(rng, opt, depth - 1),
                                               random_boolean(rng, opt, depth - 1));
    }
}

Formula random_formula(Rng& rng, const GenOptions& opt, int depth)
{
    if (depth <= 0 || coin(rng, 0.25))
        return random_leaf(rng, opt);
    const int choice = uniform(rng, opt.pnf ? 1 : 0, 8);
    auto sub = [&] { return random_formula(rng, opt, depth - 1); };
    switch (choice)
    {
    case 0:
        return Formula::negation(sub());
    case 1:
        return Formula::disjunction(sub(), sub());
    case 2:
        return Formula::conjunction(sub(), sub());
    case 3:
        return Formula::finally(random_interval(rng, opt.max_bound), sub());
    case 4:
        return Formula::globally(random_interval(rng, opt.max_bound), sub());
    case 5:
        return Formula::once(random_interval(rng, opt.max_bound), sub());
    case 6:
        return Formula::historically(random_interval(rng, opt.max_bound), sub());
    default: {
        const TimeInterval i = random_interval(rng, opt.max_bound);
        Formula left = opt.boolean_until_left && !i.is_singular() ? random_boolean(rng, opt, depth - 1) : sub();
        Formula right = sub();
        return choice == 7 ? Formula::until(i, std::move(left), std::move(right))
                           : Formula::since(i, std::move(left), std::move(right));
    }
    }
}

using Probe = std::function<std::optional<Counterexample>(const Formula&, const SignalBundle&)>;

std::optional<Counterexample> safe_probe(const Probe& probe, const Formula& f, const SignalBundle& x)
{
    try
    {
        return probe(f, x);
    }
    catch (const error&)
    {
        return std::nullopt;
    }
}

std::vector<Formula> formula_candidates(const Formula& f)
{
    std::vector<Formula> out;
    for (const Formula& a : f.args)
        out.push_back(a);
    if (f.is_temporal())
    {
        TimeInterval i = f.interval;
        for (TimeInterval j : {TimeInterval::closed(i.lo, i.hi - 1), TimeInterval::closed(i.lo + 1, i.hi),
                               TimeInterval::closed(0, i.hi - i.lo), TimeInterval::closed(std::floor(i.lo / 2), std::floor(i.hi / 2))})
        {
            if (j.lo <= j.hi && j != i)
            {
                Formula g = f;
                g.interval = j;
                out.push_back(std::move(g));
            }
        }
    }
    for (std::size_t k = 0; k < f.args.size(); ++k)
    {
        for (Formula& c : formula_candidates(f.args[k]))
        {
            Formula g = f;
            g.args[k] = std::move(c);
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<SignalBundle> signal_candidates(const SignalBundle& x)
{
    std::vector<SignalBundle> out;
    if (x.time_kind() == TimeKind::discrete)
    {
        const int T = x.t_end();
        if (T > 0)
        {
            SignalBundle y(TimeKind::discrete, T - 1);
            for (const auto& [name, s] : x.propositions())
            {
                std::vector<std::uint8_t> v = std::get<DiscreteTrace>(s).values();
                v.pop_back();
                y.add(name, DiscreteTrace(name, std::move(v)));
            }
            out.push_back(std::move(y));
        }
        for (const auto& [name, s] : x.propositions())
        {
            const auto& values = std::get<DiscreteTrace>(s).values();
            for (std::size_t i = 0; i < values.size(); ++i)
            {
                if (!values[i])
                    continue;
                std::vector<std::uint8_t> v = values;
                v[i] = 0;
                SignalBundle y = x;
                y.add(name, DiscreteTrace(name, std::move(v)));
                out.push_back(std::move(y));
            }
        }
        return out;
    }
    const double T = x.domain_end();
    if (T > 1.0)
    {
        SignalBundle y(TimeKind::continuous, T - 1.0);
        for (const auto& [name, s] : x.propositions())
            y.add(name, IntervalSet::from_spans(std::get<IntervalSet>(s).to_spans(), T - 1.0));
        out.push_back(std::move(y));
    }
    for (const auto& [name, s] : x.propositions())
    {
        const auto& ivs = std::get<IntervalSet>(s).intervals();
        for (std::size_t i = 0; i < ivs.size(); ++i)
        {
            std::vector<Interval> rest = ivs;
            rest.erase(rest.begin() + static_cast<long>(i));
            SignalBundle y = x;
            y.add(name, IntervalSet(std::move(rest), T));
            out.push_back(std::move(y));
        }
    }
    return out;
}

Counterexample shrink(const Probe& probe, Counterexample c)
{
    for (int round = 0; round < 200; ++round)
    {
        bool improved = false;
        for (const Formula& g : formula_candidates(c.formula))
        {
            if (auto r = safe_probe(probe, g, c.signal))
            {
                c = std::move(*r);
                improved = true;
                break;
            }
        }
        if (improved)
            continue;
        for (const SignalBundle& y : signal_candidates(c.signal))
        {
            if (auto r = safe_probe(probe, c.formula, y))
            {
                c = std::move(*r);
                improved = true;
                break;
            }
        }
        if (!improved)
            break;
    }
    return c;
}

SuiteResult run_suite(const std::string& name, int cases, const std::function<Formula()>& gen_formula,
                      const std::function<SignalBundle()>& gen_signal, const Probe& probe)
{
    SuiteResult res;
    res.name = name;
    res.cases = cases;
    for (int k = 0; k < cases; ++k)
    {
        const Formula f = gen_formula();
        const SignalBundle x = gen_signal();
        std::optional<Counterexample> bad;
        try
        {
            bad = probe(f, x);
        }
        catch (const error& e)
        {
            bad = Counterexample{f, x, 0.0, std::string("evaluation raised: ") + e.what()};
        }
        if (!bad)
            continue;
        ++res.failures;
        if (res.first.empty())
            res.first.push_back(shrink(probe, *bad));
    }
    return res;
}

// A point of a non-empty set, preferring the left end of its first span.
double witness(const SpanSet& s)
{
    const Span& sp = s.spans().front();
    if (sp.lo_closed)
        return sp.lo;
    return sp.hi > sp.lo ? 0.5 * (sp.lo + std::min(sp.hi, sp.lo + 0.25)) : sp.lo;
}

} // namespace

Formula random_formula(Rng& rng, const GenOptions& opt)
{
    return random_formula(rng, opt, uniform(rng, 1, opt.max_depth));
}

SignalBundle random_discrete_bundle(Rng& rng, int max_t, const std::vector<std::string>& props)
{
    const int T = uniform(rng, 1, max_t);
    SignalBundle x(TimeKind::discrete, T);
    for (const std::string& name : props)
    {
        std::vector<std::uint8_t> v(static_cast<std::size_t>(T + 1));
        for (auto& b : v)
            b = coin(rng, 0.4) ? 1 : 0;
        x.add(name, DiscreteTrace(name, std::move(v)));
    }
    return x;
}

SignalBundle random_continuous_bundle(Rng& rng, int max_t, int max_segments, const std::vector<std::string>& props)
{
    const int T = uniform(rng, 1, max_t);
    SignalBundle x(TimeKind::continuous, T);
    const int grid = 4 * T + 1;
    for (const std::string& name : props)
    {
        const int k = uniform(rng, 0, std::min(max_segments, grid / 2));
        std::vector<int> pts(static_cast<std::size_t>(grid));
        for (int i = 0; i < grid; ++i)
            pts[static_cast<std::size_t>(i)] = i;
        std::shuffle(pts.begin(), pts.end(), rng);
        pts.resize(static_cast<std::size_t>(2 * k));
        std::sort(pts.begin(), pts.end());
        std::vector<Interval> ivs;
        for (int i = 0; i < k; ++i)
            ivs.push_back({pts[static_cast<std::size_t>(2 * i)] / 4.0, pts[static_cast<std::size_t>(2 * i + 1)] / 4.0});
        x.add(name, IntervalSet(std::move(ivs), T));
    }
    return x;
}

SuiteResult check_discrete_qual(Rng& rng, int cases)
{
    Probe probe = [](const Formula& f, const SignalBundle& x) -> std::optional<Counterexample> {
        const std::vector<double> q = eval_qual_discrete(f, x);
        const std::vector<bool> o = oracle_discrete_trace(f, x);
        for (std::size_t i = 0; i < q.size(); ++i)
        {
            if ((q[i] == 1.0) != o[i] || (q[i] != 0.0 && q[i] != 1.0))
                return Counterexample{f, x, static_cast<double>(i),
                                      "filter " + format_number(q[i]) + ", oracle " + (o[i] ? "1" : "0")};
        }
        return std::nullopt;
    };
    return run_suite(
        "discrete qualitative = classical", cases, [&] { return random_formula(rng, GenOptions{}); },
        [&] { return random_discrete_bundle(rng); }, probe);
}

SuiteResult check_continuous_qual(Rng& rng, int cases, int sampled_cases, double step)
{
    int seen = 0;
    Probe exact = [](const Formula& f, const SignalBundle& x) -> std::optional<Counterexample> {
        const SpanSet q = eval_qual_continuous(f, x);
        const SpanSet o = oracle_continuous(f, x);
        if (q == o)
            return std::nullopt;
        const Span dom = Span::right_open(0.0, x.domain_end());
        const SpanSet diff = q.intersect(o.complement(dom)).unite(o.intersect(q.complement(dom)));
        const double t = diff.empty() ? 0.0 : witness(diff);
        return Counterexample{f, x, t,
                              std::string("filter ") + (q.contains(t) ? "1" : "0") + ", oracle " +
                                  (o.contains(t) ? "1" : "0")};
    };
    Probe sampled = [exact, step](const Formula& f, const SignalBundle& x) -> std::optional<Counterexample> {
        if (auto r = exact(f, x))
            return r;
        const SpanSet o = oracle_continuous(f, x);
        const std::vector<double> ts = sample_grid(x.domain_end(), step);
        const std::vector<bool> s = sample_oracle_continuous(f, x, step);
        for (std::size_t k = 0; k < ts.size(); ++k)
        {
            if (s[k] != o.contains(ts[k]))
                return Counterexample{f, x, ts[k],
                                      std::string("dense sample ") + (s[k] ? "1" : "0") + ", oracle set " +
                                          (o.contains(ts[k]) ? "1" : "0")};
        }
        return std::nullopt;
    };
    Probe probe = [&](const Formula& f, const SignalBundle& x) {
        return seen <= sampled_cases ? sampled(f, x) : exact(f, x);
    };
    return run_suite(
        "continuous qualitative = classical", cases,
        [&] {
            ++seen;
            return random_formula(rng, GenOptions{});
        },
        [&] { return random_continuous_bundle(rng); }, probe);
}

SuiteResult check_discrete_quant(Rng& rng, int cases, const QuantOptions& opt)
{
    Probe probe = [opt](const Formula& f, const SignalBundle& x) -> std::optional<Counterexample> {
        const QuantTraceD q = eval_quant_discrete(f, x, opt);
        const std::vector<bool> o = oracle_discrete_trace(f, x);
        for (std::size_t i = 0; i < q.values.size(); ++i)
        {
            const double v = q.values[i];
            if ((v > 0.0) != o[i] || v < 0.0 || v > 1.0)
                return Counterexample{f, x, static_cast<double>(i),
                                      "value " + format_number(v) + ", oracle " + (o[i] ? "1" : "0")};
        }
        return std::nullopt;
    };
    GenOptions gen;
    gen.pnf = true;
    return run_suite(
        "discrete quantitative > 0 iff satisfied", cases, [&] { return random_formula(rng, gen); },
        [&] { return random_discrete_bundle(rng); }, probe);
}

SuiteResult check_continuous_quant(Rng& rng, int cases, const QuantOptions& opt)
{
    Probe probe = [opt](const Formula& f, const SignalBundle& x) -> std::optional<Counterexample> {
        const PiecewisePolynomial v = eval_quant_continuous(f, x, opt);
        const SpanSet o = oracle_continuous(f, x);
        const Span dom = Span::right_open(0.0, x.domain_end());
        // value > 0 implies satisfaction; equivalently, no satisfaction implies value 0
        const SpanSet bad = v.above(0.0).intersect(o.complement(dom));
        if (!bad.empty())
        {
            const double t = witness(bad);
            return Counterexample{f, x, t, "value " + format_number(v(t)) + " > 0 but oracle 0"};
        }
        for (std::size_t k = 0; k < v.segments(); ++k)
        {
            if (v.point_values()[k] < 0.0 || v.point_values()[k] > 1.0 + 1e-12)
                return Counterexample{f, x, v.breaks()[k], "value " + format_number(v.point_values()[k]) +
                                                               " outside [0,1]"};
        }
        return std::nullopt;
    };
    GenOptions gen;
    gen.pnf = true;
    gen.boolean_until_left = true;
    return run_suite(
        "continuous quantitative > 0 implies satisfied", cases,
        [&] { return random_formula(rng, gen); }, [&] { return random_continuous_bundle(rng); }, probe);
}

std::string describe(const Counterexample& c)
{
    return "formula: " + to_string(c.formula) + "\nsignal:  " + to_json(c.signal) + "\ntime:    " +
           format_number(c.time) + "\ndetail:  " + c.detail + "\n";
}

} // namespace tlf
