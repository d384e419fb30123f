// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include "tlf/check.hpp"
#include "tlf/errors.hpp"
#include "tlf/format.hpp"
#include "tlf/io.hpp"
#include "tlf/kernel.hpp"
#include "tlf/oracle.hpp"
#include "tlf/qual.hpp"
#include "tlf/quant.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>

using namespace tlf;

namespace
{

struct Outcome
{
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome r;
    try
    {
        r = body();
    }
    catch (const std::exception& e)
    {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!r.ok)
        ++failures;
    std::ostringstream line;
    line << (r.ok ? "PASS " : "FAIL ") << id << " " << name << " (" << format_number(std::round(secs * 1000) / 1000)
         << " s)";
    if (!r.detail.empty())
        line << ": " << r.detail;
    std::cout << line.str() << std::endl;
}

Outcome fail(const std::string& why)
{
    return {false, why};
}

Outcome suite_outcome(const SuiteResult& r)
{
    Outcome o{r.passed(), std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " violations"};
    if (!r.first.empty())
        o.detail += "\n" + describe(r.first.front());
    return o;
}

Outcome time_limit(Outcome o, Clock::time_point start, double limit)
{
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= limit)
    {
        o.ok = false;
        o.detail += "; exceeded " + format_number(limit) + " s";
    }
    return o;
}

SignalBundle bits_bundle(const std::vector<std::uint8_t>& bits)
{
    SignalBundle x(TimeKind::discrete, static_cast<double>(bits.size()) - 1.0);
    x.add("p", DiscreteTrace("p", bits));
    return x;
}

// 1 -------------------------------------------------------------------------

// (1/4) sum_{j=1..4} p[i - j] over i - j >= 0, in quarters.
std::vector<int> once_quarters(const std::vector<std::uint8_t>& p)
{
    std::vector<int> out(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
    {
        for (std::size_t j = 1; j <= 4 && j <= i; ++j)
            out[i] += p[i - j];
    }
    return out;
}

Outcome golden_trace()
{
    const auto start = Clock::now();
    const std::vector<int> want_quarters{0, 0, 0, 1, 2, 3, 4, 4, 3, 2, 1, 0, 0};
    std::vector<std::vector<std::uint8_t>> solutions;
    for (unsigned mask = 0; mask < (1u << 13); ++mask)
    {
        std::vector<std::uint8_t> p(13);
        for (unsigned i = 0; i < 13; ++i)
            p[i] = (mask >> i) & 1u;
        if (once_quarters(p) == want_quarters)
            solutions.push_back(p);
    }
    // p[12] never enters the window of any i <= 12, so it is free.
    const std::vector<std::uint8_t> base{0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0};
    std::vector<std::uint8_t> alt = base;
    alt[12] = 1;
    if (solutions.size() != 2 || solutions[0] != base || solutions[1] != alt)
        return fail("brute force found " + std::to_string(solutions.size()) + " reconstructions");

    const QuantTraceD v = eval_quant_discrete(parse("O[1,4] p"), bits_bundle(base));
    for (std::size_t i = 0; i < v.values.size(); ++i)
    {
        if (v.values[i] != want_quarters[i] / 4.0)
            return fail("value " + format_number(v.values[i]) + " at " + std::to_string(i));
    }
    const QuantTraceD w = eval_quant_discrete(parse("O[1,4] p"), bits_bundle(alt));
    if (w.values != v.values)
        return fail("the p[12] = 1 reconstruction disagrees");
    return time_limit({true, "p true on {2..6}; 2 reconstructions differ only at the unread p[12]"}, start, 1.0);
}

// 5 -------------------------------------------------------------------------

Outcome continuous_quant_suite()
{
    Rng rng(4);
    Outcome o = suite_outcome(check_continuous_quant(rng, 300));
    SignalBundle x(TimeKind::continuous, 30);
    x.add("p", IntervalSet({{5, 7}}, 30));
    const Formula f = parse("O[2,4] p");
    const bool sat = oracle_continuous(f, x).contains(7);
    const double v = eval_quant_continuous(f, x)(7);
    o.detail += "; O[2,4] p on [5,7) at t=7: oracle " + std::string(sat ? "1" : "0") + ", value " + format_number(v);
    if (!sat || v != 0.0)
        o.ok = false;
    return o;
}

// 6 -------------------------------------------------------------------------

// Second route for the continuous masses: tanh-sinh on each piece between
// the kernel's nominal edges.
double tanh_sinh_mass(const Kernel& k)
{
    boost::math::quadrature::tanh_sinh<double> ts;
    const Span s = k.support();
    const Span n = k.nominal_support();
    auto f = [&](double t) { return k.eval(t); };
    double total = 0.0;
    const std::vector<double> cuts{s.lo, n.lo, n.hi, s.hi};
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    {
        if (cuts[i + 1] > cuts[i])
            total += ts.integrate(f, cuts[i], cuts[i + 1], 1e-13);
    }
    return total;
}

Outcome kernel_masses()
{
    const TimeInterval i16 = TimeInterval::closed(1, 6);
    std::vector<std::pair<std::string, Kernel>> kernels;
    for (Direction d : {Direction::future, Direction::past})
    {
        const std::string dn = d == Direction::future ? "future" : "past";
        kernels.emplace_back("rect " + dn, rect_window(i16, d, TimeKind::continuous, true));
        for (double r : {3.0, 8.0})
            kernels.emplace_back("gauss:" + format_number(r) + " " + dn, gaussian_window(i16, d, r));
        for (double s : {5.0, 50.0, 1000.0})
            kernels.emplace_back("sigmoid:" + format_number(s) + " " + dn, sigmoid_window(i16, d, s));
    }
    double worst = 0.0;
    for (const auto& [name, k] : kernels)
    {
        const double m = k.mass();
        const double m2 = tanh_sinh_mass(k);
        worst = std::max({worst, std::abs(m - 1.0), std::abs(m2 - 1.0)});
        if (std::abs(m - 1.0) > 1e-9 || std::abs(m2 - 1.0) > 1e-9)
            return fail(name + " mass " + format_number(m) + " / " + format_number(m2));
    }
    for (int a = 0; a <= 3; ++a)
    {
        for (int b = a; b <= a + 4; ++b)
        {
            const Kernel k = rect_window(TimeInterval::closed(a, b), Direction::past, TimeKind::discrete, true);
            double sum = 0.0;
            for (int t = -20; t <= 20; ++t)
                sum += k.eval(t);
            if (std::abs(sum - 1.0) > 1e-12)
                return fail("discrete rect [" + std::to_string(a) + "," + std::to_string(b) + "] sums to " +
                            format_number(sum));
        }
    }
    // Sup-distance to the rect height 1/5 on the midpoints of a 0.01 grid
    // over [1,6], which never lands on the rect's jumps.
    const Kernel sig = sigmoid_window(i16, Direction::past, 1000.0);
    double sup = 0.0;
    for (int k = 0; k < 500; ++k)
    {
        const double t = 1.0 + 0.01 * k + 0.005;
        sup = std::max(sup, std::abs(sig.eval(t) - 0.2));
    }
    if (!(sup < 0.05))
        return fail("sigmoid:1000 sup-distance " + format_number(sup));
    std::ostringstream d;
    d << "worst mass error " << worst << ", sigmoid:1000 sup-distance " << sup;
    return {true, d.str()};
}

// 7 -------------------------------------------------------------------------

Outcome singular_shifts()
{
    Rng rng(77);
    GenOptions gen;
    gen.max_depth = 3;
    gen.pnf = true;
    gen.boolean_until_left = true;
    int checked = 0;
    long comparisons = 0;
    long exact = 0;
    double worst = 0.0;
    for (int k = 0; k < 200; ++k)
    {
        const Formula phi = random_formula(rng, gen);
        const int a = k % 6;
        const TimeInterval ia = TimeInterval::singular(a);

        const SignalBundle xd = random_discrete_bundle(rng, 24);
        const std::vector<double> vd = eval_quant_discrete(phi, xd).values;
        const std::vector<double> fd = eval_quant_discrete(Formula::finally(ia, phi), xd).values;
        const std::vector<double> od = eval_quant_discrete(Formula::once(ia, phi), xd).values;
        const std::vector<double> gd = eval_quant_discrete(Formula::globally(ia, phi), xd).values;
        const std::vector<double> hd = eval_quant_discrete(Formula::historically(ia, phi), xd).values;
        const auto n = static_cast<int>(vd.size());
        for (int i = 0; i < n; ++i)
        {
            const auto u = static_cast<std::size_t>(i);
            const double fut = i + a < n ? vd[static_cast<std::size_t>(i + a)] : 0.0;
            const double past = i - a >= 0 ? vd[static_cast<std::size_t>(i - a)] : 0.0;
            if (fd[u] != fut || od[u] != past)
                return fail("discrete shift of " + to_string(phi) + " by " + std::to_string(a));
            if ((i + a < n && gd[u] != fd[u]) || (i - a >= 0 && hd[u] != od[u]))
                return fail("discrete G/H vs F/O at " + std::to_string(i) + " for " + to_string(phi));
        }

        const SignalBundle xc = random_continuous_bundle(rng, 16);
        const double T = xc.domain_end();
        const PiecewisePolynomial vc = eval_quant_continuous(phi, xc);
        const PiecewisePolynomial fc = eval_quant_continuous(Formula::finally(ia, phi), xc);
        const PiecewisePolynomial oc = eval_quant_continuous(Formula::once(ia, phi), xc);
        const PiecewisePolynomial gc = eval_quant_continuous(Formula::globally(ia, phi), xc);
        const PiecewisePolynomial hc = eval_quant_continuous(Formula::historically(ia, phi), xc);
        // dyadic probes keep t + a and t - a exact
        std::vector<double> probes;
        for (double b : vc.breaks())
        {
            for (double t : {b - a, b + a, b - a + 0.03125, b + a + 0.03125})
            {
                if (t >= 0.0 && t < T)
                    probes.push_back(t);
            }
        }
        for (double t : sample_grid(T, 0.03125))
            probes.push_back(t);
        for (double t : probes)
        {
            const double fut = t + a < T ? vc(t + a) : 0.0;
            const double past = t - a >= 0.0 ? vc(t - a) : 0.0;
            std::vector<double> devs{std::abs(fc(t) - fut), std::abs(oc(t) - past)};
            if (t + a < T)
                devs.push_back(std::abs(gc(t) - fc(t)));
            if (t - a >= 0.0)
                devs.push_back(std::abs(hc(t) - oc(t)));
            for (double d : devs)
            {
                ++comparisons;
                exact += d == 0.0 ? 1 : 0;
                worst = std::max(worst, d);
            }
            if (worst > 1e-12)
                return fail("continuous shift of " + to_string(phi) + " by " + std::to_string(a) + " at " +
                            format_number(t) + " deviates by " + format_number(worst));
        }
        ++checked;
    }
    std::ostringstream d;
    d << checked << " formulas in each time kind; discrete exact; continuous exact at " << exact << " of "
      << comparisons << " comparisons, worst deviation " << worst
      << "; G/H compared with F/O wherever the shifted time lies in the domain";
    return {true, d.str()};
}

// 8 -------------------------------------------------------------------------

Outcome spike_rates()
{
    std::mt19937_64 rng(8);
    const double T = 2.0;
    const double width = 0.1;
    const double sigma = 0.025;
    std::poisson_distribution<int> count(40.0);
    std::uniform_real_distribution<double> when(0.0, T);
    double worst_mass = 0.0;
    for (int train = 0; train < 20; ++train)
    {
        std::vector<double> spikes(static_cast<std::size_t>(count(rng)));
        for (double& s : spikes)
            s = when(rng);
        std::sort(spikes.begin(), spikes.end());

        const PiecewisePolynomial rect = spike_rate(spikes, centered_rect(width), T);
        for (double t : sample_grid(T, 0.001))
        {
            const auto n = std::count_if(spikes.begin(), spikes.end(),
                                         [&](double s) { return std::abs(t - s) <= width / 2; });
            if (rect(t) != static_cast<double>(n) / width)
                return fail("sliding rate " + format_number(rect(t)) + " at " + format_number(t) + ", count " +
                            std::to_string(n));
        }

        std::vector<double> interior;
        for (double s : spikes)
        {
            if (s >= 3 * sigma && s <= T - 3 * sigma)
                interior.push_back(s);
        }
        const double step = 0.001;
        const PiecewisePolynomial g = spike_rate(interior, centered_gaussian(sigma), T, step);
        double mass = 0.0;
        const std::vector<double> ts = sample_grid(T, step);
        for (std::size_t k = 0; k + 1 < ts.size(); ++k)
            mass += 0.5 * (g(ts[k]) + g(ts[k + 1])) * (ts[k + 1] - ts[k]);
        mass += g(ts.back()) * (T - ts.back());
        const double n = static_cast<double>(interior.size());
        const double rel = n > 0 ? std::abs(mass - n) / n : mass;
        worst_mass = std::max(worst_mass, rel);
        if (rel > 0.01)
            return fail("Gaussian mass " + format_number(mass) + " for " + format_number(n) + " interior spikes");
    }
    std::ostringstream d;
    d << "20 trains; worst relative Gaussian mass error " << worst_mass;
    return {true, d.str()};
}

// 9 -------------------------------------------------------------------------

// sup{s >= t : f = 1 on (t, s) within [0, T)}, infinite when the run reaches T.
double hold_until(const PiecewisePolynomial& f, double t)
{
    std::size_t k = f.segment_of(t);
    if (f.pieces()[k](t - f.breaks()[k]) == 0.0)
        return t;
    for (++k; k < f.segments(); ++k)
    {
        const double b = f.breaks()[k];
        if (f.point_values()[k] == 0.0)
            return b;
        if (f.pieces()[k](0.0) == 0.0)
            return b;
    }
    return std::numeric_limits<double>::infinity();
}

// inf{s <= t : f = 1 on (s, t) within [0, T)}, minus infinity when the run reaches 0.
double hold_since(const PiecewisePolynomial& f, double t)
{
    std::size_t k = f.segment_of(t);
    if (t > f.breaks()[k])
    {
        if (f.pieces()[k](t - f.breaks()[k]) == 0.0)
            return t;
    }
    else if (k == 0)
    {
        return -std::numeric_limits<double>::infinity();
    }
    else
    {
        --k;
        const double end = f.segment_end(k);
        if (f.pieces()[k](end - f.breaks()[k]) == 0.0)
            return end;
    }
    for (;; --k)
    {
        const double b = f.breaks()[k];
        if (b > 0.0 && f.point_values()[k] == 0.0)
            return b;
        if (k == 0)
            return -std::numeric_limits<double>::infinity();
        const double prev_end = f.segment_end(k - 1);
        if (f.pieces()[k - 1](prev_end - f.breaks()[k - 1]) == 0.0)
            return prev_end;
    }
}

// Gauss-Kronrod on each smooth stretch of g between the cuts. A jump inside
// one stretch can fool the embedded error estimate, so every place where
// the operand has a breakpoint must be a cut.
double integrate(const std::function<double(double)>& g, double lo, double hi, std::vector<double> cuts)
{
    if (!(hi > lo))
        return 0.0;
    cuts.push_back(lo);
    cuts.push_back(hi);
    std::erase_if(cuts, [&](double c) { return c < lo || c > hi; });
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    {
        if (cuts[k + 1] > cuts[k])
            total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, cuts[k], cuts[k + 1], 15,
                                                                                   1e-13);
    }
    return total;
}

std::vector<double> mapped_breaks(const PiecewisePolynomial& v, double offset, double sign)
{
    std::vector<double> out;
    for (double b : v.breaks())
        out.push_back(sign * (b - offset));
    return out;
}

// The defining integral of the top-level operator at t, with the operands'
// values taken from their own evaluation.
struct DefiningIntegral
{
    DefiningIntegral(const Formula& f, const SignalBundle& x) : f(f), T(x.domain_end())
    {
        if (f.op == Op::finally || f.op == Op::once)
        {
            psi = eval_quant_continuous(f.arg(), x);
        }
        else
        {
            phi = eval_quant_continuous(f.arg(0), x);
            psi = eval_quant_continuous(f.arg(1), x);
        }
    }

    double operator()(double t) const
    {
        const double a = f.interval.lo;
        const double b = f.interval.hi;
        const double scale = 1.0 / (b - a);
        auto at = [&](double j) { return psi(j); };
        switch (f.op)
        {
        case Op::finally:
            return scale * integrate(at, std::max(0.0, t + a), std::min(T, t + b), psi.breaks());
        case Op::once:
            return scale * integrate(at, std::max(0.0, t - b), std::min(T, t - a), psi.breaks());
        case Op::until: {
            const double reach = hold_until(phi, t) - t;
            auto g = [&](double j) { return psi(t + j); };
            return scale * integrate(g, a, std::min({b, reach, T - t}), mapped_breaks(psi, t, 1.0));
        }
        case Op::since: {
            const double reach = t - hold_since(phi, t);
            auto g = [&](double j) { return psi(t - j); };
            return scale * integrate(g, a, std::min({b, reach, t}), mapped_breaks(psi, t, -1.0));
        }
        default:
            throw std::logic_error("not an integral operator");
        }
    }

    const Formula& f;
    double T;
    PiecewisePolynomial phi;
    PiecewisePolynomial psi;
};

Outcome rect_exactness()
{
    Rng rng(99);
    GenOptions gen;
    gen.max_depth = 3;
    gen.pnf = true;
    gen.boolean_until_left = true;
    int instances = 0;
    int linear = 0;
    double worst = 0.0;
    while (instances < 120)
    {
        const Formula f = random_formula(rng, gen);
        const bool integral = f.op == Op::finally || f.op == Op::once || f.op == Op::until || f.op == Op::since;
        if (!integral || f.interval.is_singular())
            continue;
        const SignalBundle x = random_continuous_bundle(rng, 16);
        const double T = x.domain_end();
        const PiecewisePolynomial v = eval_quant_continuous(f, x);
        const DefiningIntegral defining(f, x);
        const bool is_linear = v.max_degree() <= 1;
        const PiecewiseLinear knots = v.to_piecewise_linear();
        std::uniform_real_distribution<double> when(0.0, T);
        for (int q = 0; q < 50; ++q)
        {
            const double t = when(rng);
            const double want = defining(t);
            double err = std::abs(v(t) - want);
            if (is_linear)
                err = std::max(err, std::abs(value_at(knots, t) - want));
            worst = std::max(worst, err);
            if (err > 1e-6)
                return fail(to_string(f) + " over " + to_json(x) + " at " + format_number(t) + ": " +
                            format_number(v(t)) + " vs " + format_number(want));
        }
        ++instances;
        linear += is_linear ? 1 : 0;
    }
    std::ostringstream d;
    d << instances << " instances x 50 points, worst error " << worst << "; " << linear
      << " piecewise-linear outputs also checked through their knots";
    return {true, d.str()};
}

} // namespace

int main()
{
    report(1, "golden once trace O[1,4] p", golden_trace);
    report(2, "discrete qualitative = classical", [] {
        const auto start = Clock::now();
        Rng rng(1);
        return time_limit(suite_outcome(check_discrete_qual(rng, 500)), start, 30.0);
    });
    report(3, "continuous qualitative = classical", [] {
        const auto start = Clock::now();
        Rng rng(2);
        return time_limit(suite_outcome(check_continuous_qual(rng, 300, 100, 0.01)), start, 60.0);
    });
    report(4, "discrete quantitative > 0 iff satisfied", [] {
        Rng rng(3);
        return suite_outcome(check_discrete_quant(rng, 500));
    });
    report(5, "continuous quantitative > 0 implies satisfied", continuous_quant_suite);
    report(6, "kernel normalization", kernel_masses);
    report(7, "singular intervals are shifts", singular_shifts);
    report(8, "spike-count rates", spike_rates);
    report(9, "continuous rect values match quadrature", rect_exactness);
    return failures;
}
