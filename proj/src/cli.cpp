#include "tlf/cli.hpp"

#include "tlf/check.hpp"
#include "tlf/errors.hpp"
#include "tlf/format.hpp"
#include "tlf/io.hpp"
#include "tlf/kernel.hpp"
#include "tlf/oracle.hpp"
#include "tlf/plot.hpp"
#include "tlf/qual.hpp"
#include "tlf/quant.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>

namespace tlf
{

namespace
{

void emit(const std::string& path, std::ostream& out, const std::string& text)
{
    if (path.empty())
    {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw parse_error("cannot write '" + path + "'");
    file << text;
}

std::string semantics_name(Semantics s)
{
    switch (s)
    {
    case Semantics::quant:
        return "quant";
    case Semantics::classical:
        return "classical";
    default:
        return "qual";
    }
}

// Result of one evaluation in whichever representation the semantics yields.
struct Result
{
    TimeKind kind = TimeKind::discrete;
    double domain_end = 0.0;
    std::vector<double> values; // discrete
    SpanSet set;                // continuous qual / classical
    std::optional<PiecewisePolynomial> function; // continuous quant
};

Result evaluate(const RunConfig& cfg, const SignalBundle& x)
{
    Formula f = parse(cfg.formula);
    const KernelSpec kernel = KernelSpec::parse(cfg.kernel);
    Result r;
    r.kind = x.time_kind();
    r.domain_end = x.domain_end();
    const bool discrete = x.time_kind() == TimeKind::discrete;
    switch (cfg.semantics)
    {
    case Semantics::classical:
        if (discrete)
        {
            for (bool b : oracle_discrete_trace(f, x))
                r.values.push_back(b ? 1.0 : 0.0);
        }
        else
        {
            r.set = oracle_continuous(f, x);
        }
        break;
    case Semantics::qual:
        if (discrete)
            r.values = eval_qual_discrete(f, x, kernel);
        else
            r.set = eval_qual_continuous(f, x, kernel);
        break;
    case Semantics::quant: {
        f = to_pnf(f);
        QuantOptions opt;
        opt.kernel = kernel;
        opt.sample_step = cfg.sample_step;
        opt.unclipped_globally = cfg.unclipped_globally;
        if (discrete)
            r.values = eval_quant_discrete(f, x, opt).values;
        else
            r.function = eval_quant_continuous(f, x, opt);
        break;
    }
    }
    return r;
}

std::vector<Panel> input_panels(const SignalBundle& x)
{
    std::vector<Panel> panels;
    for (const auto& [name, signal] : x.propositions())
    {
        if (const auto* d = std::get_if<DiscreteTrace>(&signal))
        {
            std::vector<double> v;
            for (std::uint8_t b : d->values())
                v.push_back(b);
            panels.push_back(step_panel(name, v));
        }
        else
        {
            panels.push_back(set_panel(name, std::get<IntervalSet>(signal).to_spans(), x.domain_end()));
        }
    }
    return panels;
}

std::string plot_text(const RunConfig& cfg, const SignalBundle& x, const Result& r)
{
    std::vector<Panel> panels = input_panels(x);
    const std::string label = semantics_name(cfg.semantics) + ": " + cfg.formula;
    if (r.kind == TimeKind::discrete)
        panels.push_back(step_panel(label, r.values));
    else if (r.function)
        panels.push_back(function_panel(label, *r.function));
    else
        panels.push_back(set_panel(label, r.set, r.domain_end));
    return render_svg(panels, cfg.formula + " (" + semantics_name(cfg.semantics) + ", " + cfg.kernel + ")");
}

std::string sampled_csv(const PiecewisePolynomial& f, double step)
{
    std::string out = "t,value\n";
    for (double t : sample_grid(f.domain_end(), step))
        out += format_number(t) + "," + format_number(f(t)) + "\n";
    return out;
}

std::string result_text(const RunConfig& cfg, const SignalBundle& x, const Result& r)
{
    const bool continuous_set = r.kind == TimeKind::continuous && !r.function;
    const OutputFormat fmt = cfg.format.value_or(continuous_set ? OutputFormat::json : OutputFormat::csv);
    if (fmt == OutputFormat::svg)
        return plot_text(cfg, x, r);
    if (r.kind == TimeKind::discrete)
    {
        if (fmt == OutputFormat::csv)
            return values_csv(r.values);
        std::string out = "{\"T\":" + format_number(r.domain_end) + ",\"values\":[";
        for (std::size_t i = 0; i < r.values.size(); ++i)
            out += (i ? "," : "") + format_number(r.values[i]);
        return out + "]}\n";
    }
    if (r.function)
    {
        if (cfg.sample)
            return sampled_csv(*r.function, *cfg.sample);
        const PiecewiseLinear knots = r.function->to_piecewise_linear(cfg.sample_step);
        if (fmt == OutputFormat::csv)
            return knots_csv(knots);
        std::string out = "{\"T\":" + format_number(r.domain_end) + ",\"knots\":[";
        for (std::size_t i = 0; i < knots.knots().size(); ++i)
        {
            const Knot& k = knots.knots()[i];
            out += std::string(i ? "," : "") + "[" + format_number(k.t) + "," + format_number(k.v) + "]";
        }
        return out + "]}\n";
    }
    if (fmt == OutputFormat::csv)
    {
        std::string out = "lo,hi\n";
        const IntervalSet cadlag = IntervalSet::from_spans(r.set, r.domain_end);
        for (const Interval& iv : cadlag.intervals())
            out += format_number(iv.lo) + "," + format_number(iv.hi) + "\n";
        return out;
    }
    return satisfaction_json(r.set, r.domain_end);
}

std::vector<double> poisson_train(std::mt19937_64& rng, int n, double duration)
{
    // n arrivals of a homogeneous Poisson process, conditioned on the count,
    // are n sorted uniform times.
    std::uniform_real_distribution<double> u(0.0, duration);
    std::vector<double> spikes(static_cast<std::size_t>(std::max(n, 0)));
    for (double& s : spikes)
        s = u(rng);
    std::sort(spikes.begin(), spikes.end());
    return spikes;
}

} // namespace

int cmd_eval(const RunConfig& cfg, std::ostream& out)
{
    const SignalBundle x = load_bundle(cfg.input);
    const Result r = evaluate(cfg, x);
    emit(cfg.output, out, result_text(cfg, x, r));
    return exit_ok;
}

int cmd_plot(const RunConfig& cfg, std::ostream& out)
{
    const SignalBundle x = load_bundle(cfg.input);
    const Result r = evaluate(cfg, x);
    emit(cfg.output, out, plot_text(cfg, x, r));
    return exit_ok;
}

int cmd_spike_demo(const RunConfig& cfg, std::ostream& out)
{
    std::mt19937_64 rng(cfg.seed);
    const std::vector<double> spikes = poisson_train(rng, cfg.spikes, cfg.duration);
    const double T = cfg.duration;
    const PiecewisePolynomial binned = binned_rate(spikes, cfg.window, T);
    const PiecewisePolynomial sliding = spike_rate(spikes, centered_rect(cfg.window), T);
    const PiecewisePolynomial gauss = spike_rate(spikes, centered_gaussian(cfg.sigma), T, cfg.sample_step);

    std::string csv = "t,binned,sliding,gaussian\n";
    for (double t : sample_grid(T, cfg.sample_step))
        csv += format_number(t) + "," + format_number(binned(t)) + "," + format_number(sliding(t)) + "," +
               format_number(gauss(t)) + "\n";

    std::vector<Panel> panels;
    Panel raster{"spikes", {}, 1.0};
    raster.points.push_back({0.0, 0.0});
    for (double s : spikes)
    {
        raster.points.push_back({s, 0.0});
        raster.points.push_back({s, 1.0});
        raster.points.push_back({s, 0.0});
    }
    raster.points.push_back({T, 0.0});
    panels.push_back(std::move(raster));
    panels.push_back(function_panel("binned rate, width " + format_number(cfg.window), binned));
    panels.push_back(function_panel("sliding rect rate, width " + format_number(cfg.window), sliding));
    panels.push_back(function_panel("Gaussian rate, sigma " + format_number(cfg.sigma), gauss));
    const std::string svg = render_svg(panels, "spike-count rate (" + std::to_string(cfg.spikes) + " spikes)");

    if (cfg.output.empty())
    {
        out << csv;
    }
    else
    {
        emit(cfg.output + ".csv", out, csv);
        emit(cfg.output + ".svg", out, svg);
    }
    return exit_ok;
}

int cmd_check(const RunConfig& cfg, std::ostream& out)
{
    QuantOptions opt;
    opt.unclipped_globally = cfg.unclipped_globally;
    const int n = std::max(cfg.cases, 0);
    std::vector<SuiteResult> results;
    {
        Rng rng(cfg.seed);
        results.push_back(check_discrete_qual(rng, n));
    }
    {
        Rng rng(cfg.seed + 1);
        results.push_back(check_continuous_qual(rng, n, std::min(n, 100)));
    }
    {
        Rng rng(cfg.seed + 2);
        results.push_back(check_discrete_quant(rng, n, opt));
    }
    {
        Rng rng(cfg.seed + 3);
        results.push_back(check_continuous_quant(rng, n, opt));
    }
    bool ok = true;
    for (const SuiteResult& r : results)
    {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures
            << " violations\n";
        if (!r.first.empty())
            out << describe(r.first.front());
        ok = ok && r.passed();
    }
    return ok ? exit_ok : exit_violation;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try
    {
        if (cfg.subcommand == "eval")
            return cmd_eval(cfg, out);
        if (cfg.subcommand == "plot")
            return cmd_plot(cfg, out);
        if (cfg.subcommand == "spike-demo")
            return cmd_spike_demo(cfg, out);
        if (cfg.subcommand == "check")
            return cmd_check(cfg, out);
        err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
        return exit_input;
    }
    catch (const semantics_error& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_semantics;
    }
    catch (const error& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
}

} // namespace tlf
