#include "tlf/io.hpp"

#include "tlf/errors.hpp"
#include "tlf/format.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace tlf
{

namespace
{

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Integral values become JSON integers so the text round-trips unchanged.
ordered_json number(double v)
{
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9.0e15)
        return static_cast<long long>(v);
    return v;
}

double as_number(const json& j, const std::string& what)
{
    if (!j.is_number())
        throw parse_error(what + " must be a number");
    return j.get<double>();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, sep))
    {
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' '))
            cell.pop_back();
        while (!cell.empty() && cell.front() == ' ')
            cell.erase(cell.begin());
        out.push_back(cell);
    }
    return out;
}

} // namespace

SignalBundle parse_bundle_json(const std::string& text)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("time") || !doc.contains("T") || !doc.contains("props"))
        throw parse_error("trace JSON needs the keys \"time\", \"T\" and \"props\"");
    if (!doc["time"].is_string())
        throw parse_error("\"time\" must be \"discrete\" or \"continuous\"");
    const std::string kind = doc["time"].get<std::string>();
    const double T = as_number(doc["T"], "\"T\"");
    if (!doc["props"].is_object())
        throw parse_error("\"props\" must be an object");

    if (kind == "discrete")
    {
        if (T < 0.0 || T != std::floor(T))
            throw domain_error("discrete T must be a natural number");
        SignalBundle bundle(TimeKind::discrete, T);
        for (const auto& [name, values] : doc["props"].items())
        {
            if (!values.is_array())
                throw parse_error("proposition '" + name + "' must be a list of 0/1 values");
            std::vector<std::uint8_t> bits;
            for (const json& v : values)
            {
                const double d = as_number(v, "value of '" + name + "'");
                if (d != 0.0 && d != 1.0)
                    throw domain_error("proposition '" + name + "' has a non-Boolean value");
                bits.push_back(d == 1.0 ? 1 : 0);
            }
            if (bits.size() != static_cast<std::size_t>(T) + 1)
                throw domain_error("proposition '" + name + "' needs T + 1 = " + format_number(T + 1) + " values");
            bundle.add(name, DiscreteTrace(name, std::move(bits)));
        }
        return bundle;
    }
    if (kind == "continuous")
    {
        if (!(T > 0.0) || !std::isfinite(T))
            throw domain_error("continuous T must be positive");
        SignalBundle bundle(TimeKind::continuous, T);
        for (const auto& [name, pairs] : doc["props"].items())
        {
            if (!pairs.is_array())
                throw parse_error("proposition '" + name + "' must be a list of [lo,hi] pairs");
            std::vector<Interval> intervals;
            for (const json& p : pairs)
            {
                if (!p.is_array() || p.size() != 2)
                    throw parse_error("proposition '" + name + "' must be a list of [lo,hi] pairs");
                intervals.push_back({as_number(p[0], "interval bound"), as_number(p[1], "interval bound")});
            }
            bundle.add(name, IntervalSet(std::move(intervals), T));
        }
        return bundle;
    }
    throw parse_error("\"time\" must be \"discrete\" or \"continuous\"");
}

std::string to_json(const SignalBundle& bundle)
{
    ordered_json doc;
    const bool discrete = bundle.time_kind() == TimeKind::discrete;
    doc["time"] = discrete ? "discrete" : "continuous";
    doc["T"] = number(bundle.domain_end());
    ordered_json props = ordered_json::object();
    for (const auto& [name, signal] : bundle.propositions())
    {
        ordered_json arr = ordered_json::array();
        if (const auto* d = std::get_if<DiscreteTrace>(&signal))
        {
            for (std::uint8_t v : d->values())
                arr.push_back(static_cast<int>(v));
        }
        else
        {
            for (const Interval& iv : std::get<IntervalSet>(signal).intervals())
                arr.push_back(ordered_json::array({number(iv.lo), number(iv.hi)}));
        }
        props[name] = std::move(arr);
    }
    doc["props"] = std::move(props);
    return doc.dump();
}

SignalBundle parse_bundle_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw parse_error("empty CSV");
    const std::vector<std::string> header = split(line, ',');
    if (header.empty() || header[0] != "t")
        throw parse_error("CSV header must start with 't'");
    std::vector<std::vector<std::uint8_t>> columns(header.size() - 1);
    long expected = 0;
    while (std::getline(in, line))
    {
        if (split(line, ',').empty() || line.find_first_not_of(" \r") == std::string::npos)
            continue;
        const std::vector<std::string> cells = split(line, ',');
        if (cells.size() != header.size())
            throw parse_error("CSV row " + std::to_string(expected) + " has " + std::to_string(cells.size()) +
                              " cells, expected " + std::to_string(header.size()));
        if (cells[0] != std::to_string(expected))
            throw parse_error("CSV rows must list t = 0, 1, 2, ... in order");
        for (std::size_t c = 1; c < cells.size(); ++c)
        {
            if (cells[c] != "0" && cells[c] != "1")
                throw domain_error("column '" + header[c] + "' has non-Boolean value '" + cells[c] + "'");
            columns[c - 1].push_back(cells[c] == "1" ? 1 : 0);
        }
        ++expected;
    }
    if (expected == 0)
        throw parse_error("CSV has no rows");
    SignalBundle bundle(TimeKind::discrete, static_cast<double>(expected - 1));
    for (std::size_t c = 0; c < columns.size(); ++c)
        bundle.add(header[c + 1], DiscreteTrace(header[c + 1], std::move(columns[c])));
    return bundle;
}

std::string to_csv(const SignalBundle& bundle)
{
    if (bundle.time_kind() != TimeKind::discrete)
        throw domain_mismatch("CSV traces are discrete only");
    std::string out = "t";
    for (const auto& [name, _] : bundle.propositions())
        out += "," + name;
    out += "\n";
    for (int t = 0; t <= bundle.t_end(); ++t)
    {
        out += std::to_string(t);
        for (const auto& [name, signal] : bundle.propositions())
            out += std::get<DiscreteTrace>(signal)[t] ? ",1" : ",0";
        out += "\n";
    }
    return out;
}

SignalBundle load_bundle(const std::string& path, TraceFormat format)
{
    const std::string text = read_file(path);
    return format == TraceFormat::csv ? parse_bundle_csv(text) : parse_bundle_json(text);
}

SignalBundle load_bundle(const std::string& path)
{
    const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    return load_bundle(path, csv ? TraceFormat::csv : TraceFormat::json);
}

std::string values_csv(const std::vector<double>& values)
{
    std::string out = "t,value\n";
    for (std::size_t t = 0; t < values.size(); ++t)
        out += std::to_string(t) + "," + format_number(values[t]) + "\n";
    return out;
}

std::string knots_csv(const PiecewiseLinear& f)
{
    std::string out = "t,value\n";
    for (const Knot& k : f.knots())
        out += format_number(k.t) + "," + format_number(k.v) + "\n";
    return out;
}

std::string satisfaction_json(const SpanSet& set, double domain_end)
{
    ordered_json doc;
    doc["T"] = number(domain_end);
    ordered_json intervals = ordered_json::array();
    const IntervalSet cadlag = IntervalSet::from_spans(set, domain_end);
    for (const Interval& iv : cadlag.intervals())
        intervals.push_back(ordered_json::array({number(iv.lo), number(iv.hi)}));
    doc["intervals"] = std::move(intervals);
    ordered_json isolated = ordered_json::array();
    for (double t : set.isolated_points())
        isolated.push_back(number(t));
    doc["isolated_points"] = std::move(isolated);
    ordered_json excluded = ordered_json::array();
    for (double t : set.excluded_points())
        excluded.push_back(number(t));
    doc["excluded_points"] = std::move(excluded);
    return doc.dump() + "\n";
}

} // namespace tlf
