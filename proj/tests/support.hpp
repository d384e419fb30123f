#pragma once

#include "tlf/signal.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tlf::test
{

// Bits given as strings of '0'/'1', one character per time step.
inline SignalBundle discrete_bundle(const std::map<std::string, std::string>& props)
{
    SignalBundle x;
    bool first = true;
    for (const auto& [name, bits] : props)
    {
        if (first)
        {
            x = SignalBundle(TimeKind::discrete, static_cast<double>(bits.size()) - 1.0);
            first = false;
        }
        std::vector<std::uint8_t> v;
        for (char c : bits)
            v.push_back(c == '1' ? 1 : 0);
        x.add(name, DiscreteTrace(name, std::move(v)));
    }
    return x;
}

inline SignalBundle continuous_bundle(double T, const std::map<std::string, std::vector<Interval>>& props)
{
    SignalBundle x(TimeKind::continuous, T);
    for (const auto& [name, ivs] : props)
        x.add(name, IntervalSet(ivs, T));
    return x;
}

// p true exactly on {2..6} over {0..12}.
inline SignalBundle golden_signal()
{
    return discrete_bundle({{"p", "0011111000000"}});
}

} // namespace tlf::test
