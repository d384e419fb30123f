#pragma once

#include "tlf/formula.hpp"
#include "tlf/quant.hpp"
#include "tlf/signal.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace tlf
{

using Rng = std::mt19937_64;

struct GenOptions
{
    int max_depth = 4;
    int max_bound = 8;
    // Positive normal form only.
    bool pnf = false;
    // Left operands of non-singular U/S drawn from a fragment whose
    // continuous quantitative value is Boolean.
    bool boolean_until_left = false;
    std::vector<std::string> props{"p", "q"};
};

[[nodiscard]] Formula random_formula(Rng& rng, const GenOptions& opt = {});
// T uniform in [1, max_t]; each value true with probability 0.4.
[[nodiscard]] SignalBundle random_discrete_bundle(Rng& rng, int max_t = 32,
                                                  const std::vector<std::string>& props = {"p", "q"});
// Integer T in [1, max_t]; per proposition up to max_segments disjoint,
// non-touching intervals with endpoints on a 0.25 grid.
[[nodiscard]] SignalBundle random_continuous_bundle(Rng& rng, int max_t = 32, int max_segments = 8,
                                                    const std::vector<std::string>& props = {"p", "q"});

struct Counterexample
{
    Formula formula;
    SignalBundle signal;
    double time = 0.0;
    std::string detail;
};

struct SuiteResult
{
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<Counterexample> first; // shrunk, at most one

    [[nodiscard]] bool passed() const { return failures == 0; }
};

// Each suite draws `cases` instances from rng and compares against the
// classical oracle. The first failing instance is shrunk by replacing the
// formula with failing subformulas and dropping true samples or segments.
[[nodiscard]] SuiteResult check_discrete_qual(Rng& rng, int cases);
[[nodiscard]] SuiteResult check_continuous_qual(Rng& rng, int cases, int sampled_cases = 100, double step = 0.01);
[[nodiscard]] SuiteResult check_discrete_quant(Rng& rng, int cases, const QuantOptions& opt = {});
[[nodiscard]] SuiteResult check_continuous_quant(Rng& rng, int cases, const QuantOptions& opt = {});

[[nodiscard]] std::string describe(const Counterexample& c);

} // namespace tlf
