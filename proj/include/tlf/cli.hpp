#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace tlf
{

enum class Semantics
{
    qual,
    quant,
    classical
};

enum class OutputFormat
{
    csv,
    json,
    svg
};

struct RunConfig
{
    std::string subcommand;
    std::string formula;
    std::string input;
    Semantics semantics = Semantics::qual;
    std::string kernel = "rect";
    // Grid for smooth kernels in continuous time.
    double sample_step = 0.01;
    // Forces grid output of continuous quantitative results.
    std::optional<double> sample;
    // Empty: write to the output stream.
    std::string output;
    std::optional<OutputFormat> format;

    // spike-demo
    int spikes = 40;
    double duration = 2.0;
    double window = 0.1;
    double sigma = 0.025;

    // spike-demo and check
    std::uint64_t seed = 1;
    int cases = 500;
    bool unclipped_globally = false;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_semantics = 3;

// Each command returns an exit code; library errors propagate.
int cmd_eval(const RunConfig& cfg, std::ostream& out);
int cmd_plot(const RunConfig& cfg, std::ostream& out);
int cmd_spike_demo(const RunConfig& cfg, std::ostream& out);
int cmd_check(const RunConfig& cfg, std::ostream& out);

// Dispatches on cfg.subcommand and maps input errors to 2 and semantics
// errors to 3, printing the message to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace tlf
