#pragma once

#include "tlf/formula.hpp"
#include "tlf/kernel.hpp"
#include "tlf/piecewise.hpp"
#include "tlf/signal.hpp"

#include <vector>

namespace tlf
{

struct QuantOptions
{
    KernelSpec kernel;
    // Grid for smooth-kernel results in continuous time.
    double sample_step = 0.01;
    // Test hook: take the G/H minimum over the whole window, reading times
    // outside the domain as 0, instead of over its part inside the domain.
    bool unclipped_globally = false;
};

// Values in [0,1] over {0..T}. f must be in positive normal form (not_pnf
// otherwise); smooth kernels are accepted under F and O only.
[[nodiscard]] QuantTraceD eval_quant_discrete(const Formula& f, const SignalBundle& x, const QuantOptions& opt = {});

// Exact piecewise-polynomial result for rect windows; smooth kernels give a
// piecewise-linear interpolation on the sample grid. U and S with a
// non-singular interval need a Boolean-valued left operand
// (unsupported_operand otherwise).
[[nodiscard]] PiecewisePolynomial eval_quant_continuous(const Formula& f, const SignalBundle& x,
                                                        const QuantOptions& opt = {});

// Rate of a spike train: sum over spikes s of w(t - s). Centered rect windows
// give the exact piecewise-constant count / width; other windows are sampled
// every `step`.
[[nodiscard]] PiecewisePolynomial spike_rate(const std::vector<double>& spikes, const Kernel& window, double T,
                                             double step = 0.01);

// Count of spikes per bin [k w, (k+1) w), divided by w.
[[nodiscard]] PiecewisePolynomial binned_rate(const std::vector<double>& spikes, double width, double T);

} // namespace tlf
