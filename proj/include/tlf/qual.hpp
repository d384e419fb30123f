#pragma once

#include "tlf/formula.hpp"
#include "tlf/kernel.hpp"
#include "tlf/signal.hpp"
#include "tlf/span_set.hpp"

#include <vector>

namespace tlf
{

// {0,1} trace over {0..T} by max-min convolution with unnormalized windows.
// Throws kernel_shape_error for smooth kernels and open_interval_unsupported.
[[nodiscard]] std::vector<double> eval_qual_discrete(const Formula& f, const SignalBundle& x,
                                                     const KernelSpec& kernel = {});

// Satisfaction set within [0,T) from sup-min convolution on interval
// endpoints. Isolated points and excluded left ends are reported by the
// returned set's side lists.
[[nodiscard]] SpanSet eval_qual_continuous(const Formula& f, const SignalBundle& x, const KernelSpec& kernel = {});

} // namespace tlf
