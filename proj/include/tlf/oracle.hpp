#pragma once

#include "tlf/formula.hpp"
#include "tlf/signal.hpp"
#include "tlf/span_set.hpp"

#include <vector>

namespace tlf
{

// Classical satisfaction at time i, by enumerating the quantifiers over
// (i +- I) intersected with {0..T}.
[[nodiscard]] bool oracle_discrete(const Formula& f, const SignalBundle& x, int i);
[[nodiscard]] std::vector<bool> oracle_discrete_trace(const Formula& f, const SignalBundle& x);

// Exact classical satisfaction set within [0,T). Isolated points and
// excluded left ends are kept; see SpanSet::isolated_points and
// SpanSet::excluded_points for the cadlag side lists.
[[nodiscard]] SpanSet oracle_continuous(const Formula& f, const SignalBundle& x);

// Grid times k * step inside [0,T). When 1/step is an integer n the grid is
// computed as k / n so that it hits dyadic endpoints exactly.
[[nodiscard]] std::vector<double> sample_grid(double domain_end, double step);

// Satisfaction of the top-level clause at grid times, decided by interval
// queries on the exact satisfaction sets of the immediate subformulas.
[[nodiscard]] std::vector<bool> sample_oracle_continuous(const Formula& f, const SignalBundle& x, double step);

} // namespace tlf
