#pragma once

#include "tlf/signal.hpp"
#include "tlf/span_set.hpp"

#include <vector>

namespace tlf
{

// Dense polynomial c[0] + c[1] u + c[2] u^2 + ... in a local coordinate u.
// Trailing zero coefficients are dropped, so the zero polynomial has no
// coefficients and exact zeros survive every operation that keeps them zero.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);
    static Polynomial constant(double c) { return Polynomial({c}); }

    [[nodiscard]] const std::vector<double>& coeffs() const { return _c; }
    [[nodiscard]] int degree() const { return static_cast<int>(_c.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return _c.empty(); }
    [[nodiscard]] bool is_constant() const { return _c.size() <= 1; }
    [[nodiscard]] double operator()(double u) const;

    [[nodiscard]] Polynomial derivative() const;
    // Antiderivative vanishing at u = 0.
    [[nodiscard]] Polynomial antiderivative() const;
    // q(u) = p(u + h).
    [[nodiscard]] Polynomial shifted(double h) const;
    // Real roots strictly inside (lo, hi), ascending.
    [[nodiscard]] std::vector<double> roots_in(double lo, double hi) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double s, const Polynomial& p);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<double> _c;
};

// Real function on [0, domain_end) made of polynomial pieces on the open
// gaps between breakpoints plus an explicit value at every breakpoint. This
// represents jumps, right- or left-continuity and isolated point values
// exactly. Piece k lives on (breaks[k], breaks[k+1]) (the last one ends at
// domain_end) and is expressed in u = t - breaks[k]. breaks[0] is always 0.
class PiecewisePolynomial
{
public:
    PiecewisePolynomial() = default;
    // The constant c on [0, domain_end).
    PiecewisePolynomial(double c, double domain_end);
    PiecewisePolynomial(std::vector<double> breaks, std::vector<double> point_values,
                        std::vector<Polynomial> pieces, double domain_end);

    // Indicator of a set, clipped to [0, domain_end).
    static PiecewisePolynomial indicator(const SpanSet& set, double domain_end);
    // Linear interpolation through samples (ts strictly increasing, ts[0] = 0).
    static PiecewisePolynomial from_samples(const std::vector<double>& ts, const std::vector<double>& vs,
                                            double domain_end);

    [[nodiscard]] double domain_end() const { return _domain_end; }
    [[nodiscard]] const std::vector<double>& breaks() const { return _breaks; }
    [[nodiscard]] const std::vector<double>& point_values() const { return _point_values; }
    [[nodiscard]] const std::vector<Polynomial>& pieces() const { return _pieces; }
    [[nodiscard]] std::size_t segments() const { return _breaks.size(); }
    [[nodiscard]] double segment_end(std::size_t k) const;

    // Throws out_of_domain outside [0, domain_end).
    [[nodiscard]] double operator()(double t) const;
    [[nodiscard]] double left_limit(double t) const;
    [[nodiscard]] double right_limit(double t) const;
    // Index k with breaks[k] <= t < segment_end(k).
    [[nodiscard]] std::size_t segment_of(double t) const;
    // Piece covering the open segment that starts at or contains t, re-expressed around t.
    [[nodiscard]] Polynomial piece_around(double t) const;

    // True when every piece is constant and every value is 0 or 1.
    [[nodiscard]] bool is_boolean() const;
    // {t : f(t) = 1} for a Boolean function (throws unsupported_operand otherwise).
    [[nodiscard]] SpanSet ones() const;
    // {t : f(t) > threshold}, exact for Boolean or piecewise constant functions;
    // polynomial pieces are resolved via their roots.
    [[nodiscard]] SpanSet above(double threshold) const;

    [[nodiscard]] int max_degree() const;
    // Knots of the exact function when every piece is at most linear; higher
    // degree pieces are additionally sampled every sample_step.
    [[nodiscard]] PiecewiseLinear to_piecewise_linear(double sample_step = 0.01) const;

    // Merge neighbouring constant pieces that agree with the shared point value.
    [[nodiscard]] PiecewisePolynomial simplified() const;

    friend bool operator==(const PiecewisePolynomial&, const PiecewisePolynomial&) = default;

private:
    std::vector<double> _breaks;
    std::vector<double> _point_values;
    std::vector<Polynomial> _pieces;
    double _domain_end = 0.0;
};

[[nodiscard]] PiecewisePolynomial one_minus(const PiecewisePolynomial& f);
// Domains must agree; throw domain_mismatch otherwise.
[[nodiscard]] PiecewisePolynomial pointwise_min(const PiecewisePolynomial& f, const PiecewisePolynomial& g);
[[nodiscard]] PiecewisePolynomial pointwise_max(const PiecewisePolynomial& f, const PiecewisePolynomial& g);
[[nodiscard]] PiecewisePolynomial product(const PiecewisePolynomial& f, const PiecewisePolynomial& g);

// g(t) = f(t + offset) where t + offset lies in the domain, fill elsewhere.
[[nodiscard]] PiecewisePolynomial shift(const PiecewisePolynomial& f, double offset, double fill);

// g(t) = scale * integral of f over [t + lo, t + hi] intersected with the domain.
[[nodiscard]] PiecewisePolynomial window_integral(const PiecewisePolynomial& f, double lo, double hi, double scale);

// g(t) = inf of f over (t + window) intersected with the domain; empty_value
// where that set is empty. The window's ends may be open or closed.
[[nodiscard]] PiecewisePolynomial window_inf(const PiecewisePolynomial& f, const Span& window, double empty_value);

// Pointwise infimum of f over an arbitrary span, clipped to the domain.
[[nodiscard]] double inf_over(const PiecewisePolynomial& f, const Span& span, double empty_value);

// g(t) = scale * integral of f over [t + a, min(t + b, r)] where [l, r) is the
// extent of the component of `hold` (extended past the domain end) such that
// (t, t + eps) lies inside it; zero when no such component exists. This is
// the measure form of a bounded until with a Boolean left operand.
[[nodiscard]] PiecewisePolynomial reach_integral_future(const SpanSet& hold, const PiecewisePolynomial& f, double a,
                                                        double b, double scale);
// Mirror image: integral of f over [max(t - b, l), t - a] for t in (l, r].
[[nodiscard]] PiecewisePolynomial reach_integral_past(const SpanSet& hold, const PiecewisePolynomial& f, double a,
                                                      double b, double scale);

} // namespace tlf
