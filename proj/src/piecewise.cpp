#include "tlf/piecewise.hpp"

#include "tlf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tlf
{

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<double> coeffs) : _c(std::move(coeffs))
{
    while (!_c.empty() && _c.back() == 0.0)
        _c.pop_back();
}

double Polynomial::operator()(double u) const
{
    double acc = 0.0;
    for (auto it = _c.rbegin(); it != _c.rend(); ++it)
        acc = acc * u + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (_c.size() <= 1)
        return {};
    std::vector<double> d(_c.size() - 1);
    for (std::size_t i = 1; i < _c.size(); ++i)
        d[i - 1] = _c[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const
{
    if (_c.empty())
        return {};
    std::vector<double> a(_c.size() + 1, 0.0);
    for (std::size_t i = 0; i < _c.size(); ++i)
        a[i + 1] = _c[i] / static_cast<double>(i + 1);
    return Polynomial(std::move(a));
}

Polynomial Polynomial::shifted(double h) const
{
    if (h == 0.0 || _c.size() <= 1)
        return *this;
    // Repeated synthetic division (Taylor shift).
    std::vector<double> c = _c;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = n - 1; j > i; --j)
            c[j - 1] += h * c[j];
    }
    return Polynomial(std::move(c));
}

namespace
{

double bisect_root(const Polynomial& p, double lo, double hi)
{
    double flo = p(lo);
    for (int it = 0; it < 200 && lo < hi; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double fm = p(mid);
        if (fm == 0.0)
            return mid;
        if ((fm < 0.0) == (flo < 0.0))
        {
            lo = mid;
            flo = fm;
        }
        else
        {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<double> Polynomial::roots_in(double lo, double hi) const
{
    std::vector<double> roots;
    if (_c.size() <= 1 || !(lo < hi))
        return roots;
    if (_c.size() == 2)
    {
        const double r = -_c[0] / _c[1];
        if (lo < r && r < hi)
            roots.push_back(r);
        return roots;
    }
    // Split at critical points so p is monotone on each part.
    std::vector<double> cuts{lo};
    for (double c : derivative().roots_in(lo, hi))
        cuts.push_back(c);
    cuts.push_back(hi);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        const double fa = (*this)(a);
        const double fb = (*this)(b);
        if (i > 0 && fa == 0.0)
            roots.push_back(a);
        if (fa != 0.0 && fb != 0.0 && ((fa < 0.0) != (fb < 0.0)))
            roots.push_back(bisect_root(*this, a, b));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    std::erase_if(roots, [&](double r) { return !(lo < r && r < hi); });
    return roots;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<double> c(std::max(a._c.size(), b._c.size()), 0.0);
    for (std::size_t i = 0; i < a._c.size(); ++i)
        c[i] += a._c[i];
    for (std::size_t i = 0; i < b._c.size(); ++i)
        c[i] += b._c[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    return a + (-1.0) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a._c.empty() || b._c.empty())
        return {};
    std::vector<double> c(a._c.size() + b._c.size() - 1, 0.0);
    for (std::size_t i = 0; i < a._c.size(); ++i)
        for (std::size_t j = 0; j < b._c.size(); ++j)
            c[i + j] += a._c[i] * b._c[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& p)
{
    std::vector<double> c = p._c;
    for (double& x : c)
        x *= s;
    return Polynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// PiecewisePolynomial

PiecewisePolynomial::PiecewisePolynomial(double c, double domain_end)
    : _breaks{0.0}, _point_values{c}, _pieces{Polynomial::constant(c)}, _domain_end(domain_end)
{
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<double> breaks, std::vector<double> point_values,
                                         std::vector<Polynomial> pieces, double domain_end)
    : _breaks(std::move(breaks)), _point_values(std::move(point_values)), _pieces(std::move(pieces)),
      _domain_end(domain_end)
{
    if (_breaks.empty() || _breaks.front() != 0.0)
        throw domain_error("piecewise function must start with a breakpoint at 0");
    if (_breaks.size() != _point_values.size() || _breaks.size() != _pieces.size())
        throw domain_error("piecewise function has inconsistent sizes");
    for (std::size_t k = 1; k < _breaks.size(); ++k)
    {
        if (!(_breaks[k - 1] < _breaks[k]))
            throw domain_error("piecewise breakpoints must be strictly increasing");
    }
    if (!(_breaks.back() < domain_end))
        throw domain_error("piecewise breakpoints must lie inside the domain");
}

PiecewisePolynomial PiecewisePolynomial::indicator(const SpanSet& set, double domain_end)
{
    const SpanSet clipped = set.intersect(Span::right_open(0.0, domain_end));
    std::vector<double> breaks{0.0};
    for (const Span& s : clipped.spans())
    {
        breaks.push_back(s.lo);
        if (s.hi < domain_end)
            breaks.push_back(s.hi);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    std::vector<double> pvs;
    std::vector<Polynomial> pieces;
    for (std::size_t k = 0; k < breaks.size(); ++k)
    {
        const double end = k + 1 < breaks.size() ? breaks[k + 1] : domain_end;
        pvs.push_back(clipped.contains(breaks[k]) ? 1.0 : 0.0);
        pieces.push_back(Polynomial::constant(clipped.contains(0.5 * (breaks[k] + end)) ? 1.0 : 0.0));
    }
    return PiecewisePolynomial(std::move(breaks), std::move(pvs), std::move(pieces), domain_end);
}

PiecewisePolynomial PiecewisePolynomial::from_samples(const std::vector<double>& ts, const std::vector<double>& vs,
                                                      double domain_end)
{
    if (ts.empty() || ts.size() != vs.size())
        throw domain_error("sample lists must be non-empty and of equal length");
    std::vector<double> breaks;
    std::vector<double> pvs;
    std::vector<Polynomial> pieces;
    for (std::size_t k = 0; k < ts.size(); ++k)
    {
        if (ts[k] >= domain_end)
            break;
        breaks.push_back(ts[k]);
        pvs.push_back(vs[k]);
        if (k + 1 < ts.size())
            pieces.push_back(Polynomial({vs[k], (vs[k + 1] - vs[k]) / (ts[k + 1] - ts[k])}));
        else
            pieces.push_back(Polynomial::constant(vs[k]));
    }
    return PiecewisePolynomial(std::move(breaks), std::move(pvs), std::move(pieces), domain_end);
}

double PiecewisePolynomial::segment_end(std::size_t k) const
{
    return k + 1 < _breaks.size() ? _breaks[k + 1] : _domain_end;
}

std::size_t PiecewisePolynomial::segment_of(double t) const
{
    auto it = std::upper_bound(_breaks.begin(), _breaks.end(), t);
    if (it == _breaks.begin())
        return 0;
    return static_cast<std::size_t>(it - _breaks.begin()) - 1;
}

double PiecewisePolynomial::operator()(double t) const
{
    if (t < 0.0 || t >= _domain_end)
        throw out_of_domain("time " + std::to_string(t) + " outside [0," + std::to_string(_domain_end) + ")");
    const std::size_t k = segment_of(t);
    if (_breaks[k] == t)
        return _point_values[k];
    return _pieces[k](t - _breaks[k]);
}

double PiecewisePolynomial::left_limit(double t) const
{
    if (t <= 0.0 || t > _domain_end)
        throw out_of_domain("no left limit at " + std::to_string(t));
    auto it = std::lower_bound(_breaks.begin(), _breaks.end(), t);
    const std::size_t k = static_cast<std::size_t>(it - _breaks.begin()) - 1;
    return _pieces[k](t - _breaks[k]);
}

double PiecewisePolynomial::right_limit(double t) const
{
    if (t < 0.0 || t >= _domain_end)
        throw out_of_domain("no right limit at " + std::to_string(t));
    const std::size_t k = segment_of(t);
    return _pieces[k](t - _breaks[k]);
}

Polynomial PiecewisePolynomial::piece_around(double t) const
{
    const std::size_t k = segment_of(t);
    return _pieces[k].shifted(t - _breaks[k]);
}

bool PiecewisePolynomial::is_boolean() const
{
    auto boolean = [](double v) { return v == 0.0 || v == 1.0; };
    for (std::size_t k = 0; k < _breaks.size(); ++k)
    {
        if (!_pieces[k].is_constant() || !boolean(_pieces[k](0.0)) || !boolean(_point_values[k]))
            return false;
    }
    return true;
}

SpanSet PiecewisePolynomial::ones() const
{
    if (!is_boolean())
        throw unsupported_operand("expected a Boolean-valued signal");
    std::vector<Span> spans;
    for (std::size_t k = 0; k < _breaks.size(); ++k)
    {
        if (_point_values[k] == 1.0)
            spans.push_back(Span::point(_breaks[k]));
        if (_pieces[k](0.0) == 1.0)
            spans.push_back(Span::open(_breaks[k], segment_end(k)));
    }
    return SpanSet(std::move(spans));
}

SpanSet PiecewisePolynomial::above(double threshold) const
{
    std::vector<Span> spans;
    for (std::size_t k = 0; k < _breaks.size(); ++k)
    {
        const double x = _breaks[k];
        const double len = segment_end(k) - x;
        if (_point_values[k] > threshold)
            spans.push_back(Span::point(x));
        const Polynomial diff = _pieces[k] - Polynomial::constant(threshold);
        std::vector<double> cuts{0.0};
        for (double r : diff.roots_in(0.0, len))
            cuts.push_back(r);
        cuts.push_back(len);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        {
            if (diff(0.5 * (cuts[i] + cuts[i + 1])) > 0.0)
                spans.push_back(Span::open(x + cuts[i], x + cuts[i + 1]));
        }
    }
    return SpanSet(std::move(spans));
}

int PiecewisePolynomial::max_degree() const
{
    int d = 0;
    for (const Polynomial& p : _pieces)
        d = std::max(d, p.degree());
    return d;
}

PiecewiseLinear PiecewisePolynomial::to_piecewise_linear(double sample_step) const
{
    std::vector<Knot> knots;
    for (std::size_t k = 0; k < _breaks.size(); ++k)
    {
        const double x = _breaks[k];
        const double p = _point_values[k];
        const double r = _pieces[k](0.0);
        const double l = k == 0 ? p : _pieces[k - 1](x - _breaks[k - 1]);
        if (l == p && p == r)
        {
            knots.push_back({x, p});
        }
        else if (p == r)
        {
            knots.push_back({x, l});
            knots.push_back({x, p});
        }
        else
        {
            knots.push_back({x, l});
            knots.push_back({x, p});
            knots.push_back({x, r});
        }
        const double end = segment_end(k);
        if (_pieces[k].degree() >= 2 && sample_step > 0.0)
        {
            const auto n = static_cast<long>(std::ceil((end - x) / sample_step));
            for (long i = 1; i < n; ++i)
            {
                const double u = static_cast<double>(i) * sample_step;
                knots.push_back({x + u, _pieces[k](u)});
            }
        }
    }
    const std::size_t last = _breaks.size() - 1;
    knots.push_back({_domain_end, _pieces[last](_domain_end - _breaks[last])});
    return PiecewiseLinear(std::move(knots), _domain_end);
}

PiecewisePolynomial PiecewisePolynomial::simplified() const
{
    std::vector<double> breaks{_breaks[0]};
    std::vector<double> pvs{_point_values[0]};
    std::vector<Polynomial> pieces{_pieces[0]};
    for (std::size_t k = 1; k < _breaks.size(); ++k)
    {
        const Polynomial& prev = pieces.back();
        const bool mergeable = prev.is_constant() && _pieces[k] == prev && _point_values[k] == prev(0.0);
        if (mergeable)
            continue;
        breaks.push_back(_breaks[k]);
        pvs.push_back(_point_values[k]);
        pieces.push_back(_pieces[k]);
    }
    return PiecewisePolynomial(std::move(breaks), std::move(pvs), std::move(pieces), _domain_end);
}

// ---------------------------------------------------------------------------
// Operations

namespace
{

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> normalized_breaks(std::vector<double> cand, double domain_end)
{
    cand.push_back(0.0);
    std::erase_if(cand, [&](double x) { return !(x >= 0.0 && x < domain_end); });
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    return cand;
}

void require_same_domain(const PiecewisePolynomial& f, const PiecewisePolynomial& g)
{
    if (f.domain_end() != g.domain_end())
        throw domain_mismatch("piecewise functions have different domains");
}

std::vector<double> merged_breaks(const PiecewisePolynomial& f, const PiecewisePolynomial& g)
{
    std::vector<double> all = f.breaks();
    all.insert(all.end(), g.breaks().begin(), g.breaks().end());
    return normalized_breaks(std::move(all), f.domain_end());
}

struct Builder
{
    std::vector<double> breaks;
    std::vector<double> pvs;
    std::vector<Polynomial> pieces;

    void add(double x, double pv, Polynomial piece)
    {
        breaks.push_back(x);
        pvs.push_back(pv);
        pieces.push_back(std::move(piece));
    }

    PiecewisePolynomial finish(double domain_end)
    {
        return PiecewisePolynomial(std::move(breaks), std::move(pvs), std::move(pieces), domain_end).simplified();
    }
};

// Lower (or upper) envelope of candidate polynomials on [y, end), all given in
// u = t - y. The value at y itself is supplied by the caller.
void add_envelope(Builder& out, double y, double end, double pv_at_y, const std::vector<Polynomial>& cands,
                  bool take_min)
{
    const double len = end - y;
    std::vector<double> cuts{0.0};
    for (std::size_t i = 0; i < cands.size(); ++i)
    {
        for (std::size_t j = i + 1; j < cands.size(); ++j)
        {
            for (double r : (cands[i] - cands[j]).roots_in(0.0, len))
                cuts.push_back(r);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.push_back(len);

    auto better = [&](double a, double b) { return take_min ? a < b : a > b; };
    std::size_t prev_best = cands.size();
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    {
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        std::size_t best = 0;
        double best_v = cands[0](mid);
        for (std::size_t c = 1; c < cands.size(); ++c)
        {
            const double v = cands[c](mid);
            if (better(v, best_v) || (v == best_v && cands[c].degree() < cands[best].degree()))
            {
                best = c;
                best_v = v;
            }
        }
        if (i == 0)
        {
            out.add(y, pv_at_y, cands[best]);
        }
        else if (best != prev_best)
        {
            const double x = y + cuts[i];
            if (x <= out.breaks.back() || x >= end)
                continue;
            double pv = cands[0](cuts[i]);
            for (std::size_t c = 1; c < cands.size(); ++c)
                pv = take_min ? std::min(pv, cands[c](cuts[i])) : std::max(pv, cands[c](cuts[i]));
            out.add(x, pv, cands[best].shifted(cuts[i]));
        }
        prev_best = best;
    }
}

PiecewisePolynomial envelope(const PiecewisePolynomial& f, const PiecewisePolynomial& g, bool take_min)
{
    require_same_domain(f, g);
    const double T = f.domain_end();
    const std::vector<double> breaks = merged_breaks(f, g);
    Builder out;
    for (std::size_t k = 0; k < breaks.size(); ++k)
    {
        const double y = breaks[k];
        const double end = k + 1 < breaks.size() ? breaks[k + 1] : T;
        const double pv = take_min ? std::min(f(y), g(y)) : std::max(f(y), g(y));
        add_envelope(out, y, end, pv, {f.piece_around(y), g.piece_around(y)}, take_min);
    }
    return out.finish(T);
}

// Antiderivative of f from 0, clamped to [0, T].
class Cumulative
{
public:
    explicit Cumulative(const PiecewisePolynomial& f) : _f(f)
    {
        double acc = 0.0;
        for (std::size_t k = 0; k < f.segments(); ++k)
        {
            _offset.push_back(acc);
            _anti.push_back(f.pieces()[k].antiderivative());
            acc += _anti.back()(f.segment_end(k) - f.breaks()[k]);
        }
        _total = acc;
    }

    [[nodiscard]] double operator()(double s) const
    {
        if (s <= 0.0)
            return 0.0;
        if (s >= _f.domain_end())
            return _total;
        const std::size_t k = _f.segment_of(s);
        return _offset[k] + _anti[k](s - _f.breaks()[k]);
    }

    // The antiderivative along s = t + c for t in [y, ...), as a polynomial in
    // u = t - y. `probe` is a time inside the segment that picks the piece.
    [[nodiscard]] Polynomial along(double y, double c, double probe) const
    {
        const double s = probe + c;
        if (s <= 0.0)
            return {};
        if (s >= _f.domain_end())
            return Polynomial::constant(_total);
        const std::size_t k = _f.segment_of(s);
        return _anti[k].shifted(y + c - _f.breaks()[k]) + Polynomial::constant(_offset[k]);
    }

private:
    const PiecewisePolynomial& _f;
    std::vector<double> _offset;
    std::vector<Polynomial> _anti;
    double _total = 0.0;
};

// Infimum of f over a span split into the parts that move with the span's
// ends and the part that does not.
struct InfParts
{
    bool empty = true;
    double fixed = kInf;
    long lo_piece = -1; // piece whose interior holds the span's lower end
    long hi_piece = -1;
};

class InfSolver
{
public:
    explicit InfSolver(const PiecewisePolynomial& f) : _f(f)
    {
        for (std::size_t k = 0; k < f.segments(); ++k)
        {
            const double len = f.segment_end(k) - f.breaks()[k];
            _crit.push_back(f.pieces()[k].derivative().roots_in(0.0, len));
        }
    }

    [[nodiscard]] const std::vector<std::vector<double>>& critical_points() const { return _crit; }

    [[nodiscard]] InfParts parts(const Span& w) const
    {
        InfParts out;
        const Span d = intersect(w, Span::right_open(0.0, _f.domain_end()));
        if (d.empty())
            return out;
        out.empty = false;
        const auto& breaks = _f.breaks();
        for (std::size_t k = 0; k < breaks.size(); ++k)
        {
            const double x = breaks[k];
            if (d.contains(x))
                out.fixed = std::min(out.fixed, _f.point_values()[k]);
            const Span ov = intersect(d, Span::open(x, _f.segment_end(k)));
            if (ov.empty())
                continue;
            const Polynomial& p = _f.pieces()[k];
            if (ov.lo == w.lo)
                out.lo_piece = static_cast<long>(k);
            else
                out.fixed = std::min(out.fixed, p(ov.lo - x));
            if (ov.hi == w.hi)
                out.hi_piece = static_cast<long>(k);
            else
                out.fixed = std::min(out.fixed, p(ov.hi - x));
            for (double c : _crit[k])
            {
                if (ov.lo < x + c && x + c < ov.hi)
                    out.fixed = std::min(out.fixed, p(c));
            }
        }
        return out;
    }

    [[nodiscard]] double value(const Span& w, double empty_value) const
    {
        const InfParts p = parts(w);
        if (p.empty)
            return empty_value;
        double v = p.fixed;
        if (p.lo_piece >= 0)
            v = std::min(v, piece_at(p.lo_piece, w.lo));
        if (p.hi_piece >= 0)
            v = std::min(v, piece_at(p.hi_piece, w.hi));
        return v;
    }

private:
    [[nodiscard]] double piece_at(long k, double t) const
    {
        const auto i = static_cast<std::size_t>(k);
        return _f.pieces()[i](t - _f.breaks()[i]);
    }

    const PiecewisePolynomial& _f;
    std::vector<std::vector<double>> _crit;
};

} // namespace

PiecewisePolynomial one_minus(const PiecewisePolynomial& f)
{
    std::vector<double> pvs;
    std::vector<Polynomial> pieces;
    for (std::size_t k = 0; k < f.segments(); ++k)
    {
        pvs.push_back(1.0 - f.point_values()[k]);
        pieces.push_back(Polynomial::constant(1.0) - f.pieces()[k]);
    }
    return PiecewisePolynomial(f.breaks(), std::move(pvs), std::move(pieces), f.domain_end());
}

PiecewisePolynomial pointwise_min(const PiecewisePolynomial& f, const PiecewisePolynomial& g)
{
    return envelope(f, g, true);
}

PiecewisePolynomial pointwise_max(const PiecewisePolynomial& f, const PiecewisePolynomial& g)
{
    return envelope(f, g, false);
}

PiecewisePolynomial product(const PiecewisePolynomial& f, const PiecewisePolynomial& g)
{
    require_same_domain(f, g);
    const double T = f.domain_end();
    const std::vector<double> breaks = merged_breaks(f, g);
    Builder out;
    for (double y : breaks)
        out.add(y, f(y) * g(y), f.piece_around(y) * g.piece_around(y));
    return out.finish(T);
}

PiecewisePolynomial shift(const PiecewisePolynomial& f, double offset, double fill)
{
    const double T = f.domain_end();
    std::vector<double> cand{-offset, T - offset};
    for (double x : f.breaks())
        cand.push_back(x - offset);
    const std::vector<double> breaks = normalized_breaks(std::move(cand), T);

    auto inside = [&](double s) { return s >= 0.0 && s < T; };
    Builder out;
    for (std::size_t k = 0; k < breaks.size(); ++k)
    {
        const double y = breaks[k];
        const double end = k + 1 < breaks.size() ? breaks[k + 1] : T;
        const double probe = 0.5 * (y + end) + offset;
        const double pv = inside(y + offset) ? f(y + offset) : fill;
        if (!inside(probe))
        {
            out.add(y, pv, Polynomial::constant(fill));
            continue;
        }
        const std::size_t seg = f.segment_of(probe);
        out.add(y, pv, f.pieces()[seg].shifted(y + offset - f.breaks()[seg]));
    }
    return out.finish(T);
}

PiecewisePolynomial window_integral(const PiecewisePolynomial& f, double lo, double hi, double scale)
{
    const double T = f.domain_end();
    std::vector<double> cand{-lo, -hi, T - lo, T - hi};
    for (double x : f.breaks())
    {
        cand.push_back(x - lo);
        cand.push_back(x - hi);
    }
    const std::vector<double> breaks = normalized_breaks(std::move(cand), T);
    const Cumulative cum(f);

    Builder out;
    for (std::size_t k = 0; k < breaks.size(); ++k)
    {
        const double y = breaks[k];
        const double end = k + 1 < breaks.size() ? breaks[k + 1] : T;
        const double mid = 0.5 * (y + end);
        const double pv = scale * (cum(y + hi) - cum(y + lo));
        out.add(y, pv, scale * (cum.along(y, hi, mid) - cum.along(y, lo, mid)));
    }
    return out.finish(T);
}

double inf_over(const PiecewisePolynomial& f, const Span& span, double empty_value)
{
    return InfSolver(f).value(span, empty_value);
}

PiecewisePolynomial window_inf(const PiecewisePolynomial& f, const Span& window, double empty_value)
{
    const double T = f.domain_end();
    const InfSolver solver(f);

    std::vector<double> cand{-window.lo, -window.hi, T - window.lo, T - window.hi};
    for (std::size_t k = 0; k < f.segments(); ++k)
    {
        const double x = f.breaks()[k];
        cand.push_back(x - window.lo);
        cand.push_back(x - window.hi);
        for (double c : solver.critical_points()[k])
        {
            cand.push_back(x + c - window.lo);
            cand.push_back(x + c - window.hi);
        }
    }
    const std::vector<double> breaks = normalized_breaks(std::move(cand), T);

    auto at = [&](double t) { return Span{t + window.lo, t + window.hi, window.lo_closed, window.hi_closed}; };
    Builder out;
    for (std::size_t k = 0; k < breaks.size(); ++k)
    {
        const double y = breaks[k];
        const double end = k + 1 < breaks.size() ? breaks[k + 1] : T;
        const double mid = 0.5 * (y + end);
        const double pv = solver.value(at(y), empty_value);
        const InfParts parts = solver.parts(at(mid));
        if (parts.empty)
        {
            out.add(y, pv, Polynomial::constant(empty_value));
            continue;
        }
        std::vector<Polynomial> cands;
        if (parts.fixed < kInf)
            cands.push_back(Polynomial::constant(parts.fixed));
        for (auto [piece, off] : {std::pair{parts.lo_piece, window.lo}, std::pair{parts.hi_piece, window.hi}})
        {
            if (piece < 0)
                continue;
            const auto i = static_cast<std::size_t>(piece);
            cands.push_back(f.pieces()[i].shifted(y + off - f.breaks()[i]));
        }
        add_envelope(out, y, end, pv, cands, true);
    }
    return out.finish(T);
}

namespace
{

// Components of `hold` with positive length, as [lo, hi] extents.
std::vector<std::pair<double, double>> extents(const SpanSet& hold)
{
    std::vector<std::pair<double, double>> out;
    for (const Span& s : hold.spans())
    {
        if (s.lo < s.hi)
            out.emplace_back(s.lo, s.hi);
    }
    return out;
}

} // namespace

PiecewisePolynomial reach_integral_future(const SpanSet& hold, const PiecewisePolynomial& f, double a, double b,
                                          double scale)
{
    const double T = f.domain_end();
    // Times past the domain end never falsify the left operand.
    const auto comps = extents(hold.unite(SpanSet(Span::closed(T, T + b + 1.0))));
    const Cumulative cum(f);

    // Component [l, r) such that (t, t + eps) lies inside, if any.
    auto find = [&](double t) -> const std::pair<double, double>* {
        for (const auto& c : comps)
        {
            if (c.first <= t && t < c.second)
                return &c;
        }
        return nullptr;
    };
    auto value = [&](double t) {
        const auto* c = find(t);
        if (!c)
            return 0.0;
        const double upper = std::min(t + b, c->second);
        const double lower = t + a;
        return lower < upper ? scale * (cum(upper) - cum(lower)) : 0.0;
    };

    std::vector<double> cand{-a, -b, T - a, T - b};
    for (const auto& [l, r] : comps)
    {
        cand.insert(cand.end(), {l, r, r - a, r - b});
    }
    for (double x : f.breaks())
    {
        cand.push_back(x - a);
        cand.push_back(x - b);
    }
    const std::vector<double> breaks = normalized_breaks(std::move(cand), T);

    Builder out;
    for (std::size_t k = 0; k < breaks.size(); ++k)
    {
        const double y = breaks[k];
        const double end = k + 1 < breaks.size() ? breaks[k + 1] : T;
        const double mid = 0.5 * (y + end);
        const double pv = value(y);
        const auto* c = find(mid);
        if (!c || !(mid + a < std::min(mid + b, c->second)))
        {
            out.add(y, pv, Polynomial{});
            continue;
        }
        const Polynomial upper = mid + b < c->second ? cum.along(y, b, mid) : Polynomial::constant(cum(c->second));
        out.add(y, pv, scale * (upper - cum.along(y, a, mid)));
    }
    return out.finish(T);
}

PiecewisePolynomial reach_integral_past(const SpanSet& hold, const PiecewisePolynomial& f, double a, double b,
                                        double scale)
{
    const double T = f.domain_end();
    // Times before 0 never falsify the left operand.
    const auto comps = extents(hold.unite(SpanSet(Span::right_open(-b - 1.0, 0.0))));
    const Cumulative cum(f);

    // Component (l, r] such that (t - eps, t) lies inside, if any.
    auto find = [&](double t) -> const std::pair<double, double>* {
        for (const auto& c : comps)
        {
            if (c.first < t && t <= c.second)
                return &c;
        }
        return nullptr;
    };
    auto value = [&](double t) {
        const auto* c = find(t);
        if (!c)
            return 0.0;
        const double lower = std::max(t - b, c->first);
        const double upper = t - a;
        return lower < upper ? scale * (cum(upper) - cum(lower)) : 0.0;
    };

    std::vector<double> cand{a, b, T + a, T + b};
    for (const auto& [l, r] : comps)
    {
        cand.insert(cand.end(), {l, r, l + a, l + b});
    }
    for (double x : f.breaks())
    {
        cand.push_back(x + a);
        cand.push_back(x + b);
    }
    const std::vector<double> breaks = normalized_breaks(std::move(cand), T);

    Builder out;
    for (std::size_t k = 0; k < breaks.size(); ++k)
    {
        const double y = breaks[k];
        const double end = k + 1 < breaks.size() ? breaks[k + 1] : T;
        const double mid = 0.5 * (y + end);
        const double pv = value(y);
        const auto* c = find(mid);
        if (!c || !(std::max(mid - b, c->first) < mid - a))
        {
            out.add(y, pv, Polynomial{});
            continue;
        }
        const Polynomial lower = mid - b > c->first ? cum.along(y, -b, mid) : Polynomial::constant(cum(c->first));
        out.add(y, pv, scale * (cum.along(y, -a, mid) - lower));
    }
    return out.finish(T);
}

} // namespace tlf
