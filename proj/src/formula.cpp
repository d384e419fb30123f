#include "tlf/formula.hpp"

#include "tlf/errors.hpp"
#include "tlf/format.hpp"

#include <cctype>

namespace tlf
{

Formula Formula::prop(std::string name)
{
    Formula f;
    f.op = Op::prop;
    f.name = std::move(name);
    return f;
}

Formula Formula::truth()
{
    return {};
}

Formula Formula::falsity()
{
    Formula f;
    f.op = Op::bottom;
    return f;
}

namespace
{

Formula make(Op op, TimeInterval i, std::vector<Formula> args)
{
    Formula f;
    f.op = op;
    f.interval = i;
    f.args = std::move(args);
    return f;
}

} // namespace

Formula Formula::negation(Formula f)
{
    return make(Op::negation, {}, {std::move(f)});
}

Formula Formula::disjunction(Formula a, Formula b)
{
    return make(Op::disjunction, {}, {std::move(a), std::move(b)});
}

Formula Formula::conjunction(Formula a, Formula b)
{
    return make(Op::conjunction, {}, {std::move(a), std::move(b)});
}

Formula Formula::until(TimeInterval i, Formula a, Formula b)
{
    return make(Op::until, i, {std::move(a), std::move(b)});
}

Formula Formula::since(TimeInterval i, Formula a, Formula b)
{
    return make(Op::since, i, {std::move(a), std::move(b)});
}

Formula Formula::finally(TimeInterval i, Formula f)
{
    return make(Op::finally, i, {std::move(f)});
}

Formula Formula::globally(TimeInterval i, Formula f)
{
    return make(Op::globally, i, {std::move(f)});
}

Formula Formula::once(TimeInterval i, Formula f)
{
    return make(Op::once, i, {std::move(f)});
}

Formula Formula::historically(TimeInterval i, Formula f)
{
    return make(Op::historically, i, {std::move(f)});
}

bool Formula::is_temporal() const
{
    switch (op)
    {
    case Op::until:
    case Op::since:
    case Op::finally:
    case Op::globally:
    case Op::once:
    case Op::historically:
        return true;
    default:
        return false;
    }
}

// ---------------------------------------------------------------------------
// Parser

namespace
{

bool ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser
{
public:
    explicit Parser(std::string_view text) : _s(text) {}

    Formula parse_all()
    {
        Formula f = disjunction();
        skip_ws();
        if (_pos != _s.size())
            fail("unexpected '" + std::string(1, _s[_pos]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw syntax_error(msg, _pos); }

    void skip_ws()
    {
        while (_pos < _s.size() && std::isspace(static_cast<unsigned char>(_s[_pos])))
            ++_pos;
    }

    bool accept(char c)
    {
        skip_ws();
        if (_pos < _s.size() && _s[_pos] == c)
        {
            ++_pos;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    // Identifier at the cursor without consuming it.
    std::string_view peek_ident()
    {
        skip_ws();
        std::size_t end = _pos;
        if (end < _s.size() && ident_start(_s[end]))
        {
            while (end < _s.size() && ident_char(_s[end]))
                ++end;
        }
        return _s.substr(_pos, end - _pos);
    }

    // True when an interval starts at position p: '[' always, '(' only when
    // followed by a numeric bound list.
    bool interval_at(std::size_t p) const
    {
        while (p < _s.size() && std::isspace(static_cast<unsigned char>(_s[p])))
            ++p;
        if (p >= _s.size())
            return false;
        if (_s[p] == '[')
            return true;
        if (_s[p] != '(')
            return false;
        ++p;
        while (p < _s.size() && (std::isdigit(static_cast<unsigned char>(_s[p])) || _s[p] == ',' ||
                                 std::isspace(static_cast<unsigned char>(_s[p]))))
            ++p;
        return p < _s.size() && (_s[p] == ')' || _s[p] == ']');
    }

    // Operator letter `name` at the cursor followed by an interval.
    bool at_operator(std::string_view name)
    {
        return peek_ident() == name && interval_at(_pos + name.size());
    }

    double natural()
    {
        skip_ws();
        const std::size_t start = _pos;
        while (_pos < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_pos])))
            ++_pos;
        if (start == _pos)
            fail("expected a natural number");
        return std::stod(std::string(_s.substr(start, _pos - start)));
    }

    TimeInterval interval()
    {
        TimeInterval i;
        skip_ws();
        if (accept('['))
            i.lo_open = false;
        else if (accept('('))
            i.lo_open = true;
        else
            fail("expected '['");
        i.lo = natural();
        if (accept(','))
        {
            i.hi = natural();
        }
        else
        {
            i.hi = i.lo;
        }
        skip_ws();
        if (accept(']'))
            i.hi_open = false;
        else if (accept(')'))
            i.hi_open = true;
        else
            fail("expected ']'");
        if (i.lo > i.hi)
            throw interval_error("interval lower bound exceeds upper");
        if (i.lo == i.hi && (i.lo_open || i.hi_open))
            throw interval_error("singular interval must be closed");
        return i;
    }

    Formula disjunction()
    {
        Formula f = conjunction();
        while (accept('|'))
            f = Formula::disjunction(std::move(f), conjunction());
        return f;
    }

    Formula conjunction()
    {
        Formula f = temporal_binary();
        while (accept('&'))
            f = Formula::conjunction(std::move(f), temporal_binary());
        return f;
    }

    Formula temporal_binary()
    {
        Formula left = unary();
        for (Op op : {Op::until, Op::since})
        {
            const std::string_view letter = op == Op::until ? "U" : "S";
            if (!at_operator(letter))
                continue;
            _pos += 1;
            const TimeInterval i = interval();
            Formula right = unary();
            if (at_operator("U") || at_operator("S"))
                fail("binary temporal operators are non-associative; add parentheses");
            return op == Op::until ? Formula::until(i, std::move(left), std::move(right))
                                   : Formula::since(i, std::move(left), std::move(right));
        }
        return left;
    }

    Formula unary()
    {
        if (accept('!'))
            return Formula::negation(unary());
        static constexpr std::pair<std::string_view, Op> unary_ops[] = {
            {"F", Op::finally}, {"G", Op::globally}, {"O", Op::once}, {"H", Op::historically}};
        for (const auto& [letter, op] : unary_ops)
        {
            if (at_operator(letter))
            {
                _pos += 1;
                const TimeInterval i = interval();
                return make(op, i, {unary()});
            }
        }
        return atom();
    }

    Formula atom()
    {
        if (accept('('))
        {
            Formula f = disjunction();
            expect(')');
            return f;
        }
        const std::string_view id = peek_ident();
        if (id.empty())
        {
            if (_pos >= _s.size())
                fail("unexpected end of formula");
            fail("unexpected '" + std::string(1, _s[_pos]) + "'");
        }
        _pos += id.size();
        if (id == "true")
            return Formula::truth();
        if (id == "false")
            return Formula::falsity();
        return Formula::prop(std::string(id));
    }

    std::string_view _s;
    std::size_t _pos = 0;
};

} // namespace

Formula parse(std::string_view text)
{
    return Parser(text).parse_all();
}

// ---------------------------------------------------------------------------
// Printer

std::string to_string(const TimeInterval& i)
{
    return std::string(i.lo_open ? "(" : "[") + format_number(i.lo) + "," + format_number(i.hi) +
           (i.hi_open ? ")" : "]");
}

std::string to_string(const Formula& f)
{
    switch (f.op)
    {
    case Op::prop:
        return f.name;
    case Op::top:
        return "true";
    case Op::bottom:
        return "false";
    case Op::negation:
        return "!" + to_string(f.arg());
    case Op::disjunction:
        return "(" + to_string(f.arg(0)) + " | " + to_string(f.arg(1)) + ")";
    case Op::conjunction:
        return "(" + to_string(f.arg(0)) + " & " + to_string(f.arg(1)) + ")";
    case Op::until:
        return "(" + to_string(f.arg(0)) + " U" + to_string(f.interval) + " " + to_string(f.arg(1)) + ")";
    case Op::since:
        return "(" + to_string(f.arg(0)) + " S" + to_string(f.interval) + " " + to_string(f.arg(1)) + ")";
    case Op::finally:
        return "F" + to_string(f.interval) + " " + to_string(f.arg());
    case Op::globally:
        return "G" + to_string(f.interval) + " " + to_string(f.arg());
    case Op::once:
        return "O" + to_string(f.interval) + " " + to_string(f.arg());
    case Op::historically:
        return "H" + to_string(f.interval) + " " + to_string(f.arg());
    }
    return {};
}

// ---------------------------------------------------------------------------
// Rewrites

namespace
{

Formula pnf(const Formula& f, bool negated)
{
    switch (f.op)
    {
    case Op::prop:
        return negated ? Formula::negation(f) : f;
    case Op::top:
        return negated ? Formula::falsity() : f;
    case Op::bottom:
        return negated ? Formula::truth() : f;
    case Op::negation:
        return pnf(f.arg(), !negated);
    case Op::disjunction:
    case Op::conjunction: {
        const bool conj = (f.op == Op::conjunction) != negated;
        Formula a = pnf(f.arg(0), negated);
        Formula b = pnf(f.arg(1), negated);
        return conj ? Formula::conjunction(std::move(a), std::move(b))
                    : Formula::disjunction(std::move(a), std::move(b));
    }
    case Op::until:
    case Op::since:
        if (negated)
            throw unsupported_negation("negation above " + std::string(f.op == Op::until ? "U" : "S") +
                                       " has no positive normal form: " + to_string(f));
        return make(f.op, f.interval, {pnf(f.arg(0), false), pnf(f.arg(1), false)});
    case Op::finally:
        return make(negated ? Op::globally : Op::finally, f.interval, {pnf(f.arg(), negated)});
    case Op::globally:
        return make(negated ? Op::finally : Op::globally, f.interval, {pnf(f.arg(), negated)});
    case Op::once:
        return make(negated ? Op::historically : Op::once, f.interval, {pnf(f.arg(), negated)});
    case Op::historically:
        return make(negated ? Op::once : Op::historically, f.interval, {pnf(f.arg(), negated)});
    }
    return f;
}

} // namespace

Formula to_pnf(const Formula& f)
{
    return pnf(f, false);
}

bool is_pnf(const Formula& f)
{
    if (f.op == Op::negation)
        return f.arg().op == Op::prop;
    for (const Formula& a : f.args)
    {
        if (!is_pnf(a))
            return false;
    }
    return true;
}

Formula derived_expansions(const Formula& f)
{
    Formula g = f;
    for (Formula& a : g.args)
        a = derived_expansions(a);
    switch (g.op)
    {
    case Op::finally:
        return Formula::until(g.interval, Formula::truth(), g.arg());
    case Op::once:
        return Formula::since(g.interval, Formula::truth(), g.arg());
    case Op::globally:
        return Formula::negation(Formula::until(g.interval, Formula::truth(), Formula::negation(g.arg())));
    case Op::historically:
        return Formula::negation(Formula::since(g.interval, Formula::truth(), Formula::negation(g.arg())));
    default:
        return g;
    }
}

std::set<std::string> propositions(const Formula& f)
{
    std::set<std::string> out;
    if (f.op == Op::prop)
        out.insert(f.name);
    for (const Formula& a : f.args)
        out.merge(propositions(a));
    return out;
}

int depth(const Formula& f)
{
    int d = 0;
    for (const Formula& a : f.args)
        d = std::max(d, depth(a));
    return f.args.empty() ? 0 : d + 1;
}

void require_closed_intervals(const Formula& f)
{
    if (f.is_temporal() && !f.interval.is_closed())
        throw open_interval_unsupported("open time bound " + to_string(f.interval) + " in " + to_string(f));
    for (const Formula& a : f.args)
        require_closed_intervals(a);
}

} // namespace tlf
