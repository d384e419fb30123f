#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tlf
{

// Time bound <a,b> of a temporal operator. The parser only produces natural
// bounds; the evaluators treat them as durations in continuous time.
struct TimeInterval
{
    double lo = 0.0;
    double hi = 0.0;
    bool lo_open = false;
    bool hi_open = false;

    static TimeInterval closed(double lo, double hi) { return {lo, hi, false, false}; }
    static TimeInterval singular(double a) { return {a, a, false, false}; }

    [[nodiscard]] bool is_closed() const { return !lo_open && !hi_open; }
    [[nodiscard]] bool is_singular() const { return lo == hi; }

    friend bool operator==(const TimeInterval&, const TimeInterval&) = default;
};

enum class Op
{
    prop,
    top,
    bottom,
    negation,
    disjunction,
    conjunction,
    until,
    since,
    finally,
    globally,
    once,
    historically
};

// Value-type syntax tree. `name` is used by prop only, `interval` by the six
// temporal operators; `args` holds 0, 1 or 2 children (U/S: left, right).
struct Formula
{
    Op op = Op::top;
    std::string name;
    TimeInterval interval;
    std::vector<Formula> args;

    static Formula prop(std::string name);
    static Formula truth();
    static Formula falsity();
    static Formula negation(Formula f);
    static Formula disjunction(Formula a, Formula b);
    static Formula conjunction(Formula a, Formula b);
    static Formula until(TimeInterval i, Formula a, Formula b);
    static Formula since(TimeInterval i, Formula a, Formula b);
    static Formula finally(TimeInterval i, Formula f);
    static Formula globally(TimeInterval i, Formula f);
    static Formula once(TimeInterval i, Formula f);
    static Formula historically(TimeInterval i, Formula f);

    [[nodiscard]] const Formula& arg(std::size_t k = 0) const { return args.at(k); }
    [[nodiscard]] bool is_temporal() const;

    friend bool operator==(const Formula&, const Formula&) = default;
};

// Grammar, loosest first:
//   f := f '|' f  |  f '&' f  |  u
//   u := n 'U' I n  |  n 'S' I n  |  n          (non-associative)
//   n := '!' n  |  ('F'|'G'|'O'|'H') I n  |  'true'  |  'false'  |  ident  |  '(' f ')'
//   I := '[' a ',' b ']'  |  '[' a ']'  with either bracket replaceable by '(' / ')'
// Throws syntax_error (with position) and interval_error.
[[nodiscard]] Formula parse(std::string_view text);

// Fully parenthesized concrete syntax; parse(to_string(f)) == f.
[[nodiscard]] std::string to_string(const Formula& f);
[[nodiscard]] std::string to_string(const TimeInterval& i);

// Push negations down to propositions. Throws unsupported_negation when a
// negation sits above U or S.
[[nodiscard]] Formula to_pnf(const Formula& f);
[[nodiscard]] bool is_pnf(const Formula& f);

// Rewrite F, G, O, H in terms of U, S and negation.
[[nodiscard]] Formula derived_expansions(const Formula& f);

[[nodiscard]] std::set<std::string> propositions(const Formula& f);
[[nodiscard]] int depth(const Formula& f);
// Throws open_interval_unsupported if any temporal bound is open.
void require_closed_intervals(const Formula& f);

} // namespace tlf
