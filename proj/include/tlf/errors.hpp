#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlf
{

// Base of every error raised by the library. The CLI maps the two families
// below onto exit codes 2 (input) and 3 (semantics / kernel mismatch).
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Problems with the user's input: files, formulas, signal contents.
class input_error : public error
{
public:
    using error::error;
};

// The requested semantics cannot be applied to a well-formed input.
class semantics_error : public error
{
public:
    using error::error;
};

class parse_error : public input_error
{
public:
    using input_error::input_error;
};

class domain_error : public input_error
{
public:
    using input_error::input_error;
};

class domain_mismatch : public input_error
{
public:
    using input_error::input_error;
};

class out_of_domain : public input_error
{
public:
    using input_error::input_error;
};

class unknown_proposition : public input_error
{
public:
    explicit unknown_proposition(const std::string& name)
        : input_error("unknown proposition '" + name + "'"), _name(name)
    {
    }

    [[nodiscard]] const std::string& name() const { return _name; }

private:
    std::string _name;
};

class syntax_error : public input_error
{
public:
    syntax_error(const std::string& message, std::size_t position)
        : input_error(message + " at position " + std::to_string(position)), _position(position)
    {
    }

    [[nodiscard]] std::size_t position() const { return _position; }

private:
    std::size_t _position;
};

class interval_error : public input_error
{
public:
    using input_error::input_error;
};

class invalid_param : public input_error
{
public:
    using input_error::input_error;
};

class unsupported_negation : public semantics_error
{
public:
    using semantics_error::semantics_error;
};

class open_interval_unsupported : public semantics_error
{
public:
    using semantics_error::semantics_error;
};

class kernel_shape_error : public semantics_error
{
public:
    using semantics_error::semantics_error;
};

class not_pnf : public semantics_error
{
public:
    using semantics_error::semantics_error;
};

class unsupported_operand : public semantics_error
{
public:
    using semantics_error::semantics_error;
};

} // namespace tlf
