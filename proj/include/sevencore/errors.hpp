#ifndef SEVENCORE_ERRORS_HPP
#define SEVENCORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sevencore
{

// Base class for every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// invert/divide called on a series whose constant term is not +1 or -1.
class non_unit_constant_term : public error
{
public:
    using error::error;
};

// Argument outside the supported domain (n = 0, n >= 2^64, bad exponent...).
class out_of_range : public error
{
public:
    using error::error;
};

// p is not of the form x^2 + 7y^2.
class not_representable : public error
{
public:
    using error::error;
};

// F(p, r) requested for p outside {2} U {primes = 1, 2, 4 mod 7}.
class wrong_class : public error
{
public:
    using error::error;
};

// A closed-form evaluation left a fractional part. Always an implementation bug.
class non_integer_result : public error
{
public:
    using error::error;
};

// Partition enumeration guard exceeded.
class too_large : public error
{
public:
    using error::error;
};

class cache_corrupt : public error
{
public:
    cache_corrupt(const std::string& path, std::size_t line, const std::string& what)
        : error(path + ":" + std::to_string(line) + ": corrupt cache record: " + what), line_(line)
    {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace sevencore

#endif
