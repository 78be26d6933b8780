#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surdx {

// Base class for everything this library throws.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
};

class negative_radicand : public error {
public:
    negative_radicand() : error("square root of a negative value") {}
    explicit negative_radicand(const std::string& what) : error(what) {}
};

// The exact value exists but falls outside the two canonical forms
// (multi-quadratic field element / simple 2^n-th root surd).
class not_representable : public error {
public:
    explicit not_representable(const std::string& what) : error(what) {}
};

// Precondition violation on an operation's domain.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// Expression syntax error, with character offset and the expected token.
class parse_error : public error {
public:
    parse_error(std::size_t position, std::string expected)
        : error("syntax error at position " + std::to_string(position) +
                ": expected " + expected),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

}  // namespace surdx
