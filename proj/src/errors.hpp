#pragma once

#include <stdexcept>
#include <string>

namespace misx {

// Bad user input: malformed records, out-of-range vertices, bad family specs.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration exceeded its configured budget of emitted sets.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input outside the supported range (e.g. graph6 n > 258047).
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// Two routes that must agree disagreed. Always a bug, never a user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace misx
