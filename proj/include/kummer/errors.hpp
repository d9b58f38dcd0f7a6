#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

// Invalid mathematical input: zero where nonzero is required, bad modulus, ...
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A configurable resource cap was exceeded (enumeration too large, ...).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Expression syntax error carrying a 1-based source position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error(what), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace kummer
