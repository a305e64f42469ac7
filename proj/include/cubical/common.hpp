#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/dynamic_bitset.hpp>

namespace cubical {

using Bitset = boost::dynamic_bitset<>;

// Malformed input text or references to unknown objects. Line and column are
// 1-based; zero means "not tied to a position".
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg, std::size_t line = 0, std::size_t column = 0);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Input is well formed but violates a structural requirement of the operation
// (not median, not convex, cap exceeded, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cubical
