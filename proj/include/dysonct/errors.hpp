#ifndef DYSONCT_ERRORS_HPP
#define DYSONCT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dysonct {

/// Raised when an expansion or recursion exceeds its configured resource cap.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a value that must be an integer has a denominator != 1.
/// Seeing this means a formula is implemented wrong, not that the input is bad.
class IntegralityError : public std::logic_error {
public:
    explicit IntegralityError(const std::string& what) : std::logic_error(what) {}
};

/// Raised by identity checkers when two routes to the same value disagree.
class IdentityMismatchError : public std::logic_error {
public:
    explicit IdentityMismatchError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dysonct

#endif
