#ifndef DYSONCT_ARITH_HPP
#define DYSONCT_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "dysonct/errors.hpp"

namespace dysonct {

/// Arbitrary-precision integer. Everything the engine stores as a polynomial
/// coefficient or a final closed-form value is one of these.
using Integer = mpz_class;

/// binomial(n, k) with the usual convention binomial(n, k) = 0 for k < 0 or k > n.
Integer binomial(long long n, long long k);

/// n! for n >= 0.
Integer factorial(long long n);

/// Exact rational, always in lowest terms with positive denominator.
///
/// Used only for intermediate closed-form arithmetic; results that the theory
/// says are integers are pulled back out through to_integer(), which throws
/// IntegralityError instead of rounding.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : value_(v) {}                // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);

    const Integer numerator() const { return value_.get_num(); }
    const Integer denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }

    /// Exact conversion; throws IntegralityError when the denominator is not 1.
    Integer to_integer() const;

    bool is_zero() const { return value_ == 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }

    /// "p" when integral, "p/q" otherwise.
    std::string str() const;

private:
    mpq_class value_;  // kept canonical
};

/// Number of successful Rational::to_integer conversions since process start.
/// A nonzero failure count is impossible: failures throw. The counter lets
/// verification sweeps report how many integrality checks they exercised.
long long integrality_conversion_count();

}  // namespace dysonct

#endif
