#include "dysonct/arith.hpp"

#include <atomic>
#include <stdexcept>

namespace dysonct {

namespace {
std::atomic<long long> g_integer_conversions{0};
}

Integer binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

Integer factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    value_.canonicalize();  // lowest terms, positive denominator
}

Integer Rational::to_integer() const {
    if (!is_integer()) {
        throw IntegralityError("expected an integer, got " + str());
    }
    g_integer_conversions.fetch_add(1, std::memory_order_relaxed);
    return value_.get_num();
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.value_ == 0) throw std::invalid_argument("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

long long integrality_conversion_count() { return g_integer_conversions.load(); }

}  // namespace dysonct
