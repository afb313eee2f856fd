#ifndef DYSONCT_LAURENT_HPP
#define DYSONCT_LAURENT_HPP

#include <unordered_map>

#include "dysonct/arith.hpp"
#include "dysonct/monomial.hpp"

namespace dysonct {

/// Sparse multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients, stored as a map from exponent vector to coefficient.
///
/// Canonical form invariant: no stored coefficient is zero, so equality is a
/// plain map comparison. Every mutating entry point re-establishes this.
class SparseLaurentPoly {
public:
    using TermMap = std::unordered_map<ExponentVector, Integer, ExponentVectorHash>;

    explicit SparseLaurentPoly(int n);

    /// The constant polynomial 1 in n variables.
    static SparseLaurentPoly one(int n);

    int vars() const { return n_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient lookup; absent keys read as 0.
    Integer coefficient(const ExponentVector& m) const;

    /// Adds c * x^m, dropping the term if the sum cancels to zero.
    void add_term(const ExponentVector& m, const Integer& c);

    SparseLaurentPoly operator+(const SparseLaurentPoly& o) const;
    SparseLaurentPoly operator*(const SparseLaurentPoly& o) const;

    const TermMap& terms() const { return terms_; }

    friend bool operator==(const SparseLaurentPoly& a, const SparseLaurentPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    TermMap terms_;
};

}  // namespace dysonct

#endif
