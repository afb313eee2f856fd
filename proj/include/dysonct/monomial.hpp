#ifndef DYSONCT_MONOMIAL_HPP
#define DYSONCT_MONOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace dysonct {

/// Signed exponent vector (b_1,...,b_n) naming the Laurent monomial
/// prod_i x_i^{b_i}. Indices are 1-based in the public API.
class ExponentVector {
public:
    explicit ExponentVector(std::vector<int> exps);

    static ExponentVector zero(int n);

    int size() const { return static_cast<int>(exps_.size()); }

    /// b_i, 1-based.
    int exp(int i) const;

    /// sum of exponents; a coefficient in the Dyson product can be nonzero
    /// only for degree 0.
    long long degree() const;

    ExponentVector plus(const ExponentVector& o) const;
    ExponentVector negated() const;

    /// "2,-1,-1"
    std::string str() const;

    const std::vector<int>& data() const { return exps_; }

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.exps_ == b.exps_;
    }

private:
    std::vector<int> exps_;
};

struct ExponentVectorHash {
    std::size_t operator()(const ExponentVector& m) const;
};

/// Parses a monomial in either syntax:
///   - exponent list: "2,-1,-1" (exactly n comma-separated signed integers)
///   - symbolic:      "x1^2/(x2 x3)" with 1-based variable indices <= n
/// Both syntaxes for the same monomial yield equal vectors.
ExponentVector parse_monomial(const std::string& text, int n);

}  // namespace dysonct

#endif
