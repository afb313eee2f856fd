#include "dysonct/monomial.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace dysonct {

namespace {
constexpr int kMaxExponent = 1'000'000;

[[noreturn]] void bad(const std::string& text, const std::string& why) {
    throw std::invalid_argument("monomial '" + text + "': " + why);
}

// One side of a symbolic monomial: "x1^2", "x2 x3", "x1*x2^3", "1".
// Adds sign*exponent into exps. Outer parentheses, if any, were removed.
void parse_factors(const std::string& text, const std::string& side, int sign,
                   std::vector<int>& exps) {
    const int n = static_cast<int>(exps.size());
    const char* p = side.data();
    const char* end = p + side.size();
    bool saw_factor = false;
    while (p != end) {
        if (*p == ' ' || *p == '*') {
            ++p;
            continue;
        }
        if (*p == '1' && (p + 1 == end || p[1] == ' ' || p[1] == '*')) {
            // the trivial monomial
            saw_factor = true;
            ++p;
            continue;
        }
        if (*p != 'x') bad(text, std::string("unexpected character '") + *p + "'");
        ++p;
        int index = 0;
        auto [next, ec] = std::from_chars(p, end, index);
        if (ec != std::errc{} || next == p) bad(text, "missing variable index after 'x'");
        p = next;
        if (index < 1 || index > n) {
            bad(text, "variable index x" + std::to_string(index) + " out of range 1..x" +
                          std::to_string(n));
        }
        int power = 1;
        if (p != end && *p == '^') {
            ++p;
            auto [next2, ec2] = std::from_chars(p, end, power);
            if (ec2 != std::errc{} || next2 == p) bad(text, "missing exponent after '^'");
            if (power < 1) bad(text, "symbolic exponents must be >= 1 (use '/' for negatives)");
            p = next2;
        }
        exps[static_cast<std::size_t>(index - 1)] += sign * power;
        saw_factor = true;
    }
    if (!saw_factor) bad(text, "empty factor list");
}

std::string strip_outer_parens(const std::string& text, std::string side) {
    while (!side.empty() && side.front() == ' ') side.erase(side.begin());
    while (!side.empty() && side.back() == ' ') side.pop_back();
    if (!side.empty() && side.front() == '(') {
        if (side.back() != ')') bad(text, "unbalanced parentheses");
        side = side.substr(1, side.size() - 2);
    } else if (side.find(')') != std::string::npos || side.find('(') != std::string::npos) {
        bad(text, "unbalanced parentheses");
    }
    return side;
}

ExponentVector parse_symbolic(const std::string& text, int n) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    auto slash = text.find('/');
    if (text.find('/', slash == std::string::npos ? slash : slash + 1) != std::string::npos) {
        bad(text, "more than one '/'");
    }
    const std::string num = strip_outer_parens(text, text.substr(0, slash));
    parse_factors(text, num, +1, exps);
    if (slash != std::string::npos) {
        const std::string den = strip_outer_parens(text, text.substr(slash + 1));
        parse_factors(text, den, -1, exps);
    }
    return ExponentVector(std::move(exps));
}

ExponentVector parse_list(const std::string& text, int n) {
    std::vector<int> exps;
    const char* p = text.data();
    const char* end = p + text.size();
    while (true) {
        int value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{}) bad(text, "cannot parse exponent list");
        exps.push_back(value);
        p = next;
        if (p == end) break;
        if (*p != ',') bad(text, "cannot parse exponent list");
        ++p;
        if (p == end) bad(text, "trailing comma");
    }
    if (static_cast<int>(exps.size()) != n) {
        bad(text, "expected " + std::to_string(n) + " entries, got " +
                      std::to_string(exps.size()));
    }
    return ExponentVector(std::move(exps));
}

}  // namespace

ExponentVector::ExponentVector(std::vector<int> exps) : exps_(std::move(exps)) {
    if (exps_.empty()) throw std::invalid_argument("ExponentVector: needs at least one entry");
    for (int e : exps_) {
        if (e > kMaxExponent || e < -kMaxExponent) {
            throw std::invalid_argument("ExponentVector: |exponent| exceeds 10^6");
        }
    }
}

ExponentVector ExponentVector::zero(int n) {
    return ExponentVector(std::vector<int>(static_cast<std::size_t>(n), 0));
}

int ExponentVector::exp(int i) const {
    if (i < 1 || i > size()) {
        throw std::invalid_argument("ExponentVector: index " + std::to_string(i) +
                                    " out of range 1.." + std::to_string(size()));
    }
    return exps_[static_cast<std::size_t>(i - 1)];
}

long long ExponentVector::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0LL);
}

ExponentVector ExponentVector::plus(const ExponentVector& o) const {
    if (o.size() != size()) throw std::invalid_argument("ExponentVector: size mismatch");
    std::vector<int> exps(exps_);
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += o.exps_[i];
    return ExponentVector(std::move(exps));
}

ExponentVector ExponentVector::negated() const {
    std::vector<int> exps(exps_);
    for (int& e : exps) e = -e;
    return ExponentVector(std::move(exps));
}

std::string ExponentVector::str() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(exps_[i]);
    }
    return out;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : m.data()) {
        h ^= static_cast<std::size_t>(static_cast<unsigned int>(x));
        h *= 1099511628211ull;
    }
    return h;
}

ExponentVector parse_monomial(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("parse_monomial: n must be >= 1");
    if (text.empty()) throw std::invalid_argument("parse_monomial: empty input");
    if (text.find('x') != std::string::npos) return parse_symbolic(text, n);
    return parse_list(text, n);
}

}  // namespace dysonct
