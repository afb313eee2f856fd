#include "dysonct/laurent.hpp"

#include <stdexcept>

namespace dysonct {

SparseLaurentPoly::SparseLaurentPoly(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SparseLaurentPoly: n must be >= 1");
}

SparseLaurentPoly SparseLaurentPoly::one(int n) {
    SparseLaurentPoly p(n);
    p.terms_.emplace(ExponentVector::zero(n), Integer(1));
    return p;
}

Integer SparseLaurentPoly::coefficient(const ExponentVector& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void SparseLaurentPoly::add_term(const ExponentVector& m, const Integer& c) {
    if (m.size() != n_) throw std::invalid_argument("SparseLaurentPoly: arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparseLaurentPoly SparseLaurentPoly::operator+(const SparseLaurentPoly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("SparseLaurentPoly: arity mismatch");
    SparseLaurentPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

SparseLaurentPoly SparseLaurentPoly::operator*(const SparseLaurentPoly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("SparseLaurentPoly: arity mismatch");
    SparseLaurentPoly out(n_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            out.add_term(ma.plus(mb), ca * cb);
        }
    }
    return out;
}

}  // namespace dysonct
