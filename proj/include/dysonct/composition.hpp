#ifndef DYSONCT_COMPOSITION_HPP
#define DYSONCT_COMPOSITION_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace dysonct {

/// A length-n vector of nonnegative integer exponents (a_1,...,a_n): the
/// parameter of the Dyson product. Immutable after construction; every
/// derived vector comes back as a new value.
///
/// All indices in the public API are 1-based.
class Composition {
public:
    explicit Composition(std::vector<int> entries);

    /// Parses "2,1,1". Errors on empty input, negatives, or junk.
    static Composition parse(const std::string& text);

    int size() const { return static_cast<int>(entries_.size()); }

    /// a_i, 1-based.
    int entry(int i) const;

    /// a = a_1 + ... + a_n.
    long long total() const { return total_; }

    /// a^{(j)} = total() - a_j.
    long long without(int j) const;

    /// a - e_k; requires entry(k) >= 1.
    Composition decremented(int k) const;

    /// a with entry k removed (length n-1); requires n >= 2.
    Composition deleted(int k) const;

    bool all_positive() const;

    /// Smallest 1-based index with a zero entry, or 0 if all entries positive.
    int first_zero() const;

    /// "2,1,1"
    std::string str() const;

    const std::vector<int>& data() const { return entries_; }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<int> entries_;
    long long total_ = 0;
};

struct CompositionHash {
    std::size_t operator()(const Composition& a) const;
};

}  // namespace dysonct

#endif
