#include "dysonct/composition.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace dysonct {

namespace {
constexpr int kMaxEntry = 1'000'000;

std::size_t hash_ints(const std::vector<int>& v) {
    // FNV-1a over the raw entries
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<std::size_t>(static_cast<unsigned int>(x));
        h *= 1099511628211ull;
    }
    return h;
}
}  // namespace

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("Composition: needs at least one entry");
    for (int e : entries_) {
        if (e < 0) throw std::invalid_argument("Composition: entries must be nonnegative");
        if (e > kMaxEntry) throw std::invalid_argument("Composition: entry exceeds 10^6");
    }
    total_ = std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

Composition Composition::parse(const std::string& text) {
    std::vector<int> entries;
    const char* p = text.data();
    const char* end = p + text.size();
    while (true) {
        int value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{}) {
            throw std::invalid_argument("Composition: cannot parse '" + text + "'");
        }
        entries.push_back(value);
        p = next;
        if (p == end) break;
        if (*p != ',') throw std::invalid_argument("Composition: cannot parse '" + text + "'");
        ++p;
        if (p == end) throw std::invalid_argument("Composition: trailing comma in '" + text + "'");
    }
    return Composition(std::move(entries));
}

int Composition::entry(int i) const {
    if (i < 1 || i > size()) {
        throw std::invalid_argument("Composition: index " + std::to_string(i) +
                                    " out of range 1.." + std::to_string(size()));
    }
    return entries_[static_cast<std::size_t>(i - 1)];
}

long long Composition::without(int j) const { return total_ - entry(j); }

Composition Composition::decremented(int k) const {
    if (entry(k) < 1) {
        throw std::invalid_argument("Composition: cannot decrement zero entry " +
                                    std::to_string(k));
    }
    std::vector<int> entries = entries_;
    entries[static_cast<std::size_t>(k - 1)] -= 1;
    return Composition(std::move(entries));
}

Composition Composition::deleted(int k) const {
    entry(k);  // range check
    if (size() < 2) throw std::invalid_argument("Composition: cannot delete from length-1");
    std::vector<int> entries;
    entries.reserve(entries_.size() - 1);
    for (int i = 0; i < size(); ++i) {
        if (i != k - 1) entries.push_back(entries_[static_cast<std::size_t>(i)]);
    }
    return Composition(std::move(entries));
}

bool Composition::all_positive() const { return first_zero() == 0; }

int Composition::first_zero() const {
    for (int i = 0; i < size(); ++i) {
        if (entries_[static_cast<std::size_t>(i)] == 0) return i + 1;
    }
    return 0;
}

std::string Composition::str() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

std::size_t CompositionHash::operator()(const Composition& a) const {
    return hash_ints(a.data());
}

}  // namespace dysonct
