#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace coalg {

/// Finite-support multiset: a counting map with strictly positive counts.
/// Equality is extensional on the counts, independent of insertion order.
template <typename E>
class Multiset {
public:
    Multiset() = default;

    void add(const E& e, std::int64_t n = 1) {
        if (n <= 0) throw std::invalid_argument("Multiset: count must be positive");
        counts_[e] += n;
    }

    std::int64_t count(const E& e) const {
        auto it = counts_.find(e);
        return it == counts_.end() ? 0 : it->second;
    }

    bool empty() const { return counts_.empty(); }
    std::size_t support_size() const { return counts_.size(); }

    /// Sum of all counts.
    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& [e, n] : counts_) t += n;
        return t;
    }

    std::set<E> support() const {
        std::set<E> s;
        for (const auto& [e, n] : counts_) s.insert(e);
        return s;
    }

    const std::map<E, std::int64_t>& entries() const { return counts_; }

    auto operator<=>(const Multiset&) const = default;

private:
    std::map<E, std::int64_t> counts_;
};

}  // namespace coalg
