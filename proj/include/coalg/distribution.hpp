#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>

#include "coalg/rational.hpp"

namespace coalg {

/// Finite-support discrete measure with strictly positive rational masses.
/// Whether the total must be 1 is a property of the owning system (terminal
/// states carry the empty measure), so it is not enforced here.
template <typename E>
class Distribution {
public:
    Distribution() = default;

    void add(const E& e, const Rat& m) {
        if (m <= Rat(0)) throw std::invalid_argument("Distribution: mass must be positive");
        auto [it, inserted] = mass_.emplace(e, m);
        if (!inserted) it->second += m;
    }

    Rat mass(const E& e) const {
        auto it = mass_.find(e);
        return it == mass_.end() ? Rat(0) : it->second;
    }

    bool empty() const { return mass_.empty(); }
    std::size_t support_size() const { return mass_.size(); }

    Rat total() const {
        Rat t(0);
        for (const auto& [e, m] : mass_) t += m;
        return t;
    }

    std::set<E> support() const {
        std::set<E> s;
        for (const auto& [e, m] : mass_) s.insert(e);
        return s;
    }

    const std::map<E, Rat>& entries() const { return mass_; }

    auto operator<=>(const Distribution&) const = default;

private:
    std::map<E, Rat> mass_;
};

}  // namespace coalg
