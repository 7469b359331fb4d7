#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coalg/distribution.hpp"
#include "coalg/multiset.hpp"
#include "coalg/rational.hpp"

namespace coalg {

// ---------------------------------------------------------------------------
// Errors

/// Incompatible kinds, carriers, or orders passed to an operation.
class mismatch_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A combinatorial cap (enumeration size, oracle support size) was exceeded.
class limit_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// System kinds and successor bundles

enum class Kind { Lts, Mts, Pmts, Dts, AltMts, AltGts };

const char* kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& s);

/// One labelled edge endpoint: (label, target state).
struct Arc {
    std::string label;
    std::string target;
    auto operator<=>(const Arc&) const = default;
};

/// One probabilistic edge endpoint: (probability, label, target state).
struct WeightedArc {
    Rat prob;
    std::string label;
    std::string target;
    auto operator<=>(const WeightedArc&) const = default;
};

struct SetBundle {
    std::set<Arc> arcs;
    auto operator<=>(const SetBundle&) const = default;
};

struct MsBundle {
    Multiset<Arc> ms;
    auto operator<=>(const MsBundle&) const = default;
};

/// Probabilistic multiset bundle; nonempty bundles must satisfy
/// sum(count * prob) == 1. The empty bundle marks a terminal state.
struct M1Bundle {
    Multiset<WeightedArc> ms;
    auto operator<=>(const M1Bundle&) const = default;

    Rat weighted_total() const {
        Rat t(0);
        for (const auto& [wa, n] : ms.entries()) t += wa.prob * Rat(n);
        return t;
    }
};

/// Distribution bundle; nonempty bundles must have total mass 1. The empty
/// bundle marks a terminal state.
struct DistBundle {
    Distribution<Arc> dist;
    auto operator<=>(const DistBundle&) const = default;
};

using Bundle = std::variant<SetBundle, MsBundle, M1Bundle, DistBundle>;

enum class BundleKind { Set, Ms, M1, Dist };

inline BundleKind bundle_kind(const Bundle& b) {
    return static_cast<BundleKind>(b.index());
}

const char* bundle_kind_name(BundleKind k);

/// In alternating systems a state is exclusively nondeterministic or
/// exclusively probabilistic; the bundle variant carries that tag.
inline bool bundle_is_prob(const Bundle& b) {
    return std::holds_alternative<M1Bundle>(b) || std::holds_alternative<DistBundle>(b);
}

/// The bundle variants a system of the given kind may assign to a state.
bool bundle_allowed(Kind kind, const Bundle& b);

/// Target states referenced by a bundle.
std::set<std::string> bundle_targets(const Bundle& b);

/// Labels referenced by a bundle.
std::set<std::string> bundle_labels(const Bundle& b);

// ---------------------------------------------------------------------------
// Systems

/// A finite coalgebra: each state maps to a successor bundle whose shape is
/// determined by the system kind (and, for alternating kinds, by the state's
/// polarity). Values are immutable by convention once built and validated.
struct System {
    std::string name;
    Kind kind = Kind::Lts;
    std::vector<std::string> states;  // declaration order, no duplicates
    std::set<std::string> labels;
    std::map<std::string, Bundle> step;

    const Bundle& bundle_of(const std::string& state) const;
    bool has_state(const std::string& state) const;
    std::set<std::string> state_set() const;
};

/// One diagnostic per violated invariant, naming the state and the rule.
std::vector<std::string> validate_system(const System& sys);

/// Tagged union of two same-kind systems; states are prefixed with
/// "left:" / "right:" and bundles are carried over unchanged.
System disjoint_union(const System& s1, const System& s2);

// ---------------------------------------------------------------------------
// Relations and partitions

struct Relation {
    std::set<std::string> left_carrier;
    std::set<std::string> right_carrier;
    std::set<std::pair<std::string, std::string>> pairs;

    bool contains(const std::string& l, const std::string& r) const {
        return pairs.count({l, r}) != 0;
    }
    /// pairs within carriers; one diagnostic per violation
    std::vector<std::string> validate() const;

    Relation transpose() const;
    auto operator<=>(const Relation&) const = default;
};

/// Full product relation over the two systems' carriers.
Relation full_relation(const System& s1, const System& s2);

struct Partition {
    std::set<std::string> carrier;
    std::vector<std::set<std::string>> classes;  // sorted by least member

    std::vector<std::string> validate() const;
    /// index of the class containing the state, or -1
    int class_of(const std::string& state) const;
    auto operator<=>(const Partition&) const = default;
};

/// Partition built from an equivalence relation on a single carrier.
/// Throws mismatch_error if the relation is not an equivalence.
Partition partition_from_equivalence(const Relation& rel);

/// The relation {(x,y) | x,y in the same class}.
Relation relation_from_partition(const Partition& p);

}  // namespace coalg
