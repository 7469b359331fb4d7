#pragma once

#include <optional>
#include <string>
#include <utility>

#include "coalg/lifting.hpp"
#include "coalg/system.hpp"

namespace coalg {

struct Verdict {
    bool holds = true;
    std::optional<std::pair<std::string, std::string>> counterexample;
    std::string detail;

    static Verdict yes() { return {}; }
    static Verdict no(std::pair<std::string, std::string> pair, std::string why) {
        Verdict v;
        v.holds = false;
        v.counterexample = std::move(pair);
        v.detail = std::move(why);
        return v;
    }
};

/// Is rel an order-relaxed simulation between c and d? With the equality
/// order this is exactly the bisimulation condition ("closed under c and d").
/// The counterexample names the first related pair whose step condition
/// fails.
Verdict is_simulation(const System& c, const System& d, const Relation& rel,
                      const OrderSpec& ord);

/// The plain bisimulation checker (no order indirection).
Verdict is_bisimulation(const System& c, const System& d, const Relation& rel);

/// Greatest fixpoint: start from the full product relation and delete
/// failing pairs round by round until stable. Monotonicity of the lifting
/// makes the result the largest simulation.
Relation largest_simulation(const System& c, const System& d, const OrderSpec& ord);

/// Larsen-Skou condition: within every class of the partition, any two
/// states push identical accumulated count*prob mass into every class under
/// every label.
Verdict is_prob_bisimulation(const System& sys, const Partition& p);

/// Coarsest probabilistic bisimulation, by partition refinement on
/// (label, target class) mass signatures.
Partition prob_bisimilarity(const System& sys);

}  // namespace coalg
