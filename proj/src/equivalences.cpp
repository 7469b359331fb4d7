#include "coalg/equivalences.hpp"

#include <algorithm>
#include <map>

namespace coalg {

namespace {

void check_compatible(const System& c, const System& d, const Relation& rel) {
    if (c.kind != d.kind)
        throw mismatch_error(std::string("kind mismatch: ") + kind_name(c.kind) + " vs " +
                             kind_name(d.kind));
    if (rel.left_carrier != c.state_set() || rel.right_carrier != d.state_set())
        throw mismatch_error("relation carriers do not match the systems' state sets");
}

}  // namespace

Verdict is_simulation(const System& c, const System& d, const Relation& rel,
                      const OrderSpec& ord) {
    check_compatible(c, d, rel);
    for (const auto& [x, y] : rel.pairs) {
        LiftResult r = lift_ordered_member(ord, rel, c.bundle_of(x), d.bundle_of(y));
        if (!r.related)
            return Verdict::no({x, y}, "step bundles of (" + x + "," + y +
                                           ") are not related by the lifted relation under order " +
                                           ord.describe());
    }
    return Verdict::yes();
}

Verdict is_bisimulation(const System& c, const System& d, const Relation& rel) {
    check_compatible(c, d, rel);
    for (const auto& [x, y] : rel.pairs) {
        LiftResult r = lift_bundles(rel, c.bundle_of(x), d.bundle_of(y));
        if (!r.related)
            return Verdict::no({x, y}, "step bundles of (" + x + "," + y +
                                           ") are not related by the lifted relation");
    }
    return Verdict::yes();
}

Relation largest_simulation(const System& c, const System& d, const OrderSpec& ord) {
    Relation rel = full_relation(c, d);
    if (c.kind != d.kind)
        throw mismatch_error(std::string("kind mismatch: ") + kind_name(c.kind) + " vs " +
                             kind_name(d.kind));
    bool changed = true;
    while (changed) {
        changed = false;
        // Pairs failing under the current relation, collected in
        // lexicographic order and deleted between rounds.
        std::vector<std::pair<std::string, std::string>> dead;
        for (const auto& [x, y] : rel.pairs)
            if (!lift_ordered_member(ord, rel, c.bundle_of(x), d.bundle_of(y)).related)
                dead.push_back({x, y});
        for (const auto& p : dead) rel.pairs.erase(p);
        changed = !dead.empty();
    }
    return rel;
}

namespace {

// (label, class index) -> accumulated count * prob mass
using Signature = std::map<std::pair<std::string, int>, Rat>;

Signature state_signature(const System& sys, const std::string& state, const Partition& p) {
    Signature sig;
    const auto& b = sys.bundle_of(state);
    const auto& m1 = std::get<M1Bundle>(b);
    for (const auto& [wa, n] : m1.ms.entries()) {
        const int cls = p.class_of(wa.target);
        sig[{wa.label, cls}] += wa.prob * Rat(n);
    }
    // Drop zero entries so weight-0 arcs do not distinguish states.
    for (auto it = sig.begin(); it != sig.end();)
        it = it->second.is_zero() ? sig.erase(it) : std::next(it);
    return sig;
}

}  // namespace

Verdict is_prob_bisimulation(const System& sys, const Partition& p) {
    if (sys.kind != Kind::Pmts)
        throw mismatch_error("probabilistic bisimulation is defined on pmts systems");
    if (p.carrier != sys.state_set() || !p.validate().empty())
        throw mismatch_error("partition does not cover the system's carrier");
    for (const auto& cls : p.classes) {
        std::optional<std::pair<std::string, Signature>> first;
        for (const auto& x : cls) {
            Signature sig = state_signature(sys, x, p);
            if (!first) {
                first = {x, std::move(sig)};
                continue;
            }
            if (sig != first->second) {
                // name one differing (label, class) cell
                std::string why = "states " + first->first + " and " + x +
                                  " emit different class masses";
                for (const auto& [key, m] : first->second) {
                    auto it = sig.find(key);
                    const Rat other = it == sig.end() ? Rat(0) : it->second;
                    if (!(other == m)) {
                        why += ": " + m.str() + " vs " + other.str() + " into class #" +
                               std::to_string(key.second) + " under " + key.first;
                        break;
                    }
                }
                return Verdict::no({first->first, x}, why);
            }
        }
    }
    return Verdict::yes();
}

Partition prob_bisimilarity(const System& sys) {
    if (sys.kind != Kind::Pmts)
        throw mismatch_error("probabilistic bisimilarity is defined on pmts systems");
    Partition p;
    p.carrier = sys.state_set();
    if (p.carrier.empty()) return p;
    p.classes.push_back(p.carrier);
    while (true) {
        std::vector<std::set<std::string>> next;
        for (const auto& cls : p.classes) {
            std::map<Signature, std::set<std::string>> groups;
            for (const auto& x : cls) groups[state_signature(sys, x, p)].insert(x);
            for (auto& [sig, members] : groups) next.push_back(std::move(members));
        }
        const bool stable = next.size() == p.classes.size();
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
        p.classes = std::move(next);
        if (stable) break;
    }
    return p;
}

}  // namespace coalg
