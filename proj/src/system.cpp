#include "coalg/system.hpp"

#include <algorithm>

namespace coalg {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Lts: return "lts";
        case Kind::Mts: return "mts";
        case Kind::Pmts: return "pmts";
        case Kind::Dts: return "dts";
        case Kind::AltMts: return "alt-mts";
        case Kind::AltGts: return "alt-gts";
    }
    return "?";
}

std::optional<Kind> kind_from_name(const std::string& s) {
    if (s == "lts") return Kind::Lts;
    if (s == "mts") return Kind::Mts;
    if (s == "pmts") return Kind::Pmts;
    if (s == "dts") return Kind::Dts;
    if (s == "alt-mts") return Kind::AltMts;
    if (s == "alt-gts") return Kind::AltGts;
    return std::nullopt;
}

const char* bundle_kind_name(BundleKind k) {
    switch (k) {
        case BundleKind::Set: return "set";
        case BundleKind::Ms: return "multiset";
        case BundleKind::M1: return "m1";
        case BundleKind::Dist: return "dist";
    }
    return "?";
}

bool bundle_allowed(Kind kind, const Bundle& b) {
    switch (kind) {
        case Kind::Lts: return std::holds_alternative<SetBundle>(b);
        case Kind::Mts: return std::holds_alternative<MsBundle>(b);
        case Kind::Pmts: return std::holds_alternative<M1Bundle>(b);
        case Kind::Dts: return std::holds_alternative<DistBundle>(b);
        case Kind::AltMts:
            return std::holds_alternative<MsBundle>(b) || std::holds_alternative<M1Bundle>(b);
        case Kind::AltGts:
            return std::holds_alternative<SetBundle>(b) || std::holds_alternative<DistBundle>(b);
    }
    return false;
}

std::set<std::string> bundle_targets(const Bundle& b) {
    std::set<std::string> out;
    std::visit(
        [&](const auto& bb) {
            using T = std::decay_t<decltype(bb)>;
            if constexpr (std::is_same_v<T, SetBundle>) {
                for (const auto& a : bb.arcs) out.insert(a.target);
            } else if constexpr (std::is_same_v<T, MsBundle>) {
                for (const auto& [a, n] : bb.ms.entries()) out.insert(a.target);
            } else if constexpr (std::is_same_v<T, M1Bundle>) {
                for (const auto& [wa, n] : bb.ms.entries()) out.insert(wa.target);
            } else {
                for (const auto& [a, m] : bb.dist.entries()) out.insert(a.target);
            }
        },
        b);
    return out;
}

std::set<std::string> bundle_labels(const Bundle& b) {
    std::set<std::string> out;
    std::visit(
        [&](const auto& bb) {
            using T = std::decay_t<decltype(bb)>;
            if constexpr (std::is_same_v<T, SetBundle>) {
                for (const auto& a : bb.arcs) out.insert(a.label);
            } else if constexpr (std::is_same_v<T, MsBundle>) {
                for (const auto& [a, n] : bb.ms.entries()) out.insert(a.label);
            } else if constexpr (std::is_same_v<T, M1Bundle>) {
                for (const auto& [wa, n] : bb.ms.entries()) out.insert(wa.label);
            } else {
                for (const auto& [a, m] : bb.dist.entries()) out.insert(a.label);
            }
        },
        b);
    return out;
}

const Bundle& System::bundle_of(const std::string& state) const {
    auto it = step.find(state);
    if (it == step.end()) throw mismatch_error("no such state: " + state);
    return it->second;
}

bool System::has_state(const std::string& state) const {
    return step.count(state) != 0;
}

std::set<std::string> System::state_set() const {
    return {states.begin(), states.end()};
}

std::vector<std::string> validate_system(const System& sys) {
    std::vector<std::string> diags;
    const auto carrier = sys.state_set();
    if (carrier.size() != sys.states.size())
        diags.push_back("duplicate state identifiers in carrier");

    for (const auto& s : sys.states) {
        if (!sys.step.count(s)) {
            diags.push_back("state " + s + " has no successor bundle");
            continue;
        }
        const Bundle& b = sys.step.at(s);
        if (!bundle_allowed(sys.kind, b)) {
            diags.push_back("bundle of kind " + std::string(bundle_kind_name(bundle_kind(b))) +
                            " not allowed in a " + kind_name(sys.kind) + " system at " + s);
            continue;
        }
        for (const auto& t : bundle_targets(b))
            if (!carrier.count(t))
                diags.push_back("target " + t + " of state " + s + " is not a declared state");
        for (const auto& l : bundle_labels(b))
            if (!sys.labels.count(l))
                diags.push_back("label " + l + " at state " + s + " is not in the alphabet");

        if (const auto* m1 = std::get_if<M1Bundle>(&b)) {
            for (const auto& [wa, n] : m1->ms.entries())
                if (wa.prob < Rat(0) || wa.prob > Rat(1))
                    diags.push_back("probability " + wa.prob.str() + " outside [0,1] at " + s);
            if (!m1->ms.empty()) {
                const Rat t = m1->weighted_total();
                if (!t.is_one())
                    diags.push_back("probability mass " + t.str() + " != 1 at " + s);
            }
        } else if (const auto* d = std::get_if<DistBundle>(&b)) {
            for (const auto& [a, m] : d->dist.entries())
                if (m > Rat(1))
                    diags.push_back("probability " + m.str() + " outside [0,1] at " + s);
            if (!d->dist.empty()) {
                const Rat t = d->dist.total();
                if (!t.is_one())
                    diags.push_back("probability mass " + t.str() + " != 1 at " + s);
            }
        }
    }
    for (const auto& [s, b] : sys.step)
        if (!carrier.count(s))
            diags.push_back("bundle declared for unknown state " + s);
    return diags;
}

namespace {

std::string tag(const std::string& prefix, const std::string& s) { return prefix + s; }

Bundle retarget(const Bundle& b, const std::string& prefix) {
    return std::visit(
        [&](const auto& bb) -> Bundle {
            using T = std::decay_t<decltype(bb)>;
            if constexpr (std::is_same_v<T, SetBundle>) {
                SetBundle out;
                for (const auto& a : bb.arcs) out.arcs.insert({a.label, tag(prefix, a.target)});
                return out;
            } else if constexpr (std::is_same_v<T, MsBundle>) {
                MsBundle out;
                for (const auto& [a, n] : bb.ms.entries())
                    out.ms.add({a.label, tag(prefix, a.target)}, n);
                return out;
            } else if constexpr (std::is_same_v<T, M1Bundle>) {
                M1Bundle out;
                for (const auto& [wa, n] : bb.ms.entries())
                    out.ms.add({wa.prob, wa.label, tag(prefix, wa.target)}, n);
                return out;
            } else {
                DistBundle out;
                for (const auto& [a, m] : bb.dist.entries())
                    out.dist.add({a.label, tag(prefix, a.target)}, m);
                return out;
            }
        },
        b);
}

}  // namespace

System disjoint_union(const System& s1, const System& s2) {
    if (s1.kind != s2.kind)
        throw mismatch_error(std::string("disjoint_union: kind mismatch (") + kind_name(s1.kind) +
                             " vs " + kind_name(s2.kind) + ")");
    System out;
    out.name = s1.name + "+" + s2.name;
    out.kind = s1.kind;
    for (const auto& s : s1.states) out.states.push_back(tag("left:", s));
    for (const auto& s : s2.states) out.states.push_back(tag("right:", s));
    out.labels = s1.labels;
    out.labels.insert(s2.labels.begin(), s2.labels.end());
    for (const auto& s : s1.states) out.step.emplace(tag("left:", s), retarget(s1.bundle_of(s), "left:"));
    for (const auto& s : s2.states) out.step.emplace(tag("right:", s), retarget(s2.bundle_of(s), "right:"));
    return out;
}

std::vector<std::string> Relation::validate() const {
    std::vector<std::string> diags;
    for (const auto& [l, r] : pairs) {
        if (!left_carrier.count(l)) diags.push_back("pair left element " + l + " outside carrier");
        if (!right_carrier.count(r)) diags.push_back("pair right element " + r + " outside carrier");
    }
    return diags;
}

Relation Relation::transpose() const {
    Relation t;
    t.left_carrier = right_carrier;
    t.right_carrier = left_carrier;
    for (const auto& [l, r] : pairs) t.pairs.insert({r, l});
    return t;
}

Relation full_relation(const System& s1, const System& s2) {
    Relation r;
    r.left_carrier = s1.state_set();
    r.right_carrier = s2.state_set();
    for (const auto& l : r.left_carrier)
        for (const auto& rr : r.right_carrier) r.pairs.insert({l, rr});
    return r;
}

std::vector<std::string> Partition::validate() const {
    std::vector<std::string> diags;
    std::set<std::string> seen;
    for (const auto& cls : classes) {
        if (cls.empty()) diags.push_back("empty class");
        for (const auto& s : cls) {
            if (!carrier.count(s)) diags.push_back("class member " + s + " outside carrier");
            if (!seen.insert(s).second) diags.push_back("state " + s + " in two classes");
        }
    }
    for (const auto& s : carrier)
        if (!seen.count(s)) diags.push_back("state " + s + " not covered by any class");
    return diags;
}

int Partition::class_of(const std::string& state) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].count(state)) return static_cast<int>(i);
    return -1;
}

Partition partition_from_equivalence(const Relation& rel) {
    if (rel.left_carrier != rel.right_carrier)
        throw mismatch_error("partition_from_equivalence: relation is not on a single carrier");
    for (const auto& s : rel.left_carrier)
        if (!rel.contains(s, s)) throw mismatch_error("relation not reflexive at " + s);
    for (const auto& [l, r] : rel.pairs) {
        if (!rel.contains(r, l)) throw mismatch_error("relation not symmetric at (" + l + "," + r + ")");
        for (const auto& [l2, r2] : rel.pairs)
            if (l2 == r && !rel.contains(l, r2))
                throw mismatch_error("relation not transitive at (" + l + "," + r2 + ")");
    }
    Partition p;
    p.carrier = rel.left_carrier;
    std::set<std::string> done;
    for (const auto& s : rel.left_carrier) {
        if (done.count(s)) continue;
        std::set<std::string> cls;
        for (const auto& t : rel.left_carrier)
            if (rel.contains(s, t)) cls.insert(t);
        for (const auto& t : cls) done.insert(t);
        p.classes.push_back(std::move(cls));
    }
    std::sort(p.classes.begin(), p.classes.end(),
              [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
    return p;
}

Relation relation_from_partition(const Partition& p) {
    Relation r;
    r.left_carrier = p.carrier;
    r.right_carrier = p.carrier;
    for (const auto& cls : p.classes)
        for (const auto& a : cls)
            for (const auto& b : cls) r.pairs.insert({a, b});
    return r;
}

}  // namespace coalg
