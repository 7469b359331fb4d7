#include "coalg/lifting.hpp"

#include <algorithm>
#include <sstream>

#include "coalg/detail/maxflow.hpp"

namespace coalg {

namespace {

void check_targets(const Relation& rel, const Bundle& u, const Bundle& v) {
    for (const auto& t : bundle_targets(u))
        if (!rel.left_carrier.count(t))
            throw mismatch_error("left bundle target " + t + " outside the relation's carrier");
    for (const auto& t : bundle_targets(v))
        if (!rel.right_carrier.count(t))
            throw mismatch_error("right bundle target " + t + " outside the relation's carrier");
}

LiftResult lift_sets(const Relation& rel, const SetBundle& u, const SetBundle& v) {
    auto compatible = [&rel](const Arc& a, const Arc& b) {
        return a.label == b.label && rel.contains(a.target, b.target);
    };
    for (const auto& a : u.arcs) {
        bool hit = false;
        for (const auto& b : v.arcs)
            if (compatible(a, b)) { hit = true; break; }
        if (!hit) return {};
    }
    for (const auto& b : v.arcs) {
        bool hit = false;
        for (const auto& a : u.arcs)
            if (compatible(a, b)) { hit = true; break; }
        if (!hit) return {};
    }
    ArcPairCounts w;
    for (const auto& a : u.arcs)
        for (const auto& b : v.arcs)
            if (compatible(a, b)) w[{a, b}] = 1;
    return {true, Coupling(std::move(w))};
}

LiftResult lift_multisets(const Relation& rel, const MsBundle& u, const MsBundle& v) {
    std::vector<std::pair<Arc, std::int64_t>> left(u.ms.entries().begin(), u.ms.entries().end());
    std::vector<std::pair<Arc, std::int64_t>> right(v.ms.entries().begin(), v.ms.entries().end());
    std::vector<std::int64_t> supply, demand;
    for (const auto& [a, n] : left) supply.push_back(n);
    for (const auto& [a, n] : right) demand.push_back(n);
    std::set<std::pair<std::size_t, std::size_t>> compat;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            if (left[i].first.label == right[j].first.label &&
                rel.contains(left[i].first.target, right[j].first.target))
                compat.insert({i, j});
    auto cells = detail::transport<std::int64_t>(supply, demand, compat);
    if (!cells) return {};
    ArcPairCounts w;
    for (const auto& [ij, f] : *cells) w[{left[ij.first].first, right[ij.second].first}] = f;
    return {true, Coupling(std::move(w))};
}

LiftResult lift_m1(const Relation& rel, const M1Bundle& u, const M1Bundle& v) {
    std::vector<std::pair<WeightedArc, std::int64_t>> left(u.ms.entries().begin(),
                                                           u.ms.entries().end());
    std::vector<std::pair<WeightedArc, std::int64_t>> right(v.ms.entries().begin(),
                                                            v.ms.entries().end());
    std::vector<std::int64_t> supply, demand;
    for (const auto& [a, n] : left) supply.push_back(n);
    for (const auto& [a, n] : right) demand.push_back(n);
    std::set<std::pair<std::size_t, std::size_t>> compat;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            if (left[i].first.prob == right[j].first.prob &&
                left[i].first.label == right[j].first.label &&
                rel.contains(left[i].first.target, right[j].first.target))
                compat.insert({i, j});
    auto cells = detail::transport<std::int64_t>(supply, demand, compat);
    if (!cells) return {};
    WeightedArcPairCounts w;
    for (const auto& [ij, f] : *cells) w[{left[ij.first].first, right[ij.second].first}] = f;
    return {true, Coupling(std::move(w))};
}

LiftResult lift_dists(const Relation& rel, const DistBundle& u, const DistBundle& v) {
    std::vector<std::pair<Arc, Rat>> left(u.dist.entries().begin(), u.dist.entries().end());
    std::vector<std::pair<Arc, Rat>> right(v.dist.entries().begin(), v.dist.entries().end());
    std::vector<Rat> supply, demand;
    for (const auto& [a, m] : left) supply.push_back(m);
    for (const auto& [a, m] : right) demand.push_back(m);
    std::set<std::pair<std::size_t, std::size_t>> compat;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            if (left[i].first.label == right[j].first.label &&
                rel.contains(left[i].first.target, right[j].first.target))
                compat.insert({i, j});
    auto cells = detail::transport<Rat>(supply, demand, compat);
    if (!cells) return {};
    ArcPairMasses w;
    for (const auto& [ij, f] : *cells) w[{left[ij.first].first, right[ij.second].first}] = f;
    return {true, Coupling(std::move(w))};
}

}  // namespace

LiftResult lift_bundles(const Relation& rel, const Bundle& u, const Bundle& v) {
    if (u.index() != v.index()) return {};
    check_targets(rel, u, v);
    if (const auto* su = std::get_if<SetBundle>(&u)) return lift_sets(rel, *su, std::get<SetBundle>(v));
    if (const auto* mu = std::get_if<MsBundle>(&u)) return lift_multisets(rel, *mu, std::get<MsBundle>(v));
    if (const auto* pu = std::get_if<M1Bundle>(&u)) return lift_m1(rel, *pu, std::get<M1Bundle>(v));
    return lift_dists(rel, std::get<DistBundle>(u), std::get<DistBundle>(v));
}

LiftResult lift_member(BundleKind kind, const Relation& rel, const Bundle& u, const Bundle& v) {
    if (bundle_kind(u) != kind || bundle_kind(v) != kind)
        throw mismatch_error(std::string("lift_member: bundle does not match declared kind ") +
                             bundle_kind_name(kind));
    return lift_bundles(rel, u, v);
}

bool lift_dist_subsets_member(const Relation& rel, const DistBundle& u, const DistBundle& v,
                              std::size_t support_cap) {
    check_targets(rel, Bundle(u), Bundle(v));
    std::vector<std::pair<Arc, Rat>> left(u.dist.entries().begin(), u.dist.entries().end());
    std::vector<std::pair<Arc, Rat>> right(v.dist.entries().begin(), v.dist.entries().end());
    if (left.size() > support_cap || right.size() > support_cap)
        throw limit_error("subset oracle: support exceeds cap of " + std::to_string(support_cap));

    // Element-level related pairs between the two supports; each pair gets
    // one bit, so a subset's preimage is a bitmask.
    struct Mask {
        std::uint64_t lo = 0, hi = 0;
        bool operator==(const Mask&) const = default;
        auto operator<=>(const Mask&) const = default;
        void set(std::size_t b) { (b < 64 ? lo : hi) |= (std::uint64_t(1) << (b % 64)); }
        void merge(const Mask& o) { lo |= o.lo; hi |= o.hi; }
    };
    std::vector<Mask> left_mask(left.size()), right_mask(right.size());
    std::size_t bit = 0;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            if (left[i].first.label == right[j].first.label &&
                rel.contains(left[i].first.target, right[j].first.target)) {
                left_mask[i].set(bit);
                right_mask[j].set(bit);
                ++bit;
            }

    // Group every subset's mass by its preimage mask; a shared mask forces
    // all masses observed on either side to coincide.
    auto sweep = [](const std::vector<Mask>& masks, const std::vector<Rat>& weights) {
        std::map<Mask, std::pair<Rat, Rat>> by_mask;  // min and max mass per mask
        const std::size_t n = masks.size();
        for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << n); ++sub) {
            Mask m;
            Rat mass(0);
            for (std::size_t i = 0; i < n; ++i)
                if (sub & (std::uint64_t(1) << i)) {
                    m.merge(masks[i]);
                    mass += weights[i];
                }
            auto [it, inserted] = by_mask.emplace(m, std::make_pair(mass, mass));
            if (!inserted) {
                if (mass < it->second.first) it->second.first = mass;
                if (mass > it->second.second) it->second.second = mass;
            }
        }
        return by_mask;
    };
    std::vector<Rat> lw, rw;
    for (const auto& [a, m] : left) lw.push_back(m);
    for (const auto& [a, m] : right) rw.push_back(m);
    const auto lhs = sweep(left_mask, lw);
    const auto rhs = sweep(right_mask, rw);
    for (const auto& [mask, lrange] : lhs) {
        auto it = rhs.find(mask);
        if (it == rhs.end()) continue;
        if (!(lrange.first == lrange.second && it->second.first == it->second.second &&
              lrange.first == it->second.first))
            return false;
    }
    return true;
}

LiftResult lift_ordered_member(const OrderSpec& ord, const Relation& rel, const Bundle& u,
                               const Bundle& v) {
    switch (ord.tag) {
        case OrderSpec::Tag::Equality:
            return lift_bundles(rel, u, v);
        case OrderSpec::Tag::KernelOf: {
            if (!alpha_applicable(ord.alpha, u) || !alpha_applicable(ord.alpha, v))
                throw mismatch_error(std::string("order kernel-") + alpha_name(ord.alpha) +
                                     " does not apply to these bundles");
            if (u.index() != v.index()) return {};
            // Reflection: (u,v) is in the kernel-relaxed lifting iff the
            // alpha-images are related by the plain lifting on the codomain.
            return lift_bundles(rel, alpha_bundle(ord.alpha, u), alpha_bundle(ord.alpha, v));
        }
        case OrderSpec::Tag::InducedFrom: {
            if (!alpha_applicable(ord.alpha, u) || !alpha_applicable(ord.alpha, v))
                throw mismatch_error(std::string("order induced-") + alpha_name(ord.alpha) +
                                     " does not apply to these bundles");
            if (u.index() != v.index()) return {};
            return lift_ordered_member(*ord.base, rel, alpha_bundle(ord.alpha, u),
                                       alpha_bundle(ord.alpha, v));
        }
        case OrderSpec::Tag::PowersetInclusion: {
            if (std::holds_alternative<MsBundle>(u) || std::holds_alternative<M1Bundle>(u) ||
                std::holds_alternative<MsBundle>(v) || std::holds_alternative<M1Bundle>(v))
                throw mismatch_error("inclusion order applies to set and distribution bundles only");
            if (u.index() != v.index()) return {};
            if (const auto* su = std::get_if<SetBundle>(&u)) {
                // u included in some w1, (w1,w2) lifted, w2 included in v:
                // equivalent to the forward clause alone.
                const auto& sv = std::get<SetBundle>(v);
                ArcPairCounts w;
                for (const auto& a : su->arcs) {
                    bool hit = false;
                    for (const auto& b : sv.arcs)
                        if (a.label == b.label && rel.contains(a.target, b.target)) {
                            w[{a, b}] = 1;
                            hit = true;
                        }
                    if (!hit) return {};
                }
                return {true, Coupling(std::move(w))};
            }
            // distribution side: the order degenerates to equality
            return lift_bundles(rel, u, v);
        }
        case OrderSpec::Tag::Extensional: {
            // A universe bundle is a valid relaxation step on a side only if
            // it lives over that side's carrier.
            auto within = [](const Bundle& b, const std::set<std::string>& carrier) {
                for (const auto& t : bundle_targets(b))
                    if (!carrier.count(t)) return false;
                return true;
            };
            std::vector<Bundle> ups{u}, downs{v};
            for (const auto& w : ord.universe) {
                if (!(w == u) && within(w, rel.left_carrier) && order_holds(ord, u, w))
                    ups.push_back(w);
                if (!(w == v) && within(w, rel.right_carrier) && order_holds(ord, w, v))
                    downs.push_back(w);
            }
            for (const auto& w1 : ups)
                for (const auto& w2 : downs) {
                    if (w1.index() != w2.index()) continue;
                    LiftResult r = lift_bundles(rel, w1, w2);
                    if (r.related) return r;
                }
            return {};
        }
    }
    return {};
}

std::string render_coupling(const Coupling& c) {
    std::ostringstream os;
    std::visit(
        [&os](const auto& cells) {
            bool first = true;
            for (const auto& [pair, w] : cells) {
                if (!first) os << " + ";
                first = false;
                using W = std::decay_t<decltype(w)>;
                if constexpr (std::is_same_v<W, Rat>)
                    os << w.str();
                else
                    os << w;
                using P = std::decay_t<decltype(pair.first)>;
                if constexpr (std::is_same_v<P, Arc>) {
                    os << "*((" << pair.first.label << "," << pair.first.target << "),("
                       << pair.second.label << "," << pair.second.target << "))";
                } else {
                    os << "*((" << pair.first.prob.str() << "," << pair.first.label << ","
                       << pair.first.target << "),(" << pair.second.prob.str() << ","
                       << pair.second.label << "," << pair.second.target << "))";
                }
            }
            if (first) os << "(empty)";
        },
        c);
    return os.str();
}

}  // namespace coalg
