#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "coalg/order.hpp"
#include "coalg/system.hpp"

namespace coalg {

/// Witness for a lifted-relation membership: a weighted pairing of bundle
/// elements whose support respects the relation and the label/weight
/// equality rules, and whose marginals reproduce the two bundles (counts for
/// multiset kinds, masses for distributions, supports for sets).
using ArcPairCounts = std::map<std::pair<Arc, Arc>, std::int64_t>;
using WeightedArcPairCounts = std::map<std::pair<WeightedArc, WeightedArc>, std::int64_t>;
using ArcPairMasses = std::map<std::pair<Arc, Arc>, Rat>;
using Coupling = std::variant<ArcPairCounts, WeightedArcPairCounts, ArcPairMasses>;

struct LiftResult {
    bool related = false;
    std::optional<Coupling> witness;  // present iff related
};

std::string render_coupling(const Coupling& c);

/// Membership of (u, v) in the relation lifting of the given functor kind:
///   Set:  forward and backward clauses with equal labels
///   Ms:   an integer coupling with marginals equal to the two count maps,
///         supported on label-equal, related pairs
///   M1:   as Ms, additionally requiring exact weight equality per pair
///   Dist: a rational coupling with marginals equal to the two mass maps
/// Both bundles must be of the declared kind and their targets must lie in
/// the relation's carriers.
LiftResult lift_member(BundleKind kind, const Relation& rel, const Bundle& u, const Bundle& v);

/// Variant-dispatching form used on alternating systems: bundles of
/// different polarity are never related.
LiftResult lift_bundles(const Relation& rel, const Bundle& u, const Bundle& v);

/// The subset-condition reading of the distribution lifting: for all subsets
/// U of supp(u) and V of supp(v), if the related element pairs reaching U
/// from the left are exactly those reaching V from the right, then the two
/// subsets carry equal mass. Supports are capped (default 10 elements each).
bool lift_dist_subsets_member(const Relation& rel, const DistBundle& u, const DistBundle& v,
                              std::size_t support_cap = 10);

/// Membership in the order-relaxed lifting (order o Rel(F) o order).
/// Equality delegates to lift_member; KernelOf and InducedFrom are decided
/// on the alpha-images of the bundles; PowersetInclusion reduces to the
/// forward clause on set bundles; Extensional searches the declared
/// universe for the two relaxation steps.
LiftResult lift_ordered_member(const OrderSpec& ord, const Relation& rel, const Bundle& u,
                               const Bundle& v);

}  // namespace coalg
