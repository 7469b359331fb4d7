#pragma once

#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "coalg/transforms.hpp"

namespace coalg {

/// A functorial preorder on bundles, given intensionally or extensionally.
///
///   Equality            plain equality (bisimulation order)
///   PowersetInclusion   subset order on set bundles; on alternating image
///                       bundles the probabilistic side degenerates to
///                       equality and opposite polarities are unrelated
///   KernelOf(alpha)     u related to v iff alpha(u) == alpha(v)
///   InducedFrom(alpha, base)
///                       u related to v iff base holds on (alpha(u), alpha(v))
///   Extensional         validated pairs over a declared finite bundle
///                       universe, implicitly reflexive everywhere
struct OrderSpec {
    enum class Tag { Equality, PowersetInclusion, KernelOf, InducedFrom, Extensional };

    Tag tag = Tag::Equality;
    AlphaKind alpha = AlphaKind::Support;    // KernelOf, InducedFrom
    std::shared_ptr<OrderSpec> base;         // InducedFrom
    std::vector<Bundle> universe;            // Extensional
    std::set<std::pair<std::size_t, std::size_t>> pairs;  // indices into universe

    static OrderSpec equality() { return {}; }
    static OrderSpec powerset_inclusion();
    static OrderSpec kernel_of(AlphaKind a);
    static OrderSpec induced_from(AlphaKind a, OrderSpec base);
    /// Validates reflexivity (implicit) and transitivity over the universe;
    /// throws mismatch_error when a transitive consequence is missing.
    static OrderSpec extensional(std::vector<Bundle> universe,
                                 std::vector<std::pair<Bundle, Bundle>> related);

    std::string describe() const;
};

/// Membership of (u, v) in the preorder.
bool order_holds(const OrderSpec& ord, const Bundle& u, const Bundle& v);

/// The induced order on the domain of alpha: base evaluated on the images.
bool induced_order_related(AlphaKind a, const OrderSpec& base, const Bundle& u, const Bundle& v);

/// The projected order on the codomain of alpha over a finite universe of
/// domain bundles: the transitive closure of
///   { (alpha(x1), alpha(x1')) | x1, x1' in universe, x1 ordF x1' }
/// together with the diagonal. x and y must be alpha-images of universe
/// members or equal to each other.
bool projected_order_related(AlphaKind a, const OrderSpec& ord_f,
                             const std::vector<Bundle>& universe, const Bundle& x,
                             const Bundle& y);

/// All pairs of the projected order over the universe's images, packaged as
/// an extensional order on the codomain functor.
OrderSpec projected_order(AlphaKind a, const OrderSpec& ord_f, const std::vector<Bundle>& universe);

}  // namespace coalg
