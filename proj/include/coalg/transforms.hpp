#pragma once

#include <cstdint>
#include <vector>

#include "coalg/system.hpp"

namespace coalg {

/// The three natural transformations implemented here:
///   support: multiset bundles -> set bundles (drop multiplicities)
///   dm:      probabilistic multiset bundles -> distribution bundles
///            (accumulate count * prob per (label, target))
///   dma:     alternating bundles, case-wise (support at nondeterministic
///            states, dm at probabilistic ones)
enum class AlphaKind { Support, Dm, Dma };

const char* alpha_name(AlphaKind a);
std::optional<AlphaKind> alpha_from_name(const std::string& s);

/// Domain and codomain system kinds of each transformation.
Kind alpha_domain_kind(AlphaKind a);
Kind alpha_image_kind(AlphaKind a);

/// Whether a bundle lies in the domain of the transformation.
bool alpha_applicable(AlphaKind a, const Bundle& b);

/// Apply the transformation to one bundle.
Bundle alpha_bundle(AlphaKind a, const Bundle& b);

/// Apply the transformation state-wise to a whole system.
System alpha_image(AlphaKind a, const System& sys);

/// True iff alpha(u) == alpha(v): the kernel equivalence of the
/// transformation, evaluated extensionally.
bool kernel_related(AlphaKind a, const Bundle& u, const Bundle& v);

/// The canonical section of alpha: lts -> mts with count 1 per arc,
/// dts -> pmts with one weighted arc per mass entry, alt-gts -> alt-mts
/// case-wise. alpha_image(alpha, canonical_representation(sys)) == sys.
System canonical_representation(const System& sys);

/// All representations of `sys` in which each element of each bundle is
/// realized with multiplicity m <= bound (distribution entries of mass p
/// become m copies of weight p/m). Deterministic order; throws limit_error
/// when more than `cap` systems would be produced.
std::vector<System> enumerate_representations(const System& sys, int bound,
                                              std::int64_t cap = 10000);

/// All bound-limited representations of a single bundle, in deterministic
/// order. Used by enumerate_representations and by the verification
/// harness's backtracking searches.
std::vector<Bundle> enumerate_bundle_representations(const Bundle& image, int bound);

/// Group bundles by their alpha-image. Classes keep the input's first-seen
/// order internally sorted; each class is paired with its image bundle
/// (the class representative under the quotient).
struct BundleClass {
    Bundle image;
    std::vector<Bundle> members;
};
std::vector<BundleClass> quotient_classes(AlphaKind a, const std::vector<Bundle>& elements);

}  // namespace coalg
