#pragma once

#include <cstdint>

#include "coalg/system.hpp"

namespace coalg {

/// Bounds for random system generation. Identical parameters produce
/// byte-identical systems (the generator is std::mt19937_64, whose output
/// sequence is pinned by the standard).
struct GenParams {
    std::uint64_t seed = 0;
    int max_states = 4;        // <= 6
    int max_labels = 2;        // <= 3
    int max_multiplicity = 3;  // <= 3
    int max_denominator = 6;   // <= 6
    Kind kind = Kind::Lts;
    int max_bundle_size = 3;   // support size per state

    void check() const;
};

/// A valid random system of the requested kind. Probabilistic bundles are
/// built from integer weight compositions of a common denominator, so they
/// sum to exactly 1 by construction.
System gen_system(const GenParams& p);

/// As gen_system but with the state and label counts pinned, so systems over
/// a shared carrier can be generated and spliced.
System gen_system_sized(const GenParams& p, int n_states, int n_labels);

/// Copy of `sys` with one state's bundle regenerated. Same carrier, same
/// alphabet; useful for sampling near-identical system pairs.
System perturbed_copy(const GenParams& p, const System& sys);

/// Stable per-instance seed derivation for multi-instance runs.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace coalg
