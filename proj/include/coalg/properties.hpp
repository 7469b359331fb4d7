#pragma once

#include <string>
#include <vector>

#include "coalg/generate.hpp"

namespace coalg {

/// Outcome of a property run. `failures` holds one fully serialized entry
/// per failing instance; empty means the property passed.
struct CheckReport {
    std::string property_id;
    int instances = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;

    bool passed() const { return failures.empty(); }
};

/// The verification properties:
///   P1  bisimulations survive the natural transformations
///   P2  kernel simulations on representations = bisimulations on images
///   P3  near-injective image bisimulations lift to representation pairs
///   P4  coupling oracle vs subset-condition oracle on distributions
///   P5  probabilistic bisimilarity coincides three ways
///   P6  simulations survive the transformations under the projected order
///   P7  induced-order simulations = base-order simulations on images
///   P8  equality-order simulation checker = bisimulation checker
///   P9  alternating bisimulations = kernel-dma simulations
///   P10 bounded witness search cross-checks the kernel lifting shortcut
std::vector<std::string> known_properties();
std::string property_title(const std::string& id);

/// Run `instances` generated checks of one property. Bounds come from the
/// GenParams (its kind field is ignored; properties pick their own kinds).
/// Reports are deterministic in (property_id, params.seed, instances),
/// whatever the job count.
CheckReport run_check(const std::string& property_id, const GenParams& params, int instances,
                      int jobs = 1);

/// Replay the bundled worked examples as golden checks.
CheckReport run_fixture_suite();

std::string render_report(const CheckReport& report);

}  // namespace coalg
