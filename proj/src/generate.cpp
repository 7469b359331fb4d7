#include "coalg/generate.hpp"

#include <random>

namespace coalg {

void GenParams::check() const {
    if (max_states < 1 || max_states > 6) throw std::invalid_argument("max_states must be in 1..6");
    if (max_labels < 1 || max_labels > 3) throw std::invalid_argument("max_labels must be in 1..3");
    if (max_multiplicity < 1 || max_multiplicity > 3)
        throw std::invalid_argument("max_multiplicity must be in 1..3");
    if (max_denominator < 1 || max_denominator > 6)
        throw std::invalid_argument("max_denominator must be in 1..6");
    if (max_bundle_size < 1 || max_bundle_size > 4)
        throw std::invalid_argument("max_bundle_size must be in 1..4");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 over the combined value
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

struct Gen {
    std::mt19937_64 rng;
    const GenParams& p;
    std::vector<std::string> states;
    std::vector<std::string> labels;

    explicit Gen(const GenParams& params) : rng(params.seed), p(params) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    const std::string& pick(const std::vector<std::string>& v) {
        return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }

    MsBundle ms_bundle() {
        MsBundle b;
        const int k = uniform(0, p.max_bundle_size);
        for (int i = 0; i < k; ++i)
            b.ms.add({pick(labels), pick(states)},
                     static_cast<std::int64_t>(uniform(1, p.max_multiplicity)));
        return b;
    }

    SetBundle set_bundle() {
        SetBundle b;
        const int k = uniform(0, p.max_bundle_size);
        for (int i = 0; i < k; ++i) b.arcs.insert({pick(labels), pick(states)});
        return b;
    }

    // Nonempty bundles distribute an integer weight composition of a common
    // denominator W, so sum(count * prob) == W/W == 1 exactly.
    M1Bundle m1_bundle() {
        M1Bundle b;
        if (uniform(0, 4) == 0) return b;  // terminal state
        const int den = uniform(1, p.max_denominator);
        int rest = den;
        while (rest > 0) {
            const int mult = uniform(1, std::min(p.max_multiplicity, rest));
            const int w = uniform(1, rest / mult);
            b.ms.add({Rat(w, den), pick(labels), pick(states)}, mult);
            rest -= mult * w;
        }
        return b;
    }

    DistBundle dist_bundle() {
        DistBundle b;
        if (uniform(0, 4) == 0) return b;  // terminal state
        const int den = uniform(1, p.max_denominator);
        int rest = den;
        while (rest > 0) {
            const int w = uniform(1, rest);
            b.dist.add({pick(labels), pick(states)}, Rat(w, den));
            rest -= w;
        }
        return b;
    }
};

}  // namespace

namespace {

Bundle gen_bundle(Gen& g, Kind kind) {
    switch (kind) {
        case Kind::Lts: return g.set_bundle();
        case Kind::Mts: return g.ms_bundle();
        case Kind::Pmts: return g.m1_bundle();
        case Kind::Dts: return g.dist_bundle();
        case Kind::AltMts:
            return g.uniform(0, 1) ? Bundle(g.m1_bundle()) : Bundle(g.ms_bundle());
        case Kind::AltGts:
            return g.uniform(0, 1) ? Bundle(g.dist_bundle()) : Bundle(g.set_bundle());
    }
    return SetBundle{};
}

}  // namespace

System gen_system_sized(const GenParams& p, int n_states, int n_labels) {
    p.check();
    Gen g(p);
    System sys;
    sys.kind = p.kind;
    sys.name = std::string("gen-") + kind_name(p.kind);
    for (int i = 0; i < n_states; ++i) sys.states.push_back("q" + std::to_string(i));
    const std::vector<std::string> pool{"a", "b", "c"};
    for (int i = 0; i < n_labels; ++i) sys.labels.insert(pool[static_cast<std::size_t>(i)]);
    g.states = sys.states;
    g.labels = {sys.labels.begin(), sys.labels.end()};
    for (const auto& s : sys.states) sys.step.emplace(s, gen_bundle(g, p.kind));
    return sys;
}

System gen_system(const GenParams& p) {
    p.check();
    Gen g(p);
    const int n = g.uniform(1, p.max_states);
    const int nl = g.uniform(1, p.max_labels);
    GenParams inner = p;
    inner.seed = g.rng();
    return gen_system_sized(inner, n, nl);
}

System perturbed_copy(const GenParams& p, const System& sys) {
    GenParams inner = p;
    inner.kind = sys.kind;
    Gen g(inner);
    System out = sys;
    g.states = sys.states;
    g.labels = {sys.labels.begin(), sys.labels.end()};
    if (sys.states.empty() || g.labels.empty()) return out;
    const auto& victim =
        sys.states[static_cast<std::size_t>(g.uniform(0, static_cast<int>(sys.states.size()) - 1))];
    out.step[victim] = gen_bundle(g, sys.kind);
    return out;
}

}  // namespace coalg
