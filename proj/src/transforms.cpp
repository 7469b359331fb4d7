#include "coalg/transforms.hpp"

#include <algorithm>
#include <map>

namespace coalg {

const char* alpha_name(AlphaKind a) {
    switch (a) {
        case AlphaKind::Support: return "support";
        case AlphaKind::Dm: return "dm";
        case AlphaKind::Dma: return "dma";
    }
    return "?";
}

std::optional<AlphaKind> alpha_from_name(const std::string& s) {
    if (s == "support") return AlphaKind::Support;
    if (s == "dm") return AlphaKind::Dm;
    if (s == "dma") return AlphaKind::Dma;
    return std::nullopt;
}

Kind alpha_domain_kind(AlphaKind a) {
    switch (a) {
        case AlphaKind::Support: return Kind::Mts;
        case AlphaKind::Dm: return Kind::Pmts;
        case AlphaKind::Dma: return Kind::AltMts;
    }
    return Kind::Mts;
}

Kind alpha_image_kind(AlphaKind a) {
    switch (a) {
        case AlphaKind::Support: return Kind::Lts;
        case AlphaKind::Dm: return Kind::Dts;
        case AlphaKind::Dma: return Kind::AltGts;
    }
    return Kind::Lts;
}

bool alpha_applicable(AlphaKind a, const Bundle& b) {
    switch (a) {
        case AlphaKind::Support: return std::holds_alternative<MsBundle>(b);
        case AlphaKind::Dm: return std::holds_alternative<M1Bundle>(b);
        case AlphaKind::Dma:
            return std::holds_alternative<MsBundle>(b) || std::holds_alternative<M1Bundle>(b);
    }
    return false;
}

namespace {

SetBundle support_of(const MsBundle& b) {
    SetBundle out;
    for (const auto& [a, n] : b.ms.entries()) out.arcs.insert(a);
    return out;
}

DistBundle dm_of(const M1Bundle& b) {
    // Accumulate count * prob per (label, target); zero-weight entries
    // contribute no mass and vanish from the support.
    std::map<Arc, Rat> acc;
    for (const auto& [wa, n] : b.ms.entries()) acc[{wa.label, wa.target}] += wa.prob * Rat(n);
    DistBundle out;
    for (const auto& [a, m] : acc)
        if (!m.is_zero()) out.dist.add(a, m);
    return out;
}

}  // namespace

Bundle alpha_bundle(AlphaKind a, const Bundle& b) {
    if (!alpha_applicable(a, b))
        throw mismatch_error(std::string(alpha_name(a)) + " not applicable to a " +
                             bundle_kind_name(bundle_kind(b)) + " bundle");
    if (const auto* ms = std::get_if<MsBundle>(&b)) return support_of(*ms);
    return dm_of(std::get<M1Bundle>(b));
}

System alpha_image(AlphaKind a, const System& sys) {
    if (sys.kind != alpha_domain_kind(a))
        throw mismatch_error(std::string(alpha_name(a)) + " expects a " +
                             kind_name(alpha_domain_kind(a)) + " system, got " +
                             kind_name(sys.kind));
    System out;
    out.name = sys.name;
    out.kind = alpha_image_kind(a);
    out.states = sys.states;
    out.labels = sys.labels;
    for (const auto& s : sys.states) out.step.emplace(s, alpha_bundle(a, sys.bundle_of(s)));
    return out;
}

bool kernel_related(AlphaKind a, const Bundle& u, const Bundle& v) {
    if (!alpha_applicable(a, u) || !alpha_applicable(a, v))
        throw mismatch_error(std::string("kernel of ") + alpha_name(a) +
                             " not applicable to these bundles");
    // In the alternating case bundles of opposite polarity are never
    // kernel-related: their images live in different summands.
    if (u.index() != v.index()) return false;
    return alpha_bundle(a, u) == alpha_bundle(a, v);
}

namespace {

Bundle canonical_bundle(const Bundle& b) {
    return std::visit(
        [](const auto& bb) -> Bundle {
            using T = std::decay_t<decltype(bb)>;
            if constexpr (std::is_same_v<T, SetBundle>) {
                MsBundle out;
                for (const auto& a : bb.arcs) out.ms.add(a, 1);
                return out;
            } else if constexpr (std::is_same_v<T, DistBundle>) {
                M1Bundle out;
                for (const auto& [a, m] : bb.dist.entries())
                    out.ms.add({m, a.label, a.target}, 1);
                return out;
            } else {
                throw mismatch_error("canonical representation: input is not an image kind");
            }
        },
        b);
}

}  // namespace

System canonical_representation(const System& sys) {
    Kind target;
    switch (sys.kind) {
        case Kind::Lts: target = Kind::Mts; break;
        case Kind::Dts: target = Kind::Pmts; break;
        case Kind::AltGts: target = Kind::AltMts; break;
        default:
            throw mismatch_error(std::string("canonical representation undefined for ") +
                                 kind_name(sys.kind));
    }
    System out;
    out.name = sys.name;
    out.kind = target;
    out.states = sys.states;
    out.labels = sys.labels;
    for (const auto& s : sys.states) out.step.emplace(s, canonical_bundle(sys.bundle_of(s)));
    return out;
}

std::vector<Bundle> enumerate_bundle_representations(const Bundle& image, int bound) {
    if (bound < 1) throw std::invalid_argument("representation bound must be >= 1");
    return std::visit(
        [&](const auto& bb) -> std::vector<Bundle> {
            using T = std::decay_t<decltype(bb)>;
            if constexpr (std::is_same_v<T, SetBundle>) {
                std::vector<Arc> elems(bb.arcs.begin(), bb.arcs.end());
                std::vector<int> mult(elems.size(), 1);
                std::vector<Bundle> out;
                // odometer over per-element multiplicities
                while (true) {
                    MsBundle rep;
                    for (std::size_t i = 0; i < elems.size(); ++i) rep.ms.add(elems[i], mult[i]);
                    out.push_back(rep);
                    std::size_t i = elems.size();
                    while (i > 0 && mult[i - 1] == bound) mult[--i] = 1;
                    if (i == 0) break;
                    ++mult[i - 1];
                }
                return out;
            } else if constexpr (std::is_same_v<T, DistBundle>) {
                std::vector<std::pair<Arc, Rat>> elems(bb.dist.entries().begin(),
                                                       bb.dist.entries().end());
                std::vector<int> mult(elems.size(), 1);
                std::vector<Bundle> out;
                while (true) {
                    M1Bundle rep;
                    for (std::size_t i = 0; i < elems.size(); ++i) {
                        const auto& [a, m] = elems[i];
                        rep.ms.add({m / Rat(mult[i]), a.label, a.target}, mult[i]);
                    }
                    out.push_back(rep);
                    std::size_t i = elems.size();
                    while (i > 0 && mult[i - 1] == bound) mult[--i] = 1;
                    if (i == 0) break;
                    ++mult[i - 1];
                }
                return out;
            } else {
                throw mismatch_error("representation enumeration: input is not an image kind");
            }
        },
        image);
}

std::vector<System> enumerate_representations(const System& sys, int bound, std::int64_t cap) {
    System base = canonical_representation(sys);  // validates the kind
    std::vector<std::vector<Bundle>> choices;
    std::int64_t count = 1;
    for (const auto& s : sys.states) {
        choices.push_back(enumerate_bundle_representations(sys.bundle_of(s), bound));
        count *= static_cast<std::int64_t>(choices.back().size());
        if (count > cap)
            throw limit_error("representation enumeration exceeds cap of " + std::to_string(cap));
    }
    std::vector<System> out;
    std::vector<std::size_t> idx(sys.states.size(), 0);
    while (true) {
        System rep = base;
        for (std::size_t i = 0; i < sys.states.size(); ++i)
            rep.step[sys.states[i]] = choices[i][idx[i]];
        out.push_back(std::move(rep));
        std::size_t i = idx.size();
        while (i > 0 && idx[i - 1] + 1 == choices[i - 1].size()) idx[--i] = 0;
        if (i == 0) break;
        ++idx[i - 1];
    }
    return out;
}

std::vector<BundleClass> quotient_classes(AlphaKind a, const std::vector<Bundle>& elements) {
    std::vector<BundleClass> out;
    std::map<Bundle, std::size_t> index;
    for (const auto& e : elements) {
        Bundle img = alpha_bundle(a, e);
        auto [it, inserted] = index.emplace(img, out.size());
        if (inserted) out.push_back(BundleClass{img, {}});
        auto& members = out[it->second].members;
        if (std::find(members.begin(), members.end(), e) == members.end()) members.push_back(e);
    }
    for (auto& cls : out) std::sort(cls.members.begin(), cls.members.end());
    return out;
}

}  // namespace coalg
