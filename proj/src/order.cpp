#include "coalg/order.hpp"

#include <algorithm>

namespace coalg {

OrderSpec OrderSpec::powerset_inclusion() {
    OrderSpec o;
    o.tag = Tag::PowersetInclusion;
    return o;
}

OrderSpec OrderSpec::kernel_of(AlphaKind a) {
    OrderSpec o;
    o.tag = Tag::KernelOf;
    o.alpha = a;
    return o;
}

OrderSpec OrderSpec::induced_from(AlphaKind a, OrderSpec base) {
    OrderSpec o;
    o.tag = Tag::InducedFrom;
    o.alpha = a;
    o.base = std::make_shared<OrderSpec>(std::move(base));
    return o;
}

OrderSpec OrderSpec::extensional(std::vector<Bundle> universe,
                                 std::vector<std::pair<Bundle, Bundle>> related) {
    OrderSpec o;
    o.tag = Tag::Extensional;
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    o.universe = std::move(universe);
    auto index_of = [&o](const Bundle& b) -> std::size_t {
        auto it = std::lower_bound(o.universe.begin(), o.universe.end(), b);
        if (it == o.universe.end() || !(*it == b))
            throw mismatch_error("extensional order: bundle outside the declared universe");
        return static_cast<std::size_t>(it - o.universe.begin());
    };
    for (std::size_t i = 0; i < o.universe.size(); ++i) o.pairs.insert({i, i});
    for (const auto& [u, v] : related) o.pairs.insert({index_of(u), index_of(v)});
    // transitivity is validated, not closed over
    for (const auto& [a, b] : o.pairs)
        for (const auto& [c, d] : o.pairs)
            if (b == c && !o.pairs.count({a, d}))
                throw mismatch_error("extensional order: not transitive");
    return o;
}

std::string OrderSpec::describe() const {
    switch (tag) {
        case Tag::Equality: return "equality";
        case Tag::PowersetInclusion: return "inclusion";
        case Tag::KernelOf: return std::string("kernel-") + alpha_name(alpha);
        case Tag::InducedFrom:
            return std::string("induced-") + alpha_name(alpha) + "(" + base->describe() + ")";
        case Tag::Extensional:
            return "extensional(" + std::to_string(universe.size()) + " bundles)";
    }
    return "?";
}

namespace {

bool inclusion_holds(const Bundle& u, const Bundle& v) {
    if (u.index() != v.index()) return false;
    if (const auto* su = std::get_if<SetBundle>(&u)) {
        const auto& sv = std::get<SetBundle>(v);
        return std::includes(sv.arcs.begin(), sv.arcs.end(), su->arcs.begin(), su->arcs.end());
    }
    // Distributions (and anything else) admit no strict inclusion step;
    // the order degenerates to equality there.
    return u == v;
}

}  // namespace

bool order_holds(const OrderSpec& ord, const Bundle& u, const Bundle& v) {
    switch (ord.tag) {
        case OrderSpec::Tag::Equality:
            return u == v;
        case OrderSpec::Tag::PowersetInclusion:
            return inclusion_holds(u, v);
        case OrderSpec::Tag::KernelOf:
            return kernel_related(ord.alpha, u, v);
        case OrderSpec::Tag::InducedFrom:
            return order_holds(*ord.base, alpha_bundle(ord.alpha, u), alpha_bundle(ord.alpha, v));
        case OrderSpec::Tag::Extensional: {
            if (u == v) return true;
            auto lo = std::lower_bound(ord.universe.begin(), ord.universe.end(), u);
            auto hi = std::lower_bound(ord.universe.begin(), ord.universe.end(), v);
            if (lo == ord.universe.end() || !(*lo == u)) return false;
            if (hi == ord.universe.end() || !(*hi == v)) return false;
            return ord.pairs.count({static_cast<std::size_t>(lo - ord.universe.begin()),
                                    static_cast<std::size_t>(hi - ord.universe.begin())}) != 0;
        }
    }
    return false;
}

bool induced_order_related(AlphaKind a, const OrderSpec& base, const Bundle& u, const Bundle& v) {
    if (!alpha_applicable(a, u) || !alpha_applicable(a, v))
        throw mismatch_error(std::string("induced order: ") + alpha_name(a) +
                             " not applicable to these bundles");
    if (u.index() != v.index()) return false;
    return order_holds(base, alpha_bundle(a, u), alpha_bundle(a, v));
}

OrderSpec projected_order(AlphaKind a, const OrderSpec& ord_f, const std::vector<Bundle>& universe) {
    std::vector<Bundle> images;
    for (const auto& b : universe) images.push_back(alpha_bundle(a, b));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());

    const std::size_t n = images.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
    auto idx = [&images](const Bundle& b) {
        return static_cast<std::size_t>(
            std::lower_bound(images.begin(), images.end(), b) - images.begin());
    };
    for (const auto& x1 : universe)
        for (const auto& x2 : universe)
            if (order_holds(ord_f, x1, x2)) rel[idx(alpha_bundle(a, x1))][idx(alpha_bundle(a, x2))] = true;
    // transitive closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (rel[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (rel[k][j]) rel[i][j] = true;

    OrderSpec out;
    out.tag = OrderSpec::Tag::Extensional;
    out.universe = images;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rel[i][j]) out.pairs.insert({i, j});
    return out;
}

bool projected_order_related(AlphaKind a, const OrderSpec& ord_f,
                             const std::vector<Bundle>& universe, const Bundle& x,
                             const Bundle& y) {
    if (x == y) return true;
    OrderSpec proj = projected_order(a, ord_f, universe);
    auto in_universe = [&proj](const Bundle& b) {
        return std::binary_search(proj.universe.begin(), proj.universe.end(), b);
    };
    if (!in_universe(x) || !in_universe(y))
        throw mismatch_error("projected order: element outside the declared universe's images");
    return order_holds(proj, x, y);
}

}  // namespace coalg
