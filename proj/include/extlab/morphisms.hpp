#pragma once

// Homomorphism search by backtracking on the images of a greedy generating
// set. Automorphisms, isomorphisms and abelian hom-sets are all instances.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "extlab/group.hpp"

namespace extlab {

// Extra per-element constraint on a partial map: admissible(x, image_of_x).
using Admissible = std::function<bool(Element, Element)>;

namespace detail {

template <class Visit>
class HomSearch {
public:
    HomSearch(const FiniteGroup& G, const FiniteGroup& H, bool bijective, const Admissible& adm,
              Visit& visit)
        : G_(G), H_(H), bijective_(bijective), adm_(adm), visit_(visit),
          gens_(greedy_generators(G)) {
        for (auto g : gens_) {
            std::vector<Element> cands;
            for (Element h = 0; h < H.order(); ++h) {
                const auto og = G.element_order(g), oh = H.element_order(h);
                if (bijective ? (og != oh || G.class_sizes()[g] != H.class_sizes()[h])
                              : (og % oh != 0))
                    continue;
                if (adm_ && !adm_(g, h)) continue;
                cands.push_back(h);
            }
            cand_lists_.push_back(std::move(cands));
        }
        images_.assign(gens_.size(), 0);
    }

    void run() {
        if (bijective_ && G_.order() != H_.order()) return;
        if (gens_.empty()) {
            std::vector<Element> img{0};
            if ((!adm_ || adm_(0, 0))) visit_(img);
            return;
        }
        recurse(0);
    }

private:
    // Extends the map over <g_0..g_level>; false on inconsistency.
    bool extend(std::size_t level, std::vector<Element>& map) {
        constexpr Element kUnset = ~Element{0};
        map.assign(G_.order(), kUnset);
        std::vector<bool> used;
        if (bijective_) used.assign(H_.order(), false);
        std::vector<Element> queue{0};
        map[0] = 0;
        if (bijective_) used[0] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Element x = queue[head];
            for (std::size_t i = 0; i <= level; ++i) {
                const Element y = G_.mul(x, gens_[i]);
                const Element fy = H_.mul(map[x], images_[i]);
                if (map[y] == kUnset) {
                    if (bijective_) {
                        if (used[fy]) return false;
                        used[fy] = true;
                    }
                    if (adm_ && !adm_(y, fy)) return false;
                    map[y] = fy;
                    queue.push_back(y);
                } else if (map[y] != fy) {
                    return false;
                }
            }
        }
        return true;
    }

    bool recurse(std::size_t level) {
        std::vector<Element> map;
        for (auto h : cand_lists_[level]) {
            images_[level] = h;
            if (!extend(level, map)) continue;
            if (level + 1 == gens_.size()) {
                if (!visit_(static_cast<const std::vector<Element>&>(map))) return false;
            } else if (!recurse(level + 1)) {
                return false;
            }
        }
        return true;
    }

    const FiniteGroup& G_;
    const FiniteGroup& H_;
    bool bijective_;
    const Admissible& adm_;
    Visit& visit_;
    std::vector<Element> gens_;
    std::vector<std::vector<Element>> cand_lists_;
    std::vector<Element> images_;
};

inline void check_cap(const FiniteGroup& G, const Limits& limits, const char* what) {
    if (G.order() > limits.max_group_order)
        throw CapExceeded(std::string(what) + ": group " + G.label() + " of order " +
                              std::to_string(G.order()) + " exceeds search cap",
                          limits.max_group_order);
}

}  // namespace detail

// Calls visit(image) for every homomorphism G -> H (bijective ones only when
// requested) in lexicographic order of generator images. visit returns false
// to stop the search.
template <class Visit>
void for_each_homomorphism(const FiniteGroup& G, const FiniteGroup& H, bool bijective,
                           Visit&& visit, const Admissible& admissible = {}) {
    detail::HomSearch<std::remove_reference_t<Visit>> search(G, H, bijective, admissible, visit);
    search.run();
}

inline std::vector<GroupMap> automorphisms(const FiniteGroup& G, const Limits& limits = {}) {
    detail::check_cap(G, limits, "automorphisms");
    std::vector<GroupMap> out;
    for_each_homomorphism(G, G, true, [&](const std::vector<Element>& img) {
        out.push_back({G, G, img});
        return true;
    });
    std::sort(out.begin(), out.end(),
              [](const GroupMap& a, const GroupMap& b) { return a.image < b.image; });
    return out;
}

inline std::vector<GroupMap> commuting_automorphisms(const FiniteGroup& G,
                                                     const Limits& limits = {}) {
    std::vector<GroupMap> out;
    for (auto& rho : automorphisms(G, limits)) {
        bool ok = true;
        for (Element x = 0; x < G.order() && ok; ++x)
            ok = G.mul(rho(x), x) == G.mul(x, rho(x));
        if (ok) out.push_back(std::move(rho));
    }
    return out;
}

inline std::vector<GroupMap> central_automorphisms(const FiniteGroup& G,
                                                   const Limits& limits = {}) {
    const Subgroup Z = center(G);
    std::vector<GroupMap> out;
    for (auto& rho : automorphisms(G, limits)) {
        bool ok = true;
        for (Element x = 0; x < G.order() && ok; ++x) ok = Z.contains(G.mul(rho(x), G.inv(x)));
        if (ok) out.push_back(std::move(rho));
    }
    return out;
}

namespace detail {

inline std::vector<std::size_t> sorted_orders(const FiniteGroup& G) {
    auto v = G.element_orders();
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace detail

// First isomorphism G -> H in search order, satisfying admissible when given.
inline std::optional<GroupMap> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H,
                                                const Limits& limits = {},
                                                const Admissible& admissible = {}) {
    detail::check_cap(G, limits, "isomorphism search");
    detail::check_cap(H, limits, "isomorphism search");
    if (G.order() != H.order()) return std::nullopt;
    if (detail::sorted_orders(G) != detail::sorted_orders(H)) return std::nullopt;
    if (center(G).order() != center(H).order()) return std::nullopt;
    if (derived_subgroup(G).subgroup.order() != derived_subgroup(H).subgroup.order())
        return std::nullopt;
    std::optional<GroupMap> found;
    for_each_homomorphism(
        G, H, true,
        [&](const std::vector<Element>& img) {
            found = GroupMap{G, H, img};
            return false;
        },
        admissible);
    return found;
}

// Ground-truth abstract isomorphism test.
inline std::optional<GroupMap> isomorphic_oracle(const FiniteGroup& G, const FiniteGroup& H,
                                                 const Limits& limits = {}) {
    if (G.same_table(H)) {
        detail::check_cap(G, limits, "isomorphism search");
        return GroupMap{G, H, GroupMap::identity(G).image};
    }
    return find_isomorphism(G, H, limits);
}

// All homomorphisms between abelian groups, sorted by image table.
inline std::vector<GroupMap> hom_set(const FiniteGroup& A, const FiniteGroup& B,
                                     const Limits& limits = {}) {
    if (!A.is_abelian() || !B.is_abelian())
        throw InvalidInput("hom_set is only defined here for abelian groups");
    detail::check_cap(A, limits, "hom_set");
    detail::check_cap(B, limits, "hom_set");
    std::vector<GroupMap> out;
    for_each_homomorphism(A, B, false, [&](const std::vector<Element>& img) {
        out.push_back({A, B, img});
        return true;
    });
    std::sort(out.begin(), out.end(),
              [](const GroupMap& a, const GroupMap& b) { return a.image < b.image; });
    return out;
}

}  // namespace extlab
