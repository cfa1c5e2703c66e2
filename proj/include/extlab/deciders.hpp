#pragma once

// Deciders for the isomorphism notions between perturbed direct products
// sharing (G2, G1), with certificates and brute-force oracles.
//
// Block convention (see assemble_map):
//   phi(x,y) = (phi11(x) + phi12(y) + eps2(phi21(x), phi22(y)), phi21(x) phi22(y)).
// With phi21 trivial the homomorphism condition is
//   phi11 o eps1 - eps2 o (phi22 x phi22) = d(phi12).

#include <algorithm>
#include <map>
#include <numeric>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "extlab/cohomology.hpp"
#include "extlab/extension.hpp"
#include "extlab/morphisms.hpp"

namespace extlab {

// Cached data for one (G2, G1) pair. Lazily filled; call warm() before
// sharing across threads.
class DeciderContext {
public:
    DeciderContext(FiniteGroup base, AbelianModule coeffs, Limits limits = {})
        : base_(std::move(base)), coeffs_(std::move(coeffs)), limits_(limits),
          coeff_group_(coeffs_.as_group()) {}

    const FiniteGroup& base() const { return base_; }
    const AbelianModule& coeffs() const { return coeffs_; }
    const Limits& limits() const { return limits_; }
    const FiniteGroup& coeff_group() const { return coeff_group_; }

    const std::shared_ptr<const CocycleSpace>& space() {
        if (!space_) space_ = compute_spaces(base_, coeffs_, limits_);
        return space_;
    }
    const StructureReport& structure() {
        if (!structure_) structure_ = structure_predicates(base_);
        return *structure_;
    }
    // Aut(G1) on module element indices, sorted.
    const std::vector<std::vector<Element>>& coeff_automorphisms() {
        if (!coeff_aut_) coeff_aut_ = images(automorphisms(coeff_group_, limits_));
        return *coeff_aut_;
    }
    // End(G1), sorted.
    const std::vector<std::vector<Element>>& coeff_endomorphisms() {
        if (!coeff_end_) coeff_end_ = images(hom_set(coeff_group_, coeff_group_, limits_));
        return *coeff_end_;
    }
    const std::vector<GroupMap>& base_automorphisms() {
        if (!aut_) aut_ = automorphisms(base_, limits_);
        return *aut_;
    }
    const std::vector<GroupMap>& commuting() {
        if (!commuting_) commuting_ = filter(base_automorphisms(), [&](const GroupMap& r) {
            for (Element x = 0; x < base_.order(); ++x)
                if (base_.mul(r(x), x) != base_.mul(x, r(x))) return false;
            return true;
        });
        return *commuting_;
    }
    const std::vector<GroupMap>& central() {
        if (!central_) {
            const auto Z = center(base_);
            central_ = filter(base_automorphisms(), [&](const GroupMap& r) {
                for (Element x = 0; x < base_.order(); ++x)
                    if (!Z.contains(base_.mul(r(x), base_.inv(x)))) return false;
                return true;
            });
        }
        return *central_;
    }
    const std::vector<GroupMap>& identity_only() {
        if (!identity_) identity_ = std::vector<GroupMap>{GroupMap::identity(base_)};
        return *identity_;
    }
    // Hom(G1, Z(G2)) with values in G2, sorted.
    const std::vector<std::vector<Element>>& center_homs() {
        if (!center_homs_) {
            const auto Z = center(base_);
            const auto ZG = Z.as_group();
            std::vector<std::vector<Element>> out;
            for (auto& h : hom_set(coeff_group_, ZG, limits_)) {
                std::vector<Element> img(h.image.size());
                for (std::size_t i = 0; i < img.size(); ++i) img[i] = Z.elements()[h.image[i]];
                out.push_back(std::move(img));
            }
            std::sort(out.begin(), out.end());
            center_homs_ = std::move(out);
        }
        return *center_homs_;
    }
    // Hom(G2, G1) as module element indices, sorted.
    const std::vector<std::vector<Element>>& base_to_coeff_homs() {
        if (!chars_) {
            std::vector<std::vector<Element>> out;
            for_each_homomorphism(base_, coeff_group_, false, [&](const std::vector<Element>& img) {
                out.push_back(img);
                return true;
            });
            std::sort(out.begin(), out.end());
            chars_ = std::move(out);
        }
        return *chars_;
    }

    void warm() {
        space();
        structure();
        coeff_automorphisms();
        coeff_endomorphisms();
        base_automorphisms();
        commuting();
        central();
        identity_only();
        center_homs();
        base_to_coeff_homs();
    }

private:
    static std::vector<std::vector<Element>> images(const std::vector<GroupMap>& maps) {
        std::vector<std::vector<Element>> out;
        for (auto& m : maps) out.push_back(m.image);
        std::sort(out.begin(), out.end());
        return out;
    }
    template <class Pred>
    static std::vector<GroupMap> filter(const std::vector<GroupMap>& in, Pred pred) {
        std::vector<GroupMap> out;
        for (auto& r : in)
            if (pred(r)) out.push_back(r);
        return out;
    }

    FiniteGroup base_;
    AbelianModule coeffs_;
    Limits limits_;
    FiniteGroup coeff_group_;
    std::shared_ptr<const CocycleSpace> space_;
    std::optional<StructureReport> structure_;
    std::optional<std::vector<std::vector<Element>>> coeff_aut_, coeff_end_, center_homs_, chars_;
    std::optional<std::vector<GroupMap>> aut_, commuting_, central_, identity_;
};

enum class Verdict { Yes, No, HypothesisNotMet, CapExceeded };
enum class IsoMode { G2, HG2, Upper, UpperA, UpperC, Abstract };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::HypothesisNotMet: return "hypothesis-not-met";
        case Verdict::CapExceeded: return "cap-exceeded";
    }
    return "?";
}

inline const char* to_string(IsoMode m) {
    switch (m) {
        case IsoMode::G2: return "g2";
        case IsoMode::HG2: return "hg2";
        case IsoMode::Upper: return "upper";
        case IsoMode::UpperA: return "upper-a";
        case IsoMode::UpperC: return "upper-c";
        case IsoMode::Abstract: return "abstract";
    }
    return "?";
}

inline IsoMode parse_mode(const std::string& s) {
    for (auto m : {IsoMode::G2, IsoMode::HG2, IsoMode::Upper, IsoMode::UpperA, IsoMode::UpperC,
                   IsoMode::Abstract})
        if (s == to_string(m)) return m;
    throw InvalidInput("unknown isomorphism mode '" + s +
                       "' (expected g2, hg2, upper, upper-a, upper-c or abstract)");
}

struct IsoDecision {
    Verdict verdict = Verdict::No;
    IsoMode mode = IsoMode::Upper;
    std::optional<MatrixHom> certificate;
    std::optional<OneCochain> eta;  // hg2 witness
    std::string path;               // which procedure decided
    std::string refuted_by;
    std::map<std::string, bool> hypothesis_gates;

    bool yes() const { return verdict == Verdict::Yes; }
};

namespace detail {

inline void require_pair(const Cochain2& e1, const Cochain2& e2, const DeciderContext& ctx) {
    if (!e1.same_domain(e2)) throw InvalidInput("cocycles have different base or coefficients");
    if (!e1.base().same_table(ctx.base()) || !(e1.coeffs() == ctx.coeffs()))
        throw InvalidInput("cocycles do not match the decider context");
}

}  // namespace detail

// First (sigma, rho), sigma in Aut(G1) and rho in rhos (both in list
// order), with sigma o eps1 - rho^* eps2 in B^2. Blocks (sigma, eta; 1, rho).
inline std::optional<MatrixHom> upper_criterion(DeciderContext& ctx, const Cochain2& e1,
                                                const Cochain2& e2, const std::vector<GroupMap>& rhos) {
    const auto& S = *ctx.space();
    std::vector<Cochain2> pulled;
    pulled.reserve(rhos.size());
    for (auto& rho : rhos) pulled.push_back(S.canonical(pullback(e2, rho)));
    for (auto& sigma : ctx.coeff_automorphisms()) {
        const auto pushed = S.canonical(pushforward(sigma, e1));
        for (std::size_t r = 0; r < rhos.size(); ++r) {
            if (!(pushed == pulled[r])) continue;
            auto eta = is_coboundary(pushforward(sigma, e1) - pullback(e2, rhos[r]));
            if (!eta) throw std::logic_error("canonical forms agree but no coboundary witness");
            return upper_blocks(sigma, *eta, rhos[r].image);
        }
    }
    return std::nullopt;
}

// Exact search for isomorphisms with phi22 in rhos: phi11 in End(G1),
// phi21 in Hom(G1, Z(G2)), phi12 solved linearly and then shifted through
// Hom(G2, G1) until the assembled map is bijective.
inline std::optional<MatrixHom> structured_search(DeciderContext& ctx, const Cochain2& e1,
                                                  const Cochain2& e2,
                                                  const std::vector<GroupMap>& rhos) {
    const auto& G = ctx.base();
    const auto& M = ctx.coeffs();
    const std::size_t n = G.order(), m = M.order();
    std::vector<std::vector<Element>> add(m, std::vector<Element>(m)), sub(m, std::vector<Element>(m));
    for (Element a = 0; a < m; ++a)
        for (Element b = 0; b < m; ++b) {
            add[a][b] = M.index_of(M.add(M.vector_of(a), M.vector_of(b)));
            sub[a][b] = M.index_of(M.sub(M.vector_of(a), M.vector_of(b)));
        }
    std::vector<Element> t1(n * n), t2(n * n);
    for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) {
            t1[y * n + z] = e1.index_at(y, z);
            t2[y * n + z] = e2.index_at(y, z);
        }
    for (auto& rho : rhos) {
        std::vector<Element> rho_inv(n);
        for (Element y = 0; y < n; ++y) rho_inv[rho(y)] = y;
        for (auto& f11 : ctx.coeff_endomorphisms())
            for (auto& f21 : ctx.center_homs()) {
                // Phi0(x,y) without phi12
                auto first = [&](Element x, Element y) { return add[f11[x]][t2[f21[x] * n + rho(y)]]; };
                auto second = [&](Element x, Element y) { return G.mul(f21[x], rho(y)); };
                std::vector<Element> D(n * n);
                bool ok = true;
                for (Element y = 0; y < n && ok; ++y)
                    for (Element y2 = 0; y2 < n && ok; ++y2)
                        for (Element x = 0; x < m && ok; ++x)
                            for (Element x2 = 0; x2 < m && ok; ++x2) {
                                const Element px = add[add[x][x2]][t1[y * n + y2]];
                                const Element py = G.mul(y, y2);
                                const Element s1 = second(x, y), s2 = second(x2, y2);
                                if (second(px, py) != G.mul(s1, s2)) {
                                    ok = false;
                                    break;
                                }
                                const Element d = sub[sub[sub[first(px, py)][first(x, y)]][first(x2, y2)]]
                                                     [t2[s1 * n + s2]];
                                if (x == 0 && x2 == 0)
                                    D[y * n + y2] = d;
                                else if (D[y * n + y2] != d)
                                    ok = false;
                            }
                if (!ok) continue;
                Cochain2 Dc(G, M);
                for (Element y = 0; y < n && ok; ++y)
                    for (Element y2 = 0; y2 < n && ok; ++y2) {
                        if ((y == 0 || y2 == 0) && D[y * n + y2] != 0) ok = false;
                        else if (y != 0 && y2 != 0) Dc.set(y, y2, M.vector_of(D[y * n + y2]));
                    }
                if (!ok || !is_cocycle(Dc)) continue;
                auto eta = is_coboundary(Dc);
                if (!eta) continue;
                const auto base12 = eta->index_table();
                for (auto& chi : ctx.base_to_coeff_homs()) {
                    std::vector<Element> f12(n);
                    for (Element y = 0; y < n; ++y) f12[y] = add[base12[y]][chi[y]];
                    // kernel of the assembled homomorphism
                    bool injective = true;
                    for (Element x = 0; x < m && injective; ++x) {
                        const Element y = rho_inv[G.inv(f21[x])];
                        if (x == 0 && y == 0) continue;
                        if (add[first(x, y)][f12[y]] == 0) injective = false;
                    }
                    if (injective) return MatrixHom{f11, f12, f21, rho.image};
                }
            }
    }
    return std::nullopt;
}

namespace detail {

inline IsoDecision cap_decision(IsoMode mode, const CapExceeded& e) {
    IsoDecision d;
    d.mode = mode;
    d.verdict = Verdict::CapExceeded;
    d.refuted_by = e.what();
    return d;
}

}  // namespace detail

// sigma-criterion: some sigma in Aut(G1) with sigma o eps1 - eps2 in B^2.
inline IsoDecision decide_sigma_criterion(DeciderContext& ctx, const Cochain2& e1, const Cochain2& e2,
                                          IsoMode mode = IsoMode::G2) {
    detail::require_pair(e1, e2, ctx);
    IsoDecision d;
    d.mode = mode;
    d.path = "sigma-criterion";
    try {
        if (auto m = upper_criterion(ctx, e1, e2, ctx.identity_only())) {
            d.verdict = Verdict::Yes;
            d.certificate = std::move(*m);
        } else {
            d.refuted_by = "no sigma in Aut(G1) makes sigma o eps1 - eps2 a coboundary";
        }
    } catch (const CapExceeded& e) {
        return detail::cap_decision(mode, e);
    }
    return d;
}

inline IsoDecision decide_g2_iso(DeciderContext& ctx, const Cochain2& e1, const Cochain2& e2) {
    detail::require_pair(e1, e2, ctx);
    const bool centerless = ctx.structure().is_centerless;
    if (centerless) {
        auto d = decide_sigma_criterion(ctx, e1, e2, IsoMode::G2);
        d.path = "centerless";
        d.hypothesis_gates["centerless"] = true;
        return d;
    }
    IsoDecision d;
    d.mode = IsoMode::G2;
    d.path = "general";
    d.hypothesis_gates["centerless"] = false;
    try {
        if (auto m = structured_search(ctx, e1, e2, ctx.identity_only())) {
            d.verdict = Verdict::Yes;
            d.certificate = std::move(*m);
        } else {
            d.refuted_by = "no isomorphism with phi22 = id exists";
        }
    } catch (const CapExceeded& e) {
        return detail::cap_decision(IsoMode::G2, e);
    }
    return d;
}

inline IsoDecision decide_hg2_iso(DeciderContext& ctx, const Cochain2& e1, const Cochain2& e2) {
    detail::require_pair(e1, e2, ctx);
    IsoDecision d;
    d.mode = IsoMode::HG2;
    d.path = "coboundary";
    if (auto eta = is_coboundary(e1 - e2)) {
        d.verdict = Verdict::Yes;
        std::vector<Element> id(ctx.coeffs().order());
        std::iota(id.begin(), id.end(), Element{0});
        std::vector<Element> idg(ctx.base().order());
        std::iota(idg.begin(), idg.end(), Element{0});
        d.certificate = upper_blocks(id, *eta, idg);
        d.eta = std::move(*eta);
    } else {
        d.refuted_by = "eps1 - eps2 is not a coboundary";
    }
    return d;
}

namespace detail {

inline IsoDecision decide_upper_with(DeciderContext& ctx, const Cochain2& e1, const Cochain2& e2,
                                     IsoMode mode, const std::vector<GroupMap>& (DeciderContext::*rhos)()) {
    require_pair(e1, e2, ctx);
    IsoDecision d;
    d.mode = mode;
    d.path = "criterion";
    try {
        if (auto m = upper_criterion(ctx, e1, e2, (ctx.*rhos)())) {
            d.verdict = Verdict::Yes;
            d.certificate = std::move(*m);
        } else {
            d.refuted_by = "no (sigma, rho) pair makes sigma o eps1 - rho^* eps2 a coboundary";
        }
    } catch (const CapExceeded& e) {
        return cap_decision(mode, e);
    }
    return d;
}

}  // namespace detail

inline IsoDecision decide_upper_iso(DeciderContext& ctx, const Cochain2& e1, const Cochain2& e2) {
    return detail::decide_upper_with(ctx, e1, e2, IsoMode::Upper, &DeciderContext::base_automorphisms);
}

namespace detail {

inline bool centerless_perfect(DeciderContext& ctx) {
    return ctx.structure().is_centerless && ctx.structure().is_perfect;
}

}  // namespace detail

inline IsoDecision decide_upper_a_iso(DeciderContext& ctx, const Cochain2& e1, const Cochain2& e2,
                                      bool allow_fast_path = true) {
    if (allow_fast_path && detail::centerless_perfect(ctx)) {
        auto d = decide_sigma_criterion(ctx, e1, e2, IsoMode::UpperA);
        d.path = "centerless-perfect";
        d.hypothesis_gates["centerless_perfect"] = true;
        return d;
    }
    return detail::decide_upper_with(ctx, e1, e2, IsoMode::UpperA, &DeciderContext::commuting);
}

inline IsoDecision decide_upper_c_iso(DeciderContext& ctx, const Cochain2& e1, const Cochain2& e2,
                                      bool allow_fast_path = true) {
    if (allow_fast_path && detail::centerless_perfect(ctx)) {
        auto d = decide_sigma_criterion(ctx, e1, e2, IsoMode::UpperC);
        d.path = "centerless-perfect";
        d.hypothesis_gates["centerless_perfect"] = true;
        return d;
    }
    return detail::decide_upper_with(ctx, e1, e2, IsoMode::UpperC, &DeciderContext::central);
}

// Any isomorphism whose phi22 is a commuting automorphism.
inline IsoDecision decide_a_iso(DeciderContext& ctx, const Cochain2& e1, const Cochain2& e2) {
    detail::require_pair(e1, e2, ctx);
    IsoDecision d;
    d.mode = IsoMode::UpperA;
    d.path = "structured-commuting";
    try {
        if (auto m = structured_search(ctx, e1, e2, ctx.commuting())) {
            d.verdict = Verdict::Yes;
            d.certificate = std::move(*m);
        } else {
            d.refuted_by = "no isomorphism with phi22 commuting";
        }
    } catch (const CapExceeded& e) {
        return detail::cap_decision(IsoMode::UpperA, e);
    }
    return d;
}

inline IsoDecision decide_abstract_iso(DeciderContext& ctx, const Cochain2& e1, const Cochain2& e2) {
    detail::require_pair(e1, e2, ctx);
    IsoDecision d;
    d.mode = IsoMode::Abstract;
    d.path = "oracle";
    try {
        auto p1 = perturbed_product(ctx.coeffs(), ctx.base(), e1, ctx.limits());
        auto p2 = perturbed_product(ctx.coeffs(), ctx.base(), e2, ctx.limits());
        if (auto f = isomorphic_oracle(p1.realized(), p2.realized(), ctx.limits())) {
            d.verdict = Verdict::Yes;
            d.certificate = decompose_hom(*f, p1, p2);
        } else {
            d.refuted_by = "products are not isomorphic";
        }
    } catch (const CapExceeded& e) {
        return detail::cap_decision(IsoMode::Abstract, e);
    }
    return d;
}

inline IsoDecision decide(DeciderContext& ctx, IsoMode mode, const Cochain2& e1, const Cochain2& e2) {
    switch (mode) {
        case IsoMode::G2: return decide_g2_iso(ctx, e1, e2);
        case IsoMode::HG2: return decide_hg2_iso(ctx, e1, e2);
        case IsoMode::Upper: return decide_upper_iso(ctx, e1, e2);
        case IsoMode::UpperA: return decide_upper_a_iso(ctx, e1, e2);
        case IsoMode::UpperC: return decide_upper_c_iso(ctx, e1, e2);
        case IsoMode::Abstract: return decide_abstract_iso(ctx, e1, e2);
    }
    throw InvalidInput("unknown mode");
}

// Re-validates a yes certificate: by coboundary re-evaluation when phi21 is
// trivial, otherwise by assembling the map on the realized products.
inline bool validate_certificate(const MatrixHom& m, const Cochain2& e1, const Cochain2& e2,
                                 const Limits& limits = {}) {
    const auto& G = e1.base();
    const auto& M = e1.coeffs();
    const bool upper = std::all_of(m.phi21.begin(), m.phi21.end(), [](Element v) { return v == 0; });
    if (upper) {
        GroupMap rho{G, G, m.phi22};
        if (!rho.is_automorphism()) return false;
        std::vector<bool> hit(M.order(), false);
        for (auto s : m.phi11) {
            if (s >= M.order() || hit[s]) return false;
            hit[s] = true;
        }
        Cochain2 lhs(G, M);
        try {
            lhs = pushforward(m.phi11, e1) - pullback(e2, rho);
        } catch (const InvalidInput&) {
            return false;
        }
        auto eta = OneCochain::from_index_table(G, M, m.phi12);
        return coboundary_of(eta) == lhs;
    }
    auto p1 = perturbed_product(M, G, e1, limits);
    auto p2 = perturbed_product(M, G, e2, limits);
    auto f = assemble_map(m, p1, p2);
    return !homomorphism_failure(f) && f.is_bijective();
}

// ---------------------------------------------------------------------------
// Oracles

// Isomorphisms of the realized products mapping the kernel onto the kernel.
inline std::optional<MatrixHom> oracle_upper_iso(const PerturbedProduct& p1, const PerturbedProduct& p2,
                                                 const Limits& limits = {}) {
    const auto m = static_cast<Element>(p1.g1().order());
    if (p2.g1().order() != m) return std::nullopt;
    detail::check_cap(p1.realized(), limits, "upper oracle");
    std::optional<GroupMap> f;
    for_each_homomorphism(p1.realized(), p2.realized(), true, [&](const std::vector<Element>& img) {
        for (Element x = 0; x < m; ++x)
            if (img[x] >= m) return true;
        f = GroupMap{p1.realized(), p2.realized(), img};
        return false;
    });
    if (!f) return std::nullopt;
    return decompose_hom(*f, p1, p2);
}

// Exhaustive block search with phi22 = id: phi11 over the candidates,
// phi21 over Hom(G1, Z(G2)), phi12 over every normalized 1-cochain (or by
// CapExceeded when that enumeration exceeds the oracle bound).
inline std::optional<MatrixHom> oracle_blocks_g2(DeciderContext& ctx, const PerturbedProduct& p1,
                                                 const PerturbedProduct& p2,
                                                 const std::vector<std::vector<Element>>& phi11s) {
    const auto& G = ctx.base();
    const std::size_t n = G.order(), m = ctx.coeffs().order();
    u64 count = 1;
    bool enumerate = true;
    for (std::size_t i = 1; i < n && enumerate; ++i) {
        count *= m;
        if (count > ctx.limits().oracle_bound) enumerate = false;
    }
    if (!enumerate) throw CapExceeded("oracle phi12 enumeration", ctx.limits().oracle_bound);
    std::vector<Element> id(n);
    std::iota(id.begin(), id.end(), Element{0});
    for (auto& f11 : phi11s)
        for (auto& f21 : ctx.center_homs()) {
            std::vector<Element> f12(n, 0);
            for (u64 it = 0; it < count; ++it) {
                MatrixHom blocks{f11, f12, f21, id};
                auto f = assemble_map(blocks, p1, p2);
                if (f.is_bijective() && !homomorphism_failure(f)) return blocks;
                for (std::size_t i = 1; i < n && ++f12[i] == m; ++i) f12[i] = 0;
            }
        }
    return std::nullopt;
}

inline std::optional<MatrixHom> oracle_g2_iso(DeciderContext& ctx, const Cochain2& e1, const Cochain2& e2) {
    detail::require_pair(e1, e2, ctx);
    auto p1 = perturbed_product(ctx.coeffs(), ctx.base(), e1, ctx.limits());
    auto p2 = perturbed_product(ctx.coeffs(), ctx.base(), e2, ctx.limits());
    return oracle_blocks_g2(ctx, p1, p2, ctx.coeff_endomorphisms());
}

// (H, G2) oracle with H the subgroup generated by the image of eps1.
inline std::optional<MatrixHom> oracle_hg2_iso(DeciderContext& ctx, const Cochain2& e1, const Cochain2& e2) {
    detail::require_pair(e1, e2, ctx);
    const auto H = closure(ctx.coeff_group(), e1.image_indices());
    std::vector<std::vector<Element>> fixing;
    for (auto& f : ctx.coeff_endomorphisms()) {
        bool ok = true;
        for (auto h : H.elements()) ok = ok && f[h] == h;
        if (ok) fixing.push_back(f);
    }
    auto p1 = perturbed_product(ctx.coeffs(), ctx.base(), e1, ctx.limits());
    auto p2 = perturbed_product(ctx.coeffs(), ctx.base(), e2, ctx.limits());
    return oracle_blocks_g2(ctx, p1, p2, fixing);
}

// ---------------------------------------------------------------------------
// Localization

struct LocalComponent {
    u64 prime;
    Subgroup sylow;
    FiniteGroup local_base;
    AbelianModule local_coeffs;
    Cochain2 eps1;
    Cochain2 eps2;
};

struct LocalizedInstance {
    std::vector<u64> primes;
    std::vector<LocalComponent> components;
};

inline LocalizedInstance localize(const Cochain2& e1, const Cochain2& e2) {
    if (!e1.same_domain(e2)) throw InvalidInput("localize: cocycles have different base or coefficients");
    const auto& G = e1.base();
    LocalizedInstance out;
    out.primes = prime_divisors(G.order());
    for (auto p : out.primes) {
        auto P = sylow_subgroup(G, p);
        auto l1 = project_coefficients(restrict(e1, P), p);
        auto l2 = project_coefficients(restrict(e2, P), p);
        out.components.push_back({p, P, l1.base(), l1.coeffs(), l1, l2});
    }
    return out;
}

}  // namespace extlab
