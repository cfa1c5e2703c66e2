#pragma once

// Perturbed direct products G1 x_eps G2 as explicit groups, block-matrix
// maps between them, and the structural identities of central extensions.

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extlab/cochain.hpp"
#include "extlab/cohomology.hpp"
#include "extlab/group.hpp"
#include "extlab/modlinalg.hpp"
#include "extlab/morphisms.hpp"
#include "extlab/presets.hpp"

namespace extlab {

// Elements are encoded as x + |G1| * y, so (0, 0) is index 0.
class PerturbedProduct {
public:
    PerturbedProduct(AbelianModule g1, FiniteGroup g2, Cochain2 eps, FiniteGroup realized)
        : g1_(std::move(g1)), g2_(std::move(g2)), eps_(std::move(eps)),
          realized_(std::move(realized)) {}

    const AbelianModule& g1() const { return g1_; }
    const FiniteGroup& g2() const { return g2_; }
    const Cochain2& eps() const { return eps_; }
    const FiniteGroup& realized() const { return realized_; }

    Element encode(Element x, Element y) const {
        return x + static_cast<Element>(g1_.order()) * y;
    }
    std::pair<Element, Element> decode(Element e) const {
        const auto m = static_cast<Element>(g1_.order());
        return {e % m, e / m};
    }
    Element inject1(Element x) const { return encode(x, 0); }
    Element inject2(Element y) const { return encode(0, y); }
    Element proj1(Element e) const { return decode(e).first; }
    Element proj2(Element e) const { return decode(e).second; }

    // Image of inject1.
    Subgroup kernel() const {
        std::vector<Element> el(g1_.order());
        for (Element x = 0; x < el.size(); ++x) el[x] = inject1(x);
        return Subgroup(realized_, std::move(el));
    }

private:
    AbelianModule g1_;
    FiniteGroup g2_;
    Cochain2 eps_;
    FiniteGroup realized_;
};

// The multiplication table (x,y)(x',y') = (x + x' + eps(y,y'), yy') without
// any checks; used for negative tests on non-cocycles.
inline std::vector<Element> perturbed_table(const Cochain2& eps) {
    const auto& M = eps.coeffs();
    const auto& G = eps.base();
    const std::size_t m = M.order(), n = G.order(), N = m * n;
    std::vector<std::vector<Element>> add(m, std::vector<Element>(m));
    for (Element a = 0; a < m; ++a)
        for (Element b = 0; b < m; ++b)
            add[a][b] = M.index_of(M.add(M.vector_of(a), M.vector_of(b)));
    std::vector<Element> eidx(n * n);
    for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) eidx[y * n + z] = eps.index_at(y, z);
    std::vector<Element> flat(N * N);
    for (Element a = 0; a < N; ++a) {
        const Element x = a % m, y = a / m;
        for (Element b = 0; b < N; ++b) {
            const Element x2 = b % m, y2 = b / m;
            const Element xs = add[add[x][x2]][eidx[y * n + y2]];
            flat[a * N + b] = xs + static_cast<Element>(m) * G.mul(y, y2);
        }
    }
    return flat;
}

inline PerturbedProduct perturbed_product(const AbelianModule& g1, const FiniteGroup& g2,
                                          const Cochain2& eps, const Limits& limits = {}) {
    if (!eps.base().same_table(g2) || !(eps.coeffs() == g1))
        throw InvalidInput("perturbed_product: cocycle does not match the given groups");
    const std::size_t N = g1.order() * g2.order();
    if (N > limits.max_table_order)
        throw CapExceeded("perturbed product of order " + std::to_string(N), limits.max_table_order);
    if (auto bad = cocycle_failure(eps))
        throw InvalidInput("perturbed_product: eps is not a 2-cocycle; fails at (h,g,k) = (" +
                           std::to_string(std::get<0>(*bad)) + "," +
                           std::to_string(std::get<1>(*bad)) + "," +
                           std::to_string(std::get<2>(*bad)) + ")");
    std::string label = g1.label() + " x_eps " + g2.label();
    auto realized = FiniteGroup::from_flat(perturbed_table(eps), N, label, /*verify=*/true);
    return PerturbedProduct(g1, g2, eps, std::move(realized));
}

inline PerturbedProduct direct_product_of(const AbelianModule& g1, const FiniteGroup& g2,
                                          const Limits& limits = {}) {
    return perturbed_product(g1, g2, Cochain2(g2, g1), limits);
}

// Block form of a map between perturbed products. phi11 and phi12 take
// values as module element indices, phi21 and phi22 as elements of G2.
struct MatrixHom {
    std::vector<Element> phi11;  // G1 -> G1
    std::vector<Element> phi12;  // G2 -> G1, phi12[0] = 0
    std::vector<Element> phi21;  // G1 -> G2
    std::vector<Element> phi22;  // G2 -> G2

    bool operator==(const MatrixHom& o) const {
        return phi11 == o.phi11 && phi12 == o.phi12 && phi21 == o.phi21 && phi22 == o.phi22;
    }
};

// phi(x,y) = (phi11(x) + phi12(y) + eps2(phi21(x), phi22(y)), phi21(x) phi22(y))
inline GroupMap assemble_map(const MatrixHom& m, const PerturbedProduct& source,
                             const PerturbedProduct& target) {
    const auto& M = target.g1();
    const auto& G = target.g2();
    if (m.phi11.size() != source.g1().order() || m.phi21.size() != source.g1().order() ||
        m.phi12.size() != source.g2().order() || m.phi22.size() != source.g2().order())
        throw InvalidInput("matrix map blocks have wrong sizes");
    if (!m.phi12.empty() && m.phi12[0] != 0) throw InvalidInput("phi12 must vanish at the identity");
    std::vector<Element> img(source.realized().order());
    for (Element e = 0; e < img.size(); ++e) {
        auto [x, y] = source.decode(e);
        const Element a = m.phi21[x], b = m.phi22[y];
        Residues first = M.add(M.add(M.vector_of(m.phi11[x]), M.vector_of(m.phi12[y])),
                               target.eps().at(a, b));
        img[e] = target.encode(M.index_of(first), G.mul(a, b));
    }
    return {source.realized(), target.realized(), std::move(img)};
}

// First pair (u, v) with phi(uv) != phi(u) phi(v).
inline std::optional<std::pair<Element, Element>> homomorphism_failure(const GroupMap& f) {
    for (Element a = 0; a < f.domain.order(); ++a)
        for (Element b = 0; b < f.domain.order(); ++b)
            if (f(f.domain.mul(a, b)) != f.codomain.mul(f(a), f(b))) return std::make_pair(a, b);
    return std::nullopt;
}

inline GroupMap assemble_hom(const MatrixHom& m, const PerturbedProduct& source,
                             const PerturbedProduct& target) {
    auto f = assemble_map(m, source, target);
    if (auto bad = homomorphism_failure(f))
        throw InvalidInput("assembled map is not a homomorphism: fails on the pair (" +
                           std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
    return f;
}

inline MatrixHom decompose_hom(const GroupMap& phi, const PerturbedProduct& source,
                               const PerturbedProduct& target) {
    if (!phi.domain.same_table(source.realized()) || !phi.codomain.same_table(target.realized()))
        throw InvalidInput("decompose_hom: map does not match the given products");
    MatrixHom m;
    for (Element x = 0; x < source.g1().order(); ++x) {
        const Element v = phi(source.inject1(x));
        m.phi11.push_back(target.proj1(v));
        m.phi21.push_back(target.proj2(v));
    }
    for (Element y = 0; y < source.g2().order(); ++y) {
        const Element v = phi(source.inject2(y));
        m.phi12.push_back(target.proj1(v));
        m.phi22.push_back(target.proj2(v));
    }
    return m;
}

// Blocks (sigma, eta; 1, rho) as a MatrixHom.
inline MatrixHom upper_blocks(const std::vector<Element>& sigma, const OneCochain& eta,
                              const std::vector<Element>& rho) {
    MatrixHom m;
    m.phi11 = sigma;
    m.phi12 = eta.index_table();
    m.phi21.assign(sigma.size(), 0);
    m.phi22 = rho;
    return m;
}

struct IdentityCheck {
    bool ok = true;
    std::optional<std::pair<Element, Element>> witness;  // realized elements
    std::string detail;
};

struct AbelianReport {
    bool realized_abelian;
    bool criterion;  // G2 abelian and eps symmetric
    std::string reason;
};

inline AbelianReport is_abelian_product(const PerturbedProduct& p) {
    AbelianReport r;
    r.realized_abelian = p.realized().is_abelian();
    const bool g2ab = p.g2().is_abelian(), sym = is_symmetric(p.eps());
    r.criterion = g2ab && sym;
    if (r.criterion)
        r.reason = "quotient abelian and cocycle symmetric";
    else if (!g2ab)
        r.reason = "quotient " + p.g2().label() + " is not abelian";
    else
        r.reason = "cocycle is not symmetric";
    return r;
}

// The commutator of (x,y), (x',y') against (eps(y,y') - eps(y',y), [y,y']),
// with [a,b] = a b a^-1 b^-1 in both groups.
inline IdentityCheck commutator_identity_check(const PerturbedProduct& p) {
    const auto& M = p.g1();
    const auto& G = p.g2();
    const auto& R = p.realized();
    for (Element u = 0; u < R.order(); ++u)
        for (Element v = 0; v < R.order(); ++v) {
            auto [x, y] = p.decode(u);
            auto [x2, y2] = p.decode(v);
            (void)x;
            (void)x2;
            const Element expect =
                p.encode(M.index_of(M.sub(p.eps().at(y, y2), p.eps().at(y2, y))), G.commutator(y, y2));
            if (R.commutator(u, v) != expect)
                return {false, std::make_pair(u, v),
                        "commutator of elements " + std::to_string(u) + " and " +
                            std::to_string(v) + " is " + std::to_string(R.commutator(u, v)) +
                            ", formula gives " + std::to_string(expect)};
        }
    return {};
}

// The identity with its correction term for non-abelian quotients:
// with c = [y,y'], the commutator is (eps(y,y') - eps(y',y) - eps(c, y'y), c).
inline IdentityCheck commutator_formula_check(const PerturbedProduct& p) {
    const auto& M = p.g1();
    const auto& G = p.g2();
    const auto& R = p.realized();
    for (Element u = 0; u < R.order(); ++u)
        for (Element v = 0; v < R.order(); ++v) {
            const Element y = p.proj2(u), y2 = p.proj2(v);
            const Element c = G.commutator(y, y2);
            Residues first = M.sub(M.sub(p.eps().at(y, y2), p.eps().at(y2, y)),
                                   p.eps().at(c, G.mul(y2, y)));
            const Element expect = p.encode(M.index_of(first), c);
            if (R.commutator(u, v) != expect)
                return {false, std::make_pair(u, v),
                        "commutator of elements " + std::to_string(u) + " and " + std::to_string(v) +
                            " differs from the corrected formula"};
        }
    return {};
}

// Derived subgroup of the product against the subgroup generated by the
// elements (eps(y,y') - eps(y',y), [y,y']).
inline IdentityCheck derived_structure_check(const PerturbedProduct& p) {
    const auto& M = p.g1();
    const auto& G = p.g2();
    std::vector<Element> gens;
    for (Element y = 0; y < G.order(); ++y)
        for (Element y2 = 0; y2 < G.order(); ++y2)
            gens.push_back(p.encode(M.index_of(M.sub(p.eps().at(y, y2), p.eps().at(y2, y))),
                                    G.commutator(y, y2)));
    const auto D = derived_subgroup(p.realized()).subgroup;
    const auto S = closure(p.realized(), gens);
    if (D == S) return {};
    return {false, std::nullopt,
            "derived subgroup has order " + std::to_string(D.order()) +
                ", generated subgroup has order " + std::to_string(S.order())};
}

// Kernel central, pr2 a homomorphism onto G2 with kernel exactly the image
// of inject1.
inline IdentityCheck centrality_check(const PerturbedProduct& p) {
    const auto K = p.kernel();
    const auto Z = center(p.realized());
    for (auto k : K.elements())
        if (!Z.contains(k))
            return {false, std::make_pair(k, Element{0}),
                    "kernel element " + std::to_string(k) + " is not central"};
    const auto& R = p.realized();
    for (Element a = 0; a < R.order(); ++a)
        for (Element b = 0; b < R.order(); ++b)
            if (p.proj2(R.mul(a, b)) != p.g2().mul(p.proj2(a), p.proj2(b)))
                return {false, std::make_pair(a, b), "projection to the quotient is not a homomorphism"};
    std::vector<Element> ker;
    std::vector<bool> hit(p.g2().order(), false);
    for (Element a = 0; a < R.order(); ++a) {
        if (p.proj2(a) == 0) ker.push_back(a);
        hit[p.proj2(a)] = true;
    }
    if (Subgroup(R, ker) != K) return {false, std::nullopt, "projection kernel differs from the injected group"};
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
        return {false, std::nullopt, "projection is not onto the quotient"};
    if (R.order() / K.order() != p.g2().order())
        return {false, std::nullopt, "quotient order mismatch"};
    return {};
}

enum class CheckStatus { Pass, Fail, HypothesisNotMet, Vacuous };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::HypothesisNotMet: return "hypothesis-not-met";
        case CheckStatus::Vacuous: return "vacuous";
    }
    return "?";
}

struct CriterionReport {
    CheckStatus status = CheckStatus::Pass;
    std::size_t checked = 0;
    std::string detail;
};

// If SZ^2(g2, g1) is trivial, no nontrivial cocycle gives a product
// isomorphic to the direct product.
inline CriterionReport sz2_trivial_criterion(const AbelianModule& g1, const FiniteGroup& g2,
                                             const Limits& limits = {}) {
    auto space = compute_spaces(g2, g1, limits);
    for (auto& s : sz2_space(*space))
        if (!s.is_zero())
            return {CheckStatus::HypothesisNotMet, 0,
                    "SZ^2 is nontrivial (order " + space->z2_order().to_string() + " Z^2)"};
    CriterionReport r;
    const auto direct = direct_product_of(g1, g2, limits);
    for (auto& eps : space->enumerate(true, limits.oracle_bound)) {
        if (eps.is_zero()) continue;
        ++r.checked;
        auto prod = perturbed_product(g1, g2, eps, limits);
        if (isomorphic_oracle(prod.realized(), direct.realized(), limits)) {
            r.status = CheckStatus::Fail;
            r.detail = "a nontrivial cocycle gives a product isomorphic to the direct product";
            return r;
        }
    }
    if (r.checked == 0) {
        r.status = CheckStatus::Vacuous;
        r.detail = "Z^2 is trivial";
    }
    return r;
}

// Schur multiplier orders of the perfect presets.
struct MultiplierEntry {
    const char* preset;
    u64 order;
};
inline const std::vector<MultiplierEntry>& schur_multiplier_table() {
    static const std::vector<MultiplierEntry> t = {{"1", 1}, {"A5", 2}};
    return t;
}

inline std::optional<u64> lookup_multiplier(const FiniteGroup& G, const Limits& limits = {}) {
    for (auto& e : schur_multiplier_table()) {
        auto P = preset_group(e.preset);
        if (P.order() == G.order() && isomorphic_oracle(G, P, limits)) return e.order;
    }
    return std::nullopt;
}

// For perfect g2 with |g1| coprime to |M(g2)|, the product splits as a
// direct product.
inline CriterionReport coprime_splitting_check(const AbelianModule& g1, const FiniteGroup& g2,
                                               const Cochain2& eps, const Limits& limits = {}) {
    if (!structure_predicates(g2).is_perfect)
        return {CheckStatus::HypothesisNotMet, 0, g2.label() + " is not perfect"};
    auto mult = lookup_multiplier(g2, limits);
    if (!mult)
        return {CheckStatus::HypothesisNotMet, 0,
                g2.label() + " has no entry in the Schur multiplier table"};
    if (std::gcd(g1.order(), *mult) != 1)
        return {CheckStatus::HypothesisNotMet, 0, "|G1| is not coprime to the multiplier order"};
    auto prod = perturbed_product(g1, g2, eps, limits);
    auto direct = direct_product_of(g1, g2, limits);
    if (isomorphic_oracle(prod.realized(), direct.realized(), limits)) return {CheckStatus::Pass, 1, {}};
    return {CheckStatus::Fail, 1, "product is not isomorphic to the direct product"};
}

}  // namespace extlab
