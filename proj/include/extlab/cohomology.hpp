#pragma once

// Z^2, B^2, SZ^2 and H^2 of a finite group with trivial coefficients in a
// finite abelian module, by exact linear algebra over each prime-power
// component of the coefficients.
//
// A cochain is flattened to its (n-1)^2 free coordinates (g, h), g, h >= 1.
// For an invariant factor d_i = prod p^e the coordinates of a component are
// the values of factor i reduced mod p^e; trivial action makes the cocycle
// condition hold coordinatewise, so each component is an independent system.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "extlab/cochain.hpp"
#include "extlab/error.hpp"
#include "extlab/group.hpp"
#include "extlab/modlinalg.hpp"

namespace extlab {

struct CoefficientComponent {
    std::size_t factor;  // invariant factor slot
    u64 prime;
    unsigned exponent;
    u64 modulus;  // prime^exponent
};

inline std::vector<CoefficientComponent> coefficient_components(const AbelianModule& M) {
    std::vector<CoefficientComponent> out;
    for (std::size_t i = 0; i < M.rank(); ++i)
        for (auto [p, e] : factorize(M.factors()[i])) out.push_back({i, p, e, ipow(p, e)});
    return out;
}

namespace detail {

inline std::size_t coord(std::size_t n, Element g, Element h) { return (g - 1) * (n - 1) + (h - 1); }

inline Residues component_vector(const Cochain2& c, const CoefficientComponent& comp) {
    const std::size_t n = c.base().order();
    Residues v(n <= 1 ? 0 : (n - 1) * (n - 1));
    for (Element g = 1; g < n; ++g)
        for (Element h = 1; h < n; ++h)
            v[coord(n, g, h)] = c.value(g, h, comp.factor) % comp.modulus;
    return v;
}

// Adds the CRT lift of a component vector into a cochain.
inline void add_component(Cochain2& c, const CoefficientComponent& comp, const Residues& v) {
    const std::size_t n = c.base().order();
    const u64 d = c.coeffs().factors()[comp.factor];
    for (Element g = 1; g < n; ++g)
        for (Element h = 1; h < n; ++h) {
            const u64 x = crt_lift(v[coord(n, g, h)], comp.modulus, d);
            c.set_value(g, h, comp.factor, (c.value(g, h, comp.factor) + x) % d);
        }
}

// Generators of {x : E x = 0} over Z/p^e, E given by rows over nvars columns.
inline std::vector<Residues> kernel_pp(u64 p, unsigned e, std::vector<Residues> eqs,
                                       std::size_t nvars) {
    PrimePowerSpan H(p, e, nvars, std::move(eqs));
    const std::size_t r = H.rows().size();
    std::vector<Residues> rows(nvars, Residues(r + nvars, 0));
    for (std::size_t i = 0; i < nvars; ++i) {
        for (std::size_t k = 0; k < r; ++k) rows[i][k] = H.rows()[k][i];
        rows[i][r + i] = 1;
    }
    PrimePowerSpan S(p, e, r + nvars, std::move(rows));
    std::vector<Residues> out;
    for (std::size_t k = 0; k < S.rows().size(); ++k) {
        if (S.pivot_columns()[k] < r) continue;
        out.emplace_back(S.rows()[k].begin() + static_cast<std::ptrdiff_t>(r), S.rows()[k].end());
    }
    return out;
}

// Every element of a span, by closure under adding generators.
inline std::vector<Residues> span_elements(const PrimePowerSpan& S, u64 bound) {
    const unsigned lo = S.log_order();
    u64 size = 1;
    for (unsigned i = 0; i < lo; ++i) {
        size *= S.prime();
        if (size > bound) throw CapExceeded("span enumeration", bound);
    }
    std::set<Residues> seen{Residues(S.cols(), 0)};
    std::vector<Residues> order{Residues(S.cols(), 0)};
    for (std::size_t head = 0; head < order.size(); ++head)
        for (const auto& r : S.rows()) {
            Residues x = order[head];
            for (std::size_t j = 0; j < x.size(); ++j) x[j] = (x[j] + r[j]) % S.modulus();
            if (seen.insert(x).second) order.push_back(std::move(x));
        }
    return order;
}

// Integer coefficients of the cocycle equations, one per triple (h, g, k),
// in sparse form; duplicates removed.
inline std::vector<std::vector<std::pair<std::size_t, int>>> triple_equations(const FiniteGroup& G) {
    const std::size_t n = G.order();
    std::set<std::vector<std::pair<std::size_t, int>>> eqs;
    for (Element h = 1; h < n; ++h)
        for (Element g = 1; g < n; ++g)
            for (Element k = 1; k < n; ++k) {
                std::map<std::size_t, int> row;
                auto term = [&](Element a, Element b, int s) {
                    if (a != 0 && b != 0) row[coord(n, a, b)] += s;
                };
                term(h, g, 1);
                term(G.mul(h, g), k, 1);
                term(g, k, -1);
                term(h, G.mul(g, k), -1);
                std::vector<std::pair<std::size_t, int>> sparse;
                for (auto [c, v] : row)
                    if (v != 0) sparse.emplace_back(c, v);
                if (!sparse.empty()) eqs.insert(std::move(sparse));
            }
    return {eqs.begin(), eqs.end()};
}

inline Residues densify(const std::vector<std::pair<std::size_t, int>>& sparse, std::size_t cols,
                        u64 q) {
    Residues r(cols, 0);
    const auto sq = static_cast<std::int64_t>(q);
    for (auto [c, v] : sparse) r[c] = static_cast<u64>(((v % sq) + sq) % sq);
    return r;
}

// Z^2 generators through the triple system.
inline std::vector<Residues> z2_dense(const FiniteGroup& G, const CoefficientComponent& comp,
                                      const std::vector<std::vector<std::pair<std::size_t, int>>>& eqs) {
    const std::size_t N = (G.order() - 1) * (G.order() - 1);
    std::vector<Residues> rows;
    rows.reserve(eqs.size());
    for (auto& e : eqs) rows.push_back(densify(e, N, comp.modulus));
    return kernel_pp(comp.prime, comp.exponent, std::move(rows), N);
}

// Z^2 generators through the values eps(x, s) on a generating set S.
// eps(x, ks) = eps(x, k) + eps(xk, s) - eps(k, s) propagates them along a
// breadth-first tree; the remaining edges give the constraints.
inline std::vector<Residues> z2_generated(const FiniteGroup& G, const CoefficientComponent& comp) {
    const std::size_t n = G.order();
    const auto gens = greedy_generators(G);
    const std::size_t s = gens.size(), U = (n - 1) * s;
    const u64 q = comp.modulus;
    std::vector<Residues> L(n * n);  // L[x * n + k], linear form in the u variables
    std::vector<bool> defined(n, false);
    auto form = [&](Element x, Element k) -> Residues& { return L[x * n + k]; };
    for (Element x = 0; x < n; ++x) form(x, 0).assign(U, 0);
    defined[0] = true;
    std::vector<Element> queue{0};
    for (std::size_t i = 0; i < s; ++i) {
        for (Element x = 0; x < n; ++x) {
            Residues r(U, 0);
            if (x != 0) r[(x - 1) * s + i] = 1;
            form(x, gens[i]) = std::move(r);
        }
        defined[gens[i]] = true;
        queue.push_back(gens[i]);
    }
    std::vector<Residues> constraints;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Element k = queue[head];
        for (std::size_t i = 0; i < s; ++i) {
            const Element sg = gens[i], ks = G.mul(k, sg);
            if (!defined[ks]) {
                for (Element x = 0; x < n; ++x) {
                    Residues r(U);
                    const auto& a = form(x, k);
                    const auto& b = form(G.mul(x, k), sg);
                    const auto& c = form(k, sg);
                    for (std::size_t j = 0; j < U; ++j) r[j] = (a[j] + b[j] + 2 * q - c[j]) % q;
                    form(x, ks) = std::move(r);
                }
                defined[ks] = true;
                queue.push_back(ks);
            } else {
                for (Element x = 1; x < n; ++x) {
                    Residues r(U);
                    const auto& t = form(x, ks);
                    const auto& a = form(x, k);
                    const auto& b = form(G.mul(x, k), sg);
                    const auto& c = form(k, sg);
                    bool nz = false;
                    for (std::size_t j = 0; j < U; ++j) {
                        r[j] = (t[j] + c[j] + 2 * q - a[j] - b[j]) % q;
                        nz |= r[j] != 0;
                    }
                    if (nz) constraints.push_back(std::move(r));
                }
            }
        }
    }
    auto ker = kernel_pp(comp.prime, comp.exponent, std::move(constraints), U);
    const std::size_t N = (n - 1) * (n - 1);
    std::vector<Residues> out;
    for (auto& u : ker) {
        Residues v(N, 0);
        for (Element g = 1; g < n; ++g)
            for (Element h = 1; h < n; ++h) {
                const auto& f = form(g, h);
                u64 acc = 0;
                for (std::size_t j = 0; j < U; ++j)
                    if (f[j]) acc = (acc + f[j] * u[j]) % q;
                v[coord(n, g, h)] = acc;
            }
        out.push_back(std::move(v));
    }
    return out;
}

// Coboundaries of the unit 1-cochains e_y, y >= 1.
inline std::vector<Residues> b2_generators(const FiniteGroup& G, u64 q) {
    const std::size_t n = G.order(), N = (n - 1) * (n - 1);
    std::vector<Residues> out;
    for (Element y = 1; y < n; ++y) {
        Residues v(N, 0);
        for (Element a = 1; a < n; ++a)
            for (Element b = 1; b < n; ++b) {
                std::int64_t t = (a == y) + (b == y) - (G.mul(a, b) == y);
                const auto sq = static_cast<std::int64_t>(q);
                v[coord(n, a, b)] = static_cast<u64>(((t % sq) + sq) % sq);
            }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

enum class SpaceMethod { Auto, Triples, Generators };

struct ComponentSpace {
    CoefficientComponent component;
    PrimePowerSpan z2;
    PrimePowerSpan b2;
    std::vector<u64> h2;  // elementary divisors of z2 / b2
};

class CocycleSpace {
public:
    CocycleSpace(FiniteGroup base, AbelianModule coeffs, std::vector<ComponentSpace> comps,
                 std::string method)
        : base_(std::move(base)), coeffs_(std::move(coeffs)), comps_(std::move(comps)),
          method_(std::move(method)) {
        std::vector<u64> powers;
        for (auto& c : comps_) powers.insert(powers.end(), c.h2.begin(), c.h2.end());
        h2_ = merge_elementary_divisors(powers);
    }

    const FiniteGroup& base() const { return base_; }
    const AbelianModule& coeffs() const { return coeffs_; }
    const std::vector<ComponentSpace>& components() const { return comps_; }
    const std::string& method() const { return method_; }
    std::size_t coordinate_count() const { return (base_.order() - 1) * (base_.order() - 1); }
    const std::vector<u64>& h2_invariants() const { return h2_; }

    FactoredInt z2_order() const { return order_of([](const ComponentSpace& c) { return &c.z2; }); }
    FactoredInt b2_order() const { return order_of([](const ComponentSpace& c) { return &c.b2; }); }
    u64 h2_order() const {
        u64 o = 1;
        for (auto d : h2_) o *= d;
        return o;
    }

    // Generating matrices, one per component, over Z/p^e.
    ModMatrix z2_basis(std::size_t comp) const {
        return ModMatrix(comps_.at(comp).component.modulus, coordinate_count(), comps_[comp].z2.rows());
    }
    ModMatrix b2_basis(std::size_t comp) const {
        return ModMatrix(comps_.at(comp).component.modulus, coordinate_count(), comps_[comp].b2.rows());
    }

    // The generating rows, lifted to cochains.
    std::vector<Cochain2> z2_generators() const { return lifted(true); }
    std::vector<Cochain2> b2_generators() const { return lifted(false); }

    bool in_z2(const Cochain2& c) const {
        require_domain(c);
        for (auto& cs : comps_)
            if (!cs.z2.contains(detail::component_vector(c, cs.component))) return false;
        return true;
    }
    bool in_b2(const Cochain2& c) const {
        require_domain(c);
        for (auto& cs : comps_)
            if (!cs.b2.contains(detail::component_vector(c, cs.component))) return false;
        return true;
    }

    // Representative of the class of c, reduced against the Howell form of B^2.
    Cochain2 canonical(const Cochain2& c) const {
        require_domain(c);
        Cochain2 out(base_, coeffs_);
        for (auto& cs : comps_)
            detail::add_component(out, cs.component, cs.b2.reduce(detail::component_vector(c, cs.component)));
        return out;
    }

    // One canonical representative per class, sorted.
    std::vector<Cochain2> class_representatives(u64 bound = 1'000'000) const {
        if (h2_order() > bound) throw CapExceeded("class enumeration", bound);
        std::vector<std::vector<Residues>> per;
        for (auto& cs : comps_) {
            std::set<Residues> seen{Residues(coordinate_count(), 0)};
            std::vector<Residues> order{Residues(coordinate_count(), 0)};
            for (std::size_t head = 0; head < order.size(); ++head)
                for (const auto& r : cs.z2.rows()) {
                    Residues x = order[head];
                    for (std::size_t j = 0; j < x.size(); ++j)
                        x[j] = (x[j] + r[j]) % cs.component.modulus;
                    x = cs.b2.reduce(std::move(x));
                    if (seen.insert(x).second) order.push_back(std::move(x));
                }
            per.push_back(std::move(order));
        }
        std::vector<Cochain2> out;
        product_each(per, [&](const std::vector<const Residues*>& pick) {
            Cochain2 c(base_, coeffs_);
            for (std::size_t i = 0; i < comps_.size(); ++i)
                detail::add_component(c, comps_[i].component, *pick[i]);
            out.push_back(std::move(c));
        });
        std::sort(out.begin(), out.end());
        return out;
    }

    // Every element of Z^2 (or B^2), when the count is within bound.
    std::vector<Cochain2> enumerate(bool cocycles, u64 bound = 1'000'000) const {
        std::vector<std::vector<Residues>> per;
        u64 total = 1;
        for (auto& cs : comps_) {
            per.push_back(detail::span_elements(cocycles ? cs.z2 : cs.b2, bound));
            total *= per.back().size();
            if (total > bound) throw CapExceeded("cocycle enumeration", bound);
        }
        std::vector<Cochain2> out;
        product_each(per, [&](const std::vector<const Residues*>& pick) {
            Cochain2 c(base_, coeffs_);
            for (std::size_t i = 0; i < comps_.size(); ++i)
                detail::add_component(c, comps_[i].component, *pick[i]);
            out.push_back(std::move(c));
        });
        return out;
    }

    void require_domain(const Cochain2& c) const {
        if (!c.base().same_table(base_) || !(c.coeffs() == coeffs_))
            throw InvalidInput("cochain does not live on this cocycle space");
    }

private:
    template <class Pick>
    FactoredInt order_of(Pick pick) const {
        FactoredInt f;
        for (auto& c : comps_) f.mul_prime_power(c.component.prime, pick(c)->log_order());
        return f;
    }

    std::vector<Cochain2> lifted(bool z2) const {
        std::vector<Cochain2> out;
        for (auto& cs : comps_)
            for (const auto& r : (z2 ? cs.z2 : cs.b2).rows()) {
                Cochain2 c(base_, coeffs_);
                detail::add_component(c, cs.component, r);
                out.push_back(std::move(c));
            }
        return out;
    }

    template <class F>
    static void product_each(const std::vector<std::vector<Residues>>& per, F&& f) {
        std::vector<std::size_t> idx(per.size(), 0);
        std::vector<const Residues*> pick(per.size());
        for (;;) {
            for (std::size_t i = 0; i < per.size(); ++i) pick[i] = &per[i][idx[i]];
            f(pick);
            std::size_t i = 0;
            while (i < per.size() && ++idx[i] == per[i].size()) idx[i++] = 0;
            if (i == per.size()) return;
        }
    }

    FiniteGroup base_;
    AbelianModule coeffs_;
    std::vector<ComponentSpace> comps_;
    std::string method_;
    std::vector<u64> h2_;
};

// Groups up to this order use the triple system by default.
inline constexpr std::size_t kTripleSystemMaxOrder = 16;

inline std::shared_ptr<const CocycleSpace> compute_spaces(const FiniteGroup& G,
                                                          const AbelianModule& M,
                                                          const Limits& limits = {},
                                                          SpaceMethod method = SpaceMethod::Auto) {
    if (G.order() > limits.max_group_order)
        throw CapExceeded("cohomology of " + G.label() + " (order " + std::to_string(G.order()) +
                              ")",
                          limits.max_group_order);
    if (method == SpaceMethod::Auto)
        method = G.order() <= kTripleSystemMaxOrder ? SpaceMethod::Triples : SpaceMethod::Generators;
    const std::size_t N = (G.order() - 1) * (G.order() - 1);
    std::vector<std::vector<std::pair<std::size_t, int>>> eqs;
    if (method == SpaceMethod::Triples && G.order() > 1) eqs = detail::triple_equations(G);
    std::vector<ComponentSpace> comps;
    for (const auto& comp : coefficient_components(M)) {
        std::vector<Residues> z, b;
        if (G.order() > 1) {
            z = method == SpaceMethod::Triples ? detail::z2_dense(G, comp, eqs)
                                               : detail::z2_generated(G, comp);
            b = detail::b2_generators(G, comp.modulus);
        }
        ComponentSpace cs{comp, PrimePowerSpan(comp.prime, comp.exponent, N, std::move(z)),
                          PrimePowerSpan(comp.prime, comp.exponent, N, std::move(b)), {}};
        cs.h2 = quotient_elementary_divisors(cs.z2, cs.b2);
        comps.push_back(std::move(cs));
    }
    return std::make_shared<const CocycleSpace>(
        G, M, std::move(comps), method == SpaceMethod::Triples ? "triples" : "generators");
}

// Generators of the symmetric cocycles SZ^2.
inline std::vector<Cochain2> sz2_space(const CocycleSpace& space) {
    const auto& G = space.base();
    const std::size_t n = G.order();
    std::vector<Cochain2> out;
    for (auto& cs : space.components()) {
        const auto& Z = cs.z2.rows();
        const u64 q = cs.component.modulus;
        // c . Z must agree on (g, h) and (h, g); one equation in c per unordered pair
        std::vector<Residues> eqs;
        for (Element g = 1; g < n; ++g)
            for (Element h = g + 1; h < n; ++h) {
                Residues e(Z.size());
                bool nz = false;
                for (std::size_t r = 0; r < Z.size(); ++r) {
                    e[r] = (Z[r][detail::coord(n, g, h)] + q - Z[r][detail::coord(n, h, g)]) % q;
                    nz |= e[r] != 0;
                }
                if (nz) eqs.push_back(std::move(e));
            }
        for (auto& c : detail::kernel_pp(cs.component.prime, cs.component.exponent, std::move(eqs),
                                         Z.size())) {
            Residues v(space.coordinate_count(), 0);
            for (std::size_t r = 0; r < Z.size(); ++r)
                for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + c[r] * Z[r][j]) % q;
            PrimePowerSpan probe(cs.component.prime, cs.component.exponent, v.size(), {v});
            if (probe.rows().empty()) continue;
            Cochain2 e(G, space.coeffs());
            detail::add_component(e, cs.component, v);
            out.push_back(std::move(e));
        }
    }
    return out;
}

// Witness eta with coboundary_of(eta) == eps, if one exists.
inline std::optional<OneCochain> is_coboundary(const Cochain2& eps) {
    if (auto bad = cocycle_failure(eps))
        throw InvalidInput("is_coboundary: input is not a 2-cocycle (fails at (" +
                           std::to_string(std::get<0>(*bad)) + "," +
                           std::to_string(std::get<1>(*bad)) + "," +
                           std::to_string(std::get<2>(*bad)) + "))");
    const auto& G = eps.base();
    const auto& M = eps.coeffs();
    const std::size_t n = G.order();
    OneCochain eta(G, M);
    if (n <= 1) return eta;
    for (const auto& comp : coefficient_components(M)) {
        const u64 q = comp.modulus;
        // rows indexed by coordinates (a, b), columns by y = 1..n-1
        std::vector<Residues> A((n - 1) * (n - 1), Residues(n - 1, 0));
        for (Element a = 1; a < n; ++a)
            for (Element b = 1; b < n; ++b) {
                auto& row = A[detail::coord(n, a, b)];
                row[a - 1] = (row[a - 1] + 1) % q;
                row[b - 1] = (row[b - 1] + 1) % q;
                const Element ab = G.mul(a, b);
                if (ab != 0) row[ab - 1] = (row[ab - 1] + q - 1) % q;
            }
        auto sol = solve_linear(ModMatrix(q, n - 1, std::move(A)), detail::component_vector(eps, comp));
        if (!sol) return std::nullopt;
        const u64 d = M.factors()[comp.factor];
        for (Element y = 1; y < n; ++y) {
            Residues v = eta.at(y);
            v[comp.factor] = (v[comp.factor] + crt_lift(sol->particular[y - 1], q, d)) % d;
            eta.set(y, v);
        }
    }
    return eta;
}

inline bool cohomologous(const Cochain2& a, const Cochain2& b) {
    a.require_same_domain(b, "cohomologous");
    return is_coboundary(a - b).has_value();
}

struct CohomologyClass {
    std::shared_ptr<const CocycleSpace> space;
    Cochain2 rep;  // canonical
};

inline CohomologyClass class_of(const std::shared_ptr<const CocycleSpace>& space, const Cochain2& eps) {
    space->require_domain(eps);
    if (!space->in_z2(eps)) throw InvalidInput("class_of: input is not a 2-cocycle");
    return {space, space->canonical(eps)};
}

inline bool class_equal(const CohomologyClass& a, const CohomologyClass& b) {
    a.rep.require_same_domain(b.rep, "class_equal");
    return a.rep == b.rep;
}

inline bool class_is_trivial(const CohomologyClass& a) { return a.rep.is_zero(); }

inline CohomologyClass class_power(const CohomologyClass& a, std::int64_t k) {
    return {a.space, a.space->canonical(a.rep.scaled(k))};
}

inline CohomologyClass class_sum(const CohomologyClass& a, const CohomologyClass& b) {
    a.rep.require_same_domain(b.rep, "class_sum");
    return {a.space, a.space->canonical(a.rep + b.rep)};
}

inline u64 class_order(const CohomologyClass& a) {
    // the order divides the coefficient exponent
    const u64 ex = a.rep.coeffs().exponent();
    for (u64 k = 1; k <= ex; ++k)
        if (ex % k == 0 && class_power(a, static_cast<std::int64_t>(k)).rep.is_zero()) return k;
    return ex;
}

// Applies a coefficient automorphism, given on element indices.
inline Cochain2 pushforward(const std::vector<Element>& sigma, const Cochain2& eps) {
    const auto& M = eps.coeffs();
    if (sigma.size() != M.order()) throw InvalidInput("pushforward: map has wrong length");
    std::vector<bool> hit(M.order(), false);
    for (auto s : sigma) {
        if (s >= M.order() || hit[s]) throw InvalidInput("pushforward: map is not invertible");
        hit[s] = true;
    }
    for (Element a = 0; a < M.order(); ++a)
        for (Element b = 0; b < M.order(); ++b)
            if (sigma[M.index_of(M.add(M.vector_of(a), M.vector_of(b)))] !=
                M.index_of(M.add(M.vector_of(sigma[a]), M.vector_of(sigma[b]))))
                throw InvalidInput("pushforward: map is not additive");
    Cochain2 out(eps.base(), M);
    for (Element g = 1; g < eps.base().order(); ++g)
        for (Element h = 1; h < eps.base().order(); ++h)
            out.set(g, h, M.vector_of(sigma[eps.index_at(g, h)]));
    return out;
}

// (g, h) -> eps(rho(g), rho(h))
inline Cochain2 pullback(const Cochain2& eps, const GroupMap& rho) {
    if (!rho.domain.same_table(eps.base()) || !rho.codomain.same_table(eps.base()) ||
        !rho.is_automorphism())
        throw InvalidInput("pullback: map is not an automorphism of the base group");
    Cochain2 out(eps.base(), eps.coeffs());
    for (Element g = 1; g < eps.base().order(); ++g)
        for (Element h = 1; h < eps.base().order(); ++h) out.set(g, h, eps.at(rho(g), rho(h)));
    return out;
}

// Restriction to H, re-indexed as H.as_group().
inline Cochain2 restrict(const Cochain2& eps, const Subgroup& H) {
    if (!H.parent().same_table(eps.base()) || !H.is_closed())
        throw InvalidInput("restrict: not a subgroup of the base group");
    const auto HG = H.as_group();
    Cochain2 out(HG, eps.coeffs());
    const auto& el = H.elements();
    for (Element i = 1; i < el.size(); ++i)
        for (Element j = 1; j < el.size(); ++j) out.set(i, j, eps.at(el[i], el[j]));
    return out;
}

inline Cochain2 project_coefficients(const Cochain2& eps, u64 p) {
    PrimaryPart P(eps.coeffs(), p);
    Cochain2 out(eps.base(), P.module());
    for (Element g = 1; g < eps.base().order(); ++g)
        for (Element h = 1; h < eps.base().order(); ++h) out.set(g, h, P.project(eps.at(g, h)));
    return out;
}

// Cochain-level transfer from H to G. With t-hat the least element of the
// left coset tH and h(g, t) = (g t)-hat^{-1} g t in H,
//   (cor f)(a, b) = sum over t of f(h(a, b t), h(b, t)).
inline Cochain2 corestrict(const Cochain2& f, const Subgroup& H) {
    const auto& G = H.parent();
    if (!f.base().same_table(H.as_group()))
        throw InvalidInput("corestrict: cochain base is not the given subgroup");
    const std::size_t n = G.order();
    std::vector<Element> rep(n, ~Element{0});
    std::vector<Element> transversal;
    for (Element g = 0; g < n; ++g) {
        if (rep[g] != ~Element{0}) continue;
        transversal.push_back(g);
        for (auto h : H.elements()) rep[G.mul(g, h)] = g;
    }
    auto hpart = [&](Element g, Element t) {
        const Element gt = G.mul(g, t);
        return *H.position(G.mul(G.inv(rep[gt]), gt));
    };
    const auto& M = f.coeffs();
    Cochain2 out(G, M);
    for (Element a = 1; a < n; ++a)
        for (Element b = 1; b < n; ++b) {
            Residues s = M.zero();
            for (auto t : transversal)
                s = M.add(s, f.at(hpart(a, rep[G.mul(b, t)]), hpart(b, t)));
            out.set(a, b, s);
        }
    return out;
}

// Literal enumeration of all normalized cocycles and coboundaries, keyed by
// the module-element index at each free coordinate.
struct BruteForceSpaces {
    std::set<std::vector<Element>> cocycles;
    std::set<std::vector<Element>> coboundaries;
};

inline std::vector<Element> cochain_key(const Cochain2& c) {
    const std::size_t n = c.base().order();
    std::vector<Element> k;
    for (Element g = 1; g < n; ++g)
        for (Element h = 1; h < n; ++h) k.push_back(c.index_at(g, h));
    return k;
}

inline BruteForceSpaces brute_force_spaces(const FiniteGroup& G, const AbelianModule& M,
                                           const Limits& limits = {}) {
    const std::size_t n = G.order(), N = (n - 1) * (n - 1);
    const u64 m = M.order();
    u64 total = 1;
    for (std::size_t i = 0; i < N; ++i) {
        total *= m;
        if (total > limits.oracle_bound)
            throw CapExceeded("brute-force cochain enumeration", limits.oracle_bound);
    }
    std::vector<std::vector<Element>> add(m, std::vector<Element>(m));
    for (Element a = 0; a < m; ++a)
        for (Element b = 0; b < m; ++b)
            add[a][b] = M.index_of(M.add(M.vector_of(a), M.vector_of(b)));
    auto at = [&](const std::vector<Element>& k, Element a, Element b) -> Element {
        return (a == 0 || b == 0) ? 0 : k[detail::coord(n, a, b)];
    };
    BruteForceSpaces out;
    std::vector<Element> key(N, 0);
    for (u64 it = 0; it < total; ++it) {
        bool ok = true;
        for (Element h = 1; h < n && ok; ++h)
            for (Element g = 1; g < n && ok; ++g)
                for (Element k = 1; k < n && ok; ++k)
                    ok = add[at(key, h, g)][at(key, G.mul(h, g), k)] ==
                         add[at(key, g, k)][at(key, h, G.mul(g, k))];
        if (ok) out.cocycles.insert(key);
        for (std::size_t i = 0; i < N && ++key[i] == m; ++i) key[i] = 0;
    }
    // all eta
    u64 etas = 1;
    for (std::size_t i = 1; i < n; ++i) etas *= m;
    std::vector<Element> eta(n, 0);
    for (u64 it = 0; it < etas; ++it) {
        OneCochain e = OneCochain::from_index_table(G, M, eta);
        out.coboundaries.insert(cochain_key(coboundary_of(e)));
        for (std::size_t i = 1; i < n && ++eta[i] == m; ++i) eta[i] = 0;
    }
    return out;
}

}  // namespace extlab
