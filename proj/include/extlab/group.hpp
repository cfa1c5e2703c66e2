#pragma once

// Finite groups as explicit multiplication tables.
//
// Every FiniteGroup has the identity at index 0. Tables are immutable after
// construction and shared between copies, so passing groups by value is cheap.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "extlab/arith.hpp"
#include "extlab/error.hpp"

namespace extlab {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

class FiniteGroup {
public:
    FiniteGroup() : FiniteGroup(trivial()) {}

    // Validates closure, identity, inverses and associativity. The identity
    // is moved to index 0 (other elements keep their relative order).
    static FiniteGroup from_table(const std::vector<std::vector<std::int64_t>>& table,
                                  std::string label, const Limits& limits = {}) {
        const std::size_t n = table.size();
        if (n == 0) throw InvalidInput("empty Cayley table");
        if (n > limits.max_table_order)
            throw CapExceeded("group order " + std::to_string(n) + " exceeds table cap",
                              limits.max_table_order);
        for (std::size_t i = 0; i < n; ++i) {
            if (table[i].size() != n)
                throw InvalidInput("Cayley table row " + std::to_string(i) + " has wrong length");
            for (auto v : table[i])
                if (v < 0 || static_cast<std::size_t>(v) >= n)
                    throw InvalidInput("Cayley table entry out of range in row " +
                                       std::to_string(i));
        }
        std::optional<std::size_t> id;
        for (std::size_t e = 0; e < n && !id; ++e) {
            bool ok = true;
            for (std::size_t g = 0; g < n && ok; ++g)
                ok = static_cast<std::size_t>(table[e][g]) == g &&
                     static_cast<std::size_t>(table[g][e]) == g;
            if (ok) id = e;
        }
        if (!id) throw InvalidInput("Cayley table has no two-sided identity");

        // relabel: identity -> 0, others shift
        std::vector<Element> to_new(n), to_old(n);
        to_old[0] = static_cast<Element>(*id);
        for (std::size_t g = 0, k = 1; g < n; ++g)
            if (g != *id) to_old[k++] = static_cast<Element>(g);
        for (std::size_t k = 0; k < n; ++k) to_new[to_old[k]] = static_cast<Element>(k);

        std::vector<Element> flat(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                flat[a * n + b] = to_new[static_cast<std::size_t>(table[to_old[a]][to_old[b]])];
        return from_flat(std::move(flat), n, std::move(label), /*verify=*/true);
    }

    // Closure of permutation generators, breadth-first in input order.
    // Composition applies the left factor first: (p*q)(i) = q(p(i)).
    static FiniteGroup from_permutations(std::size_t degree, const std::vector<Permutation>& gens,
                                         std::string label, const Limits& limits = {}) {
        for (const auto& g : gens) {
            if (g.size() != degree)
                throw InvalidInput("generator permutation has degree " +
                                   std::to_string(g.size()) + ", expected " +
                                   std::to_string(degree));
            std::vector<bool> seen(degree, false);
            for (auto v : g) {
                if (v >= degree || seen[v]) throw InvalidInput("generator is not a permutation");
                seen[v] = true;
            }
        }
        Permutation id(degree);
        std::iota(id.begin(), id.end(), 0u);
        std::map<Permutation, Element> index;
        std::vector<Permutation> elems;
        auto add = [&](Permutation p) -> bool {
            if (index.count(p)) return false;
            if (elems.size() >= limits.max_table_order)
                throw CapExceeded("permutation group closure exceeds table cap",
                                  limits.max_table_order);
            index.emplace(p, static_cast<Element>(elems.size()));
            elems.push_back(std::move(p));
            return true;
        };
        add(id);
        for (std::size_t head = 0; head < elems.size(); ++head) {
            for (const auto& g : gens) {
                Permutation prod(degree);
                for (std::size_t i = 0; i < degree; ++i) prod[i] = g[elems[head][i]];
                add(std::move(prod));
            }
        }
        const std::size_t n = elems.size();
        std::vector<Element> flat(n * n);
        Permutation prod(degree);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t i = 0; i < degree; ++i) prod[i] = elems[b][elems[a][i]];
                flat[a * n + b] = index.at(prod);
            }
        return from_flat(std::move(flat), n, std::move(label), /*verify=*/false);
    }

    // Table already known to be a group with identity 0 (built internally).
    // Associativity is still checked when verify is set.
    static FiniteGroup from_flat(std::vector<Element> flat, std::size_t n, std::string label,
                                 bool verify) {
        auto d = std::make_shared<Data>();
        d->n = n;
        d->label = std::move(label);
        d->table = std::move(flat);
        d->inverse.assign(n, 0);
        for (std::size_t g = 0; g < n; ++g) {
            bool found = false;
            for (std::size_t h = 0; h < n; ++h)
                if (d->table[g * n + h] == 0) {
                    d->inverse[g] = static_cast<Element>(h);
                    found = true;
                    break;
                }
            if (!found) throw InvalidInput("no inverse for element " + std::to_string(g));
            if (d->table[d->inverse[g] * n + g] != 0)
                throw InvalidInput("inverse of element " + std::to_string(g) + " is not two-sided");
        }
        if (verify) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const std::size_t ab = d->table[a * n + b];
                    for (std::size_t c = 0; c < n; ++c)
                        if (d->table[ab * n + c] != d->table[a * n + d->table[b * n + c]])
                            throw InvalidInput("table is not associative at (" +
                                               std::to_string(a) + "," + std::to_string(b) + "," +
                                               std::to_string(c) + ")");
                }
        }
        d->element_orders.assign(n, 1);
        for (std::size_t g = 1; g < n; ++g) {
            std::size_t k = 1;
            Element x = static_cast<Element>(g);
            while (x != 0) {
                x = d->table[x * n + g];
                if (++k > n) throw InvalidInput("element " + std::to_string(g) + " has no finite order");
            }
            d->element_orders[g] = k;
        }
        FiniteGroup G;
        G.d_ = std::move(d);
        return G;
    }

    std::size_t order() const { return d_->n; }
    const std::string& label() const { return d_->label; }
    Element mul(Element a, Element b) const { return d_->table[a * d_->n + b]; }
    Element inv(Element a) const { return d_->inverse[a]; }
    std::size_t element_order(Element a) const { return d_->element_orders[a]; }
    const std::vector<std::size_t>& element_orders() const { return d_->element_orders; }
    const std::vector<Element>& flat_table() const { return d_->table; }

    Element pow(Element a, std::int64_t k) const {
        const auto o = static_cast<std::int64_t>(element_order(a));
        k %= o;
        if (k < 0) k += o;
        Element r = 0;
        for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }
    // [a,b] = a b a^-1 b^-1
    Element commutator(Element a, Element b) const {
        return mul(mul(a, b), mul(inv(a), inv(b)));
    }
    Element conjugate(Element g, Element x) const { return mul(mul(g, x), inv(g)); }

    bool is_abelian() const {
        for (Element a = 0; a < order(); ++a)
            for (Element b = a + 1; b < order(); ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    // |class of x| for every x
    const std::vector<std::size_t>& class_sizes() const {
        std::call_once(d_->class_once, [this] {
            const std::size_t n = order();
            d_->class_sizes.assign(n, 1);
            for (Element x = 0; x < n; ++x) {
                std::size_t centralizer = 0;
                for (Element g = 0; g < n; ++g)
                    if (mul(g, x) == mul(x, g)) ++centralizer;
                d_->class_sizes[x] = n / centralizer;
            }
        });
        return d_->class_sizes;
    }

    bool same_table(const FiniteGroup& o) const {
        return d_ == o.d_ || (d_->n == o.d_->n && d_->table == o.d_->table);
    }
    bool operator==(const FiniteGroup& o) const { return same_table(o); }

    FiniteGroup relabeled(std::string label) const {
        FiniteGroup G = *this;
        auto d = std::make_shared<Data>();
        d->n = d_->n;
        d->label = std::move(label);
        d->table = d_->table;
        d->inverse = d_->inverse;
        d->element_orders = d_->element_orders;
        G.d_ = std::move(d);
        return G;
    }

private:
    struct Data {
        std::size_t n = 1;
        std::string label;
        std::vector<Element> table{0};
        std::vector<Element> inverse{0};
        std::vector<std::size_t> element_orders{1};
        mutable std::once_flag class_once;
        mutable std::vector<std::size_t> class_sizes;
    };

    static const FiniteGroup& trivial() {
        static const FiniteGroup g = [] {
            FiniteGroup t(nullptr);
            auto d = std::make_shared<Data>();
            d->label = "1";
            t.d_ = std::move(d);
            return t;
        }();
        return g;
    }
    explicit FiniteGroup(std::nullptr_t) {}

    std::shared_ptr<const Data> d_;
};

// A subgroup as a sorted element set of its parent.
class Subgroup {
public:
    Subgroup(FiniteGroup parent, std::vector<Element> elements)
        : parent_(std::move(parent)), elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    }

    const FiniteGroup& parent() const { return parent_; }
    const std::vector<Element>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(Element g) const {
        return std::binary_search(elements_.begin(), elements_.end(), g);
    }
    // Position of g in elements(), which is its index in as_group().
    std::optional<Element> position(Element g) const {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
        if (it == elements_.end() || *it != g) return std::nullopt;
        return static_cast<Element>(it - elements_.begin());
    }

    bool is_closed() const {
        if (!contains(0)) return false;
        for (auto a : elements_) {
            if (!contains(parent_.inv(a))) return false;
            for (auto b : elements_)
                if (!contains(parent_.mul(a, b))) return false;
        }
        return true;
    }

    // The subgroup as a standalone group; element i is elements()[i].
    FiniteGroup as_group(std::string label = {}) const {
        const std::size_t n = elements_.size();
        std::vector<Element> flat(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                flat[a * n + b] = *position(parent_.mul(elements_[a], elements_[b]));
        if (label.empty()) label = "subgroup of " + parent_.label();
        return FiniteGroup::from_flat(std::move(flat), n, std::move(label), false);
    }

    bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

private:
    FiniteGroup parent_;
    std::vector<Element> elements_;
};

// A map between groups given by its image table.
struct GroupMap {
    FiniteGroup domain;
    FiniteGroup codomain;
    std::vector<Element> image;

    Element operator()(Element x) const { return image[x]; }

    static GroupMap identity(const FiniteGroup& G) {
        std::vector<Element> img(G.order());
        std::iota(img.begin(), img.end(), Element{0});
        return {G, G, std::move(img)};
    }

    bool is_homomorphism() const {
        if (image.size() != domain.order() || image[0] != 0) return false;
        for (Element a = 0; a < domain.order(); ++a)
            for (Element b = 0; b < domain.order(); ++b)
                if (image[domain.mul(a, b)] != codomain.mul(image[a], image[b])) return false;
        return true;
    }
    bool is_bijective() const {
        if (domain.order() != codomain.order()) return false;
        std::vector<bool> hit(codomain.order(), false);
        for (auto y : image) {
            if (hit[y]) return false;
            hit[y] = true;
        }
        return true;
    }
    bool is_automorphism() const {
        return domain.same_table(codomain) && is_bijective() && is_homomorphism();
    }
    bool is_identity() const {
        for (Element x = 0; x < image.size(); ++x)
            if (image[x] != x) return false;
        return true;
    }
    // this after first: x -> this(first(x))
    GroupMap after(const GroupMap& first) const {
        std::vector<Element> img(first.image.size());
        for (std::size_t x = 0; x < img.size(); ++x) img[x] = image[first.image[x]];
        return {first.domain, codomain, std::move(img)};
    }
    GroupMap inverse() const {
        std::vector<Element> img(image.size());
        for (std::size_t x = 0; x < image.size(); ++x) img[image[x]] = static_cast<Element>(x);
        return {codomain, domain, std::move(img)};
    }
};

// ---------------------------------------------------------------------------
// Subgroup generation and structure

// Subgroup generated by gens (together with an existing closed set).
inline Subgroup closure(const FiniteGroup& G, const std::vector<Element>& gens) {
    std::vector<bool> in(G.order(), false);
    std::vector<Element> elems{0};
    in[0] = true;
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (auto g : gens) {
            Element y = G.mul(elems[head], g);
            if (!in[y]) {
                in[y] = true;
                elems.push_back(y);
            }
        }
    }
    return Subgroup(G, std::move(elems));
}

inline Subgroup whole(const FiniteGroup& G) {
    std::vector<Element> all(G.order());
    std::iota(all.begin(), all.end(), Element{0});
    return Subgroup(G, std::move(all));
}

// Greedy generating set: repeatedly take the smallest element outside the
// closure so far.
inline std::vector<Element> greedy_generators(const FiniteGroup& G) {
    std::vector<Element> gens;
    std::vector<bool> in(G.order(), false);
    in[0] = true;
    std::size_t covered = 1;
    for (Element g = 1; g < G.order() && covered < G.order(); ++g) {
        if (in[g]) continue;
        gens.push_back(g);
        Subgroup S = closure(G, gens);
        for (auto x : S.elements()) in[x] = true;
        covered = S.order();
    }
    return gens;
}

inline Subgroup center(const FiniteGroup& G) {
    std::vector<Element> z;
    for (Element x = 0; x < G.order(); ++x) {
        bool central = true;
        for (Element g = 0; g < G.order() && central; ++g) central = G.mul(x, g) == G.mul(g, x);
        if (central) z.push_back(x);
    }
    return Subgroup(G, std::move(z));
}

// [A, B] for element sets A, B; the distinct commutators are returned as witnesses.
inline Subgroup commutator_subgroup(const FiniteGroup& G, const std::vector<Element>& A,
                                    const std::vector<Element>& B,
                                    std::vector<Element>* witnesses = nullptr) {
    std::vector<bool> seen(G.order(), false);
    std::vector<Element> comms;
    for (auto a : A)
        for (auto b : B) {
            Element c = G.commutator(a, b);
            if (!seen[c]) {
                seen[c] = true;
                comms.push_back(c);
            }
        }
    std::sort(comms.begin(), comms.end());
    if (witnesses) *witnesses = comms;
    return closure(G, comms);
}

struct DerivedSubgroup {
    Subgroup subgroup;
    std::vector<Element> commutators;  // generating witness set
};

inline DerivedSubgroup derived_subgroup(const FiniteGroup& G) {
    std::vector<Element> all = whole(G).elements();
    std::vector<Element> witnesses;
    Subgroup D = commutator_subgroup(G, all, all, &witnesses);
    return {std::move(D), std::move(witnesses)};
}

// gamma_1 = G, gamma_{i+1} = [gamma_i, G], until it stabilises.
inline std::vector<Subgroup> lower_central_series(const FiniteGroup& G) {
    std::vector<Subgroup> series{whole(G)};
    const std::vector<Element> all = series.front().elements();
    while (true) {
        Subgroup next = commutator_subgroup(G, series.back().elements(), all);
        if (next.order() == series.back().order()) break;
        series.push_back(std::move(next));
        if (series.back().order() == 1) break;
    }
    return series;
}

struct StructureReport {
    bool is_abelian = false;
    bool is_perfect = false;
    bool is_centerless = false;
    bool is_nilpotent = false;
    bool is_cyclic = false;
    std::optional<unsigned> nilpotency_class;
    std::optional<unsigned> coclass;  // p-groups only
    std::optional<u64> prime;         // set when G is a nontrivial p-group
};

inline StructureReport structure_predicates(const FiniteGroup& G) {
    StructureReport r;
    r.is_abelian = G.is_abelian();
    r.is_perfect = derived_subgroup(G).subgroup.order() == G.order();
    r.is_centerless = center(G).order() == 1;
    for (auto o : G.element_orders())
        if (o == G.order()) r.is_cyclic = true;
    auto series = lower_central_series(G);
    r.is_nilpotent = series.back().order() == 1;
    if (r.is_nilpotent) r.nilpotency_class = static_cast<unsigned>(series.size() - 1);
    auto primes = prime_divisors(G.order());
    if (primes.size() == 1) {
        r.prime = primes.front();
        // p-groups are nilpotent
        r.coclass = log_p(G.order(), primes.front()) - *r.nilpotency_class;
    }
    return r;
}

// Sylow p-subgroup. A first Sylow subgroup is grown greedily by adjoining
// p-elements in index order; the returned one is the lexicographically least
// element set among all of its conjugates.
inline Subgroup sylow_subgroup(const FiniteGroup& G, u64 p) {
    const u64 target = p_part(G.order(), p);
    if (target == 1) return Subgroup(G, {0});
    Subgroup P(G, {0});
    while (P.order() < target) {
        bool grown = false;
        for (Element x = 1; x < G.order() && !grown; ++x) {
            if (P.contains(x) || !is_power_of(G.element_order(x), p)) continue;
            std::vector<Element> gens = P.elements();
            gens.push_back(x);
            Subgroup Q = closure(G, gens);
            if (is_power_of(Q.order(), p)) {
                P = std::move(Q);
                grown = true;
            }
        }
        if (!grown) throw Error("Sylow growth stalled (table is not a group?)");
    }
    std::vector<Element> best = P.elements();
    for (Element g = 1; g < G.order(); ++g) {
        std::vector<Element> conj;
        conj.reserve(P.order());
        for (auto x : P.elements()) conj.push_back(G.conjugate(g, x));
        std::sort(conj.begin(), conj.end());
        if (conj < best) best = std::move(conj);
    }
    return Subgroup(G, std::move(best));
}

inline GroupMap inner_automorphism(const FiniteGroup& G, Element g) {
    std::vector<Element> img(G.order());
    for (Element x = 0; x < G.order(); ++x) img[x] = G.conjugate(g, x);
    return {G, G, std::move(img)};
}

// Direct product with the first factor varying fastest: (a, b) -> a + |A| b.
inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B,
                                  std::string label = {}) {
    const std::size_t na = A.order(), nb = B.order(), n = na * nb;
    std::vector<Element> flat(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            flat[x * n + y] = static_cast<Element>(A.mul(x % na, y % na) +
                                                   na * B.mul(x / na, y / na));
    if (label.empty()) label = A.label() + "x" + B.label();
    return FiniteGroup::from_flat(std::move(flat), n, std::move(label), false);
}

}  // namespace extlab
