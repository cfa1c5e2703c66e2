#pragma once

// Named groups: C<n>, V4, D<2n>, Q8, Q16, SD16, S<n>, A<n> (n <= 5),
// elementary abelian E<p^k> (or C<p>^<k>), and direct products "AxB".

#include <cctype>
#include <string>
#include <vector>

#include "extlab/group.hpp"

namespace extlab {

inline FiniteGroup cyclic_group(std::size_t n, std::string label = {}) {
    if (n == 0) throw InvalidInput("cyclic group of order 0");
    std::vector<Element> flat(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Element>((a + b) % n);
    if (label.empty()) label = "C" + std::to_string(n);
    return FiniteGroup::from_flat(std::move(flat), n, std::move(label), false);
}

// <a, x | a^m = 1, x^2 = a^(m*z), x a x^-1 = a^r>, elements a^k x^j at index k + m j.
// z = 0 gives the split metacyclic groups (dihedral, semidihedral);
// r = -1, z = 1/2 (encoded as half_power) gives generalized quaternion.
inline FiniteGroup metacyclic_by_two(std::size_t m, std::int64_t r, std::size_t x_square_power,
                                     std::string label) {
    const std::size_t n = 2 * m;
    auto md = [m](std::int64_t v) {
        const auto mm = static_cast<std::int64_t>(m);
        return static_cast<std::size_t>(((v % mm) + mm) % mm);
    };
    std::vector<Element> flat(n * n);
    for (std::size_t e1 = 0; e1 < n; ++e1)
        for (std::size_t e2 = 0; e2 < n; ++e2) {
            const auto k = static_cast<std::int64_t>(e1 % m), l = static_cast<std::int64_t>(e2 % m);
            const std::size_t j = e1 / m, jj = e2 / m;
            // a^k x^j a^l x^jj = a^(k + r^j l) x^(j + jj)
            std::int64_t exp = k + (j ? r * l : l);
            std::size_t xs = j + jj;
            if (xs == 2) {
                exp += static_cast<std::int64_t>(x_square_power);
                xs = 0;
            }
            flat[e1 * n + e2] = static_cast<Element>(md(exp) + m * xs);
        }
    return FiniteGroup::from_flat(std::move(flat), n, std::move(label), true);
}

inline FiniteGroup dihedral_group(std::size_t order) {
    if (order < 2 || order % 2) throw InvalidInput("dihedral order must be even");
    return metacyclic_by_two(order / 2, -1, 0, "D" + std::to_string(order));
}

inline FiniteGroup quaternion_group(std::size_t order) {
    if (order < 8 || !is_power_of(order, 2))
        throw InvalidInput("generalized quaternion order must be a power of 2, at least 8");
    return metacyclic_by_two(order / 2, -1, order / 4, "Q" + std::to_string(order));
}

inline FiniteGroup semidihedral_group(std::size_t order) {
    if (order < 16 || !is_power_of(order, 2))
        throw InvalidInput("semidihedral order must be a power of 2, at least 16");
    const auto m = static_cast<std::int64_t>(order / 2);
    return metacyclic_by_two(order / 2, m / 2 - 1, 0, "SD" + std::to_string(order));
}

inline FiniteGroup symmetric_group(std::size_t n) {
    if (n < 1 || n > 5) throw InvalidInput("symmetric group preset supports 1 <= n <= 5");
    std::vector<Permutation> gens;
    if (n >= 2) {
        Permutation t(n), c(n);
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = static_cast<std::uint32_t>(i);
            c[i] = static_cast<std::uint32_t>((i + 1) % n);
        }
        std::swap(t[0], t[1]);
        gens = {t, c};
    }
    return FiniteGroup::from_permutations(n, gens, "S" + std::to_string(n));
}

inline FiniteGroup alternating_group(std::size_t n) {
    if (n < 1 || n > 5) throw InvalidInput("alternating group preset supports 1 <= n <= 5");
    std::vector<Permutation> gens;
    for (std::size_t k = 2; k < n; ++k) {
        Permutation c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>(i);
        c[0] = 1;
        c[1] = static_cast<std::uint32_t>(k);
        c[k] = 0;
        gens.push_back(c);
    }
    return FiniteGroup::from_permutations(n, gens, "A" + std::to_string(n));
}

namespace detail {

inline bool parse_uint(const std::string& s, std::size_t& out) {
    if (s.empty() || s.size() > 9) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = std::stoul(s);
    return true;
}

inline FiniteGroup single_preset(const std::string& name) {
    std::size_t n = 0;
    if (name == "1" || name == "C1") return cyclic_group(1, "1");
    if (name == "V4" || name == "K4") return direct_product(cyclic_group(2), cyclic_group(2), "V4");
    if (name == "Q8") return quaternion_group(8);
    if (name == "Q16") return quaternion_group(16);
    if (name == "SD16") return semidihedral_group(16);
    // C<p>^<k>
    if (auto hat = name.find('^'); hat != std::string::npos && name[0] == 'C') {
        std::size_t p = 0, k = 0;
        if (parse_uint(name.substr(1, hat - 1), p) && parse_uint(name.substr(hat + 1), k) &&
            k >= 1 && p >= 1) {
            FiniteGroup G = cyclic_group(p);
            for (std::size_t i = 1; i < k; ++i) G = direct_product(G, cyclic_group(p));
            return G.relabeled(name);
        }
    }
    if (name.size() >= 2 && name[0] == 'E' && parse_uint(name.substr(1), n)) {
        auto f = factorize(n);
        if (f.size() != 1) throw InvalidInput("elementary abelian order must be a prime power");
        return single_preset("C" + std::to_string(f[0].first) + "^" + std::to_string(f[0].second))
            .relabeled(name);
    }
    if (name.size() >= 2 && name[0] == 'C' && parse_uint(name.substr(1), n) && n >= 1)
        return cyclic_group(n);
    if (name.size() >= 2 && name[0] == 'D' && parse_uint(name.substr(1), n)) {
        if (n == 4) return dihedral_group(4).relabeled("D4");
        return dihedral_group(n);
    }
    if (name.size() >= 2 && name[0] == 'S' && parse_uint(name.substr(1), n))
        return symmetric_group(n);
    if (name.size() >= 2 && name[0] == 'A' && parse_uint(name.substr(1), n))
        return alternating_group(n);
    throw InvalidInput("unknown preset group '" + name + "'");
}

}  // namespace detail

// Preset by name; "x"-separated names build direct products left to right.
inline FiniteGroup preset_group(const std::string& name, const Limits& limits = {}) {
    if (name.empty()) throw InvalidInput("empty preset name");
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = name.find('x', start);
        parts.push_back(name.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    FiniteGroup G = detail::single_preset(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) {
        FiniteGroup H = detail::single_preset(parts[i]);
        if (G.order() * H.order() > limits.max_table_order)
            throw CapExceeded("preset " + name + " exceeds table cap", limits.max_table_order);
        G = direct_product(G, H);
    }
    if (G.order() > limits.max_table_order)
        throw CapExceeded("preset " + name + " exceeds table cap", limits.max_table_order);
    return G.relabeled(name);
}

}  // namespace extlab
