#pragma once

// Finite abelian modules in invariant-factor form and exact linear algebra
// over Z/m.
//
// Row spans over Z/p^e are canonicalised with the Howell form: rows in
// echelon order, each pivot a power of p, entries above a pivot reduced
// below it, and the span of the rows starting at or after any column equal
// to the part of the full span vanishing before that column. Composite
// moduli are split by CRT and handled one prime power at a time.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extlab/arith.hpp"
#include "extlab/error.hpp"
#include "extlab/group.hpp"

namespace extlab {

using Residues = std::vector<u64>;

// Invariant factors d_1 | d_2 | ... | d_k (ascending) from a multiset of
// prime powers.
inline std::vector<u64> merge_elementary_divisors(const std::vector<u64>& prime_powers) {
    std::map<u64, std::vector<u64>> by_prime;
    for (auto q : prime_powers) {
        if (q <= 1) continue;
        auto f = factorize(q);
        if (f.size() != 1) throw InvalidInput("not a prime power: " + std::to_string(q));
        by_prime[f[0].first].push_back(q);
    }
    std::size_t k = 0;
    for (auto& [p, v] : by_prime) {
        std::sort(v.begin(), v.end(), std::greater<>());
        k = std::max(k, v.size());
    }
    std::vector<u64> out(k, 1);
    for (auto& [p, v] : by_prime)
        for (std::size_t i = 0; i < v.size(); ++i) out[k - 1 - i] *= v[i];
    return out;
}

class AbelianModule {
public:
    AbelianModule() = default;

    const std::vector<u64>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    u64 order() const {
        u64 n = 1;
        for (auto d : factors_) n *= d;
        return n;
    }
    u64 exponent() const { return factors_.empty() ? 1 : factors_.back(); }
    bool is_trivial() const { return factors_.empty(); }

    Residues zero() const { return Residues(rank(), 0); }

    // Mixed radix, first factor fastest; the zero vector is index 0.
    Element index_of(const Residues& x) const {
        u64 idx = 0, radix = 1;
        for (std::size_t i = 0; i < rank(); ++i) {
            idx += (x[i] % factors_[i]) * radix;
            radix *= factors_[i];
        }
        return static_cast<Element>(idx);
    }
    Residues vector_of(Element idx) const {
        Residues x(rank());
        u64 v = idx;
        for (std::size_t i = 0; i < rank(); ++i) {
            x[i] = v % factors_[i];
            v /= factors_[i];
        }
        return x;
    }

    Residues add(const Residues& a, const Residues& b) const {
        Residues r(rank());
        for (std::size_t i = 0; i < rank(); ++i) r[i] = (a[i] + b[i]) % factors_[i];
        return r;
    }
    Residues sub(const Residues& a, const Residues& b) const {
        Residues r(rank());
        for (std::size_t i = 0; i < rank(); ++i)
            r[i] = (a[i] + factors_[i] - b[i] % factors_[i]) % factors_[i];
        return r;
    }
    Residues scale(const Residues& a, std::int64_t k) const {
        Residues r(rank());
        for (std::size_t i = 0; i < rank(); ++i) {
            const auto d = static_cast<std::int64_t>(factors_[i]);
            r[i] = static_cast<u64>((((k % d) + d) % d) * static_cast<std::int64_t>(a[i] % factors_[i]) % d);
        }
        return r;
    }
    bool is_zero(const Residues& a) const {
        return std::all_of(a.begin(), a.end(), [](u64 v) { return v == 0; });
    }

    // Additive group as a FiniteGroup (indices as in index_of).
    FiniteGroup as_group() const {
        const std::size_t n = order();
        std::vector<Element> flat(n * n);
        for (Element a = 0; a < n; ++a) {
            const Residues va = vector_of(a);
            for (Element b = 0; b < n; ++b) flat[a * n + b] = index_of(add(va, vector_of(b)));
        }
        return FiniteGroup::from_flat(std::move(flat), n, label(), false);
    }

    std::string label() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            s += (i ? "xC" : "C") + std::to_string(factors_[i]);
        return s;
    }

    bool operator==(const AbelianModule& o) const { return factors_ == o.factors_; }

    // Trusts that factors is already a divisibility chain of entries >= 2.
    static AbelianModule from_chain(std::vector<u64> factors) {
        AbelianModule M;
        M.factors_ = std::move(factors);
        return M;
    }

private:
    std::vector<u64> factors_;
};

// Normalised module for an arbitrary list of cyclic orders, together with the
// isomorphism carrying vectors over the raw factors to normalised vectors.
struct NormalizedModule {
    AbelianModule module;
    std::vector<u64> raw_factors;

    Residues map_raw(const Residues& raw) const {
        // split each raw coordinate into prime-power pieces
        struct Piece {
            u64 p, q, value;
        };
        std::map<u64, std::vector<Piece>> by_prime;
        for (std::size_t i = 0; i < raw_factors.size(); ++i)
            for (auto [p, e] : factorize(raw_factors[i])) {
                u64 q = ipow(p, e);
                by_prime[p].push_back({p, q, raw[i] % q});
            }
        const auto& inv = module.factors();
        Residues out(inv.size(), 0);
        Residues mod_so_far(inv.size(), 1);
        for (auto& [p, pieces] : by_prime) {
            std::stable_sort(pieces.begin(), pieces.end(),
                             [](const Piece& a, const Piece& b) { return a.q > b.q; });
            for (std::size_t i = 0; i < pieces.size(); ++i) {
                const std::size_t slot = inv.size() - 1 - i;
                out[slot] = crt_pair(out[slot], mod_so_far[slot], pieces[i].value, pieces[i].q);
                mod_so_far[slot] *= pieces[i].q;
            }
        }
        return out;
    }
};

inline NormalizedModule normalize_factors(const std::vector<std::int64_t>& factors) {
    std::vector<u64> kept, powers;
    for (auto f : factors) {
        if (f <= 0) throw InvalidInput("module factor must be positive, got " + std::to_string(f));
        if (f == 1) continue;
        kept.push_back(static_cast<u64>(f));
        for (auto [p, e] : factorize(static_cast<u64>(f))) powers.push_back(ipow(p, e));
    }
    return {AbelianModule::from_chain(merge_elementary_divisors(powers)), kept};
}

inline AbelianModule module_from_factors(const std::vector<std::int64_t>& factors) {
    return normalize_factors(factors).module;
}

// The p-component of a module: invariant factors p^{v_p(d_i)} (ones dropped).
class PrimaryPart {
public:
    PrimaryPart(const AbelianModule& parent, u64 p) : parent_(parent), prime_(p) {
        std::vector<u64> fs;
        for (std::size_t i = 0; i < parent.rank(); ++i) {
            const u64 q = p_part(parent.factors()[i], p);
            if (q > 1) {
                fs.push_back(q);
                slots_.push_back(i);
            }
        }
        module_ = AbelianModule::from_chain(std::move(fs));
    }

    u64 prime() const { return prime_; }
    const AbelianModule& module() const { return module_; }
    const AbelianModule& parent() const { return parent_; }

    Residues project(const Residues& x) const {
        Residues y(module_.rank());
        for (std::size_t j = 0; j < slots_.size(); ++j) y[j] = x[slots_[j]] % module_.factors()[j];
        return y;
    }
    // CRT idempotent lift, so project(inject(y)) == y.
    Residues inject(const Residues& y) const {
        Residues x = parent_.zero();
        for (std::size_t j = 0; j < slots_.size(); ++j)
            x[slots_[j]] = crt_lift(y[j], module_.factors()[j], parent_.factors()[slots_[j]]);
        return x;
    }

private:
    AbelianModule parent_;
    u64 prime_;
    AbelianModule module_;
    std::vector<std::size_t> slots_;
};

inline std::vector<PrimaryPart> primary_decomposition(const AbelianModule& M) {
    std::vector<PrimaryPart> parts;
    for (auto p : prime_divisors(M.order())) parts.emplace_back(M, p);
    return parts;
}

// Dense matrix over Z/m.
struct ModMatrix {
    u64 modulus = 2;
    std::size_t cols = 0;
    std::vector<Residues> rows;

    ModMatrix() = default;
    ModMatrix(u64 m, std::size_t ncols, std::vector<Residues> r = {})
        : modulus(m), cols(ncols), rows(std::move(r)) {
        if (m < 2) throw InvalidInput("modulus must be at least 2");
        for (auto& row : rows) {
            if (row.size() != cols) throw InvalidInput("row length mismatch");
            for (auto& v : row) v %= m;
        }
    }
    std::size_t row_count() const { return rows.size(); }
    bool operator==(const ModMatrix& o) const {
        return modulus == o.modulus && cols == o.cols && rows == o.rows;
    }
};

// Row span over Z/p^e kept in Howell form.
class PrimePowerSpan {
public:
    PrimePowerSpan() = default;
    PrimePowerSpan(u64 p, unsigned e, std::size_t cols, std::vector<Residues> generators)
        : p_(p), e_(e), q_(ipow(p, e)), cols_(cols) {
        build(std::move(generators));
    }

    u64 prime() const { return p_; }
    unsigned exponent() const { return e_; }
    u64 modulus() const { return q_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Residues>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivot_col_; }

    // log_p of the number of elements in the span.
    unsigned log_order() const {
        unsigned s = 0;
        for (auto v : pivot_val_) s += e_ - v;
        return s;
    }

    // Canonical representative of x modulo the span.
    Residues reduce(Residues x) const {
        for (auto& v : x) v %= q_;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const u64 piv = ipow(p_, pivot_val_[k]);
            const u64 c = x[pivot_col_[k]] / piv;
            if (c == 0) continue;
            const auto& r = rows_[k];
            for (std::size_t j = pivot_col_[k]; j < cols_; ++j) x[j] = (x[j] + (q_ - c) * r[j]) % q_;
        }
        return x;
    }
    bool contains(const Residues& x) const {
        auto r = reduce(x);
        return std::all_of(r.begin(), r.end(), [](u64 v) { return v == 0; });
    }

    // Coefficients c with sum c_k rows_k == x, if x lies in the span.
    std::optional<Residues> coordinates(Residues x) const {
        for (auto& v : x) v %= q_;
        Residues c(rows_.size(), 0);
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const u64 piv = ipow(p_, pivot_val_[k]);
            const u64 ck = x[pivot_col_[k]] / piv;
            c[k] = ck;
            if (ck == 0) continue;
            for (std::size_t j = pivot_col_[k]; j < cols_; ++j)
                x[j] = (x[j] + (q_ - ck) * rows_[k][j]) % q_;
        }
        if (!std::all_of(x.begin(), x.end(), [](u64 v) { return v == 0; })) return std::nullopt;
        return c;
    }

private:
    unsigned valuation(u64 a) const {
        if (a == 0) return e_;
        unsigned v = 0;
        while (a % p_ == 0) {
            a /= p_;
            ++v;
        }
        return v;
    }

    void build(std::vector<Residues> pool) {
        for (auto& r : pool) {
            if (r.size() != cols_) throw InvalidInput("row length mismatch");
            for (auto& v : r) v %= q_;
        }
        auto is_zero = [](const Residues& r) {
            return std::all_of(r.begin(), r.end(), [](u64 v) { return v == 0; });
        };
        pool.erase(std::remove_if(pool.begin(), pool.end(), is_zero), pool.end());
        for (std::size_t j = 0; j < cols_ && !pool.empty(); ++j) {
            std::size_t best = pool.size();
            unsigned best_v = e_;
            for (std::size_t r = 0; r < pool.size(); ++r) {
                const unsigned v = valuation(pool[r][j]);
                if (v < best_v) {
                    best_v = v;
                    best = r;
                    if (v == 0) break;
                }
            }
            if (best == pool.size()) continue;
            Residues piv = std::move(pool[best]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
            const u64 pk = ipow(p_, best_v);
            const u64 unit = piv[j] / pk;
            const u64 uinv = mod_inverse(unit % q_, q_);
            for (std::size_t c = j; c < cols_; ++c) piv[c] = piv[c] * uinv % q_;
            for (auto& r : pool) {
                if (r[j] == 0) continue;
                const u64 f = r[j] / pk;
                for (std::size_t c = j; c < cols_; ++c) r[c] = (r[c] + (q_ - f) * piv[c]) % q_;
            }
            if (best_v > 0) {
                Residues ann(cols_);
                const u64 mult = ipow(p_, e_ - best_v);
                for (std::size_t c = 0; c < cols_; ++c) ann[c] = piv[c] * mult % q_;
                if (!is_zero(ann)) pool.push_back(std::move(ann));
            }
            pool.erase(std::remove_if(pool.begin(), pool.end(), is_zero), pool.end());
            rows_.push_back(std::move(piv));
            pivot_col_.push_back(j);
            pivot_val_.push_back(best_v);
        }
        // reduce entries above each pivot
        for (std::size_t k = 1; k < rows_.size(); ++k) {
            const u64 piv = ipow(p_, pivot_val_[k]);
            const std::size_t col = pivot_col_[k];
            for (std::size_t i = 0; i < k; ++i) {
                const u64 c = rows_[i][col] / piv;
                if (c == 0) continue;
                for (std::size_t j = col; j < cols_; ++j)
                    rows_[i][j] = (rows_[i][j] + (q_ - c) * rows_[k][j]) % q_;
            }
        }
    }

    u64 p_ = 2;
    unsigned e_ = 1;
    u64 q_ = 2;
    std::size_t cols_ = 0;
    std::vector<Residues> rows_;
    std::vector<std::size_t> pivot_col_;
    std::vector<unsigned> pivot_val_;
};

namespace detail {

inline std::vector<Residues> reduce_rows(const std::vector<Residues>& rows, u64 q) {
    std::vector<Residues> out = rows;
    for (auto& r : out)
        for (auto& v : r) v %= q;
    return out;
}

// Lift a vector over Z/q to Z/m (zero in the other CRT components).
inline Residues lift_vector(const Residues& v, u64 q, u64 m) {
    Residues out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = crt_lift(v[i], q, m);
    return out;
}

}  // namespace detail

// Canonical row-span form over Z/m. For a prime-power modulus this is the
// Howell form; otherwise the Howell forms of the prime-power components,
// each lifted by CRT with zero in the other components, stacked in
// ascending prime order. Equal spans give identical output.
inline ModMatrix howell_form(const ModMatrix& A) {
    ModMatrix out(A.modulus, A.cols);
    for (auto [p, e] : factorize(A.modulus)) {
        const u64 q = ipow(p, e);
        PrimePowerSpan S(p, e, A.cols, detail::reduce_rows(A.rows, q));
        for (const auto& r : S.rows()) out.rows.push_back(detail::lift_vector(r, q, A.modulus));
    }
    return out;
}

struct LinearSolution {
    Residues particular;
    std::vector<Residues> kernel;  // generating set of {x : A x = 0}
};

// Solves A x = b over Z/m (A given by rows).
inline std::optional<LinearSolution> solve_linear(const ModMatrix& A, const Residues& b) {
    if (b.size() != A.row_count()) throw InvalidInput("right-hand side length mismatch");
    const std::size_t nvars = A.cols, neq = A.row_count();
    LinearSolution sol{Residues(nvars, 0), {}};
    u64 done = 1;  // product of the prime powers already combined
    for (auto [p, e] : factorize(A.modulus)) {
        const u64 q = ipow(p, e);
        // rows [column_i(A) | e_i]
        std::vector<Residues> rows(nvars, Residues(neq + nvars, 0));
        for (std::size_t i = 0; i < nvars; ++i) {
            for (std::size_t r = 0; r < neq; ++r) rows[i][r] = A.rows[r][i] % q;
            rows[i][neq + i] = 1;
        }
        PrimePowerSpan S(p, e, neq + nvars, std::move(rows));
        Residues target(neq + nvars, 0);
        for (std::size_t r = 0; r < neq; ++r) target[r] = b[r] % q;
        Residues red = S.reduce(target);
        for (std::size_t r = 0; r < neq; ++r)
            if (red[r] != 0) return std::nullopt;
        std::vector<Residues> kernel;
        for (std::size_t k = 0; k < S.rows().size(); ++k) {
            if (S.pivot_columns()[k] < neq) continue;
            kernel.emplace_back(S.rows()[k].begin() + static_cast<std::ptrdiff_t>(neq),
                                S.rows()[k].end());
        }
        // canonical particular solution: reduced modulo the kernel
        Residues x(nvars);
        for (std::size_t i = 0; i < nvars; ++i) x[i] = (q - red[neq + i]) % q;
        x = PrimePowerSpan(p, e, nvars, kernel).reduce(std::move(x));
        for (std::size_t i = 0; i < nvars; ++i)
            sol.particular[i] = crt_pair(sol.particular[i], done, x[i], q);
        done *= q;
        for (auto& y : kernel) sol.kernel.push_back(detail::lift_vector(y, q, A.modulus));
    }
    return sol;
}

namespace detail {

// log_p |p^j S + U| for S, U spans over Z/p^e.
inline unsigned log_order_of_sum(const PrimePowerSpan& S, const PrimePowerSpan& U, unsigned j) {
    std::vector<Residues> gens = U.rows();
    const u64 q = S.modulus(), mult = ipow(S.prime(), j) % q;
    for (const auto& r : S.rows()) {
        Residues x(r.size());
        for (std::size_t c = 0; c < r.size(); ++c) x[c] = r[c] * mult % q;
        gens.push_back(std::move(x));
    }
    return PrimePowerSpan(S.prime(), S.exponent(), S.cols(), std::move(gens)).log_order();
}

}  // namespace detail

// Elementary divisors (as prime powers) of span(S) / span(U) over Z/p^e.
inline std::vector<u64> quotient_elementary_divisors(const PrimePowerSpan& S,
                                                     const PrimePowerSpan& U) {
    for (const auto& r : U.rows())
        if (!S.contains(r)) throw InvalidInput("sub span is not contained in span");
    const unsigned e = S.exponent();
    const unsigned lu = U.log_order();
    // L[j] = log_p |p^j Q| = sum over cyclic factors p^a of max(a - j, 0)
    std::vector<unsigned> L(e + 2, 0);
    for (unsigned j = 0; j <= e; ++j) L[j] = detail::log_order_of_sum(S, U, j) - lu;
    std::vector<u64> out;
    for (unsigned a = 1; a <= e; ++a) {
        // #factors with exponent >= a  is  L[a-1] - L[a]
        const unsigned ge_a = L[a - 1] - L[a];
        const unsigned ge_a1 = L[a] - L[a + 1];
        for (unsigned k = 0; k < ge_a - ge_a1; ++k) out.push_back(ipow(S.prime(), a));
    }
    return out;
}

// Invariant factors of (row span of span_gens) / (row span of sub_gens).
inline std::vector<u64> quotient_invariants(const ModMatrix& span_gens, const ModMatrix& sub_gens) {
    if (span_gens.modulus != sub_gens.modulus || span_gens.cols != sub_gens.cols)
        throw InvalidInput("quotient_invariants: shape or modulus mismatch");
    std::vector<u64> powers;
    for (auto [p, e] : factorize(span_gens.modulus)) {
        const u64 q = ipow(p, e);
        PrimePowerSpan S(p, e, span_gens.cols, detail::reduce_rows(span_gens.rows, q));
        PrimePowerSpan U(p, e, span_gens.cols, detail::reduce_rows(sub_gens.rows, q));
        auto ed = quotient_elementary_divisors(S, U);
        powers.insert(powers.end(), ed.begin(), ed.end());
    }
    return merge_elementary_divisors(powers);
}

}  // namespace extlab
