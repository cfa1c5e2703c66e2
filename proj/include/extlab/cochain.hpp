#pragma once

// Normalized cochains with trivial action, in additive notation.

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "extlab/group.hpp"
#include "extlab/modlinalg.hpp"

namespace extlab {

// Normalized 1-cochain: eta(0) = 0.
class OneCochain {
public:
    OneCochain(FiniteGroup base, AbelianModule coeffs)
        : base_(std::move(base)), coeffs_(std::move(coeffs)),
          data_(base_.order() * coeffs_.rank(), 0) {}

    const FiniteGroup& base() const { return base_; }
    const AbelianModule& coeffs() const { return coeffs_; }

    Residues at(Element y) const {
        const std::size_t k = coeffs_.rank();
        return Residues(data_.begin() + static_cast<std::ptrdiff_t>(y * k),
                        data_.begin() + static_cast<std::ptrdiff_t>((y + 1) * k));
    }
    void set(Element y, const Residues& v) {
        if (y == 0 && !coeffs_.is_zero(v)) throw InvalidInput("1-cochain must vanish at identity");
        const std::size_t k = coeffs_.rank();
        for (std::size_t i = 0; i < k; ++i) data_[y * k + i] = v[i] % coeffs_.factors()[i];
    }
    // image as module element indices
    std::vector<Element> index_table() const {
        std::vector<Element> t(base_.order());
        for (Element y = 0; y < base_.order(); ++y) t[y] = coeffs_.index_of(at(y));
        return t;
    }
    static OneCochain from_index_table(const FiniteGroup& base, const AbelianModule& coeffs,
                                       const std::vector<Element>& t) {
        OneCochain eta(base, coeffs);
        for (Element y = 0; y < base.order(); ++y) eta.set(y, coeffs.vector_of(t[y]));
        return eta;
    }
    bool operator==(const OneCochain& o) const {
        return base_.same_table(o.base_) && coeffs_ == o.coeffs_ && data_ == o.data_;
    }

private:
    FiniteGroup base_;
    AbelianModule coeffs_;
    std::vector<u64> data_;
};

// Normalized 2-cochain G2 x G2 -> G1: table(g, 0) = table(0, g) = 0.
class Cochain2 {
public:
    Cochain2(FiniteGroup base, AbelianModule coeffs)
        : base_(std::move(base)), coeffs_(std::move(coeffs)),
          data_(base_.order() * base_.order() * coeffs_.rank(), 0) {}

    // table[g][h] is a coefficient vector; validates normalization and ranges.
    static Cochain2 from_table(const FiniteGroup& base, const AbelianModule& coeffs,
                               const std::vector<std::vector<Residues>>& table) {
        const std::size_t n = base.order();
        if (table.size() != n) throw InvalidInput("cochain table has wrong number of rows");
        Cochain2 c(base, coeffs);
        for (Element g = 0; g < n; ++g) {
            if (table[g].size() != n) throw InvalidInput("cochain table row has wrong length");
            for (Element h = 0; h < n; ++h) {
                const auto& v = table[g][h];
                if (v.size() != coeffs.rank())
                    throw InvalidInput("coefficient vector has wrong length at (" +
                                       std::to_string(g) + "," + std::to_string(h) + ")");
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (v[i] >= coeffs.factors()[i])
                        throw InvalidInput("coefficient out of range at (" + std::to_string(g) +
                                           "," + std::to_string(h) + ")");
                if ((g == 0 || h == 0) && !coeffs.is_zero(v))
                    throw InvalidInput("cochain is not normalized: nonzero entry at (" +
                                       std::to_string(g) + "," + std::to_string(h) + ")");
                c.set(g, h, v);
            }
        }
        return c;
    }

    const FiniteGroup& base() const { return base_; }
    const AbelianModule& coeffs() const { return coeffs_; }

    u64 value(Element g, Element h, std::size_t i) const {
        return data_[(g * base_.order() + h) * coeffs_.rank() + i];
    }
    Residues at(Element g, Element h) const {
        const std::size_t k = coeffs_.rank();
        const std::size_t off = (g * base_.order() + h) * k;
        return Residues(data_.begin() + static_cast<std::ptrdiff_t>(off),
                        data_.begin() + static_cast<std::ptrdiff_t>(off + k));
    }
    Element index_at(Element g, Element h) const { return coeffs_.index_of(at(g, h)); }

    void set(Element g, Element h, const Residues& v) {
        if ((g == 0 || h == 0) && !coeffs_.is_zero(v))
            throw InvalidInput("cochain must vanish on identity row and column");
        const std::size_t k = coeffs_.rank();
        const std::size_t off = (g * base_.order() + h) * k;
        for (std::size_t i = 0; i < k; ++i) data_[off + i] = v[i] % coeffs_.factors()[i];
    }
    void set_value(Element g, Element h, std::size_t i, u64 v) {
        if (g == 0 || h == 0) {
            if (v % coeffs_.factors()[i] != 0)
                throw InvalidInput("cochain must vanish on identity row and column");
            return;
        }
        data_[(g * base_.order() + h) * coeffs_.rank() + i] = v % coeffs_.factors()[i];
    }

    bool same_domain(const Cochain2& o) const {
        return base_.same_table(o.base_) && coeffs_ == o.coeffs_;
    }
    void require_same_domain(const Cochain2& o, const char* what) const {
        if (!same_domain(o))
            throw InvalidInput(std::string(what) + ": cochains have different base or coefficients");
    }

    Cochain2 operator+(const Cochain2& o) const {
        require_same_domain(o, "cochain sum");
        Cochain2 r = *this;
        const std::size_t k = coeffs_.rank();
        for (std::size_t j = 0; j < data_.size(); ++j)
            r.data_[j] = (data_[j] + o.data_[j]) % coeffs_.factors()[j % k];
        return r;
    }
    Cochain2 operator-(const Cochain2& o) const {
        require_same_domain(o, "cochain difference");
        Cochain2 r = *this;
        const std::size_t k = coeffs_.rank();
        for (std::size_t j = 0; j < data_.size(); ++j) {
            const u64 d = coeffs_.factors()[j % k];
            r.data_[j] = (data_[j] + d - o.data_[j]) % d;
        }
        return r;
    }
    Cochain2 scaled(std::int64_t m) const {
        Cochain2 r = *this;
        const std::size_t k = coeffs_.rank();
        for (std::size_t j = 0; j < data_.size(); ++j) {
            const auto d = static_cast<std::int64_t>(coeffs_.factors()[j % k]);
            r.data_[j] = static_cast<u64>(((m % d + d) % d) * static_cast<std::int64_t>(data_[j]) % d);
        }
        return r;
    }
    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](u64 v) { return v == 0; });
    }
    bool operator==(const Cochain2& o) const { return same_domain(o) && data_ == o.data_; }
    bool operator<(const Cochain2& o) const { return data_ < o.data_; }

    // Image as a set of module elements (the identity included).
    std::vector<Element> image_indices() const {
        std::vector<bool> seen(coeffs_.order(), false);
        std::vector<Element> out;
        for (Element g = 0; g < base_.order(); ++g)
            for (Element h = 0; h < base_.order(); ++h) {
                Element e = index_at(g, h);
                if (!seen[e]) {
                    seen[e] = true;
                    out.push_back(e);
                }
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    const std::vector<u64>& raw() const { return data_; }

private:
    FiniteGroup base_;
    AbelianModule coeffs_;
    std::vector<u64> data_;  // (g * n + h) * rank + i
};

// First triple (h, g, k) violating
//   eps(h,g) + eps(hg,k) = eps(g,k) + eps(h,gk).
inline std::optional<std::tuple<Element, Element, Element>> cocycle_failure(const Cochain2& c) {
    const auto& G = c.base();
    const auto& M = c.coeffs();
    const std::size_t n = G.order();
    for (Element h = 1; h < n; ++h)
        for (Element g = 1; g < n; ++g)
            for (Element k = 1; k < n; ++k)
                for (std::size_t i = 0; i < M.rank(); ++i) {
                    const u64 d = M.factors()[i];
                    const u64 lhs = (c.value(h, g, i) + c.value(G.mul(h, g), k, i)) % d;
                    const u64 rhs = (c.value(g, k, i) + c.value(h, G.mul(g, k), i)) % d;
                    if (lhs != rhs) return std::make_tuple(h, g, k);
                }
    return std::nullopt;
}

inline bool is_cocycle(const Cochain2& c) { return !cocycle_failure(c); }

inline bool is_symmetric(const Cochain2& c) {
    const std::size_t n = c.base().order();
    for (Element g = 1; g < n; ++g)
        for (Element h = g + 1; h < n; ++h)
            if (c.at(g, h) != c.at(h, g)) return false;
    return true;
}

// psi(y, y') = eta(y) + eta(y') - eta(y y')
inline Cochain2 coboundary_of(const OneCochain& eta) {
    const auto& G = eta.base();
    const auto& M = eta.coeffs();
    Cochain2 psi(G, M);
    for (Element a = 1; a < G.order(); ++a)
        for (Element b = 1; b < G.order(); ++b)
            psi.set(a, b, M.sub(M.add(eta.at(a), eta.at(b)), eta.at(G.mul(a, b))));
    return psi;
}

}  // namespace extlab
