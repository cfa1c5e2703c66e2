#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace extlab {

using u64 = std::uint64_t;

// (prime, exponent) pairs in ascending prime order.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline u64 ipow(u64 b, unsigned e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

// Largest power of p dividing n.
inline u64 p_part(u64 n, u64 p) {
    u64 r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

// True iff n is a power of p (including p^0 = 1).
inline bool is_power_of(u64 n, u64 p) { return p_part(n, p) == n; }

// log_p(n) for n a power of p.
inline unsigned log_p(u64 n, u64 p) {
    unsigned e = 0;
    while (n > 1) {
        n /= p;
        ++e;
    }
    return e;
}

inline u64 mod_inverse(u64 a, u64 m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<u64>(t);
}

// Smallest x in [0, m1*m2) with x = a1 mod m1 and x = a2 mod m2, for coprime moduli.
inline u64 crt_pair(u64 a1, u64 m1, u64 a2, u64 m2) {
    if (m1 == 1) return a2 % m2;
    if (m2 == 1) return a1 % m1;
    u64 m = m1 * m2;
    u64 k = ((a2 + m2 - a1 % m2) % m2) * mod_inverse(m1 % m2, m2) % m2;
    return (a1 + m1 * k) % m;
}

// Value v mod m with v = a mod q and v = 0 mod m/q, where q is a unitary divisor of m.
inline u64 crt_lift(u64 a, u64 q, u64 m) { return crt_pair(a % q, q, 0, m / q); }

// Integers that do not fit 64 bits (cocycle-space orders) kept in factored form.
class FactoredInt {
public:
    FactoredInt() = default;

    void mul_prime_power(u64 p, unsigned e) {
        if (e) exps_[p] += e;
    }
    void mul(u64 n) {
        for (auto [p, e] : factorize(n)) mul_prime_power(p, e);
    }
    FactoredInt& operator*=(const FactoredInt& o) {
        for (auto [p, e] : o.exps_) exps_[p] += e;
        return *this;
    }
    const std::map<u64, unsigned>& exponents() const { return exps_; }
    bool operator==(const FactoredInt& o) const { return exps_ == o.exps_; }

    std::string to_string() const {
        // base 1e9 limbs, little endian
        std::vector<std::uint32_t> limbs{1};
        for (auto [p, e] : exps_) {
            for (unsigned i = 0; i < e; ++i) {
                std::uint64_t carry = 0;
                for (auto& l : limbs) {
                    std::uint64_t cur = static_cast<std::uint64_t>(l) * p + carry;
                    l = static_cast<std::uint32_t>(cur % 1'000'000'000u);
                    carry = cur / 1'000'000'000u;
                }
                while (carry) {
                    limbs.push_back(static_cast<std::uint32_t>(carry % 1'000'000'000u));
                    carry /= 1'000'000'000u;
                }
            }
        }
        std::string s = std::to_string(limbs.back());
        for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
            std::string part = std::to_string(*it);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

private:
    std::map<u64, unsigned> exps_;
};

}  // namespace extlab
