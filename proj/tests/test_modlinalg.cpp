#include <gtest/gtest.h>

#include <random>
#include <set>

#include "extlab/modlinalg.hpp"

using namespace extlab;

namespace {

// All vectors in the row span, by enumerating coefficient tuples.
std::set<Residues> enumerate_span(const ModMatrix& A) {
    std::set<Residues> out{Residues(A.cols, 0)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Residues> cur(out.begin(), out.end());
        for (auto& v : cur)
            for (auto& r : A.rows) {
                Residues w(A.cols);
                for (std::size_t j = 0; j < A.cols; ++j) w[j] = (v[j] + r[j]) % A.modulus;
                grew |= out.insert(w).second;
            }
    }
    return out;
}

Residues mat_vec(const ModMatrix& A, const Residues& x) {
    Residues b(A.row_count(), 0);
    for (std::size_t r = 0; r < A.row_count(); ++r)
        for (std::size_t j = 0; j < A.cols; ++j) b[r] = (b[r] + A.rows[r][j] * x[j]) % A.modulus;
    return b;
}

ModMatrix random_matrix(std::mt19937& rng, u64 m, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<u64> d(0, m - 1);
    std::vector<Residues> rs(rows, Residues(cols));
    for (auto& r : rs)
        for (auto& v : r) v = d(rng);
    return ModMatrix(m, cols, rs);
}

}  // namespace

TEST(ModuleFromFactors, Examples) {
    EXPECT_EQ(module_from_factors({6}).factors(), (std::vector<u64>{6}));
    EXPECT_EQ(module_from_factors({2, 3}).factors(), (std::vector<u64>{6}));
    EXPECT_TRUE(module_from_factors({}).is_trivial());
    EXPECT_EQ(module_from_factors({1, 1}).order(), 1u);
    EXPECT_EQ(module_from_factors({4, 6}).factors(), (std::vector<u64>{2, 12}));
    EXPECT_EQ(module_from_factors({2, 2, 2}).factors(), (std::vector<u64>{2, 2, 2}));
    EXPECT_THROW(module_from_factors({0}), InvalidInput);
    EXPECT_THROW(module_from_factors({-3}), InvalidInput);
}

TEST(ModuleFromFactors, OrderAndExponent) {
    const std::vector<std::vector<std::int64_t>> inputs = {
        {2, 3}, {4, 6}, {12, 18}, {2, 4, 8}, {3, 5, 7}, {6, 10, 15}, {9, 3, 27}};
    for (auto& in : inputs) {
        auto M = module_from_factors(in);
        u64 ord = 1, lcm = 1;
        for (auto f : in) {
            ord *= static_cast<u64>(f);
            lcm = std::lcm(lcm, static_cast<u64>(f));
        }
        EXPECT_EQ(M.order(), ord);
        EXPECT_EQ(M.exponent(), lcm);
        for (std::size_t i = 1; i < M.rank(); ++i) EXPECT_EQ(M.factors()[i] % M.factors()[i - 1], 0u);
    }
}

TEST(ModuleFromFactors, RawVectorMapIsAdditiveBijection) {
    auto N = normalize_factors({4, 6});
    std::set<Residues> images;
    for (u64 a = 0; a < 4; ++a)
        for (u64 b = 0; b < 6; ++b) {
            images.insert(N.map_raw({a, b}));
            // additivity against generator images
            auto lhs = N.map_raw({a, b});
            auto rhs = N.module.add(N.module.scale(N.map_raw({1, 0}), static_cast<std::int64_t>(a)),
                                    N.module.scale(N.map_raw({0, 1}), static_cast<std::int64_t>(b)));
            EXPECT_EQ(lhs, rhs);
        }
    EXPECT_EQ(images.size(), 24u);
}

TEST(PrimaryDecomposition, Examples) {
    auto parts = primary_decomposition(module_from_factors({6}));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].prime(), 2u);
    EXPECT_EQ(parts[0].module().factors(), (std::vector<u64>{2}));
    EXPECT_EQ(parts[1].module().factors(), (std::vector<u64>{3}));

    auto c4 = primary_decomposition(module_from_factors({4}));
    ASSERT_EQ(c4.size(), 1u);
    EXPECT_EQ(c4[0].module().factors(), (std::vector<u64>{4}));
    EXPECT_TRUE(primary_decomposition(AbelianModule{}).empty());
}

TEST(PrimaryDecomposition, InjectProjectAndReassembly) {
    for (auto fs : std::vector<std::vector<std::int64_t>>{{6}, {2, 12}, {30}, {3, 9, 18}}) {
        auto M = module_from_factors(fs);
        auto parts = primary_decomposition(M);
        u64 prod = 1;
        for (auto& P : parts) {
            prod *= P.module().order();
            for (Element i = 0; i < P.module().order(); ++i) {
                auto y = P.module().vector_of(i);
                EXPECT_EQ(P.project(P.inject(y)), y);
            }
        }
        EXPECT_EQ(prod, M.order());
        // every element is the sum of the injections of its projections
        for (Element i = 0; i < M.order(); ++i) {
            auto x = M.vector_of(i);
            Residues s = M.zero();
            for (auto& P : parts) s = M.add(s, P.inject(P.project(x)));
            EXPECT_EQ(s, x);
        }
    }
}

TEST(HowellForm, Examples) {
    EXPECT_EQ(howell_form(ModMatrix(4, 1, {{2}})).rows, (std::vector<Residues>{{2}}));
    EXPECT_EQ(howell_form(ModMatrix(4, 1, {{2}, {2}})).rows, (std::vector<Residues>{{2}}));
    EXPECT_TRUE(howell_form(ModMatrix(6, 3, {{0, 0, 0}, {0, 0, 0}})).rows.empty());
    // unit pivot normalised to 1
    EXPECT_EQ(howell_form(ModMatrix(5, 2, {{3, 1}})).rows, (std::vector<Residues>{{1, 2}}));
    // [[2, 1]] over Z/4 needs the annihilator row [0, 2]
    EXPECT_EQ(howell_form(ModMatrix(4, 2, {{2, 1}})).rows,
              (std::vector<Residues>{{2, 1}, {0, 2}}));
}

TEST(HowellForm, SpanFaithfulIdempotentCanonical) {
    std::mt19937 rng(7);
    for (u64 m : {2u, 3u, 4u, 5u, 6u, 7u, 8u}) {
        for (std::size_t cols = 1; cols <= 3; ++cols) {
            for (int trial = 0; trial < 25; ++trial) {
                auto A = random_matrix(rng, m, 1 + trial % 4, cols);
                auto H = howell_form(A);
                auto span = enumerate_span(A);
                EXPECT_EQ(enumerate_span(H), span);
                EXPECT_EQ(howell_form(H), H);
                // a different generating set of the same span
                auto B = A;
                std::shuffle(B.rows.begin(), B.rows.end(), rng);
                if (!B.rows.empty()) {
                    Residues extra(cols);
                    for (std::size_t j = 0; j < cols; ++j)
                        extra[j] = (B.rows[0][j] * 3 + (B.rows.size() > 1 ? B.rows[1][j] : 0)) % m;
                    B.rows.push_back(extra);
                }
                EXPECT_EQ(howell_form(B), H);
            }
        }
    }
}

TEST(SolveLinear, Examples) {
    auto s = solve_linear(ModMatrix(4, 1, {{2}}), {2});
    ASSERT_TRUE(s);
    EXPECT_EQ(s->particular, (Residues{1}));
    ASSERT_EQ(s->kernel.size(), 1u);
    EXPECT_EQ(s->kernel[0], (Residues{2}));
    EXPECT_FALSE(solve_linear(ModMatrix(4, 1, {{2}}), {1}));
    auto z = solve_linear(ModMatrix(6, 2, {{1, 5}, {2, 3}}), {0, 0});
    ASSERT_TRUE(z);
    EXPECT_EQ(z->particular, (Residues{0, 0}));
}

TEST(SolveLinear, ExhaustiveSmallSystems) {
    std::mt19937 rng(11);
    for (u64 m : {2u, 3u, 4u, 6u, 8u, 9u, 12u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 3) % 3;
            auto A = random_matrix(rng, m, rows, cols);
            // enumerate every x
            std::vector<Residues> all_x{Residues(cols, 0)};
            for (std::size_t j = 0; j < cols; ++j) {
                std::vector<Residues> next;
                for (auto& x : all_x)
                    for (u64 v = 0; v < m; ++v) {
                        auto y = x;
                        y[j] = v;
                        next.push_back(y);
                    }
                all_x = std::move(next);
            }
            std::set<Residues> images, kernel;
            for (auto& x : all_x) {
                auto b = mat_vec(A, x);
                images.insert(b);
                if (std::all_of(b.begin(), b.end(), [](u64 v) { return v == 0; })) kernel.insert(x);
            }
            for (auto& b : images) {
                auto s = solve_linear(A, b);
                ASSERT_TRUE(s);
                EXPECT_EQ(mat_vec(A, s->particular), b);
                ModMatrix K(m, cols, s->kernel);
                EXPECT_EQ(enumerate_span(K), kernel);
            }
            // some unsolvable right-hand side, if any exists
            std::uniform_int_distribution<u64> d(0, m - 1);
            Residues b(rows);
            for (auto& v : b) v = d(rng);
            EXPECT_EQ(solve_linear(A, b).has_value(), images.count(b) > 0);
        }
    }
}

TEST(QuotientInvariants, Examples) {
    EXPECT_EQ(quotient_invariants(ModMatrix(4, 1, {{1}}), ModMatrix(4, 1, {{2}})),
              (std::vector<u64>{2}));
    EXPECT_TRUE(quotient_invariants(ModMatrix(4, 1, {{1}}), ModMatrix(4, 1, {{1}})).empty());
    EXPECT_EQ(quotient_invariants(ModMatrix(2, 2, {{1, 0}, {0, 1}}), ModMatrix(2, 2, {})),
              (std::vector<u64>{2, 2}));
    EXPECT_THROW(quotient_invariants(ModMatrix(4, 1, {{2}}), ModMatrix(4, 1, {{1}})), InvalidInput);
    // Z/12 mod 0 = C12, mod 6 = C6
    EXPECT_EQ(quotient_invariants(ModMatrix(12, 1, {{1}}), ModMatrix(12, 1, {})),
              (std::vector<u64>{12}));
    EXPECT_EQ(quotient_invariants(ModMatrix(12, 1, {{1}}), ModMatrix(12, 1, {{6}})),
              (std::vector<u64>{6}));
    // (Z/8)^2 / <(2, 4)> = C8 x C4? order 64/4 = 16; (Z/8)^2/<(2,4)>: invariants [2, 8]
    EXPECT_EQ(quotient_invariants(ModMatrix(8, 2, {{1, 0}, {0, 1}}), ModMatrix(8, 2, {{2, 4}})),
              (std::vector<u64>{2, 8}));
}

TEST(QuotientInvariants, OrderMatchesEnumeration) {
    std::mt19937 rng(3);
    for (u64 m : {4u, 6u, 8u, 9u}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto S = random_matrix(rng, m, 2, 2);
            // sub = random combinations of S rows
            std::uniform_int_distribution<u64> d(0, m - 1);
            std::vector<Residues> sub;
            for (int k = 0; k < 2; ++k) {
                u64 a = d(rng), b = d(rng);
                sub.push_back({(a * S.rows[0][0] + b * S.rows[1][0]) % m,
                               (a * S.rows[0][1] + b * S.rows[1][1]) % m});
            }
            ModMatrix U(m, 2, sub);
            auto inv = quotient_invariants(S, U);
            u64 prod = 1;
            for (auto v : inv) prod *= v;
            EXPECT_EQ(prod, enumerate_span(S).size() / enumerate_span(U).size());
        }
    }
}
