// Acceptance run: one PASS/FAIL line per criterion.
//
// The process exits 0 when every failing criterion is listed in
// kKnownRed, so a documented red does not break the suite while any new
// failure does.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "extlab/extlab.hpp"

using namespace extlab;

namespace {

// Criterion 4 asks for the commutator identity without its correction term;
// that form fails on non-abelian quotients, starting with S3 over C2.
const std::set<int> kKnownRed = {4};

struct Outcome {
    bool pass = false;
    std::string detail;
};

AbelianModule mod(std::vector<std::int64_t> f) { return module_from_factors(f); }

std::set<std::vector<Element>> keys(const std::vector<Cochain2>& v) {
    std::set<std::vector<Element>> out;
    for (auto& c : v) out.insert(cochain_key(c));
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i];
    return s;
}

// 1. Solver spans equal brute-force spans.
Outcome space_solver_soundness() {
    int exact = 0;
    std::vector<std::string> bad, skipped;
    for (auto g : {"C2", "C3", "C4", "V4", "S3"})
        for (std::int64_t m : {2, 3, 4, 6}) {
            auto G = preset_group(g);
            auto M = mod({m});
            BruteForceSpaces bf;
            try {
                bf = brute_force_spaces(G, M);
            } catch (const CapExceeded&) {
                skipped.push_back(std::string(g) + "/C" + std::to_string(m));
                continue;
            }
            auto s = compute_spaces(G, M);
            if (keys(s->enumerate(true)) == bf.cocycles && keys(s->enumerate(false)) == bf.coboundaries)
                ++exact;
            else
                bad.push_back(std::string(g) + "/C" + std::to_string(m));
        }
    std::ostringstream os;
    os << exact << " instances exact, beyond the oracle bound: " << join(skipped);
    if (!bad.empty()) os << ", mismatches: " << join(bad);
    return {bad.empty() && exact > 0, os.str()};
}

// 2. Known H^2 values, confirmed by brute force or by independent counting.
Outcome known_cohomology_values() {
    std::vector<std::string> bad;
    auto inv = [](const char* g, std::int64_t m) { return compute_spaces(preset_group(g), mod({m}))->h2_invariants(); };
    if (inv("C2", 2) != std::vector<u64>{2}) bad.push_back("C2/C2");
    if (!inv("C2", 3).empty()) bad.push_back("C2/C3");
    if (inv("V4", 2) != std::vector<u64>{2, 2, 2}) bad.push_back("V4/C2");
    int brute = 0, counted = 0;
    for (u64 n = 2; n <= 8; ++n)
        for (u64 m = 2; m <= 8; ++m) {
            auto G = preset_group("C" + std::to_string(n));
            auto M = mod({static_cast<std::int64_t>(m)});
            auto s = compute_spaces(G, M);
            const u64 expected = std::gcd(n, m);
            bool ok = s->h2_order() == expected;
            if (n <= 4 && m <= 4) {
                auto bf = brute_force_spaces(G, M);
                ok = ok && bf.cocycles.size() == expected * bf.coboundaries.size() &&
                     keys(s->enumerate(true)) == bf.cocycles;
                ++brute;
            } else {
                // |B^2| = |C^1| / |Hom(G, M)|, counted without the solver
                u64 c1 = 1;
                for (u64 i = 1; i < n; ++i) c1 *= m;
                const u64 homs = hom_set(G, M.as_group()).size();
                const u64 b2 = c1 / homs;
                ok = ok && s->b2_order().to_string() == std::to_string(b2) &&
                     s->z2_order().to_string() == std::to_string(b2 * expected);
                ++counted;
            }
            if (!ok) bad.push_back("C" + std::to_string(n) + "/C" + std::to_string(m));
        }
    std::ostringstream os;
    os << "3 named values, 49 cyclic pairs (" << brute << " brute force, " << counted << " counted)";
    if (!bad.empty()) os << ", wrong: " << join(bad);
    return {bad.empty(), os.str()};
}

// 3. Realized extensions.
Outcome extension_realization() {
    std::vector<std::string> bad;
    {
        auto G = preset_group("C2");
        auto M = mod({2});
        for (auto& r : compute_spaces(G, M)->class_representatives())
            if (!r.is_zero() && !isomorphic_oracle(perturbed_product(M, G, r).realized(), preset_group("C4")))
                bad.push_back("C2 by C2 is not C4");
    }
    {
        auto G = preset_group("C3");
        auto M = mod({3});
        int nontrivial = 0;
        for (auto& r : compute_spaces(G, M)->class_representatives()) {
            if (r.is_zero()) continue;
            ++nontrivial;
            if (!isomorphic_oracle(perturbed_product(M, G, r).realized(), preset_group("C9")))
                bad.push_back("C3 by C3 class is not C9");
        }
        if (nontrivial != 2) bad.push_back("C3 by C3 has " + std::to_string(nontrivial) + " nontrivial classes");
    }
    int tables = 0;
    for (auto g : {"C2", "C3", "C4", "V4", "S3", "D8", "Q8", "A4"})
        for (std::int64_t m : {2, 3, 4, 6}) {
            auto G = preset_group(g);
            auto M = mod({m});
            ++tables;
            if (perturbed_product(M, G, Cochain2(G, M)).realized().flat_table() !=
                direct_product(M.as_group(), G).flat_table())
                bad.push_back(std::string("trivial cocycle on ") + g);
        }
    std::ostringstream os;
    os << "C4 and C9 realized, " << tables << " trivial-cocycle tables verbatim";
    if (!bad.empty()) os << ", failures: " << join(bad);
    return {bad.empty(), os.str()};
}

const std::vector<const char*> kSmallBases = {"C2", "C3", "C4", "V4", "C5", "C6", "S3",
                                              "C7", "C8", "C2xC4", "C2^3", "D8", "Q8"};
const std::vector<std::vector<std::int64_t>> kSmallCoeffs = {{2}, {3}, {4}, {2, 2}, {5}, {6}};

// 4. Structural identities over every corpus product.
Outcome structural_identities() {
    int products = 0, central = 0, literal = 0, derived = 0, abelian = 0, corrected = 0;
    std::string first_literal;
    for (auto g : kSmallBases)
        for (auto& c : kSmallCoeffs) {
            auto G = preset_group(g);
            auto M = mod(c);
            for (auto& r : compute_spaces(G, M)->class_representatives()) {
                auto p = perturbed_product(M, G, r);
                ++products;
                if (!centrality_check(p).ok) ++central;
                if (!commutator_identity_check(p).ok) {
                    if (!literal) first_literal = std::string(g) + " by " + M.label();
                    ++literal;
                }
                if (!derived_structure_check(p).ok) ++derived;
                auto ab = is_abelian_product(p);
                if (ab.realized_abelian != ab.criterion) ++abelian;
                if (!commutator_formula_check(p).ok) ++corrected;
            }
        }
    std::ostringstream os;
    os << products << " products; counterexamples: centrality " << central << ", commutator identity "
       << literal << ", derived generation " << derived << ", abelian criterion " << abelian
       << "; identity with correction term -eps(c, y'y): " << corrected << " counterexamples";
    if (literal) os << "; first failure " << first_literal;
    return {central + literal + derived + abelian == 0, os.str()};
}

// 5. Centerless fast path against the block oracle.
Outcome centerless_g2_equivalence() {
    int pairs = 0, disagree = 0, yes = 0;
    auto G = preset_group("S3");
    for (std::int64_t m : {2, 3, 6}) {
        DeciderContext ctx(G, mod({m}));
        auto reps = ctx.space()->class_representatives();
        for (auto& a : reps)
            for (auto& b : reps) {
                auto d = decide_g2_iso(ctx, a, b);
                const bool o = oracle_g2_iso(ctx, a, b).has_value();
                ++pairs;
                yes += d.yes();
                if (d.path != "centerless" || d.yes() != o ||
                    (d.yes() && !validate_certificate(*d.certificate, a, b)))
                    ++disagree;
            }
    }
    std::ostringstream os;
    os << pairs << " ordered pairs, " << yes << " yes, " << disagree << " disagreements";
    return {disagree == 0, os.str()};
}

std::string report_line(const TheoremReport& r) {
    std::ostringstream os;
    os << r.theorem << " " << r.instance << ": " << to_string(r.status) << ", " << r.pairs_checked << " pairs, "
       << r.counterexamples.size() << " counterexamples";
    return os.str();
}

bool report_ok(const TheoremReport& r) { return r.status == CheckStatus::Pass && r.counterexamples.empty(); }

TheoremInstance exhaustive(const char* g, std::vector<std::int64_t> c, Limits limits = {}) {
    return TheoremInstance{preset_group(g, limits), mod(std::move(c)), {}, std::nullopt, 16, limits};
}

// 6. Localization of G2- and (H,G2)-isomorphism.
Outcome localization_g2_hg2() {
    auto a = verify_theorem(TheoremId::T3_3, exhaustive("S3", {6}));
    auto b = verify_theorem(TheoremId::T3_6, exhaustive("S3", {6}));
    return {report_ok(a) && report_ok(b), report_line(a) + "; " + report_line(b)};
}

// 7. Upper-isomorphism criterion against the kernel-preserving oracle.
Outcome upper_criterion_vs_oracle() {
    int pairs = 0, disagree = 0, yes = 0;
    for (auto [g, m] : std::vector<std::pair<const char*, std::int64_t>>{{"C2", 2}, {"C3", 3}, {"V4", 2}, {"C4", 2}}) {
        auto G = preset_group(g);
        auto M = mod({m});
        DeciderContext ctx(G, M);
        auto reps = ctx.space()->class_representatives();
        for (auto& a : reps)
            for (auto& b : reps) {
                auto d = decide_upper_iso(ctx, a, b);
                const bool o = oracle_upper_iso(perturbed_product(M, G, a), perturbed_product(M, G, b)).has_value();
                ++pairs;
                yes += d.yes();
                if (d.yes() != o || (d.yes() && !validate_certificate(*d.certificate, a, b))) ++disagree;
            }
    }
    std::ostringstream os;
    os << pairs << " ordered pairs, " << yes << " yes, " << disagree << " disagreements";
    return {disagree == 0, os.str()};
}

// 8. Upper-isomorphism localization for cyclic and nilpotent bases.
Outcome upper_localization() {
    auto a = verify_theorem(TheoremId::P4_3, exhaustive("C6", {6}));
    auto b = verify_theorem(TheoremId::P4_5, exhaustive("D8xC3", {6}));
    auto c = verify_theorem(TheoremId::T4_4, exhaustive("D8xC3", {6}));
    return {report_ok(a) && report_ok(b) && report_ok(c),
            report_line(a) + "; " + report_line(b) + "; " + report_line(c)};
}

// 9. Restriction then corestriction raises a class to the index.
Outcome transfer_contract() {
    int checks = 0, bad = 0;
    auto S3 = preset_group("S3");
    for (std::int64_t m : {2, 3}) {
        auto s = compute_spaces(S3, mod({m}));
        for (auto p : {u64{2}, u64{3}}) {
            auto P = sylow_subgroup(S3, p);
            const auto index = static_cast<std::int64_t>(S3.order() / P.order());
            for (auto& r : s->class_representatives()) {
                auto back = corestrict(restrict(r, P), P);
                ++checks;
                if (!is_cocycle(back) || !class_equal(class_of(s, back), class_power(class_of(s, r), index))) ++bad;
            }
        }
    }
    int powers = 0, nontrivial_power = 0;
    for (auto g : kSmallBases)
        for (auto& c : kSmallCoeffs) {
            auto G = preset_group(g);
            auto s = compute_spaces(G, mod(c));
            for (auto& r : s->class_representatives()) {
                ++powers;
                if (!class_is_trivial(class_power(class_of(s, r), static_cast<std::int64_t>(G.order()))))
                    ++nontrivial_power;
            }
        }
    std::ostringstream os;
    os << checks << " transfer checks (" << bad << " wrong), " << powers << " classes raised to |G| ("
       << nontrivial_power << " nontrivial)";
    return {bad == 0 && nontrivial_power == 0, os.str()};
}

// 10. Commuting automorphisms and the upper-a / upper-c coincidence.
Outcome automorphism_facts() {
    std::vector<std::string> bad;
    auto images = [](const std::vector<GroupMap>& v) {
        std::set<std::vector<Element>> s;
        for (auto& r : v) s.insert(r.image);
        return s;
    };
    for (auto g : {"S3", "A5"}) {
        auto A = commuting_automorphisms(preset_group(g));
        if (A.size() != 1 || !A[0].is_identity()) bad.push_back(std::string("A(") + g + ") is not trivial");
    }
    for (auto g : {"D16", "Q16", "SD16"}) {
        auto G = preset_group(g);
        if (images(commuting_automorphisms(G)) != images(central_automorphisms(G)))
            bad.push_back(std::string("A(") + g + ") differs from Aut_c");
    }
    DeciderContext ctx(preset_group("D16"), mod({2}));
    auto reps = ctx.space()->class_representatives();
    int pairs = 0;
    for (auto& a : reps)
        for (auto& b : reps) {
            ++pairs;
            if (decide_upper_a_iso(ctx, a, b, false).verdict != decide_upper_c_iso(ctx, a, b, false).verdict)
                bad.push_back("upper-a and upper-c disagree on D16");
        }
    auto r = verify_theorem(TheoremId::P5_3, exhaustive("D16", {2}));
    if (!report_ok(r)) bad.push_back(report_line(r));
    std::ostringstream os;
    os << "A(S3) = A(A5) = {id}, A = Aut_c for D16, Q16, SD16; " << pairs << " D16 pairs; " << report_line(r);
    if (!bad.empty()) os << "; failures: " << join(bad);
    return {bad.empty(), os.str()};
}

// 11. A5 by C3: trivial H^2 and every product splits.
Outcome a5_coprime_splitting() {
    Limits big;
    big.max_group_order = 180;
    auto A5 = preset_group("A5");
    auto M = mod({3});
    auto s = compute_spaces(A5, M, big);
    std::vector<std::string> bad;
    if (!s->h2_invariants().empty()) bad.push_back("H^2(A5, C3) is not trivial");
    if (s->method() != "generators") bad.push_back("dense path used");
    std::mt19937 rng(2024);
    std::uniform_int_distribution<Element> d(0, 2);
    const auto direct = direct_product_of(M, A5, big);
    int products = 0;
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Element> t(A5.order(), 0);
        if (trial > 0)
            for (std::size_t i = 1; i < t.size(); ++i) t[i] = d(rng);
        auto eps = coboundary_of(OneCochain::from_index_table(A5, M, t));
        ++products;
        if (!isomorphic_oracle(perturbed_product(M, A5, eps, big).realized(), direct.realized(), big))
            bad.push_back("product is not the direct product");
        if (coprime_splitting_check(M, A5, eps, big).status != CheckStatus::Pass)
            bad.push_back("splitting check did not pass");
    }
    std::ostringstream os;
    os << "H^2 = " << (s->h2_invariants().empty() ? "0" : "nonzero") << " via " << s->method() << ", "
       << products << " products split (seed 2024)";
    if (!bad.empty()) os << "; failures: " << join(bad);
    return {bad.empty(), os.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"space-solver soundness", space_solver_soundness},
        {"known cohomology values", known_cohomology_values},
        {"extension realization", extension_realization},
        {"structural identities", structural_identities},
        {"centerless G2-iso equivalence", centerless_g2_equivalence},
        {"G2 and (H,G2) localization", localization_g2_hg2},
        {"upper-iso criterion vs oracle", upper_criterion_vs_oracle},
        {"cyclic and nilpotent upper localization", upper_localization},
        {"transfer contract", transfer_contract},
        {"commuting automorphism facts", automorphism_facts},
        {"A5 by C3 splitting", a5_coprime_splitting},
    };
    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool known = kKnownRed.count(id) > 0;
        std::printf("[%s] %2d %s: %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first,
                    o.detail.c_str(), secs, !o.pass && known ? " [known red]" : "");
        if (!o.pass && !known) ++unexpected;
        if (o.pass && known) std::printf("     note: criterion %d is listed as known red but passed\n", id);
    }
    std::fflush(stdout);
    return unexpected == 0 ? 0 : 1;
}
