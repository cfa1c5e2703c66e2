#pragma once

// Theorem verifiers: evaluate both sides of each equivalence (or the one
// implication that is claimed) on concrete cocycle pairs.

#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "extlab/deciders.hpp"

namespace extlab {

enum class TheoremId { P3_2, T3_3, P3_5, T3_6, L4_2, P4_3, T4_4, P4_5, P5_2, P5_3, P5_4 };

inline const std::vector<std::pair<TheoremId, const char*>>& theorem_names() {
    static const std::vector<std::pair<TheoremId, const char*>> names = {
        {TheoremId::P3_2, "P3.2"}, {TheoremId::T3_3, "T3.3"}, {TheoremId::P3_5, "P3.5"},
        {TheoremId::T3_6, "T3.6"}, {TheoremId::L4_2, "L4.2"}, {TheoremId::P4_3, "P4.3"},
        {TheoremId::T4_4, "T4.4"}, {TheoremId::P4_5, "P4.5"}, {TheoremId::P5_2, "P5.2"},
        {TheoremId::P5_3, "P5.3"}, {TheoremId::P5_4, "P5.4"}};
    return names;
}

inline const char* to_string(TheoremId id) {
    for (auto& [k, v] : theorem_names())
        if (k == id) return v;
    return "?";
}

inline TheoremId parse_theorem(const std::string& s) {
    for (auto& [k, v] : theorem_names())
        if (s == v) return k;
    throw InvalidInput("unknown theorem id '" + s + "'");
}

struct TheoremInstance {
    FiniteGroup base;
    AbelianModule coeffs;
    // explicit pairs; when empty the source is exhaustive or sampled
    std::vector<std::pair<Cochain2, Cochain2>> pairs;
    // sampled mode: random cocycle pairs drawn from Z^2 with this seed
    std::optional<u64> seed;
    std::size_t samples = 16;
    Limits limits;
};

struct Counterexample {
    std::size_t index = 0;  // position in the pair list
    Cochain2 eps1;
    Cochain2 eps2;
    bool lhs = false;
    bool rhs = false;
    std::string detail;
    std::optional<MatrixHom> certificate;
};

struct TheoremReport {
    std::string theorem;
    std::string instance;
    std::string source;  // exhaustive | explicit | sampled
    std::optional<u64> seed;
    std::size_t pairs_checked = 0;
    std::vector<Counterexample> counterexamples;
    bool vacuous = false;
    CheckStatus status = CheckStatus::Pass;
    std::map<std::string, bool> hypothesis_gates;
    std::string detail;
};

namespace detail {

inline std::string instance_label(const TheoremInstance& inst) {
    return inst.base.label() + " / " + inst.coeffs.label();
}

// Random cocycle: a random combination of Z^2 generators.
inline Cochain2 random_cocycle(const CocycleSpace& S, std::mt19937_64& rng) {
    Cochain2 out(S.base(), S.coeffs());
    const auto exp = static_cast<std::int64_t>(std::max<u64>(S.coeffs().exponent(), 1));
    std::uniform_int_distribution<std::int64_t> d(0, exp - 1);
    for (auto& g : S.z2_generators()) out = out + g.scaled(d(rng));
    return out;
}

struct PairSource {
    std::vector<std::pair<Cochain2, Cochain2>> pairs;
    std::string kind;
    bool distinct_classes = false;
};

inline PairSource make_pairs(const TheoremInstance& inst, const CocycleSpace& S) {
    PairSource src;
    if (!inst.pairs.empty()) {
        src.kind = "explicit";
        src.pairs = inst.pairs;
    } else if (inst.seed) {
        src.kind = "sampled";
        std::mt19937_64 rng(*inst.seed);
        for (std::size_t i = 0; i < inst.samples; ++i) {
            auto a = random_cocycle(S, rng);
            auto b = random_cocycle(S, rng);
            src.pairs.emplace_back(std::move(a), std::move(b));
        }
    } else {
        src.kind = "exhaustive";
        auto reps = S.class_representatives(inst.limits.oracle_bound);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i; j < reps.size(); ++j) src.pairs.emplace_back(reps[i], reps[j]);
    }
    for (auto& [a, b] : src.pairs)
        if (!(S.canonical(a) == S.canonical(b))) src.distinct_classes = true;
    return src;
}

// Per-prime deciders sharing one context per Sylow component.
class LocalDeciders {
public:
    explicit LocalDeciders(const Limits& limits) : limits_(limits) {}

    template <class Decide>
    std::pair<bool, std::string> all(const Cochain2& e1, const Cochain2& e2, Decide decide) {
        auto loc = localize(e1, e2);
        bool ok = true;
        std::ostringstream os;
        for (auto& c : loc.components) {
            auto& ctx = context(c);
            IsoDecision d = decide(ctx, c.eps1, c.eps2);
            if (d.verdict == Verdict::CapExceeded) throw CapExceeded(d.refuted_by, limits_.max_group_order);
            os << "p=" << c.prime << ":" << to_string(d.verdict) << " ";
            ok = ok && d.yes();
        }
        return {ok, os.str()};
    }

private:
    DeciderContext& context(const LocalComponent& c) {
        auto it = contexts_.find(c.prime);
        if (it == contexts_.end())
            it = contexts_
                     .emplace(c.prime, std::make_unique<DeciderContext>(c.local_base, c.local_coeffs, limits_))
                     .first;
        return *it->second;
    }

    Limits limits_;
    std::map<u64, std::unique_ptr<DeciderContext>> contexts_;
};

inline bool sylows_satisfy(const FiniteGroup& G, const std::function<bool(const StructureReport&, u64)>& pred) {
    for (auto p : prime_divisors(G.order())) {
        auto P = sylow_subgroup(G, p).as_group();
        if (!pred(structure_predicates(P), P.order())) return false;
    }
    return true;
}

}  // namespace detail

// Verifies one theorem on an instance. Gates are checked first; a failed
// gate yields HypothesisNotMet without evaluating any pair.
inline TheoremReport verify_theorem(TheoremId id, const TheoremInstance& inst) {
    TheoremReport rep;
    rep.theorem = to_string(id);
    rep.instance = detail::instance_label(inst);
    DeciderContext ctx(inst.base, inst.coeffs, inst.limits);
    const auto& st = ctx.structure();

    auto gate = [&](const char* name, bool value) {
        rep.hypothesis_gates[name] = value;
        return value;
    };
    bool gates_ok = true;
    switch (id) {
        case TheoremId::P3_2:
        case TheoremId::T3_3: gates_ok = gate("centerless", st.is_centerless); break;
        case TheoremId::P4_3: gates_ok = gate("cyclic", st.is_cyclic); break;
        case TheoremId::P4_5: gates_ok = gate("nilpotent", st.is_nilpotent); break;
        case TheoremId::P5_2:
            gates_ok = gate("centerless", st.is_centerless) & gate("perfect", st.is_perfect);
            break;
        case TheoremId::P5_3:
            gates_ok = gate("sylows_maximal_class_order_ge_p4",
                            detail::sylows_satisfy(inst.base, [](const StructureReport& r, u64 order) {
                                return r.prime && r.coclass == 1u && log_p(order, *r.prime) >= 4;
                            }));
            break;
        case TheoremId::P5_4:
            gates_ok = gate("nilpotent", st.is_nilpotent) &
                       gate("sylows_coclass_le_2",
                            detail::sylows_satisfy(inst.base, [](const StructureReport& r, u64) {
                                return r.coclass && *r.coclass <= 2;
                            }));
            break;
        default: break;
    }
    if (!gates_ok) {
        rep.status = CheckStatus::HypothesisNotMet;
        rep.detail = "hypothesis not met";
        return rep;
    }

    const auto src = detail::make_pairs(inst, *ctx.space());
    rep.source = src.kind;
    if (src.kind == "sampled") rep.seed = inst.seed;
    detail::LocalDeciders local(inst.limits);

    for (std::size_t k = 0; k < src.pairs.size(); ++k) {
        const auto& [e1, e2] = src.pairs[k];
        bool lhs = false, rhs = false;
        std::string detail_text;
        std::optional<MatrixHom> cert;
        auto take = [&](const IsoDecision& d) {
            if (d.verdict == Verdict::CapExceeded) throw CapExceeded(d.refuted_by, inst.limits.max_group_order);
            if (d.certificate) cert = d.certificate;
            return d.yes();
        };
        switch (id) {
            case TheoremId::P3_2: {
                auto o = oracle_g2_iso(ctx, e1, e2);
                lhs = o.has_value();
                if (o) cert = o;
                rhs = decide_sigma_criterion(ctx, e1, e2).yes();
                detail_text = "oracle g2 vs sigma criterion";
                break;
            }
            case TheoremId::T3_3: {
                lhs = take(decide_g2_iso(ctx, e1, e2));
                auto [ok, text] = local.all(e1, e2, decide_g2_iso);
                rhs = ok;
                detail_text = "global g2 vs local g2: " + text;
                break;
            }
            case TheoremId::P3_5: {
                auto o = oracle_hg2_iso(ctx, e1, e2);
                lhs = o.has_value();
                if (o) cert = o;
                rhs = decide_hg2_iso(ctx, e1, e2).yes();
                detail_text = "oracle hg2 vs coboundary criterion";
                break;
            }
            case TheoremId::T3_6: {
                lhs = take(decide_hg2_iso(ctx, e1, e2));
                auto [ok, text] = local.all(e1, e2, decide_hg2_iso);
                rhs = ok;
                detail_text = "global hg2 vs local hg2: " + text;
                break;
            }
            case TheoremId::L4_2: {
                auto p1 = perturbed_product(inst.coeffs, inst.base, e1, inst.limits);
                auto p2 = perturbed_product(inst.coeffs, inst.base, e2, inst.limits);
                auto o = oracle_upper_iso(p1, p2, inst.limits);
                lhs = o.has_value();
                if (o) cert = o;
                rhs = decide_upper_iso(ctx, e1, e2).yes();
                detail_text = "oracle upper vs (sigma, rho) criterion";
                break;
            }
            case TheoremId::P4_3:
            case TheoremId::T4_4:
            case TheoremId::P4_5: {
                lhs = take(decide_upper_iso(ctx, e1, e2));
                auto [ok, text] = local.all(e1, e2, decide_upper_iso);
                rhs = ok;
                detail_text = "global upper vs local upper: " + text;
                break;
            }
            case TheoremId::P5_2: {
                lhs = take(decide_a_iso(ctx, e1, e2));
                rhs = decide_sigma_criterion(ctx, e1, e2).yes();
                detail_text = "structured commuting search vs sigma criterion";
                break;
            }
            case TheoremId::P5_3: {
                lhs = take(decide_upper_a_iso(ctx, e1, e2, false));
                rhs = take(decide_upper_c_iso(ctx, e1, e2, false));
                detail_text = "upper-a vs upper-c";
                break;
            }
            case TheoremId::P5_4: {
                lhs = take(decide_upper_a_iso(ctx, e1, e2));
                auto [ok, text] = local.all(e1, e2, [](DeciderContext& c, const Cochain2& a, const Cochain2& b) {
                    return decide_upper_a_iso(c, a, b);
                });
                rhs = ok;
                detail_text = "global upper-a vs local upper-a: " + text;
                break;
            }
        }
        ++rep.pairs_checked;
        // T4.4 claims only global => local
        const bool violated = id == TheoremId::T4_4 ? (lhs && !rhs) : (lhs != rhs);
        if (violated) rep.counterexamples.push_back({k, e1, e2, lhs, rhs, detail_text, cert});
    }
    rep.vacuous = rep.pairs_checked == 0 || !src.distinct_classes;
    if (!rep.counterexamples.empty())
        rep.status = CheckStatus::Fail;
    else
        rep.status = rep.vacuous ? CheckStatus::Vacuous : CheckStatus::Pass;
    return rep;
}

}  // namespace extlab
