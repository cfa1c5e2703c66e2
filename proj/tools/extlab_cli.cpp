// extlab command-line tool.
//
// Exit codes: 0 yes / pass, 1 no / fail, 2 hypothesis not met or cap
// exceeded, 3 invalid input.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "extlab/extlab.hpp"
#include "extlab/io.hpp"

using namespace extlab;
using io::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitGate = 2;
constexpr int kExitInput = 3;

struct RunConfig {
    std::size_t max_group_order = Limits{}.max_group_order;
    std::size_t max_table_order = Limits{}.max_table_order;
    std::size_t oracle_bound = Limits{}.oracle_bound;
    std::string output = "json";
    bool timing = false;

    Limits limits() const {
        Limits l;
        l.max_group_order = max_group_order;
        l.max_table_order = max_table_order;
        l.oracle_bound = oracle_bound;
        return l;
    }
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Flattens scalar fields into key,value lines.
void print_csv(const json& j, const std::string& prefix = {}) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object())
            print_csv(*it, key);
        else if (it->is_array())
            std::cout << key << ",\"" << it->dump() << "\"\n";
        else
            std::cout << key << "," << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
}

void print_text(const json& j, const std::string& indent = {}) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object()) {
            std::cout << indent << it.key() << ":\n";
            print_text(*it, indent + "  ");
        } else {
            std::cout << indent << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump())
                      << "\n";
        }
    }
}

void emit(const RunConfig& cfg, const json& j) {
    if (cfg.output == "csv")
        print_csv(j);
    else if (cfg.output == "text")
        print_text(j);
    else
        std::cout << j.dump(2) << "\n";
}

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::Yes: return kExitYes;
        case Verdict::No: return kExitNo;
        default: return kExitGate;
    }
}

int exit_for(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass:
        case CheckStatus::Vacuous: return kExitYes;
        case CheckStatus::Fail: return kExitNo;
        default: return kExitGate;
    }
}

// --- group -------------------------------------------------------------------

struct GroupArgs {
    std::string ref;
    std::string export_path;
    bool table = false;
};

int cmd_group(const RunConfig& cfg, const GroupArgs& a) {
    auto G = io::load_group(a.ref, cfg.limits());
    if (G.order() > cfg.max_group_order)
        throw CapExceeded("group " + G.label() + " of order " + std::to_string(G.order()),
                          cfg.max_group_order);
    auto st = structure_predicates(G);
    json j;
    j["name"] = G.label();
    j["order"] = G.order();
    j["abelian"] = st.is_abelian;
    j["cyclic"] = st.is_cyclic;
    j["perfect"] = st.is_perfect;
    j["centerless"] = st.is_centerless;
    j["nilpotent"] = st.is_nilpotent;
    j["nilpotency_class"] = st.nilpotency_class ? json(*st.nilpotency_class) : json(nullptr);
    j["coclass"] = st.coclass ? json(*st.coclass) : json(nullptr);
    j["center_order"] = center(G).order();
    j["derived_order"] = derived_subgroup(G).subgroup.order();
    json sylows = json::object();
    for (auto p : prime_divisors(G.order())) sylows[std::to_string(p)] = sylow_subgroup(G, p).order();
    j["sylow_orders"] = sylows;
    auto aut = automorphisms(G, cfg.limits());
    j["aut_order"] = aut.size();
    j["commuting_aut_order"] = commuting_automorphisms(G, cfg.limits()).size();
    j["central_aut_order"] = central_automorphisms(G, cfg.limits()).size();
    if (a.table) j["cayley"] = io::group_to_json(G)["cayley"];
    if (!a.export_path.empty()) io::write_text_file(a.export_path, io::group_to_json(G).dump(2) + "\n");
    emit(cfg, j);
    return kExitYes;
}

// --- h2 ----------------------------------------------------------------------

struct H2Args {
    std::string group;
    std::string coeffs;
    std::string method = "auto";
    std::string emit_dir;
};

int cmd_h2(const RunConfig& cfg, const H2Args& a) {
    auto G = io::load_group(a.group, cfg.limits());
    auto M = io::load_module(a.coeffs);
    SpaceMethod method = SpaceMethod::Auto;
    if (a.method == "triples")
        method = SpaceMethod::Triples;
    else if (a.method == "generators")
        method = SpaceMethod::Generators;
    else if (a.method != "auto")
        throw InvalidInput("unknown method '" + a.method + "'");
    auto S = compute_spaces(G, M, cfg.limits(), method);
    json j;
    j["group"] = G.label();
    j["coeffs"] = M.factors();
    j["method"] = S->method();
    j["z2_order"] = S->z2_order().to_string();
    j["b2_order"] = S->b2_order().to_string();
    j["h2_invariants"] = S->h2_invariants();
    j["h2_order"] = S->h2_order();
    if (S->h2_order() <= 64) {
        json reps = json::array();
        auto classes = S->class_representatives();
        for (std::size_t k = 0; k < classes.size(); ++k) {
            reps.push_back(io::cochain_to_json(classes[k])["table"]);
            if (!a.emit_dir.empty()) {
                std::filesystem::create_directories(a.emit_dir);
                io::write_text_file(a.emit_dir + "/class_" + std::to_string(k) + ".json",
                                    io::cochain_to_json(classes[k]).dump() + "\n");
            }
        }
        j["representatives"] = std::move(reps);
    }
    emit(cfg, j);
    return kExitYes;
}

// --- build -------------------------------------------------------------------

struct BuildArgs {
    std::string cocycle;
    std::string group;
    std::string coeffs;
    int class_index = -1;
    std::string out;
    std::string sidecar;
};

int cmd_build(const RunConfig& cfg, const BuildArgs& a) {
    std::optional<Cochain2> eps;
    if (!a.cocycle.empty()) {
        eps = io::load_cochain(a.cocycle, cfg.limits());
    } else {
        if (a.group.empty() || a.coeffs.empty())
            throw InvalidInput("build needs --cocycle, or --group and --coeffs");
        auto G = io::load_group(a.group, cfg.limits());
        auto M = io::load_module(a.coeffs);
        if (a.class_index < 0) {
            eps = Cochain2(G, M);
        } else {
            auto reps = compute_spaces(G, M, cfg.limits())->class_representatives(cfg.oracle_bound);
            if (static_cast<std::size_t>(a.class_index) >= reps.size())
                throw InvalidInput("class index out of range (H^2 has " + std::to_string(reps.size()) +
                                   " classes)");
            eps = reps[static_cast<std::size_t>(a.class_index)];
        }
    }
    auto p = perturbed_product(eps->coeffs(), eps->base(), *eps, cfg.limits());
    auto group = io::group_to_json(p.realized().relabeled(eps->coeffs().label() + "_eps_" + eps->base().label()));
    auto sidecar = io::product_sidecar(p);
    if (!a.out.empty()) {
        io::write_text_file(a.out, group.dump(2) + "\n");
        const std::string side = a.sidecar.empty() ? a.out + ".sidecar.json" : a.sidecar;
        io::write_text_file(side, sidecar.dump(2) + "\n");
    }
    json j;
    j["name"] = group["name"];
    j["order"] = p.realized().order();
    j["abelian"] = p.realized().is_abelian();
    auto orders = p.realized().element_orders();
    j["max_element_order"] = *std::max_element(orders.begin(), orders.end());
    if (a.out.empty()) {
        j["group"] = group;
        j["sidecar"] = sidecar;
    } else {
        j["written"] = a.out;
    }
    emit(cfg, j);
    return kExitYes;
}

// --- iso ---------------------------------------------------------------------

struct IsoArgs {
    std::string mode = "upper";
    std::string eps1;
    std::string eps2;
};

int cmd_iso(const RunConfig& cfg, const IsoArgs& a) {
    const auto mode = parse_mode(a.mode);
    auto e1 = io::load_cochain(a.eps1, cfg.limits());
    auto e2 = io::load_cochain(a.eps2, cfg.limits());
    if (!e1.same_domain(e2)) throw InvalidInput("cocycles have different base or coefficients");
    const auto start = Clock::now();
    DeciderContext ctx(e1.base(), e1.coeffs(), cfg.limits());
    IsoDecision d;
    try {
        d = decide(ctx, mode, e1, e2);
    } catch (const CapExceeded& e) {
        d.mode = mode;
        d.verdict = Verdict::CapExceeded;
        d.refuted_by = e.what();
    }
    emit(cfg, io::decision_to_json(d, cfg.timing ? std::optional<double>(elapsed_ms(start)) : std::nullopt));
    return exit_for(d.verdict);
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
    std::string theorem;
    std::string group;
    std::string coeffs;
    bool exhaustive = false;
    std::size_t samples = 0;
    u64 seed = 0;
    std::vector<std::string> pairs;
};

int cmd_verify(const RunConfig& cfg, const VerifyArgs& a) {
    const auto id = parse_theorem(a.theorem);
    TheoremInstance inst{io::load_group(a.group, cfg.limits()), io::load_module(a.coeffs), {}, std::nullopt,
                         16, cfg.limits()};
    if (!a.pairs.empty()) {
        if (a.pairs.size() % 2 != 0) throw InvalidInput("--pair takes cocycle files two at a time");
        for (std::size_t i = 0; i < a.pairs.size(); i += 2) {
            auto x = io::load_cochain(a.pairs[i], cfg.limits());
            auto y = io::load_cochain(a.pairs[i + 1], cfg.limits());
            if (!x.base().same_table(inst.base) || !(x.coeffs() == inst.coeffs) || !x.same_domain(y))
                throw InvalidInput("pair cocycles do not match --group/--coeffs");
            inst.pairs.emplace_back(std::move(x), std::move(y));
        }
    } else if (a.samples > 0) {
        inst.seed = a.seed;
        inst.samples = a.samples;
    } else if (!a.exhaustive) {
        throw InvalidInput("choose a pair source: --exhaustive, --sample N, or --pair A B");
    }
    const auto start = Clock::now();
    TheoremReport r;
    try {
        r = verify_theorem(id, inst);
    } catch (const CapExceeded& e) {
        r.theorem = to_string(id);
        r.instance = inst.base.label() + " / " + inst.coeffs.label();
        r.status = CheckStatus::HypothesisNotMet;
        r.detail = e.what();
    }
    auto j = io::theorem_report_to_json(r, cfg.timing ? std::optional<double>(elapsed_ms(start)) : std::nullopt);
    if (!r.detail.empty()) j["detail"] = r.detail;
    emit(cfg, j);
    return exit_for(r.status);
}

// --- oracle ------------------------------------------------------------------

struct OracleArgs {
    std::string kind = "upper";
    std::string eps1;
    std::string eps2;
};

int cmd_oracle(const RunConfig& cfg, const OracleArgs& a) {
    auto e1 = io::load_cochain(a.eps1, cfg.limits());
    auto e2 = io::load_cochain(a.eps2, cfg.limits());
    if (!e1.same_domain(e2)) throw InvalidInput("cocycles have different base or coefficients");
    DeciderContext ctx(e1.base(), e1.coeffs(), cfg.limits());
    std::optional<MatrixHom> found;
    const auto start = Clock::now();
    if (a.kind == "upper") {
        auto p1 = perturbed_product(e1.coeffs(), e1.base(), e1, cfg.limits());
        auto p2 = perturbed_product(e2.coeffs(), e2.base(), e2, cfg.limits());
        found = oracle_upper_iso(p1, p2, cfg.limits());
    } else if (a.kind == "g2") {
        found = oracle_g2_iso(ctx, e1, e2);
    } else if (a.kind == "hg2") {
        found = oracle_hg2_iso(ctx, e1, e2);
    } else if (a.kind == "abstract") {
        found = decide_abstract_iso(ctx, e1, e2).certificate;
    } else {
        throw InvalidInput("unknown oracle '" + a.kind + "' (expected upper, g2, hg2 or abstract)");
    }
    json j;
    j["oracle"] = a.kind;
    j["found"] = found.has_value();
    j["certificate"] = found ? io::matrix_hom_to_json(*found) : json(nullptr);
    j["timing_ms"] = cfg.timing ? json(elapsed_ms(start)) : json(nullptr);
    emit(cfg, j);
    return found ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extlab: central extensions as perturbed direct products"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    if (const char* env = std::getenv("EXTLAB_MAX_ORDER")) {
        try {
            cfg.max_group_order = std::stoul(env);
        } catch (const std::exception&) {
            std::cerr << "error: EXTLAB_MAX_ORDER must be a positive integer\n";
            return kExitInput;
        }
    }
    app.add_option("--max-order", cfg.max_group_order, "cap on groups searched for automorphisms")
        ->check(CLI::PositiveNumber);
    app.add_option("--table-cap", cfg.max_table_order, "cap on explicit Cayley tables")
        ->check(CLI::PositiveNumber);
    app.add_option("--oracle-bound", cfg.oracle_bound, "cap on brute-force enumerations")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.output, "output format")->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_flag("--timing", cfg.timing, "include wall-clock timing in reports");

    GroupArgs ga;
    auto* group = app.add_subcommand("group", "describe a group");
    group->add_option("ref", ga.ref, "preset name or group file")->required();
    group->add_option("--export", ga.export_path, "write the group file here");
    group->add_flag("--table", ga.table, "include the Cayley table");

    H2Args ha;
    auto* h2 = app.add_subcommand("h2", "second cohomology with trivial action");
    h2->add_option("--group", ha.group)->required();
    h2->add_option("--coeffs", ha.coeffs, "invariant factors, e.g. 6 or 2,4, or a module file")->required();
    h2->add_option("--method", ha.method, "auto, triples or generators");
    h2->add_option("--emit-dir", ha.emit_dir, "write one cocycle file per class");

    BuildArgs ba;
    auto* build = app.add_subcommand("build", "realize a perturbed direct product");
    build->add_option("--cocycle", ba.cocycle, "cocycle file");
    build->add_option("--group", ba.group);
    build->add_option("--coeffs", ba.coeffs);
    build->add_option("--class", ba.class_index, "index of a class representative");
    build->add_option("--out", ba.out, "group file to write");
    build->add_option("--sidecar", ba.sidecar, "provenance file (default <out>.sidecar.json)");

    IsoArgs ia;
    auto* iso = app.add_subcommand("iso", "decide an isomorphism notion between two products");
    iso->add_option("--mode", ia.mode, "g2, hg2, upper, upper-a, upper-c or abstract");
    iso->add_option("eps1", ia.eps1)->required();
    iso->add_option("eps2", ia.eps2)->required();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check a theorem on an instance");
    verify->add_option("--theorem", va.theorem)->required();
    verify->add_option("--group", va.group)->required();
    verify->add_option("--coeffs", va.coeffs)->required();
    verify->add_flag("--exhaustive", va.exhaustive, "all class-representative pairs");
    verify->add_option("--sample", va.samples, "number of random cocycle pairs");
    verify->add_option("--seed", va.seed, "seed for --sample");
    verify->add_option("--pair", va.pairs, "explicit cocycle files, two per pair");

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "brute-force isomorphism search");
    oracle->add_option("--kind", oa.kind, "upper, g2, hg2 or abstract");
    oracle->add_option("eps1", oa.eps1)->required();
    oracle->add_option("eps2", oa.eps2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*group) return cmd_group(cfg, ga);
        if (*h2) return cmd_h2(cfg, ha);
        if (*build) return cmd_build(cfg, ba);
        if (*iso) return cmd_iso(cfg, ia);
        if (*verify) return cmd_verify(cfg, va);
        if (*oracle) return cmd_oracle(cfg, oa);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitGate;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
