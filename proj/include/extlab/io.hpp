#pragma once

// JSON formats for groups, modules, cocycles, products and reports.
// Requires nlohmann/json (vendor/json.hpp).

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "extlab/theorems.hpp"

namespace extlab::io {

using nlohmann::json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << text;
}

// A ref names a file when it exists on disk or ends in ".json".
inline bool looks_like_path(const std::string& ref) {
    return std::filesystem::exists(ref) ||
           (ref.size() > 5 && ref.compare(ref.size() - 5, 5, ".json") == 0);
}

// ---------------------------------------------------------------------------
// Groups

inline json group_to_json(const FiniteGroup& G) {
    const auto n = G.order();
    json rows = json::array();
    for (Element a = 0; a < n; ++a) {
        json row = json::array();
        for (Element b = 0; b < n; ++b) row.push_back(G.mul(a, b));
        rows.push_back(std::move(row));
    }
    return {{"name", G.label()}, {"cayley", std::move(rows)}};
}

inline FiniteGroup group_from_json(const json& j, const Limits& limits = {}) {
    if (j.is_string()) return preset_group(j.get<std::string>(), limits);
    if (!j.is_object()) throw InvalidInput("group must be a preset name or an object");
    const std::string name = j.value("name", std::string("G"));
    try {
        if (j.contains("cayley"))
            return FiniteGroup::from_table(j.at("cayley").get<std::vector<std::vector<std::int64_t>>>(), name,
                                           limits);
        if (j.contains("perm_gens")) {
            if (!j.contains("degree")) throw InvalidInput("permutation group file needs 'degree'");
            return FiniteGroup::from_permutations(j.at("degree").get<std::size_t>(),
                                                  j.at("perm_gens").get<std::vector<Permutation>>(), name,
                                                  limits);
        }
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed group file: ") + e.what());
    }
    throw InvalidInput("group file needs 'cayley' or 'degree' + 'perm_gens'");
}

// Preset name or path to a group file.
inline FiniteGroup load_group(const std::string& ref, const Limits& limits = {}) {
    if (looks_like_path(ref)) return group_from_json(read_json_file(ref), limits);
    return preset_group(ref, limits);
}

// ---------------------------------------------------------------------------
// Modules

inline json module_to_json(const AbelianModule& M) { return {{"invariant_factors", M.factors()}}; }

inline AbelianModule module_from_json(const json& j) {
    try {
        if (j.is_array()) return module_from_factors(j.get<std::vector<std::int64_t>>());
        if (j.is_number_integer()) return module_from_factors({j.get<std::int64_t>()});
        return module_from_factors(j.at("invariant_factors").get<std::vector<std::int64_t>>());
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed module: ") + e.what());
    }
}

// "6" means [6]; "2,4" is a list; anything else is a module file path.
inline AbelianModule load_module(const std::string& ref) {
    if (looks_like_path(ref)) return module_from_json(read_json_file(ref));
    std::vector<std::int64_t> f;
    std::stringstream ss(ref);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) throw InvalidInput("bad coefficient list '" + ref + "'");
        f.push_back(v);
    }
    if (f.empty()) throw InvalidInput("empty coefficient list");
    return module_from_factors(f);
}

// ---------------------------------------------------------------------------
// Cochains

inline json cochain_to_json(const Cochain2& eps) {
    const auto n = eps.base().order();
    json table = json::array();
    for (Element g = 0; g < n; ++g) {
        json row = json::array();
        for (Element h = 0; h < n; ++h) row.push_back(eps.at(g, h));
        table.push_back(std::move(row));
    }
    return {{"group", group_to_json(eps.base())}, {"coeffs", module_to_json(eps.coeffs())}, {"table", table}};
}

// Parses and validates a cocycle file: normalization, ranges and the
// cocycle identity (reported with a failing triple).
inline Cochain2 cochain_from_json(const json& j, const Limits& limits = {}, bool require_cocycle = true) {
    if (!j.is_object() || !j.contains("group") || !j.contains("coeffs") || !j.contains("table"))
        throw InvalidInput("cocycle file needs 'group', 'coeffs' and 'table'");
    const auto& gj = j.at("group");
    FiniteGroup G = gj.is_string() && looks_like_path(gj.get<std::string>())
                        ? load_group(gj.get<std::string>(), limits)
                        : group_from_json(gj, limits);
    const auto& cj = j.at("coeffs");
    AbelianModule M = module_from_json(cj);
    if (cj.is_object()) {
        std::vector<u64> given;
        for (auto f : cj.at("invariant_factors").get<std::vector<std::int64_t>>())
            if (f != 1) given.push_back(static_cast<u64>(f));
        if (given != M.factors())
            throw InvalidInput("cocycle coefficients must be in invariant-factor form, expected " +
                               json(M.factors()).dump());
    }
    std::vector<std::vector<Residues>> table;
    try {
        for (auto& row : j.at("table")) {
            std::vector<Residues> r;
            for (auto& v : row) {
                if (v.is_number_integer() && M.rank() == 1) {
                    const auto x = v.get<std::int64_t>();
                    if (x < 0) throw InvalidInput("negative cocycle entry");
                    r.push_back({static_cast<u64>(x)});
                } else {
                    for (auto& x : v)
                        if (x.get<std::int64_t>() < 0) throw InvalidInput("negative cocycle entry");
                    r.push_back(v.get<Residues>());
                }
            }
            table.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed cocycle table: ") + e.what());
    }
    auto eps = Cochain2::from_table(G, M, table);
    if (require_cocycle) {
        if (auto bad = cocycle_failure(eps)) {
            auto [a, b, c] = *bad;
            throw InvalidInput("not a cocycle: identity fails at (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
        }
    }
    return eps;
}

inline Cochain2 load_cochain(const std::string& path, const Limits& limits = {}) {
    return cochain_from_json(read_json_file(path), limits);
}

// ---------------------------------------------------------------------------
// Products

inline json product_sidecar(const PerturbedProduct& p) {
    json table = json::array();
    const auto n = p.g2().order();
    for (Element g = 0; g < n; ++g) {
        json row = json::array();
        for (Element h = 0; h < n; ++h) row.push_back(p.eps().at(g, h));
        table.push_back(std::move(row));
    }
    return {{"g1", module_to_json(p.g1())},
            {"g2", group_to_json(p.g2())},
            {"eps", std::move(table)},
            {"encode", "row-major"}};
}

// ---------------------------------------------------------------------------
// Reports

inline json matrix_hom_to_json(const MatrixHom& m) {
    return {{"phi11", m.phi11}, {"phi12", m.phi12}, {"phi21", m.phi21}, {"phi22", m.phi22}};
}

inline json decision_to_json(const IsoDecision& d, std::optional<double> timing_ms = std::nullopt) {
    json j;
    j["mode"] = to_string(d.mode);
    j["verdict"] = to_string(d.verdict);
    if (d.eta)
        j["certificate"] = {{"eta", d.eta->index_table()}};
    else if (d.certificate)
        j["certificate"] = matrix_hom_to_json(*d.certificate);
    else
        j["certificate"] = nullptr;
    j["hypothesis_gates"] = d.hypothesis_gates;
    j["path"] = d.path;
    if (!d.refuted_by.empty()) j["refuted_by"] = d.refuted_by;
    j["timing_ms"] = timing_ms ? json(*timing_ms) : json(nullptr);
    return j;
}

inline json theorem_report_to_json(const TheoremReport& r, std::optional<double> timing_ms = std::nullopt) {
    json j;
    j["theorem"] = r.theorem;
    j["instance"] = r.instance;
    j["status"] = to_string(r.status);
    j["source"] = r.source;
    if (r.seed) j["seed"] = *r.seed;
    j["pairs_checked"] = r.pairs_checked;
    j["vacuous"] = r.vacuous;
    j["hypothesis_gates"] = r.hypothesis_gates;
    json ces = json::array();
    for (auto& c : r.counterexamples) {
        json cj{{"pair_index", c.index},
                {"lhs", c.lhs},
                {"rhs", c.rhs},
                {"detail", c.detail},
                {"eps1", cochain_to_json(c.eps1)["table"]},
                {"eps2", cochain_to_json(c.eps2)["table"]}};
        if (c.certificate) cj["certificate"] = matrix_hom_to_json(*c.certificate);
        ces.push_back(std::move(cj));
    }
    j["counterexamples"] = std::move(ces);
    if (timing_ms) j["timing_ms"] = *timing_ms;
    return j;
}

}  // namespace extlab::io
