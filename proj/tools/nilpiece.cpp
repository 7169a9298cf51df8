// Command-line front end: map tables, Hasse diagrams, point-count
// polynomials, identity verification, and finite-field censuses.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
// refusal. All output is deterministic.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>

#include "nilpiece/census.hpp"
#include "nilpiece/filtration.hpp"
#include "nilpiece/polynomials.hpp"

using json = nlohmann::ordered_json;
using namespace nilpiece;
using namespace nilpiece::cones;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const Bipartition& bp) {
    return json{{"mu", bp.mu.parts()}, {"nu", bp.nu.parts()}};
}

json to_json(const IntPolynomial& p) {
    json coeffs = json::object();
    for (auto [e, c] : p.coeffs()) coeffs[std::to_string(e)] = c;
    return json{{"coeffs", coeffs}};
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file " + out_path);
        f << text;
    }
}

// ---------------------------------------------------------------------------
// maps

int cmd_maps(int n, const std::string& map, const std::string& format,
             const std::string& out) {
    std::function<std::string(const Bipartition&)> image_text;
    std::function<json(const Bipartition&)> image_json;
    auto partition_map = [&](auto f) {
        image_text = [f](const Bipartition& bp) { return to_string(f(bp)); };
        image_json = [f](const Bipartition& bp) { return json(f(bp).parts()); };
    };
    auto bipartition_map = [&](auto f) {
        image_text = [f](const Bipartition& bp) { return to_string(f(bp)); };
        image_json = [f](const Bipartition& bp) { return to_json(f(bp)); };
    };
    if (map == "phiC") partition_map([](const Bipartition& b) { return phi_C(b); });
    else if (map == "phiB") partition_map([](const Bipartition& b) { return phi_B(b); });
    else if (map == "phiB2") partition_map([](const Bipartition& b) { return phi_B2(b); });
    else if (map == "collapseC") bipartition_map([](const Bipartition& b) { return collapse_C(b); });
    else if (map == "collapseB") bipartition_map([](const Bipartition& b) { return collapse_B(b); });
    else if (map == "collapseSpecial") bipartition_map([](const Bipartition& b) { return collapse_special(b); });
    else if (map == "collapseTilde") bipartition_map([](const Bipartition& b) { return collapse_tilde(b); });
    else throw UsageError("unknown map " + map);

    auto all = enumerate_bipartitions(n);
    if (format == "json") {
        json entries = json::array();
        for (const auto& bp : all)
            entries.push_back(json{{"input", to_json(bp)}, {"image", image_json(bp)}});
        emit(out, json{{"command", "maps"}, {"n", n}, {"map", map}, {"entries", entries}}.dump(2) + "\n");
    } else {
        std::string text;
        for (const auto& bp : all) text += to_string(bp) + " -> " + image_text(bp) + "\n";
        emit(out, text);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// poset

int cmd_poset(int n, const std::string& kind, const std::string& format,
              const std::string& out) {
    std::vector<Bipartition> nodes;
    for (const auto& bp : enumerate_bipartitions(n)) {
        if (kind == "all" || (kind == "B" && is_B_dist(bp)) || (kind == "C" && is_C_dist(bp)) ||
            (kind == "special" && is_special(bp)) || (kind == "B2" && is_B2_dist(bp)))
            nodes.push_back(bp);
    }
    size_t m = nodes.size();
    std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) le[i][j] = bipartition_leq(nodes[i], nodes[j]);
    // covering relations: transitive reduction of the strict order
    std::vector<std::pair<size_t, size_t>> covers;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (i == j || !le[i][j]) continue;
            bool covered = true;
            for (size_t k = 0; k < m && covered; ++k)
                if (k != i && k != j && le[i][k] && le[k][j]) covered = false;
            if (covered) covers.emplace_back(j, i);  // larger -> smaller
        }
    std::sort(covers.begin(), covers.end());
    if (format == "dot") {
        std::string text = "digraph poset {\n";
        for (const auto& bp : nodes) text += "  \"" + to_string(bp) + "\";\n";
        for (auto [hi, lo] : covers)
            text += "  \"" + to_string(nodes[hi]) + "\" -> \"" + to_string(nodes[lo]) + "\";\n";
        emit(out, text + "}\n");
    } else if (format == "json") {
        json jnodes = json::array(), jedges = json::array();
        for (const auto& bp : nodes) jnodes.push_back(to_json(bp));
        for (auto [hi, lo] : covers)
            jedges.push_back(json{{"above", to_json(nodes[hi])}, {"below", to_json(nodes[lo])}});
        emit(out, json{{"command", "poset"}, {"n", n}, {"kind", kind},
                       {"nodes", jnodes}, {"covers", jedges}}.dump(2) + "\n");
    } else {
        std::string text;
        for (auto [hi, lo] : covers)
            text += to_string(nodes[hi]) + " > " + to_string(nodes[lo]) + "\n";
        emit(out, text);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// polys

int cmd_polys(int n, const std::string& piece, const std::string& format,
              const std::string& out) {
    std::vector<std::pair<Bipartition, IntPolynomial>> rows;
    for (const auto& bp : enumerate_bipartitions(n)) {
        if (piece == "orbit") rows.emplace_back(bp, exotic_point_poly(bp));
        else if (piece == "B" && is_B_dist(bp)) rows.emplace_back(bp, typeB_point_poly(bp));
        else if (piece == "C" && is_C_dist(bp)) rows.emplace_back(bp, typeC_point_poly(bp));
        else if (piece == "special" && is_special(bp))
            rows.emplace_back(bp, piece_poly(PiecePoly::Special, bp));
        else if (piece == "tilde" && is_B2_dist(bp))
            rows.emplace_back(bp, piece_poly(PiecePoly::Tilde, bp));
    }
    if (format == "json") {
        json entries = json::array();
        for (const auto& [bp, p] : rows) {
            json e = to_json(bp);
            e["degree"] = p.degree();
            e["poly"] = to_json(p);
            e["expanded"] = p.str();
            entries.push_back(e);
        }
        emit(out, json{{"command", "polys"}, {"n", n}, {"piece", piece},
                       {"entries", entries}}.dump(2) + "\n");
    } else {
        std::string text;
        for (const auto& [bp, p] : rows)
            text += to_string(bp) + "  deg " + std::to_string(p.degree()) + "  " + p.str() + "\n";
        emit(out, text);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(int n, bool tamper, const std::string& format, const std::string& out) {
    std::optional<Bipartition> corrupt;
    if (tamper) corrupt = enumerate_bipartitions(n).front();
    IdentityReport rep = verify_identities(n, corrupt);
    if (format == "json") {
        emit(out, json{{"command", "verify"}, {"n", n}, {"checked", rep.checked},
                       {"failures", rep.failures}, {"pass", rep.all_pass()}}.dump(2) + "\n");
    } else {
        std::string text = "verified " + std::to_string(rep.checked) + " identities at n = " +
                           std::to_string(n) + "\n";
        for (const auto& f : rep.failures) text += "FAIL " + f + "\n";
        text += rep.all_pass() ? "all identities hold\n" : "identities FAILED\n";
        emit(out, text);
    }
    return rep.all_pass() ? 0 : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// census

int cmd_census(const std::string& cone_arg, int n, long long q, bool override_budget,
               const std::string& format, const std::string& out) {
    Cone cone;
    if (cone_arg == "exotic") cone = Cone::Exotic;
    else if (cone_arg == "sp2") cone = Cone::Sp2;
    else if (cone_arg == "o2") cone = Cone::O2;
    else if (cone_arg == "spodd") cone = Cone::SpOdd;
    else if (cone_arg == "oodd") cone = Cone::OOdd;
    else throw UsageError("unknown cone " + cone_arg);

    CensusReport rep;
    try {
        rep = run_census(cone, n, q, override_budget);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    if (format == "csv") {
        std::string text = "label_mu,label_nu,jordan_type,tally,expected,pass\n";
        for (const auto& l : rep.lines) {
            if (l.section != "orbit") continue;
            text += to_string(l.label.mu) + "," + to_string(l.label.nu) + "," +
                    to_string(l.jordan) + "," + std::to_string(l.tally) + "," +
                    std::to_string(l.expected) + "," + (l.pass ? "true" : "false") + "\n";
        }
        emit(out, text);
    } else if (format == "json") {
        json lines = json::array();
        for (const auto& l : rep.lines)
            lines.push_back(json{{"section", l.section}, {"label", to_json(l.label)},
                                 {"jordan_type", l.jordan.parts()}, {"tally", l.tally},
                                 {"expected", l.expected}, {"pass", l.pass}});
        emit(out, json{{"command", "census"}, {"cone", cone_name(cone)}, {"n", n}, {"q", q},
                       {"space_points", rep.space_points}, {"cone_points", rep.cone_points},
                       {"lines", lines}, {"pass", rep.all_pass()}}.dump(2) + "\n");
    } else {
        std::string text = "census " + cone_name(cone) + " n=" + std::to_string(n) +
                           " q=" + std::to_string(q) + ": " + std::to_string(rep.space_points) +
                           " ambient points, " + std::to_string(rep.cone_points) +
                           " cone points\n";
        for (const auto& l : rep.lines)
            text += "  " + l.section + " " + to_string(l.label) + " jordan=" +
                    to_string(l.jordan) + " tally=" + std::to_string(l.tally) + " expected=" +
                    std::to_string(l.expected) + (l.pass ? " ok" : " MISMATCH") + "\n";
        text += rep.all_pass() ? "all tallies match\n" : "census FAILED\n";
        emit(out, text);
    }
    return rep.all_pass() ? 0 : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// filtration

int cmd_filtration(int n, long long q, const std::string& kind, long long sample,
                   const std::string& format, const std::string& out) {
    if (q != 2 && q != 4 && q != 8) throw UsageError("filtration checks run in characteristic 2");
    ConeSide side = kind == "B" ? ConeSide::B : ConeSide::C;
    unsigned long long space = cones::detail::ipow_saturating(q, 2 * n * n + n);
    if (space > kCensusBudget && sample == 0) throw BudgetExceeded(space);

    const Field& F = Field::gf(static_cast<int>(q));
    fq::FqOps ops(F);
    BilinearSpace sp_space = standard_symplectic_space(F, n);
    int d = 2 * n;
    auto pos = cones::detail::oV_positions(d);
    unsigned long long xs = cones::detail::ipow_saturating(q, static_cast<int>(pos.size()));
    unsigned long long vs = cones::detail::ipow_saturating(q, d);

    std::map<Bipartition, long long> per_label;
    long long checked = 0;
    auto handle = [&](unsigned long long xi, unsigned long long vi) {
        auto x = cones::detail::decode_mirrored(ops, d, pos, cones::detail::Digits{xi, q});
        if (!fq::is_nilpotent(ops, x)) return false;
        auto v = cones::detail::decode_vector(ops, d, cones::detail::Digits{vi, q});
        Bipartition label = classify_exotic_char2(ops, F, v, x);
        Partition lam = side == ConeSide::C ? phi_C(label) : phi_B(label);
        Filtration f = build_filtration(sp_space, v, x, lam, side);
        verify_filtration(sp_space, v, x, lam, side, f);
        ++per_label[side == ConeSide::C ? collapse_C(label) : collapse_B(label)];
        ++checked;
        return true;
    };
    if (sample > 0) {
        std::mt19937_64 rng(20250809);
        while (checked < sample) handle(rng() % xs, rng() % vs);
    } else {
        for (unsigned long long xi = 0; xi < xs; ++xi)
            for (unsigned long long vi = 0; vi < vs; ++vi)
                if (!handle(xi, vi)) break;  // x not nilpotent: skip the v loop
    }

    if (format == "json") {
        json per = json::array();
        for (const auto& [label, count] : per_label)
            per.push_back(json{{"piece", to_json(label)}, {"points", count}});
        emit(out, json{{"command", "filtration"}, {"n", n}, {"q", q}, {"kind", kind},
                       {"checked", checked}, {"pieces", per}, {"pass", true}}.dump(2) + "\n");
    } else {
        std::string text = "filtration kind=" + kind + " n=" + std::to_string(n) +
                           " q=" + std::to_string(q) + ": " + std::to_string(checked) +
                           " points verified\n";
        for (const auto& [label, count] : per_label)
            text += "  piece " + to_string(label) + ": " + std::to_string(count) + " points\n";
        text += "all filtrations adapted\n";
        emit(out, text);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bipartition combinatorics and nilpotent-cone censuses"};
    app.require_subcommand(1);

    int limit = 12;
    app.add_option("--limit", limit, "bound on n for the combinatorial commands");

    auto* maps = app.add_subcommand("maps", "tabulate a combinatorial map on Q_n");
    int maps_n = 2;
    std::string maps_map = "phiC", maps_format = "text", maps_out;
    maps->add_option("--n", maps_n)->required();
    maps->add_option("--map", maps_map,
                     "phiC|phiB|phiB2|collapseC|collapseB|collapseSpecial|collapseTilde");
    maps->add_option("--format", maps_format);
    maps->add_option("--out", maps_out);

    auto* poset = app.add_subcommand("poset", "Hasse diagram of interleaved dominance");
    int poset_n = 2;
    std::string poset_kind = "all", poset_format = "dot", poset_out;
    poset->add_option("--n", poset_n)->required();
    poset->add_option("--kind", poset_kind, "all|B|C|special|B2");
    poset->add_option("--format", poset_format);
    poset->add_option("--out", poset_out);

    auto* polys = app.add_subcommand("polys", "point-count polynomials");
    int polys_n = 2;
    std::string polys_piece = "orbit", polys_format = "text", polys_out;
    polys->add_option("--n", polys_n)->required();
    polys->add_option("--piece", polys_piece, "orbit|B|C|special|tilde");
    polys->add_option("--format", polys_format);
    polys->add_option("--out", polys_out);

    auto* verify = app.add_subcommand("verify", "verify the polynomial identities at rank n");
    int verify_n = 3;
    bool verify_tamper = false;
    std::string verify_format = "text", verify_out;
    verify->add_option("--n", verify_n)->required();
    verify->add_option("--format", verify_format);
    verify->add_option("--out", verify_out);
    verify->add_flag("--tamper", verify_tamper)->group("");  // harness-only failure injection

    auto* census = app.add_subcommand("census", "exhaustive orbit census over F_q");
    std::string census_cone, census_format = "text", census_out;
    int census_n = 2;
    long long census_q = 2;
    bool override_budget = false;
    census->add_option("--cone", census_cone, "exotic|sp2|o2|spodd|oodd")->required();
    census->add_option("--n", census_n)->required();
    census->add_option("--q", census_q)->required();
    census->add_flag("--override-budget", override_budget);
    census->add_option("--format", census_format);
    census->add_option("--out", census_out);

    auto* filt = app.add_subcommand("filtration", "verify adapted filtrations pointwise");
    int filt_n = 2;
    long long filt_q = 2, filt_sample = 0;
    std::string filt_kind = "C", filt_format = "text", filt_out;
    filt->add_option("--n", filt_n)->required();
    filt->add_option("--q", filt_q)->required();
    filt->add_option("--kind", filt_kind, "B|C");
    filt->add_option("--sample", filt_sample, "verify this many sampled points instead of all");
    filt->add_option("--format", filt_format);
    filt->add_option("--out", filt_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (maps->parsed()) {
            if (maps_n > limit) throw UsageError("n exceeds the configured bound");
            return cmd_maps(maps_n, maps_map, maps_format, maps_out);
        }
        if (poset->parsed()) {
            if (poset_n > limit) throw UsageError("n exceeds the configured bound");
            return cmd_poset(poset_n, poset_kind, poset_format, poset_out);
        }
        if (polys->parsed()) {
            if (polys_n > limit) throw UsageError("n exceeds the configured bound");
            return cmd_polys(polys_n, polys_piece, polys_format, polys_out);
        }
        if (verify->parsed())
            return cmd_verify(verify_n, verify_tamper, verify_format, verify_out);
        if (census->parsed())
            return cmd_census(census_cone, census_n, census_q, override_budget, census_format,
                              census_out);
        if (filt->parsed())
            return cmd_filtration(filt_n, filt_q, filt_kind, filt_sample, filt_format, filt_out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << " (pass --override-budget to force)\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
