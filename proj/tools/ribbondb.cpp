// Command-line front end: PD parsing, invariants, tangle closures, greedy
// simplification, and the full database verification run.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ribbon/database.hpp"
#include "ribbon/invariants.hpp"
#include "ribbon/simplify.hpp"
#include "ribbon/tangle.hpp"
#include "ribbon/verify.hpp"

namespace {

using namespace ribbon;

const TangleRecord& record_by_name(const std::string& name) {
    for (const auto& rec : load_builtin())
        if (rec.name == name) return rec;
    throw ContractError("unknown knot name: " + name +
                        " (see `ribbondb list`)");
}

PlanarDiagram diagram_from(const std::string& pd_text, const std::string& knot) {
    if (!pd_text.empty() && !knot.empty())
        throw ContractError("give either --pd or --knot, not both");
    if (!pd_text.empty()) return parse_pd(pd_text);
    if (!knot.empty()) return record_by_name(knot).diagram();
    throw ContractError("one of --pd or --knot is required");
}

std::string poly_json(const LaurentPolynomial& p) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : p.triples()) rows.push_back({r[0], r[1], r[2]});
    return rows.dump();
}

// Role names t1..tN / b1..bN of a tangle's current open ends.
struct RoleMap {
    std::vector<std::pair<std::string, Edge>> roles;

    static RoleMap of(const Tangle& t) {
        RoleMap m;
        for (std::size_t p = 0; p < t.tops.size(); ++p)
            m.roles.emplace_back("t" + std::to_string(p + 1), t.tops[p]);
        for (std::size_t p = 0; p < t.bottoms.size(); ++p)
            m.roles.emplace_back("b" + std::to_string(p + 1), t.bottoms[p]);
        return m;
    }
    Edge lookup(const std::string& role) const {
        for (const auto& [r, e] : roles)
            if (r == role) return e;
        throw ContractError("unknown end role: " + role);
    }
    // After stitching, surviving ends keep their labels (possibly renamed);
    // refresh by intersecting with the new tangle's open ends.
    RoleMap surviving(const Tangle& t) const {
        RoleMap m;
        for (const auto& [r, e] : roles) {
            for (Edge cur : t.tops)
                if (cur == e) m.roles.emplace_back(r, e);
            for (Edge cur : t.bottoms)
                if (cur == e) m.roles.emplace_back(r, e);
        }
        return m;
    }
};

void print_tangle(const Tangle& t, bool as_json) {
    if (as_json) {
        nlohmann::json doc;
        doc["pd"] = serialize_pd(t.interior);
        doc["free_loops"] = t.interior.free_loops();
        doc["tops"] = t.tops;
        doc["bottoms"] = t.bottoms;
        nlohmann::json arcs = nlohmann::json::array();
        for (auto [a, b] : t.interior.arcs()) arcs.push_back({a, b});
        doc["arcs"] = arcs;
        std::cout << doc.dump(1) << "\n";
        return;
    }
    std::cout << "pd: " << serialize_pd(t.interior) << "\n";
    if (!t.interior.arcs().empty()) {
        std::cout << "arcs:";
        for (auto [a, b] : t.interior.arcs()) std::cout << " (" << a << "," << b << ")";
        std::cout << "\n";
    }
    std::cout << "free_loops: " << t.interior.free_loops() << "\n";
    auto ends = [](const std::vector<Edge>& v) {
        std::string s;
        for (Edge e : v) s += (s.empty() ? "" : " ") + std::to_string(e);
        return s;
    };
    std::cout << "tops: " << ends(t.tops) << "\n";
    std::cout << "bottoms: " << ends(t.bottoms) << "\n";
}

int cmd_parse(const std::string& pd_text, const std::string& knot, bool as_json) {
    PlanarDiagram pd = diagram_from(pd_text, knot);
    auto tr = pd.is_closed() ? trace_components(pd) : ComponentTrace{};
    if (as_json) {
        nlohmann::json doc;
        doc["pd"] = serialize_pd(pd);
        doc["crossings"] = pd.crossing_count();
        doc["closed"] = pd.is_closed();
        doc["boundary"] = pd.boundary_labels();
        if (pd.is_closed()) doc["components"] = tr.count;
        std::cout << doc.dump(1) << "\n";
        return 0;
    }
    std::cout << serialize_pd(pd) << "\n";
    std::cout << "crossings: " << pd.crossing_count() << "\n";
    if (pd.is_closed())
        std::cout << "closed, components: " << tr.count << "\n";
    else {
        std::cout << "open ends:";
        for (Edge e : pd.boundary_labels()) std::cout << " " << e;
        std::cout << "\n";
    }
    return 0;
}

int cmd_invariants(const std::string& pd_text, const std::string& knot,
                   const std::string& which, bool as_json) {
    PlanarDiagram pd = diagram_from(pd_text, knot);
    nlohmann::json doc;
    auto emit = [&](const std::string& key, const std::string& text,
                    const nlohmann::json& value) {
        if (as_json)
            doc[key] = value;
        else if (which == "all")
            std::cout << key << ": " << text << "\n";
        else
            std::cout << text << "\n";
    };
    if (which == "jones" || which == "all") {
        auto v = jones(pd);
        emit("jones", v.str(), nlohmann::json::parse(poly_json(v)));
    }
    if (which == "alexander" || which == "all") {
        auto a = alexander(pd);
        emit("alexander", a.str(), nlohmann::json::parse(poly_json(a)));
    }
    if (which == "det" || which == "all")
        emit("determinant", std::to_string(determinant(pd)), determinant(pd));
    if (which == "components" || which == "all")
        emit("components", std::to_string(trace_components(pd).count),
             trace_components(pd).count);
    if (as_json) std::cout << doc.dump(1) << "\n";
    return 0;
}

Tangle tangle_from_options(const std::string& knot, int untangle_n) {
    if (!knot.empty() && untangle_n > 0)
        throw ContractError("give either --knot or --untangle, not both");
    if (untangle_n > 0) return untangle(untangle_n);
    if (!knot.empty()) {
        const auto& rec = record_by_name(knot);
        return cut(rec.diagram(), rec.cut_set());
    }
    throw ContractError("one of --knot or --untangle is required");
}

int cmd_close(const std::string& knot, int untangle_n, const std::string& closure,
              const std::string& extra_stitch, bool as_json) {
    Tangle t = tangle_from_options(knot, untangle_n);
    RoleMap roles = RoleMap::of(t);
    auto apply = [&](const Tangle& in, auto pairs_fn) {
        Tangle next = stitch(in, pairs_fn(in));
        roles = roles.surviving(next);
        return next;
    };
    if (closure == "top")
        t = apply(t, top_closure_pairs);
    else if (closure == "bottom")
        t = apply(t, bottom_closure_pairs);
    else if (closure == "full")
        t = apply(t, full_closure_pairs);
    else if (closure == "both") {
        t = apply(t, top_closure_pairs);
        t = apply(t, bottom_closure_pairs);
    } else {
        throw ContractError("closure must be top|bottom|full|both");
    }
    if (!extra_stitch.empty()) {
        auto colon = extra_stitch.find(':');
        if (colon == std::string::npos)
            throw ContractError("--stitch expects ROLE:ROLE, e.g. t1:t4");
        Edge a = roles.lookup(extra_stitch.substr(0, colon));
        Edge b = roles.lookup(extra_stitch.substr(colon + 1));
        t = stitch(t, {{a, b}});
        roles = roles.surviving(t);
    }
    print_tangle(t, as_json);
    return 0;
}

int cmd_cut(const std::string& knot, bool as_json) {
    const auto& rec = record_by_name(knot);
    Tangle t = cut(rec.diagram(), rec.cut_set());
    print_tangle(t, as_json);
    return 0;
}

int cmd_simplify(const std::string& pd_text, const std::string& knot,
                 bool candidate, std::size_t max_steps, bool as_json) {
    PlanarDiagram pd;
    if (candidate) {
        const auto& rec = record_by_name(knot);
        pd = unlink_candidate(rec.diagram(), rec.cut_set());
    } else {
        pd = diagram_from(pd_text, knot);
    }
    if (max_steps == 0) max_steps = 10 * std::max<std::size_t>(1, pd.crossing_count());
    auto res = simplify_greedy(pd, max_steps);
    if (as_json) {
        nlohmann::json doc;
        doc["pd"] = serialize_pd(res.diagram);
        doc["free_loops"] = res.diagram.free_loops();
        doc["crossings"] = res.diagram.crossing_count();
        doc["complete"] = res.complete;
        doc["moves"] = nlohmann::json::parse(move_log_json(res.log));
        std::cout << doc.dump(1) << "\n";
        return 0;
    }
    std::cout << "pd: " << serialize_pd(res.diagram) << "\n";
    std::cout << "crossings: " << res.diagram.crossing_count()
              << " free_loops: " << res.diagram.free_loops()
              << (res.complete ? "" : " (incomplete: step limit)") << "\n";
    std::cout << "moves: " << move_log_json(res.log) << "\n";
    return 0;
}

int cmd_verify(const std::string& knot, bool all, const std::string& refs_path,
               std::size_t max_steps, const std::string& json_path, bool strict,
               bool as_json) {
    if (!all && knot.empty())
        throw ContractError("verify needs --all or --knot NAME");
    std::vector<TangleRecord> records;
    if (all)
        records = load_builtin();
    else
        records.push_back(record_by_name(knot));
    auto refs = load_references(refs_path.empty() ? default_reference_path() : refs_path);
    VerifyOptions opts;
    opts.max_steps_absolute = max_steps;
    auto report = run_verification(records, refs, opts);

    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw ContractError("cannot write " + json_path);
        out << report_to_json(report) << "\n";
    }
    if (as_json) {
        std::cout << report_to_json(report) << "\n";
    } else {
        for (const auto& row : report.rows) {
            std::cout << row.name << ": knot_check=" << to_string(row.knot_check)
                      << " unlink_check=" << to_string(row.unlink_check);
            if (!row.flags.empty()) {
                std::cout << " flags=";
                for (std::size_t q = 0; q < row.flags.size(); ++q)
                    std::cout << (q ? "," : "") << row.flags[q];
            }
            if (!row.error_message.empty()) std::cout << " error=" << row.error_message;
            std::cout << "\n";
        }
        int matches = 0, certified = 0;
        for (const auto& row : report.rows) {
            matches += (row.knot_check == KnotCheck::match ||
                        row.knot_check == KnotCheck::mirror_match);
            certified += row.unlink_check == UnlinkCheck::certified;
        }
        std::cout << "summary: " << matches << "/" << report.rows.size()
                  << " knot-side matches, " << certified << " certified unlinks\n";
    }
    if (strict && !report.all_ok()) return 3;
    return 0;
}

int cmd_list(bool as_json) {
    if (as_json) {
        nlohmann::json doc;
        doc["records"] = nlohmann::json::array();
        for (const auto& rec : load_builtin())
            doc["records"].push_back({{"name", rec.name},
                                      {"crossings", rec.diagram().crossing_count()},
                                      {"tangle_values",
                                       {rec.values.v1, rec.values.v2, rec.values.v3}}});
        doc["errata"] = nlohmann::json::array();
        for (const auto& e : builtin_errata())
            doc["errata"].push_back({{"name", e.name},
                                     {"issue", e.issue},
                                     {"note", e.note},
                                     {"status", e.status}});
        std::cout << doc.dump(1) << "\n";
        return 0;
    }
    for (const auto& rec : load_builtin())
        std::cout << rec.name << "  crossings=" << rec.diagram().crossing_count()
                  << "  values=(" << rec.values.v1 << "," << rec.values.v2 << ","
                  << rec.values.v3 << ")\n";
    std::cout << "errata:\n";
    for (const auto& e : builtin_errata())
        std::cout << "  " << e.name << " [" << e.issue << ", " << e.status
                  << "]: " << e.note << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ribbondb: planar diagrams, tangle closures, and knot invariants "
                 "for the 21-knot ribbon tangle database"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false, strict = false;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_flag("--strict", strict, "nonzero exit on any mismatch/inconsistent row");

    std::string pd_text, knot, which = "all", closure, extra_stitch, refs_path, json_path;
    int untangle_n = 0;
    bool all = false, candidate = false;
    std::size_t max_steps = 0;

    auto* c_parse = app.add_subcommand("parse", "parse and validate a PD code");
    c_parse->add_option("--pd", pd_text, "PD text, e.g. \"X_{1,4,2,5} ...\"");
    c_parse->add_option("--knot", knot, "database knot name, e.g. 6_1");

    auto* c_inv = app.add_subcommand("invariants", "compute knot invariants");
    c_inv->add_option("--pd", pd_text, "PD text");
    c_inv->add_option("--knot", knot, "database knot name");
    c_inv->add_option("--which", which, "jones|alexander|det|components|all");

    auto* c_close = app.add_subcommand("close", "apply tangle closures");
    c_close->add_option("--knot", knot, "cut tangle of a database knot");
    c_close->add_option("--untangle", untangle_n, "n-strand untangle");
    c_close->add_option("--closure", closure, "top|bottom|full|both")->required();
    c_close->add_option("--stitch", extra_stitch, "extra stitch by role, e.g. t1:t4");

    auto* c_cut = app.add_subcommand("cut", "cut a database knot into its tangle");
    c_cut->add_option("--knot", knot, "database knot name")->required();

    auto* c_simp = app.add_subcommand("simplify", "greedy R1/R2 reduction");
    c_simp->add_option("--pd", pd_text, "PD text");
    c_simp->add_option("--knot", knot, "database knot name");
    c_simp->add_flag("--candidate", candidate,
                     "simplify the knot's unlink candidate instead of its diagram");
    c_simp->add_option("--max-steps", max_steps, "move limit (default 10x crossings)");

    auto* c_verify = app.add_subcommand("verify", "run the two theorem checks");
    c_verify->add_flag("--all", all, "verify every database row");
    c_verify->add_option("--knot", knot, "verify one knot");
    c_verify->add_option("--references", refs_path, "reference invariants JSON path");
    c_verify->add_option("--max-steps", max_steps, "greedy move limit");
    c_verify->add_option("--json-out", json_path, "also write the JSON report to PATH");

    auto* c_list = app.add_subcommand("list", "list database records and errata");

    CLI11_PARSE(app, argc, argv);
    try {
        if (c_parse->parsed()) return cmd_parse(pd_text, knot, as_json);
        if (c_inv->parsed()) return cmd_invariants(pd_text, knot, which, as_json);
        if (c_close->parsed())
            return cmd_close(knot, untangle_n, closure, extra_stitch, as_json);
        if (c_cut->parsed()) return cmd_cut(knot, as_json);
        if (c_simp->parsed())
            return cmd_simplify(pd_text, knot, candidate, max_steps, as_json);
        if (c_verify->parsed())
            return cmd_verify(knot, all, refs_path, max_steps, json_path, strict, as_json);
        if (c_list->parsed()) return cmd_list(as_json);
    } catch (const ribbon::Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
