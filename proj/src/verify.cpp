#include "ribbon/verify.hpp"

#include <algorithm>

#include "json.hpp"
#include "ribbon/invariants.hpp"
#include "ribbon/simplify.hpp"

namespace ribbon {

const char* to_string(KnotCheck c) {
    switch (c) {
        case KnotCheck::match: return "match";
        case KnotCheck::mirror_match: return "mirror_match";
        case KnotCheck::mismatch: return "mismatch";
        case KnotCheck::error: return "error";
    }
    return "?";
}

const char* to_string(UnlinkCheck c) {
    switch (c) {
        case UnlinkCheck::certified: return "certified";
        case UnlinkCheck::invariant_consistent: return "invariant_consistent";
        case UnlinkCheck::inconsistent: return "inconsistent";
        case UnlinkCheck::degenerate: return "degenerate";
        case UnlinkCheck::error: return "error";
    }
    return "?";
}

namespace {

LaurentPolynomial unlink2_jones() {
    LaurentPolynomial v('t', 2);
    v.add_term(1, -1);
    v.add_term(-1, -1);
    return v;  // -t^{1/2} - t^{-1/2}
}

}  // namespace

RowReport verify_record(const TangleRecord& rec, const ReferenceInvariants& ref,
                        const VerifyOptions& opts) {
    RowReport row;
    row.name = rec.name;
    PlanarDiagram pd;
    try {
        pd = rec.diagram();
    } catch (const Error& ex) {
        row.error_message = ex.what();
        return row;
    }

    // Knot side: invariants of the table diagram against the references,
    // accepting the mirror V(1/t).
    try {
        LaurentPolynomial v = jones(pd);
        LaurentPolynomial al = alexander(pd);
        row.jones_text = v.str();
        row.alexander_text = al.str();
        row.determinant = determinant(pd);
        bool alex_ok = (al == ref.alexander) && (row.determinant == ref.determinant);
        if (ref.jones.has_value()) {
            row.jones_checked = true;
            if (alex_ok && v == *ref.jones)
                row.knot_check = KnotCheck::match;
            else if (alex_ok && v == ref.jones->mirrored())
                row.knot_check = KnotCheck::mirror_match;
            else
                row.knot_check = KnotCheck::mismatch;
        } else {
            row.knot_check = alex_ok ? KnotCheck::match : KnotCheck::mismatch;
        }
    } catch (const Error& ex) {
        row.knot_check = KnotCheck::error;
        row.error_message = ex.what();
    }

    // Unlink side: build the candidate, try to certify by reduction, fall
    // back to the invariant comparison against the 2-component unlink.
    try {
        PlanarDiagram cand = unlink_candidate(pd, rec.cut_set());
        row.candidate_components = trace_components(cand).count;
        std::size_t max_steps =
            opts.max_steps_absolute > 0
                ? opts.max_steps_absolute
                : opts.max_steps_factor * std::max<std::size_t>(1, cand.crossing_count());
        auto reduced = simplify_greedy(cand, max_steps);
        row.move_count = reduced.log.size();
        if (reduced.diagram.crossing_count() == 0 &&
            trace_components(reduced.diagram).count == 2) {
            row.unlink_check = UnlinkCheck::certified;
        } else if (row.candidate_components == 2 && jones(cand) == unlink2_jones()) {
            row.unlink_check = UnlinkCheck::invariant_consistent;
        } else {
            row.unlink_check = UnlinkCheck::inconsistent;
        }
    } catch (const DegenerateCutError&) {
        row.unlink_check = UnlinkCheck::degenerate;
        row.flags.push_back("degenerate-cut-set");
    } catch (const Error& ex) {
        row.unlink_check = UnlinkCheck::error;
        row.error_message = ex.what();
    }
    return row;
}

VerificationReport run_verification(const std::vector<TangleRecord>& records,
                                    const std::map<std::string, ReferenceInvariants>& refs,
                                    const VerifyOptions& opts) {
    VerificationReport report;
    report.rows.resize(records.size());
    const int n = static_cast<int>(records.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
    for (int idx = 0; idx < n; ++idx) {
        const auto& rec = records[static_cast<std::size_t>(idx)];
        auto it = refs.find(rec.name);
        if (it == refs.end()) {
            RowReport row;
            row.name = rec.name;
            row.error_message = "no reference entry";
            report.rows[static_cast<std::size_t>(idx)] = row;
        } else {
            report.rows[static_cast<std::size_t>(idx)] = verify_record(rec, it->second, opts);
        }
    }

    // Data-driven errata detection: identical diagrams under distinct names.
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            try {
                if (equal_up_to_relabel(records[a].diagram(), records[b].diagram())) {
                    report.rows[a].flags.push_back("duplicate-pd-with:" + records[b].name);
                    report.rows[b].flags.push_back("duplicate-pd-with:" + records[a].name);
                }
            } catch (const Error&) {
            }
        }
    }
    return report;
}

bool VerificationReport::all_ok() const {
    for (const auto& row : rows) {
        if (row.knot_check == KnotCheck::mismatch || row.knot_check == KnotCheck::error)
            return false;
        if (row.unlink_check == UnlinkCheck::inconsistent ||
            row.unlink_check == UnlinkCheck::error)
            return false;
    }
    return true;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::json doc;
    doc["schema"] = "ribbondb-report/1";
    doc["entries"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json e;
        e["name"] = row.name;
        e["knot_check"] = to_string(row.knot_check);
        e["unlink_check"] = to_string(row.unlink_check);
        e["details"] = {
            {"jones", row.jones_text},
            {"alexander", row.alexander_text},
            {"determinant", row.determinant},
            {"candidate_components", row.candidate_components},
            {"move_count", row.move_count},
            {"jones_checked", row.jones_checked},
        };
        e["flags"] = row.flags;
        if (!row.error_message.empty()) e["error"] = row.error_message;
        doc["entries"].push_back(e);
    }
    return doc.dump(1);
}

}  // namespace ribbon
