#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ribbon/database.hpp"

namespace ribbon {

enum class KnotCheck { match, mirror_match, mismatch, error };
enum class UnlinkCheck { certified, invariant_consistent, inconsistent, degenerate, error };

const char* to_string(KnotCheck c);
const char* to_string(UnlinkCheck c);

/// Per-row result of the two theorem-side checks.
struct RowReport {
    std::string name;
    KnotCheck knot_check = KnotCheck::error;
    UnlinkCheck unlink_check = UnlinkCheck::error;
    std::string jones_text;       // of the table diagram
    std::string alexander_text;   // of the table diagram
    std::int64_t determinant = 0;
    int candidate_components = 0;
    std::size_t move_count = 0;   // greedy moves applied to the candidate
    bool jones_checked = false;   // reference carried a Jones polynomial
    std::vector<std::string> flags;
    std::string error_message;
};

struct VerifyOptions {
    /// max_steps for the greedy reduction = factor * crossing count,
    /// unless max_steps_absolute (> 0) overrides it.
    std::size_t max_steps_factor = 10;
    std::size_t max_steps_absolute = 0;
    bool parallel = true;
};

struct VerificationReport {
    std::vector<RowReport> rows;  // database order
    bool all_ok() const;          // no mismatch/inconsistent/error rows
};

/// Run both checks for one record.
RowReport verify_record(const TangleRecord& rec, const ReferenceInvariants& ref,
                        const VerifyOptions& opts);

/// Verify every record (optionally in parallel; report order is stable) and
/// flag suspect data: duplicated PD codes between distinct rows and
/// degenerate cut sets are detected from the data, not hard-coded.
VerificationReport run_verification(const std::vector<TangleRecord>& records,
                                    const std::map<std::string, ReferenceInvariants>& refs,
                                    const VerifyOptions& opts = {});

/// Schema "ribbondb-report/1".
std::string report_to_json(const VerificationReport& report);

}  // namespace ribbon
