#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/laurent.hpp"
#include "ribbon/pd.hpp"
#include "ribbon/tangle.hpp"

namespace ribbon {

/// The three cut labels of a database row, marking the connections
/// (b1,b2), (t2,t3), (b3,b4); the (t1,t4) connection is always edge 1.
struct TangleValues {
    Edge v1 = 0, v2 = 0, v3 = 0;
    bool operator==(const TangleValues&) const = default;
};

struct TangleRecord {
    std::string name;
    std::string pd_text;
    TangleValues values;

    PlanarDiagram diagram() const { return parse_pd(pd_text); }
    CutSet cut_set() const { return CutSet{1, values.v1, values.v2, values.v3}; }
};

/// The 21 ribbon knots with 10 crossings or fewer, transcribed as printed --
/// including the suspect rows (degenerate 10_3 values, identical 10_48 and
/// 10_75 codes). Detecting those is the verifier's job, so they are shipped
/// uncorrected.
const std::vector<TangleRecord>& load_builtin();

struct Erratum {
    std::string name;
    std::string issue;
    std::string note;
    std::string status;  // "unconfirmed": not checkable against the source
};

/// Machine-readable annotations for the known-suspect rows.
const std::vector<Erratum>& builtin_errata();

/// Independently derived invariants one row is checked against. jones is
/// absent where no independent source existed when the file was frozen.
struct ReferenceInvariants {
    std::string name;
    std::optional<LaurentPolynomial> jones;
    LaurentPolynomial alexander;
    std::int64_t determinant = 0;
    std::string provenance;
};

/// Load and validate a reference file: one entry per database knot, every
/// Alexander symmetric with determinant = |alexander(-1)|. Throws
/// ValidationError on missing knots, unknown names, or inconsistent entries.
std::map<std::string, ReferenceInvariants> load_references(const std::string& path);

/// Path of the reference file shipped with the artifact.
std::string default_reference_path();
/// Path of the shipped database JSON (mirrors load_builtin, reviewable form).
std::string default_database_path();

}  // namespace ribbon
