#include "ribbon/database.hpp"

#include <fstream>

#include "json.hpp"

namespace ribbon {

// Transcribed verbatim from the source tabulation, suspect rows included;
// the shipped data/ribbon_tangles.json mirrors this list and is checked
// against it in the test suite.
const std::vector<TangleRecord>& load_builtin() {
    static const std::vector<TangleRecord> records = {
    {"6_1",
     "X_{2,8,3,7} X_{3,10,4,11} X_{5,14,6,15} X_{8,20,9,19} X_{11,6,12,7} X_{15,4,16,5} X_{17,16,18,17} X_{18,10,19,9} X_{20,2,21,1} X_{21,12,22,13} X_{22,14,1,13}",
     {9, 13, 17}},
    {"8_8",
     "X_{2,10,3,9} X_{4,24,5,23} X_{6,12,7,11} X_{7,14,8,15} X_{10,4,11,3} X_{13,18,14,19} X_{15,8,16,9} X_{19,12,20,13} X_{21,20,22,21} X_{22,6,23,5} X_{24,2,25,1} X_{25,16,26,17} X_{26,18,1,17}",
     {5, 17, 21}},
    {"8_9",
     "X_{2,13,3,14} X_{4,18,5,17} X_{9,8,10,9} X_{11,30,12,31} X_{16,27,17,28} X_{18,30,19,29} X_{19,23,20,22} X_{20,8,21,7} X_{21,6,22,7} X_{23,11,24,10} X_{25,12,26,13} X_{26,4,27,3} X_{28,5,29,6} X_{31,25,32,24} X_{32,2,33,1} X_{33,14,34,15} X_{34,16,1,15}",
     {9, 15, 21}},
    {"8_20",
     "X_{2,9,3,10} X_{3,14,4,15} X_{7,6,8,7} X_{8,23,9,24} X_{11,19,12,18} X_{13,4,14,5} X_{15,11,16,10} X_{19,13,20,12} X_{21,20,22,21} X_{22,5,23,6} X_{24,2,25,1} X_{25,16,26,17} X_{26,18,1,17}",
     {7, 17, 21}},
    {"9_27",
     "X_{3,27,4,26} X_{6,23,7,24} X_{8,16,9,15} X_{9,2,10,3} X_{11,23,12,22} X_{12,6,13,5} X_{14,19,15,20} X_{18,8,19,7} X_{21,4,22,5} X_{24,14,25,13} X_{25,20,26,21} X_{27,10,28,11} X_{28,2,29,1} X_{29,16,30,17} X_{30,18,1,17}",
     {11, 17, 23}},
    {"9_41",
     "X_{3,18,4,19} X_{4,24,5,23} X_{7,14,8,15} X_{8,27,9,28} X_{11,21,12,20} X_{12,1,13,2} X_{13,27,14,26} X_{15,6,16,7} X_{17,30,18,31} X_{22,10,23,9} X_{24,30,25,29} X_{25,17,26,16} X_{28,5,29,6} X_{31,3,32,2} X_{32,19,33,20} X_{33,10,34,11} X_{34,22,1,21}",
     {13, 21, 27}},
    {"9_46",
     "X_{2,10,3,9} X_{3,14,4,15} X_{5,12,6,13} X_{7,18,8,19} X_{10,24,11,23} X_{13,4,14,5} X_{15,8,16,9} X_{19,6,20,7} X_{21,20,22,21} X_{22,12,23,11} X_{24,2,25,1} X_{25,16,26,17} X_{26,18,1,17}",
     {11, 17, 21}},
    {"10_3",
     "X_{2,13,3,14} X_{3,18,4,19} X_{5,16,6,17} X_{8,10,9,9} X_{10,24,11,23} X_{12,22,13,21} X_{15,6,16,7} X_{17,4,18,5} X_{19,15,20,14} X_{20,1,21,2} X_{22,12,23,11} X_{24,8,1,7}",
     {9, 15, 1}},
    {"10_22",
     "X_{3,17,4,16} X_{8,23,9,24} X_{12,21,13,22} X_{14,8,15,7} X_{17,31,18,30} X_{19,3,20,2} X_{20,9,21,10} X_{22,13,23,14} X_{24,16,25,15} X_{25,6,26,7} X_{27,26,28,27} X_{28,6,29,5} X_{29,4,30,5} X_{31,19,32,18} X_{32,2,33,1} X_{33,10,34,11} X_{34,12,1,11}",
     {5, 11, 27}},
    {"10_35",
     "X_{3,12,4,13} X_{4,32,5,31} X_{6,30,7,29} X_{8,14,9,13} X_{10,20,11,19} X_{11,2,12,3} X_{15,24,16,25} X_{17,22,18,23} X_{18,10,19,9} X_{23,16,24,17} X_{25,14,26,15} X_{27,26,28,27} X_{28,8,29,7} X_{30,6,31,5} X_{32,2,33,1} X_{33,20,34,21} X_{34,22,1,21}",
     {7, 21, 27}},
    {"10_42",
     "X_{3,39,4,38} X_{5,14,6,15} X_{6,35,7,36} X_{9,13,10,12} X_{13,25,14,24} X_{16,21,17,22} X_{20,33,21,34} X_{22,38,23,37} X_{23,4,24,5} X_{25,9,26,8} X_{27,26,28,27} X_{28,12,29,11} X_{29,10,30,11} X_{31,3,32,2} X_{32,17,33,18} X_{34,7,35,8} X_{36,16,37,15} X_{39,31,40,30} X_{40,2,41,1} X_{41,18,42,19} X_{42,20,1,19}",
     {11, 19, 27}},
    {"10_48",
     "X_{4,14,5,13} X_{5,27,6,26} X_{7,29,8,28} X_{9,14,10,15} X_{11,22,12,23} X_{12,4,13,3} X_{17,16,18,17} X_{18,33,19,34} X_{20,35,21,36} X_{21,10,22,11} X_{23,3,24,2} X_{27,7,28,6} X_{29,9,30,8} X_{31,30,32,31} X_{32,15,33,16} X_{34,19,35,20} X_{36,2,37,1} X_{37,24,38,25} X_{38,26,1,25}",
     {17, 25, 31}},
    {"10_75",
     "X_{4,14,5,13} X_{5,27,6,26} X_{7,29,8,28} X_{9,14,10,15} X_{11,22,12,23} X_{12,4,13,3} X_{17,16,18,17} X_{18,33,19,34} X_{20,35,21,36} X_{21,10,22,11} X_{23,3,24,2} X_{27,7,28,6} X_{29,9,30,8} X_{31,30,32,31} X_{32,15,33,16} X_{34,19,35,20} X_{36,2,37,1} X_{37,24,38,25} X_{38,26,1,25}",
     {9, 17, 25}},
    {"10_87",
     "X_{4,22,5,21} X_{6,14,7,13} X_{7,24,8,25} X_{12,36,13,35} X_{15,38,16,39} X_{16,4,17,3} X_{20,33,21,34} X_{23,15,24,14} X_{25,10,26,11} X_{27,26,28,27} X_{28,10,29,9} X_{29,8,30,9} X_{31,3,32,2} X_{32,17,33,18} X_{34,12,35,11} X_{36,5,37,6} X_{37,22,38,23} X_{39,31,40,30} X_{40,2,41,1} X_{41,18,42,19} X_{42,20,1,19}",
     {9, 19, 27}},
    {"10_99",
     "X_{2,29,3,30} X_{4,13,5,14} X_{7,36,8,37} X_{11,21,12,20} X_{12,3,13,4} X_{14,9,15,10} X_{16,26,17,25} X_{19,11,20,10} X_{21,31,22,30} X_{24,18,25,17} X_{27,9,28,8} X_{28,5,29,6} X_{31,19,32,18} X_{32,15,33,16} X_{33,27,34,26} X_{35,34,36,35} X_{37,6,38,7} X_{38,2,39,1} X_{39,22,40,23} X_{40,24,1,23}",
     {7, 23, 35}},
    {"10_123",
     "X_{2,23,3,24} X_{5,14,6,15} X_{7,17,8,16} X_{8,3,9,4} X_{10,34,11,33} X_{15,26,16,27} X_{17,25,18,24} X_{20,14,21,13} X_{22,9,23,10} X_{25,7,26,6} X_{27,4,28,5} X_{28,22,29,21} X_{29,12,30,13} X_{31,30,32,31} X_{32,12,33,11} X_{34,2,35,1} X_{35,18,36,19} X_{36,20,1,19}",
     {11, 19, 31}},
    {"10_129",
     "X_{2,19,3,20} X_{4,12,5,11} X_{6,28,7,27} X_{8,14,9,13} X_{9,16,10,17} X_{12,6,13,5} X_{15,22,16,23} X_{17,10,18,11} X_{18,3,19,4} X_{23,14,24,15} X_{25,24,26,25} X_{26,8,27,7} X_{28,2,29,1} X_{29,20,30,21} X_{30,22,1,21}",
     {7, 21, 25}},
    {"10_137",
     "X_{3,27,4,26} X_{8,13,9,14} X_{12,18,13,17} X_{15,24,16,25} X_{16,7,17,8} X_{18,10,19,9} X_{19,2,20,3} X_{21,5,22,4} X_{22,5,23,6} X_{23,7,24,6} X_{25,14,26,15} X_{27,20,28,21} X_{28,2,29,1} X_{29,10,30,11} X_{30,12,1,11}",
     {5, 11, 23}},
    {"10_140",
     "X_{2,11,3,12} X_{3,18,4,19} X_{5,16,6,17} X_{9,8,10,9} X_{10,27,11,28} X_{13,23,14,22} X_{15,6,16,7} X_{17,4,18,5} X_{19,13,20,12} X_{23,15,24,14} X_{25,24,26,25} X_{26,7,27,8} X_{28,2,29,1} X_{29,20,30,21} X_{30,22,1,21}",
     {9, 21, 25}},
    {"10_153",
     "X_{3,27,4,26} X_{4,22,5,21} X_{7,6,8,7} X_{9,3,10,2} X_{10,15,11,16} X_{13,24,14,25} X_{14,19,15,20} X_{18,11,19,12} X_{22,6,23,5} X_{23,12,24,13} X_{25,20,26,21} X_{27,9,28,8} X_{28,2,29,1} X_{29,16,30,17} X_{30,18,1,17}",
     {7, 17, 23}},
    {"10_155",
     "X_{4,18,5,17} X_{9,8,10,9} X_{11,30,12,31} X_{14,2,15,1} X_{16,27,17,28} X_{18,30,19,29} X_{20,8,21,7} X_{21,6,22,7} X_{22,19,23,20} X_{23,11,24,10} X_{25,12,26,13} X_{26,4,27,3} X_{28,5,29,6} X_{31,25,32,24} X_{32,13,33,14} X_{33,3,34,2} X_{34,16,1,15}",
     {9, 15, 21}},
    };
    return records;
}

const std::vector<Erratum>& builtin_errata() {
    static const std::vector<Erratum> errata = {
    {"10_3", "degenerate-tangle-values",
     "printed tangle values (9,15,1) repeat the implicit (t1,t4) edge 1; the cut set {1,9,15,1} is degenerate",
     "unconfirmed"},
    {"10_48", "duplicate-pd",
     "PD code printed for 10_48 is character-identical to the 10_75 row; invariants identify the shared diagram as 10_48",
     "unconfirmed"},
    {"10_75", "duplicate-pd",
     "PD code printed for 10_75 is character-identical to the 10_48 row; at most one row can be correct",
     "unconfirmed"},
    };
    return errata;
}

namespace {

LaurentPolynomial poly_from_json(const nlohmann::json& rows) {
    std::vector<std::array<std::int64_t, 3>> triples;
    for (const auto& r : rows) {
        if (!r.is_array() || r.size() != 3)
            throw ValidationError("polynomial row is not [num, den, coeff]");
        triples.push_back({r[0].get<std::int64_t>(), r[1].get<std::int64_t>(),
                           r[2].get<std::int64_t>()});
    }
    return LaurentPolynomial::from_triples('t', triples);
}

}  // namespace

std::map<std::string, ReferenceInvariants> load_references(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open reference file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError("reference file is not valid JSON: " +
                              std::string(ex.what()));
    }
    if (doc.value("schema", "") != "ribbondb-references/1")
        throw ValidationError("unexpected reference file schema");

    std::map<std::string, ReferenceInvariants> out;
    std::map<std::string, bool> known;
    for (const auto& rec : load_builtin()) known[rec.name] = false;

    for (const auto& entry : doc.at("entries")) {
        ReferenceInvariants ref;
        ref.name = entry.at("name").get<std::string>();
        auto it = known.find(ref.name);
        if (it == known.end())
            throw ValidationError("unknown knot name in reference file: " + ref.name);
        if (it->second)
            throw ValidationError("duplicate reference entry: " + ref.name);
        it->second = true;
        ref.determinant = entry.at("determinant").get<std::int64_t>();
        ref.alexander = poly_from_json(entry.at("alexander"));
        if (!ref.alexander.is_palindromic())
            throw ValidationError("asymmetric reference Alexander for " + ref.name);
        std::int64_t d = ref.alexander.eval_at_minus_one();
        if ((d < 0 ? -d : d) != ref.determinant)
            throw ValidationError("determinant does not match |alexander(-1)| for " +
                                  ref.name);
        if (entry.contains("jones") && !entry.at("jones").is_null())
            ref.jones = poly_from_json(entry.at("jones")).with_unit_den(2);
        ref.provenance = entry.value("provenance", "");
        out.emplace(ref.name, std::move(ref));
    }
    for (const auto& [name, seen] : known)
        if (!seen) throw ValidationError("reference file is missing knot " + name);
    return out;
}

std::string default_reference_path() {
    return std::string(RIBBON_DATA_DIR) + "/reference_invariants.json";
}

std::string default_database_path() {
    return std::string(RIBBON_DATA_DIR) + "/ribbon_tangles.json";
}

}  // namespace ribbon
