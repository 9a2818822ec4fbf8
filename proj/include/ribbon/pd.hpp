#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/errors.hpp"

namespace ribbon {

/// 1-based edge label of a planar diagram.
using Edge = std::uint32_t;

/// One crossing X_{i,j,k,l}: i is the lower incoming edge, j,k,l follow
/// counterclockwise. The under-strand runs i -> k; j and l are the over pair.
struct Crossing {
    std::array<Edge, 4> e{};

    Edge i() const { return e[0]; }
    Edge j() const { return e[1]; }
    Edge k() const { return e[2]; }
    Edge l() const { return e[3]; }
    Edge operator[](int s) const { return e[s]; }
    Edge& operator[](int s) { return e[s]; }
    bool operator==(const Crossing&) const = default;
    auto operator<=>(const Crossing&) const = default;
};

/// A planar diagram: a list of crossings over edge labels, plus crossingless
/// pieces PD notation cannot express -- closed circles (free_loops) and open
/// arcs (label pairs joined without passing a crossing). A label appearing
/// once across crossings and arcs is an open boundary end.
class PlanarDiagram {
public:
    PlanarDiagram() = default;
    explicit PlanarDiagram(std::vector<Crossing> crossings,
                           std::uint32_t free_loops = 0,
                           std::vector<std::pair<Edge, Edge>> arcs = {});

    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<std::pair<Edge, Edge>>& arcs() const { return arcs_; }
    std::uint32_t free_loops() const { return free_loops_; }
    std::size_t crossing_count() const { return crossings_.size(); }

    /// Occurrence count per label over crossing slots and arc endpoints.
    std::map<Edge, int> occurrences() const;
    /// Labels occurring exactly once (open ends). Empty iff closed.
    std::vector<Edge> boundary_labels() const;
    bool is_closed() const;
    Edge max_label() const;  // 0 for a diagram with no labels

    /// Enforce the occurrence invariant: every label appears once or twice.
    /// Throws ValidationError naming the first offending label.
    void validate() const;

    bool operator==(const PlanarDiagram&) const = default;

    // Mutators used by the tangle and simplify operations; external code
    // should treat diagrams as immutable values.
    void set_free_loops(std::uint32_t n) { free_loops_ = n; }
    void add_free_loops(std::uint32_t n) { free_loops_ += n; }
    std::vector<Crossing>& mutable_crossings() { return crossings_; }
    std::vector<std::pair<Edge, Edge>>& mutable_arcs() { return arcs_; }
    void rename_label(Edge from, Edge to);

private:
    std::vector<Crossing> crossings_;
    std::vector<std::pair<Edge, Edge>> arcs_;
    std::uint32_t free_loops_ = 0;
};

/// Parse whitespace-separated X_{i,j,k,l} tokens (X[i,j,k,l] and bare
/// Xi,j,k,l also accepted; any non-digit separators). Crossing order is kept.
PlanarDiagram parse_pd(const std::string& text);

/// Canonical X_{i,j,k,l} tokens, space separated. Crossingless pieces are not
/// representable in PD text and are omitted; parse(serialize(pd)) == pd holds
/// for diagrams without free loops or arcs.
std::string serialize_pd(const PlanarDiagram& pd);

/// A slot of a crossing: (crossing index, slot 0..3).
struct Dart {
    int crossing;
    int slot;
    bool operator==(const Dart&) const = default;
};

/// All appearances of each label, in crossing order.
std::map<Edge, std::vector<Dart>> appearances(const PlanarDiagram& pd);

struct ComponentTrace {
    int count = 0;                       // includes free loops
    std::map<Edge, int> component_of;    // labelled edges -> component index
};

/// Link components of a closed diagram, following strand continuations
/// (i with k, j with l at every crossing, arc pairs, free loops).
ComponentTrace trace_components(const PlanarDiagram& pd);

/// Orientation of a closed diagram under the labeling convention: the under
/// strand enters at i and leaves at k; the over direction at each crossing is
/// inferred by propagating head/tail constraints along edges. `dart_in[c][s]`
/// is +1 where the edge at slot s points into crossing c, -1 where it points
/// out. Components never passing under any strand are unconstrained; they are
/// oriented deterministically and reported via fully_pinned = false.
struct Orientation {
    std::vector<std::array<std::int8_t, 4>> dart_in;
    std::vector<bool> over_l_to_j;  // per crossing: over strand runs l -> j
    bool fully_pinned = true;
};

/// Throws StructuralError when no orientation satisfies the convention.
Orientation orient(const PlanarDiagram& pd);

/// Relabel edges 1..m in order of first appearance; crossing order is kept.
PlanarDiagram canonical_labels(const PlanarDiagram& pd);

/// Equality up to edge renaming and crossing order.
bool equal_up_to_relabel(const PlanarDiagram& a, const PlanarDiagram& b);

}  // namespace ribbon
