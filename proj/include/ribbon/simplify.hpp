#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbon/pd.hpp"

namespace ribbon {

/// Faces of the diagram's rotation system (counterclockwise slot order at
/// every crossing). Each face is the dart cycle obtained by following an
/// edge to its far appearance and turning to the clockwise-next slot.
std::vector<std::vector<Dart>> faces(const PlanarDiagram& pd);

/// Crossings carrying a kink: the same edge fills two cyclically adjacent
/// slots, i.e. the crossing closes a monogon face. Removing the crossing and
/// merging the two remaining edges is a valid R1 move.
std::vector<int> find_r1(const PlanarDiagram& pd);

/// Crossing pairs bounding a bigon whose connecting strand is over (or
/// under) at both ends -- the poke pattern. Deleting both crossings and
/// merging the four outer edges pairwise is a valid R2 move.
std::vector<std::pair<int, int>> find_r2(const PlanarDiagram& pd);

PlanarDiagram apply_r1(const PlanarDiagram& pd, int crossing);
PlanarDiagram apply_r2(const PlanarDiagram& pd, int c1, int c2);

struct Move {
    enum class Kind { R1, R2 } kind;
    std::vector<int> crossings;  // indices valid in the diagram the move was applied to
};

/// Moves serialize as [{"move":"R1","crossings":[i]}, ...].
std::string move_log_json(const std::vector<Move>& log);

struct SimplifyResult {
    PlanarDiagram diagram;
    std::vector<Move> log;
    bool complete = true;  // false when max_steps ran out with moves left
};

/// Greedy reduction: apply the lowest-index available R1, else the lowest
/// R2, until no move remains or max_steps is reached. Deterministic; the
/// crossing count strictly decreases with every move.
SimplifyResult simplify_greedy(const PlanarDiagram& pd, std::size_t max_steps);

/// Certified unlink recognition: the component count when greedy reduction
/// reaches a crossingless diagram, std::nullopt otherwise (greedy R1/R2 is
/// not complete, so nullopt means unknown, not knotted).
std::optional<int> certify_unlink(const PlanarDiagram& pd);

}  // namespace ribbon
