#pragma once

#include <utility>
#include <vector>

#include "ribbon/pd.hpp"

namespace ribbon {

/// A pair of open ends to be joined.
using Stitching = std::pair<Edge, Edge>;

/// A planar diagram with ordered boundary ends t_1..t_m along the top and
/// b_1..b_m' along the bottom. Database tangles are braid-like (equal counts,
/// strand k connecting t_k to b_k); closures produce tangles whose remaining
/// ends keep their relative order but may sit on one side only, so the
/// braid-form balance is a checkable property rather than an invariant.
struct Tangle {
    PlanarDiagram interior;
    std::vector<Edge> tops;
    std::vector<Edge> bottoms;

    std::size_t open_end_count() const { return tops.size() + bottoms.size(); }
    bool is_braid_form() const { return tops.size() == bottoms.size(); }
    bool operator==(const Tangle&) const = default;
};

/// Join the listed pairs of open ends. Each stitched pair merges its two
/// edges into one, unified to the smaller label; stitching both ends of one
/// crossingless arc closes it into a free loop. Ends named in `pairs` must be
/// open ends of `t`, pairwise distinct. Surviving tops/bottoms keep order.
Tangle stitch(const Tangle& t, const std::vector<Stitching>& pairs);

/// Stitch pairs prescribed by the closures.
std::vector<Stitching> top_closure_pairs(const Tangle& t);     // (t1,t2),(t3,t4),...
std::vector<Stitching> bottom_closure_pairs(const Tangle& t);  // (b1,b2),(b3,b4),...
std::vector<Stitching> full_closure_pairs(const Tangle& t);    // (b1,b2),(t2,t3),...

/// Top closure: stitches consecutive top pairs, bottoms untouched.
Tangle top_closure(const Tangle& t);
/// Bottom closure: mirror of the top closure on bottom ends.
Tangle bottom_closure(const Tangle& t);
/// Full closure: stitches (b1,b2),(t2,t3),(b3,b4),...,(b_{2n-1},b_{2n});
/// exactly t_1 and t_{2n} stay open.
Tangle full_closure(const Tangle& t);

/// n crossingless vertical strands with fresh labels, t_k joined to b_k.
Tangle untangle(int n);

/// The four cut edges of a database record: edge 1 carries the (t1,t4)
/// connection, and v1,v2,v3 the (b1,b2),(t2,t3),(b3,b4) connections.
struct CutSet {
    Edge t1t4 = 1;
    Edge v1 = 0, v2 = 0, v3 = 0;
};

/// Cut a one-component closed diagram at the four listed edges, producing a
/// 4-strand tangle. Each cut edge splits into two ends; the half the strand
/// flows out of (into the diagram) keeps the original label and takes the
/// strand-entry role (t1, b2, t3, b4 for edge1, v1, v2, v3), the other half
/// gets a fresh label and the strand-exit role (t4, b1, t2, b3). Repeated
/// labels in the cut set throw DegenerateCutError.
Tangle cut(const PlanarDiagram& pd, const CutSet& cuts);

/// stitch(cut(pd, cuts), pairs of top and bottom closure): the closed
/// 2-component diagram whose unlink-ness the ribbon condition asserts.
PlanarDiagram unlink_candidate(const PlanarDiagram& pd, const CutSet& cuts);

}  // namespace ribbon
