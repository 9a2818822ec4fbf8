#include "ribbon/tangle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ribbon {

namespace {

struct AliasMap {
    std::map<Edge, Edge> alias;
    Edge resolve(Edge e) const {
        auto it = alias.find(e);
        while (it != alias.end()) {
            e = it->second;
            it = alias.find(e);
        }
        return e;
    }
};

}  // namespace

Tangle stitch(const Tangle& t, const std::vector<Stitching>& pairs) {
    auto boundary = t.interior.boundary_labels();
    std::set<Edge> open(boundary.begin(), boundary.end());
    {
        std::set<Edge> used;
        for (const auto& [a, b] : pairs) {
            if (a == b) throw ContractError("stitching an end to itself");
            for (Edge e : {a, b}) {
                if (!open.count(e))
                    throw ContractError("label " + std::to_string(e) +
                                        " is not an open end");
                if (!used.insert(e).second)
                    throw ContractError("label " + std::to_string(e) +
                                        " used in two stitchings");
            }
        }
    }

    Tangle out = t;
    AliasMap names;
    std::set<Edge> consumed;

    // arcs are looked up by either endpoint
    auto find_arc = [&](Edge e) {
        auto& arcs = out.interior.mutable_arcs();
        for (std::size_t idx = 0; idx < arcs.size(); ++idx)
            if (arcs[idx].first == e || arcs[idx].second == e)
                return static_cast<long>(idx);
        return -1L;
    };

    for (const auto& pr : pairs) {
        consumed.insert(pr.first);
        consumed.insert(pr.second);
        Edge a = names.resolve(pr.first);
        Edge b = names.resolve(pr.second);
        long arc_a = find_arc(a);
        long arc_b = find_arc(b);
        auto& arcs = out.interior.mutable_arcs();
        if (arc_a >= 0 && arc_a == arc_b) {
            // both ends of one crossingless strand: it closes into a circle
            arcs.erase(arcs.begin() + arc_a);
            out.interior.add_free_loops(1);
            continue;
        }
        if (arc_a >= 0 && arc_b >= 0) {
            // two arcs concatenate into one; the far ends keep their labels
            auto [a1, a2] = arcs[static_cast<std::size_t>(arc_a)];
            auto [b1, b2] = arcs[static_cast<std::size_t>(arc_b)];
            Edge far_a = (a1 == a) ? a2 : a1;
            Edge far_b = (b1 == b) ? b2 : b1;
            arcs.erase(arcs.begin() + std::max(arc_a, arc_b));
            arcs.erase(arcs.begin() + std::min(arc_a, arc_b));
            arcs.emplace_back(far_a, far_b);
            continue;
        }
        if (arc_a >= 0 || arc_b >= 0) {
            // one arc end joins a crossing-backed edge: the arc dissolves and
            // its far end becomes the free end of the merged edge
            Edge arc_end = arc_a >= 0 ? a : b;
            Edge cross_end = arc_a >= 0 ? b : a;
            long idx = std::max(arc_a, arc_b);
            auto [x1, x2] = arcs[static_cast<std::size_t>(idx)];
            Edge far = (x1 == arc_end) ? x2 : x1;
            arcs.erase(arcs.begin() + idx);
            Edge keep = std::min(arc_end, cross_end);
            if (cross_end != keep) {
                out.interior.rename_label(cross_end, keep);
                names.alias[cross_end] = keep;
            }
            if (far != keep) {
                out.interior.rename_label(far, keep);
                names.alias[far] = keep;
            }
            continue;
        }
        // both crossing-backed: unify to the smaller label throughout
        Edge keep = std::min(a, b);
        Edge drop = std::max(a, b);
        out.interior.rename_label(drop, keep);
        names.alias[drop] = keep;
    }

    auto surviving = [&](const std::vector<Edge>& ends) {
        std::vector<Edge> kept;
        for (Edge e : ends) {
            if (consumed.count(e)) continue;
            kept.push_back(names.resolve(e));
        }
        return kept;
    };
    out.tops = surviving(out.tops);
    out.bottoms = surviving(out.bottoms);
    out.interior.validate();
    return out;
}

std::vector<Stitching> top_closure_pairs(const Tangle& t) {
    if (t.tops.size() % 2 != 0)
        throw ContractError("top closure needs an even number of top ends");
    std::vector<Stitching> pairs;
    for (std::size_t p = 0; p + 1 < t.tops.size(); p += 2)
        pairs.emplace_back(t.tops[p], t.tops[p + 1]);
    return pairs;
}

std::vector<Stitching> bottom_closure_pairs(const Tangle& t) {
    if (t.bottoms.size() % 2 != 0)
        throw ContractError("bottom closure needs an even number of bottom ends");
    std::vector<Stitching> pairs;
    for (std::size_t p = 0; p + 1 < t.bottoms.size(); p += 2)
        pairs.emplace_back(t.bottoms[p], t.bottoms[p + 1]);
    return pairs;
}

std::vector<Stitching> full_closure_pairs(const Tangle& t) {
    const std::size_t n2 = t.tops.size();
    if (n2 != t.bottoms.size() || n2 % 2 != 0 || n2 == 0)
        throw ContractError("full closure needs a braid-form 2n-strand tangle");
    std::vector<Stitching> pairs;
    for (std::size_t p = 0; p + 1 < n2; p += 2)
        pairs.emplace_back(t.bottoms[p], t.bottoms[p + 1]);
    for (std::size_t p = 1; p + 1 < n2; p += 2)
        pairs.emplace_back(t.tops[p], t.tops[p + 1]);
    return pairs;
}

Tangle top_closure(const Tangle& t) { return stitch(t, top_closure_pairs(t)); }

Tangle bottom_closure(const Tangle& t) { return stitch(t, bottom_closure_pairs(t)); }

Tangle full_closure(const Tangle& t) { return stitch(t, full_closure_pairs(t)); }

Tangle untangle(int n) {
    if (n < 1) throw ContractError("untangle needs n >= 1");
    Tangle t;
    auto& arcs = t.interior.mutable_arcs();
    for (int s = 0; s < n; ++s) {
        Edge top = static_cast<Edge>(2 * s + 1), bot = static_cast<Edge>(2 * s + 2);
        arcs.emplace_back(top, bot);
        t.tops.push_back(top);
        t.bottoms.push_back(bot);
    }
    return t;
}

Tangle cut(const PlanarDiagram& pd, const CutSet& cuts) {
    const std::array<Edge, 4> labels{cuts.t1t4, cuts.v1, cuts.v2, cuts.v3};
    {
        std::set<Edge> uniq(labels.begin(), labels.end());
        if (uniq.size() != 4)
            throw DegenerateCutError("cut set repeats an edge label");
    }
    if (!pd.is_closed()) throw ContractError("cut requires a closed diagram");
    if (trace_components(pd).count != 1)
        throw ContractError("cut requires a one-component diagram");
    auto occ = pd.occurrences();
    for (Edge e : labels)
        if (!occ.count(e))
            throw ContractError("cut label " + std::to_string(e) +
                                " is not an edge of the diagram");

    Orientation o = orient(pd);
    auto app = appearances(pd);

    Tangle t;
    t.interior = pd;
    Edge fresh = pd.max_label();

    // ends[e] = (entry end label, exit end label): the strand leaves the cut
    // through the entry end (which keeps label e) and arrives at the exit end.
    std::map<Edge, std::pair<Edge, Edge>> ends;
    for (Edge e : labels) {
        ++fresh;
        Dart tail{-1, -1};
        for (const Dart& d : app[e])
            if (o.dart_in[d.crossing][d.slot] == -1) tail = d;
        if (tail.crossing < 0)
            throw StructuralError("cut edge has no outgoing endpoint");
        t.interior.mutable_crossings()[tail.crossing][tail.slot] = fresh;
        ends[e] = {e, fresh};
    }
    const auto& [t1, t4] = ends[cuts.t1t4];
    const auto& [b2, b1] = ends[cuts.v1];
    const auto& [t3, t2] = ends[cuts.v2];
    const auto& [b4, b3] = ends[cuts.v3];
    t.tops = {t1, t2, t3, t4};
    t.bottoms = {b1, b2, b3, b4};
    t.interior.validate();
    return t;
}

PlanarDiagram unlink_candidate(const PlanarDiagram& pd, const CutSet& cuts) {
    Tangle t = cut(pd, cuts);
    auto pairs = top_closure_pairs(t);
    auto bpairs = bottom_closure_pairs(t);
    pairs.insert(pairs.end(), bpairs.begin(), bpairs.end());
    Tangle closed = stitch(t, pairs);
    if (!closed.interior.is_closed())
        throw StructuralError("unlink candidate failed to close");
    return closed.interior;
}

}  // namespace ribbon
