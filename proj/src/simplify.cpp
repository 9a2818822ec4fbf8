#include "ribbon/simplify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ribbon {

std::vector<std::vector<Dart>> faces(const PlanarDiagram& pd) {
    auto app = appearances(pd);
    const auto& xs = pd.crossings();
    auto twin = [&](Dart d) {
        for (const Dart& other : app[xs[d.crossing][d.slot]])
            if (!(other == d)) return other;
        return d;  // boundary edge: treat as its own twin
    };
    std::vector<std::array<bool, 4>> seen(pd.crossing_count(), {false, false, false, false});
    std::vector<std::vector<Dart>> out;
    for (int ci = 0; ci < static_cast<int>(pd.crossing_count()); ++ci) {
        for (int s = 0; s < 4; ++s) {
            if (seen[ci][s]) continue;
            std::vector<Dart> face;
            Dart cur{ci, s};
            while (!seen[cur.crossing][cur.slot]) {
                seen[cur.crossing][cur.slot] = true;
                face.push_back(cur);
                Dart t = twin(cur);
                cur = Dart{t.crossing, (t.slot + 3) % 4};
            }
            out.push_back(std::move(face));
        }
    }
    return out;
}

std::vector<int> find_r1(const PlanarDiagram& pd) {
    std::vector<int> out;
    const auto& xs = pd.crossings();
    for (int ci = 0; ci < static_cast<int>(xs.size()); ++ci)
        for (int s = 0; s < 4; ++s)
            if (xs[ci][s] == xs[ci][(s + 1) % 4]) {
                out.push_back(ci);
                break;
            }
    return out;
}

std::vector<std::pair<int, int>> find_r2(const PlanarDiagram& pd) {
    const auto& xs = pd.crossings();
    auto app = appearances(pd);
    std::set<std::pair<int, int>> pairs;
    for (const auto& face : faces(pd)) {
        if (face.size() != 2) continue;
        auto [c1, s1] = face[0];
        auto [c2, s2] = face[1];
        if (c1 == c2) continue;
        Edge e = xs[c1][s1], f = xs[c2][s2];
        if (e == f) continue;
        // the connecting strand must be on the same level at both crossings
        int slot_e_at_c2 = -1;
        for (const Dart& d : app[e])
            if (d.crossing == c2) slot_e_at_c2 = d.slot;
        if (slot_e_at_c2 < 0) continue;
        if ((s1 % 2) != (slot_e_at_c2 % 2)) continue;
        pairs.emplace(std::min(c1, c2), std::max(c1, c2));
    }
    return {pairs.begin(), pairs.end()};
}

namespace {

// Join the dangling ends of edges x and y after crossing removal. Equal
// labels mean a strand whose remaining ends are each other: a free circle.
struct Joiner {
    PlanarDiagram& pd;
    std::map<Edge, Edge> alias;
    Edge resolve(Edge e) const {
        auto it = alias.find(e);
        while (it != alias.end()) {
            e = it->second;
            it = alias.find(e);
        }
        return e;
    }
    void join(Edge x, Edge y) {
        x = resolve(x);
        y = resolve(y);
        if (x == y) {
            pd.add_free_loops(1);
            return;
        }
        Edge keep = std::min(x, y), drop = std::max(x, y);
        pd.rename_label(drop, keep);
        alias[drop] = keep;
    }
};

}  // namespace

PlanarDiagram apply_r1(const PlanarDiagram& pd, int crossing) {
    const Crossing& c = pd.crossings().at(static_cast<std::size_t>(crossing));
    int loop_slot = -1;
    for (int s = 0; s < 4; ++s)
        if (c[s] == c[(s + 1) % 4]) loop_slot = s;
    if (loop_slot < 0) throw ContractError("crossing carries no kink");
    Edge a = c[(loop_slot + 2) % 4], b = c[(loop_slot + 3) % 4];
    PlanarDiagram out = pd;
    auto& xs = out.mutable_crossings();
    xs.erase(xs.begin() + crossing);
    Joiner j{out, {}};
    j.join(a, b);
    return out;
}

PlanarDiagram apply_r2(const PlanarDiagram& pd, int c1, int c2) {
    const auto& xs = pd.crossings();
    auto app = appearances(pd);
    // locate the poke bigon between c1 and c2 the way find_r2 does, so the
    // two removed strand segments are the actual face edges
    Edge e = 0, f = 0;
    for (const auto& face : faces(pd)) {
        if (face.size() != 2) continue;
        auto [fc1, fs1] = face[0];
        auto [fc2, fs2] = face[1];
        if (std::minmax(fc1, fc2) != std::minmax(c1, c2) || fc1 == fc2) continue;
        Edge fe = xs[fc1][fs1], ff = xs[fc2][fs2];
        if (fe == ff) continue;
        int slot_e_at_other = -1;
        for (const Dart& d : app[fe])
            if (d.crossing == fc2) slot_e_at_other = d.slot;
        if (slot_e_at_other < 0 || (fs1 % 2) != (slot_e_at_other % 2)) continue;
        e = fe;
        f = ff;
        break;
    }
    if (e == 0) throw ContractError("crossings do not bound a poke bigon");
    auto partner = [&](int cc, Edge e0) {
        const Crossing& c = xs[static_cast<std::size_t>(cc)];
        for (int s = 0; s < 4; ++s)
            if (c[s] == e0) return c[(s + 2) % 4];
        throw ContractError("edge not at crossing");
    };
    std::array<std::pair<Edge, Edge>, 2> joins{{
        {partner(c1, e), partner(c2, e)},
        {partner(c1, f), partner(c2, f)},
    }};
    PlanarDiagram out = pd;
    auto& mx = out.mutable_crossings();
    mx.erase(mx.begin() + std::max(c1, c2));
    mx.erase(mx.begin() + std::min(c1, c2));
    Joiner j{out, {}};
    for (auto [a, b] : joins) j.join(a, b);
    return out;
}

std::string move_log_json(const std::vector<Move>& log) {
    std::ostringstream out;
    out << "[";
    for (std::size_t m = 0; m < log.size(); ++m) {
        if (m) out << ",";
        out << R"({"move":")" << (log[m].kind == Move::Kind::R1 ? "R1" : "R2")
            << R"(","crossings":[)";
        for (std::size_t q = 0; q < log[m].crossings.size(); ++q) {
            if (q) out << ",";
            out << log[m].crossings[q];
        }
        out << "]}";
    }
    out << "]";
    return out.str();
}

SimplifyResult simplify_greedy(const PlanarDiagram& pd, std::size_t max_steps) {
    if (!pd.is_closed())
        throw ContractError("simplify_greedy requires a closed diagram");
    SimplifyResult res{pd, {}, true};
    while (res.log.size() < max_steps) {
        auto r1 = find_r1(res.diagram);
        if (!r1.empty()) {
            res.log.push_back({Move::Kind::R1, {r1.front()}});
            res.diagram = apply_r1(res.diagram, r1.front());
            continue;
        }
        auto r2 = find_r2(res.diagram);
        if (!r2.empty()) {
            auto [a, b] = r2.front();
            res.log.push_back({Move::Kind::R2, {a, b}});
            res.diagram = apply_r2(res.diagram, a, b);
            continue;
        }
        return res;
    }
    res.complete = find_r1(res.diagram).empty() && find_r2(res.diagram).empty();
    return res;
}

std::optional<int> certify_unlink(const PlanarDiagram& pd) {
    auto res = simplify_greedy(pd, 10 * std::max<std::size_t>(1, pd.crossing_count()));
    if (res.diagram.crossing_count() != 0) return std::nullopt;
    return trace_components(res.diagram).count;
}

}  // namespace ribbon
