#include "ribbon/pd.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace ribbon {

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings,
                             std::uint32_t free_loops,
                             std::vector<std::pair<Edge, Edge>> arcs)
    : crossings_(std::move(crossings)),
      arcs_(std::move(arcs)),
      free_loops_(free_loops) {}

std::map<Edge, int> PlanarDiagram::occurrences() const {
    std::map<Edge, int> occ;
    for (const auto& c : crossings_)
        for (Edge e : c.e) ++occ[e];
    for (const auto& [a, b] : arcs_) {
        ++occ[a];
        ++occ[b];
    }
    return occ;
}

std::vector<Edge> PlanarDiagram::boundary_labels() const {
    std::vector<Edge> out;
    for (const auto& [e, n] : occurrences())
        if (n == 1) out.push_back(e);
    return out;
}

bool PlanarDiagram::is_closed() const {
    for (const auto& [e, n] : occurrences())
        if (n != 2) return false;
    return true;
}

Edge PlanarDiagram::max_label() const {
    Edge m = 0;
    for (const auto& c : crossings_)
        for (Edge e : c.e) m = std::max(m, e);
    for (const auto& [a, b] : arcs_) m = std::max({m, a, b});
    return m;
}

void PlanarDiagram::validate() const {
    for (const auto& [e, n] : occurrences()) {
        if (e == 0) throw ValidationError("edge label 0 is not allowed");
        if (n > 2)
            throw ValidationError("edge label " + std::to_string(e) +
                                  " occurs " + std::to_string(n) + " times");
    }
}

void PlanarDiagram::rename_label(Edge from, Edge to) {
    for (auto& c : crossings_)
        for (Edge& e : c.e)
            if (e == from) e = to;
    for (auto& [a, b] : arcs_) {
        if (a == from) a = to;
        if (b == from) b = to;
    }
}

PlanarDiagram parse_pd(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<Crossing> xs;
    std::size_t index = 0;
    while (in >> tok) {
        if (tok[0] != 'X')
            throw ParseError(index, "expected token starting with 'X', got '" + tok + "'");
        std::vector<Edge> nums;
        std::uint64_t cur = 0;
        bool in_num = false;
        for (std::size_t p = 1; p < tok.size(); ++p) {
            char ch = tok[p];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                cur = cur * 10 + static_cast<unsigned>(ch - '0');
                if (cur > 1'000'000'000) throw ParseError(index, "edge label out of range");
                in_num = true;
            } else {
                if (std::string("_{}[](),~. ;:").find(ch) == std::string::npos)
                    throw ParseError(index, std::string("unexpected character '") + ch + "'");
                if (in_num) {
                    nums.push_back(static_cast<Edge>(cur));
                    cur = 0;
                    in_num = false;
                }
            }
        }
        if (in_num) nums.push_back(static_cast<Edge>(cur));
        if (nums.size() != 4)
            throw ParseError(index, "expected 4 edge labels, got " +
                                        std::to_string(nums.size()));
        for (Edge e : nums)
            if (e < 1) throw ParseError(index, "edge labels must be >= 1");
        xs.push_back(Crossing{{nums[0], nums[1], nums[2], nums[3]}});
        ++index;
    }
    PlanarDiagram pd(std::move(xs));
    pd.validate();
    return pd;
}

std::string serialize_pd(const PlanarDiagram& pd) {
    std::ostringstream out;
    bool first = true;
    for (const auto& c : pd.crossings()) {
        if (!first) out << ' ';
        first = false;
        out << "X_{" << c.i() << ',' << c.j() << ',' << c.k() << ',' << c.l() << '}';
    }
    return out.str();
}

std::map<Edge, std::vector<Dart>> appearances(const PlanarDiagram& pd) {
    std::map<Edge, std::vector<Dart>> app;
    const auto& xs = pd.crossings();
    for (int ci = 0; ci < static_cast<int>(xs.size()); ++ci)
        for (int s = 0; s < 4; ++s)
            app[xs[ci][s]].push_back(Dart{ci, s});
    return app;
}

namespace {

class UnionFind {
public:
    Edge find(Edge a) {
        auto it = parent_.find(a);
        if (it == parent_.end()) {
            parent_[a] = a;
            return a;
        }
        Edge root = a;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[a] != root) a = std::exchange(parent_[a], root);
        return root;
    }
    void unite(Edge a, Edge b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::map<Edge, Edge> parent_;
};

}  // namespace

ComponentTrace trace_components(const PlanarDiagram& pd) {
    if (!pd.is_closed())
        throw ContractError("trace_components requires a closed diagram");
    UnionFind uf;
    std::vector<Edge> labels;
    for (const auto& c : pd.crossings()) {
        uf.unite(c.i(), c.k());
        uf.unite(c.j(), c.l());
        for (Edge e : c.e) labels.push_back(e);
    }
    for (const auto& [a, b] : pd.arcs()) {
        uf.unite(a, b);
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    ComponentTrace tr;
    std::map<Edge, int> index_of_root;
    for (Edge e : labels) {
        Edge r = uf.find(e);
        auto [it, fresh] = index_of_root.emplace(r, tr.count);
        if (fresh) ++tr.count;
        tr.component_of[e] = it->second;
    }
    tr.count += static_cast<int>(pd.free_loops());
    return tr;
}

Orientation orient(const PlanarDiagram& pd) {
    if (!pd.is_closed())
        throw ContractError("orient requires a closed diagram");
    const auto& xs = pd.crossings();
    const int n = static_cast<int>(xs.size());
    auto app = appearances(pd);

    Orientation o;
    o.dart_in.assign(n, {0, 0, 0, 0});
    o.over_l_to_j.assign(n, false);

    auto status = [&](Dart d) -> std::int8_t& { return o.dart_in[d.crossing][d.slot]; };

    // Propagate from a seeded dart: the two appearances of an edge have
    // opposite in/out status, and so do the two over slots of a crossing.
    auto propagate = [&](Dart seed) {
        std::deque<Dart> queue{seed};
        while (!queue.empty()) {
            Dart d = queue.front();
            queue.pop_front();
            std::int8_t st = status(d);
            auto require = [&](Dart other, std::int8_t want) {
                std::int8_t& cur = status(other);
                if (cur == 0) {
                    cur = want;
                    queue.push_back(other);
                } else if (cur != want) {
                    throw StructuralError(
                        "no orientation satisfies the crossing convention near edge " +
                        std::to_string(xs[other.crossing][other.slot]));
                }
            };
            if (d.slot == 1 || d.slot == 3)
                require(Dart{d.crossing, 4 - d.slot}, static_cast<std::int8_t>(-st));
            for (const Dart& other : app[xs[d.crossing][d.slot]])
                if (!(other == d)) require(other, static_cast<std::int8_t>(-st));
        }
    };

    for (int ci = 0; ci < n; ++ci) {
        if (status(Dart{ci, 0}) == 0) {
            status(Dart{ci, 0}) = +1;
            propagate(Dart{ci, 0});
        }
        if (status(Dart{ci, 2}) == 0) {
            status(Dart{ci, 2}) = -1;
            propagate(Dart{ci, 2});
        } else if (status(Dart{ci, 2}) != -1) {
            throw StructuralError("under strand cannot run i -> k at crossing " +
                                  std::to_string(ci));
        }
        if (status(Dart{ci, 0}) != +1)
            throw StructuralError("under strand cannot run i -> k at crossing " +
                                  std::to_string(ci));
    }
    // Components that never pass under anything are unconstrained; orient
    // their over strands j -> l at the first crossing encountered.
    for (int ci = 0; ci < n; ++ci) {
        if (status(Dart{ci, 1}) == 0) {
            o.fully_pinned = false;
            status(Dart{ci, 1}) = +1;
            propagate(Dart{ci, 1});
        }
    }
    for (int ci = 0; ci < n; ++ci) o.over_l_to_j[ci] = o.dart_in[ci][3] == +1;
    return o;
}

PlanarDiagram canonical_labels(const PlanarDiagram& pd) {
    std::map<Edge, Edge> next;
    auto relabel = [&](Edge e) {
        auto [it, fresh] = next.emplace(e, static_cast<Edge>(next.size() + 1));
        return it->second;
    };
    std::vector<Crossing> xs;
    xs.reserve(pd.crossing_count());
    for (const auto& c : pd.crossings())
        xs.push_back(Crossing{{relabel(c.i()), relabel(c.j()), relabel(c.k()), relabel(c.l())}});
    std::vector<std::pair<Edge, Edge>> arcs;
    for (const auto& [a, b] : pd.arcs()) arcs.emplace_back(relabel(a), relabel(b));
    return PlanarDiagram(std::move(xs), pd.free_loops(), std::move(arcs));
}

bool equal_up_to_relabel(const PlanarDiagram& a, const PlanarDiagram& b) {
    PlanarDiagram ca = canonical_labels(a), cb = canonical_labels(b);
    auto key = [](const PlanarDiagram& pd) {
        auto xs = pd.crossings();
        std::sort(xs.begin(), xs.end());
        auto arcs = pd.arcs();
        std::sort(arcs.begin(), arcs.end());
        return std::tuple(xs, arcs, pd.free_loops());
    };
    return key(ca) == key(cb);
}

}  // namespace ribbon
