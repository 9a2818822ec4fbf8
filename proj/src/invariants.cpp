#include "ribbon/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ribbon {

LaurentPolynomial bracket_delta() {
    LaurentPolynomial d('A', 1);
    d.add_term(2, -1);
    d.add_term(-2, -1);
    return d;
}

namespace {

LaurentPolynomial one_A() { return LaurentPolynomial::monomial('A', 1, 1, 0); }

LaurentPolynomial delta_power(unsigned n) {
    LaurentPolynomial p = one_A();
    LaurentPolynomial d = bracket_delta();
    for (unsigned i = 0; i < n; ++i) p = p * d;
    return p;
}

// Greedy contraction order: next crossing is the one sharing the most edges
// with the open boundary of the processed region.
std::vector<int> contraction_order(const std::vector<Crossing>& xs) {
    const int n = static_cast<int>(xs.size());
    std::vector<int> order;
    order.reserve(n);
    std::vector<bool> used(n, false);
    std::map<Edge, int> open;  // open boundary edges of the processed part
    for (int step = 0; step < n; ++step) {
        int best = -1, best_score = -1;
        for (int ci = 0; ci < n; ++ci) {
            if (used[ci]) continue;
            int score = 0;
            for (Edge e : xs[ci].e)
                if (open.count(e)) ++score;
            if (score > best_score) {
                best_score = score;
                best = ci;
            }
        }
        order.push_back(best);
        used[best] = true;
        for (Edge e : xs[best].e) {
            auto it = open.find(e);
            if (it == open.end())
                open[e] = 1;
            else
                open.erase(it);
        }
    }
    return order;
}

// Open-fragment matching: sorted (a,b) pairs, a < b, flattened.
using Matching = std::vector<Edge>;

Matching canonical_matching(const std::map<Edge, Edge>& m) {
    Matching out;
    for (auto [a, b] : m)
        if (a < b) {
            out.push_back(a);
            out.push_back(b);
        }
    return out;
}

}  // namespace

LaurentPolynomial kauffman_bracket(const PlanarDiagram& pd) {
    if (!pd.is_closed())
        throw ContractError("kauffman_bracket requires a closed diagram");
    if (!pd.arcs().empty())
        throw ContractError("closed diagram carries unresolved arcs");
    const auto& xs = pd.crossings();
    if (xs.empty()) {
        if (pd.free_loops() == 0) return one_A();
        return delta_power(pd.free_loops() - 1);
    }
    auto order = contraction_order(xs);

    std::map<Matching, LaurentPolynomial> states;
    states.emplace(Matching{}, one_A());
    const LaurentPolynomial delta = bracket_delta();

    for (int ci : order) {
        const Crossing& c = xs[ci];
        std::map<Matching, LaurentPolynomial> next;
        for (const auto& [mkey, poly] : states) {
            std::map<Edge, Edge> base;
            for (std::size_t p = 0; p + 1 < mkey.size(); p += 2) {
                base[mkey[p]] = mkey[p + 1];
                base[mkey[p + 1]] = mkey[p];
            }
            const std::array<std::array<Edge, 4>, 2> resolutions = {{
                {c.i(), c.j(), c.k(), c.l()},   // A: i~j, k~l
                {c.i(), c.l(), c.j(), c.k()},   // B: i~l, j~k
            }};
            for (int res = 0; res < 2; ++res) {
                auto m = base;
                int loops = 0;
                for (int p = 0; p < 2; ++p) {
                    Edge x = resolutions[res][2 * p], y = resolutions[res][2 * p + 1];
                    if (x == y) {
                        ++loops;
                        continue;
                    }
                    Edge ax = x, by = y;
                    if (auto it = m.find(x); it != m.end()) {
                        ax = it->second;
                        m.erase(ax);
                        m.erase(x);
                    }
                    if (auto it = m.find(y); it != m.end()) {
                        by = it->second;
                        m.erase(by);
                        m.erase(y);
                    }
                    if (ax == by) {
                        ++loops;
                    } else {
                        m[ax] = by;
                        m[by] = ax;
                    }
                }
                LaurentPolynomial contrib = poly.shifted(res == 0 ? 1 : -1);
                for (int q = 0; q < loops; ++q) contrib = contrib * delta;
                Matching key = canonical_matching(m);
                auto [it, fresh] = next.emplace(std::move(key), contrib);
                if (!fresh) it->second = it->second + contrib;
            }
        }
        states = std::move(next);
    }
    if (states.size() != 1 || states.begin()->first != Matching{})
        throw StructuralError("contraction left open fragments on a closed diagram");
    // Every state closed at least one loop, so the sum carries one spare
    // factor of delta relative to the bracket normalization <unknot> = 1.
    LaurentPolynomial total = states.begin()->second;
    return exact_div(total, delta) * delta_power(pd.free_loops());
}

LaurentPolynomial bracket_state_sum(const PlanarDiagram& pd) {
    if (!pd.is_closed())
        throw ContractError("bracket_state_sum requires a closed diagram");
    if (!pd.arcs().empty())
        throw ContractError("closed diagram carries unresolved arcs");
    const auto& xs = pd.crossings();
    const int n = static_cast<int>(xs.size());
    if (n == 0) {
        if (pd.free_loops() == 0) return one_A();
        return delta_power(pd.free_loops() - 1);
    }
    if (n > 25) throw ContractError("state sum limited to 25 crossings");
    const int maxl = static_cast<int>(pd.max_label());
    const std::uint64_t total_states = 1ull << n;

    // histogram[a_count][loops] over all states; exact assembly afterwards
    std::vector<std::vector<std::int64_t>> hist(
        static_cast<std::size_t>(n) + 1,
        std::vector<std::int64_t>(static_cast<std::size_t>(n) + 2, 0));

#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<std::vector<std::int64_t>> local(
            static_cast<std::size_t>(n) + 1,
            std::vector<std::int64_t>(static_cast<std::size_t>(n) + 2, 0));
        std::vector<int> parent(static_cast<std::size_t>(maxl) + 1);
        auto find = [&](int a) {
            while (parent[static_cast<std::size_t>(a)] != a) {
                parent[static_cast<std::size_t>(a)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
                a = parent[static_cast<std::size_t>(a)];
            }
            return a;
        };
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (std::int64_t state = 0; state < static_cast<std::int64_t>(total_states);
             ++state) {
            for (int e = 0; e <= maxl; ++e) parent[static_cast<std::size_t>(e)] = e;
            int a_count = 0;
            for (int ci = 0; ci < n; ++ci) {
                const Crossing& c = xs[ci];
                Edge p1a, p1b, p2a, p2b;
                if ((state >> ci) & 1) {
                    p1a = c.i(); p1b = c.l(); p2a = c.j(); p2b = c.k();
                } else {
                    ++a_count;
                    p1a = c.i(); p1b = c.j(); p2a = c.k(); p2b = c.l();
                }
                int r1 = find(static_cast<int>(p1a)), r2 = find(static_cast<int>(p1b));
                if (r1 != r2) parent[static_cast<std::size_t>(std::max(r1, r2))] = std::min(r1, r2);
                r1 = find(static_cast<int>(p2a)); r2 = find(static_cast<int>(p2b));
                if (r1 != r2) parent[static_cast<std::size_t>(std::max(r1, r2))] = std::min(r1, r2);
            }
            int loops = 0;
            for (int e = 1; e <= maxl; ++e)
                if (parent[static_cast<std::size_t>(e)] == e) ++loops;
            // absent labels root themselves and are subtracted after the loop
            ++local[static_cast<std::size_t>(a_count)][static_cast<std::size_t>(loops)];
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            for (std::size_t a = 0; a < hist.size(); ++a)
                for (std::size_t l = 0; l < hist[a].size(); ++l)
                    hist[a][l] = checked_add(hist[a][l], local[a][l]);
        }
    }

    // count of labels that never appear (they were counted as singleton roots)
    std::vector<bool> present(static_cast<std::size_t>(maxl) + 1, false);
    for (const auto& c : xs)
        for (Edge e : c.e) present[e] = true;
    int absent = 0;
    for (int e = 1; e <= maxl; ++e)
        if (!present[static_cast<std::size_t>(e)]) ++absent;

    LaurentPolynomial out('A', 1);
    for (std::size_t a = 0; a < hist.size(); ++a)
        for (std::size_t l = 0; l < hist[a].size(); ++l) {
            if (hist[a][l] == 0) continue;
            int loops = static_cast<int>(l) - absent;
            if (loops < 1) throw StructuralError("state with no loops on a closed diagram");
            int exp = 2 * static_cast<int>(a) - n;
            auto term = LaurentPolynomial::monomial('A', 1, hist[a][l], exp) *
                        delta_power(static_cast<unsigned>(loops - 1 + static_cast<int>(pd.free_loops())));
            out = out + term;
        }
    return out;
}

int writhe(const PlanarDiagram& pd) {
    if (pd.crossing_count() == 0) return 0;
    Orientation o = orient(pd);
    int w = 0;
    for (bool ltj : o.over_l_to_j) w += ltj ? 1 : -1;
    return w;
}

LaurentPolynomial jones(const PlanarDiagram& pd) {
    if (pd.crossing_count() == 0 && pd.free_loops() == 0)
        return LaurentPolynomial::monomial('t', 2, 1, 0);
    LaurentPolynomial br = kauffman_bracket(pd);
    int w = writhe(pd);
    LaurentPolynomial v('t', 2);
    std::int64_t sign = (w % 2 == 0) ? 1 : -1;  // (-A)^{-3w} = (-1)^w A^{-3w}
    for (auto [e, c] : br.terms()) {
        int shifted = e - 3 * w;
        if (shifted % 2 != 0)
            throw StructuralError("bracket exponent off the t^{1/2} grid");
        v.add_term(-shifted / 2, sign * c);  // A = t^{-1/4}
    }
    return v;
}

LaurentPolynomial alexander(const PlanarDiagram& pd) {
    if (!pd.is_closed())
        throw ContractError("alexander requires a closed diagram");
    if (trace_components(pd).count != 1)
        throw ContractError("alexander requires a knot (one component)");
    const auto& xs = pd.crossings();
    const int n = static_cast<int>(xs.size());
    if (n == 0) return LaurentPolynomial::constant('t', 1);

    Orientation o = orient(pd);

    // Over-strand arcs: classes of edges joined through j~l at each crossing.
    std::map<Edge, Edge> parent;
    std::function<Edge(Edge)> find = [&](Edge a) {
        auto it = parent.find(a);
        if (it == parent.end()) {
            parent[a] = a;
            return a;
        }
        Edge r = a;
        while (parent[r] != r) r = parent[r];
        while (parent[a] != r) a = std::exchange(parent[a], r);
        return r;
    };
    auto unite = [&](Edge a, Edge b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (const auto& c : xs) {
        unite(c.j(), c.l());
        find(c.i());
        find(c.k());
    }
    std::map<Edge, int> arc_index;
    for (const auto& [e, _] : parent) {
        Edge r = find(e);
        if (!arc_index.count(r)) {
            int idx = static_cast<int>(arc_index.size());
            arc_index[r] = idx;
        }
    }
    const int arcs = static_cast<int>(arc_index.size());

    // One relation row per crossing. Positive crossing (over l->j):
    // (1-t)*over + t*in - out; negative rows are scaled by t to keep
    // entries polynomial, which only changes the determinant by a unit.
    auto P = [&](std::initializer_list<std::pair<int, std::int64_t>> ts) {
        LaurentPolynomial p('t', 1);
        for (auto [e, c] : ts) p.add_term(e, c);
        return p;
    };
    std::vector<std::vector<LaurentPolynomial>> M(
        static_cast<std::size_t>(n),
        std::vector<LaurentPolynomial>(static_cast<std::size_t>(arcs),
                                       LaurentPolynomial('t', 1)));
    for (int ci = 0; ci < n; ++ci) {
        const Crossing& c = xs[ci];
        int a_ov = arc_index[find(c.j())];
        int a_in = arc_index[find(c.i())];
        int a_out = arc_index[find(c.k())];
        auto& row = M[static_cast<std::size_t>(ci)];
        if (o.over_l_to_j[ci]) {
            row[a_ov] = row[a_ov] + P({{0, 1}, {1, -1}});
            row[a_in] = row[a_in] + P({{1, 1}});
            row[a_out] = row[a_out] + P({{0, -1}});
        } else {
            row[a_ov] = row[a_ov] + P({{1, 1}, {0, -1}});
            row[a_in] = row[a_in] + P({{0, 1}});
            row[a_out] = row[a_out] + P({{1, -1}});
        }
    }

    // Delete one row and one column, then a fraction-free determinant.
    const int m = n - 1;
    std::vector<std::vector<LaurentPolynomial>> B(
        static_cast<std::size_t>(m),
        std::vector<LaurentPolynomial>(static_cast<std::size_t>(m)));
    for (int r = 0; r < m; ++r)
        for (int cidx = 0; cidx < m; ++cidx)
            B[r][cidx] = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(cidx)];

    LaurentPolynomial det = LaurentPolynomial::constant('t', 1);
    LaurentPolynomial prev = LaurentPolynomial::constant('t', 1);
    int sign = 1;
    for (int k = 0; k < m; ++k) {
        int piv = -1;
        std::size_t best_terms = 0;
        int best_deg = 0;
        for (int r = k; r < m; ++r) {
            const auto& cand = B[r][k];
            if (cand.is_zero()) continue;
            std::size_t nt = cand.term_count();
            int dg = cand.max_exp();
            if (piv < 0 || nt < best_terms || (nt == best_terms && dg < best_deg)) {
                piv = r;
                best_terms = nt;
                best_deg = dg;
            }
        }
        if (piv < 0) {
            det = LaurentPolynomial('t', 1);  // zero determinant
            break;
        }
        if (piv != k) {
            std::swap(B[piv], B[k]);
            sign = -sign;
        }
        for (int r = k + 1; r < m; ++r) {
            for (int cidx = k + 1; cidx < m; ++cidx) {
                auto num = B[r][cidx] * B[k][k] - B[r][k] * B[k][cidx];
                B[r][cidx] = num.is_zero() ? num : exact_div(num, prev);
            }
            B[r][k] = LaurentPolynomial('t', 1);
        }
        prev = B[k][k];
        if (k == m - 1) det = B[k][k];
    }
    if (m == 0) det = LaurentPolynomial::constant('t', 1);
    if (det.is_zero())
        throw StructuralError("vanishing Alexander determinant");
    if (sign < 0) det = -det;

    // Normalize by units: center the exponent range, positive leading coeff.
    int lo = det.min_exp(), hi = det.max_exp();
    if ((lo + hi) % 2 != 0)
        throw StructuralError("Alexander polynomial cannot be symmetrized");
    det = det.shifted(-(lo + hi) / 2);
    if (det.leading_coeff() < 0) det = -det;
    return det;
}

std::int64_t determinant(const PlanarDiagram& pd) {
    std::int64_t v = alexander(pd).eval_at_minus_one();
    return v < 0 ? -v : v;
}

}  // namespace ribbon
