// Serial brute-force Kauffman bracket kept as the test oracle. Deliberately
// written against the state-sum definition alone: every state is enumerated,
// its loops counted with a local union-find, and A^(a-b) * delta^(loops-1)
// accumulated exactly. Nothing here is shared with the contraction path.
#include "ribbon/invariants.hpp"

#include <vector>

namespace ribbon::reference {

LaurentPolynomial bracket_brute_force(const PlanarDiagram& pd) {
    if (!pd.is_closed())
        throw ContractError("bracket_brute_force requires a closed diagram");
    if (!pd.arcs().empty())
        throw ContractError("closed diagram carries unresolved arcs");
    const auto& xs = pd.crossings();
    const int n = static_cast<int>(xs.size());
    const LaurentPolynomial delta = bracket_delta();
    auto delta_pow = [&](int p) {
        LaurentPolynomial r = LaurentPolynomial::monomial('A', 1, 1, 0);
        for (int q = 0; q < p; ++q) r = r * delta;
        return r;
    };
    if (n == 0) {
        if (pd.free_loops() == 0) return LaurentPolynomial::monomial('A', 1, 1, 0);
        return delta_pow(static_cast<int>(pd.free_loops()) - 1);
    }
    if (n > 22) throw ContractError("brute force limited to 22 crossings");

    const int maxl = static_cast<int>(pd.max_label());
    std::vector<LaurentPolynomial> delta_powers;
    for (int p = 0; p <= n + 1 + static_cast<int>(pd.free_loops()); ++p)
        delta_powers.push_back(delta_pow(p));

    LaurentPolynomial total('A', 1);
    std::vector<int> parent(static_cast<std::size_t>(maxl) + 1);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a)
            a = parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        return a;
    };
    auto unite = [&](Edge x, Edge y) {
        int a = find(static_cast<int>(x)), b = find(static_cast<int>(y));
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };

    std::vector<bool> present(static_cast<std::size_t>(maxl) + 1, false);
    for (const auto& c : xs)
        for (Edge e : c.e) present[e] = true;

    for (std::uint64_t state = 0; state < (1ull << n); ++state) {
        for (int e = 0; e <= maxl; ++e) parent[static_cast<std::size_t>(e)] = e;
        int a_count = 0;
        for (int ci = 0; ci < n; ++ci) {
            const Crossing& c = xs[ci];
            if ((state >> ci) & 1) {
                unite(c.i(), c.l());
                unite(c.j(), c.k());
            } else {
                ++a_count;
                unite(c.i(), c.j());
                unite(c.k(), c.l());
            }
        }
        int loops = 0;
        for (int e = 1; e <= maxl; ++e)
            if (present[static_cast<std::size_t>(e)] &&
                find(e) == e)
                ++loops;
        int b_count = n - a_count;
        auto term = LaurentPolynomial::monomial('A', 1, 1, a_count - b_count) *
                    delta_powers[static_cast<std::size_t>(
                        loops - 1 + static_cast<int>(pd.free_loops()))];
        total = total + term;
    }
    return total;
}

}  // namespace ribbon::reference
