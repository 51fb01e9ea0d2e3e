#include "scg/compat.hpp"

#include "scg/errors.hpp"

#include <random>

namespace scg {

namespace {

CompatGraph build_compat(const GPoset& p, bool strong) {
    const int m = p.size();
    const int k = p.group().order;
    const int e = p.group().identity;
    CompatGraph out{Graph(m), p.group().is_trivial()};
    std::vector<int> orbit;
    if (strong) orbit = orbit_ids(p);
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) {
            if (strong && orbit[x] == orbit[y]) continue;
            for (int g = 0; g < k; ++g) {
                if (g == e) continue;
                if (p.comparable(x, p.act(g, y))) {
                    out.graph.add_edge(x, y);
                    break;
                }
            }
        }
    return out;
}

} // namespace

CompatGraph compatibility_graph(const GPoset& p) { return build_compat(p, false); }

CompatGraph strong_compatibility_graph(const GPoset& p) {
    return build_compat(p, true);
}

bool triangle_free_criterion(const GPoset& p) {
    if (p.group().order != 2)
        throw invalid_parameter("triangle_free_criterion: group must have order 2");
    if (!is_free(p))
        throw invalid_parameter("triangle_free_criterion: action must be free");
    const int m = p.size();
    const int w = p.group().identity == 0 ? 1 : 0; // the involution
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (p.less_eq(x, y) && p.less_eq(x, p.act(w, y))) return false;
    return true;
}

GPoset random_free_gposet(const FiniteGroup& g, int rep_count, double density,
                          std::uint64_t seed) {
    if (rep_count < 1)
        throw invalid_parameter("random_free_gposet: rep_count must be positive");
    if (density < 0.0 || density > 1.0)
        throw invalid_parameter("random_free_gposet: density must be in [0,1]");
    const int k = g.order;
    const int m = rep_count * k;
    auto index = [k](int a, int i) { return i * k + a; };

    std::vector<std::vector<int>> action(k, std::vector<int>(m));
    for (int h = 0; h < k; ++h)
        for (int i = 0; i < rep_count; ++i)
            for (int a = 0; a < k; ++a)
                action[h][index(a, i)] = index(g.mul(h, a), i);

    std::mt19937_64 rng(seed);
    auto draw = [&rng]() {
        return (rng() >> 11) * 0x1.0p-53; // uniform in [0,1)
    };

    // Rejection sampling: orient sampled pairs along a random permutation,
    // close under the action, transitively close; redraw if a cycle appears.
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<int> rank(m);
        for (int i = 0; i < m; ++i) rank[i] = i;
        for (int i = m - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(rank[i], rank[j]);
        }
        std::vector<std::pair<int, int>> pairs;
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                if (x == y || rank[x] >= rank[y]) continue;
                if (draw() >= density) continue;
                for (int h = 0; h < k; ++h)
                    pairs.emplace_back(action[h][x], action[h][y]);
            }
        try {
            return make_gposet(m, pairs, g, action);
        } catch (const validation_error&) {
            continue; // closure created a cycle; redraw
        }
    }
    throw error("random_free_gposet: rejection sampling failed to converge; lower the density");
}

} // namespace scg
