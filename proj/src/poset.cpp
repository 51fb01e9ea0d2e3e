#include "scg/poset.hpp"

#include "scg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace scg {

GPoset make_gposet(int size, const std::vector<std::pair<int, int>>& less_pairs,
                   FiniteGroup group, std::vector<std::vector<int>> action,
                   std::vector<std::string> labels) {
    if (size < 0) throw invalid_parameter("make_gposet: negative size");
    const int k = group.order;

    BitMatrix rel(size, size);
    for (auto [i, j] : less_pairs) {
        if (i < 0 || i >= size || j < 0 || j >= size) {
            std::ostringstream os;
            os << "relation pair (" << i << "," << j << ") out of range for size "
               << size;
            throw validation_error(os.str());
        }
        rel.set(i, j);
    }

    // Transitive closure (Warshall over bit rows).
    for (int mid = 0; mid < size; ++mid)
        for (int i = 0; i < size; ++i)
            if (rel.get(i, mid)) rel.or_row(i, mid);

    for (int i = 0; i < size; ++i)
        if (rel.get(i, i)) {
            std::ostringstream os;
            os << "relation has a cycle: closure makes element " << i
               << " less than itself";
            throw validation_error(os.str());
        }

    // Action shape and homomorphism.
    if (static_cast<int>(action.size()) != k)
        throw validation_error("action table must have one row per group element");
    for (int g = 0; g < k; ++g) {
        if (static_cast<int>(action[g].size()) != size) {
            std::ostringstream os;
            os << "action row " << g << " has wrong length";
            throw validation_error(os.str());
        }
        std::vector<bool> seen(size, false);
        for (int x = 0; x < size; ++x) {
            int y = action[g][x];
            if (y < 0 || y >= size || seen[y]) {
                std::ostringstream os;
                os << "action of group element " << g
                   << " is not a permutation (at element " << x << ")";
                throw validation_error(os.str());
            }
            seen[y] = true;
        }
    }
    for (int x = 0; x < size; ++x)
        if (action[group.identity][x] != x) {
            std::ostringstream os;
            os << "identity does not act trivially on element " << x;
            throw validation_error(os.str());
        }
    for (int g = 0; g < k; ++g)
        for (int h = 0; h < k; ++h) {
            const int gh = group.mul(g, h);
            for (int x = 0; x < size; ++x)
                if (action[g][action[h][x]] != action[gh][x]) {
                    std::ostringstream os;
                    os << "action is not a homomorphism: g=" << g << " h=" << h
                       << " disagree at element " << x;
                    throw validation_error(os.str());
                }
        }

    // Order preservation on every related pair.
    for (int x = 0; x < size; ++x)
        rel.for_each_in_row(x, [&](int y) {
            for (int g = 0; g < k; ++g)
                if (!rel.get(action[g][x], action[g][y])) {
                    std::ostringstream os;
                    os << "action does not preserve order: " << x << " < " << y
                       << " but not " << action[g][x] << " < " << action[g][y]
                       << " (group element " << g << ")";
                    throw validation_error(os.str());
                }
        });

    if (!labels.empty() && static_cast<int>(labels.size()) != size)
        throw validation_error("labels list does not match poset size");

    GPoset p;
    p.size_ = size;
    p.less_ = std::move(rel);
    p.group_ = std::move(group);
    p.action_ = std::move(action);
    p.labels_ = std::move(labels);
    return p;
}

bool is_free(const GPoset& p) {
    const int k = p.group().order;
    for (int g = 0; g < k; ++g) {
        if (g == p.group().identity) continue;
        for (int x = 0; x < p.size(); ++x)
            if (p.act(g, x) == x) return false;
    }
    return true;
}

std::vector<int> upward_chain_heights(const GPoset& p) {
    const int m = p.size();
    // The relation is transitively closed, so x < y implies succ(y) is a
    // strict subset of succ(x); ascending successor count is a topological
    // order with maximal elements first.
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> succ_count(m);
    for (int x = 0; x < m; ++x) succ_count[x] = p.relation().row_popcount(x);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return succ_count[a] != succ_count[b] ? succ_count[a] < succ_count[b]
                                              : a < b;
    });
    std::vector<int> height(m, 1); // longest chain cardinality starting here
    for (int x : order) {
        int best = 0;
        p.relation().for_each_in_row(x, [&](int y) {
            best = std::max(best, height[y]);
        });
        height[x] = best + 1;
    }
    return height;
}

int dimension(const GPoset& p) {
    if (p.size() == 0) throw invalid_parameter("dimension: empty poset");
    auto h = upward_chain_heights(p);
    return *std::max_element(h.begin(), h.end()) - 1;
}

std::vector<Orbit> orbits(const GPoset& p) {
    const int m = p.size();
    const int k = p.group().order;
    std::vector<bool> used(m, false);
    std::vector<Orbit> out;
    for (int x = 0; x < m; ++x) {
        if (used[x]) continue;
        Orbit o;
        o.representative = x;
        for (int g = 0; g < k; ++g) {
            int y = p.act(g, x);
            if (!used[y]) {
                used[y] = true;
                o.members.push_back(y);
            }
        }
        std::sort(o.members.begin(), o.members.end());
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<int> orbit_ids(const GPoset& p) {
    auto os = orbits(p);
    std::vector<int> id(p.size(), -1);
    for (int i = 0; i < static_cast<int>(os.size()); ++i)
        for (int x : os[i].members) id[x] = i;
    return id;
}

GPoset ladder_poset(const FiniteGroup& g, int n, LadderOrder variant) {
    if (n < 1) throw invalid_parameter("ladder_poset: n must be at least 1");
    const int k = g.order;
    const int m = n * k;
    auto index = [k](int gi, int level) { return level * k + gi; };

    std::vector<std::pair<int, int>> pairs;
    for (int level = 0; level + 1 < n; ++level) {
        if (variant == LadderOrder::join) {
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    pairs.emplace_back(index(a, level), index(b, level + 1));
        } else {
            for (int a = 0; a < k; ++a)
                pairs.emplace_back(index(a, level), index(a, level + 1));
        }
    }

    std::vector<std::vector<int>> action(k, std::vector<int>(m));
    for (int h = 0; h < k; ++h)
        for (int level = 0; level < n; ++level)
            for (int a = 0; a < k; ++a)
                action[h][index(a, level)] = index(g.mul(h, a), level);

    std::vector<std::string> labels(m);
    for (int level = 0; level < n; ++level)
        for (int a = 0; a < k; ++a)
            labels[index(a, level)] =
                "(" + g.name_of(a) + "," + std::to_string(level + 1) + ")";

    return make_gposet(m, pairs, g, std::move(action), std::move(labels));
}

GPoset tucker_domain(const FiniteGroup& g, int n) {
    if (n < 1) throw invalid_parameter("tucker_domain: n must be at least 1");
    const int k = g.order;
    const int base = k + 1;
    long long count = 1;
    for (int i = 0; i < n; ++i) {
        count *= base;
        if (count > 30'000)
            throw invalid_parameter("tucker_domain: instance too large for the dense representation");
    }
    const int m = static_cast<int>(count - 1);

    // Digits of element index+1 in base |G|+1; digit 0 encodes the zero
    // coordinate, digit 1+a encodes group element a.
    auto digits_of = [&](int x) {
        std::vector<int> d(n);
        long long v = x + 1;
        for (int i = 0; i < n; ++i) {
            d[i] = static_cast<int>(v % base);
            v /= base;
        }
        return d;
    };
    auto index_of = [&](const std::vector<int>& d) {
        long long v = 0;
        for (int i = n - 1; i >= 0; --i) v = v * base + d[i];
        return static_cast<int>(v - 1);
    };

    std::vector<std::vector<int>> digits(m);
    for (int x = 0; x < m; ++x) digits[x] = digits_of(x);

    // y > x exactly when y agrees with x on every nonzero digit; generate
    // successors by filling the zero digits with all base^z combinations.
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> zero_pos;
    std::vector<int> work;
    for (int x = 0; x < m; ++x) {
        zero_pos.clear();
        for (int i = 0; i < n; ++i)
            if (digits[x][i] == 0) zero_pos.push_back(i);
        const int z = static_cast<int>(zero_pos.size());
        long long combos = 1;
        for (int i = 0; i < z; ++i) combos *= base;
        work = digits[x];
        for (long long c = 1; c < combos; ++c) { // c = 0 is x itself
            long long v = c;
            for (int i = 0; i < z; ++i) {
                work[zero_pos[i]] = static_cast<int>(v % base);
                v /= base;
            }
            pairs.emplace_back(x, index_of(work));
        }
    }

    std::vector<std::vector<int>> action(k, std::vector<int>(m));
    for (int a = 0; a < k; ++a)
        for (int x = 0; x < m; ++x) {
            std::vector<int> d = digits[x];
            for (int i = 0; i < n; ++i)
                if (d[i] != 0) d[i] = 1 + g.mul(a, d[i] - 1);
            action[a][x] = index_of(d);
        }

    std::vector<std::string> labels(m);
    for (int x = 0; x < m; ++x) {
        std::string s = "(";
        for (int i = 0; i < n; ++i) {
            if (i) s += ",";
            s += digits[x][i] == 0 ? "0" : g.name_of(digits[x][i] - 1);
        }
        labels[x] = s + ")";
    }

    return make_gposet(m, pairs, g, std::move(action), std::move(labels));
}

} // namespace scg
