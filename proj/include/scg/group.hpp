#pragma once

#include <string>
#include <vector>

namespace scg {

/// A finite group presented by its full multiplication table.
/// Element i*j is table[i][j]; identity and inverses are located during
/// validation. Immutable after construction.
struct FiniteGroup {
    int order = 1;
    std::vector<std::vector<int>> table;
    int identity = 0;
    std::vector<int> inverse;
    std::vector<std::string> names; // optional, size == order when present

    int mul(int g, int h) const { return table[g][h]; }
    int inv(int g) const { return inverse[g]; }
    bool is_trivial() const { return order == 1; }

    std::string name_of(int g) const {
        if (!names.empty()) return names[g];
        return std::to_string(g);
    }

    /// Same abstract table (names ignored).
    bool same_table(const FiniteGroup& o) const {
        return order == o.order && table == o.table;
    }
};

/// Z_k with table[i][j] = (i+j) mod k. Throws invalid_parameter for k = 0.
FiniteGroup cyclic_group(int k);

/// Validates every group axiom on the given table, locating identity and
/// inverses. Throws validation_error naming the failed axiom and a witness.
FiniteGroup group_from_table(std::vector<std::vector<int>> table,
                             std::vector<std::string> names = {});

} // namespace scg
