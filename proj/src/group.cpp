#include "scg/group.hpp"

#include "scg/errors.hpp"

#include <sstream>

namespace scg {

FiniteGroup cyclic_group(int k) {
    if (k <= 0) throw invalid_parameter("cyclic_group: order must be positive");
    FiniteGroup g;
    g.order = k;
    g.table.assign(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g.table[i][j] = (i + j) % k;
    g.identity = 0;
    g.inverse.resize(k);
    for (int i = 0; i < k; ++i) g.inverse[i] = (k - i) % k;
    g.names.resize(k);
    for (int i = 0; i < k; ++i) g.names[i] = std::to_string(i);
    return g;
}

FiniteGroup group_from_table(std::vector<std::vector<int>> table,
                             std::vector<std::string> names) {
    const int k = static_cast<int>(table.size());
    if (k == 0) throw validation_error("group table is empty");
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(table[i].size()) != k) {
            std::ostringstream os;
            os << "group table is not square: row " << i << " has "
               << table[i].size() << " entries, expected " << k;
            throw validation_error(os.str());
        }
        for (int j = 0; j < k; ++j) {
            if (table[i][j] < 0 || table[i][j] >= k) {
                std::ostringstream os;
                os << "group table entry out of range at (" << i << "," << j
                   << "): " << table[i][j];
                throw validation_error(os.str());
            }
        }
    }

    // Latin square: rows and columns are permutations.
    for (int i = 0; i < k; ++i) {
        std::vector<bool> seen(k, false);
        for (int j = 0; j < k; ++j) {
            if (seen[table[i][j]]) {
                std::ostringstream os;
                os << "rows are not permutations: row " << i
                   << " repeats element " << table[i][j];
                throw validation_error(os.str());
            }
            seen[table[i][j]] = true;
        }
    }
    for (int j = 0; j < k; ++j) {
        std::vector<bool> seen(k, false);
        for (int i = 0; i < k; ++i) {
            if (seen[table[i][j]]) {
                std::ostringstream os;
                os << "columns are not permutations: column " << j
                   << " repeats element " << table[i][j];
                throw validation_error(os.str());
            }
            seen[table[i][j]] = true;
        }
    }

    // Two-sided identity.
    int identity = -1;
    for (int e = 0; e < k; ++e) {
        bool ok = true;
        for (int x = 0; x < k && ok; ++x)
            ok = table[e][x] == x && table[x][e] == x;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0)
        throw validation_error("no identity: no element acts as two-sided identity");

    // Associativity, exhaustively.
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]]) {
                    std::ostringstream os;
                    os << "not associative: (" << a << "*" << b << ")*" << c
                       << " = " << table[table[a][b]][c] << " but " << a
                       << "*(" << b << "*" << c
                       << ") = " << table[a][table[b][c]];
                    throw validation_error(os.str());
                }

    // Inverses follow from Latin square + identity.
    std::vector<int> inverse(k, -1);
    for (int g = 0; g < k; ++g)
        for (int h = 0; h < k; ++h)
            if (table[g][h] == identity) {
                inverse[g] = h;
                break;
            }
    for (int g = 0; g < k; ++g) {
        if (inverse[g] < 0 || table[inverse[g]][g] != identity) {
            std::ostringstream os;
            os << "element " << g << " has no two-sided inverse";
            throw validation_error(os.str());
        }
    }

    if (!names.empty() && static_cast<int>(names.size()) != k)
        throw validation_error("names list does not match group order");

    FiniteGroup g;
    g.order = k;
    g.table = std::move(table);
    g.identity = identity;
    g.inverse = std::move(inverse);
    g.names = std::move(names);
    return g;
}

} // namespace scg
