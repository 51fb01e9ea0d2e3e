#pragma once

#include "scg/bitmatrix.hpp"
#include "scg/group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace scg {

/// One orbit of the group action: representative is the minimum element
/// index, members are sorted ascending.
struct Orbit {
    int representative = 0;
    std::vector<int> members;
};

/// A finite strict partial order together with an order-preserving action of
/// a finite group. The relation is stored transitively closed; the action is
/// a validated homomorphism into the permutations of the ground set.
/// Immutable after construction via make_gposet.
class GPoset {
public:
    int size() const { return size_; }
    const FiniteGroup& group() const { return group_; }

    bool less(int x, int y) const { return less_.get(x, y); }
    bool less_eq(int x, int y) const { return x == y || less_.get(x, y); }
    /// Reflexive comparability: equal elements count as comparable.
    bool comparable(int x, int y) const {
        return x == y || less_.get(x, y) || less_.get(y, x);
    }

    int act(int g, int x) const { return action_[g][x]; }
    const std::vector<std::vector<int>>& action() const { return action_; }
    const BitMatrix& relation() const { return less_; }

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label_of(int x) const {
        return labels_.empty() ? std::to_string(x) : labels_[x];
    }

private:
    friend GPoset make_gposet(int, const std::vector<std::pair<int, int>>&,
                              FiniteGroup, std::vector<std::vector<int>>,
                              std::vector<std::string>);
    int size_ = 0;
    BitMatrix less_;
    FiniteGroup group_;
    std::vector<std::vector<int>> action_; // order x size
    std::vector<std::string> labels_;      // optional display names
};

/// Builds and validates a GPoset. `less_pairs` is any generating set of
/// strict relations; it is transitively closed before validation and the
/// closure must stay irreflexive. The action table must be a group action by
/// order-preserving permutations. Throws validation_error with a witness.
GPoset make_gposet(int size, const std::vector<std::pair<int, int>>& less_pairs,
                   FiniteGroup group, std::vector<std::vector<int>> action,
                   std::vector<std::string> labels = {});

/// True iff no non-identity group element fixes any element.
bool is_free(const GPoset& p);

/// For each element, the cardinality of the longest chain starting at it
/// (the element included).
std::vector<int> upward_chain_heights(const GPoset& p);

/// Longest chain cardinality minus one. Throws invalid_parameter on the
/// empty poset.
int dimension(const GPoset& p);

/// Orbit partition, sorted by representative (minimum member index).
std::vector<Orbit> orbits(const GPoset& p);

/// Orbit id per element (position of its orbit in orbits(p)).
std::vector<int> orbit_ids(const GPoset& p);

enum class LadderOrder {
    join,   // (h,x) < (g,y) whenever x < y; order complex is the n-fold join of G
    chains, // (g,x) < (h,y) iff x < y and g = h; |G| disjoint chains
};

/// The poset G x [n] under h.(g,i) = (hg,i) with one of the two ladder
/// orders. Element (g,i) has index i*|G| + g with i in 0..n-1 (levels are
/// displayed 1-based); this indexing is part of the serialization contract.
GPoset ladder_poset(const FiniteGroup& g, int n, LadderOrder variant);

/// The octahedral-Tucker style domain: (G u {0})^n minus the all-zero tuple,
/// ordered by "every nonzero coordinate is preserved", with the diagonal
/// action. Tuple (x_1..x_n) maps to index sum_i d_i*(|G|+1)^(i-1) - 1 where
/// d_i = 0 for 0 and 1+g for group element g; this indexing is part of the
/// serialization contract. The action is free by construction.
GPoset tucker_domain(const FiniteGroup& g, int n);

} // namespace scg
