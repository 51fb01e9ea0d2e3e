#pragma once

#include "scg/graph.hpp"
#include "scg/poset.hpp"

#include <cstdint>

namespace scg {

/// Result of a compatibility-graph construction. With a trivial group no
/// non-identity element exists, so the graph is edgeless; the flag records
/// that degenerate case.
struct CompatGraph {
    Graph graph;
    bool trivial_group_warning = false;
};

/// Graph on the elements of P joining x,y (x != y) when some non-identity g
/// makes x and g.y comparable; comparability here is reflexive, so orbit
/// mates are always joined.
CompatGraph compatibility_graph(const GPoset& p);

/// Same adjacency rule restricted to pairs in different orbits.
CompatGraph strong_compatibility_graph(const GPoset& p);

/// For a free involution poset: true iff no pair x <= y with x <= -y, which
/// is equivalent to the (plain) compatibility graph being triangle-free.
/// Throws invalid_parameter unless |G| = 2 and the action is free.
bool triangle_free_criterion(const GPoset& p);

/// Seeded generator of free G-posets used by the property suites: a random
/// relation on rep_count * |G| elements is closed under the (free) left
/// translation action and transitively closed; samples whose closure gains a
/// cycle are rejected and redrawn from the same stream.
GPoset random_free_gposet(const FiniteGroup& g, int rep_count, double density,
                          std::uint64_t seed);

} // namespace scg
