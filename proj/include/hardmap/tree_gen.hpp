// Exhaustive enumeration of planted blossom trees.
//
// Shapes are built by brute-force recursion over ordered bicolored trees (any
// bud/leaf placement the coloring allows) and then filtered on total charge 3;
// no counting identity is assumed. Emission order is deterministic: shapes in
// recursive construction order (child sizes ascending, terminal before inner),
// occupation masks ascending, bit i of a mask addressing the i-th inner node
// in preorder.
#pragma once

#include <functional>
#include <vector>

#include "hardmap/blossom_tree.hpp"

namespace hardmap {

// All charge-3 planted shapes with n_inner inner vertices, no particles.
std::vector<BlossomTree> blossom_shapes(int n_inner);

// Every planted tree with every occupation pattern (or only the empty one).
void generate_blossom_trees(int n_inner, bool with_particles,
                            const std::function<void(const BlossomTree&)>& cb);

}  // namespace hardmap
