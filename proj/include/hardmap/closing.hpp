// Closing a blossom tree into a rooted bicubic map.
//
// Buds are matched to leaves by the cyclic stack rule of the tree contour;
// each matched pair is fused into one edge, and the three leaves that stay
// unmatched are joined to a fresh black empty vertex placed in the external
// face. The root dart points from that vertex toward the plant leaf, which
// must be one of the unmatched three. Special flags on tree edges carry over
// to the corresponding map edges; the new edges are never special.
#pragma once

#include "hardmap/blossom_tree.hpp"
#include "hardmap/planar_map.hpp"

namespace hardmap {

// Throws std::invalid_argument when the total charge is not 3 or the plant
// leaf gets matched. The result always passes validate_bicubic().
PlanarMap close_tree(const BlossomTree& tree);

}  // namespace hardmap
