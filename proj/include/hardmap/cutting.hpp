// Cutting a rooted bicubic map back into a blossom tree.
//
// The root vertex is erased and its three edges become leaves, the one on the
// root dart becoming the plant. The walk then follows the external contour
// counterclockwise from the plant; every time an edge is traversed from its
// black endpoint to its white endpoint, is not marked special, and is not a
// bridge of the current graph (both sides already on the contour), it is cut
// into a bud stub on the black side and a leaf stub on the white side, and
// the walk continues along the enlarged contour. The walk stops once a full
// contour pass makes no cut. If faces then remain unmerged the marking is not
// acceptable and no tree is returned.
#pragma once

#include <iosfwd>
#include <vector>

#include "hardmap/blossom_tree.hpp"
#include "hardmap/planar_map.hpp"

namespace hardmap {

struct CutResult {
  bool acceptable = false;
  BlossomTree tree;               // only meaningful when acceptable
  std::vector<int> cut_edge_log;  // input-map edges in cut order, smaller dart
  int n_nonregular = 0;           // non-regular edges of the tree
  int r_regular_special = 0;      // special edges of the tree that are regular
};

// special_edges lists edges of the map (by smaller dart) to protect from
// cutting; flags already present on the map are ignored. Throws
// std::invalid_argument when the map is not bicubic with a black empty root
// vertex, when a listed edge does not exist, or when a special edge touches
// the root vertex. A non-null trace receives one line per visited dart with
// the decision taken.
CutResult cut_map(const PlanarMap& map, const std::vector<int>& special_edges,
                  std::ostream* trace = nullptr);

// Uses the special flags stored on the map itself.
CutResult cut_map(const PlanarMap& map);

// True when every non-special edge of the resulting tree is regular.
bool verify_prop_c1(const CutResult& result);

// Marks the non-regular edges of the tree as special, closes it, cuts the
// closure, and checks that exactly the marked tree comes back.
bool roundtrip_tree(const BlossomTree& tree);

// Cuts the map with the given marking and checks that closing the resulting
// tree restores the map, special flags included.
bool roundtrip_map(const PlanarMap& map, const std::vector<int>& special_edges);

}  // namespace hardmap
