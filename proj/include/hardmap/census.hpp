// Exhaustive censuses of rooted trees and maps with hard particles, and the
// per-map equivalence-class sum rule.
//
// All three census modes stream over every occupation of every charge-3
// planted shape with 2n-1 inner vertices and count rooted objects, the z
// power recording the number of particles:
//   signed_admissible_census  admissible trees, weight (-1)^(NHP edges)
//   good_tree_census          trees with no NHP edge, all edges regular,
//                             and a closing free of NHP edges; weight +1
//   map_census                closings of admissible trees, deduplicated by
//                             canonical code, keeping maps without NHP edges
// The three agree coefficient by coefficient.
#pragma once

#include <string>
#include <vector>

#include "hardmap/planar_map.hpp"
#include "hardmap/zpoly.hpp"

namespace hardmap {

struct CensusRecord {
  int vertices = 0;   // the even map size 2n
  ZPoly per_particle; // coefficient of z^j counts objects carrying j particles
};

CensusRecord signed_admissible_census(int two_n, int threads = 1);
CensusRecord good_tree_census(int two_n, int threads = 1);
CensusRecord map_census(int two_n, int threads = 1);

// Every distinct closing of a rooted admissible tree with 2n vertices,
// including those with NHP edges, sorted by canonical code.
std::vector<PlanarMap> admissible_maps(int two_n, int threads = 1);

// One cutting of the map per subset of its NHP edges.
struct ClassOutcome {
  std::vector<int> marking;  // the marked NHP edges, by smaller dart
  bool acceptable = false;
  std::string tree;          // serialized without special marks
  int n_nonregular = 0;      // NHP non-regular edges of the tree
  int r_regular_nhp = 0;     // NHP regular edges of the tree
};

struct ClassVerification {
  RootedMapCode map_code;
  int m = 0;  // NHP edges of the map
  std::vector<ClassOutcome> outcomes;
  long signed_sum = 0;  // over distinct trees with r = 0, sign (-1)^n
  bool ok = false;
  std::vector<std::string> violations;
};

// Cuts the map once per marking and checks the class laws: every marking
// acceptable, identical trees arise from exactly 2^r markings, trees with
// r = 0 are admissible with n equal to the marking size, and the signed sum
// over distinct admissible trees is 1 when m = 0 and 0 otherwise. Markings
// are not swept past 2^max_m; such maps report a violation instead.
ClassVerification verify_class(const PlanarMap& map, int max_m = 12);

}  // namespace hardmap
