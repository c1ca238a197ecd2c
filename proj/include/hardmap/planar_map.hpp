// Dart-based rooted planar maps with vertex colors and hard particles.
//
// Darts are indices 0..D-1. alpha is the fixed-point-free involution pairing
// the two darts of an edge; sigma gives the next dart counterclockwise around
// the origin vertex of a dart. A face is an orbit of sigma^-1 * alpha and lies
// to the left of every dart it contains; the external face is the orbit of the
// root dart. An edge is named by its smaller dart, and per-edge data (the
// special flag) is stored on both darts symmetrically.
//
// Text form (one map per blob, whitespace separated):
//   planarmap v1
//   darts D vertices V root R
//   alpha  D ints
//   sigma  D ints
//   vertex D ints
//   color  V chars ('B' or 'W')
//   occ    V ints (0/1)
//   special D ints (0/1)
#pragma once

#include <string>
#include <vector>

namespace hardmap {

struct PlanarMap {
  std::vector<int> alpha;
  std::vector<int> sigma;
  std::vector<int> vertex_of;
  std::vector<char> black;     // per vertex
  std::vector<char> occupied;  // per vertex
  std::vector<char> special;   // per dart, equal on both darts of an edge
  int root = -1;

  int dart_count() const { return static_cast<int>(alpha.size()); }
  int edge_count() const { return dart_count() / 2; }
  int vertex_count() const { return static_cast<int>(black.size()); }
  int edge_of(int d) const { return d < alpha[d] ? d : alpha[d]; }

  int degree(int v) const;
  bool connected() const;

  // Throws std::invalid_argument on any structural violation: bad involution,
  // bad permutation, vertex labels inconsistent with sigma orbits, asymmetric
  // special flags, bad root, or a disconnected map.
  void validate() const;

  // validate() plus: every vertex trivalent, every edge joins opposite
  // colors, genus 0, and the root vertex black and empty.
  void validate_bicubic() const;

  std::vector<int> sigma_inverse() const;

  // Orbits of the left-face permutation sigma^-1 * alpha. The orbit
  // containing the root dart is the external face.
  std::vector<std::vector<int>> faces() const;
  int genus() const;  // from V - E + F = 2 - 2g; map must be connected

  // Edges whose two endpoints are both occupied, as ascending smaller darts.
  std::vector<int> nhp_edges() const;
  int nhp_edge_count() const { return static_cast<int>(nhp_edges().size()); }
};

// Canonical form of a rooted map: darts are relabeled breadth-first from the
// root dart, exploring sigma before alpha, and the sequence packs the
// relabeled sigma and alpha tables plus per-vertex attributes in discovery
// order. Two rooted maps get equal codes exactly when some dart relabeling
// maps one to the other preserving root, colors and occupation.
struct RootedMapCode {
  std::vector<long> seq;
  bool operator==(const RootedMapCode&) const = default;
  bool operator<(const RootedMapCode& o) const { return seq < o.seq; }
  std::string to_string() const;
};

RootedMapCode canonical_code(const PlanarMap& m);

// Same code extended with per-dart special flags in BFS order, so equality
// additionally requires the special sets to match edge by edge.
RootedMapCode canonical_code_with_special(const PlanarMap& m);

std::string map_to_text(const PlanarMap& m);
PlanarMap map_from_text(const std::string& text);

// Graphviz export for eyeballing small maps; not parsed back.
std::string map_to_dot(const PlanarMap& m);

}  // namespace hardmap
