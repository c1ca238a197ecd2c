// Bicolored trivalent plane trees with buds, leaves and hard particles.
//
// A tree is stored planted: the plant is an implicit leaf attached to node 0,
// which is always white. Inner nodes carry exactly two children in
// counterclockwise order after the parent edge; terminals are buds (always on
// black nodes) and leaves (always on white nodes). Occupation marks a hard
// particle on an inner node; the special flag lives on the edge toward the
// parent and is used by the cutting procedure.
//
// Text form (used for golden files and equality):
//   tree  := node                      the plant edge is implicit
//   node  := ('W'|'B') ['*'] '(' child ',' child ')'
//   child := ['!'] node | 'u' | 'l'
// '*' = occupied, '!' = special parent edge, 'u' = bud, 'l' = leaf.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hardmap {

enum class NodeKind : std::uint8_t { White, Black, Bud, Leaf };

class BlossomTree {
 public:
  struct Node {
    NodeKind kind;
    bool occupied = false;
    bool special = false;  // flag on the edge to the parent
    int child[2] = {-1, -1};
    bool operator==(const Node&) const = default;
  };

  BlossomTree() = default;
  explicit BlossomTree(std::vector<Node> nodes);  // validates shape
  static BlossomTree parse(const std::string& text);
  std::string serialize() const;

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int i) const { return nodes_[i]; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int parent(int i) const { return parent_[i]; }
  bool is_inner(int i) const {
    return nodes_[i].kind == NodeKind::White || nodes_[i].kind == NodeKind::Black;
  }

  int inner_count() const;
  int particle_count() const;
  int bud_count() const;
  int leaf_count() const;  // includes the implicit plant leaf

  // Charge of the subtree hanging at each node (leaves +1, buds -1); the
  // implicit plant leaf is not part of any subtree.
  std::vector<int> subtree_charges() const;
  int total_charge() const;  // whole tree including the plant leaf

  // One entry per inner edge, identified by its child endpoint. q_white is the
  // charge of the piece starting at the white endpoint after removing the
  // edge, q_black the complementary one; q_white + q_black = 3 always, and
  // q_white = 2 mod 3. Regular means q_white >= 0 (equivalently q_black <= 1).
  struct EdgeInfo {
    int child;
    int q_white;
    int q_black;
    bool nhp;  // both endpoints occupied
    bool regular;
    bool special;
  };
  std::vector<EdgeInfo> edge_charges() const;

  struct AdmissibilityReport {
    bool structural_ok;           // total charge is 3
    bool admissible;              // structural_ok and no violations
    std::vector<int> hp_nonregular;  // child ids of HP edges failing regularity
    std::vector<int> nhp_regular;    // child ids of NHP edges that are regular
  };
  AdmissibilityReport check_admissible() const;
  int nhp_edge_count() const;

  // Local neighborhood rules that every edge of an admissible tree satisfies:
  // edges at white-empty vertices have type (2:1); NHP edges have type (-1:4)
  // with two charge-2 white-empty parts on the black side and a charge -2
  // bud-pair part plus a charge 1 part on the white side; edges at black-empty
  // vertices have type (2:1) or (5:-2), the latter only with two buds on the
  // black vertex and an occupied white endpoint carrying exactly one NHP edge.
  struct EnvironmentReport {
    bool valid;
    std::vector<std::string> violations;
  };
  EnvironmentReport validate_environments() const;

  // Terminals in counterclockwise contour order; the implicit plant leaf comes
  // first with node = -1.
  struct ContourItem {
    int node;  // -1 for the plant leaf
    bool is_bud;
  };
  std::vector<ContourItem> contour() const;

  // Cyclic matching of buds with leaves (a bud matches the next unmatched leaf
  // counterclockwise). partner[i] is the contour position matched with
  // position i, or -1; unmatched lists the leftover leaf positions in contour
  // order. A tree of total charge 3 has exactly three unmatched leaves.
  struct Matching {
    std::vector<int> partner;
    std::vector<int> unmatched;
  };
  Matching matching() const;        // linear-time stack matcher
  Matching matching_naive() const;  // iterated-pass oracle, same result
  bool plant_unmatched() const;

  BlossomTree with_occupation(std::uint64_t mask) const;  // bit i = i-th inner node
  BlossomTree with_special(int child_node, bool flag) const;
  BlossomTree without_specials() const;

  bool operator==(const BlossomTree&) const;

 private:
  void finish_init();
  std::vector<Node> nodes_;
  std::vector<int> parent_;
};

}  // namespace hardmap
