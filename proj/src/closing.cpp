// Dart-level construction of the closing of a blossom tree.

#include "hardmap/closing.hpp"

#include <array>
#include <stdexcept>

namespace hardmap {

PlanarMap close_tree(const BlossomTree& tree) {
  if (tree.total_charge() != 3)
    throw std::invalid_argument("close_tree: total charge must be 3");
  BlossomTree::Matching match = tree.matching();
  auto contour = tree.contour();
  if (match.unmatched.empty() || contour[match.unmatched[0]].node != -1)
    throw std::invalid_argument("close_tree: plant leaf must stay unmatched");

  const int n = tree.size();
  std::vector<int> vertex_id(n, -1);
  int vertices = 0;
  for (int i = 0; i < n; ++i)
    if (tree.is_inner(i)) vertex_id[i] = vertices++;
  const int hub = vertices++;  // the new black vertex

  // slot_dart[i] = darts at inner node i in counterclockwise order: toward
  // the parent (the plant for node 0), then child 0, then child 1.
  std::vector<std::array<int, 3>> slot_dart(n, {-1, -1, -1});
  std::array<int, 3> hub_dart = {-1, -1, -1};
  PlanarMap m;

  // Slot of node c at its parent: 1 or 2 for first or second child.
  auto parent_slot = [&tree](int c) {
    int p = tree.parent(c);
    return tree.node(p).child[0] == c ? 1 : 2;
  };
  // Allocates one edge as a consecutive dart pair.
  auto add_edge = [&m](int va, int vb, bool spec) {
    int d = m.dart_count();
    m.alpha.push_back(d + 1);
    m.alpha.push_back(d);
    m.vertex_of.push_back(va);
    m.vertex_of.push_back(vb);
    m.special.push_back(spec);
    m.special.push_back(spec);
    m.sigma.push_back(-1);
    m.sigma.push_back(-1);
    return d;
  };

  // Inner tree edges, child side first.
  for (int c = 1; c < n; ++c) {
    if (!tree.is_inner(c)) continue;
    int p = tree.parent(c);
    int d = add_edge(vertex_id[c], vertex_id[p], tree.node(c).special);
    slot_dart[c][0] = d;
    slot_dart[p][parent_slot(c)] = d + 1;
  }
  // Fused bud-leaf pairs; the bud end sits at the black parent.
  for (std::size_t pos = 0; pos < contour.size(); ++pos) {
    if (!contour[pos].is_bud || match.partner[pos] < 0) continue;
    int bud = contour[pos].node;
    int leaf = contour[match.partner[pos]].node;
    int bp = tree.parent(bud);
    int lp = tree.parent(leaf);
    int d = add_edge(vertex_id[bp], vertex_id[lp], false);
    slot_dart[bp][parent_slot(bud)] = d;
    slot_dart[lp][parent_slot(leaf)] = d + 1;
  }
  // The three unmatched leaves join the hub. Seen along the counterclockwise
  // contour they appear in one rotational order; around the hub, which sits
  // on the other side, that order reverses.
  for (int k = 0; k < static_cast<int>(match.unmatched.size()); ++k) {
    int node = contour[match.unmatched[k]].node;
    int d;
    if (node < 0) {
      d = add_edge(hub, vertex_id[0], false);
      slot_dart[0][0] = d + 1;
    } else {
      int lp = tree.parent(node);
      d = add_edge(hub, vertex_id[lp], false);
      slot_dart[lp][parent_slot(node)] = d + 1;
    }
    hub_dart[k] = d;
  }
  if (hub_dart[2] < 0) throw std::invalid_argument("close_tree: expected 3 unmatched leaves");

  for (int i = 0; i < n; ++i) {
    if (!tree.is_inner(i)) continue;
    const auto& s = slot_dart[i];
    m.sigma[s[0]] = s[1];
    m.sigma[s[1]] = s[2];
    m.sigma[s[2]] = s[0];
  }
  m.sigma[hub_dart[0]] = hub_dart[2];
  m.sigma[hub_dart[2]] = hub_dart[1];
  m.sigma[hub_dart[1]] = hub_dart[0];
  m.root = hub_dart[0];

  m.black.assign(vertices, 0);
  m.occupied.assign(vertices, 0);
  for (int i = 0; i < n; ++i) {
    if (!tree.is_inner(i)) continue;
    m.black[vertex_id[i]] = tree.node(i).kind == NodeKind::Black;
    m.occupied[vertex_id[i]] = tree.node(i).occupied;
  }
  m.black[hub] = 1;

  m.validate_bicubic();
  return m;
}

}  // namespace hardmap
