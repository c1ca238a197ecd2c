#include "hardmap/tree_gen.hpp"

#include <stdexcept>

namespace hardmap {

namespace {

using Node = BlossomTree::Node;

struct ShapeBuilder {
  std::vector<Node> nodes;
  std::vector<BlossomTree> out;

  // Appends a subtree rooted at a node of the given color with exactly k
  // inner vertices, then calls cont(), then removes it again. Terminal
  // children (k = 0) are a bud under black, a leaf under white.
  void child(NodeKind parent_color, int k, const std::function<void()>& cont) {
    if (k == 0) {
      Node t;
      t.kind = (parent_color == NodeKind::White) ? NodeKind::Leaf : NodeKind::Bud;
      nodes.push_back(t);
      cont();
      nodes.pop_back();
      return;
    }
    NodeKind color =
        (parent_color == NodeKind::White) ? NodeKind::Black : NodeKind::White;
    subtree(color, k, cont);
  }

  void subtree(NodeKind color, int k, const std::function<void()>& cont) {
    int self = static_cast<int>(nodes.size());
    Node v;
    v.kind = color;
    nodes.push_back(v);
    for (int a = 0; a <= k - 1; ++a) {
      nodes[self].child[0] = static_cast<int>(nodes.size());
      child(color, a, [&] {
        nodes[self].child[1] = static_cast<int>(nodes.size());
        child(color, k - 1 - a, cont);
      });
    }
    nodes.pop_back();
  }
};

}  // namespace

std::vector<BlossomTree> blossom_shapes(int n_inner) {
  if (n_inner < 1) throw std::invalid_argument("need at least one inner vertex");
  ShapeBuilder b;
  b.subtree(NodeKind::White, n_inner, [&] {
    BlossomTree t(b.nodes);
    if (t.total_charge() == 3) b.out.push_back(std::move(t));
  });
  return b.out;
}

void generate_blossom_trees(int n_inner, bool with_particles,
                            const std::function<void(const BlossomTree&)>& cb) {
  if (n_inner > 62) throw std::invalid_argument("occupation mask domain exceeded");
  for (const BlossomTree& shape : blossom_shapes(n_inner)) {
    if (!with_particles) {
      cb(shape);
      continue;
    }
    std::uint64_t end = std::uint64_t(1) << n_inner;
    for (std::uint64_t mask = 0; mask < end; ++mask) cb(shape.with_occupation(mask));
  }
}

}  // namespace hardmap
