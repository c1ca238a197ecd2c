#include "hardmap/blossom_tree.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace hardmap {

namespace {
bool kind_inner(NodeKind k) { return k == NodeKind::White || k == NodeKind::Black; }
}  // namespace

BlossomTree::BlossomTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) { finish_init(); }

void BlossomTree::finish_init() {
  if (nodes_.empty()) throw std::invalid_argument("empty tree");
  if (nodes_[0].kind != NodeKind::White)
    throw std::invalid_argument("plant must attach to a white node");
  int n = size();
  parent_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const Node& v = nodes_[i];
    if (kind_inner(v.kind)) {
      for (int s = 0; s < 2; ++s) {
        int c = v.child[s];
        if (c < 0 || c >= n) throw std::invalid_argument("child index out of range");
        if (parent_[c] != -1 || c == 0) throw std::invalid_argument("node with two parents");
        parent_[c] = i;
        NodeKind ck = nodes_[c].kind;
        if (v.kind == NodeKind::White && ck != NodeKind::Leaf && ck != NodeKind::Black)
          throw std::invalid_argument("white node child must be a leaf or black node");
        if (v.kind == NodeKind::Black && ck != NodeKind::Bud && ck != NodeKind::White)
          throw std::invalid_argument("black node child must be a bud or white node");
      }
    } else {
      if (v.child[0] != -1 || v.child[1] != -1)
        throw std::invalid_argument("terminal with children");
      if (v.occupied) throw std::invalid_argument("occupied terminal");
    }
  }
  for (int i = 1; i < n; ++i)
    if (parent_[i] == -1) throw std::invalid_argument("disconnected node");
  if (nodes_[0].special) throw std::invalid_argument("plant edge cannot be special");
  for (int i = 0; i < n; ++i)
    if (!kind_inner(nodes_[i].kind) && nodes_[i].special)
      throw std::invalid_argument("terminal edge cannot be special");
}

BlossomTree BlossomTree::parse(const std::string& text) {
  std::vector<Node> nodes;
  size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("tree parse error at " + std::to_string(pos) + ": " + why);
  };
  auto peek = [&]() -> char { return pos < text.size() ? text[pos] : '\0'; };
  auto expect = [&](char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  // Returns the node index; children are parsed after the node is placed so
  // the vector ends up in preorder.
  std::function<int()> parse_node = [&]() -> int {
    char c = peek();
    if (c == 'u' || c == 'l') {
      ++pos;
      Node t;
      t.kind = (c == 'u') ? NodeKind::Bud : NodeKind::Leaf;
      nodes.push_back(t);
      return static_cast<int>(nodes.size()) - 1;
    }
    if (c != 'W' && c != 'B') fail("expected node");
    ++pos;
    Node v;
    v.kind = (c == 'W') ? NodeKind::White : NodeKind::Black;
    if (peek() == '*') {
      v.occupied = true;
      ++pos;
    }
    int self = static_cast<int>(nodes.size());
    nodes.push_back(v);
    expect('(');
    for (int s = 0; s < 2; ++s) {
      bool special = false;
      if (peek() == '!') {
        special = true;
        ++pos;
      }
      int c_idx = parse_node();
      nodes[c_idx].special = special;
      nodes[self].child[s] = c_idx;
      if (s == 0) expect(',');
    }
    expect(')');
    return self;
  };
  parse_node();
  if (pos != text.size()) fail("trailing characters");
  return BlossomTree(std::move(nodes));
}

std::string BlossomTree::serialize() const {
  std::ostringstream out;
  std::function<void(int)> emit = [&](int i) {
    const Node& v = nodes_[i];
    switch (v.kind) {
      case NodeKind::Bud:
        out << 'u';
        return;
      case NodeKind::Leaf:
        out << 'l';
        return;
      case NodeKind::White:
        out << 'W';
        break;
      case NodeKind::Black:
        out << 'B';
        break;
    }
    if (v.occupied) out << '*';
    out << '(';
    for (int s = 0; s < 2; ++s) {
      if (s) out << ',';
      if (nodes_[v.child[s]].special) out << '!';
      emit(v.child[s]);
    }
    out << ')';
  };
  emit(0);
  return out.str();
}

int BlossomTree::inner_count() const {
  int k = 0;
  for (const Node& v : nodes_) k += kind_inner(v.kind);
  return k;
}

int BlossomTree::particle_count() const {
  int k = 0;
  for (const Node& v : nodes_) k += v.occupied;
  return k;
}

int BlossomTree::bud_count() const {
  int k = 0;
  for (const Node& v : nodes_) k += (v.kind == NodeKind::Bud);
  return k;
}

int BlossomTree::leaf_count() const {
  int k = 1;  // plant
  for (const Node& v : nodes_) k += (v.kind == NodeKind::Leaf);
  return k;
}

std::vector<int> BlossomTree::subtree_charges() const {
  std::vector<int> charge(size(), 0);
  // children always have larger indices is not guaranteed for hand-built
  // vectors, so walk explicitly in post-order
  std::vector<int> stack{0}, order;
  order.reserve(size());
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    order.push_back(i);
    if (is_inner(i)) {
      stack.push_back(nodes_[i].child[0]);
      stack.push_back(nodes_[i].child[1]);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int i = *it;
    switch (nodes_[i].kind) {
      case NodeKind::Bud:
        charge[i] = -1;
        break;
      case NodeKind::Leaf:
        charge[i] = 1;
        break;
      default:
        charge[i] = charge[nodes_[i].child[0]] + charge[nodes_[i].child[1]];
    }
  }
  return charge;
}

int BlossomTree::total_charge() const { return 1 + subtree_charges()[0]; }

std::vector<BlossomTree::EdgeInfo> BlossomTree::edge_charges() const {
  std::vector<int> charge = subtree_charges();
  std::vector<EdgeInfo> edges;
  for (int i = 1; i < size(); ++i) {
    if (!is_inner(i)) continue;
    int p = parent_[i];
    EdgeInfo e;
    e.child = i;
    int s = charge[i];
    e.q_white = (nodes_[i].kind == NodeKind::White) ? s : 3 - s;
    e.q_black = 3 - e.q_white;
    e.nhp = nodes_[i].occupied && nodes_[p].occupied;
    e.regular = e.q_white >= 0;
    e.special = nodes_[i].special;
    edges.push_back(e);
  }
  return edges;
}

BlossomTree::AdmissibilityReport BlossomTree::check_admissible() const {
  AdmissibilityReport r;
  r.structural_ok = (total_charge() == 3);
  for (const EdgeInfo& e : edge_charges()) {
    if (!e.nhp && !e.regular) r.hp_nonregular.push_back(e.child);
    if (e.nhp && e.regular) r.nhp_regular.push_back(e.child);
  }
  r.admissible = r.structural_ok && r.hp_nonregular.empty() && r.nhp_regular.empty();
  return r;
}

int BlossomTree::nhp_edge_count() const {
  int k = 0;
  for (const EdgeInfo& e : edge_charges()) k += e.nhp;
  return k;
}

BlossomTree::EnvironmentReport BlossomTree::validate_environments() const {
  EnvironmentReport rep;
  std::vector<int> charge = subtree_charges();

  // Incidences of an inner vertex: parent edge first, then the two child
  // edges. For each one, the charge of the piece on the far side and the far
  // endpoint (-1 for the plant leaf).
  struct Part {
    int charge;
    int endpoint;
  };
  auto parts_of = [&](int v, int excluded_child) {
    std::vector<Part> parts;
    if (v == 0)
      parts.push_back({1, -1});  // plant leaf
    else
      parts.push_back({3 - charge[v], parent_[v]});
    for (int s = 0; s < 2; ++s) {
      int c = nodes_[v].child[s];
      if (c == excluded_child) continue;
      parts.push_back({charge[c], c});
    }
    return parts;
  };
  auto endpoint_is_leaf = [&](int x) { return x == -1 || nodes_[x].kind == NodeKind::Leaf; };
  auto black_with_two_buds = [&](int x, int via) {
    // x reached from the edge toward 'via'; its other two edges must both end
    // in buds, which forces them to be child edges.
    if (x < 0 || nodes_[x].kind != NodeKind::Black) return false;
    if (parent_[x] != via && x != 0) return false;  // reached upward: parent edge is never a bud
    for (int s = 0; s < 2; ++s)
      if (nodes_[nodes_[x].child[s]].kind != NodeKind::Bud) return false;
    return true;
  };
  auto nhp_degree = [&](int v) {
    int k = 0;
    if (v != 0 && nodes_[v].occupied && nodes_[parent_[v]].occupied) ++k;
    for (int s = 0; s < 2; ++s) {
      int c = nodes_[v].child[s];
      if (is_inner(c) && nodes_[v].occupied && nodes_[c].occupied) ++k;
    }
    return k;
  };
  auto flag = [&](int child, const std::string& why) {
    rep.violations.push_back("edge@" + std::to_string(child) + ": " + why);
  };

  for (const EdgeInfo& e : edge_charges()) {
    int c = e.child, p = parent_[c];
    int w = (nodes_[c].kind == NodeKind::White) ? c : p;
    int b = (w == c) ? p : c;
    bool w_occ = nodes_[w].occupied, b_occ = nodes_[b].occupied;

    if (!w_occ && !(e.q_white == 2))
      flag(c, "white-empty vertex edge not of type (2:1)");

    if (w_occ && b_occ) {
      if (e.q_white != -1) flag(c, "NHP edge not of type (-1:4)");
      // black side: two charge-2 parts starting at white-empty vertices
      for (const Part& part : parts_of(b, (c == b) ? -2 : c)) {
        if (b == c && part.endpoint == p) continue;  // skip the edge itself
        if (part.charge != 2 || part.endpoint < 0 ||
            nodes_[part.endpoint].kind != NodeKind::White || nodes_[part.endpoint].occupied)
          flag(c, "NHP black side part not a charge-2 white-empty piece");
      }
      // white side: one charge -2 part (black-empty with two buds) and one
      // charge +1 part (a leaf, or a black-empty vertex)
      int minus_two = 0, plus_one = 0;
      for (const Part& part : parts_of(w, (c == w) ? -2 : c)) {
        if (w == c && part.endpoint == p) continue;
        if (part.charge == -2 && black_with_two_buds(part.endpoint, w) &&
            !nodes_[part.endpoint].occupied)
          ++minus_two;
        else if (part.charge == 1 &&
                 (endpoint_is_leaf(part.endpoint) ||
                  (nodes_[part.endpoint].kind == NodeKind::Black &&
                   !nodes_[part.endpoint].occupied)))
          ++plus_one;
      }
      if (minus_two != 1 || plus_one != 1)
        flag(c, "NHP white side parts not a (-2 bud-pair, +1) combination");
    }

    if (!b_occ) {
      if (e.q_white != 2 && e.q_white != 5)
        flag(c, "black-empty vertex edge not of type (2:1) or (5:-2)");
      if (e.q_white == 5) {
        if (!black_with_two_buds(b, w)) flag(c, "(5:-2) edge without bud pair on black side");
        if (!w_occ) flag(c, "(5:-2) edge with empty white endpoint");
        else if (nhp_degree(w) != 1) flag(c, "(5:-2) edge whose white endpoint NHP degree is not 1");
      }
    }
  }
  rep.valid = rep.violations.empty();
  return rep;
}

std::vector<BlossomTree::ContourItem> BlossomTree::contour() const {
  std::vector<ContourItem> items;
  items.push_back({-1, false});
  std::function<void(int)> walk = [&](int i) {
    if (!is_inner(i)) {
      items.push_back({i, nodes_[i].kind == NodeKind::Bud});
      return;
    }
    walk(nodes_[i].child[0]);
    walk(nodes_[i].child[1]);
  };
  walk(0);
  return items;
}

BlossomTree::Matching BlossomTree::matching() const {
  std::vector<ContourItem> word = contour();
  int n = static_cast<int>(word.size());
  Matching m;
  m.partner.assign(n, -1);
  std::vector<int> bud_stack, open_leaves;
  for (int i = 0; i < n; ++i) {
    if (word[i].is_bud) {
      bud_stack.push_back(i);
    } else if (!bud_stack.empty()) {
      m.partner[i] = bud_stack.back();
      m.partner[bud_stack.back()] = i;
      bud_stack.pop_back();
    } else {
      open_leaves.push_back(i);
    }
  }
  // Leftover buds wrap around: the latest bud grabs the earliest open leaf.
  size_t k = bud_stack.size();
  if (k > open_leaves.size())
    throw std::domain_error("more buds than leaves on the contour");
  for (size_t j = 0; j < k; ++j) {
    int bud = bud_stack[k - 1 - j], leaf = open_leaves[j];
    m.partner[bud] = leaf;
    m.partner[leaf] = bud;
  }
  for (size_t j = k; j < open_leaves.size(); ++j) m.unmatched.push_back(open_leaves[j]);
  return m;
}

BlossomTree::Matching BlossomTree::matching_naive() const {
  std::vector<ContourItem> word = contour();
  int n = static_cast<int>(word.size());
  Matching m;
  m.partner.assign(n, -1);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < n; ++i) {
      if (!word[i].is_bud || m.partner[i] != -1) continue;
      for (int j = (i + 1) % n; j != i; j = (j + 1) % n) {
        if (m.partner[j] != -1) continue;
        if (!word[j].is_bud) {
          m.partner[i] = j;
          m.partner[j] = i;
          progress = true;
        }
        break;  // nearest unmatched position decides either way
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (!word[i].is_bud && m.partner[i] == -1) m.unmatched.push_back(i);
  return m;
}

bool BlossomTree::plant_unmatched() const { return matching().partner[0] == -1; }

BlossomTree BlossomTree::with_occupation(std::uint64_t mask) const {
  BlossomTree t = *this;
  int inner_idx = 0;
  for (Node& v : t.nodes_) {
    if (kind_inner(v.kind)) {
      v.occupied = (mask >> inner_idx) & 1;
      ++inner_idx;
    }
  }
  return t;
}

BlossomTree BlossomTree::with_special(int child_node, bool flag) const {
  BlossomTree t = *this;
  if (child_node <= 0 || child_node >= size() || !is_inner(child_node))
    throw std::invalid_argument("special flag must sit on an inner edge");
  t.nodes_[child_node].special = flag;
  return t;
}

BlossomTree BlossomTree::without_specials() const {
  BlossomTree t = *this;
  for (Node& v : t.nodes_) v.special = false;
  return t;
}

bool BlossomTree::operator==(const BlossomTree& o) const { return serialize() == o.serialize(); }

}  // namespace hardmap
