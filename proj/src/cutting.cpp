// The contour-walk cutting procedure and the bijection round trips.

#include "hardmap/cutting.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hardmap/closing.hpp"

namespace hardmap {

namespace {

// Working copy of the map during cutting. Darts are appended as stubs are
// created; erased darts keep their slots but are never traversed again.
struct CutWork {
  std::vector<int> alpha;
  std::vector<int> sigma;
  std::vector<int> vertex_of;
  std::vector<char> special;    // per dart
  std::vector<int> orig_edge;   // input-map edge, -1 for stub darts
  std::vector<NodeKind> vkind;  // White/Black for map vertices, Bud/Leaf for stubs
  std::vector<char> occupied;

  int next(int d) const { return sigma[alpha[d]]; }

  int new_terminal(NodeKind kind) {
    vkind.push_back(kind);
    occupied.push_back(0);
    return static_cast<int>(vkind.size()) - 1;
  }

  // Appends a stub dart at a fresh terminal vertex and pairs it with d.
  int attach_stub(int d, NodeKind kind) {
    int v = new_terminal(kind);
    int s = static_cast<int>(alpha.size());
    alpha.push_back(d);
    alpha[d] = s;
    sigma.push_back(s);
    vertex_of.push_back(v);
    special.push_back(0);
    orig_edge.push_back(-1);
    return s;
  }
};

// Serializes the tree hanging at the far end of dart d, arriving there.
std::string subtree_text(const CutWork& w, int arrival) {
  int v = w.vertex_of[arrival];
  std::string out(1, w.vkind[v] == NodeKind::Black ? 'B' : 'W');
  if (w.occupied[v]) out += '*';
  out += '(';
  int c = w.sigma[arrival];
  for (int k = 0; k < 2; ++k, c = w.sigma[c]) {
    if (k) out += ',';
    int t = w.alpha[c];
    NodeKind kind = w.vkind[w.vertex_of[t]];
    if (kind == NodeKind::Bud) {
      out += 'u';
    } else if (kind == NodeKind::Leaf) {
      out += 'l';
    } else {
      if (w.special[c]) out += '!';
      out += subtree_text(w, t);
    }
  }
  out += ')';
  return out;
}

}  // namespace

CutResult cut_map(const PlanarMap& map, const std::vector<int>& special_edges,
                  std::ostream* trace) {
  map.validate_bicubic();

  CutWork w;
  w.alpha = map.alpha;
  w.sigma = map.sigma;
  w.vertex_of = map.vertex_of;
  w.special.assign(map.dart_count(), 0);
  w.orig_edge.resize(map.dart_count());
  for (int d = 0; d < map.dart_count(); ++d) w.orig_edge[d] = map.edge_of(d);
  w.vkind.resize(map.vertex_count());
  for (int v = 0; v < map.vertex_count(); ++v)
    w.vkind[v] = map.black[v] ? NodeKind::Black : NodeKind::White;
  w.occupied.assign(map.occupied.begin(), map.occupied.end());

  for (int e : special_edges) {
    if (e < 0 || e >= map.dart_count() || map.edge_of(e) != e)
      throw std::invalid_argument("cut_map: not an edge representative");
    w.special[e] = 1;
    w.special[map.alpha[e]] = 1;
  }

  // Erase the root vertex: each incident edge becomes a pendant leaf at its
  // white end, the root-dart one being the plant.
  const int root_vertex = map.vertex_of[map.root];
  int plant = -1;
  int d = map.root;
  for (int k = 0; k < 3; ++k, d = map.sigma[d]) {
    if (w.special[d]) throw std::invalid_argument("cut_map: special edge at the root vertex");
    int stub = w.attach_stub(map.alpha[d], NodeKind::Leaf);
    if (k == 0) plant = stub;
  }
  (void)root_vertex;

  CutResult result;
  const int dead = 3;  // the erased root vertex darts

  std::vector<char> on_contour;
  auto rebuild_contour = [&w, &on_contour](int start) {
    on_contour.assign(w.alpha.size(), 0);
    int d2 = start;
    do {
      on_contour[d2] = 1;
      d2 = w.next(d2);
    } while (d2 != start);
  };
  rebuild_contour(plant);

  // Each pass walks the contour as frozen at its start; faces merged during
  // a pass are explored only in the next one, so cuts happen in order of the
  // face distance from the external one and, within a pass, leftmost first.
  long step = 0;
  bool made_cut = true;
  while (made_cut) {
    made_cut = false;
    std::vector<int> pass;
    int d2 = plant;
    do {
      pass.push_back(d2);
      d2 = w.next(d2);
    } while (d2 != plant);
    for (int cur : pass) {
      int v = w.vertex_of[cur];
      bool black_to_white = w.vkind[v] == NodeKind::Black &&
                            w.vkind[w.vertex_of[w.alpha[cur]]] == NodeKind::White;
      bool cuttable = black_to_white && !w.special[cur] && !on_contour[w.alpha[cur]];
      if (trace) {
        const char* decision = cuttable ? "cut"
                               : !black_to_white
                                   ? "wrong-direction-skip"
                                   : (w.special[cur] ? "special-skip" : "bridge-skip");
        *trace << step << " dart " << cur << ' ' << decision << '\n';
      }
      ++step;
      if (cuttable) {
        int opposite = w.alpha[cur];
        result.cut_edge_log.push_back(w.orig_edge[cur]);
        w.attach_stub(cur, NodeKind::Bud);
        w.attach_stub(opposite, NodeKind::Leaf);
        made_cut = true;
        rebuild_contour(plant);
      }
    }
  }

  // Acceptable exactly when the contour swallowed every remaining dart.
  int live = static_cast<int>(w.alpha.size()) - dead;
  int contour_size = 0;
  rebuild_contour(plant);
  for (char c : on_contour) contour_size += c;
  if (contour_size != live) return result;  // not acceptable

  result.acceptable = true;
  result.tree = BlossomTree::parse(subtree_text(w, w.alpha[plant]));
  for (const auto& e : result.tree.edge_charges()) {
    if (!e.regular) ++result.n_nonregular;
    if (e.special && e.regular) ++result.r_regular_special;
  }
  return result;
}

CutResult cut_map(const PlanarMap& map) {
  std::vector<int> marks;
  for (int d = 0; d < map.dart_count(); ++d)
    if (map.special[d] && map.edge_of(d) == d) marks.push_back(d);
  return cut_map(map, marks);
}

bool verify_prop_c1(const CutResult& result) {
  if (!result.acceptable) return false;
  for (const auto& e : result.tree.edge_charges())
    if (!e.special && !e.regular) return false;
  return true;
}

bool roundtrip_tree(const BlossomTree& tree) {
  BlossomTree marked = tree.without_specials();
  for (const auto& e : marked.edge_charges())
    if (!e.regular) marked = marked.with_special(e.child, true);
  CutResult back = cut_map(close_tree(marked));
  return back.acceptable && back.tree == marked;
}

bool roundtrip_map(const PlanarMap& map, const std::vector<int>& special_edges) {
  PlanarMap marked = map;
  marked.special.assign(map.dart_count(), 0);
  for (int e : special_edges) {
    marked.special[e] = 1;
    marked.special[marked.alpha[e]] = 1;
  }
  CutResult cut = cut_map(marked, special_edges);
  if (!cut.acceptable) return false;
  PlanarMap closed = close_tree(cut.tree);
  return canonical_code_with_special(closed) == canonical_code_with_special(marked);
}

}  // namespace hardmap
