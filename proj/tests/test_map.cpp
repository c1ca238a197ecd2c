// Planar map structure, closing, face tracing and canonical codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "hardmap/closing.hpp"
#include "hardmap/planar_map.hpp"
#include "hardmap/tree_gen.hpp"

using namespace hardmap;

namespace {

// The two-vertex map with three parallel edges, laid out by hand. Vertex 0 is
// the black root vertex, vertex 1 the white one; darts 2k and 2k+1 make up
// edge k with the even dart on the black side.
PlanarMap theta_by_hand() {
  PlanarMap m;
  m.alpha = {1, 0, 3, 2, 5, 4};
  m.sigma = {4, 3, 0, 5, 2, 1};  // black side runs 0->4->2, white side 1->3->5
  m.vertex_of = {0, 1, 0, 1, 0, 1};
  m.black = {1, 0};
  m.occupied = {0, 0};
  m.special = {0, 0, 0, 0, 0, 0};
  m.root = 0;
  return m;
}

// Relabels darts by the permutation perm (dart d becomes perm[d]) and
// vertices by vperm; an isomorphic presentation of the same rooted map.
PlanarMap relabel(const PlanarMap& m, const std::vector<int>& perm,
                  const std::vector<int>& vperm) {
  PlanarMap out;
  int n = m.dart_count();
  out.alpha.resize(n);
  out.sigma.resize(n);
  out.vertex_of.resize(n);
  out.special.resize(n);
  out.black.resize(m.vertex_count());
  out.occupied.resize(m.vertex_count());
  for (int d = 0; d < n; ++d) {
    out.alpha[perm[d]] = perm[m.alpha[d]];
    out.sigma[perm[d]] = perm[m.sigma[d]];
    out.vertex_of[perm[d]] = vperm[m.vertex_of[d]];
    out.special[perm[d]] = m.special[d];
  }
  for (int v = 0; v < m.vertex_count(); ++v) {
    out.black[vperm[v]] = m.black[v];
    out.occupied[vperm[v]] = m.occupied[v];
  }
  out.root = perm[m.root];
  return out;
}

std::vector<BlossomTree> rooted_admissible(int n_inner, bool particles) {
  std::vector<BlossomTree> out;
  generate_blossom_trees(n_inner, particles, [&out](const BlossomTree& t) {
    if (t.plant_unmatched() && t.check_admissible().admissible) out.push_back(t);
  });
  return out;
}

}  // namespace

TEST_CASE("theta map by hand") {
  PlanarMap m = theta_by_hand();
  m.validate_bicubic();
  CHECK(m.vertex_count() == 2);
  CHECK(m.edge_count() == 3);
  auto fs = m.faces();
  REQUIRE(fs.size() == 3);
  for (const auto& f : fs) CHECK(f.size() == 2);
  CHECK(m.genus() == 0);
  CHECK(m.nhp_edges().empty());
  CHECK(m.degree(0) == 3);
  CHECK(m.degree(1) == 3);
}

TEST_CASE("closing the one-vertex tree gives the theta map") {
  PlanarMap closed = close_tree(BlossomTree::parse("W(l,l)"));
  CHECK(closed.vertex_count() == 2);
  CHECK(closed.edge_count() == 3);
  CHECK(canonical_code(closed) == canonical_code(theta_by_hand()));
}

TEST_CASE("closing rejects bad roots and bad charges") {
  // Charge 0: one bud too many.
  CHECK_THROWS_AS(close_tree(BlossomTree::parse("W(B(u,u),l)")), std::invalid_argument);
  // Charge 3 but the plant leaf gets matched by the wrap-around rule.
  BlossomTree wrapped = BlossomTree::parse("W(l,B(W(l,l),u))");
  REQUIRE(!wrapped.plant_unmatched());
  CHECK_THROWS_AS(close_tree(wrapped), std::invalid_argument);
}

TEST_CASE("canonical code ignores labels and tracks every attribute") {
  PlanarMap theta = theta_by_hand();
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> perm(theta.dart_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> vperm{0, 1};
    if (trial % 2) std::swap(vperm[0], vperm[1]);
    PlanarMap shuffled = relabel(theta, perm, vperm);
    shuffled.validate_bicubic();
    CHECK(canonical_code(shuffled) == canonical_code(theta));
    CHECK(canonical_code_with_special(shuffled) == canonical_code_with_special(theta));
  }

  PlanarMap occupied_white = theta;
  occupied_white.occupied[1] = 1;
  CHECK(canonical_code(occupied_white) != canonical_code(theta));

  PlanarMap swapped_colors = theta;
  swapped_colors.black = {0, 1};
  CHECK(canonical_code(swapped_colors) != canonical_code(theta));

  PlanarMap marked = theta;
  marked.special[2] = marked.special[3] = 1;
  CHECK(canonical_code(marked) == canonical_code(theta));
  CHECK(canonical_code_with_special(marked) != canonical_code_with_special(theta));

  // Rotating the root around the hub of the theta map hits one of its own
  // symmetries, so the code must not change.
  PlanarMap rerooted = theta;
  rerooted.root = theta.sigma[theta.root];
  CHECK(canonical_code(rerooted) == canonical_code(theta));
}

TEST_CASE("rerooting is visible on an asymmetric map") {
  auto trees = rooted_admissible(3, false);
  bool found = false;
  for (const auto& t : trees) {
    PlanarMap m = close_tree(t);
    PlanarMap rerooted = m;
    rerooted.root = m.sigma[m.root];
    if (!(canonical_code(rerooted) == canonical_code(m))) found = true;
  }
  CHECK(found);
}

TEST_CASE("empty-map closure counts by size") {
  // Rooted maps without particles: 1, 3, 12, 56 for 2, 4, 6, 8 vertices, and
  // the closing is injective on rooted trees of this kind.
  const std::map<int, std::size_t> expected{{1, 1}, {3, 3}, {5, 12}, {7, 56}};
  for (auto [n_inner, want] : expected) {
    auto trees = rooted_admissible(n_inner, false);
    std::set<RootedMapCode> codes;
    for (const auto& t : trees) {
      PlanarMap m = close_tree(t);
      CHECK(m.vertex_count() == n_inner + 1);
      CHECK(m.nhp_edges().empty());
      auto fs = m.faces();
      CHECK(static_cast<int>(fs.size()) == m.edge_count() - m.vertex_count() + 2);
      codes.insert(canonical_code(m));
    }
    CHECK(trees.size() == want);
    CHECK(codes.size() == want);
  }
}

TEST_CASE("hard-particle closure counts at four vertices") {
  auto trees = rooted_admissible(3, true);
  std::map<int, std::set<RootedMapCode>> by_particles;
  std::size_t hard = 0;
  for (const auto& t : trees) {
    PlanarMap m = close_tree(t);
    if (!m.nhp_edges().empty()) continue;
    ++hard;
    int particles = 0;
    for (char o : m.occupied) particles += o;
    by_particles[particles].insert(canonical_code(m));
  }
  CHECK(by_particles[0].size() == 3);
  CHECK(by_particles[1].size() == 9);
  CHECK(by_particles[2].size() == 3);
  // No two hard-particle closures coincide.
  CHECK(hard == 15);
}

TEST_CASE("distinct trees can close onto the same map") {
  auto trees = rooted_admissible(5, true);
  std::set<RootedMapCode> all;
  bool with_pair = false;
  for (const auto& t : trees) {
    if (t.nhp_edge_count() > 0) with_pair = true;
    all.insert(canonical_code(close_tree(t)));
  }
  REQUIRE(with_pair);
  CHECK(all.size() < trees.size());
}

TEST_CASE("a clean tree can close onto a map with an adjacent occupied pair") {
  // The closing may fuse a bud and a leaf whose endpoints are both occupied,
  // so excluding such trees needs a look at the closed map, not just the tree.
  bool found = false;
  for (int n_inner : {3, 5, 7}) {
    for (const auto& t : rooted_admissible(n_inner, true)) {
      if (t.nhp_edge_count() != 0) continue;
      if (!close_tree(t).nhp_edges().empty()) {
        found = true;
        break;
      }
    }
    if (found) break;
  }
  CHECK(found);
}

TEST_CASE("transport of special flags onto the closed map") {
  BlossomTree t = BlossomTree::parse("W*(B(u,u),B*(W(l,l),W(l,l)))");
  REQUIRE(t.check_admissible().admissible);
  BlossomTree marked = t;
  for (const auto& e : t.edge_charges())
    if (!e.regular) marked = marked.with_special(e.child, true);
  PlanarMap m = close_tree(marked);
  int specials = 0;
  for (int d = 0; d < m.dart_count(); ++d)
    if (d < m.alpha[d] && m.special[d]) ++specials;
  CHECK(specials == 1);
  // The marked edge joins the two occupied vertices.
  for (int d = 0; d < m.dart_count(); ++d)
    if (m.special[d]) CHECK((m.occupied[m.vertex_of[d]] && m.occupied[m.vertex_of[m.alpha[d]]]));
  CHECK(canonical_code(m) == canonical_code(close_tree(t)));
  CHECK(canonical_code_with_special(m) != canonical_code_with_special(close_tree(t)));
}

TEST_CASE("a fourteen-vertex closure satisfies the Euler count") {
  std::string text = "W(l,l)";
  for (int i = 0; i < 6; ++i) text = "W(B(u," + text + "),l)";
  BlossomTree t = BlossomTree::parse(text);
  REQUIRE(t.inner_count() == 13);
  REQUIRE(t.plant_unmatched());
  PlanarMap m = close_tree(t);
  CHECK(m.vertex_count() == 14);
  CHECK(m.edge_count() == 21);
  CHECK(m.faces().size() == 9);
}

TEST_CASE("structure validation rejects broken tables") {
  PlanarMap m = theta_by_hand();
  m.validate();

  PlanarMap bad = m;
  bad.alpha[0] = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = m;
  bad.sigma[1] = 1;  // white vertex splits into two sigma orbits
  bad.sigma[5] = 3;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = m;
  bad.special[2] = 1;  // only one side of the edge marked
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = m;
  bad.root = 17;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = m;
  bad.vertex_of = {0, 1, 0, 1, 0, 0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  // Two disjoint theta maps share no connection.
  PlanarMap two = m;
  for (int d = 0; d < 6; ++d) {
    two.alpha.push_back(m.alpha[d] + 6);
    two.sigma.push_back(m.sigma[d] + 6);
    two.vertex_of.push_back(m.vertex_of[d] + 2);
    two.special.push_back(0);
  }
  two.black.insert(two.black.end(), m.black.begin(), m.black.end());
  two.occupied.insert(two.occupied.end(), m.occupied.begin(), m.occupied.end());
  CHECK_THROWS_AS(two.validate(), std::invalid_argument);

  PlanarMap occupied_root = m;
  occupied_root.occupied[0] = 1;
  occupied_root.validate();
  CHECK_THROWS_AS(occupied_root.validate_bicubic(), std::invalid_argument);
}

TEST_CASE("text export round-trips maps exactly") {
  for (const auto& t : rooted_admissible(3, true)) {
    BlossomTree marked = t;
    for (const auto& e : t.edge_charges())
      if (e.nhp) marked = marked.with_special(e.child, true);
    PlanarMap m = close_tree(marked);
    PlanarMap back = map_from_text(map_to_text(m));
    CHECK(canonical_code_with_special(back) == canonical_code_with_special(m));
    CHECK(back.root == m.root);
  }
  CHECK_THROWS_AS(map_from_text("planarmap v1\ndarts 4"), std::invalid_argument);
  CHECK_THROWS_AS(map_from_text("planarmap v2\n"), std::invalid_argument);
}

TEST_CASE("dot export names every vertex") {
  PlanarMap m = theta_by_hand();
  std::string dot = map_to_dot(m);
  CHECK(dot.find("graph map") != std::string::npos);
  CHECK(dot.find("v0 -- v1") != std::string::npos);
  CHECK(dot.find("color=red") != std::string::npos);
}
