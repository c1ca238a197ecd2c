// Structural checks, face tracing, canonical codes and text I/O for rooted
// planar maps.

#include "hardmap/planar_map.hpp"

#include <sstream>
#include <stdexcept>

namespace hardmap {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("planar map: " + what);
}

}  // namespace

int PlanarMap::degree(int v) const {
  int deg = 0;
  for (int d = 0; d < dart_count(); ++d)
    if (vertex_of[d] == v) ++deg;
  return deg;
}

bool PlanarMap::connected() const {
  if (dart_count() == 0) return true;
  std::vector<char> seen(dart_count(), 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    for (int nxt : {sigma[d], alpha[d]})
      if (!seen[nxt]) {
        seen[nxt] = 1;
        stack.push_back(nxt);
      }
  }
  for (char s : seen)
    if (!s) return false;
  return true;
}

void PlanarMap::validate() const {
  const int n = dart_count();
  if (n == 0 || n % 2 != 0) fail("dart count must be positive and even");
  if (static_cast<int>(sigma.size()) != n || static_cast<int>(vertex_of.size()) != n ||
      static_cast<int>(special.size()) != n)
    fail("table sizes disagree");
  if (root < 0 || root >= n) fail("root dart out of range");
  std::vector<char> hit(n, 0);
  for (int d = 0; d < n; ++d) {
    if (alpha[d] < 0 || alpha[d] >= n || alpha[d] == d) fail("alpha not fixed-point free");
    if (alpha[alpha[d]] != d) fail("alpha not an involution");
    if (sigma[d] < 0 || sigma[d] >= n) fail("sigma out of range");
    if (hit[sigma[d]]) fail("sigma not a permutation");
    hit[sigma[d]] = 1;
    if (vertex_of[d] < 0 || vertex_of[d] >= vertex_count()) fail("vertex label out of range");
    if (vertex_of[sigma[d]] != vertex_of[d]) fail("sigma leaves a vertex");
    if (special[d] != special[alpha[d]]) fail("special flag not symmetric");
  }
  if (static_cast<int>(occupied.size()) != vertex_count()) fail("vertex table sizes disagree");
  // Every vertex label must actually be used, and sigma orbits must not
  // merge two labels (checked above) nor split one label into two orbits.
  std::vector<int> rep(vertex_count(), -1);
  for (int d = 0; d < n; ++d) {
    int v = vertex_of[d];
    if (rep[v] < 0) rep[v] = d;
  }
  for (int v = 0; v < vertex_count(); ++v)
    if (rep[v] < 0) fail("unused vertex label");
  std::vector<char> orbit_seen(n, 0);
  for (int v = 0; v < vertex_count(); ++v) {
    int d = rep[v];
    int count = 0;
    while (!orbit_seen[d]) {
      orbit_seen[d] = 1;
      ++count;
      d = sigma[d];
    }
    if (count != degree(v)) fail("vertex split across sigma orbits");
  }
  if (!connected()) fail("map not connected");
}

void PlanarMap::validate_bicubic() const {
  validate();
  for (int v = 0; v < vertex_count(); ++v)
    if (degree(v) != 3) fail("vertex not trivalent");
  for (int d = 0; d < dart_count(); ++d)
    if (black[vertex_of[d]] == black[vertex_of[alpha[d]]]) fail("edge joins equal colors");
  if (genus() != 0) fail("nonzero genus");
  int rv = vertex_of[root];
  if (!black[rv] || occupied[rv]) fail("root vertex must be black and empty");
}

std::vector<int> PlanarMap::sigma_inverse() const {
  std::vector<int> inv(dart_count());
  for (int d = 0; d < dart_count(); ++d) inv[sigma[d]] = d;
  return inv;
}

std::vector<std::vector<int>> PlanarMap::faces() const {
  std::vector<int> inv = sigma_inverse();
  std::vector<char> seen(dart_count(), 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < dart_count(); ++start) {
    if (seen[start]) continue;
    std::vector<int> face;
    int d = start;
    while (!seen[d]) {
      seen[d] = 1;
      face.push_back(d);
      d = inv[alpha[d]];
    }
    out.push_back(std::move(face));
  }
  return out;
}

int PlanarMap::genus() const {
  int chi = vertex_count() - edge_count() + static_cast<int>(faces().size());
  if (chi % 2 != 0 || chi > 2) fail("impossible Euler characteristic");
  return (2 - chi) / 2;
}

std::vector<int> PlanarMap::nhp_edges() const {
  std::vector<int> out;
  for (int d = 0; d < dart_count(); ++d)
    if (d < alpha[d] && occupied[vertex_of[d]] && occupied[vertex_of[alpha[d]]])
      out.push_back(d);
  return out;
}

namespace {

RootedMapCode code_impl(const PlanarMap& m, bool with_special) {
  const int n = m.dart_count();
  std::vector<int> label(n, -1);
  std::vector<int> order;
  order.reserve(n);
  label[m.root] = 0;
  order.push_back(m.root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int d = order[i];
    for (int nxt : {m.sigma[d], m.alpha[d]})
      if (label[nxt] < 0) {
        label[nxt] = static_cast<int>(order.size());
        order.push_back(nxt);
      }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("canonical code requires a connected map");
  RootedMapCode code;
  code.seq.reserve(1 + 2 * n + m.vertex_count() + (with_special ? n : 0));
  code.seq.push_back(n);
  for (int d : order) code.seq.push_back(label[m.sigma[d]]);
  for (int d : order) code.seq.push_back(label[m.alpha[d]]);
  std::vector<char> vertex_done(m.vertex_count(), 0);
  for (int d : order) {
    int v = m.vertex_of[d];
    if (!vertex_done[v]) {
      vertex_done[v] = 1;
      code.seq.push_back((m.black[v] ? 2 : 0) | (m.occupied[v] ? 1 : 0));
    }
  }
  if (with_special)
    for (int d : order) code.seq.push_back(m.special[d] ? 1 : 0);
  return code;
}

}  // namespace

RootedMapCode canonical_code(const PlanarMap& m) { return code_impl(m, false); }

RootedMapCode canonical_code_with_special(const PlanarMap& m) { return code_impl(m, true); }

std::string RootedMapCode::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) os << '.';
    os << seq[i];
  }
  return os.str();
}

std::string map_to_text(const PlanarMap& m) {
  std::ostringstream os;
  os << "planarmap v1\n";
  os << "darts " << m.dart_count() << " vertices " << m.vertex_count() << " root " << m.root
     << "\n";
  auto row = [&os](const char* name, const std::vector<int>& xs) {
    os << name;
    for (int x : xs) os << ' ' << x;
    os << '\n';
  };
  row("alpha", m.alpha);
  row("sigma", m.sigma);
  row("vertex", m.vertex_of);
  os << "color";
  for (char b : m.black) os << ' ' << (b ? 'B' : 'W');
  os << "\nocc";
  for (char o : m.occupied) os << ' ' << (o ? 1 : 0);
  os << "\nspecial";
  for (char s : m.special) os << ' ' << (s ? 1 : 0);
  os << '\n';
  return os.str();
}

PlanarMap map_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string word;
  auto expect = [&](const std::string& want) {
    if (!(is >> word) || word != want)
      throw std::invalid_argument("map text: expected '" + want + "'");
  };
  expect("planarmap");
  expect("v1");
  int darts = 0, vertices = 0;
  PlanarMap m;
  expect("darts");
  if (!(is >> darts) || darts <= 0) throw std::invalid_argument("map text: bad dart count");
  expect("vertices");
  if (!(is >> vertices) || vertices <= 0) throw std::invalid_argument("map text: bad vertex count");
  expect("root");
  if (!(is >> m.root)) throw std::invalid_argument("map text: bad root");
  auto ints = [&](const char* name, std::vector<int>& xs, int count) {
    expect(name);
    xs.resize(count);
    for (int& x : xs)
      if (!(is >> x)) throw std::invalid_argument(std::string("map text: short ") + name);
  };
  ints("alpha", m.alpha, darts);
  ints("sigma", m.sigma, darts);
  ints("vertex", m.vertex_of, darts);
  expect("color");
  m.black.resize(vertices);
  for (char& b : m.black) {
    if (!(is >> word) || (word != "B" && word != "W"))
      throw std::invalid_argument("map text: bad color");
    b = word == "B";
  }
  auto bits = [&](const char* name, std::vector<char>& xs, int count) {
    expect(name);
    xs.resize(count);
    for (char& x : xs) {
      int v;
      if (!(is >> v) || (v != 0 && v != 1))
        throw std::invalid_argument(std::string("map text: bad ") + name);
      x = static_cast<char>(v);
    }
  };
  bits("occ", m.occupied, vertices);
  bits("special", m.special, darts);
  m.validate();
  return m;
}

std::string map_to_dot(const PlanarMap& m) {
  std::ostringstream os;
  os << "graph map {\n  node [shape=circle width=0.25 fixedsize=true];\n";
  for (int v = 0; v < m.vertex_count(); ++v) {
    os << "  v" << v << " [style=filled fillcolor=" << (m.black[v] ? "black" : "white")
       << " label=\"" << (m.occupied[v] ? "*" : "") << "\"";
    if (m.black[v]) os << " fontcolor=white";
    os << "];\n";
  }
  for (int d = 0; d < m.dart_count(); ++d) {
    if (d > m.alpha[d]) continue;
    os << "  v" << m.vertex_of[d] << " -- v" << m.vertex_of[m.alpha[d]];
    std::string attrs;
    if (m.special[d]) attrs += "style=bold ";
    if (d == m.root || m.alpha[d] == m.root) attrs += "color=red ";
    if (!attrs.empty()) {
      attrs.pop_back();
      os << " [" << attrs << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hardmap
