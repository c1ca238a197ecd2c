// Census sweeps over the tree stream and the equivalence-class checks.

#include "hardmap/census.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "hardmap/closing.hpp"
#include "hardmap/cutting.hpp"
#include "hardmap/tree_gen.hpp"

namespace hardmap {

namespace {

int inner_size(int two_n) {
  if (two_n < 2 || two_n % 2 != 0)
    throw std::invalid_argument("census: vertex count must be even and positive");
  if (two_n - 1 > 62) throw std::invalid_argument("census: size exceeds the occupation-mask cap");
  return two_n - 1;
}

// Feeds every occupation of every charge-3 shape to fn, splitting shapes
// round-robin across workers. fn(worker, tree) must only touch state owned
// by that worker; the work split is deterministic but the interleaving of
// different workers is not, so merges must not depend on arrival order.
void sweep(int n_inner, int threads,
           const std::function<void(int, const BlossomTree&)>& fn) {
  std::vector<BlossomTree> shapes = blossom_shapes(n_inner);
  if (threads < 1) threads = 1;
  auto run_worker = [&shapes, threads, &fn](int w) {
    for (std::size_t i = w; i < shapes.size(); i += threads) {
      std::uint64_t masks = 1ull << shapes[i].inner_count();
      for (std::uint64_t mask = 0; mask < masks; ++mask) fn(w, shapes[i].with_occupation(mask));
    }
  };
  if (threads == 1) {
    run_worker(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w) pool.emplace_back(run_worker, w);
  for (auto& t : pool) t.join();
}

ZPoly from_counts(const std::vector<std::vector<long>>& per_worker) {
  std::vector<mpq_class> coeffs(per_worker[0].size(), 0);
  for (const auto& counts : per_worker)
    for (std::size_t j = 0; j < counts.size(); ++j) coeffs[j] += counts[j];
  return ZPoly(coeffs);
}

bool rooted_admissible(const BlossomTree& t) {
  return t.plant_unmatched() && t.check_admissible().admissible;
}

}  // namespace

CensusRecord signed_admissible_census(int two_n, int threads) {
  int n_inner = inner_size(two_n);
  if (threads < 1) threads = 1;
  std::vector<std::vector<long>> acc(threads, std::vector<long>(n_inner + 1, 0));
  sweep(n_inner, threads, [&acc](int w, const BlossomTree& t) {
    if (!rooted_admissible(t)) return;
    acc[w][t.particle_count()] += t.nhp_edge_count() % 2 ? -1 : 1;
  });
  return {two_n, from_counts(acc)};
}

CensusRecord good_tree_census(int two_n, int threads) {
  int n_inner = inner_size(two_n);
  if (threads < 1) threads = 1;
  std::vector<std::vector<long>> acc(threads, std::vector<long>(n_inner + 1, 0));
  sweep(n_inner, threads, [&acc](int w, const BlossomTree& t) {
    if (!t.plant_unmatched() || t.nhp_edge_count() != 0) return;
    if (!t.check_admissible().admissible) return;  // here: all edges regular
    if (!close_tree(t).nhp_edges().empty()) return;
    acc[w][t.particle_count()] += 1;
  });
  return {two_n, from_counts(acc)};
}

CensusRecord map_census(int two_n, int threads) {
  int n_inner = inner_size(two_n);
  if (threads < 1) threads = 1;
  std::vector<std::map<RootedMapCode, int>> acc(threads);
  sweep(n_inner, threads, [&acc](int w, const BlossomTree& t) {
    if (!rooted_admissible(t)) return;
    PlanarMap m = close_tree(t);
    if (!m.nhp_edges().empty()) return;
    acc[w].emplace(canonical_code(m), t.particle_count());
  });
  std::vector<long> counts(n_inner + 1, 0);
  std::map<RootedMapCode, int> merged;
  for (auto& part : acc) merged.merge(part);
  for (const auto& [code, particles] : merged) ++counts[particles];
  return {two_n, from_counts({counts})};
}

std::vector<PlanarMap> admissible_maps(int two_n, int threads) {
  int n_inner = inner_size(two_n);
  if (threads < 1) threads = 1;
  std::vector<std::map<RootedMapCode, PlanarMap>> acc(threads);
  sweep(n_inner, threads, [&acc](int w, const BlossomTree& t) {
    if (!rooted_admissible(t)) return;
    PlanarMap m = close_tree(t);
    acc[w].emplace(canonical_code(m), std::move(m));
  });
  std::map<RootedMapCode, PlanarMap> merged;
  for (auto& part : acc) merged.merge(part);
  std::vector<PlanarMap> out;
  out.reserve(merged.size());
  for (auto& [code, m] : merged) out.push_back(std::move(m));
  return out;
}

ClassVerification verify_class(const PlanarMap& map, int max_m) {
  ClassVerification rec;
  rec.map_code = canonical_code(map);
  std::vector<int> nhp = map.nhp_edges();
  rec.m = static_cast<int>(nhp.size());
  auto blame = [&rec](const std::string& what) { rec.violations.push_back(what); };
  if (rec.m > max_m) {
    blame("marking sweep capped: " + std::to_string(rec.m) + " NHP edges");
    return rec;
  }

  long alternating_total = 0;
  for (std::uint64_t mask = 0; mask < (1ull << rec.m); ++mask) {
    ClassOutcome out;
    for (int i = 0; i < rec.m; ++i)
      if (mask >> i & 1) out.marking.push_back(nhp[i]);
    int p = static_cast<int>(out.marking.size());
    alternating_total += p % 2 ? -1 : 1;
    CutResult cut = cut_map(map, out.marking);
    out.acceptable = cut.acceptable;
    if (!cut.acceptable) {
      blame("marking " + std::to_string(mask) + " not acceptable");
    } else {
      out.tree = cut.tree.without_specials().serialize();
      for (const auto& e : cut.tree.edge_charges()) {
        if (e.nhp && !e.regular) ++out.n_nonregular;
        if (e.nhp && e.regular) ++out.r_regular_nhp;
        if (!e.nhp && !e.regular) blame("non-regular edge without occupied ends");
      }
    }
    rec.outcomes.push_back(std::move(out));
  }
  if (alternating_total != (rec.m == 0 ? 1 : 0))
    blame("alternating marking total is " + std::to_string(alternating_total));

  // Group the markings by the tree they produce.
  struct Group {
    int n = -1;
    int r = -1;
    long members = 0;
    long alternating = 0;
    int p_if_single = -1;
  };
  std::map<std::string, Group> groups;
  for (const auto& out : rec.outcomes) {
    if (!out.acceptable) continue;
    Group& g = groups[out.tree];
    if (g.members == 0) {
      g.n = out.n_nonregular;
      g.r = out.r_regular_nhp;
    } else if (g.n != out.n_nonregular || g.r != out.r_regular_nhp) {
      blame("tree " + out.tree + " reappears with different edge counts");
    }
    ++g.members;
    int p = static_cast<int>(out.marking.size());
    g.alternating += p % 2 ? -1 : 1;
    g.p_if_single = p;
  }
  for (const auto& [serial, g] : groups) {
    if (g.members != (1L << g.r))
      blame("tree " + serial + " arises from " + std::to_string(g.members) + " markings, not 2^" +
            std::to_string(g.r));
    bool admissible = BlossomTree::parse(serial).check_admissible().admissible;
    if (admissible != (g.r == 0))
      blame("tree " + serial + (admissible ? " admissible with r > 0" : " not admissible at r = 0"));
    if (g.r == 0) {
      rec.signed_sum += g.n % 2 ? -1 : 1;
      if (g.p_if_single != g.n)
        blame("tree " + serial + " has n different from its marking size");
    } else if (g.alternating != 0) {
      blame("tree " + serial + " group signs do not cancel");
    }
  }
  if (rec.signed_sum != (rec.m == 0 ? 1 : 0))
    blame("signed sum over admissible trees is " + std::to_string(rec.signed_sum));

  rec.ok = rec.violations.empty();
  return rec;
}

}  // namespace hardmap
