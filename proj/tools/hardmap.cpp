// Command line for the hard-particle map machinery: exact series, the closed
// coefficient formula, exhaustive censuses, bijection round trips, per-map
// sum rules, the Ising reduction, and the critical line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error. Output is
// byte-identical for identical invocations, independent of --threads.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hardmap/census.hpp"
#include "hardmap/cutting.hpp"
#include "hardmap/numeric.hpp"
#include "hardmap/phase.hpp"
#include "hardmap/solver.hpp"
#include "hardmap/tree_gen.hpp"

using nlohmann::ordered_json;
using namespace hardmap;

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

const char* branch_name(CriticalPoint::Branch b) {
  return b == CriticalPoint::Branch::HighZ ? "high-z" : "parametric";
}

std::vector<std::string> poly_strings(const ZPoly& p) {
  std::vector<std::string> out;
  for (int j = 0; j <= p.degree(); ++j) out.push_back(rational_to_string(p.coeff(j)));
  return out;
}

void print_series(const GSeries& s, const char* kind, const std::string& format) {
  if (format == "json") {
    ordered_json terms = ordered_json::array();
    for (int k = 0; k <= s.order(); ++k)
      if (!s.coeff(k).is_zero())
        terms.push_back({{"g", k}, {"coefficients", poly_strings(s.coeff(k))}});
    ordered_json doc = {{"schema", "hardmap-series/1"},
                        {"kind", kind},
                        {"order", s.order()},
                        {"terms", terms}};
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "g_power,z_power,coefficient\n";
    for (int k = 0; k <= s.order(); ++k) {
      const ZPoly& c = s.coeff(k);
      for (int j = 0; j <= c.degree(); ++j)
        if (c.coeff(j) != 0) std::cout << k << "," << j << "," << rational_to_string(c.coeff(j)) << "\n";
    }
  } else {
    std::cout << s.to_string();
  }
}

void gate_size(int vertices, int max_vertices, bool allow_large) {
  if (vertices > max_vertices && !allow_large)
    throw std::invalid_argument("size " + std::to_string(vertices) + " exceeds --max-vertices " +
                                std::to_string(max_vertices) + "; pass --allow-large to run it");
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& xs) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (1ull << xs.size()); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (mask >> i & 1) sub.push_back(xs[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

int run_census(int vertices, const std::string& mode, int threads, const std::string& format) {
  CensusRecord rec = mode == "good"   ? good_tree_census(vertices, threads)
                     : mode == "maps" ? map_census(vertices, threads)
                                      : signed_admissible_census(vertices, threads);
  if (format == "json") {
    ordered_json doc = {{"schema", "hardmap-census/1"},
                        {"vertices", rec.vertices},
                        {"mode", mode},
                        {"coefficients", poly_strings(rec.per_particle)}};
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "particles,count\n";
    for (int j = 0; j <= rec.per_particle.degree(); ++j)
      std::cout << j << "," << rational_to_string(rec.per_particle.coeff(j)) << "\n";
  } else {
    std::cout << rec.per_particle.to_string() << "\n";
  }
  return 0;
}

int run_sumrule(int vertices, int threads) {
  bool all_ok = true;
  for (int v = 2; v <= vertices; v += 2) {
    long classes = 0;
    bool ok = true;
    for (const auto& m : admissible_maps(v, threads)) {
      ClassVerification rec = verify_class(m);
      ++classes;
      if (!rec.ok) {
        ok = false;
        for (const auto& viol : rec.violations)
          std::cout << "FAIL sumrule vertices=" << v << " map=" << rec.map_code.to_string()
                    << ": " << viol << "\n";
      }
    }
    if (ok) std::cout << "PASS sumrule vertices=" << v << " classes=" << classes << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}

int run_roundtrip(int vertices, int threads) {
  bool all_ok = true;
  for (int inner = 1; inner < vertices; inner += 2) {
    long count = 0, failures = 0;
    generate_blossom_trees(inner, true, [&count, &failures](const BlossomTree& t) {
      if (!t.plant_unmatched() || !t.check_admissible().admissible) return;
      ++count;
      if (!roundtrip_tree(t)) ++failures;
    });
    bool ok = failures == 0;
    std::cout << (ok ? "PASS" : "FAIL") << " roundtrip trees inner=" << inner
              << " count=" << count << (ok ? "" : " failures=" + std::to_string(failures)) << "\n";
    all_ok = all_ok && ok;
  }
  for (int v = 2; v <= vertices; v += 2) {
    long pairs = 0, failures = 0;
    for (const auto& m : admissible_maps(v, threads))
      for (const auto& sub : subsets_of(m.nhp_edges())) {
        ++pairs;
        if (!roundtrip_map(m, sub) || !verify_prop_c1(cut_map(m, sub))) ++failures;
      }
    bool ok = failures == 0;
    std::cout << (ok ? "PASS" : "FAIL") << " roundtrip maps vertices=" << v << " pairs=" << pairs
              << (ok ? "" : " failures=" + std::to_string(failures)) << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}

int run_critical(const std::string& z_text, const std::string& scan_text, long fit_n,
                 const std::string& format) {
  if (!scan_text.empty()) {
    double z0 = 0, z1 = 0;
    long steps = 0;
    char tail = 0;
    if (std::sscanf(scan_text.c_str(), "%lf:%lf:%ld%c", &z0, &z1, &steps, &tail) != 3 || steps < 1)
      throw std::invalid_argument("--scan wants z0:z1:steps with steps >= 1");
    std::vector<CriticalPoint> points;
    for (long i = 0; i <= steps; ++i)
      points.push_back(critical_line(z0 + (z1 - z0) * static_cast<double>(i) / steps));
    if (format == "json") {
      ordered_json rows = ordered_json::array();
      for (const CriticalPoint& p : points) {
        ordered_json row = {{"z", p.z}, {"g_c_squared", p.g_c_squared},
                            {"branch", branch_name(p.branch)}};
        if (p.u) row["u"] = *p.u;
        rows.push_back(row);
      }
      std::cout << ordered_json{{"schema", "hardmap-critical-scan/1"}, {"points", rows}}.dump(2)
                << "\n";
    } else {
      std::cout << "z,g_c_squared,branch,u\n";
      for (const CriticalPoint& p : points)
        std::cout << fmt(p.z) << "," << fmt(p.g_c_squared) << "," << branch_name(p.branch) << ","
                  << (p.u ? fmt(*p.u) : "") << "\n";
    }
    return 0;
  }
  if (fit_n > 0) {
    mpq_class z = parse_rational(z_text);
    GrowthFit fit = growth_fit(z, std::max(1L, fit_n / 16), fit_n);
    if (format == "json") {
      ordered_json doc = {{"schema", "hardmap-growth-fit/1"},
                          {"z", rational_to_string(z)},
                          {"anchors", fit.n},
                          {"slopes", fit.slope},
                          {"extrapolated", fit.extrapolated},
                          {"gamma", fit.gamma}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "n,slope,extrapolated\n";
      for (std::size_t k = 0; k < fit.slope.size(); ++k)
        std::cout << fit.n[k + 1] << "," << fmt(fit.slope[k]) << ","
                  << (k > 0 ? fmt(fit.extrapolated[k - 1]) : "") << "\n";
      std::cout << "gamma," << fmt(fit.gamma) << ",\n";
    }
    return 0;
  }
  CriticalPoint p = critical_line(parse_rational(z_text).get_d());
  if (format == "json") {
    ordered_json doc = {{"schema", "hardmap-critical/1"},
                        {"z", p.z},
                        {"g_c_squared", p.g_c_squared},
                        {"branch", branch_name(p.branch)}};
    if (p.u) doc["u"] = *p.u;
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "z,g_c_squared,branch,u\n"
              << fmt(p.z) << "," << fmt(p.g_c_squared) << "," << branch_name(p.branch) << ","
              << (p.u ? fmt(*p.u) : "") << "\n";
  } else {
    std::cout << "z = " << fmt(p.z) << "\ng_c^2 = " << fmt(p.g_c_squared)
              << "\nbranch = " << branch_name(p.branch) << "\n";
    if (p.u) std::cout << "u = " << fmt(*p.u) << "\n";
  }
  return 0;
}

int run_verify_all(int order, int max_vertices, int threads) {
  bool all = true;
  auto report = [&all](const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : " " + detail) << "\n";
    all = all && ok;
  };

  {
    const std::vector<std::vector<long>> table = {
        {1, 1}, {3, 9, 3}, {12, 60, 66, 12}, {56, 392, 780, 460, 56},
        {288, 2592, 7584, 8400, 3168, 288}};
    GSeries g = g_bmhp(10);
    bool ok = true;
    for (std::size_t i = 0; i < table.size(); ++i) {
      std::vector<mpq_class> q(table[i].begin(), table[i].end());
      ok = ok && g.coeff(2 * static_cast<int>(i) + 2) == ZPoly(q);
    }
    report("series-table", ok, "orders 2..10");
  }
  {
    GSeries g = g_bmhp(order);
    bool ok = true;
    for (int n = 1; 2 * n <= order; ++n) ok = ok && g.coeff(2 * n) == closed_formula(n);
    for (int k = 1; k <= order; k += 2) ok = ok && g.coeff(k).is_zero();
    report("series-vs-formula", ok, "n <= " + std::to_string(order / 2));
  }
  {
    bool ok = true;
    for (int v = 2; v <= max_vertices; v += 2) {
      ZPoly expected = closed_formula(v / 2);
      ok = ok && signed_admissible_census(v, threads).per_particle == expected &&
           good_tree_census(v, threads).per_particle == expected &&
           map_census(v, threads).per_particle == expected;
    }
    report("census-triple", ok, "2n <= " + std::to_string(max_vertices));
  }
  {
    long count = 0, failures = 0;
    for (int inner = 1; inner < max_vertices; inner += 2)
      generate_blossom_trees(inner, true, [&count, &failures](const BlossomTree& t) {
        if (!t.plant_unmatched() || !t.check_admissible().admissible) return;
        ++count;
        if (!roundtrip_tree(t)) ++failures;
      });
    report("tree-roundtrip", failures == 0, "trees=" + std::to_string(count));
  }
  long pair_count = 0;
  {
    long failures = 0, stability_failures = 0;
    for (int v = 2; v <= max_vertices; v += 2)
      for (const auto& m : admissible_maps(v, threads))
        for (const auto& sub : subsets_of(m.nhp_edges())) {
          ++pair_count;
          CutResult full = cut_map(m, sub);
          if (!roundtrip_map(m, sub) || !verify_prop_c1(full)) ++failures;
          // dropping one special is harmless exactly r_regular_special times
          int stable = 0;
          for (std::size_t drop = 0; drop < sub.size(); ++drop) {
            std::vector<int> fewer;
            for (std::size_t i = 0; i < sub.size(); ++i)
              if (i != drop) fewer.push_back(sub[i]);
            CutResult r = cut_map(m, fewer);
            if (r.acceptable && r.tree.without_specials() == full.tree.without_specials()) ++stable;
          }
          if (stable != full.r_regular_special) ++stability_failures;
        }
    report("map-roundtrip", failures == 0, "pairs=" + std::to_string(pair_count));
    report("unmark-stability", stability_failures == 0, "pairs=" + std::to_string(pair_count));
  }
  {
    long classes = 0, failures = 0;
    for (int v = 2; v <= max_vertices; v += 2)
      for (const auto& m : admissible_maps(v, threads)) {
        ++classes;
        if (!verify_class(m).ok) ++failures;
      }
    report("sumrule", failures == 0, "classes=" + std::to_string(classes));
  }
  {
    GSeries g = g_bmhp(order);
    GSeries f = free_energy(g);
    GSeries recovered = (f.euler_g() - f.euler_z()).scaled(ZPoly(mpq_class(3, 2)));
    report("free-energy-roundtrip", recovered == g, "order " + std::to_string(order));

    GSeries lhs(order);
    for (int a = 0; a <= order; ++a) {
      ZPoly row = f.coeff(a);
      row.scale(mpq_class((a + 4) * (a + 2)));
      lhs.set_coeff(a, row);
    }
    GSeries rhs = solve_hp_system(order).v.log().scaled(ZPoly(4));
    report("log-derivative-identity", lhs == rhs, "order " + std::to_string(order));
  }
  report("conjugation", conjugation_checks(order).all_ok, "order " + std::to_string(order));
  report("ising-residual", eqforP_residual(order).is_zero(), "order " + std::to_string(order));
  {
    GSeries q = g_qtising(5);
    ZPoly z1 = ZPoly::monomial(1, 1);
    bool ok = q.coeff(0).is_zero() && q.coeff(1).is_zero() && q.coeff(2) == z1 &&
              q.coeff(3) == z1 + z1 && q.coeff(4) == ZPoly::monomial(6, 1) &&
              q.coeff(5) == ZPoly::monomial(18, 1) + ZPoly::monomial(2, 3);
    report("ising-prefix", ok, "orders 2..5");
  }
  {
    TricriticalExact e = tricritical_exact();
    bool exact = e.z_plus == 32 && e.g2_plus == frac(15, 4096) &&
                 e.z_minus == frac(-512, 3125) && e.g2_minus == frac(234375, 1048576);
    double join = 15.0 / 4096;
    bool cont = std::fabs(critical_line(32).g_c_squared - join) < 1e-12 &&
                std::fabs(critical_line(std::nextafter(32.0, 0.0)).g_c_squared - join) < 1e-12;
    bool low = std::fabs(critical_line(1e-10).g_c_squared - 0.125) < 1e-10;
    report("phase-constants", exact && cont && low, "");
  }
  {
    double g0 = growth_exponent(0, 25, 400);
    double g1 = growth_exponent(1, 25, 400);
    double g32 = growth_exponent(32, 25, 400);
    bool ok = std::fabs(g0 - 2.5) < 0.1 && std::fabs(g1 - 2.5) < 0.1 &&
              std::fabs(g32 - 7.0 / 3) < 0.15;
    report("growth-exponents", ok,
           "gamma(0)=" + fmt(g0) + " gamma(1)=" + fmt(g1) + " gamma(32)=" + fmt(g32));
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rooted bicubic maps with hard particles: series, censuses, bijections"};
  app.require_subcommand(1);

  std::string format = "plain";
  int order = 10;
  long formula_n = 1;
  int vertices = 8;
  std::string mode = "signed-admissible";
  int threads = 1;
  int max_vertices = 8;
  bool allow_large = false;
  std::string z_text = "0";
  std::string scan_text;
  long fit_n = 0;

  auto add_format = [&format](CLI::App* s) {
    s->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
  };
  auto add_threads = [&threads](CLI::App* s) {
    s->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 64));
  };
  auto add_gate = [&max_vertices, &allow_large](CLI::App* s) {
    s->add_option("--max-vertices", max_vertices, "largest vertex count to run");
    s->add_flag("--allow-large", allow_large, "lift the size gate");
  };

  CLI::App* s_series = app.add_subcommand("series", "map series from the tree system");
  s_series->add_option("--order", order, "truncation order in g")->check(CLI::Range(0, 60));
  add_format(s_series);

  CLI::App* s_formula = app.add_subcommand("formula", "per-particle counts for 2n vertices");
  s_formula->add_option("--n", formula_n, "half the vertex count")
      ->required()
      ->check(CLI::Range(1L, 5000L));
  add_format(s_formula);

  CLI::App* s_census = app.add_subcommand("census", "exhaustive tree and map counts");
  s_census->add_option("--vertices", vertices, "map size 2n")->required();
  s_census->add_option("--mode", mode, "what to count")
      ->check(CLI::IsMember({"signed-admissible", "good", "maps"}));
  add_threads(s_census);
  add_gate(s_census);
  add_format(s_census);

  CLI::App* s_sumrule = app.add_subcommand("sumrule", "equivalence-class checks per map");
  s_sumrule->add_option("--vertices", vertices, "check sizes 2..this");
  add_threads(s_sumrule);
  add_gate(s_sumrule);

  CLI::App* s_roundtrip = app.add_subcommand("roundtrip", "closing/cutting round trips");
  s_roundtrip->add_option("--vertices", vertices, "check sizes 2..this");
  add_threads(s_roundtrip);
  add_gate(s_roundtrip);

  CLI::App* s_ising = app.add_subcommand("ising", "quasi-tetravalent Ising series");
  s_ising->add_option("--order", order, "truncation order in g")->check(CLI::Range(0, 60));
  add_format(s_ising);

  CLI::App* s_critical = app.add_subcommand("critical", "critical line and growth exponents");
  s_critical->add_option("--z", z_text, "fugacity, a rational like -512/3125");
  s_critical->add_option("--scan", scan_text, "z0:z1:steps table of the line");
  s_critical->add_option("--n", fit_n, "growth-exponent fit up to this n")
      ->check(CLI::Range(1L, 100000L));
  add_format(s_critical);

  CLI::App* s_verify = app.add_subcommand("verify-all", "run every verification");
  s_verify->add_option("--order", order, "series order for the exact identities")
      ->check(CLI::Range(6, 60));
  s_verify->add_option("--max-vertices", max_vertices, "bound for the exhaustive sweeps");
  add_threads(s_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*s_series) {
      print_series(g_bmhp(order), "bicubic-hard-particle", format);
      return 0;
    }
    if (*s_formula) {
      ZPoly p = closed_formula(formula_n);
      if (format == "json") {
        ordered_json doc = {{"schema", "hardmap-formula/1"},
                            {"n", formula_n},
                            {"coefficients", poly_strings(p)}};
        std::cout << doc.dump(2) << "\n";
      } else if (format == "csv") {
        std::cout << "z_power,coefficient\n";
        for (int j = 0; j <= p.degree(); ++j)
          std::cout << j << "," << rational_to_string(p.coeff(j)) << "\n";
      } else {
        std::cout << p.to_string() << "\n";
      }
      return 0;
    }
    if (*s_census) {
      gate_size(vertices, max_vertices, allow_large);
      return run_census(vertices, mode, threads, format);
    }
    if (*s_sumrule) {
      gate_size(vertices, max_vertices, allow_large);
      return run_sumrule(vertices, threads);
    }
    if (*s_roundtrip) {
      gate_size(vertices, max_vertices, allow_large);
      return run_roundtrip(vertices, threads);
    }
    if (*s_ising) {
      print_series(g_qtising(order), "quasi-tetravalent-ising", format);
      return 0;
    }
    if (*s_critical) return run_critical(z_text, scan_text, fit_n, format);
    if (*s_verify) return run_verify_all(order, max_vertices, threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
