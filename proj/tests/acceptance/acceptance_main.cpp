// Acceptance suite: one criterion per block, one PASS/FAIL line each.
// Runs the full-size protocols; expect the exponent recovery block to
// take tens of minutes at the stated trial counts.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "perclab/perclab.hpp"

using namespace perclab;

namespace {

int failures = 0;

void report(int id, const std::string& summary, bool pass, const std::string& detail,
            double seconds) {
    std::ostringstream line;
    line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << summary;
    if (!detail.empty())
        line << " (" << detail << ")";
    line << " [" << std::fixed << seconds << "s]";
    std::cout << line.str() << std::endl;
    if (!pass)
        ++failures;
}

template <typename Fn>
void criterion(int id, const std::string& summary, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(id, summary, pass, detail, seconds);
}

double sweep_p(std::uint64_t k) {
    static const double grid[] = {0.12, 0.2, 0.3, 0.4, 0.5, 0.65};
    return grid[k % 6];
}

bool closure_contains_biclique(const Graph& closed, std::vector<int> side, int other_size) {
    VertexSet common = common_neighborhood(closed, side);
    for (int v : side)
        common.erase(v);
    return common.count() >= other_size;
}

std::string run_cli_capture(const std::string& env, const std::string& args, int& code) {
    std::string cmd = env + " " + std::string(PERCLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string out;
    std::array<char, 4096> buf{};
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        code = -1;
        return out;
    }
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

}  // namespace

int main() {
    const int workers = default_workers();
    std::cout << "perclab acceptance suite (workers=" << workers << ")" << std::endl;

    criterion(1, "eta closed forms are the exact reduced rationals", [](std::string& detail) {
        bool ok = eta(4) == Rational(13, 10) && eta(5) == Rational(16, 11) &&
                  eta(6) == Rational(36, 23) && eta(7) == Rational(18, 11) &&
                  eta(4).inverse() == Rational(10, 13);
        detail = "eta(4)=" + eta(4).str() + " eta(5)=" + eta(5).str() + " eta(6)=" +
                 eta(6).str() + " eta(7)=" + eta(7).str();
        return ok;
    });

    criterion(2, "maximum gadget densities match eta by enumeration, min-cut and candidates",
              [](std::string& detail) {
                  bool ok = true;
                  auto b4 = max_density_bruteforce(build_ht(4).graph);
                  auto b5 = max_density_bruteforce(build_ht(5).graph);
                  ok &= b4.value == Rational(13, 10);
                  ok &= b5.value == Rational(16, 11);
                  for (int t = 6; t <= 8; ++t)
                      ok &= max_density_flow(build_ht(t).graph).value == eta(t);
                  for (int t = 4; t <= 10; ++t) {
                      auto cands = seven_candidate_densities(t);
                      Rational best(0);
                      for (const auto& c : cands) {
                          if (c.value > eta(t))
                              ok = false;
                          if (c.value > best)
                              best = c.value;
                      }
                      ok &= best == eta(t);
                  }
                  detail = "brute(H4)=" + b4.value.str() + " brute(H5)=" + b5.value.str();
                  return ok;
              });

    criterion(3, "specialized closure equals the generic oracle on 500 graphs per t",
              [](std::string& detail) {
                  long long checked = 0, mismatches = 0;
                  for (int t = 2; t <= 5; ++t) {
                      Graph pattern = build_complete_bipartite(2, t);
                      for (std::uint64_t k = 0; k < 500; ++k) {
                          int n = 4 + static_cast<int>(k % 9);
                          Graph g = sample_gnp(n, sweep_p(k), rng::at(0xACCE1, k * 7 + t));
                          Graph oracle = close_generic(g, pattern);
                          if (!(close_k2t(g, t).closure == oracle))
                              ++mismatches;
                          if (!(close_k2t_fast(g, t) == oracle))
                              ++mismatches;
                          ++checked;
                      }
                  }
                  detail = std::to_string(checked) + " graphs, " + std::to_string(mismatches) +
                           " mismatches";
                  return mismatches == 0;
              });

    criterion(4, "gadget closures contain the (t-1)-biclique for t=4,5,6",
              [](std::string& detail) {
                  bool ok = true;
                  for (int t = 4; t <= 6; ++t) {
                      LabeledGadget ht = build_ht(t);
                      Graph closed = close_k2t(ht.graph, t).closure;
                      std::vector<int> w_side = ht.spokes('w');
                      w_side.push_back(ht.hub('w'));
                      ok &= static_cast<int>(w_side.size()) == t - 1;
                      ok &= closure_contains_biclique(closed, w_side, t - 1);

                      LabeledGadget remark = build_remark_gadget(t);
                      Graph rclosed = close_k2t(remark.graph, t).closure;
                      std::vector<int> u_side = remark.spokes('u');
                      u_side.push_back(remark.hub('u'));
                      ok &= static_cast<int>(u_side.size()) == t - 1;
                      ok &= closure_contains_biclique(rclosed, u_side, t - 1);
                  }
                  detail = "both gadget families, t in {4,5,6}";
                  return ok;
              });

    criterion(5, "neighborhood-merge and structure-trichotomy property suites",
              [](std::string& detail) {
                  long long merge_violations = 0, structure_violations = 0;
                  for (std::uint64_t k = 0; k < 240; ++k) {
                      int t = (k % 2 == 0) ? 4 : 5;
                      int n = 10 + static_cast<int>(k % 31);  // up to 40
                      Graph g = sample_gnp(n, 0.25, rng::at(0xACCE5, k));
                      Graph closed = close_k2t_fast(g, t);
                      for (int x = 0; x < n; ++x)
                          for (int y = x + 1; y < n; ++y) {
                              if (common_neighbor_count(g, x, y) < t - 1)
                                  continue;
                              for (int z = 0; z < n; ++z)
                                  if (z != x && z != y &&
                                      closed.adjacent(x, z) != closed.adjacent(y, z))
                                      ++merge_violations;
                          }
                  }
                  for (std::uint64_t k = 0; k < 240; ++k) {
                      int t = (k % 2 == 0) ? 4 : 5;
                      int n = 2 * t + 4 + static_cast<int>(k % 28);  // up to 40
                      Graph noise = sample_gnp(n, 2.5 / n, rng::at(0xACCE6, k));
                      auto edges = noise.edges();
                      for (int i = 0; i < t - 1; ++i)
                          for (int j = 0; j < t - 1; ++j)
                              edges.emplace_back(i, t - 1 + j);
                      Graph g = Graph::from_edges(n, edges);
                      // stitch components onto vertex 0 to make it connected
                      for (;;) {
                          std::vector<char> seen(n, 0);
                          std::vector<int> stack{0};
                          seen[0] = 1;
                          while (!stack.empty()) {
                              int x = stack.back();
                              stack.pop_back();
                              g.for_each_neighbor(x, [&](int y) {
                                  if (!seen[y]) {
                                      seen[y] = 1;
                                      stack.push_back(y);
                                  }
                              });
                          }
                          int missing = -1;
                          for (int v = 0; v < n && missing < 0; ++v)
                              if (!seen[v])
                                  missing = v;
                          if (missing < 0)
                              break;
                          edges.emplace_back(0, missing);
                          g = Graph::from_edges(n, edges);
                      }
                      auto cls = classify_structure(close_k2t_fast(g, t));
                      bool in_trichotomy =
                          cls.kind == StructureClass::Kind::complete ||
                          cls.kind == StructureClass::Kind::complete_bipartite ||
                          (cls.kind == StructureClass::Kind::complete_split &&
                           cls.clique_size() <= t - 1);
                      if (!in_trichotomy)
                          ++structure_violations;
                  }
                  detail = "240 graphs per suite, violations " +
                           std::to_string(merge_violations) + "/" +
                           std::to_string(structure_violations);
                  return merge_violations == 0 && structure_violations == 0;
              });

    criterion(6, "closure monotonicity, idempotence and scheduler agreement",
              [](std::string& detail) {
                  long long violations = 0;
                  for (std::uint64_t k = 0; k < 500; ++k) {
                      int t = 3 + static_cast<int>(k % 3);
                      int n = 8 + static_cast<int>(k % 23);  // up to 30
                      std::uint64_t seed = rng::at(0xACCE7, k);
                      Graph sparse = sample_gnp(n, 0.16, seed);
                      Graph dense = sample_gnp(n, 0.16 + 0.18 * ((k % 5) + 1) / 5.0, seed);
                      if (!sparse.subgraph_of(dense))
                          ++violations;
                      Graph cs = close_k2t_fast(sparse, t);
                      Graph cd = close_k2t_fast(dense, t);
                      if (!cs.subgraph_of(cd))
                          ++violations;
                      if (!(close_k2t_fast(cs, t) == cs))
                          ++violations;
                  }
                  for (std::uint64_t k = 0; k < 200; ++k) {
                      int t = 3 + static_cast<int>(k % 3);
                      int n = 6 + static_cast<int>(k % 15);  // up to 20
                      Graph g = sample_gnp(n, sweep_p(k), rng::at(0xACCE8, k));
                      auto seq = close_k2t(g, t, Scheduler::sequential);
                      auto rnd = close_k2t(g, t, Scheduler::rounds);
                      if (!(seq.closure == rnd.closure))
                          ++violations;
                      if (!(close_k2t_fast(g, t) == seq.closure))
                          ++violations;
                  }
                  detail = "500 nested pairs + 200 scheduler graphs, violations " +
                           std::to_string(violations);
                  return violations == 0;
              });

    criterion(7, "witness procedures certify non-percolation on sparse samples",
              [&](std::string& detail) {
                  const int n = 500;
                  const int seeds = 100;
                  int ok4 = 0, bad4 = 0, ok5 = 0;
                  const double p4 = 0.1 * std::pow(n, -10.0 / 13.0);
                  const double p5 = 0.1 * std::pow(n, -5.0 / 7.0);
                  for (int k = 0; k < seeds; ++k) {
                      Graph g = sample_gnp(n, p4, rng::at(0xACCE9, k));
                      auto proc = f_procedure_t4(g);
                      Graph gp = gprime_t4(g, proc.components);
                      if (proc.clean() && verify_witness(g, 4, gp)) {
                          ++ok4;
                      } else {
                          // failures need a logged violation pointing at a
                          // subgraph of density >= 13/10
                          bool excused = !proc.violations.empty();
                          for (const auto& v : proc.violations) {
                              VertexSet s(n);
                              for (int x : v.subgraph)
                                  s.insert(x);
                              if (Rational(count_induced_edges(g, s), s.count()) <
                                  Rational(13, 10))
                                  excused = false;
                          }
                          if (!excused)
                              ++bad4;
                      }
                  }
                  for (int k = 0; k < seeds; ++k) {
                      Graph g = sample_gnp(n, p5, rng::at(0xACCEA, k));
                      auto fam = lower_witness(g, 5);
                      if (verify_witness(g, 5, fam.gprime))
                          ++ok5;
                  }
                  detail = "t=4 verified " + std::to_string(ok4) + "/100 (unexcused failures " +
                           std::to_string(bad4) + "), t=5 verified " + std::to_string(ok5) +
                           "/100";
                  return ok4 >= 95 && bad4 == 0 && ok5 >= 95;
              });

    criterion(8, "fitted threshold exponents land in the stated windows",
              [&](std::string& detail) {
                  const std::vector<int> ns{200, 400, 800, 1600};
                  const int trials = 200;
                  const double tol = 0.05;

                  std::vector<ThresholdEstimate> est4;
                  for (std::size_t i = 0; i < ns.size(); ++i)
                      est4.push_back(
                          estimate_pc(ns[i], 4, trials, tol, rng::at(0xACCEB, i), workers));
                  auto fit4 = fit_exponent(est4);

                  std::vector<ThresholdEstimate> est5;
                  for (std::size_t i = 0; i < ns.size(); ++i)
                      est5.push_back(
                          estimate_pc(ns[i], 5, trials, tol, rng::at(0xACCEC, i), workers));
                  auto fit5 = fit_exponent(est5);

                  const double lo4 = -0.85, hi4 = -0.69;
                  // paper bracket for t=5 widened by 0.05 on both sides
                  const double lo5 = -5.0 / 7.0 - 0.05, hi5 = -11.0 / 16.0 + 0.05;
                  bool ok4 = fit4.slope >= lo4 && fit4.slope <= hi4;
                  bool ok5 = fit5.slope >= lo5 && fit5.slope <= hi5;
                  std::ostringstream d;
                  d << "t=4 slope " << fit4.slope << " in [-0.85,-0.69]; t=5 slope "
                    << fit5.slope << " in [" << lo5 << "," << hi5 << "]";
                  detail = d.str();
                  return ok4 && ok5;
              });

    criterion(9, "experiment JSON is byte-identical across worker counts",
              [](std::string& detail) {
                  const std::string args = "pc --n 60 --t 4 --trials 60 --tol 0.1 --seed 42";
                  int c1 = 0, c2 = 0, c3 = 0;
                  std::string one = run_cli_capture("PERCLAB_WORKERS=1", args, c1);
                  std::string two = run_cli_capture("PERCLAB_WORKERS=2", args, c2);
                  std::string four = run_cli_capture("PERCLAB_WORKERS=4", args, c3);
                  bool ok = c1 == 0 && c2 == 0 && c3 == 0 && one == two && one == four &&
                            !one.empty();
                  detail = "3 worker counts, " + std::to_string(one.size()) + " bytes each";
                  return ok;
              });

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
