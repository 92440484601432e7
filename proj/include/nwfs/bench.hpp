#pragma once

// Ratio measurement and the acceptance suite. Every criterion is a function
// returning a CriterionResult; `bench --suite acceptance` and the acceptance
// test binary both run them.

#include "nwfs/embeddings.hpp"
#include "nwfs/flowshop.hpp"
#include "nwfs/generators.hpp"
#include "nwfs/graph.hpp"
#include "nwfs/solvers.hpp"
#include "nwfs/transforms.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace nwfs {

struct BenchRow {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string algorithm;
  std::int64_t value = 0;
  std::optional<std::int64_t> optimum;
  double bound = 0;  // guarantee on value / optimum; 0 when not applicable
  double wall_ms = 0;

  std::optional<double> ratio() const {
    if (!optimum) return std::nullopt;
    if (*optimum == 0) return value == 0 ? 1.0 : std::numeric_limits<double>::infinity();
    return static_cast<double>(value) / static_cast<double>(*optimum);
  }

  bool within_bound() const {
    auto r = ratio();
    return bound <= 0 || !r || *r <= bound + 1e-12;
  }
};

struct BenchReport {
  std::vector<BenchRow> rows;

  std::size_t violations() const {
    std::size_t v = 0;
    for (const auto& r : rows) v += !r.within_bound();
    return v;
  }
};

inline std::string format_double(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

inline void write_tsv(std::ostream& out, const BenchReport& report) {
  out << "instance\tn\tm\talgorithm\tvalue\toptimum\tratio\tbound\twall_ms\n";
  std::map<std::string, std::pair<std::size_t, double>> worst;
  for (const auto& r : report.rows) {
    auto ratio = r.ratio();
    out << r.instance << '\t' << r.n << '\t' << r.m << '\t' << r.algorithm << '\t' << r.value
        << '\t' << (r.optimum ? std::to_string(*r.optimum) : "") << '\t'
        << (ratio ? format_double(*ratio) : "") << '\t' << (r.bound > 0 ? format_double(r.bound) : "")
        << '\t' << format_double(r.wall_ms, 4) << '\n';
    auto& w = worst[r.algorithm];
    ++w.first;
    if (ratio) w.second = std::max(w.second, *ratio);
  }
  for (const auto& [alg, w] : worst)
    out << "# " << alg << ": rows=" << w.first << " max_ratio=" << format_double(w.second) << '\n';
  out << "# bound_violations=" << report.violations() << '\n';
}

template <class F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Ratio suites
// ---------------------------------------------------------------------------

inline BenchReport bench_nwfs_approx(std::size_t count, std::uint64_t seed, std::size_t max_n = 8,
                                     std::size_t max_m = 6, Time max_op = 9) {
  Rng rng(seed);
  BenchReport rep;
  for (std::size_t i = 0; i < count; ++i) {
    auto inst = gen_random_flowshop(uniform_size(rng, 1, max_n), uniform_size(rng, 1, max_m), max_op, rng);
    BenchRow row{"nwfs-" + std::to_string(i), inst.size(), inst.machines(), "log-m-approx"};
    ApproxRun run;
    row.wall_ms = time_ms([&] { run = nwfs_log_m_approx(inst); });
    row.value = run.makespan;
    row.optimum = brute_force_nwfs(inst).makespan;
    row.bound = static_cast<double>(ceil_log2(inst.machines()) + 1);
    rep.rows.push_back(row);
  }
  return rep;
}

inline BenchReport bench_atsp_fgm(std::size_t count, std::uint64_t seed, std::size_t max_n = 10,
                                  Weight max_w = 20) {
  Rng rng(seed);
  BenchReport rep;
  for (std::size_t i = 0; i < count; ++i) {
    auto g = gen_random_semimetric(uniform_size(rng, 2, max_n), max_w, rng);
    BenchRow row{"atsp-" + std::to_string(i), g.size(), 0, "fgm"};
    Tour t;
    row.wall_ms = time_ms([&] { t = fgm_atsp(g); });
    row.value = tour_cost(g, t);
    row.optimum = held_karp_tour(g).cost;
    row.bound = static_cast<double>(std::max<std::size_t>(1, ceil_log2(g.size())));
    rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Acceptance criteria
// ---------------------------------------------------------------------------

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  std::string summary;
  std::vector<std::string> failures;  // first few, for diagnosis
  std::vector<std::string> notes;
  std::vector<BenchRow> rows;

  std::size_t failure_count = 0;

  void fail(std::string why) {
    passed = false;
    if (++failure_count <= 12) failures.push_back(std::move(why));
  }
};

inline constexpr std::uint64_t kAcceptanceSeed = 0x6e77667341ULL;

inline CriterionResult criterion_delta_oracle(std::uint64_t seed = kAcceptanceSeed + 1) {
  CriterionResult r{1, "makespan formula equals event simulation"};
  Rng rng(seed);
  std::size_t checked = 0;
  for (int i = 0; i < 1000; ++i) {
    auto inst = gen_random_flowshop(uniform_size(rng, 1, 8), uniform_size(rng, 1, 6), 9, rng);
    for (int rep = 0; rep < 2; ++rep) {
      JobPermutation sigma{random_permutation(inst.size(), rng)};
      Time formula = makespan(inst, sigma);
      Schedule s = simulate_schedule(inst, sigma);
      ++checked;
      if (formula != s.length)
        r.fail("instance " + std::to_string(i) + ": formula " + std::to_string(formula) +
               " vs simulation " + std::to_string(s.length));
      if (!schedule_is_feasible(inst, s)) r.fail("instance " + std::to_string(i) + ": infeasible schedule");
    }
  }
  r.summary = std::to_string(checked) + " (instance, order) pairs over 1000 instances";
  return r;
}

inline CriterionResult criterion_triangle(std::uint64_t seed = kAcceptanceSeed + 2) {
  CriterionResult r{2, "delta satisfies the triangle inequality"};
  std::size_t exhaustive = 0, violations = 0;
  for (std::size_t m = 1; m <= 3; ++m) {
    std::vector<Job> all;
    std::size_t total = 1;
    for (std::size_t q = 0; q < m; ++q) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Time> ops(m);
      std::size_t c = code;
      for (auto& t : ops) {
        t = static_cast<Time>(c % 4);
        c /= 4;
      }
      all.emplace_back(std::move(ops));
    }
    WeightMatrix d(all.size());
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = 0; b < all.size(); ++b) d.set(a, b, delta(all[a], all[b]));
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = 0; b < all.size(); ++b)
        for (std::size_t c = 0; c < all.size(); ++c) {
          ++exhaustive;
          if (d(a, c) > d(a, b) + d(b, c)) {
            ++violations;
            r.fail("m=" + std::to_string(m) + " triple (" + std::to_string(a) + "," +
                   std::to_string(b) + "," + std::to_string(c) + ")");
          }
        }
  }
  Rng rng(seed);
  for (int i = 0; i < 10000; ++i) {
    auto inst = gen_random_flowshop(3, uniform_size(rng, 4, 12), 9, rng);
    const Job &a = inst.job(0), &b = inst.job(1), &c = inst.job(2);
    if (delta(a, c) > delta(a, b) + delta(b, c)) {
      ++violations;
      r.fail("random triple " + std::to_string(i));
    }
  }
  r.summary = std::to_string(exhaustive) + " exhaustive triples (m<=3, ops<=3) + 10000 random; " +
              std::to_string(violations) + " violations";
  return r;
}

inline CriterionResult criterion_reduction_optimum(std::uint64_t seed = kAcceptanceSeed + 3) {
  CriterionResult r{3, "flowshop optimum equals ATSP optimum of the dummy-job reduction"};
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    auto inst = gen_random_flowshop(uniform_size(rng, 1, 7), uniform_size(rng, 1, 4), 9, rng);
    BenchRow row{"c3-" + std::to_string(i), inst.size(), inst.machines(), "held-karp-reduction"};
    Time brute = 0;
    row.wall_ms = time_ms([&] {
      brute = brute_force_nwfs(inst).makespan;
      row.value = held_karp_tour(nwfs_to_atsp(inst).matrix).cost;
    });
    row.optimum = brute;
    row.bound = 1;
    if (row.value != brute)
      r.fail("instance " + std::to_string(i) + ": brute " + std::to_string(brute) + " vs tour " +
             std::to_string(row.value));
    r.rows.push_back(row);
  }
  r.summary = "200 instances, n<=7, m<=4";
  return r;
}

inline CriterionResult criterion_embedding(std::uint64_t seed = kAcceptanceSeed + 4) {
  CriterionResult r{4, "semimetric embedding realises d(u,v)+1 exactly"};
  Rng rng(seed);
  std::size_t pairs = 0;
  for (int i = 0; i < 200; ++i) {
    std::size_t n = uniform_size(rng, 2, 8);
    Weight max_w = static_cast<Weight>(uniform_size(rng, 1, 12));
    auto g = gen_random_semimetric(n, max_w, rng);
    auto jobs = embed_semimetric(g);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        ++pairs;
        if (delta(jobs[u], jobs[v]) != g(u, v) + 1)
          r.fail("instance " + std::to_string(i) + " pair (" + std::to_string(u) + "," +
                 std::to_string(v) + ")");
      }
  }
  r.summary = std::to_string(pairs) + " ordered pairs over 200 semimetrics, n<=8, D<=12";
  return r;
}

inline CriterionResult criterion_gadgets() {
  CriterionResult r{5, "gadget jobs: self-delta 1, cross-delta D"};
  std::size_t pairs = 0;
  for (std::size_t count = 1; count <= 8; ++count)
    for (std::size_t scale = 1; scale <= 6; ++scale) {
      auto g = gadget_jobs(count, scale);
      if (g.size() != count) r.fail("wrong gadget count");
      for (std::size_t a = 0; a < count; ++a) {
        if (g[a].machines() != g[0].machines() || job_length(g[a]) != job_length(g[0]))
          r.fail("N=" + std::to_string(count) + " D=" + std::to_string(scale) + ": unequal sizes");
        for (std::size_t b = 0; b < count; ++b) {
          ++pairs;
          Time want = a == b ? 1 : static_cast<Time>(scale);
          if (delta(g[a], g[b]) != want)
            r.fail("N=" + std::to_string(count) + " D=" + std::to_string(scale) + " pair (" +
                   std::to_string(a) + "," + std::to_string(b) + ")");
        }
      }
    }
  r.summary = std::to_string(pairs) + " ordered pairs, N<=8, D<=6";
  return r;
}

inline CriterionResult criterion_split(std::uint64_t seed = kAcceptanceSeed + 6) {
  CriterionResult r{6, "vertex split preserves the optimum; path repair never increases cost"};
  Rng rng(seed);
  std::size_t repairs = 0;
  for (int i = 0; i < 100; ++i) {
    auto g = gen_random_semimetric(uniform_size(rng, 3, 7), 12, rng);
    Vertex v = uniform_size(rng, 0, g.size() - 1);
    auto split = atsp_to_atspp(g, v);
    Weight tour = held_karp_tour(g).cost;
    auto path = held_karp_path(split.matrix, std::nullopt);
    if (tour != path.cost)
      r.fail("instance " + std::to_string(i) + ": tour " + std::to_string(tour) + " vs path " +
             std::to_string(path.cost));
    if (!is_semimetric(split.matrix)) r.fail("instance " + std::to_string(i) + ": split is not a semimetric");
    std::vector<HamPath> candidates{path.path};
    for (int k = 0; k < 5; ++k) candidates.push_back(HamPath{random_permutation(split.matrix.size(), rng)});
    for (const auto& p : candidates) {
      ++repairs;
      try {
        auto rep = repair_path(split, p);
        if (tour_cost(g, rep.tour) > rep.input_cost)
          r.fail("instance " + std::to_string(i) + ": back-mapped tour costs more than the path");
      } catch (const InvariantError& e) {
        r.fail("instance " + std::to_string(i) + ": " + e.what());
      }
    }
  }
  r.summary = "100 semimetrics, n<=7; " + std::to_string(repairs) + " path repairs";
  return r;
}

inline CriterionResult criterion_replication(std::uint64_t seed = kAcceptanceSeed + 7) {
  CriterionResult r{7, "replicated optimum equals N times the base optimum"};
  Rng rng(seed);
  std::size_t cases = 0;
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t copies = 1; copies <= 3; ++copies)
      for (int rep = 0; rep < 5; ++rep) {
        auto g = gen_random_semimetric(n, 9, rng);
        auto tr = replicate_copies(g, copies);
        Weight base = held_karp_tour(g).cost;
        auto big = held_karp_tour(tr.replicated);
        ++cases;
        if (big.cost != static_cast<Weight>(copies) * base)
          r.fail("n=" + std::to_string(n) + " N=" + std::to_string(copies) + ": " +
                 std::to_string(big.cost) + " vs " + std::to_string(copies) + "*" + std::to_string(base));
        if (tour_cost(g, backmap_replication(tr, big.tour)) != base)
          r.fail("n=" + std::to_string(n) + " N=" + std::to_string(copies) +
                 ": back-map of the optimum is not optimal");
      }
  r.summary = std::to_string(cases) + " instances, n<=5, N<=3";
  return r;
}

inline CriterionResult criterion_log_m_guarantee(std::uint64_t seed = kAcceptanceSeed + 8) {
  CriterionResult r{8, "O(log m) approximation within (ceil(log2 m)+1) of optimum"};
  Rng rng(seed);
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    auto inst = gen_random_flowshop(uniform_size(rng, 1, 8), uniform_size(rng, 1, 6), 9, rng);
    BenchRow row{"c8-" + std::to_string(i), inst.size(), inst.machines(), "log-m-approx"};
    ApproxRun run;
    try {
      row.wall_ms = time_ms([&] { run = nwfs_log_m_approx(inst); });
    } catch (const std::exception& e) {
      r.fail("instance " + std::to_string(i) + ": " + e.what());
      continue;
    }
    Time opt = brute_force_nwfs(inst).makespan;
    row.value = run.makespan;
    row.optimum = opt;
    row.bound = static_cast<double>(run.level_limit + 1);
    if (run.makespan > static_cast<Time>(run.level_limit + 1) * opt)
      r.fail("instance " + std::to_string(i) + ": makespan " + std::to_string(run.makespan) +
             " > " + std::to_string(run.level_limit + 1) + "*" + std::to_string(opt));
    std::size_t previous = inst.size() + 1;
    for (std::size_t l = 0; l < run.levels.size(); ++l) {
      const auto& lvl = run.levels[l];
      if (lvl.cost > opt)
        r.fail("instance " + std::to_string(i) + " level " + std::to_string(l) + ": cover cost " +
               std::to_string(lvl.cost) + " > optimum " + std::to_string(opt));
      if (lvl.vertices.size() > previous)
        r.fail("instance " + std::to_string(i) + ": vertex count grew");
      if (2 * lvl.representatives.size() > lvl.vertices.size())
        r.fail("instance " + std::to_string(i) + " level " + std::to_string(l) + ": no halving");
      previous = lvl.vertices.size();
    }
    if (run.levels.size() > run.level_limit) r.fail("instance " + std::to_string(i) + ": too many levels");
    if (!run.single_cycle_exit &&
        static_cast<Time>(inst.machines()) * run.survivor_length_sum > run.total_length_sum)
      r.fail("instance " + std::to_string(i) + ": survivor length bound violated");
    worst = std::max(worst, row.ratio().value_or(0));
    r.rows.push_back(row);
  }
  r.summary = "500 instances, n<=8, m<=6; worst ratio " + format_double(worst);
  return r;
}

struct HardnessCase {
  std::string id;
  WeightMatrix graph;
  Rational epsilon;
  HardnessInstance instance;
  TourSolution graph_optimum;
  std::optional<PathSolution> path_optimum;  // of the path instance, when small enough
};

inline constexpr std::size_t kPathOracleLimit = 18;

inline std::vector<HardnessCase> make_hardness_cases(std::uint64_t seed = kAcceptanceSeed + 9) {
  Rng rng(seed);
  std::vector<HardnessCase> out;
  for (int i = 0; i < 20; ++i) {
    auto g = gen_random_semimetric(uniform_size(rng, 3, 5), 9, rng);
    auto opt = held_karp_tour(g);
    for (Rational eps : {Rational(1), Rational(1, 2)}) {
      HardnessCase c{"c9-" + std::to_string(i) + "-eps" + to_string(eps), g, eps,
                     build_hardness_instance(g, eps), opt, std::nullopt};
      if (c.instance.trace.path_vertices <= kPathOracleLimit)
        c.path_optimum = held_karp_path(c.instance.trace.path_instance, std::nullopt, kPathOracleLimit);
      out.push_back(std::move(c));
    }
  }
  return out;
}

inline constexpr std::size_t kHardnessJobLimit = 14;

inline CriterionResult criterion_hardness_round_trip(const std::vector<HardnessCase>& cases) {
  CriterionResult r{9, "hardness construction: size, optimum identity, round trip"};
  std::size_t oversized = 0, structure_ok = 0, achievable_ok = 0, canonical_optimal = 0;
  std::size_t max_jobs = 0, min_jobs = std::numeric_limits<std::size_t>::max();
  for (const auto& c : cases) {
    const auto& tr = c.instance.trace;
    const auto& fs = c.instance.flowshop;
    max_jobs = std::max(max_jobs, fs.size());

    // Pairwise job distances reproduce the joined instance plus one.
    bool structure = true;
    for (std::size_t a = 0; a < fs.size() && structure; ++a)
      for (std::size_t b = 0; b < fs.size(); ++b)
        if (a != b && delta(fs.job(a), fs.job(b)) != tr.joined_weight(a, b) + 1) {
          structure = false;
          break;
        }
    structure_ok += structure;
    if (!structure) r.fail(c.id + ": job distances do not match the joined instance");

    if (fs.size() > kHardnessJobLimit) {
      ++oversized;
      min_jobs = std::min(min_jobs, fs.size());
    } else {
      auto exact = exact_nwfs(fs, kHardnessJobLimit + 1);
      if (!c.path_optimum) {
        r.fail(c.id + ": path optimum unavailable");
      } else if (exact.makespan != tr.predicted_optimum(c.path_optimum->cost)) {
        r.fail(c.id + ": optimum " + std::to_string(exact.makespan) + " vs closed form " +
               std::to_string(tr.predicted_optimum(c.path_optimum->cost)));
      }
      auto back = extract_tour_detailed(tr, exact.permutation);
      if (back.cost != c.graph_optimum.cost)
        r.fail(c.id + ": round trip gives " + std::to_string(back.cost) + ", optimum " +
               std::to_string(c.graph_optimum.cost));
    }

    // Copy-by-copy order along an optimal path: reaches the closed form, and
    // maps back to a tour of the original instance.
    if (c.path_optimum) {
      auto sigma = copywise_permutation(tr, c.path_optimum->path);
      Time ms = makespan(fs, sigma);
      if (ms == tr.predicted_optimum(c.path_optimum->cost)) ++achievable_ok;
      else r.fail(c.id + ": copywise order misses the closed form");
      auto back = extract_tour_detailed(tr, sigma);
      if (back.cost == c.graph_optimum.cost) ++canonical_optimal;
      else if (ms == tr.predicted_optimum(c.path_optimum->cost))
        r.fail(c.id + ": optimal copywise order maps back to cost " + std::to_string(back.cost) +
               " vs optimum " + std::to_string(c.graph_optimum.cost));
    }
  }
  if (oversized > 0)
    r.fail(std::to_string(oversized) + " of " + std::to_string(cases.size()) +
           " constructions exceed the " + std::to_string(kHardnessJobLimit) + "-job limit (" +
           std::to_string(min_jobs) + " to " + std::to_string(max_jobs) +
           " jobs); Held-Karp optimum not computable");
  r.summary = std::to_string(cases.size()) + " constructions; " + std::to_string(oversized) +
              " exceed the " + std::to_string(kHardnessJobLimit) + "-job limit (largest " +
              std::to_string(max_jobs) + " jobs); job-distance structure exact on " +
              std::to_string(structure_ok) + "; closed form reached on " +
              std::to_string(achievable_ok) + "; copywise optimum maps to an optimal tour on " +
              std::to_string(canonical_optimal);
  return r;
}

inline CriterionResult criterion_approximation_transfer(const std::vector<HardnessCase>& cases) {
  CriterionResult r{10, "approximation transfer through the hardness construction"};
  double worst_slack = 0;
  for (const auto& c : cases) {
    const auto& tr = c.instance.trace;
    if (!c.path_optimum) {
      r.fail(c.id + ": path optimum unavailable");
      continue;
    }
    ApproxRun run;
    TourExtraction back;
    BenchRow row{c.id, c.instance.flowshop.size(), c.instance.flowshop.machines(), "log-m-approx+extract"};
    try {
      row.wall_ms = time_ms([&] {
        run = nwfs_log_m_approx(c.instance.flowshop);
        back = extract_tour_detailed(tr, run.permutation);
      });
    } catch (const std::exception& e) {
      r.fail(c.id + ": " + e.what());
      continue;
    }
    const Time flow_opt = tr.predicted_optimum(c.path_optimum->cost);
    const Weight graph_opt = c.graph_optimum.cost;
    row.value = back.cost;
    row.optimum = graph_opt;
    const double flow_ratio = static_cast<double>(run.makespan) / static_cast<double>(flow_opt);
    const double factor = 1.0 + 10.0 * boost::rational_cast<double>(c.epsilon);
    row.bound = flow_ratio * factor;
    // back.cost / graph_opt <= (makespan / flow_opt) * (1 + 10 eps), exactly.
    const auto p = c.epsilon.numerator(), q = c.epsilon.denominator();
    __int128 lhs = static_cast<__int128>(back.cost) * flow_opt * q;
    __int128 rhs = static_cast<__int128>(run.makespan) * graph_opt * (q + 10 * p);
    if (lhs > rhs)
      r.fail(c.id + ": tour ratio " + format_double(row.ratio().value_or(0)) + " exceeds " +
             format_double(row.bound));
    if (graph_opt > 0)
      worst_slack = std::max(worst_slack, *row.ratio() / row.bound);
    r.rows.push_back(row);
    r.notes.push_back(c.id + ": flowshop ratio " + format_double(flow_ratio) + ", tour ratio " +
                      format_double(row.ratio().value_or(0)));
  }
  r.summary = std::to_string(r.rows.size()) + " runs; max (tour ratio / allowed) = " + format_double(worst_slack);
  return r;
}

// Runs the selected criteria (all when `only` is empty) in order.
inline std::vector<CriterionResult> run_acceptance(const std::set<int>& only = {}) {
  auto want = [&](int id) { return only.empty() || only.count(id) > 0; };
  std::vector<CriterionResult> out;
  if (want(1)) out.push_back(criterion_delta_oracle());
  if (want(2)) out.push_back(criterion_triangle());
  if (want(3)) out.push_back(criterion_reduction_optimum());
  if (want(4)) out.push_back(criterion_embedding());
  if (want(5)) out.push_back(criterion_gadgets());
  if (want(6)) out.push_back(criterion_split());
  if (want(7)) out.push_back(criterion_replication());
  if (want(8)) out.push_back(criterion_log_m_guarantee());
  if (want(9) || want(10)) {
    auto cases = make_hardness_cases();
    if (want(9)) out.push_back(criterion_hardness_round_trip(cases));
    if (want(10)) out.push_back(criterion_approximation_transfer(cases));
  }
  return out;
}

inline void print_criterion(std::ostream& out, const CriterionResult& r, bool verbose = false) {
  out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << " -- " << r.summary << '\n';
  for (const auto& f : r.failures) out << "      failure: " << f << '\n';
  if (r.failure_count > r.failures.size())
    out << "      ... " << r.failure_count - r.failures.size() << " more failures\n";
  if (verbose)
    for (const auto& n : r.notes) out << "      note: " << n << '\n';
}

}  // namespace nwfs
