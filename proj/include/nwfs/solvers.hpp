#pragma once

// Exact oracles (Held-Karp, permutation enumeration), the exact assignment
// based cycle cover, the repeated-cycle-cover ATSP heuristic, and the
// O(log m) no-wait flowshop approximation built on top of it.

#include "nwfs/common.hpp"
#include "nwfs/flowshop.hpp"
#include "nwfs/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

namespace nwfs {

inline constexpr std::size_t kHeldKarpLimit = 16;
inline constexpr std::size_t kBruteForceLimit = 9;

// ---------------------------------------------------------------------------
// Assignment and cycle covers
// ---------------------------------------------------------------------------

// Exact minimum-cost perfect assignment (Hungarian method with potentials).
// Returns row -> column.
inline std::vector<std::size_t> solve_assignment(const std::vector<Weight>& cost, std::size_t n) {
  if (cost.size() != n * n) throw StructuralError("assignment: cost matrix is not n x n");
  constexpr Weight inf = std::numeric_limits<Weight>::max() / 4;
  std::vector<Weight> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<Weight> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      std::size_t i0 = p[j0], j1 = 0;
      Weight step = inf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Weight cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < step) {
          step = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += step;
          v[j] -= step;
        } else {
          minv[j] -= step;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

struct CycleCover {
  std::vector<Vertex> successor;

  // Cycles, each starting at its smallest vertex, ordered by that vertex.
  std::vector<std::vector<Vertex>> cycles() const {
    std::vector<char> seen(successor.size(), 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < successor.size(); ++s) {
      if (seen[s]) continue;
      std::vector<Vertex> cyc;
      for (Vertex v = s; !seen[v]; v = successor[v]) {
        seen[v] = 1;
        cyc.push_back(v);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  Weight cost(const WeightMatrix& m) const {
    Weight c = 0;
    for (Vertex v = 0; v < successor.size(); ++v) c = checked_add(c, m(v, successor[v]));
    return c;
  }

  bool is_valid() const {
    std::vector<char> hit(successor.size(), 0);
    for (Vertex v = 0; v < successor.size(); ++v) {
      Vertex s = successor[v];
      if (s >= successor.size() || s == v || hit[s]) return false;
      hit[s] = 1;
    }
    return true;
  }
};

// Cycles of length >= 2 only: the diagonal is priced above any assignment that
// avoids it, so the optimum is a fixed-point-free permutation.
inline CycleCover min_cycle_cover(const WeightMatrix& m) {
  const std::size_t n = m.size();
  if (n < 2) throw StructuralError("min_cycle_cover needs at least two vertices");
  Weight forbidden = checked_add(checked_mul(static_cast<Weight>(n), m.max_weight()), 1);
  checked_mul(forbidden, static_cast<Weight>(2 * n + 2));
  std::vector<Weight> cost(n * n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) cost[a * n + b] = a == b ? forbidden : m(a, b);
  CycleCover cc{solve_assignment(cost, n)};
  if (!cc.is_valid()) throw InvariantError("assignment produced a fixed point");
  return cc;
}

// ---------------------------------------------------------------------------
// Euler circuits
// ---------------------------------------------------------------------------

struct Arc {
  Vertex from, to;
};

// Hierholzer traversal of a directed multigraph; at every vertex the unused arc
// with the smallest head is taken first. Throws if the arcs do not form a
// single balanced connected component containing `start`.
inline std::vector<Vertex> euler_circuit(std::size_t n, std::vector<Arc> arcs, Vertex start) {
  std::vector<std::vector<Vertex>> out(n);
  std::vector<int> balance(n, 0);
  for (const Arc& a : arcs) {
    if (a.from >= n || a.to >= n) throw StructuralError("euler_circuit: vertex out of range");
    out[a.from].push_back(a.to);
    ++balance[a.from];
    --balance[a.to];
  }
  for (int b : balance)
    if (b != 0) throw InvariantError("euler_circuit: arc multiset is not balanced");
  for (auto& adj : out) std::sort(adj.begin(), adj.end());
  std::vector<std::size_t> next(n, 0);
  std::vector<Vertex> stack{start}, circuit;
  while (!stack.empty()) {
    Vertex v = stack.back();
    if (next[v] < out[v].size()) {
      stack.push_back(out[v][next[v]++]);
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  if (circuit.size() != arcs.size() + 1)
    throw InvariantError("euler_circuit: arc multiset is not connected");
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

// ---------------------------------------------------------------------------
// Exact oracles
// ---------------------------------------------------------------------------

struct TourSolution {
  Tour tour;
  Weight cost = 0;
};

struct PathSolution {
  HamPath path;
  Weight cost = 0;
};

namespace detail {

// dp[mask][v]: cheapest path that starts at an allowed start, covers `mask`
// and ends at v.
struct SubsetDp {
  std::size_t n;
  std::vector<Weight> dp;
  std::vector<std::uint8_t> parent;
  static constexpr Weight inf = std::numeric_limits<Weight>::max() / 4;

  SubsetDp(const WeightMatrix& m, std::span<const Vertex> starts) : n(m.size()) {
    const std::size_t full = std::size_t{1} << n;
    dp.assign(full * n, inf);
    parent.assign(full * n, 0xff);
    for (Vertex s : starts) dp[(std::size_t{1} << s) * n + s] = 0;
    for (std::size_t mask = 1; mask < full; ++mask) {
      for (Vertex v = 0; v < n; ++v) {
        Weight here = dp[mask * n + v];
        if (here >= inf || !(mask >> v & 1)) continue;
        for (Vertex w = 0; w < n; ++w) {
          if (mask >> w & 1) continue;
          std::size_t nm = mask | (std::size_t{1} << w);
          Weight cand = here + m(v, w);
          if (cand < dp[nm * n + w]) {
            dp[nm * n + w] = cand;
            parent[nm * n + w] = static_cast<std::uint8_t>(v);
          }
        }
      }
    }
  }

  Weight at(std::size_t mask, Vertex v) const { return dp[mask * n + v]; }

  std::vector<Vertex> unwind(Vertex end) const {
    std::vector<Vertex> order;
    std::size_t mask = (std::size_t{1} << n) - 1;
    Vertex v = end;
    while (true) {
      order.push_back(v);
      std::uint8_t p = parent[mask * n + v];
      if (p == 0xff) break;
      mask &= ~(std::size_t{1} << v);
      v = p;
    }
    std::reverse(order.begin(), order.end());
    return order;
  }
};

inline void check_limit(const WeightMatrix& m, std::size_t limit) {
  if (m.size() > limit)
    throw LimitError("held_karp: " + std::to_string(m.size()) + " vertices exceeds the limit of " +
                     std::to_string(limit));
  if (limit > 20) throw LimitError("held_karp: limits above 20 vertices are not supported");
}

}  // namespace detail

inline TourSolution held_karp_tour(const WeightMatrix& m, std::size_t limit = kHeldKarpLimit) {
  detail::check_limit(m, limit);
  const std::size_t n = m.size();
  if (n == 1) return {Tour{{0}}, 0};
  Vertex start = 0;
  detail::SubsetDp dp(m, std::span<const Vertex>(&start, 1));
  const std::size_t full = (std::size_t{1} << n) - 1;
  Weight best = detail::SubsetDp::inf;
  Vertex end = 1;
  for (Vertex v = 1; v < n; ++v) {
    Weight c = dp.at(full, v) + m(v, 0);
    if (c < best) {
      best = c;
      end = v;
    }
  }
  return {Tour{dp.unwind(end)}, best};
}

// Free endpoints unless `endpoints` designates (source, sink).
inline PathSolution held_karp_path(const WeightMatrix& m,
                                   std::optional<std::pair<Vertex, Vertex>> endpoints,
                                   std::size_t limit = kHeldKarpLimit) {
  detail::check_limit(m, limit);
  const std::size_t n = m.size();
  if (n < 2) throw StructuralError("held_karp: a Hamiltonian path needs two distinct endpoints");
  std::vector<Vertex> starts;
  if (endpoints) {
    if (endpoints->first >= n || endpoints->second >= n || endpoints->first == endpoints->second)
      throw StructuralError("held_karp: invalid endpoints");
    starts.push_back(endpoints->first);
  } else {
    starts.resize(n);
    std::iota(starts.begin(), starts.end(), Vertex{0});
  }
  detail::SubsetDp dp(m, starts);
  const std::size_t full = (std::size_t{1} << n) - 1;
  Weight best = detail::SubsetDp::inf;
  Vertex end = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (endpoints && v != endpoints->second) continue;
    if (dp.at(full, v) < best) {
      best = dp.at(full, v);
      end = v;
    }
  }
  return {HamPath{dp.unwind(end)}, best};
}

struct ExactSolution {
  InstanceKind kind;
  std::vector<Vertex> order;
  Weight cost = 0;
};

inline ExactSolution held_karp(const WeightMatrix& m, std::size_t limit = kHeldKarpLimit) {
  if (m.kind() == InstanceKind::atsp) {
    auto s = held_karp_tour(m, limit);
    return {InstanceKind::atsp, std::move(s.tour.order), s.cost};
  }
  auto s = held_karp_path(m, m.endpoints(), limit);
  return {InstanceKind::atspp, std::move(s.path.order), s.cost};
}

struct FlowshopSolution {
  JobPermutation permutation;
  Time makespan = 0;
};

// Lexicographically first optimal permutation.
inline FlowshopSolution brute_force_nwfs(const FlowshopInstance& inst,
                                         std::size_t limit = kBruteForceLimit) {
  if (inst.size() > limit)
    throw LimitError("brute_force_nwfs: " + std::to_string(inst.size()) +
                     " jobs exceeds the limit of " + std::to_string(limit));
  JobPermutation sigma;
  sigma.order.resize(inst.size());
  std::iota(sigma.order.begin(), sigma.order.end(), std::size_t{0});
  FlowshopSolution best{sigma, makespan(inst, sigma)};
  while (std::next_permutation(sigma.order.begin(), sigma.order.end())) {
    Time c = makespan(inst, sigma);
    if (c < best.makespan) best = {sigma, c};
  }
  return best;
}

// Optimum through the ATSP reduction; usable for up to limit - 1 jobs.
inline FlowshopSolution exact_nwfs(const FlowshopInstance& inst,
                                   std::size_t limit = kHeldKarpLimit) {
  auto red = nwfs_to_atsp(inst);
  auto sol = held_karp_tour(red.matrix, limit);
  auto sigma = atsp_tour_to_permutation(red.trace, sol.tour);
  return {sigma, makespan(inst, sigma)};
}

// ---------------------------------------------------------------------------
// Repeated cycle covers
// ---------------------------------------------------------------------------

struct CoverLevel {
  std::vector<Vertex> vertices;               // ascending, ids of the full graph
  CycleCover cover;                           // over positions in `vertices`
  std::vector<std::vector<Vertex>> cycles;    // full-graph ids
  std::vector<Vertex> representatives;        // ascending, one per cycle
  Weight cost = 0;

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (std::size_t a = 0; a < vertices.size(); ++a)
      out.push_back({vertices[a], vertices[cover.successor[a]]});
    return out;
  }
};

// One round: min cycle cover on the induced subgraph, then one representative
// per cycle minimizing `key` (ties to the lowest index).
inline CoverLevel cover_level(const WeightMatrix& g, std::vector<Vertex> vertices,
                              const std::function<Time(Vertex)>& key) {
  CoverLevel level;
  level.vertices = std::move(vertices);
  WeightMatrix sub = g.induced(level.vertices);
  level.cover = min_cycle_cover(sub);
  level.cost = level.cover.cost(sub);
  for (const auto& local : level.cover.cycles()) {
    std::vector<Vertex> cyc;
    Vertex rep = level.vertices[local.front()];
    for (Vertex x : local) {
      Vertex v = level.vertices[x];
      cyc.push_back(v);
      Time kv = key(v), kr = key(rep);
      if (kv < kr || (kv == kr && v < rep)) rep = v;
    }
    level.cycles.push_back(std::move(cyc));
    level.representatives.push_back(rep);
  }
  std::sort(level.representatives.begin(), level.representatives.end());
  return level;
}

inline std::vector<Vertex> hamiltonian_on_survivors(std::vector<Vertex> survivors) {
  if (survivors.size() < 2)
    throw StructuralError("hamiltonian_on_survivors needs at least two vertices");
  std::sort(survivors.begin(), survivors.end());
  return survivors;
}

inline std::vector<Arc> cycle_arcs(std::span<const Vertex> cycle) {
  std::vector<Arc> out;
  for (std::size_t k = 0; k < cycle.size(); ++k)
    out.push_back({cycle[k], cycle[(k + 1) % cycle.size()]});
  return out;
}

struct FgmRun {
  std::vector<CoverLevel> levels;
  std::vector<Vertex> walk;
  Tour tour;
  Weight cost = 0;
};

// Cover, keep the lowest index of every cycle, repeat until a single cycle;
// the union of all covers is Eulerian and connected, and is shortcut to a tour.
inline FgmRun fgm_atsp_run(const WeightMatrix& m) {
  const std::size_t n = m.size();
  if (n < 2) throw StructuralError("fgm_atsp needs at least two vertices");
  FgmRun run;
  std::vector<Vertex> alive(n);
  std::iota(alive.begin(), alive.end(), Vertex{0});
  std::vector<Arc> arcs;
  while (alive.size() > 1) {
    run.levels.push_back(cover_level(m, alive, [](Vertex) { return Time{0}; }));
    const CoverLevel& lvl = run.levels.back();
    auto a = lvl.arcs();
    arcs.insert(arcs.end(), a.begin(), a.end());
    if (lvl.representatives.size() * 2 > alive.size())
      throw InvariantError("fgm_atsp: vertex count did not halve");
    alive = lvl.representatives;
  }
  run.walk = euler_circuit(n, arcs, 0);
  run.tour = shortcut(m, run.walk);
  run.cost = tour_cost(m, run.tour);
  return run;
}

inline Tour fgm_atsp(const WeightMatrix& m) { return fgm_atsp_run(m).tour; }

// ---------------------------------------------------------------------------
// O(log m) approximation for no-wait flowshop
// ---------------------------------------------------------------------------

struct ApproxRun {
  std::size_t level_limit = 0;                 // ceil(log2 m)
  std::vector<CoverLevel> levels;
  bool single_cycle_exit = false;
  std::vector<Vertex> survivors;               // empty on single-cycle exit
  std::vector<Vertex> survivor_cycle;          // H', survivors in index order
  Weight survivor_cycle_cost = 0;
  Time survivor_length_sum = 0;
  Time total_length_sum = 0;
  Weight union_cost = 0;
  std::vector<Vertex> walk;
  Tour tour;                                   // over the reduction's vertices
  Weight tour_cost = 0;
  JobPermutation permutation;
  Time makespan = 0;
};

inline ApproxRun nwfs_log_m_approx(const FlowshopInstance& inst) {
  auto red = nwfs_to_atsp(inst);
  const WeightMatrix& g = red.matrix;
  const std::size_t n = g.size();
  std::vector<Time> length(n, 0);
  for (std::size_t j = 0; j < inst.size(); ++j) length[j + 1] = job_length(inst.job(j));

  ApproxRun run;
  run.level_limit = ceil_log2(inst.machines());
  for (Time l : length) run.total_length_sum = checked_add(run.total_length_sum, l);

  std::vector<Vertex> alive(n);
  std::iota(alive.begin(), alive.end(), Vertex{0});
  std::vector<Arc> arcs;
  auto key = [&length](Vertex v) { return length[v]; };

  for (std::size_t i = 0; i < run.level_limit; ++i) {
    run.levels.push_back(cover_level(g, alive, key));
    const CoverLevel& lvl = run.levels.back();
    auto a = lvl.arcs();
    arcs.insert(arcs.end(), a.begin(), a.end());
    run.union_cost = checked_add(run.union_cost, lvl.cost);
    if (lvl.representatives.size() * 2 > alive.size())
      throw InvariantError("nwfs_log_m_approx: vertex count did not halve");
    alive = lvl.representatives;
    if (lvl.cycles.size() == 1) {
      run.single_cycle_exit = true;
      break;
    }
  }

  if (!run.single_cycle_exit) {
    run.survivors = alive;
    run.survivor_cycle = hamiltonian_on_survivors(alive);
    auto h = cycle_arcs(run.survivor_cycle);
    for (const Arc& arc : h) run.survivor_cycle_cost = checked_add(run.survivor_cycle_cost, g(arc.from, arc.to));
    for (Vertex v : alive) run.survivor_length_sum = checked_add(run.survivor_length_sum, length[v]);
    if (run.survivor_cycle_cost > run.survivor_length_sum)
      throw InvariantError("nwfs_log_m_approx: survivor cycle longer than survivor job lengths");
    arcs.insert(arcs.end(), h.begin(), h.end());
    run.union_cost = checked_add(run.union_cost, run.survivor_cycle_cost);
  }

  run.walk = euler_circuit(n, arcs, red.trace.dummy);
  run.tour = shortcut(g, run.walk);
  run.tour_cost = tour_cost(g, run.tour);
  if (run.tour_cost > run.union_cost)
    throw InvariantError("nwfs_log_m_approx: shortcutting increased the cost");
  run.permutation = atsp_tour_to_permutation(red.trace, run.tour);
  run.makespan = makespan(inst, run.permutation);
  if (run.makespan != run.tour_cost)
    throw InvariantError("nwfs_log_m_approx: makespan differs from tour cost");
  return run;
}

}  // namespace nwfs
