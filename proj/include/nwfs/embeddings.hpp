#pragma once

// Encoding semimetrics as no-wait flowshop jobs, the gadget family that pins
// distances between copies, and the full ATSP -> flowshop construction with
// the map that turns a job order back into a tour of the original instance.

#include "nwfs/common.hpp"
#include "nwfs/flowshop.hpp"
#include "nwfs/graph.hpp"
#include "nwfs/solvers.hpp"
#include "nwfs/transforms.hpp"

#include <algorithm>
#include <vector>

namespace nwfs {

// D - i zeros, D ones, i zeros. Within the family for a fixed D,
// delta(B_i, B_j) = max(i - j + 1, 0) for i - j < D, while delta(B_D, B_0) = D
// since no job waits longer than its own length.
inline Job block_job(std::size_t i, std::size_t scale) {
  if (scale < 1) throw StructuralError("block_job: scale must be positive");
  if (i > scale) throw StructuralError("block_job: index " + std::to_string(i) +
                                       " exceeds scale " + std::to_string(scale));
  std::vector<Time> ops(2 * scale, 0);
  std::fill(ops.begin() + static_cast<std::ptrdiff_t>(scale - i),
            ops.begin() + static_cast<std::ptrdiff_t>(2 * scale - i), Time{1});
  return Job(std::move(ops));
}

// Job v is the concatenation of B_{d(v,0)}, ..., B_{d(v,n-1)} on 2n*scale
// machines; delta(f(u), f(v)) = d(u, v) + 1. Every weight must be below scale.
inline std::vector<Job> embed_semimetric(const WeightMatrix& m, std::size_t scale) {
  require_semimetric(m, "embed_semimetric");
  if (scale < 1) throw StructuralError("embed_semimetric: scale must be positive");
  if (m.max_weight() >= static_cast<Weight>(scale))
    throw ValidationError("embed_semimetric: weight " + std::to_string(m.max_weight()) +
                          " is not below scale " + std::to_string(scale));
  const std::size_t n = m.size();
  std::vector<Job> out;
  out.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Time> ops;
    ops.reserve(2 * n * scale);
    for (Vertex k = 0; k < n; ++k) {
      Job b = block_job(static_cast<std::size_t>(m(v, k)), scale);
      ops.insert(ops.end(), b.ops.begin(), b.ops.end());
    }
    out.emplace_back(std::move(ops));
  }
  return out;
}

inline std::vector<Job> embed_semimetric(const WeightMatrix& m) {
  return embed_semimetric(m, static_cast<std::size_t>(m.max_weight() + 1));
}

// (10)^{2D}
inline Job gadget_block_zero(std::size_t scale) {
  std::vector<Time> ops(4 * scale, 0);
  for (std::size_t k = 0; k < ops.size(); k += 2) ops[k] = 1;
  return Job(std::move(ops));
}

// 1^{2D} 0^{2D}
inline Job gadget_block_one(std::size_t scale) {
  std::vector<Time> ops(4 * scale, 0);
  std::fill(ops.begin(), ops.begin() + static_cast<std::ptrdiff_t>(2 * scale), Time{1});
  return Job(std::move(ops));
}

inline std::uint64_t central_binomial(std::size_t k) {
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (k + i) / i;
  return c;
}

// Smallest k >= 1 with C(2k, k) >= count.
inline std::size_t gadget_half_size(std::size_t count) {
  std::size_t k = 1;
  while (central_binomial(k) < count) ++k;
  return k;
}

// The first `count` k-subsets of {1..2k} in lexicographic order of their
// element lists, as characteristic vectors.
inline std::vector<std::vector<bool>> gadget_patterns(std::size_t count) {
  const std::size_t k = gadget_half_size(count);
  std::vector<bool> bits(2 * k, false);
  std::fill(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(k), true);
  std::vector<std::vector<bool>> out;
  do {
    out.push_back(bits);
  } while (out.size() < count && std::prev_permutation(bits.begin(), bits.end()));
  return out;
}

// Self-distance 1, distance `scale` between distinct gadgets; every gadget has
// 8kD machines and total length 4kD.
inline std::vector<Job> gadget_jobs(std::size_t count, std::size_t scale) {
  if (count < 1) throw StructuralError("gadget_jobs: count must be positive");
  if (scale < 1) throw StructuralError("gadget_jobs: scale must be positive");
  const Job zero = gadget_block_zero(scale), one = gadget_block_one(scale);
  std::vector<Job> out;
  for (const auto& pattern : gadget_patterns(count)) {
    std::vector<Time> ops;
    for (bool bit : pattern) {
      const Job& b = bit ? one : zero;
      ops.insert(ops.end(), b.ops.begin(), b.ops.end());
    }
    out.emplace_back(std::move(ops));
  }
  return out;
}

// ---------------------------------------------------------------------------
// ATSP -> no-wait flowshop
// ---------------------------------------------------------------------------

// Job j belongs to copy j / path_vertices and stands for vertex
// j % path_vertices of the path instance.
struct HardnessTrace {
  Rational epsilon{1};
  WeightMatrix original;
  Weight certificate = 0;
  NormalizationTrace normalization;
  ReplicationTrace replication;
  SplitTrace split;
  Weight scale = 1;              // ceil(1/eps)
  WeightMatrix path_instance;    // split instance times scale
  std::size_t copies = 0;        // N
  std::size_t path_vertices = 0; // n'
  Weight max_weight = 0;         // W'
  std::size_t block_scale = 0;   // D = 2W' + 1
  std::size_t gadget_half = 0;   // k
  Time job_length = 0;
  std::size_t embedding_machines = 0;
  std::size_t gadget_machines = 0;

  std::size_t job_count() const { return copies * path_vertices; }
  std::size_t copy_of(std::size_t job) const { return job / path_vertices; }
  Vertex vertex_of(std::size_t job) const { return job % path_vertices; }

  // Distance in the joined instance: path-instance weight inside a copy,
  // 2W' across copies.
  Weight joined_weight(std::size_t a, std::size_t b) const {
    if (a == b) return 0;
    if (copy_of(a) != copy_of(b)) return 2 * max_weight;
    return path_instance(vertex_of(a), vertex_of(b));
  }

  // Optimal makespan given the optimal path value of the path instance.
  Time predicted_optimum(Weight path_optimum) const {
    Time n = static_cast<Time>(copies);
    Time v = checked_mul(n, path_optimum);
    v = checked_add(v, checked_mul(2 * max_weight, n - 1));
    v = checked_add(v, static_cast<Time>(job_count()) - 1);
    return checked_add(v, job_length);
  }
};

struct HardnessInstance {
  FlowshopInstance flowshop;
  HardnessTrace trace;
};

// Builds the flowshop part of a trace whose path instance is already set.
inline FlowshopInstance realize_hardness_jobs(HardnessTrace& tr) {
  const WeightMatrix& gp = tr.path_instance;
  tr.path_vertices = gp.size();
  tr.copies = tr.path_vertices;
  tr.max_weight = gp.max_weight();
  tr.block_scale = static_cast<std::size_t>(2 * tr.max_weight + 1);
  tr.gadget_half = gadget_half_size(tr.copies);

  std::vector<Job> embedded = embed_semimetric(gp, tr.block_scale);
  std::vector<Job> gadgets = gadget_jobs(tr.copies, tr.block_scale);
  tr.embedding_machines = embedded.front().machines();
  tr.gadget_machines = gadgets.front().machines();

  std::vector<Job> jobs;
  jobs.reserve(tr.job_count());
  for (std::size_t c = 0; c < tr.copies; ++c)
    for (std::size_t x = 0; x < tr.path_vertices; ++x) {
      std::vector<Time> ops;
      ops.reserve(tr.embedding_machines + tr.gadget_machines);
      ops.insert(ops.end(), embedded[x].ops.begin(), embedded[x].ops.end());
      ops.insert(ops.end(), gadgets[c].ops.begin(), gadgets[c].ops.end());
      jobs.emplace_back(std::move(ops));
    }
  tr.job_length = job_length(jobs.front());
  for (const Job& j : jobs)
    if (job_length(j) != tr.job_length) throw InvariantError("hardness jobs differ in length");
  return FlowshopInstance(std::move(jobs));
}

struct HardnessOptions {
  Vertex anchor = 0;        // replication anchor, in the original instance
  Vertex split_vertex = 0;  // in the replicated instance; 0 is the supervertex
};

inline HardnessInstance build_hardness_instance(const WeightMatrix& g, const Rational& eps,
                                                const HardnessOptions& opts = {}) {
  require_epsilon(eps);
  require_semimetric(g, "build_hardness_instance");
  if (g.size() < 3) throw ValidationError("build_hardness_instance needs at least three vertices");
  if (g.kind() != InstanceKind::atsp)
    throw ValidationError("build_hardness_instance expects a tour instance");

  HardnessTrace tr;
  tr.epsilon = eps;
  tr.original = g;
  tr.certificate = fgm_atsp_run(g).cost;
  tr.normalization = normalize_weights(g, eps, tr.certificate);
  if (opts.anchor >= g.size()) throw StructuralError("build_hardness_instance: anchor out of range");
  tr.replication = replicate_instance(tr.normalization.normalized, eps, opts.anchor);
  if (opts.split_vertex >= tr.replication.replicated.size())
    throw StructuralError("build_hardness_instance: split vertex out of range");
  tr.split = atsp_to_atspp(tr.replication.replicated, opts.split_vertex);
  tr.scale = ceil_rational(Rational(1) / eps);
  tr.path_instance = scale_weights(tr.split.matrix, tr.scale);
  FlowshopInstance flowshop = realize_hardness_jobs(tr);
  return {std::move(flowshop), std::move(tr)};
}

struct TourExtraction {
  HamPath joined;                 // job order read as a path of the joined instance
  Weight joined_cost = 0;
  HamPath contiguous;
  Weight contiguous_cost = 0;
  std::vector<HamPath> copy_paths;  // over the path instance
  std::vector<Weight> copy_costs;
  std::size_t chosen = 0;
  Weight path_cost_scaled = 0;
  Weight path_cost_unscaled = 0;
  PathRepair repair;
  ReplicationBackmap replication;
  Tour tour;                      // over the original instance
  Weight cost = 0;
};

inline Weight joined_path_cost(const HardnessTrace& tr, std::span<const std::size_t> order) {
  Weight c = 0;
  for (std::size_t k = 0; k + 1 < order.size(); ++k)
    c = checked_add(c, tr.joined_weight(order[k], order[k + 1]));
  return c;
}

inline TourExtraction extract_tour_detailed(const HardnessTrace& tr, const JobPermutation& sigma) {
  check_permutation(sigma.order, tr.job_count(), "extract_tour");
  TourExtraction out;
  out.joined.order = sigma.order;
  out.joined_cost = joined_path_cost(tr, sigma.order);

  // Group by copy in order of first appearance, keeping the order inside a copy.
  std::vector<std::size_t> copy_rank(tr.copies, ReplicationTrace::no_copy);
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t j : sigma.order) {
    std::size_t c = tr.copy_of(j);
    if (copy_rank[c] == ReplicationTrace::no_copy) {
      copy_rank[c] = groups.size();
      groups.emplace_back();
    }
    groups[copy_rank[c]].push_back(j);
  }
  for (const auto& grp : groups)
    out.contiguous.order.insert(out.contiguous.order.end(), grp.begin(), grp.end());
  out.contiguous_cost = joined_path_cost(tr, out.contiguous.order);
  if (out.contiguous_cost > out.joined_cost)
    throw InvariantError("extract_tour: making copies contiguous increased the cost");

  Weight within = 0;
  for (const auto& grp : groups) {
    HamPath p;
    for (std::size_t j : grp) p.order.push_back(tr.vertex_of(j));
    Weight c = path_cost(tr.path_instance, p);
    within = checked_add(within, c);
    out.copy_paths.push_back(std::move(p));
    out.copy_costs.push_back(c);
  }
  const Weight cross = checked_mul(2 * tr.max_weight, static_cast<Weight>(tr.copies - 1));
  if (within + cross != out.contiguous_cost)
    throw InvariantError("extract_tour: copy paths do not account for the joined path");
  out.chosen = static_cast<std::size_t>(
      std::min_element(out.copy_costs.begin(), out.copy_costs.end()) - out.copy_costs.begin());
  out.path_cost_scaled = out.copy_costs[out.chosen];
  if (out.path_cost_scaled * static_cast<Weight>(tr.copies) > out.contiguous_cost - cross)
    throw InvariantError("extract_tour: cheapest copy exceeds the average");
  out.path_cost_unscaled = path_cost(tr.split.matrix, out.copy_paths[out.chosen]);
  if (out.path_cost_unscaled * tr.scale != out.path_cost_scaled)
    throw InvariantError("extract_tour: unscaling is inconsistent");

  out.repair = repair_path(tr.split, out.copy_paths[out.chosen]);
  out.replication = backmap_replication_detailed(tr.replication, out.repair.tour);
  out.tour = out.replication.tour;
  out.cost = tour_cost(tr.original, out.tour);
  return out;
}

inline Tour extract_tour(const HardnessInstance& h, const JobPermutation& sigma) {
  return extract_tour_detailed(h.trace, sigma).tour;
}

// Job order that walks the copies one after another, each along `path`.
inline JobPermutation copywise_permutation(const HardnessTrace& tr, const HamPath& path) {
  check_permutation(path.order, tr.path_vertices, "copywise_permutation");
  JobPermutation sigma;
  for (std::size_t c = 0; c < tr.copies; ++c)
    for (Vertex x : path.order) sigma.order.push_back(c * tr.path_vertices + x);
  return sigma;
}

}  // namespace nwfs
