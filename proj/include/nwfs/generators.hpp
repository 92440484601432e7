#pragma once

#include "nwfs/flowshop.hpp"
#include "nwfs/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace nwfs {

using Rng = std::mt19937_64;

// Uniform weights in [0, max_weight] closed under shortest paths, so the
// result is always a semimetric.
inline WeightMatrix gen_random_semimetric(std::size_t n, Weight max_weight, Rng& rng) {
  if (n < 1) throw StructuralError("gen_random_semimetric: n must be positive");
  if (max_weight < 0) throw StructuralError("gen_random_semimetric: negative weight bound");
  std::uniform_int_distribution<Weight> pick(0, max_weight);
  WeightMatrix m(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) m.set(u, v, pick(rng));
  for (Vertex w = 0; w < n; ++w)
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (m(u, w) + m(w, v) < m(u, v)) m.set(u, v, m(u, w) + m(w, v));
  return m;
}

inline WeightMatrix gen_random_semimetric(std::size_t n, Weight max_weight, std::uint64_t seed) {
  Rng rng(seed);
  return gen_random_semimetric(n, max_weight, rng);
}

inline FlowshopInstance gen_random_flowshop(std::size_t n, std::size_t m, Time max_op, Rng& rng) {
  if (max_op < 0) throw StructuralError("gen_random_flowshop: negative operation bound");
  std::uniform_int_distribution<Time> pick(0, max_op);
  std::vector<Job> jobs;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Time> ops(m);
    for (auto& t : ops) t = pick(rng);
    jobs.emplace_back(std::move(ops));
  }
  return FlowshopInstance(std::move(jobs), m);
}

inline FlowshopInstance gen_random_flowshop(std::size_t n, std::size_t m, Time max_op,
                                            std::uint64_t seed) {
  Rng rng(seed);
  return gen_random_flowshop(n, m, max_op, rng);
}

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace nwfs
