#pragma once

// ATSP instance transformations used by the hardness pipeline, each paired
// with the map that carries a solution of the transformed instance back:
//   * weight normalization to small positive integers,
//   * replication into copies glued at a supervertex,
//   * splitting a vertex to turn a tour instance into a path instance.

#include "nwfs/common.hpp"
#include "nwfs/graph.hpp"

#include <algorithm>
#include <vector>

namespace nwfs {

inline void require_epsilon(const Rational& eps) {
  if (eps <= 0 || eps > 1)
    throw StructuralError("epsilon must lie in (0, 1], got " + to_string(eps));
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

struct NormalizationTrace {
  Weight certificate = 0;      // R, value of a known tour
  Rational epsilon{1};
  std::size_t log_term = 1;    // ceil(log2 n)
  Rational step{0};            // Phi = eps * R / (n * log_term)
  std::size_t n = 0;
  Weight original_max = 0;
  Weight normalized_max = 0;
  WeightMatrix normalized;
};

// w(u,v) = ceil(d(u,v) / Phi) + 1 off the diagonal: add Phi, round up to a
// multiple of Phi, divide by Phi. Everything stays an exact rational.
inline NormalizationTrace normalize_weights(const WeightMatrix& g, const Rational& eps,
                                            Weight certificate) {
  require_epsilon(eps);
  const std::size_t n = g.size();
  if (n < 2) throw StructuralError("normalize_weights needs at least two vertices");
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (certificate < g(u, v) + g(v, u))
        throw ValidationError("normalize_weights: certificate " + std::to_string(certificate) +
                              " is below the round trip " + std::to_string(u) + "<->" +
                              std::to_string(v) + " and cannot be a tour value");

  NormalizationTrace tr;
  tr.certificate = certificate;
  tr.epsilon = eps;
  tr.n = n;
  tr.log_term = ceil_log2(n);
  tr.original_max = g.max_weight();
  tr.normalized = WeightMatrix(n);

  const __int128 den_base = static_cast<__int128>(eps.numerator()) * certificate;
  const __int128 num_base =
      static_cast<__int128>(eps.denominator()) * static_cast<__int128>(n) * tr.log_term;
  if (certificate > 0)
    tr.step = Rational(checked_mul(eps.numerator(), certificate),
                       checked_mul(eps.denominator(),
                                   checked_mul(static_cast<Weight>(n),
                                               static_cast<Weight>(tr.log_term))));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      // A zero certificate forces every weight to zero; they all map to 1.
      Weight w = certificate == 0 ? 1 : ceil_div(num_base * g(u, v), den_base) + 1;
      tr.normalized.set(u, v, w);
    }
  tr.normalized_max = tr.normalized.max_weight();
  return tr;
}

// ---------------------------------------------------------------------------
// Replication
// ---------------------------------------------------------------------------

// Vertex 0 of the replicated instance is the supervertex; the remaining
// vertices are copies of the non-anchor vertices, copy-major.
struct ReplicationTrace {
  std::size_t copies = 1;
  Vertex anchor = 0;
  WeightMatrix base;
  WeightMatrix replicated;

  static constexpr std::size_t supervertex = 0;
  static constexpr std::size_t no_copy = static_cast<std::size_t>(-1);

  std::size_t per_copy() const { return base.size() - 1; }

  std::size_t copy_of(Vertex r) const {
    return r == supervertex ? no_copy : (r - 1) / per_copy();
  }

  Vertex original_of(Vertex r) const {
    if (r == supervertex) return anchor;
    Vertex k = (r - 1) % per_copy();
    return k < anchor ? k : k + 1;
  }

  Vertex replica_of(std::size_t copy, Vertex x) const {
    if (x == anchor) return supervertex;
    Vertex k = x < anchor ? x : x - 1;
    return 1 + copy * per_copy() + k;
  }
};

inline ReplicationTrace replicate_copies(const WeightMatrix& base, std::size_t copies,
                                         Vertex anchor = 0) {
  const std::size_t n = base.size();
  if (n < 2) throw StructuralError("replicate_instance needs at least two vertices");
  if (copies < 1) throw StructuralError("replicate_instance needs at least one copy");
  if (anchor >= n) throw StructuralError("replicate_instance: anchor out of range");
  ReplicationTrace tr;
  tr.copies = copies;
  tr.anchor = anchor;
  tr.base = base;
  const std::size_t size = copies * (n - 1) + 1;
  tr.replicated = WeightMatrix(size);
  for (Vertex a = 0; a < size; ++a)
    for (Vertex b = 0; b < size; ++b) {
      if (a == b) continue;
      Vertex x = tr.original_of(a), y = tr.original_of(b);
      std::size_t ca = tr.copy_of(a), cb = tr.copy_of(b);
      bool same = ca == ReplicationTrace::no_copy || cb == ReplicationTrace::no_copy || ca == cb;
      tr.replicated.set(a, b, same ? base(x, y) : checked_add(base(x, anchor), base(anchor, y)));
    }
  return tr;
}

inline std::size_t replication_copies(const Rational& eps) {
  require_epsilon(eps);
  return static_cast<std::size_t>(ceil_rational(Rational(2) / eps));
}

inline ReplicationTrace replicate_instance(const WeightMatrix& base, const Rational& eps,
                                           Vertex anchor = 0) {
  return replicate_copies(base, replication_copies(eps), anchor);
}

struct ReplicationBackmap {
  std::vector<Vertex> rerouted;          // closed walk through the supervertex
  std::vector<Tour> copy_tours;          // over the base instance
  std::vector<Weight> copy_costs;
  std::size_t chosen = 0;
  Tour tour;
  Weight cost = 0;
};

// Reroutes every cross-copy arc through the supervertex, cuts the walk at the
// supervertex, gathers the pieces of each copy into one closed walk, shortcuts
// it, and keeps the cheapest copy.
inline ReplicationBackmap backmap_replication_detailed(const ReplicationTrace& tr, const Tour& t) {
  const WeightMatrix& g = tr.replicated;
  check_permutation(t.order, g.size(), "backmap_replication");
  const Weight input_cost = tour_cost(g, t);
  ReplicationBackmap out;

  auto at = std::find(t.order.begin(), t.order.end(), ReplicationTrace::supervertex);
  std::vector<Vertex> rot(at, t.order.end());
  rot.insert(rot.end(), t.order.begin(), at);
  for (std::size_t k = 0; k < rot.size(); ++k) {
    Vertex a = rot[k], b = rot[(k + 1) % rot.size()];
    out.rerouted.push_back(a);
    if (a != ReplicationTrace::supervertex && b != ReplicationTrace::supervertex &&
        tr.copy_of(a) != tr.copy_of(b))
      out.rerouted.push_back(ReplicationTrace::supervertex);
  }
  if (walk_cost(g, out.rerouted) != input_cost)
    throw InvariantError("backmap_replication: rerouting changed the walk length");

  std::vector<std::vector<Vertex>> walks(tr.copies, std::vector<Vertex>{});
  std::size_t current = ReplicationTrace::no_copy;
  for (Vertex r : out.rerouted) {
    if (r == ReplicationTrace::supervertex) {
      current = ReplicationTrace::no_copy;
      continue;
    }
    std::size_t c = tr.copy_of(r);
    if (current == ReplicationTrace::no_copy) {
      walks[c].push_back(tr.anchor);
      current = c;
    } else if (current != c) {
      throw InvariantError("backmap_replication: segment spans two copies");
    }
    walks[c].push_back(tr.original_of(r));
  }

  Weight total = 0;
  for (std::size_t c = 0; c < tr.copies; ++c) {
    if (walks[c].empty()) walks[c].push_back(tr.anchor);
    total = checked_add(total, walk_cost(tr.base, walks[c]));
    out.copy_tours.push_back(shortcut(tr.base, walks[c]));
    out.copy_costs.push_back(tour_cost(tr.base, out.copy_tours.back()));
  }
  if (total != input_cost)
    throw InvariantError("backmap_replication: per-copy walks do not add up to the tour");
  out.chosen = static_cast<std::size_t>(
      std::min_element(out.copy_costs.begin(), out.copy_costs.end()) - out.copy_costs.begin());
  out.tour = out.copy_tours[out.chosen];
  out.cost = out.copy_costs[out.chosen];
  if (out.cost * static_cast<Weight>(tr.copies) > input_cost)
    throw InvariantError("backmap_replication: cheapest copy exceeds the average");
  return out;
}

inline Tour backmap_replication(const ReplicationTrace& tr, const Tour& t) {
  return backmap_replication_detailed(tr, t).tour;
}

// ---------------------------------------------------------------------------
// Tour instance -> path instance
// ---------------------------------------------------------------------------

// The split vertex keeps its index as v_out; v_in is appended as the last
// vertex. The result is a free-endpoint path instance.
struct SplitTrace {
  Vertex split = 0;
  Vertex v_out = 0;
  Vertex v_in = 0;
  Weight padding = 0;  // 2W
  WeightMatrix matrix;
};

inline SplitTrace atsp_to_atspp(const WeightMatrix& g, Vertex v = 0) {
  const std::size_t n = g.size();
  if (n < 3) throw ValidationError("atsp_to_atspp needs at least three vertices");
  if (v >= n) throw StructuralError("atsp_to_atspp: split vertex out of range");
  SplitTrace tr;
  tr.split = v;
  tr.v_out = v;
  tr.v_in = n;
  tr.padding = checked_mul(2, g.max_weight());
  tr.matrix = WeightMatrix(n + 1, tr.padding);
  for (Vertex x = 0; x < n; ++x) {
    if (x == v) continue;
    for (Vertex y = 0; y < n; ++y)
      if (y != v && y != x) tr.matrix.set(x, y, g(x, y));
    tr.matrix.set(tr.v_out, x, g(v, x));
    tr.matrix.set(x, tr.v_in, g(x, v));
  }
  tr.matrix.set(tr.v_out, tr.v_in, 0);
  tr.matrix.make_atspp();
  return tr;
}

struct PathRepair {
  HamPath input, rotated, repaired;
  Weight input_cost = 0, rotated_cost = 0, repaired_cost = 0;
  Tour tour;  // over the unsplit instance
};

// Rotates the path to start at v_out, moves v_in to the end, then contracts
// (v_out, v_in) back into the split vertex. Each step is checked not to
// increase the path cost.
inline PathRepair repair_path(const SplitTrace& tr, const HamPath& p) {
  const WeightMatrix& g = tr.matrix;
  check_permutation(p.order, g.size(), "repair_and_backmap_path");
  PathRepair out;
  out.input = p;
  out.input_cost = path_cost(g, p);

  auto at = std::find(p.order.begin(), p.order.end(), tr.v_out);
  out.rotated.order.assign(at, p.order.end());
  out.rotated.order.insert(out.rotated.order.end(), p.order.begin(), at);
  out.rotated_cost = path_cost(g, out.rotated);

  out.repaired = out.rotated;
  auto& ord = out.repaired.order;
  if (ord.back() != tr.v_in) {
    ord.erase(std::find(ord.begin(), ord.end(), tr.v_in));
    ord.push_back(tr.v_in);
  }
  out.repaired_cost = path_cost(g, out.repaired);

  if (out.rotated_cost > out.input_cost)
    throw InvariantError("repair_path: rotation increased the path cost");
  if (out.repaired_cost > out.rotated_cost)
    throw InvariantError("repair_path: moving v_in increased the path cost");

  out.tour.order.assign(ord.begin(), ord.end() - 1);
  return out;
}

inline Tour repair_and_backmap_path(const SplitTrace& tr, const HamPath& p) {
  return repair_path(tr, p).tour;
}

inline WeightMatrix scale_weights(const WeightMatrix& g, Weight factor) {
  if (factor < 1) throw StructuralError("scale factor must be positive");
  WeightMatrix out = g;
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = 0; v < g.size(); ++v) out.set(u, v, checked_mul(g(u, v), factor));
  return out;
}

}  // namespace nwfs
