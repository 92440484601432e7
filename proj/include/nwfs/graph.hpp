#pragma once

#include "nwfs/common.hpp"
#include "nwfs/flowshop.hpp"

#include <optional>
#include <span>
#include <vector>

namespace nwfs {

enum class InstanceKind { atsp, atspp };

// Square nonnegative integer distance matrix. ATSPP instances may carry
// designated endpoints; without them the path endpoints are free.
class WeightMatrix {
 public:
  WeightMatrix() = default;

  explicit WeightMatrix(std::size_t n, Weight fill = 0) : n_(n), d_(n * n, fill) {
    if (n == 0) throw StructuralError("weight matrix needs at least one vertex");
    for (std::size_t u = 0; u < n; ++u) d_[u * n + u] = 0;
  }

  WeightMatrix(std::size_t n, std::vector<Weight> entries) : n_(n), d_(std::move(entries)) {
    if (n == 0) throw StructuralError("weight matrix needs at least one vertex");
    if (d_.size() != n * n)
      throw StructuralError("weight matrix needs " + std::to_string(n * n) + " entries");
    for (Weight w : d_)
      if (w < 0) throw StructuralError("negative arc weight");
  }

  static WeightMatrix from_rows(const std::vector<std::vector<Weight>>& rows) {
    std::vector<Weight> flat;
    for (const auto& r : rows) {
      if (r.size() != rows.size()) throw StructuralError("weight matrix is not square");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return WeightMatrix(rows.size(), std::move(flat));
  }

  std::size_t size() const noexcept { return n_; }

  Weight operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }

  void set(Vertex u, Vertex v, Weight w) {
    if (u >= n_ || v >= n_) throw StructuralError("vertex out of range");
    if (w < 0) throw StructuralError("negative arc weight");
    d_[u * n_ + v] = w;
  }

  Weight max_weight() const noexcept {
    Weight w = 0;
    for (Weight x : d_) w = std::max(w, x);
    return w;
  }

  InstanceKind kind() const noexcept { return kind_; }

  void make_atsp() noexcept {
    kind_ = InstanceKind::atsp;
    endpoints_.reset();
  }

  void make_atspp(std::optional<std::pair<Vertex, Vertex>> endpoints = std::nullopt) {
    if (endpoints) {
      auto [s, t] = *endpoints;
      if (s >= n_ || t >= n_ || s == t) throw StructuralError("invalid ATSPP endpoints");
    }
    kind_ = InstanceKind::atspp;
    endpoints_ = endpoints;
  }

  const std::optional<std::pair<Vertex, Vertex>>& endpoints() const noexcept {
    return endpoints_;
  }

  // Submatrix induced by `vertices`, in the given order.
  WeightMatrix induced(std::span<const Vertex> vertices) const {
    WeightMatrix out(vertices.size());
    for (std::size_t a = 0; a < vertices.size(); ++a)
      for (std::size_t b = 0; b < vertices.size(); ++b)
        out.d_[a * vertices.size() + b] = (*this)(vertices[a], vertices[b]);
    return out;
  }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Weight> d_;
  InstanceKind kind_ = InstanceKind::atsp;
  std::optional<std::pair<Vertex, Vertex>> endpoints_;
};

struct Tour {
  std::vector<Vertex> order;
  friend bool operator==(const Tour&, const Tour&) = default;
};

struct HamPath {
  std::vector<Vertex> order;
  friend bool operator==(const HamPath&, const HamPath&) = default;
};

struct SemimetricViolation {
  enum class Kind { diagonal, triangle } kind;
  Vertex u, w, v;  // d(u,v) > d(u,w) + d(w,v); for diagonal, u == w == v

  friend bool operator==(const SemimetricViolation&, const SemimetricViolation&) = default;
};

// Returns the lexicographically first violation: diagonal entries are checked
// first, then triples (u, w, v) in lexicographic order.
inline std::optional<SemimetricViolation> validate_semimetric(const WeightMatrix& m) {
  const std::size_t n = m.size();
  for (Vertex u = 0; u < n; ++u)
    if (m(u, u) != 0) return SemimetricViolation{SemimetricViolation::Kind::diagonal, u, u, u};
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = 0; w < n; ++w)
      for (Vertex v = 0; v < n; ++v)
        if (m(u, v) > m(u, w) + m(w, v))
          return SemimetricViolation{SemimetricViolation::Kind::triangle, u, w, v};
  return std::nullopt;
}

inline bool is_semimetric(const WeightMatrix& m) { return !validate_semimetric(m).has_value(); }

inline void require_semimetric(const WeightMatrix& m, const char* where) {
  if (auto bad = validate_semimetric(m)) {
    if (bad->kind == SemimetricViolation::Kind::diagonal)
      throw ValidationError(std::string(where) + ": nonzero diagonal at vertex " +
                            std::to_string(bad->u));
    throw ValidationError(std::string(where) + ": triangle inequality violated at (" +
                          std::to_string(bad->u) + "," + std::to_string(bad->w) + "," +
                          std::to_string(bad->v) + ")");
  }
}

inline Weight tour_cost(const WeightMatrix& m, const Tour& t) {
  check_permutation(t.order, m.size(), "tour");
  Weight c = 0;
  for (std::size_t k = 0; k < t.order.size(); ++k)
    c = checked_add(c, m(t.order[k], t.order[(k + 1) % t.order.size()]));
  return c;
}

inline Weight path_cost(const WeightMatrix& m, const HamPath& p) {
  check_permutation(p.order, m.size(), "path");
  Weight c = 0;
  for (std::size_t k = 0; k + 1 < p.order.size(); ++k)
    c = checked_add(c, m(p.order[k], p.order[k + 1]));
  return c;
}

// Cost of a closed walk: consecutive arcs plus the arc back to the first vertex
// (zero when the walk already ends where it started).
inline Weight walk_cost(const WeightMatrix& m, std::span<const Vertex> walk) {
  if (walk.empty()) return 0;
  Weight c = 0;
  for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
    if (walk[k] >= m.size() || walk[k + 1] >= m.size())
      throw StructuralError("walk: vertex out of range");
    c = checked_add(c, m(walk[k], walk[k + 1]));
  }
  return checked_add(c, m(walk.back(), walk.front()));
}

// Keeps the first occurrence of every vertex.
inline Tour shortcut(const WeightMatrix& m, std::span<const Vertex> walk) {
  std::vector<char> seen(m.size(), 0);
  Tour t;
  t.order.reserve(m.size());
  for (Vertex v : walk) {
    if (v >= m.size()) throw StructuralError("shortcut: vertex out of range");
    if (!seen[v]) {
      seen[v] = 1;
      t.order.push_back(v);
    }
  }
  if (t.order.size() != m.size())
    throw StructuralError("shortcut: walk misses " + std::to_string(m.size() - t.order.size()) +
                          " vertices");
  return t;
}

// Flowshop -> ATSP: vertex 0 is the all-zero dummy job and vertex j + 1 is job
// j. For x != y the arc weight is delta(x, y); the diagonal is zero.
struct NwfsAtspTrace {
  Vertex dummy = 0;
  std::size_t jobs = 0;
};

struct NwfsAtspReduction {
  WeightMatrix matrix;
  NwfsAtspTrace trace;
};

inline WeightMatrix delta_matrix(std::span<const Job> jobs) {
  const std::size_t n = jobs.size();
  WeightMatrix out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) out.set(a, b, delta(jobs[a], jobs[b]));
  return out;
}

inline NwfsAtspReduction nwfs_to_atsp(const FlowshopInstance& inst) {
  std::vector<Job> jobs;
  jobs.reserve(inst.size() + 1);
  jobs.emplace_back(std::vector<Time>(inst.machines(), 0));
  jobs.insert(jobs.end(), inst.jobs().begin(), inst.jobs().end());
  return {delta_matrix(jobs), NwfsAtspTrace{0, inst.size()}};
}

inline JobPermutation atsp_tour_to_permutation(const NwfsAtspTrace& trace, const Tour& t) {
  check_permutation(t.order, trace.jobs + 1, "atsp_tour_to_permutation");
  auto it = std::find(t.order.begin(), t.order.end(), trace.dummy);
  if (it == t.order.end()) throw StructuralError("tour does not contain the dummy vertex");
  std::size_t at = static_cast<std::size_t>(it - t.order.begin());
  JobPermutation sigma;
  sigma.order.reserve(trace.jobs);
  for (std::size_t k = 1; k < t.order.size(); ++k) {
    Vertex v = t.order[(at + k) % t.order.size()];
    sigma.order.push_back(v > trace.dummy ? v - 1 : v);
  }
  return sigma;
}

inline Tour permutation_to_atsp_tour(const NwfsAtspTrace& trace, const JobPermutation& sigma) {
  check_permutation(sigma.order, trace.jobs, "permutation_to_atsp_tour");
  Tour t{{trace.dummy}};
  for (std::size_t j : sigma.order) t.order.push_back(j >= trace.dummy ? j + 1 : j);
  return t;
}

}  // namespace nwfs
