#pragma once

// Slow reference implementations used only by the tests. None of them call
// into the library beyond the plain data types.

#include "nwfs/flowshop.hpp"
#include "nwfs/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using nwfs::Job;
using nwfs::Time;
using nwfs::Weight;
using nwfs::WeightMatrix;

// Smallest offset X >= 0 at which job b may start after job a so that, on
// every machine, b's operation starts no earlier than a's finishes.
inline Time delta_by_search(const Job& a, const Job& b) {
  const std::size_t m = a.ops.size();
  for (Time x = 0;; ++x) {
    Time ea = 0, sb = x;
    bool ok = true;
    for (std::size_t q = 0; q < m && ok; ++q) {
      ea += a.ops[q];
      ok = sb >= ea;
      sb += b.ops[q];
    }
    if (ok) return x;
  }
}

// Event simulation: job k starts as early as every machine allows.
inline Time makespan_by_events(const std::vector<Job>& jobs, const std::vector<std::size_t>& order) {
  const std::size_t m = jobs.front().ops.size();
  std::vector<Time> free(m, 0);
  Time end = 0;
  for (std::size_t j : order) {
    Time start = 0;
    for (;; ++start) {
      Time t = start;
      bool ok = true;
      for (std::size_t q = 0; q < m && ok; ++q) {
        ok = t >= free[q];
        t += jobs[j].ops[q];
      }
      if (ok) break;
    }
    Time t = start;
    for (std::size_t q = 0; q < m; ++q) {
      t += jobs[j].ops[q];
      free[q] = t;
    }
    end = std::max(end, t);
  }
  return end;
}

inline Time best_makespan(const std::vector<Job>& jobs) {
  std::vector<std::size_t> p(jobs.size());
  std::iota(p.begin(), p.end(), std::size_t{0});
  Time best = std::numeric_limits<Time>::max();
  do best = std::min(best, makespan_by_events(jobs, p));
  while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline Weight best_tour(const WeightMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return 0;
  std::vector<std::size_t> p(n - 1);
  std::iota(p.begin(), p.end(), std::size_t{1});
  Weight best = std::numeric_limits<Weight>::max();
  do {
    Weight c = m(0, p.front()) + m(p.back(), 0);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) c += m(p[k], p[k + 1]);
    best = std::min(best, c);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline Weight best_path(const WeightMatrix& m,
                        std::optional<std::pair<std::size_t, std::size_t>> ends = std::nullopt) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  Weight best = std::numeric_limits<Weight>::max();
  do {
    if (ends && (p.front() != ends->first || p.back() != ends->second)) continue;
    Weight c = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) c += m(p[k], p[k + 1]);
    best = std::min(best, c);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Minimum over fixed-point-free permutations, plus how many there were.
inline std::pair<Weight, std::size_t> best_derangement(const WeightMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  Weight best = std::numeric_limits<Weight>::max();
  std::size_t count = 0;
  do {
    bool fixed = false;
    Weight c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      fixed |= p[i] == i;
      c += m(i, p[i]);
    }
    if (fixed) continue;
    ++count;
    best = std::min(best, c);
  } while (std::next_permutation(p.begin(), p.end()));
  return {best, count};
}

inline bool triangle_holds(const WeightMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v)
        if (m(u, v) > m(u, w) + m(w, v)) return false;
  return true;
}

}  // namespace oracle
