#pragma once

// No-wait flowshop model: jobs, the start-gap distance, makespan, and a
// machine-availability simulator that serves as an independent check on both.

#include "nwfs/common.hpp"

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

namespace nwfs {

struct Job {
  std::vector<Time> ops;

  Job() = default;
  explicit Job(std::vector<Time> o) : ops(std::move(o)) {
    for (Time t : ops)
      if (t < 0) throw StructuralError("negative operation length");
  }
  Job(std::initializer_list<Time> o) : Job(std::vector<Time>(o)) {}

  std::size_t machines() const noexcept { return ops.size(); }

  friend bool operator==(const Job&, const Job&) = default;
};

struct JobPermutation {
  std::vector<std::size_t> order;

  friend bool operator==(const JobPermutation&, const JobPermutation&) = default;
};

class FlowshopInstance {
 public:
  FlowshopInstance(std::vector<Job> jobs, std::size_t machines)
      : jobs_(std::move(jobs)), machines_(machines) {
    if (machines_ == 0) throw StructuralError("flowshop instance needs at least one machine");
    if (jobs_.empty()) throw StructuralError("flowshop instance needs at least one job");
    for (std::size_t j = 0; j < jobs_.size(); ++j)
      if (jobs_[j].machines() != machines_)
        throw StructuralError("job " + std::to_string(j) + " has " +
                              std::to_string(jobs_[j].machines()) + " operations, expected " +
                              std::to_string(machines_));
  }

  explicit FlowshopInstance(std::vector<Job> jobs)
      : FlowshopInstance(jobs, jobs.empty() ? 0 : jobs.front().machines()) {}

  std::size_t size() const noexcept { return jobs_.size(); }
  std::size_t machines() const noexcept { return machines_; }
  const Job& job(std::size_t j) const { return jobs_.at(j); }
  const std::vector<Job>& jobs() const noexcept { return jobs_; }

  friend bool operator==(const FlowshopInstance&, const FlowshopInstance&) = default;

 private:
  std::vector<Job> jobs_;
  std::size_t machines_;
};

// Start times are indexed by position in `order`.
struct Schedule {
  std::vector<std::size_t> order;
  std::vector<Time> start_times;
  Time length = 0;

  Time start_of(std::size_t job) const {
    for (std::size_t p = 0; p < order.size(); ++p)
      if (order[p] == job) return start_times[p];
    throw StructuralError("job not in schedule");
  }
};

inline Time job_length(const Job& a) {
  Time s = 0;
  for (Time t : a.ops) s = checked_add(s, t);
  return s;
}

// Minimal gap between the start of `a` and the start of `b` when `b` directly
// follows `a`: max over q of (sum_{k<=q} a_k - sum_{k<q} b_k).
inline Time delta(const Job& a, const Job& b) {
  if (a.machines() != b.machines())
    throw StructuralError("delta: jobs have different machine counts (" +
                          std::to_string(a.machines()) + " vs " + std::to_string(b.machines()) +
                          ")");
  if (a.machines() == 0) throw StructuralError("delta: jobs have no operations");
  Time prefix_a = 0, prefix_b = 0;
  Time best = std::numeric_limits<Time>::min();
  for (std::size_t q = 0; q < a.ops.size(); ++q) {
    prefix_a = checked_add(prefix_a, a.ops[q]);
    best = std::max(best, prefix_a - prefix_b);
    prefix_b = checked_add(prefix_b, b.ops[q]);
  }
  return best;
}

inline void check_permutation(std::span<const std::size_t> order, std::size_t n,
                              const char* what) {
  if (order.size() != n)
    throw StructuralError(std::string(what) + ": expected " + std::to_string(n) +
                          " entries, got " + std::to_string(order.size()));
  std::vector<char> seen(n, 0);
  for (std::size_t v : order) {
    if (v >= n) throw StructuralError(std::string(what) + ": index " + std::to_string(v) +
                                      " out of range");
    if (seen[v]) throw StructuralError(std::string(what) + ": index " + std::to_string(v) +
                                       " repeated");
    seen[v] = 1;
  }
}

inline Time makespan(const FlowshopInstance& inst, const JobPermutation& sigma) {
  check_permutation(sigma.order, inst.size(), "makespan");
  Time total = 0;
  for (std::size_t k = 0; k + 1 < sigma.order.size(); ++k)
    total = checked_add(total, delta(inst.job(sigma.order[k]), inst.job(sigma.order[k + 1])));
  return checked_add(total, job_length(inst.job(sigma.order.back())));
}

// Event-level simulation: each machine tracks the completion time of its last
// operation; a job is started as early as possible such that every one of its
// operations begins no earlier than the machine becomes free. A zero-length
// operation is a point whose start equals its completion, so it still has to
// wait for the machine.
inline Schedule simulate_schedule(const FlowshopInstance& inst, const JobPermutation& sigma) {
  check_permutation(sigma.order, inst.size(), "simulate_schedule");
  const std::size_t m = inst.machines();
  std::vector<Time> machine_free(m, 0);
  std::vector<Time> offset(m + 1);
  Schedule out{sigma.order, {}, 0};
  out.start_times.reserve(sigma.order.size());
  Time previous_start = 0;

  for (std::size_t job_index : sigma.order) {
    const Job& job = inst.job(job_index);
    offset[0] = 0;
    for (std::size_t q = 0; q < m; ++q) offset[q + 1] = checked_add(offset[q], job.ops[q]);

    Time start = previous_start;
    bool moved = true;
    while (moved) {
      moved = false;
      for (std::size_t q = 0; q < m; ++q) {
        if (start + offset[q] < machine_free[q]) {
          start = machine_free[q] - offset[q];
          moved = true;
        }
      }
    }
    for (std::size_t q = 0; q < m; ++q) machine_free[q] = checked_add(start, offset[q + 1]);
    out.start_times.push_back(start);
    out.length = std::max(out.length, checked_add(start, offset[m]));
    previous_start = start;
  }
  return out;
}

// Checks a schedule against the no-wait permutation rules directly on the
// operation intervals: every machine sees the jobs in schedule order and no
// operation begins before the previous one on that machine has completed.
inline bool schedule_is_feasible(const FlowshopInstance& inst, const Schedule& s) {
  if (s.order.size() != inst.size() || s.start_times.size() != s.order.size()) return false;
  const std::size_t m = inst.machines();
  for (std::size_t q = 0; q < m; ++q) {
    Time last_end = std::numeric_limits<Time>::min();
    for (std::size_t p = 0; p < s.order.size(); ++p) {
      const Job& job = inst.job(s.order[p]);
      Time begin = s.start_times[p];
      for (std::size_t k = 0; k < q; ++k) begin += job.ops[k];
      if (begin < last_end) return false;
      last_end = begin + job.ops[q];
    }
  }
  for (std::size_t p = 0; p + 1 < s.start_times.size(); ++p)
    if (s.start_times[p] > s.start_times[p + 1]) return false;
  return true;
}

inline Job concat_jobs(std::span<const Job> parts) {
  if (parts.empty()) throw StructuralError("concat_jobs: no parts");
  std::vector<Time> ops;
  for (const Job& p : parts) {
    if (p.ops.empty()) throw StructuralError("concat_jobs: empty part");
    ops.insert(ops.end(), p.ops.begin(), p.ops.end());
  }
  return Job(std::move(ops));
}

inline Job concat_jobs(std::initializer_list<Job> parts) {
  return concat_jobs(std::span<const Job>(parts.begin(), parts.size()));
}

}  // namespace nwfs
