#include "nwfs/generators.hpp"
#include "nwfs/solvers.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace nwfs;

TEST(Assignment, MatchesEnumeration) {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = uniform_size(rng, 1, 6);
    std::vector<Weight> cost(n * n);
    for (auto& c : cost) c = static_cast<Weight>(uniform_size(rng, 0, 30));
    auto a = solve_assignment(cost, n);
    Weight got = 0;
    for (std::size_t i = 0; i < n; ++i) got += cost[i * n + a[i]];
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    Weight best = std::numeric_limits<Weight>::max();
    do {
      Weight c = 0;
      for (std::size_t i = 0; i < n; ++i) c += cost[i * n + p[i]];
      best = std::min(best, c);
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(got, best);
  }
}

TEST(CycleCover, TwoPairs) {
  auto m = WeightMatrix::from_rows({{0, 1, 5, 5}, {1, 0, 5, 5}, {5, 5, 0, 1}, {5, 5, 1, 0}});
  auto cc = min_cycle_cover(m);
  EXPECT_TRUE(cc.is_valid());
  EXPECT_EQ(cc.cost(m), 4);
  EXPECT_EQ(cc.cycles(), (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}}));
}

TEST(CycleCover, TwoVertices) {
  auto cc = min_cycle_cover(WeightMatrix::from_rows({{0, 3}, {8, 0}}));
  EXPECT_EQ(cc.successor, (std::vector<Vertex>{1, 0}));
  EXPECT_THROW(min_cycle_cover(WeightMatrix(1)), StructuralError);
}

TEST(CycleCover, MatchesDerangementEnumeration) {
  Rng rng(32);
  for (int t = 0; t < 150; ++t) {
    auto m = gen_random_semimetric(uniform_size(rng, 2, 7), 20, rng);
    auto cc = min_cycle_cover(m);
    ASSERT_TRUE(cc.is_valid());
    EXPECT_EQ(cc.cost(m), oracle::best_derangement(m).first);
  }
  auto five = gen_random_semimetric(5, 9, 99);
  EXPECT_EQ(oracle::best_derangement(five).second, 44u);
  EXPECT_EQ(min_cycle_cover(five).cost(five), oracle::best_derangement(five).first);
}

TEST(Euler, TwoOverlappingCycles) {
  auto walk = euler_circuit(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}}, 0);
  EXPECT_EQ(walk, (std::vector<Vertex>{0, 1, 0, 2, 0}));
  auto m = gen_random_semimetric(3, 9, 5);
  auto t = shortcut(m, walk);
  EXPECT_EQ(t.order, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_LE(tour_cost(m, t), walk_cost(m, walk));
}

TEST(Euler, RejectsUnbalancedOrDisconnected) {
  EXPECT_THROW(euler_circuit(3, {{0, 1}, {1, 2}}, 0), InvariantError);
  EXPECT_THROW(euler_circuit(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}, 0), InvariantError);
}

TEST(HeldKarp, SmallValues) {
  EXPECT_EQ(held_karp_tour(WeightMatrix(3, 1)).cost, 3);
  EXPECT_EQ(held_karp_tour(WeightMatrix(1)).cost, 0);
  auto line = WeightMatrix::from_rows({{0, 1, 9}, {9, 0, 1}, {1, 9, 0}});
  EXPECT_EQ(held_karp_path(line, std::nullopt).cost, 2);
  EXPECT_EQ(held_karp_path(line, std::pair<Vertex, Vertex>{2, 1}).cost, 2);
}

TEST(HeldKarp, MatchesEnumeration) {
  Rng rng(33);
  for (int t = 0; t < 150; ++t) {
    auto m = gen_random_semimetric(uniform_size(rng, 2, 8), 25, rng);
    auto tour = held_karp_tour(m);
    EXPECT_EQ(tour.cost, oracle::best_tour(m));
    EXPECT_EQ(tour_cost(m, tour.tour), tour.cost);

    auto path = held_karp_path(m, std::nullopt);
    EXPECT_EQ(path.cost, oracle::best_path(m));
    EXPECT_EQ(path_cost(m, path.path), path.cost);

    std::pair<Vertex, Vertex> ends{0, m.size() - 1};
    auto fixed = held_karp_path(m, ends);
    EXPECT_EQ(fixed.cost, oracle::best_path(m, ends));
    EXPECT_EQ(fixed.path.order.front(), ends.first);
    EXPECT_EQ(fixed.path.order.back(), ends.second);
  }
}

TEST(HeldKarp, DispatchesOnKind) {
  auto m = gen_random_semimetric(5, 9, 7);
  EXPECT_EQ(held_karp(m).kind, InstanceKind::atsp);
  m.make_atspp(std::pair<Vertex, Vertex>{1, 3});
  auto s = held_karp(m);
  EXPECT_EQ(s.kind, InstanceKind::atspp);
  EXPECT_EQ(s.cost, oracle::best_path(m, std::pair<std::size_t, std::size_t>{1, 3}));
}

TEST(HeldKarp, RejectsOversizedInstances) {
  EXPECT_THROW(held_karp_tour(WeightMatrix(kHeldKarpLimit + 1)), LimitError);
  EXPECT_THROW(held_karp_tour(WeightMatrix(6), 5), LimitError);
  EXPECT_THROW(held_karp_path(WeightMatrix(1), std::nullopt), StructuralError);
}

TEST(ExactFlowshop, TwoJobs) {
  FlowshopInstance inst({Job{3, 2}, Job{1, 4}});
  auto bf = brute_force_nwfs(inst);
  EXPECT_EQ(bf.permutation.order, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(bf.makespan, 7);
  EXPECT_EQ(exact_nwfs(inst).makespan, 7);
  EXPECT_EQ(brute_force_nwfs(FlowshopInstance({Job{2, 5}})).makespan, 7);
}

TEST(ExactFlowshop, IdenticalJobs) {
  Job a{2, 5, 1};
  FlowshopInstance inst({a, a, a, a});
  EXPECT_EQ(brute_force_nwfs(inst).makespan, 3 * delta(a, a) + job_length(a));
}

TEST(ExactFlowshop, MethodsAgreeWithEventOracle) {
  Rng rng(34);
  for (int t = 0; t < 120; ++t) {
    auto inst = gen_random_flowshop(uniform_size(rng, 1, 6), uniform_size(rng, 1, 4), 9, rng);
    Time expect = oracle::best_makespan(inst.jobs());
    EXPECT_EQ(brute_force_nwfs(inst).makespan, expect);
    EXPECT_EQ(exact_nwfs(inst).makespan, expect);
  }
  EXPECT_THROW(brute_force_nwfs(gen_random_flowshop(kBruteForceLimit + 1, 2, 3, 1)), LimitError);
}

TEST(Fgm, UnitMetricIsOptimal) {
  auto m = WeightMatrix(6, 1);
  EXPECT_EQ(tour_cost(m, fgm_atsp(m)), 6);
  auto two = WeightMatrix::from_rows({{0, 2}, {3, 0}});
  EXPECT_EQ(tour_cost(two, fgm_atsp(two)), 5);
}

TEST(Fgm, WithinLogFactorOfOptimum) {
  Rng rng(35);
  for (int t = 0; t < 200; ++t) {
    auto m = gen_random_semimetric(uniform_size(rng, 2, 8), 30, rng);
    auto run = fgm_atsp_run(m);
    Weight opt = held_karp_tour(m).cost;
    EXPECT_LE(run.cost, static_cast<Weight>(ceil_log2(m.size())) * opt);
    EXPECT_LE(run.levels.size(), ceil_log2(m.size()));
    Weight sum = 0;
    for (const auto& lvl : run.levels) {
      EXPECT_LE(lvl.cost, opt);
      sum += lvl.cost;
    }
    EXPECT_LE(run.cost, sum);
  }
}

TEST(Survivors, IndexOrderCycle) {
  EXPECT_EQ(hamiltonian_on_survivors({4, 1}), (std::vector<Vertex>{1, 4}));
  EXPECT_EQ(hamiltonian_on_survivors({7, 2, 5}), (std::vector<Vertex>{2, 5, 7}));
  EXPECT_THROW(hamiltonian_on_survivors({3}), StructuralError);
}

TEST(LogMApprox, TwoJobs) {
  FlowshopInstance inst({Job{3, 2}, Job{1, 4}});
  auto run = nwfs_log_m_approx(inst);
  EXPECT_EQ(run.level_limit, 1u);
  EXPECT_TRUE(run.single_cycle_exit);
  EXPECT_EQ(run.makespan, 7);
}

TEST(LogMApprox, SingleJobAndSingleMachine) {
  auto one = nwfs_log_m_approx(FlowshopInstance({Job{3, 4, 5}}));
  EXPECT_EQ(one.permutation.order, std::vector<std::size_t>{0});
  EXPECT_EQ(one.makespan, 12);

  FlowshopInstance flat({Job{3}, Job{1}, Job{4}});
  auto run = nwfs_log_m_approx(flat);
  EXPECT_EQ(run.level_limit, 0u);
  EXPECT_EQ(run.makespan, 8);
  EXPECT_EQ(run.survivors.size(), 4u);
}

TEST(LogMApprox, GuaranteeAndLevelInvariants) {
  Rng rng(36);
  for (int t = 0; t < 250; ++t) {
    auto inst = gen_random_flowshop(uniform_size(rng, 1, 7), uniform_size(rng, 1, 6), 9, rng);
    auto run = nwfs_log_m_approx(inst);
    Time opt = brute_force_nwfs(inst).makespan;
    EXPECT_LE(run.makespan, static_cast<Time>(ceil_log2(inst.machines()) + 1) * opt);
    EXPECT_GE(run.makespan, opt);
    EXPECT_LE(run.levels.size(), run.level_limit);
    std::size_t alive = inst.size() + 1;
    for (const auto& lvl : run.levels) {
      EXPECT_EQ(lvl.vertices.size(), alive);
      EXPECT_LE(lvl.cost, opt);
      EXPECT_LE(2 * lvl.representatives.size(), alive);
      alive = lvl.representatives.size();
    }
    if (!run.single_cycle_exit) {
      EXPECT_EQ(run.survivor_cycle, run.survivors);
      EXPECT_LE(run.survivor_cycle_cost, run.survivor_length_sum);
    }
    EXPECT_EQ(run.tour_cost, run.makespan);
    EXPECT_LE(run.tour_cost, run.union_cost);
  }
}
