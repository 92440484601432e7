#include "nwfs/embeddings.hpp"
#include "nwfs/generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nwfs;

TEST(Block, Shape) {
  EXPECT_EQ(block_job(2, 3), (Job{0, 1, 1, 1, 0, 0}));
  EXPECT_EQ(block_job(0, 2), (Job{0, 0, 1, 1}));
  EXPECT_EQ(block_job(2, 2), (Job{1, 1, 0, 0}));
  EXPECT_THROW(block_job(4, 3), StructuralError);
  EXPECT_THROW(block_job(0, 0), StructuralError);
}

TEST(Block, DeltaClosedForm) {
  EXPECT_EQ(delta(block_job(2, 3), block_job(1, 3)), 2);
  EXPECT_EQ(delta(block_job(0, 3), block_job(3, 3)), 0);
  for (std::size_t d = 1; d <= 10; ++d)
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = 0; j <= d; ++j) {
        Time expect = i - j == d ? static_cast<Time>(d)
                                 : std::max<Time>(static_cast<Time>(i) - static_cast<Time>(j) + 1, 0);
        EXPECT_EQ(delta(block_job(i, d), block_job(j, d)), expect) << "i=" << i << " j=" << j << " D=" << d;
      }
}

TEST(Embed, TwoPointWorkedExample) {
  // With block scale equal to the largest weight the distance-D pair is one short.
  auto g = WeightMatrix::from_rows({{0, 2}, {1, 0}});
  Job f1 = concat_jobs({block_job(0, 2), block_job(2, 2)});
  Job f2 = concat_jobs({block_job(1, 2), block_job(0, 2)});
  EXPECT_EQ(f1, (Job{0, 0, 1, 1, 1, 1, 0, 0}));
  EXPECT_EQ(f2, (Job{0, 1, 1, 0, 0, 0, 1, 1}));
  EXPECT_EQ(delta(f1, f2), 2);
  EXPECT_EQ(delta(f2, f1), 2);
  EXPECT_THROW(embed_semimetric(g, 2), ValidationError);

  auto jobs = embed_semimetric(g);
  ASSERT_EQ(jobs.size(), 2u);
  EXPECT_EQ(jobs[0].machines(), 12u);
  EXPECT_EQ(delta(jobs[0], jobs[1]), 3);
  EXPECT_EQ(delta(jobs[1], jobs[0]), 2);
}

TEST(Embed, ZeroMetric) {
  auto jobs = embed_semimetric(WeightMatrix(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      if (a != b) {
        EXPECT_EQ(delta(jobs[a], jobs[b]), 1);
      }
}

TEST(Embed, ExactOnRandomSemimetrics) {
  Rng rng(51);
  for (int t = 0; t < 120; ++t) {
    auto g = gen_random_semimetric(uniform_size(rng, 2, 8), static_cast<Weight>(uniform_size(rng, 1, 12)), rng);
    std::size_t scale = static_cast<std::size_t>(g.max_weight()) + uniform_size(rng, 1, 3);
    auto jobs = embed_semimetric(g, scale);
    for (Vertex u = 0; u < g.size(); ++u) {
      EXPECT_EQ(jobs[u].machines(), 2 * g.size() * scale);
      EXPECT_EQ(job_length(jobs[u]), static_cast<Time>(g.size() * scale));
      for (Vertex v = 0; v < g.size(); ++v)
        if (u != v) {
          EXPECT_EQ(delta(jobs[u], jobs[v]), g(u, v) + 1);
        }
    }
  }
}

TEST(Embed, RejectsNonSemimetric) {
  auto bad = WeightMatrix::from_rows({{0, 1, 5}, {1, 0, 1}, {1, 1, 0}});
  EXPECT_THROW(embed_semimetric(bad), ValidationError);
}

TEST(Gadget, Blocks) {
  EXPECT_EQ(gadget_block_zero(1), (Job{1, 0, 1, 0}));
  EXPECT_EQ(gadget_block_one(1), (Job{1, 1, 0, 0}));
  EXPECT_EQ(gadget_half_size(2), 1u);
  EXPECT_EQ(gadget_half_size(3), 2u);
  EXPECT_EQ(gadget_half_size(6), 2u);
  EXPECT_EQ(gadget_half_size(7), 3u);
  EXPECT_EQ(central_binomial(4), 70u);
}

TEST(Gadget, TwoCopies) {
  auto pats = gadget_patterns(2);
  EXPECT_EQ(pats, (std::vector<std::vector<bool>>{{true, false}, {false, true}}));
  auto h = gadget_jobs(2, 3);
  EXPECT_EQ(h[0].machines(), 24u);
  EXPECT_EQ(delta(h[0], h[1]), 3);
  EXPECT_EQ(delta(h[0], h[0]), 1);
}

TEST(Gadget, SixCopies) {
  auto pats = gadget_patterns(6);
  ASSERT_EQ(pats.size(), 6u);
  EXPECT_EQ(pats.front(), (std::vector<bool>{true, true, false, false}));
  EXPECT_EQ(pats.back(), (std::vector<bool>{false, false, true, true}));
  auto h = gadget_jobs(6, 2);
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      if (a != b) {
        EXPECT_EQ(delta(h[a], h[b]), 2);
        ++pairs;
      }
  EXPECT_EQ(pairs, 30u);
}

TEST(Gadget, AllSmallFamilies) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t d = 1; d <= 6; ++d) {
      auto h = gadget_jobs(n, d);
      ASSERT_EQ(h.size(), n);
      for (std::size_t a = 0; a < n; ++a) {
        EXPECT_EQ(job_length(h[a]), static_cast<Time>(4 * gadget_half_size(n) * d));
        for (std::size_t b = 0; b < n; ++b)
          EXPECT_EQ(delta(h[a], h[b]), a == b ? 1 : static_cast<Time>(d));
      }
    }
}

namespace {

void expect_structure(const HardnessInstance& h) {
  const auto& tr = h.trace;
  const auto& fs = h.flowshop;
  ASSERT_EQ(fs.size(), tr.copies * tr.path_vertices);
  EXPECT_EQ(tr.copies, tr.path_vertices);
  EXPECT_EQ(tr.block_scale, static_cast<std::size_t>(2 * tr.max_weight + 1));
  EXPECT_EQ(fs.machines(), tr.embedding_machines + tr.gadget_machines);
  EXPECT_EQ(tr.embedding_machines, 2 * tr.path_vertices * tr.block_scale);
  for (std::size_t a = 0; a < fs.size(); ++a) {
    EXPECT_EQ(job_length(fs.job(a)), tr.job_length);
    for (std::size_t b = 0; b < fs.size(); ++b)
      if (a != b) {
        ASSERT_EQ(delta(fs.job(a), fs.job(b)), tr.joined_weight(a, b) + 1) << a << "," << b;
      }
  }
}

}  // namespace

TEST(Hardness, UnitFourVertexStructure) {
  auto h = build_hardness_instance(WeightMatrix(4, 1), Rational(1, 2));
  EXPECT_EQ(h.trace.replication.copies, 4u);
  EXPECT_EQ(h.trace.path_vertices, 14u);
  EXPECT_EQ(h.trace.scale, 2);
  expect_structure(h);
}

TEST(Hardness, TinyEndToEnd) {
  auto g = WeightMatrix::from_rows({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}});
  auto h = build_hardness_instance(g, Rational(1));
  expect_structure(h);
  const auto& tr = h.trace;
  EXPECT_EQ(tr.path_vertices, 6u);

  auto best = held_karp_path(tr.path_instance, std::nullopt);
  auto sigma = copywise_permutation(tr, best.path);
  EXPECT_EQ(makespan(h.flowshop, sigma), tr.predicted_optimum(best.cost));

  auto back = extract_tour_detailed(tr, sigma);
  EXPECT_EQ(back.chosen, 0u);
  EXPECT_EQ(back.path_cost_scaled, best.cost);
  EXPECT_EQ(back.cost, oracle::best_tour(g));
  EXPECT_EQ(tour_cost(g, extract_tour(h, sigma)), back.cost);
}

TEST(Hardness, ExtractionIsMonotone) {
  Rng rng(52);
  auto g = gen_random_semimetric(3, 6, rng);
  auto h = build_hardness_instance(g, Rational(1));
  for (int t = 0; t < 100; ++t) {
    JobPermutation sigma{random_permutation(h.flowshop.size(), rng)};
    auto back = extract_tour_detailed(h.trace, sigma);
    EXPECT_EQ(back.joined_cost + static_cast<Weight>(h.flowshop.size()) - 1 + h.trace.job_length,
              makespan(h.flowshop, sigma));
    EXPECT_LE(back.contiguous_cost, back.joined_cost);
    EXPECT_LE(static_cast<Weight>(h.trace.copies) * back.path_cost_scaled,
              back.contiguous_cost - 2 * h.trace.max_weight * static_cast<Weight>(h.trace.copies - 1));
    EXPECT_EQ(tour_cost(g, back.tour), back.cost);
  }
}

TEST(Hardness, Options) {
  auto g = gen_random_semimetric(4, 5, 53);
  auto h = build_hardness_instance(g, Rational(1), {2, 3});
  EXPECT_EQ(h.trace.replication.anchor, 2u);
  EXPECT_EQ(h.trace.split.split, 3u);
  expect_structure(h);
  EXPECT_THROW(build_hardness_instance(g, Rational(1), {4, 0}), StructuralError);
}

TEST(Hardness, RejectsBadInput) {
  EXPECT_THROW(build_hardness_instance(WeightMatrix(3, 1), Rational(2)), StructuralError);
  EXPECT_THROW(build_hardness_instance(WeightMatrix(2, 1), Rational(1)), ValidationError);
  auto bad = WeightMatrix::from_rows({{0, 1, 5}, {1, 0, 1}, {1, 1, 0}});
  EXPECT_THROW(build_hardness_instance(bad, Rational(1)), ValidationError);
  auto h = build_hardness_instance(WeightMatrix(3, 1), Rational(1));
  EXPECT_THROW(extract_tour(h, {{0, 1}}), StructuralError);
}
