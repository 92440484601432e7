#include "nwfs/cli.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace nwfs;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("nwfs-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& body = "") {
    auto p = (dir_ / name).string();
    if (!body.empty()) std::ofstream(p) << body;
    return p;
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

const char* kTwoJobs = "2 2\n3 2\n1 4\n";
const char* kBadTriangle = "3\n0 1 5\n1 0 1\n1 1 0\n";

}  // namespace

TEST_F(Cli, SolveNwfsExact) {
  auto r = run({"solve-nwfs", file("two.txt", kTwoJobs), "--exact"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "order: 2 1\nmakespan: 7\n");
}

TEST_F(Cli, SolveNwfsApproxWithTrace) {
  auto trace = file("run.json");
  auto r = run({"solve-nwfs", file("two.txt", kTwoJobs), "--trace", trace});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "order: 2 1\nmakespan: 7\n");
  EXPECT_EQ(trace_kind(json::parse(slurp(trace))), "approx-run");
}

TEST_F(Cli, UsageErrors) {
  auto two = file("two.txt", kTwoJobs);
  EXPECT_EQ(run({"solve-nwfs", two, "--exact", "--approx"}).code, exit_usage);
  EXPECT_EQ(run({"solve-nwfs", two, "--exact", "--trace", file("t.json")}).code, exit_usage);
  EXPECT_EQ(run({}).code, exit_usage);
  EXPECT_EQ(run({"frobnicate"}).code, exit_usage);
  EXPECT_EQ(run({"solve-nwfs", file("missing.txt")}).code, exit_usage);
  EXPECT_EQ(run({"bench", "--suite", "nope"}).code, exit_usage);
  EXPECT_EQ(run({"bench", "--suite", "acceptance:11"}).code, exit_usage);
  EXPECT_EQ(run({"--help"}).code, exit_ok);
}

TEST_F(Cli, ParseErrorsReportLine) {
  auto r = run({"solve-nwfs", file("bad.txt", "2 2\n3 2\n1 q\n")});
  EXPECT_EQ(r.code, exit_parse);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
}

TEST_F(Cli, VerifyReportsTriple) {
  auto r = run({"verify", file("bad.txt", kBadTriangle)});
  EXPECT_EQ(r.code, exit_validation);
  EXPECT_NE(r.out.find("(1,2,3)"), std::string::npos);
  EXPECT_EQ(run({"verify", file("ok.txt", "3\n0 1 1\n1 0 1\n1 1 0\n")}).code, exit_ok);
  EXPECT_EQ(run({"verify", file("two.txt", kTwoJobs)}).code, exit_ok);
}

TEST_F(Cli, SolveAtsp) {
  auto m = file("m.txt", "3\n0 1 9\n9 0 1\n1 9 0\n");
  auto r = run({"solve-atsp", m, "--exact"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "tour: 1 2 3\ncost: 3\n");
  EXPECT_EQ(run({"solve-atsp", m}).code, exit_validation);
  auto metric = file("metric.txt", "3\n0 1 2\n2 0 1\n1 2 0\n");
  EXPECT_EQ(run({"solve-atsp", metric}).out, "tour: 1 2 3\ncost: 3\n");
  auto p = file("p.txt", "ATSPP 3 2\n3\n0 1 9\n9 0 1\n1 9 0\n");
  EXPECT_EQ(run({"solve-atsp", p, "--exact"}).out, "path: 3 1 2\ncost: 2\n");
  EXPECT_EQ(run({"solve-atsp", p, "--fgm"}).code, exit_usage);
  EXPECT_EQ(run({"solve-atsp", file("bad.txt", kBadTriangle), "--fgm"}).code, exit_validation);
}

TEST_F(Cli, ReduceAndBackmapFlowshop) {
  auto mat = file("red.txt"), trace = file("red.json");
  auto r = run({"reduce", "nwfs-to-atsp", file("two.txt", kTwoJobs), "-o", mat, "--trace", trace});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(mat), "3\n0 0 0\n5 0 4\n5 2 0\n");
  auto sol = run({"solve-atsp", mat, "--exact"});
  auto solfile = file("sol.txt", sol.out);
  auto b = run({"backmap", trace, solfile});
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.out, "order: 2 1\nmakespan: 7\n");
}

TEST_F(Cli, ReduceAndBackmapHardness) {
  std::string g_text = "3\n0 1 2\n2 0 1\n1 2 0\n";
  auto g = file("g.txt", g_text);
  auto inst = file("h.txt"), trace = file("h.json");
  auto r = run({"reduce", "atsp-to-nwfs", g, "--epsilon", "1", "-o", inst, "--trace", trace});
  ASSERT_EQ(r.code, 0) << r.err;

  auto tr = json::parse(slurp(trace)).at("trace").get<HardnessTrace>();
  std::ifstream in(inst);
  auto flowshop = parse_flowshop(in);
  EXPECT_EQ(flowshop.size(), tr.job_count());

  auto best = held_karp_path(tr.path_instance, std::nullopt);
  auto sigma = copywise_permutation(tr, best.path);
  auto sol = file("sol.txt", "order: " + format_indices(sigma.order) + "\n");
  auto b = run({"backmap", trace, sol});
  ASSERT_EQ(b.code, 0) << b.err;
  std::istringstream g_in(g_text);
  auto graph = parse_matrix(g_in);
  EXPECT_EQ(b.out.substr(b.out.find("cost: ")), "cost: " + std::to_string(oracle::best_tour(graph)) + "\n");

  EXPECT_EQ(run({"reduce", "atsp-to-nwfs", g, "--epsilon", "3/2", "--trace", file("x.json")}).code,
            exit_validation);
  EXPECT_EQ(run({"reduce", "atsp-to-nwfs", g, "--epsilon", "1", "--trace", file("y.json"), "--anchor", "4"}).code,
            exit_usage);
  auto sol_bad = file("bad.txt", "tour: 1 2 3\n");
  EXPECT_EQ(run({"backmap", trace, sol_bad}).code, exit_validation);
}

TEST_F(Cli, BackmapRejectsMalformedTrace) {
  auto sol = file("sol.txt", "tour: 1 2\n");
  EXPECT_EQ(run({"backmap", file("t.json", "{not json"), sol}).code, exit_parse);
  EXPECT_EQ(run({"backmap", file("u.json", "{\"format\":\"other\"}"), sol}).code, exit_validation);
}

TEST_F(Cli, EmbedAndGen) {
  auto e = run({"embed", file("m.txt", "2\n0 2\n1 0\n")});
  ASSERT_EQ(e.code, 0) << e.err;
  std::istringstream in(e.out);
  auto inst = parse_flowshop(in);
  EXPECT_EQ(delta(inst.job(0), inst.job(1)), 3);
  EXPECT_EQ(delta(inst.job(1), inst.job(0)), 2);

  auto a = run({"gen", "atsp", "--n", "6", "--max-weight", "20", "--seed", "7"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run({"gen", "atsp", "--n", "6", "--max-weight", "20", "--seed", "7"}).out);
  std::istringstream ain(a.out);
  EXPECT_TRUE(is_semimetric(parse_matrix(ain)));

  auto n = run({"gen", "nwfs", "--n", "4", "--m", "3", "--seed", "9"});
  std::istringstream nin(n.out);
  auto f = parse_flowshop(nin);
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(f.machines(), 3u);
  EXPECT_EQ(run({"gen", "graph"}).code, exit_usage);
}

TEST_F(Cli, BenchSuites) {
  auto r = run({"bench", "--suite", "nwfs", "--count", "20", "--seed", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("instance\tn\tm\talgorithm", 0), 0u);
  EXPECT_NE(r.out.find("# bound_violations=0"), std::string::npos);
  EXPECT_EQ(run({"bench", "--suite", "atsp", "--count", "20"}).code, 0);

  auto acc = run({"bench", "--suite", "acceptance:5"});
  EXPECT_EQ(acc.code, 0);
  EXPECT_EQ(acc.err.rfind("PASS  [5]", 0), 0u);
}
