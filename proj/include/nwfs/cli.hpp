#pragma once

// Command-line front end. cli_dispatch() is the whole program; tools/nwfs.cpp
// only forwards argv. Exit codes: 0 ok, 1 usage, 2 parse, 3 validation
// failure, 4 internal invariant violation.

#include "nwfs/bench.hpp"
#include "nwfs/embeddings.hpp"
#include "nwfs/generators.hpp"
#include "nwfs/io.hpp"
#include "nwfs/solvers.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace nwfs {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_parse = 2, exit_validation = 3, exit_internal = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace cli {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FlowshopInstance load_flowshop(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_flowshop(in);
}

inline WeightMatrix load_matrix(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_matrix(in);
}

inline json load_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(0, "'" + path + "' is not valid JSON: " + e.what());
  }
}

// Writes to `path`, or to `out` when path is empty or "-".
template <class F>
void emit(const std::string& path, std::ostream& out, F&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  write(f);
}

inline json flowshop_json(const FlowshopInstance& inst) {
  std::vector<std::vector<Time>> jobs;
  for (const Job& j : inst.jobs()) jobs.push_back(j.ops);
  return json{{"machines", inst.machines()}, {"jobs", jobs}};
}

inline FlowshopInstance flowshop_from_json(const json& j) {
  std::vector<Job> jobs;
  for (auto& ops : j.at("jobs").get<std::vector<std::vector<Time>>>()) jobs.emplace_back(ops);
  return FlowshopInstance(std::move(jobs), j.at("machines").get<std::size_t>());
}

inline std::set<int> parse_criteria(const std::string& list) {
  std::set<int> out;
  std::stringstream ss(list);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      int id = std::stoi(tok);
      if (id < 1 || id > 10) throw std::out_of_range(tok);
      out.insert(id);
    } catch (const std::exception&) {
      throw UsageError("unknown acceptance criterion '" + tok + "'");
    }
  }
  return out;
}

}  // namespace cli

inline int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"No-wait flowshop and ATSP toolkit: solvers, reductions, embeddings, benchmarks", "nwfs"};
  app.require_subcommand(1);

  // solve-nwfs
  std::string nwfs_file, nwfs_trace;
  bool nwfs_exact = false, nwfs_approx = false;
  auto* solve_nwfs = app.add_subcommand("solve-nwfs", "Solve a no-wait flowshop instance");
  solve_nwfs->add_option("file", nwfs_file, "Flowshop instance file")->required();
  auto* fe = solve_nwfs->add_flag("--exact", nwfs_exact, "Exact optimum (Held-Karp on the reduction)");
  auto* fa = solve_nwfs->add_flag("--approx", nwfs_approx, "O(log m) approximation (default)");
  fe->excludes(fa);
  solve_nwfs->add_option("--trace", nwfs_trace, "Write the approximation run as a trace document");

  // solve-atsp
  std::string atsp_file;
  bool atsp_exact = false, atsp_fgm = false;
  auto* solve_atsp = app.add_subcommand("solve-atsp", "Solve an ATSP or ATSPP instance");
  solve_atsp->add_option("file", atsp_file, "Matrix file")->required();
  auto* ae = solve_atsp->add_flag("--exact", atsp_exact, "Exact optimum (Held-Karp)");
  auto* af = solve_atsp->add_flag("--fgm", atsp_fgm, "Repeated cycle-cover heuristic (default for tours)");
  ae->excludes(af);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Apply a reduction");
  reduce->require_subcommand(1);
  std::string red_file, red_out, red_trace, red_eps = "1";
  std::size_t red_anchor = 1, red_split = 1;
  auto* n2a = reduce->add_subcommand("nwfs-to-atsp", "Flowshop -> ATSP with a dummy job");
  n2a->add_option("file", red_file, "Flowshop instance file")->required();
  n2a->add_option("-o,--output", red_out, "Matrix output (default stdout)");
  n2a->add_option("--trace", red_trace, "Trace document output")->required();
  auto* a2n = reduce->add_subcommand("atsp-to-nwfs", "ATSP -> no-wait flowshop");
  a2n->add_option("file", red_file, "Matrix file")->required();
  a2n->add_option("--epsilon", red_eps, "Accuracy as an exact fraction p/q in (0,1]")->required();
  a2n->add_option("-o,--output", red_out, "Flowshop output (default stdout)");
  a2n->add_option("--trace", red_trace, "Trace document output")->required();
  a2n->add_option("--anchor", red_anchor, "Replication anchor vertex (1-based)");
  a2n->add_option("--split-vertex", red_split, "Vertex of the replicated instance to split (1-based)");

  // backmap
  std::string bm_trace, bm_solution;
  auto* backmap = app.add_subcommand("backmap", "Map a solution back through a recorded reduction");
  backmap->add_option("trace", bm_trace, "Trace document")->required();
  backmap->add_option("solution", bm_solution, "Solution file ('order:' or 'tour:' line)")->required();

  // embed
  std::string emb_file, emb_out;
  auto* embed = app.add_subcommand("embed", "Encode a semimetric as flowshop jobs");
  embed->add_option("matrix", emb_file, "Matrix file")->required();
  embed->add_option("-o,--output", emb_out, "Flowshop output (default stdout)");

  // gen
  std::string gen_kind;
  std::size_t gen_n = 5, gen_m = 3;
  Weight gen_max = 9;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("kind", gen_kind, "atsp or nwfs")->required()->check(CLI::IsMember({"atsp", "nwfs"}));
  gen->add_option("--n", gen_n, "Vertices or jobs")->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_m, "Machines (nwfs)")->check(CLI::PositiveNumber);
  gen->add_option("--max-weight", gen_max, "Largest weight or operation length")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_seed, "64-bit seed");

  // verify
  std::string ver_file;
  auto* verify = app.add_subcommand("verify", "Validate an instance file");
  verify->add_option("file", ver_file, "Flowshop or matrix file")->required();

  // bench
  std::string bench_suite, bench_out;
  std::size_t bench_count = 100;
  std::uint64_t bench_seed = kAcceptanceSeed;
  bool bench_verbose = false;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and emit a TSV report");
  bench->add_option("--suite", bench_suite, "acceptance[:ids], nwfs or atsp")->required();
  bench->add_option("--count", bench_count, "Instances for the nwfs/atsp suites");
  bench->add_option("--seed", bench_seed, "64-bit seed for the nwfs/atsp suites");
  bench->add_option("-o,--output", bench_out, "TSV output (default stdout)");
  bench->add_flag("-v,--verbose", bench_verbose, "Print per-criterion notes");

  std::vector<const char*> argv{"nwfs"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), const_cast<char**>(argv.data()));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (*solve_nwfs) {
      if (nwfs_exact && !nwfs_trace.empty())
        throw UsageError("--trace records an approximation run and cannot be combined with --exact");
      auto inst = cli::load_flowshop(nwfs_file);
      if (nwfs_exact) {
        auto sol = inst.size() <= kBruteForceLimit - 1 ? brute_force_nwfs(inst) : exact_nwfs(inst);
        out << "order: " << format_indices(sol.permutation.order) << "\nmakespan: " << sol.makespan << '\n';
      } else {
        auto run = nwfs_log_m_approx(inst);
        out << "order: " << format_indices(run.permutation.order) << "\nmakespan: " << run.makespan << '\n';
        if (!nwfs_trace.empty())
          cli::emit(nwfs_trace, out, [&](std::ostream& o) { o << trace_document(run).dump(2) << '\n'; });
      }
      return exit_ok;
    }

    if (*solve_atsp) {
      auto m = cli::load_matrix(atsp_file);
      if (m.kind() == InstanceKind::atspp) {
        if (atsp_fgm) throw UsageError("--fgm solves tour instances only; use --exact for ATSPP");
        auto sol = held_karp(m);
        out << "path: " << format_indices(sol.order) << "\ncost: " << sol.cost << '\n';
        return exit_ok;
      }
      if (atsp_exact) {
        auto sol = held_karp_tour(m);
        out << "tour: " << format_indices(sol.tour.order) << "\ncost: " << sol.cost << '\n';
      } else {
        require_semimetric(m, "solve-atsp --fgm");
        if (m.size() == 1) {
          out << "tour: 1\ncost: 0\n";
          return exit_ok;
        }
        auto t = fgm_atsp(m);
        out << "tour: " << format_indices(t.order) << "\ncost: " << tour_cost(m, t) << '\n';
      }
      return exit_ok;
    }

    if (*n2a) {
      auto inst = cli::load_flowshop(red_file);
      auto red = nwfs_to_atsp(inst);
      cli::emit(red_out, out, [&](std::ostream& o) { write_matrix(o, red.matrix); });
      auto doc = trace_document(red.trace);
      doc["instance"] = cli::flowshop_json(inst);
      cli::emit(red_trace, out, [&](std::ostream& o) { o << doc.dump(2) << '\n'; });
      return exit_ok;
    }

    if (*a2n) {
      auto g = cli::load_matrix(red_file);
      Rational eps = parse_rational(red_eps);
      if (red_anchor < 1 || red_anchor > g.size()) throw UsageError("--anchor out of range");
      HardnessOptions opts{red_anchor - 1, red_split - 1};
      auto h = build_hardness_instance(g, eps, opts);
      cli::emit(red_out, out, [&](std::ostream& o) { write_flowshop(o, h.flowshop); });
      cli::emit(red_trace, out, [&](std::ostream& o) { o << trace_document(h.trace).dump() << '\n'; });
      return exit_ok;
    }

    if (*backmap) {
      json doc = cli::load_json(bm_trace);
      std::string kind = trace_kind(doc);
      std::istringstream sol_in(cli::read_file(bm_solution));
      auto sol = parse_solution(sol_in);
      if (kind == "nwfs-to-atsp") {
        if (!sol.count("tour")) throw ValidationError("solution has no 'tour:' line");
        auto tr = doc.at("trace").get<NwfsAtspTrace>();
        auto sigma = atsp_tour_to_permutation(tr, Tour{sol["tour"]});
        out << "order: " << format_indices(sigma.order) << '\n';
        if (doc.contains("instance"))
          out << "makespan: " << makespan(cli::flowshop_from_json(doc["instance"]), sigma) << '\n';
        return exit_ok;
      }
      if (kind == "atsp-to-nwfs") {
        if (!sol.count("order")) throw ValidationError("solution has no 'order:' line");
        auto tr = doc.at("trace").get<HardnessTrace>();
        auto back = extract_tour_detailed(tr, JobPermutation{sol["order"]});
        out << "tour: " << format_indices(back.tour.order) << "\ncost: " << back.cost << '\n';
        return exit_ok;
      }
      throw ValidationError("trace kind '" + kind + "' has no back-map");
    }

    if (*embed) {
      auto m = cli::load_matrix(emb_file);
      auto jobs = embed_semimetric(m);
      FlowshopInstance inst(std::move(jobs));
      cli::emit(emb_out, out, [&](std::ostream& o) { write_flowshop(o, inst); });
      return exit_ok;
    }

    if (*gen) {
      Rng rng(gen_seed);
      if (gen_kind == "atsp") {
        if (gen_n < 2) throw UsageError("--n must be at least 2 for atsp");
        if (gen_max < 1) throw UsageError("--max-weight must be at least 1 for atsp");
        write_matrix(out, gen_random_semimetric(gen_n, gen_max, rng));
      } else {
        write_flowshop(out, gen_random_flowshop(gen_n, gen_m, gen_max, rng));
      }
      return exit_ok;
    }

    if (*verify) {
      std::string text = cli::read_file(ver_file);
      std::istringstream in(text);
      if (detect_format(text) == FileFormat::flowshop) {
        auto inst = parse_flowshop(in);
        out << "ok: flowshop instance with " << inst.size() << " jobs on " << inst.machines()
            << " machines\n";
        return exit_ok;
      }
      auto m = parse_matrix(in);
      if (auto bad = validate_semimetric(m)) {
        if (bad->kind == SemimetricViolation::Kind::diagonal)
          out << "violation: nonzero diagonal at vertex " << bad->u + 1 << '\n';
        else
          out << "violation: triangle (" << bad->u + 1 << "," << bad->w + 1 << "," << bad->v + 1
              << "): d(" << bad->u + 1 << "," << bad->v + 1 << ")=" << m(bad->u, bad->v) << " > "
              << m(bad->u, bad->w) << "+" << m(bad->w, bad->v) << '\n';
        return exit_validation;
      }
      out << "ok: semimetric on " << m.size() << " vertices\n";
      return exit_ok;
    }

    if (*bench) {
      BenchReport report;
      bool failed = false;
      if (bench_suite.rfind("acceptance", 0) == 0) {
        std::set<int> only;
        if (bench_suite.size() > 10) {
          if (bench_suite[10] != ':') throw UsageError("unknown suite '" + bench_suite + "'");
          only = cli::parse_criteria(bench_suite.substr(11));
        }
        for (const auto& r : run_acceptance(only)) {
          print_criterion(err, r, bench_verbose);
          failed |= !r.passed;
          report.rows.insert(report.rows.end(), r.rows.begin(), r.rows.end());
        }
      } else if (bench_suite == "nwfs") {
        report = bench_nwfs_approx(bench_count, bench_seed);
      } else if (bench_suite == "atsp") {
        report = bench_atsp_fgm(bench_count, bench_seed);
      } else {
        throw UsageError("unknown suite '" + bench_suite + "'");
      }
      cli::emit(bench_out, out, [&](std::ostream& o) { write_tsv(o, report); });
      if (report.violations() > 0) {
        err << "error: " << report.violations() << " rows exceed their guarantee\n";
        return exit_internal;
      }
      return failed ? exit_validation : exit_ok;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const json::exception& e) {
    err << "parse error: malformed trace document: " << e.what() << '\n';
    return exit_parse;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  } catch (const OverflowError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  } catch (const std::exception& e) {
    // StructuralError, ValidationError, LimitError
    err << "error: " << e.what() << '\n';
    return exit_validation;
  }
  return exit_usage;
}

}  // namespace nwfs
