#pragma once

// Text formats for flowshop instances, distance matrices and solutions, plus
// the JSON trace document shared by every reduction and by approximation runs.
//
// Flowshop instance:        Distance matrix:
//   # comment                 ATSPP [source sink]   (optional, 1-based)
//   n m                       n
//   t_11 ... t_1m             d_11 ... d_1n
//   ...                       ...
//
// Solution files hold lines such as "order: 2 1" or "tour: 1 3 2" with
// 1-based indices; other lines ("makespan: 7") are ignored.

#include "nwfs/common.hpp"
#include "nwfs/embeddings.hpp"
#include "nwfs/flowshop.hpp"
#include "nwfs/graph.hpp"
#include "nwfs/solvers.hpp"
#include "nwfs/transforms.hpp"

#include <json.hpp>

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

template <>
struct nlohmann::adl_serializer<nwfs::Rational> {
  static void to_json(nlohmann::json& j, const nwfs::Rational& r) { j = nwfs::to_string(r); }
  static void from_json(const nlohmann::json& j, nwfs::Rational& r) { r = nwfs::parse_rational(j.get<std::string>()); }
};

namespace nwfs {

using json = nlohmann::json;

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-blank lines that do not start with '#'.
inline std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    std::size_t first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    std::istringstream ss(text);
    Line l{number, {}};
    for (std::string tok; ss >> tok;) l.tokens.push_back(tok);
    out.push_back(std::move(l));
  }
  return out;
}

inline std::int64_t parse_int(const std::string& tok, std::size_t line, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" + tok + "'");
  }
}

inline std::int64_t parse_nonnegative(const std::string& tok, std::size_t line, const char* what) {
  std::int64_t v = parse_int(tok, line, what);
  if (v < 0) throw ParseError(line, std::string(what) + " must be nonnegative, got " + tok);
  return v;
}

}  // namespace detail

inline FlowshopInstance parse_flowshop(std::istream& in) {
  auto lines = detail::significant_lines(in);
  if (lines.empty()) throw ParseError(0, "empty flowshop file");
  const auto& head = lines.front();
  if (head.tokens.size() != 2) throw ParseError(head.number, "expected header 'n m'");
  auto n = detail::parse_nonnegative(head.tokens[0], head.number, "job count");
  auto m = detail::parse_nonnegative(head.tokens[1], head.number, "machine count");
  if (n < 1) throw ParseError(head.number, "job count must be at least 1");
  if (m < 1) throw ParseError(head.number, "machine count must be at least 1");
  if (lines.size() - 1 != static_cast<std::size_t>(n))
    throw ParseError(lines.back().number, "expected " + std::to_string(n) + " job lines, found " +
                                              std::to_string(lines.size() - 1));
  std::vector<Job> jobs;
  for (std::size_t j = 1; j < lines.size(); ++j) {
    const auto& l = lines[j];
    if (l.tokens.size() != static_cast<std::size_t>(m))
      throw ParseError(l.number, "expected " + std::to_string(m) + " operation lengths, found " +
                                     std::to_string(l.tokens.size()));
    std::vector<Time> ops;
    for (const auto& t : l.tokens) ops.push_back(detail::parse_nonnegative(t, l.number, "operation length"));
    jobs.emplace_back(std::move(ops));
  }
  return FlowshopInstance(std::move(jobs), static_cast<std::size_t>(m));
}

inline void write_flowshop(std::ostream& out, const FlowshopInstance& inst) {
  out << inst.size() << ' ' << inst.machines() << '\n';
  for (const Job& j : inst.jobs()) {
    for (std::size_t q = 0; q < j.ops.size(); ++q) out << (q ? " " : "") << j.ops[q];
    out << '\n';
  }
}

inline WeightMatrix parse_matrix(std::istream& in) {
  auto lines = detail::significant_lines(in);
  if (lines.empty()) throw ParseError(0, "empty matrix file");
  std::size_t at = 0;
  bool path = false;
  std::optional<std::pair<Vertex, Vertex>> endpoints;
  std::size_t header_line = 0;
  if (lines[0].tokens[0] == "ATSPP") {
    path = true;
    header_line = lines[0].number;
    const auto& t = lines[0].tokens;
    if (t.size() == 3) {
      auto s = detail::parse_int(t[1], header_line, "source");
      auto e = detail::parse_int(t[2], header_line, "sink");
      if (s < 1 || e < 1) throw ParseError(header_line, "endpoints are 1-based");
      endpoints = std::pair<Vertex, Vertex>(static_cast<Vertex>(s - 1), static_cast<Vertex>(e - 1));
    } else if (t.size() != 1) {
      throw ParseError(header_line, "expected 'ATSPP' or 'ATSPP source sink'");
    }
    ++at;
  }
  if (at >= lines.size()) throw ParseError(lines.back().number, "missing size line");
  const auto& size_line = lines[at];
  if (size_line.tokens.size() != 1) throw ParseError(size_line.number, "expected a single size 'n'");
  auto n = detail::parse_nonnegative(size_line.tokens[0], size_line.number, "size");
  if (n < 1) throw ParseError(size_line.number, "size must be at least 1");
  ++at;
  if (lines.size() - at != static_cast<std::size_t>(n))
    throw ParseError(lines.back().number, "expected " + std::to_string(n) + " matrix rows, found " +
                                              std::to_string(lines.size() - at));
  std::vector<Weight> entries;
  for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) {
    const auto& l = lines[at + r];
    if (l.tokens.size() != static_cast<std::size_t>(n))
      throw ParseError(l.number, "expected " + std::to_string(n) + " entries, found " +
                                     std::to_string(l.tokens.size()));
    for (std::size_t c = 0; c < l.tokens.size(); ++c) {
      Weight w = detail::parse_nonnegative(l.tokens[c], l.number, "weight");
      if (c == r && w != 0) throw ParseError(l.number, "diagonal entry must be 0");
      entries.push_back(w);
    }
  }
  WeightMatrix m(static_cast<std::size_t>(n), std::move(entries));
  if (path) {
    if (endpoints && (endpoints->first >= m.size() || endpoints->second >= m.size() ||
                      endpoints->first == endpoints->second))
      throw ParseError(header_line, "invalid ATSPP endpoints");
    m.make_atspp(endpoints);
  }
  return m;
}

inline void write_matrix(std::ostream& out, const WeightMatrix& m) {
  if (m.kind() == InstanceKind::atspp) {
    out << "ATSPP";
    if (m.endpoints()) out << ' ' << m.endpoints()->first + 1 << ' ' << m.endpoints()->second + 1;
    out << '\n';
  }
  out << m.size() << '\n';
  for (Vertex u = 0; u < m.size(); ++u) {
    for (Vertex v = 0; v < m.size(); ++v) out << (v ? " " : "") << m(u, v);
    out << '\n';
  }
}

enum class FileFormat { flowshop, matrix };

inline FileFormat detect_format(const std::string& text) {
  std::istringstream in(text);
  auto lines = detail::significant_lines(in);
  if (lines.empty()) throw ParseError(0, "empty file");
  if (lines[0].tokens[0] == "ATSPP" || lines[0].tokens.size() == 1) return FileFormat::matrix;
  if (lines[0].tokens.size() == 2) return FileFormat::flowshop;
  throw ParseError(lines[0].number, "cannot tell a flowshop instance from a matrix");
}

// key -> 0-based indices, read from "key: i j k" lines with 1-based indices.
inline std::map<std::string, std::vector<std::size_t>> parse_solution(std::istream& in) {
  std::map<std::string, std::vector<std::size_t>> out;
  for (const auto& l : detail::significant_lines(in)) {
    const std::string& key = l.tokens[0];
    if (key != "order:" && key != "tour:" && key != "path:") continue;
    std::vector<std::size_t> idx;
    for (std::size_t k = 1; k < l.tokens.size(); ++k) {
      auto v = detail::parse_int(l.tokens[k], l.number, "index");
      if (v < 1) throw ParseError(l.number, "indices are 1-based");
      idx.push_back(static_cast<std::size_t>(v - 1));
    }
    out[key.substr(0, key.size() - 1)] = std::move(idx);
  }
  return out;
}

inline std::string format_indices(std::span<const std::size_t> idx) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? " " : "") + std::to_string(idx[k] + 1);
  return s;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline constexpr int kTraceVersion = 1;


inline void to_json(json& j, const WeightMatrix& m) {
  std::vector<std::vector<Weight>> rows(m.size(), std::vector<Weight>(m.size()));
  for (Vertex u = 0; u < m.size(); ++u)
    for (Vertex v = 0; v < m.size(); ++v) rows[u][v] = m(u, v);
  j = json{{"kind", m.kind() == InstanceKind::atsp ? "atsp" : "atspp"}, {"rows", rows}};
  if (m.endpoints()) j["endpoints"] = {m.endpoints()->first, m.endpoints()->second};
}

inline void from_json(const json& j, WeightMatrix& m) {
  m = WeightMatrix::from_rows(j.at("rows").get<std::vector<std::vector<Weight>>>());
  if (j.at("kind").get<std::string>() == "atspp") {
    std::optional<std::pair<Vertex, Vertex>> ends;
    if (j.contains("endpoints")) {
      auto e = j.at("endpoints").get<std::vector<Vertex>>();
      ends = std::pair<Vertex, Vertex>(e.at(0), e.at(1));
    }
    m.make_atspp(ends);
  }
}

inline void to_json(json& j, const NwfsAtspTrace& t) {
  j = json{{"dummy", t.dummy}, {"jobs", t.jobs}};
}
inline void from_json(const json& j, NwfsAtspTrace& t) {
  t.dummy = j.at("dummy").get<Vertex>();
  t.jobs = j.at("jobs").get<std::size_t>();
}

inline void to_json(json& j, const NormalizationTrace& t) {
  j = json{{"certificate", t.certificate}, {"epsilon", t.epsilon},   {"log_term", t.log_term},
           {"step", t.step},               {"n", t.n},               {"original_max", t.original_max},
           {"normalized_max", t.normalized_max}, {"normalized", t.normalized}};
}
inline void from_json(const json& j, NormalizationTrace& t) {
  t.certificate = j.at("certificate").get<Weight>();
  t.epsilon = j.at("epsilon").get<Rational>();
  t.log_term = j.at("log_term").get<std::size_t>();
  t.step = j.at("step").get<Rational>();
  t.n = j.at("n").get<std::size_t>();
  t.original_max = j.at("original_max").get<Weight>();
  t.normalized_max = j.at("normalized_max").get<Weight>();
  t.normalized = j.at("normalized").get<WeightMatrix>();
}

inline void to_json(json& j, const ReplicationTrace& t) {
  j = json{{"copies", t.copies}, {"anchor", t.anchor}, {"base", t.base}, {"replicated", t.replicated}};
}
inline void from_json(const json& j, ReplicationTrace& t) {
  t.copies = j.at("copies").get<std::size_t>();
  t.anchor = j.at("anchor").get<Vertex>();
  t.base = j.at("base").get<WeightMatrix>();
  t.replicated = j.at("replicated").get<WeightMatrix>();
}

inline void to_json(json& j, const SplitTrace& t) {
  j = json{{"split", t.split}, {"v_out", t.v_out}, {"v_in", t.v_in}, {"padding", t.padding},
           {"matrix", t.matrix}};
}
inline void from_json(const json& j, SplitTrace& t) {
  t.split = j.at("split").get<Vertex>();
  t.v_out = j.at("v_out").get<Vertex>();
  t.v_in = j.at("v_in").get<Vertex>();
  t.padding = j.at("padding").get<Weight>();
  t.matrix = j.at("matrix").get<WeightMatrix>();
}

inline void to_json(json& j, const HardnessTrace& t) {
  j = json{{"epsilon", t.epsilon},
           {"original", t.original},
           {"certificate", t.certificate},
           {"normalization", t.normalization},
           {"replication", t.replication},
           {"split", t.split},
           {"scale", t.scale},
           {"path_instance", t.path_instance},
           {"copies", t.copies},
           {"path_vertices", t.path_vertices},
           {"max_weight", t.max_weight},
           {"block_scale", t.block_scale},
           {"gadget_half", t.gadget_half},
           {"job_length", t.job_length},
           {"embedding_machines", t.embedding_machines},
           {"gadget_machines", t.gadget_machines},
           {"job_map", "job j -> copy j / path_vertices, vertex j % path_vertices"}};
}
inline void from_json(const json& j, HardnessTrace& t) {
  t.epsilon = j.at("epsilon").get<Rational>();
  t.original = j.at("original").get<WeightMatrix>();
  t.certificate = j.at("certificate").get<Weight>();
  t.normalization = j.at("normalization").get<NormalizationTrace>();
  t.replication = j.at("replication").get<ReplicationTrace>();
  t.split = j.at("split").get<SplitTrace>();
  t.scale = j.at("scale").get<Weight>();
  t.path_instance = j.at("path_instance").get<WeightMatrix>();
  t.copies = j.at("copies").get<std::size_t>();
  t.path_vertices = j.at("path_vertices").get<std::size_t>();
  t.max_weight = j.at("max_weight").get<Weight>();
  t.block_scale = j.at("block_scale").get<std::size_t>();
  t.gadget_half = j.at("gadget_half").get<std::size_t>();
  t.job_length = j.at("job_length").get<Time>();
  t.embedding_machines = j.at("embedding_machines").get<std::size_t>();
  t.gadget_machines = j.at("gadget_machines").get<std::size_t>();
}

inline void to_json(json& j, const CoverLevel& l) {
  j = json{{"vertices", l.vertices},
           {"successor", l.cover.successor},
           {"cycles", l.cycles},
           {"representatives", l.representatives},
           {"cost", l.cost}};
}
inline void from_json(const json& j, CoverLevel& l) {
  l.vertices = j.at("vertices").get<std::vector<Vertex>>();
  l.cover.successor = j.at("successor").get<std::vector<Vertex>>();
  l.cycles = j.at("cycles").get<std::vector<std::vector<Vertex>>>();
  l.representatives = j.at("representatives").get<std::vector<Vertex>>();
  l.cost = j.at("cost").get<Weight>();
}

inline void to_json(json& j, const ApproxRun& r) {
  j = json{{"level_limit", r.level_limit},
           {"levels", r.levels},
           {"single_cycle_exit", r.single_cycle_exit},
           {"survivors", r.survivors},
           {"survivor_cycle", r.survivor_cycle},
           {"survivor_cycle_cost", r.survivor_cycle_cost},
           {"survivor_length_sum", r.survivor_length_sum},
           {"total_length_sum", r.total_length_sum},
           {"union_cost", r.union_cost},
           {"walk", r.walk},
           {"tour", r.tour.order},
           {"tour_cost", r.tour_cost},
           {"permutation", r.permutation.order},
           {"makespan", r.makespan}};
}
inline void from_json(const json& j, ApproxRun& r) {
  r.level_limit = j.at("level_limit").get<std::size_t>();
  r.levels = j.at("levels").get<std::vector<CoverLevel>>();
  r.single_cycle_exit = j.at("single_cycle_exit").get<bool>();
  r.survivors = j.at("survivors").get<std::vector<Vertex>>();
  r.survivor_cycle = j.at("survivor_cycle").get<std::vector<Vertex>>();
  r.survivor_cycle_cost = j.at("survivor_cycle_cost").get<Weight>();
  r.survivor_length_sum = j.at("survivor_length_sum").get<Time>();
  r.total_length_sum = j.at("total_length_sum").get<Time>();
  r.union_cost = j.at("union_cost").get<Weight>();
  r.walk = j.at("walk").get<std::vector<Vertex>>();
  r.tour.order = j.at("tour").get<std::vector<Vertex>>();
  r.tour_cost = j.at("tour_cost").get<Weight>();
  r.permutation.order = j.at("permutation").get<std::vector<std::size_t>>();
  r.makespan = j.at("makespan").get<Time>();
}

// Trace documents carry a "kind" tag: "nwfs-to-atsp", "atsp-to-nwfs" or
// "approx-run"; indices inside are 0-based.
inline json trace_document(const NwfsAtspTrace& t) {
  return json{{"format", "nwfs-trace"}, {"version", kTraceVersion}, {"kind", "nwfs-to-atsp"},
              {"trace", t}};
}

inline json trace_document(const HardnessTrace& t) {
  return json{{"format", "nwfs-trace"}, {"version", kTraceVersion}, {"kind", "atsp-to-nwfs"},
              {"trace", t}};
}

inline json trace_document(const ApproxRun& r) {
  return json{{"format", "nwfs-trace"}, {"version", kTraceVersion}, {"kind", "approx-run"},
              {"trace", r}};
}

inline std::string trace_kind(const json& doc) {
  if (!doc.is_object() || doc.value("format", "") != "nwfs-trace")
    throw ValidationError("not a trace document");
  if (doc.value("version", 0) != kTraceVersion)
    throw ValidationError("unsupported trace version");
  return doc.at("kind").get<std::string>();
}

}  // namespace nwfs
