#include "tricompact/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "tricompact/connectivity.hpp"
#include "tricompact/decomposition.hpp"
#include "tricompact/drp.hpp"
#include "tricompact/generators.hpp"
#include "tricompact/oracles.hpp"

namespace tricompact::cli {

namespace {

// The oracles stay usable up to this size in --oracle-check.
constexpr OracleBudget kOracleBudget{220, 1 << 20, 600.0};

using Clock = std::chrono::steady_clock;

void check(RunReport& r, std::string condition, bool ok, std::string witness = {}) {
  r.checks.push_back({std::move(condition), ok, ok ? std::string() : std::move(witness)});
}

void prefixed(RunReport& r, const std::string& prefix, const std::vector<CheckRecord>& records) {
  for (const auto& c : records) r.checks.push_back({prefix + c.condition, c.passed, c.detail});
}

std::string pair_text(Vertex a, Vertex b) { return std::to_string(a) + "," + std::to_string(b); }

CompactorParams params(const Options& opt) { return CompactorParams::make(opt.c, opt.d, opt.delta, opt.n0); }

DrpInstance instance(const Options& opt, Graph g) {
  if (opt.terminals.size() != 4) throw Error(ErrorKind::BadTerminals, "--terminals needs exactly four vertices");
  const auto& t = opt.terminals;
  return DrpInstance(std::move(g), t[0], t[1], t[2], t[3]);
}

// Node graph with its virtual edges, on the node's vertices.
Graph node_graph(const TreeNode& node) {
  const Vertex top = node.vertices.empty() ? 0 : node.vertices.back() + 1;
  Graph h(top);
  for (Vertex v = 0; v < top; ++v)
    if (!std::binary_search(node.vertices.begin(), node.vertices.end(), v)) h.remove_vertex(v);
  for (const Edge& e : node.edges) h.add_edge(e.u, e.v);
  return h;
}

void check_tree(RunReport& r, const Graph& g, const CutTree& t, const std::string& name) {
  check(r, name + " is a tree", t.is_tree());
  std::string bad_node, bad_cut;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& node = t.nodes[i];
    if (node.kind == NodeKind::Cut) {
      if (node.chord) continue;
      const std::vector<Vertex> pair = node.vertices;
      if (bad_cut.empty() && (pair.size() != 2 || bf_is_connected(g, pair)))
        bad_cut = "node " + std::to_string(i);
      continue;
    }
    const Graph h = node_graph(node);
    bool ok = true;
    if (node.kind == NodeKind::ThreeConnected) ok = h.num_vertices() >= 4 && is_k_connected(h, 3);
    else {
      ok = h.num_edges() == h.num_vertices() && h.num_vertices() >= 3;
      for (Vertex v : h.vertices()) ok = ok && h.degree(v) == 2;
      ok = ok && is_connected(h);
    }
    if (!ok && bad_node.empty()) bad_node = "node " + std::to_string(i);
  }
  check(r, name + " graph nodes are 3-connected or cycles", bad_node.empty(), bad_node);
  check(r, name + " cut nodes are 2-cuts", bad_cut.empty(), bad_cut);
}

void check_minor(RunReport& r, const std::string& prefix, const Graph& before, const Graph& after) {
  if (after.num_vertices() > kOracleBudget.max_vertices) return;
  bool ok = false;
  try {
    ok = bf_is_3_connected(after, kOracleBudget);
  } catch (const Error&) {
  }
  check(r, prefix + "oracle: result is 3-connected", ok,
        std::to_string(before.num_vertices()) + " -> " + std::to_string(after.num_vertices()) + " vertices");
}

// Replays a serialized compaction from `start`, re-verifying every step.
void verify_sequence(RunReport& r, const Graph& start, const Json& seq, const CompactorParams& p, VerifyLevel level,
                     bool oracle) {
  Graph g = start;
  auto prot = seq.at("protected").get<std::vector<Vertex>>();
  int i = 0;
  for (const auto& step : seq.at("steps")) {
    const std::string prefix = "step " + std::to_string(i++) + ": ";
    check(r, prefix + "recorded size matches", step.at("vertices").get<int>() == g.num_vertices() &&
                                                   step.at("edges").get<int>() == g.num_edges());
    const CompactorOutput out = output_from_json(step.at("output"));
    prefixed(r, prefix, verify_output(g, prot, p, out, level));
    Minor minor = apply_minor_op(g, out.op(), prot);
    for (Vertex& v : prot) v = minor.map(v);
    if (oracle) check_minor(r, prefix, g, minor.graph);
    g = std::move(minor.graph);
  }
  const auto& last = seq.at("last");
  check(r, "last graph matches", last.at("vertices").get<int>() == g.num_vertices() &&
                                     last.at("edges").get<int>() == g.num_edges());
  check(r, "protected vertices match", seq.at("protected_last").get<std::vector<Vertex>>() == prot);
}

std::string format_double(double x, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VerificationFailed:
    case ErrorKind::CoverTooLarge:
    case ErrorKind::NoGadget:
    case ErrorKind::BadPartition: return kVerificationFailure;
    default: return kInputError;
  }
}

Graph load_graph(const Options& opt) {
  if (!opt.family.empty()) {
    gen::Rng rng(opt.seed);
    return gen::by_name(opt.family, opt.n, rng);
  }
  if (opt.graph_file.empty()) throw Error(ErrorKind::ParseError, "no graph: give --graph or --family");
  return read_edge_list_file(opt.graph_file);
}

RunReport cmd_decompose(const Options& opt) {
  RunReport r;
  r.command = "decompose";
  const Graph g = load_graph(opt);
  r.vertices = g.num_vertices();
  r.edges = g.num_edges();
  const BlockTree blocks = block_tree(g);
  const auto strong = strong_2cut_tree(g);
  const auto special = special_2cut_tree(strong);

  std::size_t block_edges = 0;
  for (const auto& b : blocks.block_edges) block_edges += b.size();
  check(r, "blocks partition the edges", block_edges == static_cast<std::size_t>(g.num_edges()));
  check_tree(r, g, strong, "strong tree");
  check_tree(r, g, special, "special tree");
  bool strong_pairs = true;
  std::string witness;
  for (const Edge& e : strong.cut_pairs())
    if (count_disjoint_paths(g, e.u, e.v, 3).count() < 3) {
      strong_pairs = false;
      witness = pair_text(e.u, e.v);
      break;
    }
  check(r, "strong cut pairs have three disjoint paths", strong_pairs, witness);
  if (opt.oracle_check && g.num_vertices() <= kOracleBudget.max_vertices) {
    check(r, "oracle: strong cut pairs", strong.cut_pairs() == bf_strong_2cuts(g, kOracleBudget));
    check(r, "oracle: cut vertices", blocks.cut_vertices == bf_cut_vertices(g));
  }

  const auto leaves = special.leaves();
  int cycles = 0;
  for (const auto& n : strong.nodes) cycles += n.kind == NodeKind::Cycle;
  r.output = std::to_string(strong.nodes.size()) + " strong nodes (" + std::to_string(strong.cut_pairs().size()) +
             " cuts, " + std::to_string(cycles) + " cycles), " + std::to_string(leaves.size()) + " special leaves";
  r.payload = {{"block_tree", to_json(blocks)}, {"strong", to_json(strong)}, {"special", to_json(special)}};
  return r;
}

RunReport cmd_compact(const Options& opt) {
  RunReport r;
  r.command = "compact";
  const Graph g = load_graph(opt);
  r.vertices = g.num_vertices();
  r.edges = g.num_edges();
  const CompactorParams p = params(opt);
  const auto& prot = opt.protected_vertices;

  if (opt.step) {
    const CompactorOutput out = compactor(g, prot, p, opt.verify);
    prefixed(r, "", out.transcript);
    if (!out.empty()) {
      const Minor m = apply_minor_op(g, out.op(), prot);
      r.shrink.push_back(1.0 - static_cast<double>(m.graph.num_vertices() + m.graph.num_edges()) /
                                   (g.num_vertices() + g.num_edges()));
      if (opt.oracle_check) check_minor(r, "", g, m.graph);
    }
    r.output = std::string(to_string(out.kind)) + " of " + std::to_string(out.payload_size()) + " via " + out.route +
               (out.below_target ? " (below target)" : "");
    r.payload = to_json(out);
    return r;
  }

  const CompactionSequence seq = iterative_compactor(g, prot, p, opt.verify);
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    r.shrink.push_back(seq.steps[i].shrink);
    prefixed(r, "step " + std::to_string(i) + ": ", seq.steps[i].output.transcript);
  }
  check(r, "journal replays to the last graph", seq.journal.replay(seq.start) == seq.last);
  if (opt.verify != VerifyLevel::Off) check(r, "last graph is 3-connected", is_k_connected(seq.last, 3));
  r.payload = to_json(seq, prot);
  if (opt.oracle_check) {
    RunReport replay;
    verify_sequence(replay, g, r.payload, p, VerifyLevel::Off, true);
    for (auto& c : replay.checks)
      if (c.condition.find("oracle") != std::string::npos) r.checks.push_back(std::move(c));
  }
  r.output = std::string(to_string(seq.status)) + ", " + std::to_string(seq.length()) + " graphs, last n=" +
             std::to_string(seq.last.num_vertices()) + " m=" + std::to_string(seq.last.num_edges());
  return r;
}

RunReport cmd_solve(const Options& opt) {
  RunReport r;
  r.command = "solve";
  const DrpInstance inst = instance(opt, load_graph(opt));
  r.vertices = inst.graph.num_vertices();
  r.edges = inst.graph.num_edges();
  const DrpCertificate cert = solve(inst);
  check(r, "certificate verifies", verify_certificate(inst, cert));
  r.payload = to_json(cert);
  bool round_trip = false;
  try {
    round_trip = verify_certificate(inst, certificate_from_json(r.payload, inst));
  } catch (const Error&) {
  }
  check(r, "certificate JSON round-trips", round_trip);
  if (cert.kind == DrpCertificate::Kind::PlanarReduction) {
    check(r, "reduction is planar", is_planar(cert.reduction.graph));
    r.output = std::string("planar_reduction (") + to_string(cert.strength) + ", " +
               std::to_string(cert.reduction.vertices.size()) + " vertices, " +
               std::to_string(cert.reduction.cutoffs.size()) + " separators)";
    r.exit_code = kCertifiedInfeasible;
  } else {
    r.output = "two_paths (" + std::to_string(cert.p1.size()) + " + " + std::to_string(cert.p2.size()) + " vertices)";
  }
  if (opt.oracle_check && inst.graph.num_vertices() <= OracleBudget::paths().max_vertices) {
    const bool exists = bf_two_disjoint_paths(inst.graph, inst.s1, inst.t1, inst.s2, inst.t2).has_value();
    check(r, "oracle: decision agrees", exists == cert.feasible(), exists ? "oracle found paths" : "oracle found none");
  }
  if (!opt.certificate.empty()) {
    std::ofstream out(opt.certificate);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + opt.certificate);
    out << r.payload.dump(2) << '\n';
  }
  return r;
}

RunReport cmd_verify(const Options& opt) {
  RunReport r;
  r.command = "verify";
  const Graph g = load_graph(opt);
  r.vertices = g.num_vertices();
  r.edges = g.num_edges();
  if (opt.certificate.empty()) throw Error(ErrorKind::ParseError, "verify needs --certificate");
  Json doc = read_json_file(opt.certificate);
  if (doc.contains("payload")) doc = doc["payload"];  // a saved --json report

  try {
    if (doc.contains("steps")) {
      verify_sequence(r, g, doc, params(opt), opt.verify, opt.oracle_check);
      r.output = "compaction sequence of " + std::to_string(doc["steps"].size()) + " steps";
    } else if (doc.contains("kind") && (doc["kind"] == "two_paths" || doc["kind"] == "planar_reduction")) {
      const DrpInstance inst = instance(opt, g);
      bool ok = false;
      std::string why;
      try {
        ok = verify_certificate(inst, certificate_from_json(doc, inst));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        why = e.what();
      }
      check(r, "certificate verifies", ok, why);
      r.output = doc["kind"].get<std::string>();
    } else if (doc.contains("kind")) {
      const CompactorOutput out = output_from_json(doc);
      prefixed(r, "", verify_output(g, opt.protected_vertices, params(opt), out, opt.verify));
      r.output = std::string(to_string(out.kind)) + " of " + std::to_string(out.payload_size());
    } else {
      throw Error(ErrorKind::ParseError, "unrecognised document");
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!r.all_checks_passed()) r.exit_code = kVerificationFailure;
  return r;
}

RunReport cmd_bench(const Options& opt) {
  RunReport r;
  r.command = "bench";
  const std::string family = opt.family.empty() ? "triangulation" : opt.family;
  const CompactorParams p = params(opt);
  for (int n : opt.sizes)
    if (n < 4) throw Error(ErrorKind::ParseError, "bench sizes must be at least 4");
  Json rows = Json::array();
  for (std::size_t i = 0; i < opt.sizes.size(); ++i) {
    gen::Rng rng(opt.seed + 7919 * i);
    const Graph g = gen::by_name(family, opt.sizes[i], rng);
    Json row = {{"family", family}, {"n", g.num_vertices()}, {"m", g.num_edges()}};
    if (!is_k_connected(g, 3)) {
      row["status"] = "not_3_connected";
      rows.push_back(row);
      continue;
    }
    const auto t0 = Clock::now();
    const CompactionSequence seq = iterative_compactor(g, {}, p, opt.verify);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    row["status"] = to_string(seq.status);
    row["steps"] = seq.steps.size();
    row["final_n"] = seq.last.num_vertices();
    row["final_m"] = seq.last.num_edges();
    row["size_factor"] = static_cast<double>(seq.last.num_vertices() + seq.last.num_edges()) /
                         (g.num_vertices() + g.num_edges());
    row["seconds"] = secs;
    rows.push_back(row);
    r.vertices += g.num_vertices();
    r.edges += g.num_edges();
  }
  r.output = std::to_string(rows.size()) + " rows";
  r.payload = {{"rows", rows}};
  return r;
}

RunReport cmd_oracle(const Options& opt) {
  RunReport r;
  r.command = "oracle";
  const Graph g = load_graph(opt);
  r.vertices = g.num_vertices();
  r.edges = g.num_edges();
  const std::string& q = opt.query;
  if (q == "three_connected") {
    const bool yes = bf_is_3_connected(g, kOracleBudget);
    r.payload = {{"three_connected", yes}};
    r.output = yes ? "3-connected" : "not 3-connected";
  } else if (q == "two_paths") {
    const DrpInstance inst = instance(opt, g);
    const auto pp = bf_two_disjoint_paths(g, inst.s1, inst.t1, inst.s2, inst.t2);
    r.payload = pp ? Json{{"found", true}, {"p1", pp->p1}, {"p2", pp->p2}} : Json{{"found", false}};
    r.output = pp ? "paths found" : "no paths";
  } else if (q == "three_cuts") {
    Json cuts = Json::array();
    for (const auto& c : bf_all_3cuts(g, opt.terminals, kOracleBudget))
      cuts.push_back({{"separator", c.separator}, {"component", c.component}});
    r.output = std::to_string(cuts.size()) + " cut-offs";
    r.payload = {{"three_cuts", cuts}};
  } else if (q == "strong_2cuts") {
    Json pairs = Json::array();
    for (const Edge& e : bf_strong_2cuts(g, kOracleBudget)) pairs.push_back({e.u, e.v});
    r.output = std::to_string(pairs.size()) + " strong 2-cuts";
    r.payload = {{"strong_2cuts", pairs}};
  } else if (q == "cut_vertices") {
    const auto cv = bf_cut_vertices(g);
    r.output = std::to_string(cv.size()) + " cut vertices";
    r.payload = {{"cut_vertices", cv}};
  } else {
    throw Error(ErrorKind::ParseError, "unknown oracle query '" + q + "'");
  }
  return r;
}

RunReport run(const std::string& command, const Options& opt) {
  const auto t0 = Clock::now();
  RunReport r;
  try {
    if (command == "decompose") r = cmd_decompose(opt);
    else if (command == "compact") r = cmd_compact(opt);
    else if (command == "solve") r = cmd_solve(opt);
    else if (command == "verify") r = cmd_verify(opt);
    else if (command == "bench") r = cmd_bench(opt);
    else if (command == "oracle") r = cmd_oracle(opt);
    else throw Error(ErrorKind::ParseError, "unknown command '" + command + "'");
    if (!r.all_checks_passed()) r.exit_code = kVerificationFailure;
  } catch (const Error& e) {
    r.command = command;
    r.exit_code = exit_code_for(e.kind());
    r.output = std::string("error ") + e.what();
    r.payload = {{"error", to_string(e.kind())}, {"message", e.what()}};
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

Json to_json(const RunReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(tricompact::to_json(c));
  return {{"command", r.command},
          {"input", {{"vertices", r.vertices}, {"edges", r.edges}}},
          {"output", r.output},
          {"shrink", r.shrink},
          {"checks", checks},
          {"seconds", r.seconds},
          {"exit_code", r.exit_code},
          {"payload", r.payload}};
}

void print_human(std::ostream& out, const RunReport& r) {
  const auto failed = std::count_if(r.checks.begin(), r.checks.end(), [](const CheckRecord& c) { return !c.passed; });
  out << std::left << std::setw(9) << "command" << r.command << '\n'
      << std::setw(9) << "input" << "n=" << r.vertices << " m=" << r.edges << '\n'
      << std::setw(9) << "output" << r.output << '\n';
  if (!r.shrink.empty()) {
    out << std::setw(9) << "shrink";
    for (double s : r.shrink) out << ' ' << format_double(s, 4);
    out << '\n';
  }
  out << std::setw(9) << "checks" << r.checks.size() - failed << " passed, " << failed << " failed\n";
  for (const auto& c : r.checks)
    if (!c.passed) out << "  FAIL " << c.condition << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  if (r.command == "bench" && r.payload.contains("rows")) {
    out << std::right << std::setw(22) << "family" << std::setw(9) << "n" << std::setw(10) << "m" << std::setw(7)
        << "steps" << std::setw(9) << "final_n" << std::setw(9) << "factor" << std::setw(10) << "seconds"
        << "  status\n";
    for (const auto& row : r.payload["rows"]) {
      out << std::setw(22) << row["family"].get<std::string>() << std::setw(9) << row["n"].get<int>()
          << std::setw(10) << row["m"].get<int>();
      if (row.contains("steps"))
        out << std::setw(7) << row["steps"].get<int>() << std::setw(9) << row["final_n"].get<int>() << std::setw(9)
            << format_double(row["size_factor"].get<double>(), 4) << std::setw(10)
            << format_double(row["seconds"].get<double>(), 3);
      else
        out << std::setw(45) << "";
      out << "  " << row["status"].get<std::string>() << '\n';
    }
    out << std::left;
  }
  out << std::setw(9) << "time" << format_double(r.seconds, 3) << " s\n";
}

}  // namespace tricompact::cli
