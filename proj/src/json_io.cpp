#include "tricompact/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace tricompact {

namespace {

Json edges_json(std::span<const Edge> es) {
  Json a = Json::array();
  for (const Edge& e : es) a.push_back({e.u, e.v});
  return a;
}

Json triangles_json(std::span<const Triangle> ts) {
  Json a = Json::array();
  for (const Triangle& t : ts) a.push_back({t[0], t[1], t[2]});
  return a;
}

std::vector<Edge> edges_from(const Json& a) {
  std::vector<Edge> out;
  for (const auto& e : a) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "edge must be a pair");
    out.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return out;
}

Triangle triangle_from(const Json& t) {
  if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::ParseError, "triangle must have three vertices");
  return {t[0].get<Vertex>(), t[1].get<Vertex>(), t[2].get<Vertex>()};
}

// nlohmann reports type and key errors through its own exceptions.
template <class F>
auto parsing(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  } catch (const std::logic_error& e) {  // std::stoi on a bad key
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Json node_json(const TreeNode& n) {
  Json j = {{"kind", to_string(n.kind)}, {"vertices", n.vertices}, {"neighbors", n.neighbors}};
  if (n.is_graph_node()) {
    j["edges"] = edges_json(n.edges);
    j["virtual_edges"] = edges_json(n.virtual_edges);
  }
  if (!n.cycle.empty()) j["cycle"] = n.cycle;
  if (n.chord) j["chord"] = true;
  return j;
}

}  // namespace

Json to_json(const CheckRecord& r) {
  Json j = {{"condition", r.condition}, {"passed", r.passed}};
  if (!r.detail.empty()) j["witness"] = r.detail;
  return j;
}

Json to_json(std::span<const CheckRecord> transcript) {
  Json a = Json::array();
  for (const auto& r : transcript) a.push_back(to_json(r));
  return a;
}

Json to_json(const MinorOp& op) {
  Json j = {{"op", to_string(op.kind)}};
  switch (op.kind) {
    case MinorOpKind::DeleteEdges:
    case MinorOpKind::ContractMatching: j["edges"] = edges_json(op.edges); break;
    case MinorOpKind::DeleteVertices: j["vertices"] = op.vertices; break;
    case MinorOpKind::ContractTriangles: j["triangles"] = triangles_json(op.triangles); break;
  }
  return j;
}

Json to_json(const CompactorOutput& out) {
  Json j = {{"kind", to_string(out.kind)},
            {"route", out.route},
            {"below_target", out.below_target},
            {"size", out.payload_size()},
            {"transcript", to_json(out.transcript)}};
  switch (out.kind) {
    case OutputKind::EdgeSet:
    case OutputKind::MatchingOut: j["edges"] = edges_json(out.edges); break;
    case OutputKind::StableSet: j["vertices"] = out.vertices; break;
    case OutputKind::Triangles: j["triangles"] = triangles_json(out.triangles); break;
  }
  return j;
}

Json to_json(const CompactionSequence& seq, std::span<const Vertex> protected_start) {
  Json steps = Json::array();
  for (const auto& s : seq.steps)
    steps.push_back({{"vertices", s.vertices}, {"edges", s.edges}, {"shrink", s.shrink}, {"output", to_json(s.output)}});
  Json j = {{"status", to_string(seq.status)},
            {"length", seq.length()},
            {"start", {{"vertices", seq.start.num_vertices()}, {"edges", seq.start.num_edges()}}},
            {"protected", std::vector<Vertex>(protected_start.begin(), protected_start.end())},
            {"steps", steps},
            {"last", {{"vertices", seq.last.num_vertices()}, {"edges", seq.last.num_edges()}}},
            {"protected_last", seq.protected_last}};
  if (seq.stalled) j["stalled"] = to_json(*seq.stalled);
  return j;
}

Json to_json(const BlockTree& t) {
  Json blocks = Json::array();
  for (std::size_t i = 0; i < t.blocks.size(); ++i)
    blocks.push_back({{"vertices", t.blocks[i]}, {"edges", edges_json(t.block_edges[i])}});
  return {{"kind", "block_tree"}, {"blocks", blocks}, {"cut_vertices", t.cut_vertices}};
}

Json to_json(const CutTree& t) {
  Json nodes = Json::array();
  for (const auto& n : t.nodes) nodes.push_back(node_json(n));
  return {{"nodes", nodes}, {"cut_pairs", edges_json(t.cut_pairs())}, {"leaves", t.leaves()}};
}

Json to_json(const DrpCertificate& cert) {
  if (cert.kind == DrpCertificate::Kind::TwoPaths) return {{"kind", "two_paths"}, {"p1", cert.p1}, {"p2", cert.p2}};
  Json seps = Json::array();
  for (const auto& c : cert.reduction.cutoffs) seps.push_back({c.separator[0], c.separator[1], c.separator[2]});
  Json rotation = Json::object();
  for (Vertex v : cert.reduction.graph.vertices()) rotation[std::to_string(v)] = cert.embedding.rotation[v];
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses)
    witnesses.push_back({{"separator", {w.separator[0], w.separator[1], w.separator[2]}},
                         {"shared", w.shared},
                         {"red", w.red},
                         {"yellow", w.yellow}});
  const char* strength = cert.strength == Strength::FerociouslyStrong ? "ferociously_strong"
                         : cert.strength == Strength::Strong          ? "strong"
                         : cert.strength == Strength::Undecided       ? "undecided"
                                                                      : "none";
  return {{"kind", "planar_reduction"},
          {"vertices", cert.reduction.vertices},
          {"separators", seps},
          {"rotation", rotation},
          {"outer_face", cert.embedding.outer_face},
          {"strength", strength},
          {"witnesses", witnesses}};
}

CompactorOutput output_from_json(const Json& j) {
  return parsing([&] {
    CompactorOutput out;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "edge_set") out.kind = OutputKind::EdgeSet;
    else if (kind == "stable_set") out.kind = OutputKind::StableSet;
    else if (kind == "matching") out.kind = OutputKind::MatchingOut;
    else if (kind == "triangles") out.kind = OutputKind::Triangles;
    else throw Error(ErrorKind::ParseError, "unknown output kind '" + kind + "'");
    out.route = j.value("route", "");
    out.below_target = j.value("below_target", false);
    if (j.contains("edges")) out.edges = edges_from(j["edges"]);
    if (j.contains("vertices")) out.vertices = j["vertices"].get<std::vector<Vertex>>();
    if (j.contains("triangles"))
      for (const auto& t : j["triangles"]) out.triangles.push_back(triangle_from(t));
    return out;
  });
}

DrpCertificate certificate_from_json(const Json& j, const DrpInstance& inst) {
  return parsing([&] {
    DrpCertificate cert;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "two_paths") {
      cert.kind = DrpCertificate::Kind::TwoPaths;
      cert.p1 = j.at("p1").get<std::vector<Vertex>>();
      cert.p2 = j.at("p2").get<std::vector<Vertex>>();
      return cert;
    }
    if (kind != "planar_reduction") throw Error(ErrorKind::ParseError, "unknown certificate kind '" + kind + "'");
    cert.kind = DrpCertificate::Kind::PlanarReduction;
    const RootGraph root = root_graph(build_auxiliary(inst));
    cert.reduction = make_reduction(root.graph, root.roots, j.at("vertices").get<std::vector<Vertex>>());

    // Separators are claims; keep them as written so a mismatch fails verification.
    std::vector<CutOff> claimed;
    for (const auto& s : j.at("separators")) {
      CutOff c;
      c.separator = triangle_from(s);
      std::sort(c.separator.begin(), c.separator.end());
      const std::size_t i = claimed.size();
      if (i < cert.reduction.cutoffs.size() && cert.reduction.cutoffs[i].separator == c.separator)
        c.component = cert.reduction.cutoffs[i].component;
      claimed.push_back(std::move(c));
    }
    cert.reduction.cutoffs = std::move(claimed);

    const Graph& g = cert.reduction.graph;
    cert.embedding.rotation.assign(g.id_bound(), {});
    for (const auto& [key, order] : j.at("rotation").items()) {
      const Vertex v = std::stoi(key);
      if (!g.has_vertex(v)) throw Error(ErrorKind::ParseError, "rotation names vertex " + key + " outside the reduction");
      cert.embedding.rotation[v] = order.get<std::vector<Vertex>>();
    }
    cert.embedding.faces = trace_faces(g, cert.embedding.rotation);
    cert.embedding.outer_face = j.value("outer_face", 0);

    const auto strength = j.value("strength", "none");
    if (strength == "strong") cert.strength = Strength::Strong;
    else if (strength == "ferociously_strong") cert.strength = Strength::FerociouslyStrong;
    else if (strength == "undecided") cert.strength = Strength::Undecided;
    else if (strength == "none") cert.strength = Strength::None;
    else throw Error(ErrorKind::ParseError, "unknown strength '" + strength + "'");
    if (j.contains("witnesses"))
      for (const auto& w : j["witnesses"]) {
        SeparatorWitness sw;
        sw.separator = triangle_from(w.at("separator"));
        sw.shared = w.at("shared").get<bool>();
        sw.red = w.at("red").get<std::vector<Vertex>>();
        sw.yellow = w.at("yellow").get<std::vector<Vertex>>();
        cert.witnesses.push_back(std::move(sw));
      }
    return cert;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return parsing([&] { return Json::parse(in); });
}

}  // namespace tricompact
