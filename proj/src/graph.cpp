#include "tricompact/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tricompact {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::NotATriangle: return "NotATriangle";
    case ErrorKind::InvalidPayload: return "InvalidPayload";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::TooSparse: return "TooSparse";
    case ErrorKind::Not2Connected: return "Not2Connected";
    case ErrorKind::Not3Connected: return "Not3Connected";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::CoverTooLarge: return "CoverTooLarge";
    case ErrorKind::NoGadget: return "NoGadget";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BadTerminals: return "BadTerminals";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "?";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

Graph::Graph(int n) : adj_(n), alive_(n, 1), n_alive_(n) {}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adj, std::vector<char> alive) {
  Graph g;
  g.adj_ = std::move(adj);
  g.alive_ = std::move(alive);
  g.alive_.resize(g.adj_.size(), 0);
  long long deg_sum = 0;
  for (std::size_t v = 0; v < g.adj_.size(); ++v) {
    auto& list = g.adj_[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    if (g.alive_[v]) ++g.n_alive_;
    deg_sum += static_cast<long long>(list.size());
  }
  g.m_ = static_cast<int>(deg_sum / 2);
  return g;
}

void Graph::require_vertex(Vertex v) const {
  if (!has_vertex(v)) throw Error(ErrorKind::InvalidPayload, "no vertex " + std::to_string(v));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(n_alive_);
  for (Vertex v = 0; v < id_bound(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < id_bound(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Vertex Graph::add_vertex() {
  adj_.emplace_back();
  alive_.push_back(1);
  if (!labels_.empty()) labels_.emplace_back();
  ++n_alive_;
  return id_bound() - 1;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw Error(ErrorKind::InvalidPayload, "loop at " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) return false;
  auto& au = adj_[u];
  au.erase(std::lower_bound(au.begin(), au.end(), v));
  auto& av = adj_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  --m_;
  return true;
}

void Graph::remove_vertex(Vertex v) {
  require_vertex(v);
  for (Vertex w : adj_[v]) {
    auto& aw = adj_[w];
    aw.erase(std::lower_bound(aw.begin(), aw.end(), v));
  }
  m_ -= degree(v);
  adj_[v].clear();
  alive_[v] = 0;
  --n_alive_;
}

void Graph::set_label(Vertex v, std::string label) {
  require_vertex(v);
  if (labels_.empty()) labels_.resize(adj_.size());
  labels_[v] = std::move(label);
}

const std::string& Graph::label(Vertex v) const {
  static const std::string empty;
  if (labels_.empty() || v < 0 || v >= id_bound()) return empty;
  return labels_[v];
}

bool Graph::check_invariants() const {
  long long deg_sum = 0;
  int alive = 0;
  for (Vertex v = 0; v < id_bound(); ++v) {
    const auto& a = adj_[v];
    if (!alive_[v]) {
      if (!a.empty()) return false;
      continue;
    }
    ++alive;
    deg_sum += static_cast<long long>(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      Vertex w = a[i];
      if (w == v || !has_vertex(w)) return false;
      if (i > 0 && a[i - 1] >= w) return false;
      if (!std::binary_search(adj_[w].begin(), adj_[w].end(), v)) return false;
    }
  }
  return alive == n_alive_ && deg_sum == 2LL * m_;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<char> in(g.id_bound(), 0);
  for (Vertex v : keep)
    if (g.has_vertex(v)) in[v] = 1;
  std::vector<std::vector<Vertex>> adj(g.id_bound());
  for (Vertex v = 0; v < g.id_bound(); ++v) {
    if (!in[v]) continue;
    for (Vertex w : g.neighbors(v))
      if (in[w]) adj[v].push_back(w);
  }
  return Graph::from_adjacency(std::move(adj), std::move(in));
}

VertexMap VertexMap::identity(const Graph& g) {
  VertexMap m;
  m.image.assign(g.id_bound(), kNoVertex);
  for (Vertex v : g.vertices()) m.image[v] = v;
  return m;
}

VertexMap VertexMap::then(const VertexMap& next) const {
  VertexMap out;
  out.image.resize(image.size(), kNoVertex);
  for (std::size_t v = 0; v < image.size(); ++v)
    if (image[v] != kNoVertex) out.image[v] = next(image[v]);
  return out;
}

Minor contract_groups(const Graph& g, const std::vector<std::vector<Vertex>>& groups) {
  const int bound = g.id_bound();
  std::vector<Vertex> rep(bound, kNoVertex);
  for (Vertex v = 0; v < bound; ++v)
    if (g.has_vertex(v)) rep[v] = v;
  for (const auto& group : groups) {
    if (group.empty()) continue;
    Vertex r = *std::min_element(group.begin(), group.end());
    for (Vertex v : group) {
      if (!g.has_vertex(v) || rep[v] != v)
        throw Error(ErrorKind::InvalidPayload, "contraction groups overlap or name a missing vertex");
      rep[v] = r;
    }
  }
  std::vector<std::vector<Vertex>> adj(bound);
  std::vector<char> alive(bound, 0);
  for (Vertex v = 0; v < bound; ++v) {
    if (rep[v] == kNoVertex) continue;
    Vertex r = rep[v];
    alive[r] = 1;
    for (Vertex w : g.neighbors(v))
      if (rep[w] != r) adj[r].push_back(rep[w]);
  }
  Minor out{Graph::from_adjacency(std::move(adj), std::move(alive)), VertexMap{std::move(rep)}};
  return out;
}

Minor contract_edge(const Graph& g, Edge e) {
  if (e.u == e.v) throw Error(ErrorKind::NotAnEdge, "loop");
  if (!g.has_edge(e.u, e.v))
    throw Error(ErrorKind::NotAnEdge, std::to_string(e.u) + "-" + std::to_string(e.v));
  return contract_groups(g, {{e.u, e.v}});
}

Minor contract_triangle(const Graph& g, const Triangle& t) {
  if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2] || !g.has_edge(t[0], t[1]) ||
      !g.has_edge(t[1], t[2]) || !g.has_edge(t[0], t[2]))
    throw Error(ErrorKind::NotATriangle, std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                             std::to_string(t[2]));
  return contract_groups(g, {{t[0], t[1], t[2]}});
}

const char* to_string(MinorOpKind kind) {
  switch (kind) {
    case MinorOpKind::DeleteEdges: return "DeleteEdges";
    case MinorOpKind::DeleteVertices: return "DeleteVertices";
    case MinorOpKind::ContractMatching: return "ContractMatching";
    case MinorOpKind::ContractTriangles: return "ContractTriangles";
  }
  return "?";
}

MinorOp MinorOp::delete_edges(std::vector<Edge> es) {
  MinorOp op;
  op.kind = MinorOpKind::DeleteEdges;
  op.edges = std::move(es);
  return op;
}

MinorOp MinorOp::delete_vertices(std::vector<Vertex> vs) {
  MinorOp op;
  op.kind = MinorOpKind::DeleteVertices;
  op.vertices = std::move(vs);
  return op;
}

MinorOp MinorOp::contract_matching(Matching m) {
  MinorOp op;
  op.kind = MinorOpKind::ContractMatching;
  op.edges = std::move(m);
  return op;
}

MinorOp MinorOp::contract_triangles(TriangleSet ts) {
  MinorOp op;
  op.kind = MinorOpKind::ContractTriangles;
  op.triangles = std::move(ts);
  return op;
}

std::size_t MinorOp::payload_size() const {
  switch (kind) {
    case MinorOpKind::DeleteEdges:
    case MinorOpKind::ContractMatching: return edges.size();
    case MinorOpKind::DeleteVertices: return vertices.size();
    case MinorOpKind::ContractTriangles: return triangles.size();
  }
  return 0;
}

bool is_matching(const Graph& g, std::span<const Edge> m) {
  std::vector<char> used(g.id_bound(), 0);
  for (const Edge& e : m) {
    if (e.u == e.v || !g.has_edge(e.u, e.v) || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

bool is_triangle_set(const Graph& g, std::span<const Triangle> ts) {
  std::vector<char> used(g.id_bound(), 0);
  for (const Triangle& t : ts) {
    for (int i = 0; i < 3; ++i) {
      if (!g.has_vertex(t[i]) || used[t[i]]) return false;
      used[t[i]] = 1;
    }
    if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[1], t[2]) || !g.has_edge(t[0], t[2])) return false;
  }
  return true;
}

namespace {

void reject(const std::string& why) { throw Error(ErrorKind::InvalidPayload, why); }

std::vector<char> mark(const Graph& g, std::span<const Vertex> vs) {
  std::vector<char> out(g.id_bound(), 0);
  for (Vertex v : vs)
    if (v >= 0 && v < g.id_bound()) out[v] = 1;
  return out;
}

}  // namespace

Minor apply_minor_op(const Graph& g, const MinorOp& op, std::span<const Vertex> protected_vertices) {
  const auto prot = mark(g, protected_vertices);
  switch (op.kind) {
    case MinorOpKind::DeleteEdges: {
      Graph h = g;
      for (const Edge& e : op.edges) {
        if (prot[e.u] || prot[e.v]) reject("deleted edge touches a protected vertex");
        if (!h.remove_edge(e.u, e.v)) reject("deleted edge missing or repeated");
      }
      return {std::move(h), VertexMap::identity(g)};
    }
    case MinorOpKind::DeleteVertices: {
      Graph h = g;
      VertexMap map = VertexMap::identity(g);
      for (Vertex v : op.vertices) {
        if (!h.has_vertex(v)) reject("deleted vertex missing or repeated");
        if (prot[v]) reject("deleted vertex is protected");
        h.remove_vertex(v);
        map.image[v] = kNoVertex;
      }
      return {std::move(h), std::move(map)};
    }
    case MinorOpKind::ContractMatching: {
      if (!is_matching(g, op.edges)) reject("not a matching of the graph");
      std::vector<std::vector<Vertex>> groups;
      for (const Edge& e : op.edges) {
        if (prot[e.u] || prot[e.v]) reject("matching edge touches a protected vertex");
        groups.push_back({e.u, e.v});
      }
      return contract_groups(g, groups);
    }
    case MinorOpKind::ContractTriangles: {
      if (!is_triangle_set(g, op.triangles)) reject("not a set of disjoint triangles");
      std::vector<std::vector<Vertex>> groups;
      for (const Triangle& t : op.triangles) {
        if (prot[t[0]] || prot[t[1]] || prot[t[2]]) reject("triangle touches a protected vertex");
        groups.push_back({t[0], t[1], t[2]});
      }
      return contract_groups(g, groups);
    }
  }
  reject("unknown op");
  return {};
}

void MinorJournal::record(MinorOp op, VertexMap map) {
  entries_.push_back({std::move(op), std::move(map)});
}

Graph MinorJournal::replay(const Graph& start) const {
  Graph g = start;
  for (const auto& entry : entries_) g = apply_minor_op(g, entry.op).graph;
  return g;
}

VertexMap MinorJournal::composed(const Graph& start) const {
  VertexMap map = VertexMap::identity(start);
  for (const auto& entry : entries_) map = map.then(entry.map);
  return map;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  long long declared_m = -1;
  Graph g;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line.substr(first));
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      if (n >= 0) fail("repeated header");
      if (!(ls >> n >> declared_m) || n < 0 || declared_m < 0) fail("bad header");
      g = Graph(n);
    } else if (tag == "e") {
      if (n < 0) fail("edge before header");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) fail("bad edge");
      if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex id out of range");
      if (u == v) fail("loop");
      if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) fail("duplicate edge");
    } else {
      fail("unknown record '" + tag + "'");
    }
    std::string rest;
    if (ls >> rest && rest[0] != '#') fail("trailing tokens");
  }
  if (n < 0) throw Error(ErrorKind::ParseError, "missing header");
  if (declared_m != g.num_edges())
    throw Error(ErrorKind::ParseError, "header declares " + std::to_string(declared_m) +
                                           " edges, found " + std::to_string(g.num_edges()));
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.id_bound() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

}  // namespace tricompact
