#include "tricompact/compactor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "tricompact/connectivity.hpp"
#include "tricompact/decomposition.hpp"

namespace tricompact {

namespace {

std::vector<char> mark(const Graph& g, std::span<const Vertex> vs) {
  std::vector<char> m(g.id_bound(), 0);
  for (Vertex v : vs)
    if (v >= 0 && v < g.id_bound()) m[v] = 1;
  return m;
}

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return static_cast<std::uint64_t>(a) << 32 | static_cast<std::uint32_t>(b);
}

[[noreturn]] void precondition(const std::string& why) { throw Error(ErrorKind::PreconditionViolation, why); }

}  // namespace

// ---------------------------------------------------------------- parameters

CompactorParams CompactorParams::make(int c, int d, double delta, int n0) {
  if (c < 10) precondition("c must be at least 10");
  if (d <= 1000) precondition("d must exceed 1000");
  if (n0 < 1) precondition("n0 must be positive");
  const double bound = 1.0 / ((2.0 * c + 1) * d);
  if (delta <= 0) delta = 1.0 / ((2.0 * c + 1) * 2.0 * d);
  if (delta >= bound) precondition("delta must be below 1/((2c+1)d)");
  CompactorParams p;
  p.c = c;
  p.d = d;
  p.delta = delta;
  p.epsilon = (2.0 * c + 1) * delta;
  p.max_degree = static_cast<int>(std::ceil(1.0 / p.epsilon - 1e-9)) + 6;
  p.n0 = n0;
  return p;
}

bool CompactorParams::coherent() const {
  if (c < 10 || d <= 1000 || n0 < 1 || delta <= 0) return false;
  if (std::abs(epsilon - (2.0 * c + 1) * delta) > 1e-12 * epsilon) return false;
  if (max_degree != static_cast<int>(std::ceil(1.0 / epsilon - 1e-9)) + 6) return false;
  return delta < 1.0 / ((2.0 * c + 1) * d) && max_degree > d;
}

const char* to_string(VerifyLevel level) {
  switch (level) {
    case VerifyLevel::Off: return "off";
    case VerifyLevel::Debug: return "debug";
    case VerifyLevel::Full: return "full";
  }
  return "?";
}

VerifyLevel parse_verify_level(const std::string& s) {
  if (s == "off") return VerifyLevel::Off;
  if (s == "debug") return VerifyLevel::Debug;
  if (s == "full") return VerifyLevel::Full;
  throw Error(ErrorKind::ParseError, "verify level must be off, debug or full: " + s);
}

const char* to_string(OutputKind kind) {
  switch (kind) {
    case OutputKind::EdgeSet: return "edge_set";
    case OutputKind::StableSet: return "stable_set";
    case OutputKind::MatchingOut: return "matching";
    case OutputKind::Triangles: return "triangles";
  }
  return "?";
}

const char* to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::Degree3Triangle: return "degree3_triangle";
    case GadgetKind::WellBehavedEdge: return "well_behaved_edge";
    case GadgetKind::SweetEdge: return "sweet_edge";
  }
  return "?";
}

const char* to_string(CompactionSequence::Status s) {
  return s == CompactionSequence::Status::Done ? "done" : "shrink_below_target";
}

MinorOp CompactorOutput::op() const {
  switch (kind) {
    case OutputKind::EdgeSet: return MinorOp::delete_edges(edges);
    case OutputKind::StableSet: return MinorOp::delete_vertices(vertices);
    case OutputKind::MatchingOut: return MinorOp::contract_matching(edges);
    case OutputKind::Triangles: return MinorOp::contract_triangles(triangles);
  }
  return {};
}

std::size_t CompactorOutput::payload_size() const {
  switch (kind) {
    case OutputKind::EdgeSet:
    case OutputKind::MatchingOut: return edges.size();
    case OutputKind::StableSet: return vertices.size();
    case OutputKind::Triangles: return triangles.size();
  }
  return 0;
}

// ---------------------------------------------------------------- predicates

bool is_sweet_end(const Graph& h, Vertex x, Vertex y) {
  if (!h.has_edge(x, y)) return false;
  std::vector<Vertex> rest;
  for (Vertex w : h.neighbors(x))
    if (w != y) rest.push_back(w);
  bool clique = true;
  for (std::size_t i = 0; i < rest.size() && clique; ++i)
    for (std::size_t j = i + 1; j < rest.size() && clique; ++j) clique = h.has_edge(rest[i], rest[j]);
  if (clique) return true;
  if (rest.size() != 3) return false;
  int edges = 0;
  Vertex mid = kNoVertex;
  for (int i = 0; i < 3; ++i) {
    const Vertex a = rest[(i + 1) % 3], b = rest[(i + 2) % 3];
    if (h.has_edge(a, b)) ++edges;
    if (h.has_edge(rest[i], a) && h.has_edge(rest[i], b)) mid = rest[i];
  }
  if (edges != 2 || mid == kNoVertex) return false;
  for (Vertex w : h.neighbors(mid))
    if (w != x && !h.has_edge(x, w)) return false;
  return true;
}

bool is_sweet(const Graph& h, Edge e) { return is_sweet_end(h, e.u, e.v) || is_sweet_end(h, e.v, e.u); }

bool is_degree3_triangle(const Graph& h, const Triangle& t) {
  for (Vertex v : t)
    if (!h.has_vertex(v) || h.degree(v) != 3) return false;
  return t[0] != t[1] && t[1] != t[2] && t[0] != t[2] && h.has_edge(t[0], t[1]) && h.has_edge(t[1], t[2]) &&
         h.has_edge(t[0], t[2]);
}

TriangleSet degree3_triangles(const Graph& h) {
  TriangleSet out;
  for (Vertex u : h.vertices()) {
    if (h.degree(u) != 3) continue;
    const auto& nb = h.neighbors(u);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const Vertex a = nb[i], b = nb[j];
        if (a > u && b > u && h.degree(a) == 3 && h.degree(b) == 3 && h.has_edge(a, b))
          out.push_back(Triangle{u, a, b});
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Whether all of `targets` lie in one component of g minus blocked.
bool together(const Graph& g, const std::vector<char>& blocked, std::span<const Vertex> targets) {
  if (targets.empty()) return true;
  std::vector<char> seen(g.id_bound(), 0);
  std::vector<Vertex> stack{targets[0]};
  seen[targets[0]] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w] && !blocked[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return std::all_of(targets.begin(), targets.end(), [&](Vertex t) { return seen[t]; });
}

bool connected_without(const Graph& g, std::vector<char>& blocked) {
  std::vector<Vertex> rest;
  for (Vertex v : g.vertices())
    if (!blocked[v]) rest.push_back(v);
  return together(g, blocked, rest);
}

}  // namespace

bool is_well_behaved(const Graph& h, Edge e, std::span<const Vertex> cut, std::span<const Vertex> side) {
  const auto in_cut = mark(h, cut), in_side = mark(h, side);
  if (!h.has_edge(e.u, e.v) || !in_side[e.u] || !in_side[e.v]) return false;
  std::vector<char> blocked(h.id_bound(), 0);
  blocked[e.u] = blocked[e.v] = 1;
  std::vector<Vertex> outside;
  for (Vertex v : h.vertices())
    if (!in_cut[v] && !in_side[v]) outside.push_back(v);

  // (i) cliques of size at most two outside
  if (!together(h, blocked, cut)) return false;
  for (Vertex z : outside) {
    blocked[z] = 1;
    if (!together(h, blocked, cut)) return false;
    for (Vertex w : h.neighbors(z)) {
      if (w < z || in_cut[w] || in_side[w]) continue;
      blocked[w] = 1;
      const bool ok = together(h, blocked, cut);
      blocked[w] = 0;
      if (!ok) return false;
    }
    blocked[z] = 0;
  }
  // (ii) single vertices of the cut and the side
  if (!connected_without(h, blocked)) return false;
  for (auto part : {cut, side})
    for (Vertex z : part) {
      if (blocked[z]) continue;
      blocked[z] = 1;
      const bool ok = connected_without(h, blocked);
      blocked[z] = 0;
      if (!ok) return false;
    }
  return true;
}

// ---------------------------------------------------------------- matchings

Matching greedy_low_degree_matching(const Graph& h, int d, std::span<const Vertex> protected_vertices) {
  std::vector<char> eligible(h.id_bound(), 0);
  const auto prot = mark(h, protected_vertices);
  std::vector<Vertex> order;
  for (Vertex v : h.vertices())
    if (h.degree(v) <= d && !prot[v]) {
      eligible[v] = 1;
      order.push_back(v);
    }
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return h.degree(a) < h.degree(b); });
  std::vector<char> matched(h.id_bound(), 0);
  Matching out;
  for (Vertex v : order) {
    if (matched[v]) continue;
    Vertex best = kNoVertex;
    for (Vertex y : h.neighbors(v)) {
      if (!eligible[y] || matched[y]) continue;
      if (best == kNoVertex || h.degree(y) < h.degree(best)) best = y;
    }
    if (best == kNoVertex) continue;
    matched[v] = matched[best] = 1;
    out.emplace_back(v, best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matching refine_matching(const Graph& h, const Matching& m, int d) {
  if (!is_matching(h, m)) precondition("refine_matching needs a matching");
  std::vector<int> owner(h.id_bound(), -1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (h.degree(m[i].u) > d || h.degree(m[i].v) > d) precondition("matched vertex above degree d");
    owner[m[i].u] = owner[m[i].v] = static_cast<int>(i);
  }
  // Induced submatching, lightest edges first.
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  auto weight = [&](std::size_t i) { return h.degree(m[i].u) + h.degree(m[i].v); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight(a) < weight(b); });
  std::vector<char> blocked(m.size(), 0);
  std::vector<std::size_t> induced;
  for (std::size_t i : order) {
    if (blocked[i]) continue;
    induced.push_back(i);
    for (Vertex x : {m[i].u, m[i].v})
      for (Vertex y : h.neighbors(x))
        if (owner[y] >= 0 && owner[y] != static_cast<int>(i)) blocked[owner[y]] = 1;
  }
  // No low-degree vertex next to two chosen edges.
  std::vector<int> claimed(h.id_bound(), -1);
  Matching out;
  for (std::size_t i : induced) {
    const Edge e = m[i];
    bool free = true;
    for (Vertex x : {e.u, e.v})
      for (Vertex w : h.neighbors(x))
        if (w != e.u && w != e.v && h.degree(w) <= 12 && claimed[w] >= 0 && claimed[w] != static_cast<int>(i))
          free = false;
    if (!free) continue;
    for (Vertex x : {e.u, e.v})
      for (Vertex w : h.neighbors(x))
        if (w != e.u && w != e.v && h.degree(w) <= 12) claimed[w] = static_cast<int>(i);
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- small cover

std::vector<Vertex> small_cover_embed(const Graph& f, std::span<const Vertex> cover, std::span<const Vertex> stable,
                                      int c) {
  std::vector<char> side(f.id_bound(), 0);  // 1 cover, 2 stable
  for (Vertex v : cover) {
    if (!f.has_vertex(v) || side[v]) throw Error(ErrorKind::BadPartition, "cover vertex missing or repeated");
    side[v] = 1;
  }
  for (Vertex v : stable) {
    if (!f.has_vertex(v) || side[v]) throw Error(ErrorKind::BadPartition, "stable vertex missing or repeated");
    side[v] = 2;
  }
  for (Vertex v : f.vertices())
    if (!side[v]) throw Error(ErrorKind::BadPartition, "vertex in neither part");
  for (Vertex v : stable)
    for (Vertex w : f.neighbors(v))
      if (side[w] == 2) throw Error(ErrorKind::BadPartition, "stable set has an edge");

  std::vector<char> in_j(f.id_bound(), 0);
  for (Vertex v : cover) in_j[v] = 1;
  for (int level = 1; level <= c; ++level) {
    // Auxiliary multigraph on V(J): J's edges, plus the neighbourhood of
    // every stable vertex outside J made a clique labelled by that vertex.
    // Copies of one pair beyond `level` cannot change any level-bounded flow.
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(f.id_bound());
    std::vector<Vertex> edge_label;
    std::unordered_map<std::uint64_t, int> copies;
    auto link = [&](Vertex a, Vertex b, Vertex lab) {
      int& cnt = copies[pair_key(a, b)];
      if (cnt >= level) return;
      ++cnt;
      adj[a].emplace_back(b, edge_label.size());
      adj[b].emplace_back(a, edge_label.size());
      edge_label.push_back(lab);
    };
    for (Vertex v : f.vertices())
      if (in_j[v])
        for (Vertex w : f.neighbors(v))
          if (v < w && in_j[w]) link(v, w, kNoVertex);
    for (Vertex s : stable) {
      if (in_j[s]) continue;
      const auto& nb = f.neighbors(s);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t k = i + 1; k < nb.size(); ++k) link(nb[i], nb[k], s);
    }
    // Maximum adjacency scan; an edge joins forest r(y) + 1 when it reaches y.
    std::vector<int> rank(f.id_bound(), 0);
    std::vector<char> done(f.id_bound(), 0);
    std::vector<char> used(edge_label.size(), 0);
    std::priority_queue<std::pair<int, Vertex>> queue;
    std::vector<Vertex> added;
    for (Vertex root : f.vertices()) {
      if (!in_j[root] || done[root]) continue;
      queue.emplace(0, root);
      while (!queue.empty()) {
        const auto [r, x] = queue.top();
        queue.pop();
        if (done[x] || r != rank[x]) continue;
        done[x] = 1;
        for (const auto& [y, id] : adj[x]) {
          if (done[y] || used[id]) continue;
          used[id] = 1;
          if (++rank[y] <= level && edge_label[id] != kNoVertex) added.push_back(edge_label[id]);
          queue.emplace(rank[y], y);
        }
      }
    }
    for (Vertex s : added) in_j[s] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v : f.vertices())
    if (in_j[v]) out.push_back(v);
  double factorial = 1;
  for (int i = 2; i <= c; ++i) factorial *= i;
  if (static_cast<double>(out.size()) > 2 * factorial * static_cast<double>(cover.size()))
    throw Error(ErrorKind::VerificationFailed, "small cover subgraph exceeds its size bound");
  return out;
}

// ---------------------------------------------------------------- verification

namespace {

// Up to `cap` indices spread evenly over [0, n).
std::vector<std::size_t> sample(std::size_t n, std::size_t cap) {
  std::vector<std::size_t> out;
  if (n <= cap) {
    out.resize(n);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  for (std::size_t i = 0; i < cap; ++i) out.push_back(i * n / cap);
  return out;
}

std::string edge_text(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

std::vector<CheckRecord> verify_output(const Graph& h, std::span<const Vertex> protected_vertices,
                                       const CompactorParams& p, const CompactorOutput& out, VerifyLevel level) {
  std::vector<CheckRecord> rec;
  auto add = [&](std::string cond, bool ok, std::string detail = {}) {
    rec.push_back({std::move(cond), ok, ok ? std::string() : std::move(detail)});
  };
  const auto prot = mark(h, protected_vertices);
  const std::size_t flow_cap = level == VerifyLevel::Full ? static_cast<std::size_t>(-1) : 64;

  auto result_3connected = [&] {
    if (level == VerifyLevel::Off) return;
    bool ok = false;
    std::string why;
    try {
      ok = is_k_connected(apply_minor_op(h, out.op()).graph, 3);
      if (!ok) why = "result has a cut of size below 3";
    } catch (const Error& e) {
      why = e.what();
    }
    add("result is 3-connected", ok, why);
  };

  switch (out.kind) {
    case OutputKind::EdgeSet: {
      std::set<Edge> seen;
      Edge bad{kNoVertex, kNoVertex}, touch{kNoVertex, kNoVertex};
      for (const Edge& e : out.edges) {
        if (!h.has_vertex(e.u) || !h.has_vertex(e.v) || !h.has_edge(e.u, e.v) || !seen.insert(e).second) bad = e;
        else if (prot[e.u] || prot[e.v]) touch = e;
      }
      add("edges of the graph, no repeats", bad.u == kNoVertex, edge_text(bad));
      add("no edge at a protected vertex", touch.u == kNoVertex, edge_text(touch));
      if (bad.u != kNoVertex || level == VerifyLevel::Off) break;
      Graph rest = h;
      for (const Edge& e : out.edges) rest.remove_edge(e.u, e.v);
      VertexFlow flow(rest);
      std::string fail;
      for (std::size_t i : sample(out.edges.size(), flow_cap)) {
        const Edge e = out.edges[i];
        const int k = flow.count(e.u, e.v, p.c);
        if (k < p.c) {
          fail = edge_text(e) + " has " + std::to_string(k) + " paths";
          break;
        }
      }
      add("every deleted edge keeps c disjoint paths", fail.empty(), fail);
      result_3connected();
      break;
    }
    case OutputKind::StableSet: {
      std::vector<char> in_s(h.id_bound(), 0);
      bool present = true, stable = true, unprotected = true, low = true;
      std::string d1, d2, d3, d4;
      for (Vertex v : out.vertices) {
        if (!h.has_vertex(v) || in_s[v]) {
          present = false;
          d1 = std::to_string(v);
          continue;
        }
        in_s[v] = 1;
        if (prot[v]) unprotected = false, d3 = std::to_string(v);
        if (h.degree(v) > p.max_degree) low = false, d4 = std::to_string(v);
      }
      for (Vertex v : out.vertices)
        if (present)
          for (Vertex w : h.neighbors(v))
            if (in_s[w]) stable = false, d2 = edge_text(Edge(v, w));
      add("vertices of the graph, no repeats", present, d1);
      add("stable", stable, d2);
      add("no protected vertex", unprotected, d3);
      add("degrees at most Delta", low, d4);
      if (!present || level == VerifyLevel::Off) break;
      Graph rest = h;
      for (Vertex v : out.vertices) rest.remove_vertex(v);
      VertexFlow flow(rest);
      std::string fail;
      for (std::size_t i : sample(out.vertices.size(), flow_cap)) {
        const Vertex v = out.vertices[i];
        const auto& nb = h.neighbors(v);
        for (std::size_t a = 0; a < nb.size() && fail.empty(); ++a)
          for (std::size_t b = a + 1; b < nb.size() && fail.empty(); ++b) {
            if (in_s[nb[a]] || in_s[nb[b]]) continue;  // already reported as not stable
            const int k = flow.count(nb[a], nb[b], p.c);  // a direct edge counts as one path
            if (k < p.c)
              fail = "neighbours " + edge_text(Edge(nb[a], nb[b])) + " of " + std::to_string(v) + " have " +
                     std::to_string(k) + " paths";
          }
        if (!fail.empty()) break;
      }
      add("neighbour pairs keep c disjoint paths", fail.empty(), fail);
      result_3connected();
      break;
    }
    case OutputKind::MatchingOut: {
      const bool matching = is_matching(h, out.edges);
      add("matching of the graph", matching);
      std::string touch, high;
      for (const Edge& e : out.edges)
        for (Vertex x : {e.u, e.v}) {
          if (!h.has_vertex(x)) continue;
          if (prot[x]) touch = std::to_string(x);
          if (h.degree(x) > p.max_degree) high = std::to_string(x);
        }
      add("no protected vertex", touch.empty(), touch);
      add("degrees at most Delta", high.empty(), high);
      if (matching && touch.empty()) result_3connected();
      break;
    }
    case OutputKind::Triangles: {
      const bool tri = is_triangle_set(h, out.triangles);
      add("disjoint triangles of the graph", tri);
      std::string touch, deg;
      for (const auto& t : out.triangles)
        for (Vertex x : t) {
          if (!h.has_vertex(x)) continue;
          if (prot[x]) touch = std::to_string(x);
          if (h.degree(x) != 3) deg = std::to_string(x);
        }
      add("no protected vertex", touch.empty(), touch);
      add("every triangle vertex has degree 3", deg.empty(), deg);
      if (tri && touch.empty()) result_3connected();
      break;
    }
  }
  return rec;
}

bool all_passed(std::span<const CheckRecord> transcript) {
  return std::all_of(transcript.begin(), transcript.end(), [](const CheckRecord& r) { return r.passed; });
}

// ---------------------------------------------------------------- gadgets

namespace {

// Region views share one id -> local index table across many regions.
class RegionSearcher {
 public:
  RegionSearcher(const Graph& h, const std::vector<char>& prot, const CompactorParams& p)
      : h_(h), prot_(prot), p_(p), local_(h.id_bound(), -1) {}

  RegionGadgets search(const Region& r) {
    load(r);
    RegionGadgets out;
    out.triangle = find_triangle(r);
    out.sweet = find_sweet(r);
    out.well_behaved = find_well_behaved(r);
    const std::string branch = r.side.size() == 1 ? "single-vertex interior" : "";
    for (auto* g : {&out.triangle, &out.sweet, &out.well_behaved})
      if (*g) (*g)->branch = branch;
    unload();
    return out;
  }

  // Cut vertices with a neighbour beyond cut and side.
  std::vector<Vertex> attached_cut(const Region& r) {
    load_plain(r);
    std::vector<Vertex> out;
    for (Vertex x : r.cut)
      for (Vertex y : h_.neighbors(x))
        if (local_[y] < 0) {
          out.push_back(x);
          break;
        }
    unload();
    return out;
  }

 private:
  void load_plain(const Region& r) {
    verts_.clear();
    for (Vertex v : r.cut) verts_.push_back(v);
    for (Vertex v : r.side) verts_.push_back(v);
    for (std::size_t i = 0; i < verts_.size(); ++i) local_[verts_[i]] = static_cast<int>(i);
  }

  void load(const Region& r) {
    load_plain(r);
    const int k = static_cast<int>(verts_.size());
    cut_count_ = static_cast<int>(r.cut.size());
    adj_.assign(k, {});
    for (int i = 0; i < k; ++i)
      for (Vertex w : h_.neighbors(verts_[i]))
        if (local_[w] >= 0) adj_[i].push_back(local_[w]);
    for (const auto& group : r.outside) {
      if (group.empty()) continue;
      const int s = static_cast<int>(adj_.size());
      adj_.emplace_back();
      for (Vertex x : group)
        if (local_[x] >= 0) {
          adj_[s].push_back(local_[x]);
          adj_[local_[x]].push_back(s);
        }
    }
  }

  void unload() {
    for (Vertex v : verts_) local_[v] = -1;
  }

  bool usable(Vertex v) const { return !prot_[v] && h_.degree(v) <= p_.max_degree; }
  bool in_side(Vertex v) const { return local_[v] >= cut_count_; }
  bool in_cut(Vertex v) const { return local_[v] >= 0 && local_[v] < cut_count_; }

  std::optional<GadgetFinding> find_triangle(const Region& r) const {
    for (Vertex u : r.side) {
      if (h_.degree(u) != 3 || prot_[u]) continue;
      const auto& nb = h_.neighbors(u);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          Triangle t{u, nb[i], nb[j]};
          if (prot_[t[1]] || prot_[t[2]] || !is_degree3_triangle(h_, t)) continue;
          std::sort(t.begin(), t.end());
          GadgetFinding f;
          f.kind = GadgetKind::Degree3Triangle;
          f.triangle = t;
          return f;
        }
    }
    return std::nullopt;
  }

  std::optional<GadgetFinding> find_sweet(const Region& r) const {
    for (Vertex a : r.side) {
      if (!usable(a)) continue;
      for (Vertex b : h_.neighbors(a)) {
        if (!usable(b)) continue;
        if (in_side(b) ? b < a : !(in_cut(b) && h_.degree(b) <= p_.d)) continue;
        Vertex end = kNoVertex;
        if (is_sweet_end(h_, a, b)) end = a;
        else if (is_sweet_end(h_, b, a)) end = b;
        if (end == kNoVertex) continue;
        GadgetFinding f;
        f.kind = GadgetKind::SweetEdge;
        f.edge = Edge(a, b);
        f.sweet_end = end;
        return f;
      }
    }
    return std::nullopt;
  }

  std::optional<GadgetFinding> find_well_behaved(const Region& r) {
    for (Vertex a : r.side) {
      if (!usable(a)) continue;
      for (Vertex b : h_.neighbors(a)) {
        if (b < a || !in_side(b) || !usable(b)) continue;
        if (!cut_together(local_[a], local_[b]) || !biconnected_without(local_[a], local_[b])) continue;
        GadgetFinding f;
        f.kind = GadgetKind::WellBehavedEdge;
        f.edge = Edge(a, b);
        f.cut = r.cut;
        f.side = r.side;
        return f;
      }
    }
    return std::nullopt;
  }

  // The cut stays in one piece of the region without a and b, so no clique
  // outside can separate it.
  bool cut_together(int a, int b) {
    if (cut_count_ == 0) return true;
    const int k = static_cast<int>(verts_.size());
    seen_.assign(k, 0);
    seen_[a] = seen_[b] = 1;
    stack_.assign(1, 0);
    seen_[0] = 1;
    while (!stack_.empty()) {
      const int v = stack_.back();
      stack_.pop_back();
      for (int w : adj_[v])
        if (w < k && !seen_[w]) {
          seen_[w] = 1;
          stack_.push_back(w);
        }
    }
    for (int i = 0; i < cut_count_; ++i)
      if (!seen_[i]) return false;
    return true;
  }

  // The region view minus a and b is connected and no region vertex is a
  // cut vertex of it.
  bool biconnected_without(int a, int b) {
    const int n = static_cast<int>(adj_.size());
    const int real = static_cast<int>(verts_.size());
    disc_.assign(n, -1);
    low_.assign(n, 0);
    parent_.assign(n, -1);
    next_.assign(n, 0);
    int root = 0;
    while (root == a || root == b) ++root;
    if (root >= n) return true;
    int time = 0, visited = 1, root_children = 0;
    disc_[root] = low_[root] = time++;
    stack_.assign(1, root);
    while (!stack_.empty()) {
      const int v = stack_.back();
      if (next_[v] < static_cast<int>(adj_[v].size())) {
        const int w = adj_[v][next_[v]++];
        if (w == a || w == b) continue;
        if (disc_[w] < 0) {
          parent_[w] = v;
          disc_[w] = low_[w] = time++;
          ++visited;
          stack_.push_back(w);
        } else if (w != parent_[v]) {
          low_[v] = std::min(low_[v], disc_[w]);
        }
        continue;
      }
      stack_.pop_back();
      const int up = parent_[v];
      if (up < 0) continue;
      low_[up] = std::min(low_[up], low_[v]);
      if (up == root) ++root_children;
      else if (low_[v] >= disc_[up] && up < real) return false;
    }
    if (visited != n - 2) return false;
    return !(root < real && root_children > 1);
  }

  const Graph& h_;
  const std::vector<char>& prot_;
  const CompactorParams& p_;
  std::vector<int> local_;
  std::vector<Vertex> verts_;
  int cut_count_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<int> seen_, stack_, disc_, low_, parent_, next_;
};

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

GadgetFinding first_of(const RegionGadgets& g) {
  if (g.sweet) return *g.sweet;
  if (g.well_behaved) return *g.well_behaved;
  if (g.triangle) return *g.triangle;
  throw Error(ErrorKind::NoGadget, "no gadget in the region");
}

}  // namespace

RegionGadgets search_region(const Graph& h, const Region& r, std::span<const Vertex> protected_vertices,
                            const CompactorParams& p) {
  const auto prot = mark(h, protected_vertices);
  RegionSearcher s(h, prot, p);
  return s.search(r);
}

GadgetFinding find_leaf_gadget(const Graph& h, std::span<const Vertex> cut, std::span<const Vertex> side,
                               std::span<const Vertex> protected_vertices, const CompactorParams& p) {
  if (side.empty()) throw Error(ErrorKind::NoGadget, "empty leaf interior");
  const auto prot = mark(h, protected_vertices);
  RegionSearcher s(h, prot, p);
  Region r;
  r.cut = sorted_unique({cut.begin(), cut.end()});
  r.side = sorted_unique({side.begin(), side.end()});
  r.outside = {s.attached_cut(r)};
  return first_of(s.search(r));
}

GadgetFinding find_path_gadget(const Graph& h, std::span<const std::vector<Vertex>> cutsets,
                               std::span<const Vertex> region, std::span<const Vertex> protected_vertices,
                               const CompactorParams& p) {
  if (region.empty() || cutsets.size() < 2) throw Error(ErrorKind::NoGadget, "empty path region");
  Region r;
  std::vector<Vertex> cut = cutsets.front();
  cut.insert(cut.end(), cutsets.back().begin(), cutsets.back().end());
  r.cut = sorted_unique(cut);
  r.side = sorted_unique({region.begin(), region.end()});
  r.outside = {cutsets.front(), cutsets.back()};
  return first_of(search_region(h, r, protected_vertices, p));
}

// ---------------------------------------------------------------- pipeline

namespace {

struct Contraction {
  Graph graph;
  std::vector<Edge> owner;  // contracted id -> its matching edge

  std::vector<Vertex> expand(std::span<const Vertex> vs) const {
    std::vector<Vertex> out;
    for (Vertex v : vs) {
      if (v < static_cast<int>(owner.size()) && owner[v].u != kNoVertex) {
        out.push_back(owner[v].u);
        out.push_back(owner[v].v);
      } else {
        out.push_back(v);
      }
    }
    return sorted_unique(std::move(out));
  }
};

Contraction contract_matching(const Graph& h, const Matching& m) {
  std::vector<std::vector<Vertex>> groups;
  Contraction c;
  c.owner.assign(h.id_bound(), Edge{});
  for (const Edge& e : m) {
    groups.push_back({e.u, e.v});
    c.owner[e.u] = e;
  }
  c.graph = contract_groups(h, groups).graph;
  return c;
}

class Pipeline {
 public:
  Pipeline(const Graph& h, const CompactorParams& p, std::span<const Vertex> prot)
      : h_(h), p_(p), prot_list_(prot.begin(), prot.end()), prot_(mark(h, prot)), searcher_(h, prot_, p) {
    n_ = h.num_vertices();
    m_ = h.num_edges();
    target_ = p.delta * (n_ + m_);
  }

  CompactorOutput run();

 private:
  struct Pools {
    TriangleSet triangles;
    Matching well_behaved, sweet;
    std::size_t regions = 0, with_triangle = 0, with_wb = 0, with_sweet = 0;
  };

  // Records a verified candidate; true when it meets the per-step target.
  bool offer(CompactorOutput out) {
    if (out.empty()) return false;
    Minor minor;
    try {
      minor = apply_minor_op(h_, out.op(), prot_list_);
    } catch (const Error&) {
      return false;
    }
    if (!is_k_connected(minor.graph, 3)) {
      ++rejected_;
      return false;
    }
    const double shrink = static_cast<double>(n_ + m_ - minor.graph.num_vertices() - minor.graph.num_edges());
    out.below_target = shrink < target_;
    const bool good = !out.below_target;
    if (!best_ || shrink > best_shrink_) {
      best_ = std::move(out);
      best_shrink_ = shrink;
    }
    return good;
  }

  void add_region(Pools& pools, const Region& r) {
    if (r.side.empty() || r.side.size() > static_cast<std::size_t>(1.0 / p_.epsilon)) return;
    auto g = searcher_.search(r);
    ++pools.regions;
    if (g.triangle) {
      ++pools.with_triangle;
      pools.triangles.push_back(g.triangle->triangle);
    }
    if (g.well_behaved) {
      ++pools.with_wb;
      pools.well_behaved.push_back(g.well_behaved->edge);
    }
    if (g.sweet) {
      ++pools.with_sweet;
      pools.sweet.push_back(g.sweet->edge);
    }
  }

  static Matching disjoint(const Matching& es, std::vector<char>& used) {
    Matching out;
    for (const Edge& e : es) {
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = 1;
      out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Turns pools into outputs in the order triangles, well-behaved, sweet.
  bool from_pools(Pools& pools, const std::string& where) {
    const double eps_n = p_.epsilon * n_;
    {
      std::vector<char> used(h_.id_bound(), 0);
      std::sort(pools.triangles.begin(), pools.triangles.end());
      pools.triangles.erase(std::unique(pools.triangles.begin(), pools.triangles.end()), pools.triangles.end());
      CompactorOutput out;
      out.kind = OutputKind::Triangles;
      for (const auto& t : pools.triangles) {
        if (used[t[0]] || used[t[1]] || used[t[2]]) continue;
        for (Vertex v : t) used[v] = 1;
        out.triangles.push_back(t);
      }
      out.route = where + "-triangles";
      const bool big = static_cast<double>(out.triangles.size()) >= eps_n;
      if (offer(out) && big) return true;
    }
    {
      std::vector<char> used(h_.id_bound(), 0);
      CompactorOutput out;
      out.kind = OutputKind::MatchingOut;
      out.edges = disjoint(pools.well_behaved, used);
      out.route = where + "-well-behaved";
      const bool big = static_cast<double>(out.edges.size()) >= eps_n;
      if (offer(out) && big) return true;
    }
    {
      std::vector<char> used(h_.id_bound(), 0);
      CompactorOutput out;
      out.kind = OutputKind::MatchingOut;
      out.edges = disjoint(pools.sweet, used);
      out.route = where + "-sweet";
      const bool big = static_cast<double>(pools.with_sweet) >= p_.d * eps_n;
      if (offer(out) && big) return true;
    }
    return false;
  }

  Pools leaf_pools(const Contraction& c, const Special2CutTree& sp, const std::vector<Leaf>& leaves) {
    Pools pools;
    for (const auto& leaf : leaves) {
      if (leaf.cut < 0) continue;
      Region r;
      r.cut = c.expand(sp.nodes[leaf.cut].vertices);
      r.side = c.expand(leaf.interior);
      if (r.side.size() > static_cast<std::size_t>(1.0 / p_.epsilon)) continue;
      r.outside = {searcher_.attached_cut(r)};
      add_region(pools, r);
    }
    return pools;
  }

  Pools path_pools(const Contraction& c, const Strong2CutTree& t, const std::vector<std::vector<int>>& paths) {
    Pools pools;
    for (const auto& path : paths) {
      const auto& first = t.nodes[path.front()].vertices;
      const auto& last = t.nodes[path.back()].vertices;
      std::vector<Vertex> inner;
      for (int node : path)
        if (t.nodes[node].is_graph_node())
          for (Vertex v : t.nodes[node].vertices)
            if (!std::count(first.begin(), first.end(), v) && !std::count(last.begin(), last.end(), v))
              inner.push_back(v);
      Region r;
      const auto y1 = c.expand(first), y2 = c.expand(last);
      std::vector<Vertex> cut = y1;
      cut.insert(cut.end(), y2.begin(), y2.end());
      r.cut = sorted_unique(cut);
      r.side = c.expand(sorted_unique(inner));
      r.outside = {y1, y2};
      add_region(pools, r);
    }
    return pools;
  }

  const Graph& h_;
  const CompactorParams& p_;
  std::vector<Vertex> prot_list_;
  std::vector<char> prot_;
  RegionSearcher searcher_;
  long long n_ = 0, m_ = 0;
  double target_ = 0;
  std::optional<CompactorOutput> best_;
  double best_shrink_ = -1;
  int rejected_ = 0;
};

CompactorOutput Pipeline::run() {
  const Matching m = greedy_low_degree_matching(h_, p_.d, prot_list_);
  if (static_cast<double>(m.size()) < 2.0 * p_.c * n_ / p_.d) return stable_set_output(h_, p_, prot_list_);

  const Matching mstar = refine_matching(h_, m, p_.d);
  auto matching_out = [](Matching es, std::string route) {
    CompactorOutput out;
    out.kind = OutputKind::MatchingOut;
    std::sort(es.begin(), es.end());
    out.edges = std::move(es);
    out.route = std::move(route);
    return out;
  };

  const Contraction star = contract_matching(h_, mstar);
  if (is_k_connected(star.graph, 3) && offer(matching_out(mstar, "induced-matching"))) return *best_;

  const Strong2CutTree strong_star = strong_2cut_tree(star.graph);
  const Special2CutTree special_star = special_2cut_tree(strong_star);
  const auto leaves_star = harvest_leaves(special_star).leaves;
  if (15 * leaves_star.size() >= mstar.size()) {
    auto pools = leaf_pools(star, special_star, leaves_star);
    if (from_pools(pools, "leaves")) return *best_;
  }

  std::vector<Vertex> contracted;
  for (const Edge& e : mstar) contracted.push_back(e.u);
  std::sort(contracted.begin(), contracted.end());
  const auto independent = harvest_independent(strong_star, contracted).independent;
  Matching mplus;
  for (Vertex v : independent) mplus.push_back(star.owner[v]);
  std::sort(mplus.begin(), mplus.end());

  if (!mplus.empty()) {
    const Contraction plus = contract_matching(h_, mplus);
    const Strong2CutTree strong_plus = strong_2cut_tree(plus.graph);
    const Special2CutTree special_plus = special_2cut_tree(strong_plus);
    const auto leaves_plus = harvest_leaves(special_plus).leaves;
    if (4000 * leaves_plus.size() >= mplus.size()) {
      auto pools = leaf_pools(plus, special_plus, leaves_plus);
      if (from_pools(pools, "separated-leaves")) return *best_;
    }
    const auto paths = harvest_degree2_paths(strong_plus).paths;
    if (!paths.empty() && 4000 * paths.size() >= mplus.size()) {
      auto pools = path_pools(plus, strong_plus, paths);
      if (from_pools(pools, "paths")) return *best_;
    }
    // Contracted vertices in no 2-cut of the contracted graph.
    std::vector<char> in_cut(plus.graph.id_bound(), 0);
    for (const auto& node : strong_plus.nodes)
      if (node.kind == NodeKind::Cut || (node.kind == NodeKind::Cycle && node.cycle.size() >= 4))
        for (Vertex v : node.vertices) in_cut[v] = 1;
    Matching last;
    for (Vertex v : independent)
      if (!in_cut[v]) last.push_back(plus.owner[v]);
    if (offer(matching_out(last, "separated-matching"))) return *best_;
  }

  if (!best_) return matching_out({}, "none");
  best_->below_target = best_shrink_ < target_;
  return *best_;
}

}  // namespace

CompactorOutput stable_set_output(const Graph& h, const CompactorParams& p, std::span<const Vertex> protected_vertices) {
  const Matching m = greedy_low_degree_matching(h, p.d, protected_vertices);
  std::vector<char> in_cover = mark(h, protected_vertices);
  for (Vertex v : h.vertices())
    if (h.degree(v) > p.d) in_cover[v] = 1;
  for (const Edge& e : m) in_cover[e.u] = in_cover[e.v] = 1;
  std::vector<Vertex> cover, stable;
  for (Vertex v : h.vertices()) (in_cover[v] ? cover : stable).push_back(v);
  // The size bound needs |V| > 5d/2c to absorb the protected vertices; below
  // that the embedding is still valid, only the shrink is not guaranteed.
  const bool oversized = static_cast<double>(cover.size()) > 10.0 * p.c * h.num_vertices() / p.d;
  if (oversized && 2.0 * p.c * h.num_vertices() > 5.0 * p.d)
    throw Error(ErrorKind::CoverTooLarge, "cover of " + std::to_string(cover.size()) + " vertices is too large");
  const auto j = small_cover_embed(h, cover, stable, p.c);
  CompactorOutput out;
  out.kind = OutputKind::StableSet;
  out.route = "small-cover";
  for (Vertex v : stable)
    if (!std::binary_search(j.begin(), j.end(), v)) out.vertices.push_back(v);
  std::size_t removed_edges = 0;
  for (Vertex v : out.vertices) removed_edges += h.degree(v);
  out.below_target = oversized || static_cast<double>(out.vertices.size() + removed_edges) <
                                      p.delta * (h.num_vertices() + h.num_edges());
  return out;
}

CompactorOutput low_density_compactor(const Graph& h, const CompactorParams& p,
                                      std::span<const Vertex> protected_vertices, VerifyLevel level) {
  if (protected_vertices.size() > 5) precondition("at most five protected vertices");
  if (static_cast<double>(h.num_edges()) > 2.0 * p.c * h.num_vertices()) precondition("graph has more than 2c|V| edges");
  if (!is_k_connected(h, 3)) throw Error(ErrorKind::Not3Connected, "compactor input is not 3-connected");
  Pipeline pipe(h, p, protected_vertices);
  CompactorOutput out = pipe.run();
  if (level != VerifyLevel::Off) out.transcript = verify_output(h, protected_vertices, p, out, level);
  return out;
}

CompactorOutput compactor(const Graph& h, std::span<const Vertex> protected_vertices, const CompactorParams& p,
                          VerifyLevel level) {
  if (protected_vertices.size() > 5) precondition("at most five protected vertices");
  for (Vertex v : protected_vertices)
    if (!h.has_vertex(v)) precondition("protected vertex " + std::to_string(v) + " is not in the graph");
  if (h.num_vertices() < p.n0) throw Error(ErrorKind::TooSmall, "graph is below n0");
  if (!is_k_connected(h, 3)) throw Error(ErrorKind::Not3Connected, "compactor input is not 3-connected");

  CompactorOutput out;
  if (2.0 * h.num_edges() > 4.0 * p.c * h.num_vertices()) {
    out.kind = OutputKind::EdgeSet;
    out.route = "dense";
    out.edges = dense_edge_deletion(h, p.c, protected_vertices);
    std::sort(out.edges.begin(), out.edges.end());
    out.below_target = static_cast<double>(out.edges.size()) < p.delta * (h.num_vertices() + h.num_edges());
  } else {
    out = low_density_compactor(h, p, protected_vertices, VerifyLevel::Off);
  }
  out.transcript = verify_output(h, protected_vertices, p, out, level);
  if (!out.empty())
    for (const auto& r : out.transcript)
      if (!r.passed) throw Error(ErrorKind::VerificationFailed, r.condition + ": " + r.detail);
  return out;
}

CompactionSequence iterative_compactor(const Graph& t, std::span<const Vertex> protected_vertices,
                                       const CompactorParams& p, VerifyLevel level) {
  if (!is_k_connected(t, 3)) throw Error(ErrorKind::Not3Connected, "input is not 3-connected");
  CompactionSequence seq;
  seq.start = t;
  Graph g = t;
  std::vector<Vertex> prot(protected_vertices.begin(), protected_vertices.end());
  while (g.num_vertices() >= p.n0) {
    CompactorOutput out = compactor(g, prot, p, level);
    if (out.empty() || out.below_target) {
      seq.status = CompactionSequence::Status::ShrinkBelowTarget;
      seq.stalled = std::move(out);
      break;
    }
    Minor minor = apply_minor_op(g, out.op(), prot);
    std::vector<Vertex> next;
    for (Vertex v : prot) next.push_back(minor.map(v));
    if (std::set<Vertex>(next.begin(), next.end()).size() != prot.size() ||
        std::count(next.begin(), next.end(), kNoVertex))
      throw Error(ErrorKind::VerificationFailed, "protected vertices merged or lost");
    if (level != VerifyLevel::Off && !is_k_connected(minor.graph, 3))
      throw Error(ErrorKind::VerificationFailed, "step result is not 3-connected");
    CompactionStep step;
    step.vertices = g.num_vertices();
    step.edges = g.num_edges();
    step.shrink = 1.0 - static_cast<double>(minor.graph.num_vertices() + minor.graph.num_edges()) /
                            (g.num_vertices() + g.num_edges());
    seq.journal.record(out.op(), minor.map);
    step.output = std::move(out);
    seq.steps.push_back(std::move(step));
    g = std::move(minor.graph);
    prot = std::move(next);
  }
  seq.last = std::move(g);
  seq.protected_last = std::move(prot);
  return seq;
}

}  // namespace tricompact
