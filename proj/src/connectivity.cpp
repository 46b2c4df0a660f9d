#include "tricompact/connectivity.hpp"

#include <algorithm>
#include <limits>

#include "tricompact/decomposition.hpp"

namespace tricompact {

namespace {
constexpr int kInf = std::numeric_limits<int>::max() / 4;
}

bool verify_path_set(const Graph& g, const PathSet& ps) {
  std::vector<char> used(g.id_bound(), 0);
  int direct = 0;
  for (const auto& p : ps.paths) {
    if (p.size() < 2 || p.front() != ps.source || p.back() != ps.target) return false;
    if (p.size() == 2 && ++direct > 1) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.has_edge(p[i], p[i + 1])) return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (p[i] == ps.source || p[i] == ps.target || used[p[i]]) return false;
      used[p[i]] = 1;
    }
  }
  return true;
}

VertexFlow::VertexFlow(const Graph& g) : graph_(&g) {
  const int nodes = 2 * g.id_bound();
  node_arcs_.resize(nodes);
  arcs_.reserve(2 * (g.num_vertices() + 2 * static_cast<std::size_t>(g.num_edges())));
  for (Vertex v : g.vertices()) {
    add_arc(in_node(v), out_node(v), 1);
    for (Vertex w : g.neighbors(v)) add_arc(out_node(v), in_node(w), kInf);
  }
  residual_.resize(arcs_.size());
  for (std::size_t a = 0; a < arcs_.size(); ++a) residual_[a] = arcs_[a].cap;
  touched_mark_.assign(arcs_.size(), 0);
  exit_.assign(nodes, 0);
  blocked_.assign(nodes, 0);
  parent_arc_.assign(nodes, -1);
  seen_.assign(nodes, 0);
}

void VertexFlow::add_arc(int from, int to, int cap) {
  const int a = static_cast<int>(arcs_.size());
  arcs_.push_back({to, a + 1, cap});
  arcs_.push_back({from, a, 0});
  node_arcs_[from].push_back(a);
  node_arcs_[to].push_back(a + 1);
}

void VertexFlow::reset() {
  for (int a : touched_) {
    residual_[a] = arcs_[a].cap;
    touched_mark_[a] = 0;
  }
  touched_.clear();
  for (int x : exit_list_) exit_[x] = 0;
  for (int x : blocked_list_) blocked_[x] = 0;
  entry_list_.clear();
  exit_list_.clear();
  blocked_list_.clear();
}

int VertexFlow::augment(int limit) {
  int flow = 0;
  std::vector<int> queue;
  auto touch = [&](int a) {
    if (!touched_mark_[a]) {
      touched_mark_[a] = 1;
      touched_.push_back(a);
    }
  };
  while (flow < limit) {
    ++stamp_;
    queue.clear();
    int found = -1;
    for (int s : entry_list_) {
      if (blocked_[s] || seen_[s] == stamp_) continue;
      seen_[s] = stamp_;
      parent_arc_[s] = -1;
      queue.push_back(s);
    }
    for (std::size_t i = 0; i < queue.size() && found < 0; ++i) {
      const int x = queue[i];
      for (int a : node_arcs_[x]) {
        if (residual_[a] <= 0) continue;
        const int y = arcs_[a].head;
        if (blocked_[y] || seen_[y] == stamp_) continue;
        seen_[y] = stamp_;
        parent_arc_[y] = a;
        if (exit_[y]) {
          found = y;
          break;
        }
        queue.push_back(y);
      }
    }
    if (found < 0) break;
    for (int y = found; parent_arc_[y] >= 0;) {
      const int a = parent_arc_[y];
      const int r = arcs_[a].rev;
      --residual_[a];
      ++residual_[r];
      touch(a);
      touch(r);
      y = arcs_[r].head;
    }
    ++flow;
  }
  return flow;
}

VertexFlow::Separation VertexFlow::separate(std::span<const Vertex> sources,
                                            std::span<const Vertex> sinks, bool sources_cuttable,
                                            bool sinks_cuttable, int limit, CutSide side,
                                            std::span<const Vertex> removed) {
  const Graph& g = *graph_;
  reset();
  auto block = [&](int node) {
    if (!blocked_[node]) {
      blocked_[node] = 1;
      blocked_list_.push_back(node);
    }
  };
  std::vector<char> role(g.id_bound(), 0);  // 1 source, 2 sink, 3 removed
  for (Vertex v : removed) {
    role[v] = 3;
    block(in_node(v));
    block(out_node(v));
  }
  for (Vertex s : sources) {
    if (!g.has_vertex(s) || role[s] == 3) continue;
    role[s] = 1;
    if (sources_cuttable) {
      entry_list_.push_back(in_node(s));
    } else {
      entry_list_.push_back(out_node(s));
      block(in_node(s));
    }
  }
  for (Vertex t : sinks) {
    if (!g.has_vertex(t) || role[t] == 3) continue;
    if (role[t] == 1) throw Error(ErrorKind::SameVertex, "vertex is both source and sink");
    role[t] = 2;
    const int node = sinks_cuttable ? out_node(t) : in_node(t);
    exit_[node] = 1;
    exit_list_.push_back(node);
    if (!sinks_cuttable) block(out_node(t));
  }
  // An edge between two uncuttable ends carries exactly one path.
  if (!sources_cuttable && !sinks_cuttable) {
    for (Vertex s : sources) {
      if (role[s] != 1) continue;
      for (int a : node_arcs_[out_node(s)]) {
        const int head = arcs_[a].head;
        if (arcs_[a].cap > 0 && (head & 1) == 0 && role[head / 2] == 2) {
          residual_[a] = 1;
          touched_mark_[a] = 1;
          touched_.push_back(a);
        }
      }
    }
  }

  Separation out;
  out.flow = augment(limit);
  out.source_side.assign(g.id_bound(), 0);
  if (out.flow < limit) {
    ++stamp_;
    std::vector<int> queue;
    if (side == CutSide::NearSource) {
      for (int s : entry_list_)
        if (!blocked_[s] && seen_[s] != stamp_) {
          seen_[s] = stamp_;
          queue.push_back(s);
        }
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (int a : node_arcs_[queue[i]]) {
          const int y = arcs_[a].head;
          if (residual_[a] > 0 && !blocked_[y] && seen_[y] != stamp_) {
            seen_[y] = stamp_;
            queue.push_back(y);
          }
        }
      for (Vertex v : g.vertices()) {
        if (role[v] == 3) continue;
        const bool in_r = seen_[in_node(v)] == stamp_;
        const bool out_r = seen_[out_node(v)] == stamp_;
        if (in_r && !out_r) out.cut.push_back(v);
      }
    } else {
      for (int t : exit_list_)
        if (!blocked_[t] && seen_[t] != stamp_) {
          seen_[t] = stamp_;
          queue.push_back(t);
        }
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (int a : node_arcs_[queue[i]]) {
          const int p = arcs_[a].head;
          if (residual_[arcs_[a].rev] > 0 && !blocked_[p] && seen_[p] != stamp_) {
            seen_[p] = stamp_;
            queue.push_back(p);
          }
        }
      for (Vertex v : g.vertices()) {
        if (role[v] == 3) continue;
        const bool in_q = seen_[in_node(v)] == stamp_;
        const bool out_q = seen_[out_node(v)] == stamp_;
        if (!in_q && out_q) out.cut.push_back(v);
      }
    }
    // Source side: reachable from an uncut source once cut and removed vertices are gone.
    std::vector<char> stop(g.id_bound(), 0);
    for (Vertex v : out.cut) stop[v] = 1;
    for (Vertex v : g.vertices())
      if (role[v] == 3) stop[v] = 1;
    std::vector<Vertex> stack;
    for (Vertex s : sources)
      if (g.has_vertex(s) && !stop[s] && !out.source_side[s]) {
        out.source_side[s] = 1;
        stack.push_back(s);
      }
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (!stop[y] && !out.source_side[y]) {
          out.source_side[y] = 1;
          stack.push_back(y);
        }
    }
  }
  return out;
}

PathSet VertexFlow::disjoint_paths(Vertex source, Vertex target, int cap) {
  if (source == target) throw Error(ErrorKind::SameVertex, "source equals target");
  const Vertex src[1] = {source};
  const Vertex dst[1] = {target};
  separate(src, dst, false, false, cap, CutSide::NearSource);
  PathSet ps{source, target, {}};
  // Walk flow-carrying arcs; interior vertices have unit capacity so each
  // is visited by at most one path.
  auto flow_on = [&](int a) { return arcs_[a].cap - residual_[a]; };
  for (int a : node_arcs_[out_node(source)]) {
    if (arcs_[a].cap <= 0 || flow_on(a) <= 0) continue;
    std::vector<Vertex> path{source};
    int node = arcs_[a].head;
    while (true) {
      const Vertex v = node / 2;
      path.push_back(v);
      if (v == target) break;
      int next = -1;
      for (int b : node_arcs_[out_node(v)])
        if (arcs_[b].cap > 0 && flow_on(b) > 0) {
          next = b;
          break;
        }
      if (next < 0) break;
      node = arcs_[next].head;
    }
    ps.paths.push_back(std::move(path));
  }
  std::sort(ps.paths.begin(), ps.paths.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  reset();
  return ps;
}

int VertexFlow::count(Vertex source, Vertex target, int cap) {
  if (source == target) throw Error(ErrorKind::SameVertex, "source equals target");
  const Vertex src[1] = {source};
  const Vertex dst[1] = {target};
  int flow = separate(src, dst, false, false, cap, CutSide::NearSource).flow;
  reset();
  return flow;
}

PathSet count_disjoint_paths(const Graph& g, Vertex u, Vertex v, int cap) {
  if (u == v) throw Error(ErrorKind::SameVertex, "u == v");
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw Error(ErrorKind::InvalidPayload, "missing endpoint");
  if (cap < 1) throw Error(ErrorKind::InvalidPayload, "cap must be positive");
  VertexFlow flow(g);
  return flow.disjoint_paths(u, v, cap);
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<char> seen(g.id_bound(), 0);
  const auto vs = g.vertices();
  std::vector<Vertex> stack{vs.front()};
  seen[vs.front()] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x))
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  return count == g.num_vertices();
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.num_vertices() <= k) return false;
  if (k == 1) return is_connected(g);
  if (k == 2) return is_biconnected(g);
  if (k == 3) return is_triconnected(g);
  // Some of the first k vertices survives any cut of size < k, so it is
  // separated from some non-neighbour.
  const auto vs = g.vertices();
  VertexFlow flow(g);
  for (int i = 0; i < k; ++i) {
    const Vertex x = vs[i];
    for (Vertex y : vs)
      if (y != x && !g.has_edge(x, y) && flow.count(x, y, k) < k) return false;
  }
  return true;
}

std::vector<Edge> ForestDecomposition::kept() const {
  std::vector<Edge> out;
  for (const auto& f : forests) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> scan_first_forest_index(const Graph& g) {
  const int bound = g.id_bound();
  // Bucket queue keyed by the number of scanned neighbours.
  std::vector<int> rank(bound, 0), next(bound, -1), prev(bound, -1);
  std::vector<char> scanned(bound, 0);
  std::vector<int> head(1, -1);
  auto unlink = [&](Vertex v) {
    if (prev[v] >= 0) next[prev[v]] = next[v];
    else head[rank[v]] = next[v];
    if (next[v] >= 0) prev[next[v]] = prev[v];
  };
  auto link = [&](Vertex v) {
    if (rank[v] >= static_cast<int>(head.size())) head.resize(rank[v] + 1, -1);
    prev[v] = -1;
    next[v] = head[rank[v]];
    if (next[v] >= 0) prev[next[v]] = v;
    head[rank[v]] = v;
  };
  const auto vs = g.vertices();
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) link(*it);

  // Edge index lookup: edges() lists (u,v) with u<v in order of u then v.
  std::vector<int> first_edge(bound + 1, 0);
  for (Vertex u = 0; u < bound; ++u) {
    int forward = 0;
    for (Vertex w : g.neighbors(u))
      if (w > u) ++forward;
    first_edge[u + 1] = first_edge[u] + forward;
  }
  std::vector<int> index(g.num_edges(), 0);
  auto edge_id = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    const auto& nb = g.neighbors(a);
    auto start = std::upper_bound(nb.begin(), nb.end(), a);
    return first_edge[a] + static_cast<int>(std::lower_bound(start, nb.end(), b) - start);
  };

  int top = 0;
  for (int remaining = g.num_vertices(); remaining > 0; --remaining) {
    while (top > 0 && head[top] < 0) --top;
    const Vertex x = head[top];
    unlink(x);
    scanned[x] = 1;
    for (Vertex y : g.neighbors(x)) {
      if (scanned[y]) continue;
      unlink(y);
      ++rank[y];
      index[edge_id(x, y)] = rank[y];
      link(y);
      top = std::max(top, rank[y]);
    }
  }
  return index;
}

ForestDecomposition sparse_certificate(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidPayload, "k must be positive");
  const auto edges = g.edges();
  const auto index = scan_first_forest_index(g);
  ForestDecomposition out;
  out.forests.resize(k);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (index[i] <= k) out.forests[index[i] - 1].push_back(edges[i]);
    else out.remainder.push_back(edges[i]);
  }
  return out;
}

std::vector<Edge> dense_edge_deletion(const Graph& g, int c, std::span<const Vertex> protected_vertices) {
  const double n = g.num_vertices();
  if (n == 0 || 2.0 * g.num_edges() <= 4.0 * c * n)
    throw Error(ErrorKind::TooSparse, "average degree does not exceed 4c");
  std::vector<char> prot(g.id_bound(), 0);
  for (Vertex v : protected_vertices)
    if (g.has_vertex(v)) prot[v] = 1;
  const auto edges = g.edges();
  const auto index = scan_first_forest_index(g);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (index[i] > c && !prot[edges[i].u] && !prot[edges[i].v]) out.push_back(edges[i]);
  return out;
}

}  // namespace tricompact
