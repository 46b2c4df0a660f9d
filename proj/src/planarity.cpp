#include "tricompact/planarity.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include "tricompact/connectivity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace tricompact {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

struct Packed {
  BoostGraph graph;
  std::vector<Vertex> original;  // packed index -> vertex id
};

Packed pack(const Graph& g) {
  Packed p;
  std::vector<int> index(g.id_bound(), -1);
  for (Vertex v : g.vertices()) {
    index[v] = static_cast<int>(p.original.size());
    p.original.push_back(v);
  }
  p.graph = BoostGraph(p.original.size());
  int next = 0;
  for (const Edge& e : g.edges()) {
    auto [edge, ok] = boost::add_edge(index[e.u], index[e.v], p.graph);
    (void)ok;
    boost::put(boost::edge_index, p.graph, edge, next++);
  }
  return p;
}

// Suppresses degree-2 vertices; centers stay empty when the branch vertex
// count rules out both shapes.
KuratowskiWitness shape_witness(const std::vector<Edge>& edges) {
  std::map<Vertex, std::vector<Vertex>> nb;
  for (const Edge& e : edges) {
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  KuratowskiWitness w;
  std::vector<Vertex> branch;
  for (auto& [v, list] : nb) {
    std::sort(list.begin(), list.end());
    if (list.size() >= 3) branch.push_back(v);
    else if (list.size() != 2) return w;
  }
  std::set<Vertex> is_branch(branch.begin(), branch.end());
  std::set<Edge> used;
  for (Vertex b : branch)
    for (Vertex first : nb[b]) {
      if (used.count(Edge(b, first))) continue;
      std::vector<Vertex> path{b};
      Vertex prev = b, cur = first;
      used.insert(Edge(b, first));
      while (!is_branch.count(cur)) {
        path.push_back(cur);
        const auto& l = nb[cur];
        const Vertex next = l[0] == prev ? l[1] : l[0];
        used.insert(Edge(cur, next));
        prev = cur;
        cur = next;
      }
      path.push_back(cur);
      w.paths.push_back(std::move(path));
    }
  if (branch.size() == 5) {
    w.kind = KuratowskiWitness::Kind::K5;
    w.centers = branch;
    return w;
  }
  if (branch.size() != 6) return {};
  // Side of branch[0]: everything it is not joined to, plus itself.
  std::set<Vertex> joined;
  for (const auto& p : w.paths) {
    if (p.front() == branch[0]) joined.insert(p.back());
    if (p.back() == branch[0]) joined.insert(p.front());
  }
  std::vector<Vertex> side_a, side_b;
  for (Vertex b : branch) (joined.count(b) ? side_b : side_a).push_back(b);
  if (side_a.size() != 3 || side_b.size() != 3) return {};
  w.kind = KuratowskiWitness::Kind::K33;
  w.centers = side_a;
  w.centers.insert(w.centers.end(), side_b.begin(), side_b.end());
  return w;
}

bool planar_edges(const Graph& host, const std::vector<Edge>& edges) {
  Graph sub = Graph::from_edges(host.id_bound(), edges);
  Packed p = pack(sub);
  return boost::boyer_myrvold_planarity_test(p.graph);
}

}  // namespace

PlanarityResult planarity(const Graph& g) {
  Packed p = pack(g);
  using Rotation = std::vector<std::vector<BoostEdge>>;
  Rotation rotation(p.original.size());
  std::vector<BoostEdge> kuratowski;
  auto rot_map = boost::make_iterator_property_map(rotation.begin(), boost::get(boost::vertex_index, p.graph));
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = p.graph, boost::boyer_myrvold_params::embedding = rot_map,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (planar) {
    PlanarEmbedding emb;
    emb.rotation.assign(g.id_bound(), {});
    for (std::size_t i = 0; i < rotation.size(); ++i) {
      const Vertex v = p.original[i];
      for (const BoostEdge& e : rotation[i]) {
        const auto s = boost::source(e, p.graph), t = boost::target(e, p.graph);
        emb.rotation[v].push_back(p.original[static_cast<std::size_t>(s) == i ? t : s]);
      }
    }
    emb.faces = trace_faces(g, emb.rotation);
    if (!emb.faces.empty()) {
      emb.outer_face = static_cast<int>(
          std::max_element(emb.faces.begin(), emb.faces.end(),
                           [](const auto& a, const auto& b) { return a.size() < b.size(); }) -
          emb.faces.begin());
    }
    return emb;
  }
  std::vector<Edge> edges;
  for (const BoostEdge& e : kuratowski)
    edges.emplace_back(p.original[boost::source(e, p.graph)], p.original[boost::target(e, p.graph)]);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  KuratowskiWitness w = shape_witness(edges);
  if (!verify_kuratowski(g, w)) {
    // Shrink to a minimal nonplanar edge set, then read off the shape.
    for (std::size_t i = edges.size(); i-- > 0;) {
      std::vector<Edge> trial = edges;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (!planar_edges(g, trial)) edges = std::move(trial);
    }
    w = shape_witness(edges);
  }
  return w;
}

bool is_planar(const Graph& g) {
  Packed p = pack(g);
  return boost::boyer_myrvold_planarity_test(p.graph);
}

std::vector<std::vector<Vertex>> trace_faces(const Graph& g, const std::vector<std::vector<Vertex>>& rotation) {
  std::vector<std::vector<Vertex>> faces;
  // Dart (u, i): from u along rotation[u][i].
  std::vector<std::vector<char>> seen(rotation.size());
  for (std::size_t u = 0; u < rotation.size(); ++u) seen[u].assign(rotation[u].size(), 0);
  auto position = [&](Vertex at, Vertex of) {
    const auto& r = rotation[at];
    return static_cast<std::size_t>(std::find(r.begin(), r.end(), of) - r.begin());
  };
  for (Vertex u0 : g.vertices()) {
    if (static_cast<std::size_t>(u0) >= rotation.size()) continue;
    for (std::size_t i0 = 0; i0 < rotation[u0].size(); ++i0) {
      if (seen[u0][i0]) continue;
      std::vector<Vertex> face;
      Vertex u = u0;
      std::size_t i = i0;
      while (!seen[u][i]) {
        seen[u][i] = 1;
        face.push_back(u);
        const Vertex v = rotation[u][i];
        if (static_cast<std::size_t>(v) >= rotation.size()) return {};
        const std::size_t back = position(v, u);
        if (back >= rotation[v].size()) return {};
        i = (back + 1) % rotation[v].size();
        u = v;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

bool verify_embedding(const Graph& g, const PlanarEmbedding& emb) {
  if (emb.rotation.size() != static_cast<std::size_t>(g.id_bound())) return false;
  for (Vertex v = 0; v < g.id_bound(); ++v) {
    std::vector<Vertex> r = emb.rotation[v];
    std::sort(r.begin(), r.end());
    if (!g.has_vertex(v)) {
      if (!r.empty()) return false;
      continue;
    }
    if (r != g.neighbors(v)) return false;
  }
  auto faces = trace_faces(g, emb.rotation);
  auto canonical = [](std::vector<std::vector<Vertex>> fs) {
    for (auto& f : fs) {
      if (f.empty()) continue;
      // Rotate so the lexicographically smallest dart comes first.
      std::size_t best = 0;
      for (std::size_t i = 1; i < f.size(); ++i) {
        auto dart = [&](std::size_t k) { return std::pair(f[k], f[(k + 1) % f.size()]); };
        if (dart(i) < dart(best)) best = i;
      }
      std::rotate(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(best), f.end());
    }
    std::sort(fs.begin(), fs.end());
    return fs;
  };
  if (canonical(faces) != canonical(emb.faces)) return false;
  if (!emb.faces.empty() && (emb.outer_face < 0 || emb.outer_face >= static_cast<int>(emb.faces.size())))
    return false;

  // Euler per component: V - E + F = 2 wherever there is an edge.
  std::vector<int> comp(g.id_bound(), -1);
  int count = 0;
  for (Vertex s : g.vertices()) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (comp[y] < 0) {
          comp[y] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }
  std::vector<long> vs(count, 0), es(count, 0), fs(count, 0);
  for (Vertex v : g.vertices()) {
    ++vs[comp[v]];
    es[comp[v]] += g.degree(v);
  }
  for (const auto& f : faces) ++fs[comp[f[0]]];
  for (int c = 0; c < count; ++c) {
    if (es[c] == 0) continue;
    if (vs[c] - es[c] / 2 + fs[c] != 2) return false;
  }
  return true;
}

bool verify_kuratowski(const Graph& g, const KuratowskiWitness& w) {
  const bool k5 = w.kind == KuratowskiWitness::Kind::K5;
  const std::size_t centers = k5 ? 5 : 6, paths = k5 ? 10 : 9;
  if (w.centers.size() != centers || w.paths.size() != paths) return false;
  std::set<Vertex> center_set(w.centers.begin(), w.centers.end());
  if (center_set.size() != centers) return false;
  for (Vertex c : w.centers)
    if (!g.has_vertex(c)) return false;
  std::set<Vertex> interiors;
  std::set<Edge> pairs;
  for (const auto& p : w.paths) {
    if (p.size() < 2) return false;
    if (!center_set.count(p.front()) || !center_set.count(p.back())) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.has_edge(p[i], p[i + 1])) return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
      if (center_set.count(p[i]) || !interiors.insert(p[i]).second) return false;
    if (p.front() == p.back() || !pairs.insert(Edge(p.front(), p.back())).second) return false;
  }
  if (k5) return true;  // ten distinct pairs among five centers
  for (const Edge& e : pairs) {
    const auto side = [&](Vertex v) { return std::find(w.centers.begin(), w.centers.end(), v) - w.centers.begin() < 3; };
    if (side(e.u) == side(e.v)) return false;
  }
  return true;
}

bool is_face_triangle(const PlanarEmbedding& emb, Vertex a, Vertex b, Vertex c) {
  std::vector<Vertex> want{a, b, c};
  std::sort(want.begin(), want.end());
  for (const auto& f : emb.faces) {
    if (f.size() != 3) continue;
    std::vector<Vertex> got = f;
    std::sort(got.begin(), got.end());
    if (got == want) return true;
  }
  return false;
}

}  // namespace tricompact

namespace tricompact {

namespace {

std::vector<Vertex> reversed(std::vector<Vertex> p) {
  std::reverse(p.begin(), p.end());
  return p;
}

// Sub-walk of path p from index i to index j inclusive, in that direction.
std::vector<Vertex> slice(const std::vector<Vertex>& p, std::size_t i, std::size_t j) {
  std::vector<Vertex> out;
  if (i <= j)
    for (std::size_t k = i; k <= j; ++k) out.push_back(p[k]);
  else
    for (std::size_t k = i + 1; k-- > j;) out.push_back(p[k]);
  return out;
}

std::vector<Vertex> concat(std::vector<Vertex> a, const std::vector<Vertex>& b) {
  a.insert(a.end(), b.begin() + 1, b.end());
  return a;
}

KuratowskiWitness k33(std::array<Vertex, 3> left, std::array<Vertex, 3> right,
                      const std::function<std::vector<Vertex>(Vertex, Vertex)>& link) {
  KuratowskiWitness w;
  w.kind = KuratowskiWitness::Kind::K33;
  w.centers = {left[0], left[1], left[2], right[0], right[1], right[2]};
  for (Vertex a : left)
    for (Vertex b : right) w.paths.push_back(link(a, b));
  return w;
}

}  // namespace

std::optional<KuratowskiWitness> find_k33(const Graph& g) {
  auto result = planarity(g);
  auto* found = std::get_if<KuratowskiWitness>(&result);
  if (!found) return std::nullopt;
  if (found->kind == KuratowskiWitness::Kind::K33) return *found;
  const KuratowskiWitness k5 = *found;
  std::set<Vertex> on_k5(k5.centers.begin(), k5.centers.end());
  for (const auto& p : k5.paths) on_k5.insert(p.begin(), p.end());

  // Path of the K5 subdivision between two centres, oriented a -> b.
  auto k5_path = [&](Vertex a, Vertex b) {
    for (const auto& p : k5.paths) {
      if (p.front() == a && p.back() == b) return p;
      if (p.front() == b && p.back() == a) return reversed(p);
    }
    return std::vector<Vertex>{};
  };

  const auto subdivided = std::find_if(k5.paths.begin(), k5.paths.end(), [](const auto& p) { return p.size() > 2; });
  if (subdivided == k5.paths.end()) {
    // Every branch path is an edge; fan from an outside vertex to three centres.
    Vertex outside = kNoVertex;
    for (Vertex v : g.vertices())
      if (!on_k5.count(v)) {
        outside = v;
        break;
      }
    if (outside == kNoVertex) return std::nullopt;
    Graph aug = g;
    const Vertex hub = aug.add_vertex();
    for (Vertex c : k5.centers) aug.add_edge(hub, c);
    PathSet fan = count_disjoint_paths(aug, outside, hub, 3);
    if (fan.count() < 3) return std::nullopt;
    std::map<Vertex, std::vector<Vertex>> arm;  // centre -> path from outside
    for (auto p : fan.paths) {
      p.pop_back();
      const auto hit = std::find_if(p.begin(), p.end(), [&](Vertex v) { return on_k5.count(v) > 0; });
      p.erase(hit + 1, p.end());
      arm[p.back()] = p;
    }
    std::array<Vertex, 3> right;
    std::vector<Vertex> rest;
    int k = 0;
    for (const auto& [c, p] : arm) right[k++] = c;
    for (Vertex c : k5.centers)
      if (!arm.count(c)) rest.push_back(c);
    return k33({outside, rest[0], rest[1]}, right, [&](Vertex a, Vertex b) {
      return a == outside ? arm[b] : k5_path(a, b);
    });
  }

  const std::vector<Vertex>& split = *subdivided;
  const Vertex a = split.front(), b = split.back();
  std::map<Vertex, std::size_t> index_on_split;
  for (std::size_t i = 1; i + 1 < split.size(); ++i) index_on_split[split[i]] = i;
  // Shortest bridge from the interior of the split path to the rest of the
  // subdivision, avoiding its ends.
  std::vector<Vertex> parent(g.id_bound(), kNoVertex);
  std::vector<Vertex> queue;
  for (const auto& [v, i] : index_on_split) {
    parent[v] = v;
    queue.push_back(v);
  }
  Vertex landing = kNoVertex, from = kNoVertex;
  for (std::size_t qi = 0; qi < queue.size() && landing == kNoVertex; ++qi) {
    const Vertex x = queue[qi];
    for (Vertex y : g.neighbors(x)) {
      if (y == a || y == b || parent[y] != kNoVertex) continue;
      if (on_k5.count(y)) {
        if (index_on_split.count(y)) continue;
        // Skip the path's own edges.
        landing = y;
        from = x;
        break;
      }
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (landing == kNoVertex) return std::nullopt;
  std::vector<Vertex> bridge{landing, from};
  while (parent[bridge.back()] != bridge.back()) bridge.push_back(parent[bridge.back()]);
  std::reverse(bridge.begin(), bridge.end());  // p ... q
  const Vertex p = bridge.front();
  const std::size_t pi = index_on_split[p];
  const std::vector<Vertex> p_to_a = slice(split, pi, 0), p_to_b = slice(split, pi, split.size() - 1);

  std::vector<Vertex> others;
  for (Vertex c : k5.centers)
    if (c != a && c != b) others.push_back(c);

  if (std::find(others.begin(), others.end(), landing) != others.end()) {
    // Landed on a centre c: sides {a, b, c} and {p, d, e}.
    const Vertex c = landing;
    std::vector<Vertex> de;
    for (Vertex x : others)
      if (x != c) de.push_back(x);
    return k33({a, b, c}, {p, de[0], de[1]}, [&](Vertex x, Vertex y) {
      if (y != p) return k5_path(x, y);
      if (x == a) return reversed(p_to_a);
      if (x == b) return reversed(p_to_b);
      return reversed(bridge);
    });
  }
  // Landed inside another branch path between c and d.
  const auto host = std::find_if(k5.paths.begin(), k5.paths.end(), [&](const auto& path) {
    return std::find(path.begin() + 1, path.end() - 1, landing) != path.end() - 1;
  });
  const std::vector<Vertex>& other = *host;
  const std::size_t qi =
      static_cast<std::size_t>(std::find(other.begin(), other.end(), landing) - other.begin());
  const Vertex c = other.front(), d = other.back();
  const std::vector<Vertex> q_to_c = slice(other, qi, 0), q_to_d = slice(other, qi, other.size() - 1);
  const bool shares = c == a || c == b || d == a || d == b;
  if (!shares) {
    // Sides {a, b, q} and {p, c, d}.
    return k33({a, b, landing}, {p, c, d}, [&](Vertex x, Vertex y) {
      if (x == landing) {
        if (y == p) return reversed(bridge);
        return y == c ? q_to_c : q_to_d;
      }
      if (y == p) return x == a ? reversed(p_to_a) : reversed(p_to_b);
      return k5_path(x, y);
    });
  }
  // The two branch paths share a centre. Name them so the split path is
  // a-b and the landing path runs from a to c.
  const Vertex shared = (c == a || c == b) ? c : d;
  const Vertex far = shared == c ? d : c;
  const std::vector<Vertex>& q_to_far = far == c ? q_to_c : q_to_d;
  const Vertex near_end = shared == a ? b : a;  // other end of the split path
  const std::vector<Vertex>& p_to_shared = shared == a ? p_to_a : p_to_b;
  const std::vector<Vertex>& p_to_near = shared == a ? p_to_b : p_to_a;
  std::vector<Vertex> de;
  for (Vertex x : k5.centers)
    if (x != a && x != b && x != far) de.push_back(x);
  // Sides {shared, near_end, far} and {p, d, e}; far reaches p through q.
  return k33({shared, near_end, far}, {p, de[0], de[1]}, [&](Vertex x, Vertex y) {
    if (y != p) return k5_path(x, y);
    if (x == shared) return reversed(p_to_shared);
    if (x == near_end) return reversed(p_to_near);
    return concat(reversed(q_to_far), reversed(bridge));
  });
}

}  // namespace tricompact
