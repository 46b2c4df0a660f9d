#include "tricompact/generators.hpp"

#include <algorithm>
#include <map>
#include <variant>

#include "tricompact/planarity.hpp"

namespace tricompact::gen {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool add_random_nonedge(Graph& g, Rng& rng) {
  const int n = g.id_bound();
  if (g.num_edges() >= static_cast<long>(n) * (n - 1) / 2) return false;
  while (true) {
    const Vertex u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 1);
    if (u != v && g.add_edge(u, v)) return true;
  }
}

}  // namespace

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph wheel(int rim) {
  Graph g(rim + 1);
  for (int i = 1; i <= rim; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i == rim ? 1 : i + 1);
  }
  return g;
}

Graph prism() {
  const Edge e[] = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  return Graph::from_edges(6, e);
}

Graph octahedron() {
  Graph g = complete(6);
  g.remove_edge(0, 1);
  g.remove_edge(2, 3);
  g.remove_edge(4, 5);
  return g;
}

Graph gnp(int n, double p, Rng& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

Graph gnm(int n, int m, Rng& rng) {
  Graph g(n);
  for (int i = 0; i < m && add_random_nonedge(g, rng); ++i) {
  }
  return g;
}

Graph random_3connected(int n, int extra_edges, Rng& rng) {
  Graph g = complete(4);
  while (g.num_vertices() < n) {
    std::vector<Vertex> big;
    for (Vertex v : g.vertices())
      if (g.degree(v) >= 4) big.push_back(v);
    if (big.empty()) {
      // Attach a fresh vertex to three existing ones.
      std::vector<Vertex> old = g.vertices();
      std::shuffle(old.begin(), old.end(), rng);
      const Vertex w = g.add_vertex();
      for (int i = 0; i < 3; ++i) g.add_edge(w, old[i]);
      continue;
    }
    const Vertex v = big[uniform(rng, 0, static_cast<int>(big.size()) - 1)];
    std::vector<Vertex> nb = g.neighbors(v);
    std::shuffle(nb.begin(), nb.end(), rng);
    const int keep = uniform(rng, 2, static_cast<int>(nb.size()) - 2);
    const Vertex w = g.add_vertex();
    for (std::size_t i = keep; i < nb.size(); ++i) {
      g.remove_edge(v, nb[i]);
      g.add_edge(w, nb[i]);
    }
    g.add_edge(v, w);
  }
  for (int i = 0; i < extra_edges && add_random_nonedge(g, rng); ++i) {
  }
  return g;
}

Graph triangulation(int n, int flips, Rng& rng) {
  Graph g = complete(std::min(n, 4));
  if (n <= 4) return g;
  std::vector<Triangle> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::map<Edge, std::vector<int>> sides;
  auto index_face = [&](int f) {
    const Triangle& t = faces[f];
    sides[Edge(t[0], t[1])].push_back(f);
    sides[Edge(t[1], t[2])].push_back(f);
    sides[Edge(t[0], t[2])].push_back(f);
  };
  auto unindex_face = [&](int f) {
    const Triangle& t = faces[f];
    for (Edge e : {Edge(t[0], t[1]), Edge(t[1], t[2]), Edge(t[0], t[2])}) {
      auto& list = sides[e];
      list.erase(std::find(list.begin(), list.end(), f));
      if (list.empty()) sides.erase(e);
    }
  };
  for (int f = 0; f < 4; ++f) index_face(f);
  while (g.num_vertices() < n) {
    const int f = uniform(rng, 0, static_cast<int>(faces.size()) - 1);
    const Triangle t = faces[f];
    const Vertex v = g.add_vertex();
    for (Vertex x : t) g.add_edge(v, x);
    unindex_face(f);
    faces[f] = {t[0], t[1], v};
    index_face(f);
    faces.push_back({t[1], t[2], v});
    index_face(static_cast<int>(faces.size()) - 1);
    faces.push_back({t[0], t[2], v});
    index_face(static_cast<int>(faces.size()) - 1);
  }
  for (int i = 0; i < flips; ++i) {
    const int f = uniform(rng, 0, static_cast<int>(faces.size()) - 1);
    const int k = uniform(rng, 0, 2);
    const Triangle t = faces[f];
    const Vertex a = t[k], b = t[(k + 1) % 3], c = t[(k + 2) % 3];
    const auto& list = sides[Edge(a, b)];
    const int other = list[0] == f ? list[1] : list[0];
    const Triangle& o = faces[other];
    const Vertex d = o[0] != a && o[0] != b ? o[0] : (o[1] != a && o[1] != b ? o[1] : o[2]);
    if (g.has_edge(c, d) || g.degree(a) <= 3 || g.degree(b) <= 3) continue;
    unindex_face(f);
    unindex_face(other);
    g.remove_edge(a, b);
    g.add_edge(c, d);
    faces[f] = {a, c, d};
    faces[other] = {b, c, d};
    index_face(f);
    index_face(other);
  }
  return g;
}

Graph dense_3connected(int n, double avg_degree, Rng& rng) {
  Graph g = wheel(n - 1);
  while (2.0 * g.num_edges() <= avg_degree * n && add_random_nonedge(g, rng)) {
  }
  return g;
}

Graph bipartite_triangles(int k) {
  // Hubs 0..2; triangle i uses 3 + 3i .. 5 + 3i, corner j attached to hub j.
  Graph g(3 + 3 * k);
  for (int i = 0; i < k; ++i) {
    const Vertex base = 3 + 3 * i;
    g.add_edge(base, base + 1);
    g.add_edge(base + 1, base + 2);
    g.add_edge(base, base + 2);
    for (int j = 0; j < 3; ++j) g.add_edge(j, base + j);
  }
  return g;
}

Graph truncate(const Graph& g, const std::vector<Vertex>& degree3) {
  Graph h = g;
  for (Vertex v : degree3) {
    if (!h.has_vertex(v) || h.degree(v) != 3) throw Error(ErrorKind::InvalidPayload, "truncate needs degree-3 vertices");
    const auto nb = h.neighbors(v);
    h.remove_vertex(v);
    Vertex corner[3];
    for (int i = 0; i < 3; ++i) {
      corner[i] = h.add_vertex();
      h.add_edge(corner[i], nb[i]);
    }
    h.add_edge(corner[0], corner[1]);
    h.add_edge(corner[1], corner[2]);
    h.add_edge(corner[0], corner[2]);
  }
  return h;
}

Graph degree3_attachment(int core_n, int k, Rng& rng) {
  Graph g = triangulation(core_n, core_n, rng);
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> pick;
    while (pick.size() < 3) {
      const Vertex x = uniform(rng, 0, core_n - 1);
      if (std::find(pick.begin(), pick.end(), x) == pick.end()) pick.push_back(x);
    }
    const Vertex v = g.add_vertex();
    for (Vertex x : pick) g.add_edge(v, x);
  }
  return g;
}

Graph triangle_star(int leaves) {
  Graph g = complete(4);
  const auto core = g.edges();
  for (int i = 0; i < leaves; ++i) {
    const Edge e = core[i % core.size()];
    const Vertex z = g.add_vertex();
    g.add_edge(z, e.u);
    g.add_edge(z, e.v);
  }
  return g;
}

Graph k4_chain(int links) {
  // Pair i is {2i, 2i+1}; a K4 joins consecutive pairs.
  Graph g(2 * (links + 1));
  for (int i = 0; i < links; ++i)
    for (Vertex a = 2 * i; a < 2 * i + 4; ++a)
      for (Vertex b = a + 1; b < 2 * i + 4; ++b) g.add_edge(a, b);
  return g;
}

RootedGraph separated_terminals(int core_n, int gadgets, int gadget_max, Rng& rng) {
  Graph t = triangulation(std::max(core_n, 6), core_n, rng);
  const auto emb = std::get<PlanarEmbedding>(planarity(t));
  Vertex hole = kNoVertex;
  for (Vertex v : t.vertices())
    if (t.degree(v) >= 4 && (hole == kNoVertex || uniform(rng, 0, 2) == 0)) hole = v;
  const auto& ring = emb.rotation[hole];
  std::vector<int> pick;
  while (pick.size() < 4) {
    const int i = uniform(rng, 0, static_cast<int>(ring.size()) - 1);
    if (std::find(pick.begin(), pick.end(), i) == pick.end()) pick.push_back(i);
  }
  std::sort(pick.begin(), pick.end());
  RootedGraph out{t, ring[pick[0]], ring[pick[2]], ring[pick[1]], ring[pick[3]]};
  out.graph.remove_vertex(hole);

  std::vector<Triangle> faces;
  for (const auto& f : emb.faces)
    if (std::find(f.begin(), f.end(), hole) == f.end()) faces.push_back({f[0], f[1], f[2]});
  Graph& g = out.graph;
  for (int k = 0; k < gadgets; ++k) {
    const Triangle face = faces[uniform(rng, 0, static_cast<int>(faces.size()) - 1)];
    const int size = uniform(rng, 1, gadget_max);
    std::vector<Vertex> fresh;
    for (int i = 0; i < size; ++i) fresh.push_back(g.add_vertex());
    for (int i = 1; i < size; ++i) g.add_edge(fresh[i], fresh[uniform(rng, 0, i - 1)]);
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j)
        if (uniform(rng, 0, 2) == 0) g.add_edge(fresh[i], fresh[j]);
    for (Vertex x : face) g.add_edge(x, fresh[uniform(rng, 0, size - 1)]);
    for (Vertex v : fresh)
      for (Vertex x : face)
        if (uniform(rng, 0, 3) == 0) g.add_edge(v, x);
    // A triangle inside the gadget can host a later one.
    for (Vertex v : fresh)
      for (Vertex a : g.neighbors(v))
        for (Vertex b : g.neighbors(v))
          if (a < b && g.has_edge(a, b) && uniform(rng, 0, 5) == 0) faces.push_back({v, a, b});
  }
  return out;
}

Graph by_name(const std::string& family, int n, Rng& rng) {
  if (family == "path") return path(n);
  if (family == "cycle") return cycle(n);
  if (family == "complete") return complete(n);
  if (family == "wheel") return wheel(n - 1);
  if (family == "triangulation") return triangulation(n, n, rng);
  if (family == "random3") return random_3connected(n, n / 2, rng);
  if (family == "dense") return dense_3connected(n, 41.0, rng);
  if (family == "bipartite_triangles") return bipartite_triangles(std::max(1, (n - 3) / 3));
  if (family == "attachment") return degree3_attachment(std::max(4, n / 4), n - std::max(4, n / 4), rng);
  throw Error(ErrorKind::ParseError, "unknown family: " + family);
}

}  // namespace tricompact::gen
