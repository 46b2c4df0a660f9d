#include "tricompact/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "tricompact/connectivity.hpp"

namespace tricompact {

BlockTree block_tree(const Graph& g) {
  const int bound = g.id_bound();
  BlockTree out;
  out.blocks_of.resize(bound);
  std::vector<int> disc(bound, 0), low(bound, 0);
  std::vector<char> is_cut(bound, 0);
  std::vector<Edge> edge_stack;
  int time = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    int children;
  };
  auto emit_block = [&](Edge until) {
    std::vector<Edge> edges;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      edges.push_back(e);
      if (e == until) break;
    }
    std::vector<Vertex> vs;
    for (const Edge& e : edges) {
      vs.push_back(e.u);
      vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::sort(edges.begin(), edges.end());
    const int id = static_cast<int>(out.blocks.size());
    for (Vertex v : vs) out.blocks_of[v].push_back(id);
    out.blocks.push_back(std::move(vs));
    out.block_edges.push_back(std::move(edges));
  };

  for (Vertex root : g.vertices()) {
    if (disc[root]) continue;
    if (g.degree(root) == 0) {
      disc[root] = ++time;
      out.blocks_of[root].push_back(static_cast<int>(out.blocks.size()));
      out.blocks.push_back({root});
      out.block_edges.emplace_back();
      continue;
    }
    std::vector<Frame> stack{{root, kNoVertex, 0, 0}};
    disc[root] = low[root] = ++time;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        const Vertex w = nb[f.next++];
        if (w == f.parent) continue;
        if (!disc[w]) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = ++time;
          ++f.children;
          stack.push_back({w, f.v, 0, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v, parent = f.parent;
      stack.pop_back();
      if (parent == kNoVertex) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        emit_block(Edge(parent, v));
        const bool parent_is_root = stack.back().parent == kNoVertex;
        if (!parent_is_root || stack.back().children > 1) is_cut[parent] = 1;
      }
    }
  }
  for (Vertex v = 0; v < bound; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

bool is_biconnected(const Graph& g) {
  if (g.num_vertices() < 3 || !is_connected(g)) return false;
  return block_tree(g).blocks.size() == 1;
}

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Cut: return "cut";
    case NodeKind::ThreeConnected: return "three_connected";
    case NodeKind::Cycle: return "cycle";
    case NodeKind::Triangle: return "triangle";
  }
  return "?";
}

int CutTree::num_graph_nodes() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(),
                                        [](const TreeNode& n) { return n.is_graph_node(); }));
}

std::vector<Edge> CutTree::cut_pairs() const {
  std::vector<Edge> out;
  for (const auto& n : nodes)
    if (!n.is_graph_node()) out.emplace_back(n.vertices[0], n.vertices[1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> CutTree::leaves() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    if (nodes[i].is_graph_node() && nodes[i].degree() == 1) out.push_back(i);
  return out;
}

bool CutTree::is_tree() const {
  if (nodes.empty()) return false;
  std::size_t arcs = 0;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    for (int j : nodes[i].neighbors) {
      if (j < 0 || j >= static_cast<int>(nodes.size()) || j == i) return false;
      if (nodes[i].is_graph_node() == nodes[j].is_graph_node()) return false;
      const auto& back = nodes[j].neighbors;
      if (!std::binary_search(back.begin(), back.end(), i)) return false;
      ++arcs;
    }
  if (arcs != 2 * (nodes.size() - 1)) return false;
  std::vector<char> seen(nodes.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : nodes[x].neighbors)
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  return count == nodes.size();
}

namespace {

std::string describe_graph_node(const TreeNode& n) {
  std::string s = to_string(n.kind);
  s += ':';
  for (const Edge& e : n.edges) s += std::to_string(e.u) + '-' + std::to_string(e.v) + ',';
  return s;
}

std::vector<Vertex> endpoints(const std::vector<Edge>& edges) {
  std::vector<Vertex> vs;
  for (const Edge& e : edges) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Cyclic order starting at the smallest vertex, heading to its smaller neighbour.
std::vector<Vertex> cycle_order(const std::vector<Edge>& edges) {
  std::map<Vertex, std::vector<Vertex>> nb;
  for (const Edge& e : edges) {
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  std::vector<Vertex> order;
  if (nb.empty()) return order;
  const Vertex first = nb.begin()->first;
  auto& fn = nb[first];
  Vertex prev = first;
  Vertex cur = std::min(fn[0], fn[1]);
  order.push_back(first);
  while (cur != first) {
    order.push_back(cur);
    const auto& cn = nb[cur];
    Vertex next = cn[0] == prev ? cn[1] : cn[0];
    prev = cur;
    cur = next;
  }
  return order;
}

TreeNode make_graph_node(NodeKind kind, std::vector<Edge> edges, const Graph& host) {
  TreeNode n;
  n.kind = kind;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  n.vertices = endpoints(edges);
  for (const Edge& e : edges)
    if (!host.has_edge(e.u, e.v)) n.virtual_edges.push_back(e);
  if (kind == NodeKind::Cycle || kind == NodeKind::Triangle) n.cycle = cycle_order(edges);
  n.edges = std::move(edges);
  return n;
}

TreeNode make_cut_node(Vertex x, Vertex y, bool chord = false) {
  TreeNode n;
  n.kind = NodeKind::Cut;
  n.vertices = {std::min(x, y), std::max(x, y)};
  n.chord = chord;
  return n;
}

void link(std::vector<TreeNode>& nodes, int a, int b) {
  nodes[a].neighbors.push_back(b);
  nodes[b].neighbors.push_back(a);
}

void finish(CutTree& t) {
  for (auto& n : t.nodes) {
    std::sort(n.neighbors.begin(), n.neighbors.end());
    n.neighbors.erase(std::unique(n.neighbors.begin(), n.neighbors.end()), n.neighbors.end());
  }
}

void require_2connected(const Graph& g) {
  if (g.num_vertices() < 3 || !is_biconnected(g))
    throw Error(ErrorKind::Not2Connected, "strong 2-cut tree needs a 2-connected graph on >= 3 vertices");
}

}  // namespace

std::vector<std::string> CutTree::signature() const {
  std::vector<std::string> out;
  for (const auto& n : nodes) {
    if (n.is_graph_node()) {
      out.push_back(describe_graph_node(n));
      continue;
    }
    std::vector<std::string> around;
    for (int j : n.neighbors) around.push_back(describe_graph_node(nodes[j]));
    std::sort(around.begin(), around.end());
    std::string s = "cut:" + std::to_string(n.vertices[0]) + '-' + std::to_string(n.vertices[1]) + '|';
    for (const auto& a : around) s += a + '|';
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Strong2CutTree strong_2cut_tree(const Graph& g) {
  require_2connected(g);
  const SplitComponents sc = triconnected_components(g);
  Strong2CutTree t;
  const int k = static_cast<int>(sc.components.size());
  std::vector<int> node_of(k, -1);
  for (int i = 0; i < k; ++i) {
    const auto& c = sc.components[i];
    if (c.kind == SplitKind::Bond) {
      const Edge& e = sc.edge_ends[c.edges[0]];
      node_of[i] = static_cast<int>(t.nodes.size());
      t.nodes.push_back(make_cut_node(e.u, e.v));
      continue;
    }
    std::vector<Edge> edges;
    for (int e : c.edges) edges.push_back(sc.edge_ends[e]);
    node_of[i] = static_cast<int>(t.nodes.size());
    t.nodes.push_back(make_graph_node(
        c.kind == SplitKind::Polygon ? NodeKind::Cycle : NodeKind::ThreeConnected, std::move(edges), g));
  }
  std::vector<std::array<int, 2>> owners(sc.edge_ends.size(), {-1, -1});
  for (int i = 0; i < k; ++i)
    for (int e : sc.components[i].edges) (owners[e][0] < 0 ? owners[e][0] : owners[e][1]) = i;
  for (std::size_t e = sc.num_real; e < sc.edge_ends.size(); ++e) {
    const int a = owners[e][0], b = owners[e][1];
    if (a < 0 || b < 0) continue;
    const bool bond_a = sc.components[a].kind == SplitKind::Bond;
    const bool bond_b = sc.components[b].kind == SplitKind::Bond;
    if (bond_a != bond_b) {
      link(t.nodes, node_of[a], node_of[b]);
    } else {
      const int cut = static_cast<int>(t.nodes.size());
      t.nodes.push_back(make_cut_node(sc.edge_ends[e].u, sc.edge_ends[e].v));
      link(t.nodes, cut, node_of[a]);
      link(t.nodes, cut, node_of[b]);
    }
  }
  finish(t);
  return t;
}

Strong2CutTree strong_2cut_tree_by_splitting(const Graph& g, std::uint64_t seed) {
  require_2connected(g);
  std::mt19937_64 rng(seed);

  std::function<std::vector<TreeNode>(const Graph&)> build = [&](const Graph& j) {
    std::vector<Edge> strong;
    const auto vs = j.vertices();
    VertexFlow flow(j);
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        Graph rest = j;
        rest.remove_vertex(vs[a]);
        rest.remove_vertex(vs[b]);
        if (!is_connected(rest) && flow.count(vs[a], vs[b], 3) >= 3) strong.emplace_back(vs[a], vs[b]);
      }
    std::vector<TreeNode> nodes;
    if (strong.empty()) {
      const bool cycle = j.num_edges() == j.num_vertices();
      nodes.push_back(make_graph_node(cycle ? NodeKind::Cycle : NodeKind::ThreeConnected, j.edges(), g));
      return nodes;
    }
    const Edge pick = strong[std::uniform_int_distribution<std::size_t>(0, strong.size() - 1)(rng)];
    Graph rest = j;
    rest.remove_vertex(pick.u);
    rest.remove_vertex(pick.v);
    std::vector<int> comp(j.id_bound(), -1);
    int count = 0;
    for (Vertex s : rest.vertices()) {
      if (comp[s] >= 0) continue;
      std::vector<Vertex> stack{s};
      comp[s] = count;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : rest.neighbors(x))
          if (comp[y] < 0) {
            comp[y] = count;
            stack.push_back(y);
          }
      }
      ++count;
    }
    nodes.push_back(make_cut_node(pick.u, pick.v));
    for (int c = 0; c < count; ++c) {
      std::vector<Vertex> keep{pick.u, pick.v};
      for (Vertex v : rest.vertices())
        if (comp[v] == c) keep.push_back(v);
      Graph part = induced_subgraph(j, keep);
      part.add_edge(pick.u, pick.v);
      auto sub = build(part);
      const int offset = static_cast<int>(nodes.size());
      int same_cut = -1, holder = -1;
      for (int i = 0; i < static_cast<int>(sub.size()); ++i) {
        for (int& nbh : sub[i].neighbors) nbh += offset;
        if (!sub[i].is_graph_node() && sub[i].vertices[0] == pick.u && sub[i].vertices[1] == pick.v)
          same_cut = i;
        if (sub[i].is_graph_node() && std::binary_search(sub[i].edges.begin(), sub[i].edges.end(), pick))
          holder = i;
      }
      for (auto& n : sub) nodes.push_back(std::move(n));
      if (same_cut >= 0) {
        // Fold the part's copy of this cut into ours.
        const int dup = offset + same_cut;
        for (int nbh : nodes[dup].neighbors) {
          auto& back = nodes[nbh].neighbors;
          std::replace(back.begin(), back.end(), dup, 0);
          nodes[0].neighbors.push_back(nbh);
        }
        nodes[dup].neighbors.clear();
        nodes[dup].vertices.clear();  // tombstone
      } else {
        link(nodes, 0, offset + holder);
      }
    }
    // Drop tombstones.
    std::vector<int> remap(nodes.size(), -1);
    std::vector<TreeNode> kept;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (!nodes[i].vertices.empty()) {
        remap[i] = static_cast<int>(kept.size());
        kept.push_back(std::move(nodes[i]));
      }
    for (auto& n : kept)
      for (int& nbh : n.neighbors) nbh = remap[nbh];
    return kept;
  };

  Strong2CutTree t;
  t.nodes = build(g);
  finish(t);
  return t;
}

Special2CutTree special_2cut_tree(const Strong2CutTree& t) {
  Special2CutTree out;
  const int k = static_cast<int>(t.nodes.size());
  std::vector<int> remap(k, -1);
  // For a triangulated cycle: cycle edge -> triangle node holding it.
  std::vector<std::map<Edge, int>> holder(k);

  auto add = [&](TreeNode n) {
    out.nodes.push_back(std::move(n));
    return static_cast<int>(out.nodes.size()) - 1;
  };

  for (int i = 0; i < k; ++i) {
    const TreeNode& n = t.nodes[i];
    if (n.kind != NodeKind::Cycle) {
      TreeNode copy = n;
      copy.neighbors.clear();
      remap[i] = add(std::move(copy));
      continue;
    }
    const auto& c = n.cycle;
    const int len = static_cast<int>(c.size());
    std::set<Edge> is_virtual(n.virtual_edges.begin(), n.virtual_edges.end());
    std::vector<Triangle> triangles;
    std::vector<Vertex> interior;
    if (len >= 6) {
      for (int a = 0; a + 2 <= len; a += 2) {
        const Vertex last = a + 2 < len ? c[a + 2] : c[0];
        triangles.push_back({c[a], c[a + 1], last});
        interior.push_back(c[a]);
      }
      if (len % 2 == 1) interior.push_back(c[len - 1]);
    } else {
      interior = c;
    }
    if (interior.size() >= 3) {
      // Fan from the lowest id vertex of the remaining cycle.
      const auto low = std::min_element(interior.begin(), interior.end()) - interior.begin();
      std::rotate(interior.begin(), interior.begin() + low, interior.end());
      for (std::size_t j = 1; j + 1 < interior.size(); ++j)
        triangles.push_back({interior[0], interior[j], interior[j + 1]});
    }
    std::set<Edge> cycle_edges;
    for (int j = 0; j < len; ++j) cycle_edges.insert(Edge(c[j], c[(j + 1) % len]));
    std::map<Edge, std::vector<int>> chord_sides;
    for (const Triangle& tri : triangles) {
      std::vector<Edge> edges{Edge(tri[0], tri[1]), Edge(tri[1], tri[2]), Edge(tri[0], tri[2])};
      TreeNode node;
      node.kind = NodeKind::Triangle;
      std::sort(edges.begin(), edges.end());
      node.vertices = endpoints(edges);
      for (const Edge& e : edges)
        if (!cycle_edges.count(e) || is_virtual.count(e)) node.virtual_edges.push_back(e);
      node.cycle = cycle_order(edges);
      node.edges = edges;
      const int id = add(std::move(node));
      for (const Edge& e : edges) {
        if (cycle_edges.count(e)) holder[i][e] = id;
        else chord_sides[e].push_back(id);
      }
    }
    for (const auto& [chord, sides] : chord_sides) {
      const int cut = add(make_cut_node(chord.u, chord.v, true));
      for (int s : sides) link(out.nodes, cut, s);
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j : t.nodes[i].neighbors) {
      if (j < i) continue;
      auto resolve = [&](int node, int other) {
        if (t.nodes[node].kind != NodeKind::Cycle) return remap[node];
        const auto& pair = t.nodes[other].vertices;
        return holder[node].at(Edge(pair[0], pair[1]));
      };
      link(out.nodes, resolve(i, j), resolve(j, i));
    }
  finish(out);
  return out;
}

TreeHarvest harvest_leaves(const CutTree& t) {
  TreeHarvest h;
  h.kind = HarvestKind::Leaves;
  for (int i : t.leaves()) {
    const TreeNode& n = t.nodes[i];
    Leaf leaf;
    leaf.node = i;
    leaf.cut = n.neighbors[0];
    const auto& pair = t.nodes[leaf.cut].vertices;
    for (Vertex v : n.vertices)
      if (v != pair[0] && v != pair[1]) leaf.interior.push_back(v);
    h.leaves.push_back(std::move(leaf));
  }
  return h;
}

TreeHarvest harvest_degree2_paths(const Strong2CutTree& t, const DecompositionConfig& cfg) {
  TreeHarvest h;
  h.kind = HarvestKind::Degree2Paths;
  const int k = static_cast<int>(t.nodes.size());
  std::vector<char> usable(k, 0);
  for (int i = 0; i < k; ++i) {
    const auto& n = t.nodes[i];
    const bool long_cycle = n.kind == NodeKind::Cycle && n.vertices.size() >= 6;
    usable[i] = !long_cycle && n.degree() == 2;
  }
  std::vector<char> done(k, 0);
  auto usable_neighbors = [&](int i) {
    std::vector<int> out;
    for (int j : t.nodes[i].neighbors)
      if (usable[j]) out.push_back(j);
    return out;
  };
  for (int s = 0; s < k; ++s) {
    if (!usable[s] || done[s] || usable_neighbors(s).size() == 2) continue;
    // s is the end of a maximal run.
    std::vector<int> run{s};
    done[s] = 1;
    for (int prev = -1, cur = s;;) {
      int next = -1;
      for (int j : usable_neighbors(cur))
        if (j != prev && !done[j]) next = j;
      if (next < 0) break;
      done[next] = 1;
      run.push_back(next);
      prev = cur;
      cur = next;
    }
    const int block = cfg.path_block;
    for (std::size_t b = 0; b + block <= run.size(); b += block) {
      const std::size_t first = t.nodes[run[b]].is_graph_node() ? b + 1 : b;
      h.paths.emplace_back(run.begin() + first, run.begin() + first + cfg.path_nodes);
    }
  }
  return h;
}

bool conflicts_in_tree(const Strong2CutTree& t, Vertex a, Vertex b) {
  for (const auto& n : t.nodes) {
    const bool relevant = n.kind == NodeKind::Cut || (n.kind == NodeKind::Cycle && n.vertices.size() >= 4);
    if (!relevant) continue;
    if (std::binary_search(n.vertices.begin(), n.vertices.end(), a) &&
        std::binary_search(n.vertices.begin(), n.vertices.end(), b))
      return true;
  }
  return false;
}

TreeHarvest harvest_independent(const Strong2CutTree& t, std::span<const Vertex> candidates,
                                const DecompositionConfig& cfg) {
  (void)cfg;
  TreeHarvest h;
  h.kind = HarvestKind::IndependentNodes;
  if (candidates.empty()) return h;
  const int k = static_cast<int>(t.nodes.size());
  auto busy_rigid = [&](int i) {
    return t.nodes[i].kind == NodeKind::ThreeConnected && t.nodes[i].degree() > 2;
  };
  std::vector<char> dropped(k, 0);
  std::set<Vertex> excluded;
  for (int i = 0; i < k; ++i) {
    const auto& n = t.nodes[i];
    bool drop = false;
    if (n.kind == NodeKind::Cycle && n.vertices.size() >= 6) drop = true;
    if (n.kind == NodeKind::Cut) {
      if (n.degree() >= 3) drop = true;
      for (int j : n.neighbors)
        if (busy_rigid(j)) drop = true;
    }
    if (drop) {
      dropped[i] = 1;
      excluded.insert(n.vertices.begin(), n.vertices.end());
    }
  }
  std::vector<Vertex> pool;
  for (Vertex v : candidates)
    if (!excluded.count(v)) pool.push_back(v);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  // Conflicts come from the surviving cut nodes and short cycle nodes.
  std::map<Vertex, std::set<Vertex>> conflict;
  for (Vertex v : pool) conflict[v];
  for (int i = 0; i < k; ++i) {
    const auto& n = t.nodes[i];
    if (dropped[i]) continue;
    if (!(n.kind == NodeKind::Cut || (n.kind == NodeKind::Cycle && n.vertices.size() >= 4))) continue;
    std::vector<Vertex> inside;
    for (Vertex v : n.vertices)
      if (conflict.count(v)) inside.push_back(v);
    for (Vertex a : inside)
      for (Vertex b : inside)
        if (a != b) conflict[a].insert(b);
  }
  // Smallest-last order, then greedy colouring.
  std::map<Vertex, int> remaining;
  for (const auto& [v, nb] : conflict) remaining[v] = static_cast<int>(nb.size());
  std::vector<Vertex> order;
  std::set<std::pair<int, Vertex>> queue;
  for (const auto& [v, d] : remaining) queue.insert({d, v});
  std::set<Vertex> removed;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    order.push_back(v);
    removed.insert(v);
    for (Vertex w : conflict[v]) {
      if (removed.count(w)) continue;
      queue.erase({remaining[w], w});
      queue.insert({--remaining[w], w});
    }
  }
  std::reverse(order.begin(), order.end());
  std::map<Vertex, int> colour;
  int colours = 0;
  for (Vertex v : order) {
    std::set<int> taken;
    for (Vertex w : conflict[v])
      if (colour.count(w)) taken.insert(colour[w]);
    int c = 0;
    while (taken.count(c)) ++c;
    colour[v] = c;
    colours = std::max(colours, c + 1);
  }
  std::vector<int> size(colours, 0);
  for (const auto& [v, c] : colour) ++size[c];
  const int best = colours == 0 ? 0 : static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
  for (const auto& [v, c] : colour)
    if (c == best) h.independent.push_back(v);
  return h;
}

}  // namespace tricompact
