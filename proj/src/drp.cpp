#include "tricompact/drp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "tricompact/connectivity.hpp"
#include "tricompact/decomposition.hpp"

namespace tricompact {

namespace {

bool contains(std::span<const Vertex> set, Vertex v) { return std::find(set.begin(), set.end(), v) != set.end(); }

// Components of g after deleting `blocked`, each sorted, in order of their
// smallest vertex.
std::vector<std::vector<Vertex>> components_avoiding(const Graph& g, const std::vector<char>& blocked) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.id_bound(), 0);
  for (Vertex s : g.vertices()) {
    if (seen[s] || blocked[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex y : g.neighbors(comp[i]))
        if (!seen[y] && !blocked[y]) {
          seen[y] = 1;
          comp.push_back(y);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Vertex> attachments(const Graph& g, const std::vector<Vertex>& comp, const std::vector<char>& kept) {
  std::vector<Vertex> out;
  for (Vertex v : comp)
    for (Vertex y : g.neighbors(v))
      if (kept[y]) out.push_back(y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Path from x to y whose interior lies in `inside`.
std::vector<Vertex> path_through(const Graph& g, Vertex x, Vertex y, const std::vector<Vertex>& inside) {
  std::vector<char> allowed(g.id_bound(), 0);
  for (Vertex v : inside) allowed[v] = 1;
  std::vector<Vertex> parent(g.id_bound(), kNoVertex);
  std::vector<Vertex> queue{x};
  parent[x] = x;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex u = queue[i];
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] != kNoVertex) continue;
      if (w == y && u != x) {
        std::vector<Vertex> p{y, u};
        while (p.back() != x) p.push_back(parent[p.back()]);
        std::reverse(p.begin(), p.end());
        return p;
      }
      if (!allowed[w]) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  return {};
}

bool is_root(std::span<const Vertex> roots, Vertex v) { return contains(roots, v); }

Graph without_components(const Graph& f, const std::vector<Vertex>& separator,
                         const std::vector<std::vector<Vertex>>& comps) {
  Graph out = f;
  for (const auto& c : comps)
    for (Vertex v : c) out.remove_vertex(v);
  for (std::size_t i = 0; i < separator.size(); ++i)
    for (std::size_t j = i + 1; j < separator.size(); ++j) out.add_edge(separator[i], separator[j]);
  return out;
}

// Components of f - separator that avoid every root.
std::vector<std::vector<Vertex>> rootless_components(const Graph& f, const std::vector<Vertex>& separator,
                                                     std::span<const Vertex> roots) {
  std::vector<char> blocked(f.id_bound(), 0);
  for (Vertex x : separator) blocked[x] = 1;
  std::vector<std::vector<Vertex>> out;
  for (auto& c : components_avoiding(f, blocked))
    if (std::none_of(c.begin(), c.end(), [&](Vertex v) { return is_root(roots, v); })) out.push_back(std::move(c));
  return out;
}

}  // namespace

DrpInstance::DrpInstance(Graph g, Vertex a, Vertex b, Vertex c, Vertex d)
    : graph(std::move(g)), s1(a), t1(b), s2(c), t2(d) {
  const Vertex ts[] = {s1, t1, s2, t2};
  for (int i = 0; i < 4; ++i) {
    if (!graph.has_vertex(ts[i])) throw Error(ErrorKind::BadTerminals, "terminal is not a vertex");
    for (int j = 0; j < i; ++j)
      if (ts[i] == ts[j]) throw Error(ErrorKind::BadTerminals, "terminals must be distinct");
  }
}

AuxiliaryGraph build_auxiliary(const DrpInstance& inst) {
  AuxiliaryGraph aux;
  aux.graph = inst.graph;
  aux.hub = aux.graph.add_vertex();
  aux.roots = {aux.hub, inst.s1, inst.s2, inst.t1, inst.t2};
  for (Vertex t : {inst.s1, inst.s2, inst.t1, inst.t2}) aux.graph.add_edge(aux.hub, t);
  const Edge cycle[] = {{inst.s1, inst.s2}, {inst.s2, inst.t1}, {inst.t1, inst.t2}, {inst.t2, inst.s1}};
  for (const Edge& e : cycle)
    if (aux.graph.add_edge(e.u, e.v)) aux.added_cycle_edges.push_back(e);
  return aux;
}

RootGraph root_graph(const AuxiliaryGraph& aux) {
  const Graph& g = aux.graph;
  RootGraph out;
  out.roots = aux.roots;
  const BlockTree bt = block_tree(g);
  const std::vector<Vertex>& block = bt.blocks[bt.blocks_of[aux.hub].front()];
  const Graph b = induced_subgraph(g, block);
  const SplitComponents sc = triconnected_components(b);

  std::vector<Vertex> kept;
  for (const auto& comp : sc.components) {
    if (comp.kind != SplitKind::Rigid) continue;
    std::vector<Vertex> vs;
    for (int e : comp.edges) {
      vs.push_back(sc.edge_ends[e].u);
      vs.push_back(sc.edge_ends[e].v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (std::all_of(aux.roots.begin(), aux.roots.end(), [&](Vertex r) { return std::binary_search(vs.begin(), vs.end(), r); })) {
      kept = std::move(vs);
      for (int e : comp.edges) {
        if (!sc.is_virtual(e)) continue;
        const Edge ve = sc.edge_ends[e];
        if (!g.has_edge(ve.u, ve.v)) out.lifts[ve] = {};
      }
      break;
    }
  }
  if (kept.empty()) throw Error(ErrorKind::PreconditionViolation, "no rigid component holds the roots");

  out.graph = induced_subgraph(g, kept);
  for (const auto& [e, path] : out.lifts) out.graph.add_edge(e.u, e.v);

  std::vector<char> in_t(g.id_bound(), 0);
  for (Vertex v : kept) in_t[v] = 1;
  std::vector<char> blocked(b.id_bound(), 0);
  for (Vertex v : kept) blocked[v] = 1;
  for (const auto& comp : components_avoiding(b, blocked)) {
    const auto at = attachments(b, comp, in_t);
    if (at.size() != 2) continue;
    auto it = out.lifts.find(Edge(at[0], at[1]));
    if (it != out.lifts.end() && it->second.empty()) it->second = path_through(b, at[0], at[1], comp);
  }
  return out;
}

Reduction make_reduction(const Graph& host, std::span<const Vertex> roots, std::vector<Vertex> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<char> kept(host.id_bound(), 0);
  for (Vertex v : keep) {
    if (!host.has_vertex(v)) throw Error(ErrorKind::InvalidPayload, "kept vertex is not in the host");
    kept[v] = 1;
  }
  for (Vertex r : roots)
    if (!host.has_vertex(r) || !kept[r]) throw Error(ErrorKind::InvalidPayload, "reduction must keep every root");
  Reduction r;
  r.host = host;
  r.roots.assign(roots.begin(), roots.end());
  r.vertices = keep;
  r.graph = induced_subgraph(host, keep);
  for (auto& comp : components_avoiding(host, kept)) {
    const auto at = attachments(host, comp, kept);
    if (at.size() != 3) throw Error(ErrorKind::InvalidPayload, "cut-off component must attach to exactly three vertices");
    r.graph.add_edge(at[0], at[1]);
    r.graph.add_edge(at[1], at[2]);
    r.graph.add_edge(at[0], at[2]);
    r.cutoffs.push_back({Triangle{at[0], at[1], at[2]}, std::move(comp)});
  }
  return r;
}

std::optional<ReducibleCut> find_reducible_3cut(const Graph& f, std::span<const Vertex> roots) {
  const auto vs = f.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Graph rest = f;
      rest.remove_vertex(vs[i]);
      rest.remove_vertex(vs[j]);
      const auto cuts = block_tree(rest).cut_vertices;
      for (Vertex x : cuts) {
        if (x <= vs[j]) continue;
        const std::vector<Vertex> sep{vs[i], vs[j], x};
        auto comps = rootless_components(f, sep, roots);
        if (comps.empty()) continue;
        auto best = std::max_element(comps.begin(), comps.end(),
                                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
        return ReducibleCut{Triangle{vs[i], vs[j], x}, std::move(*best)};
      }
    }
  return std::nullopt;
}

Graph reduce(const Graph& f, const Triangle& separator, std::span<const Vertex> component) {
  return without_components(f, {separator.begin(), separator.end()},
                            {std::vector<Vertex>(component.begin(), component.end())});
}

Reduction irreducible_reduction(const Graph& host, std::span<const Vertex> roots) {
  Graph f = host;
  std::optional<VertexFlow> flow;
  for (Vertex v : host.vertices()) {
    if (is_root(roots, v) || !f.has_vertex(v)) continue;
    if (!flow) flow.emplace(f);
    const Vertex src[] = {v};
    auto sep = flow->separate(src, roots, false, true, 4, VertexFlow::CutSide::NearSink);
    if (sep.flow > 3) continue;
    auto comps = rootless_components(f, sep.cut, roots);
    if (comps.empty()) continue;
    f = without_components(f, sep.cut, comps);
    flow.reset();
  }
  return make_reduction(host, roots, f.vertices());
}

std::optional<Reduction> minimal_planar_reduction(const Graph& host, std::span<const Vertex> roots) {
  Graph f = host;
  while (!is_planar(f)) {
    const auto k33 = find_k33(f);
    if (!k33) return std::nullopt;
    VertexFlow flow(f);
    std::vector<Vertex> best_sep;
    std::vector<std::vector<Vertex>> best_comps;
    std::size_t best_removed = 0;
    for (int skip = 0; skip < 6; ++skip) {
      std::vector<Vertex> forced, sources;
      for (int i = 0; i < 6; ++i) {
        if (i == skip) continue;
        const Vertex c = k33->centers[i];
        (is_root(roots, c) ? forced : sources).push_back(c);
      }
      if (forced.size() > 3 || sources.empty()) continue;
      std::vector<Vertex> sinks;
      for (Vertex r : roots)
        if (!contains(forced, r)) sinks.push_back(r);
      const int budget = 3 - static_cast<int>(forced.size());
      auto sep = flow.separate(sources, sinks, true, true, budget + 1, VertexFlow::CutSide::NearSource, forced);
      if (sep.flow > budget) continue;
      std::vector<Vertex> cut = forced;
      cut.insert(cut.end(), sep.cut.begin(), sep.cut.end());
      if (cut.size() != 3) continue;
      auto comps = rootless_components(f, cut, roots);
      std::size_t removed = 0;
      for (const auto& c : comps) removed += c.size();
      if (removed == 0) continue;
      if (best_sep.empty() || removed < best_removed) {
        best_sep = cut;
        best_comps = std::move(comps);
        best_removed = removed;
      }
    }
    if (best_sep.empty()) return std::nullopt;
    f = without_components(f, best_sep, best_comps);
  }
  return make_reduction(host, roots, f.vertices());
}

const char* to_string(Strength s) {
  switch (s) {
    case Strength::None: return "none";
    case Strength::Strong: return "strong";
    case Strength::FerociouslyStrong: return "ferociously_strong";
    case Strength::Undecided: return "undecided";
  }
  return "?";
}

bool check_strong(const Reduction& r, const PlanarEmbedding& emb) {
  return std::all_of(r.cutoffs.begin(), r.cutoffs.end(), [&](const CutOff& c) {
    return is_face_triangle(emb, c.separator[0], c.separator[1], c.separator[2]);
  });
}

namespace {

// Bitmask search for a split of a component of at most 32 vertices.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> exhaustive_split(
    const Graph& host, const std::vector<Vertex>& comp, const Triangle& sep) {
  const int k = static_cast<int>(comp.size());
  if (k < 2) return std::nullopt;
  std::vector<std::uint32_t> nbr(k, 0);
  std::vector<std::uint8_t> sees(k, 0);
  for (int i = 0; i < k; ++i)
    for (Vertex y : host.neighbors(comp[i])) {
      const auto it = std::lower_bound(comp.begin(), comp.end(), y);
      if (it != comp.end() && *it == y) nbr[i] |= std::uint32_t{1} << (it - comp.begin());
      for (int s = 0; s < 3; ++s)
        if (y == sep[s]) sees[i] |= static_cast<std::uint8_t>(1 << s);
    }
  auto connected = [&](std::uint32_t set) {
    std::uint32_t reach = set & (~set + 1), frontier = reach;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= nbr[std::countr_zero(f)];
      next &= set & ~reach;
      reach |= next;
      frontier = next;
    }
    return reach == set;
  };
  auto sees_all = [&](std::uint32_t set) {
    std::uint8_t s = 0;
    for (; set; set &= set - 1) s |= sees[std::countr_zero(set)];
    return s == 7;
  };
  const std::uint32_t full = k == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
  for (std::uint32_t rest = 0; rest < (full >> 1); ++rest) {
    const std::uint32_t red = (rest << 1) | 1, yellow = full & ~red;
    if (!yellow || !sees_all(red) || !sees_all(yellow) || !connected(red) || !connected(yellow)) continue;
    std::pair<std::vector<Vertex>, std::vector<Vertex>> out;
    for (int i = 0; i < k; ++i) ((red >> i) & 1 ? out.first : out.second).push_back(comp[i]);
    return out;
  }
  return std::nullopt;
}

bool connected_within(const Graph& host, const std::vector<Vertex>& part) {
  if (part.empty()) return false;
  std::set<Vertex> inside(part.begin(), part.end()), seen{part.front()};
  std::vector<Vertex> stack{part.front()};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : host.neighbors(x))
      if (inside.count(y) && seen.insert(y).second) stack.push_back(y);
  }
  return seen.size() == inside.size();
}

bool sees_separator(const Graph& host, const std::vector<Vertex>& part, const Triangle& sep) {
  return std::all_of(sep.begin(), sep.end(), [&](Vertex x) {
    return std::any_of(part.begin(), part.end(), [&](Vertex v) { return host.has_edge(v, x); });
  });
}

// BFS prefixes from a few starting vertices; each prefix is connected.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> prefix_split(
    const Graph& host, const std::vector<Vertex>& comp, const Triangle& sep) {
  std::set<Vertex> inside(comp.begin(), comp.end());
  const std::size_t starts = std::min<std::size_t>(comp.size(), 24);
  for (std::size_t s = 0; s < starts; ++s) {
    std::vector<Vertex> order{comp[s * comp.size() / starts]};
    std::set<Vertex> seen{order[0]};
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Vertex y : host.neighbors(order[i]))
        if (inside.count(y) && seen.insert(y).second) order.push_back(y);
    // Grow the prefix; test splits where the prefix first sees the whole separator.
    for (std::size_t cut = 1; cut < order.size(); ++cut) {
      std::vector<Vertex> red(order.begin(), order.begin() + cut), yellow(order.begin() + cut, order.end());
      if (!sees_separator(host, red, sep)) continue;
      if (!sees_separator(host, yellow, sep)) break;
      if (connected_within(host, yellow)) {
        std::sort(red.begin(), red.end());
        std::sort(yellow.begin(), yellow.end());
        return std::make_pair(red, yellow);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

FerociousCheck check_ferociously_strong(const Reduction& r, const PlanarEmbedding& emb, int exhaustive_limit) {
  FerociousCheck out;
  std::map<Triangle, std::vector<const CutOff*>> by_separator;
  for (const auto& c : r.cutoffs) by_separator[c.separator].push_back(&c);
  auto fail = [&](FerociousCheck::Outcome o, const Triangle& t) {
    if (out.outcome == FerociousCheck::Outcome::True || o == FerociousCheck::Outcome::False) {
      if (out.outcome != FerociousCheck::Outcome::False) out.failed = t;
      out.outcome = o;
    }
  };
  for (const auto& [sep, cuts] : by_separator) {
    if (!is_face_triangle(emb, sep[0], sep[1], sep[2])) {
      fail(FerociousCheck::Outcome::False, sep);
      continue;
    }
    if (cuts.size() >= 2) {
      out.witnesses.push_back({sep, true, cuts[0]->component, cuts[1]->component});
      continue;
    }
    const auto& comp = cuts[0]->component;
    const bool small = static_cast<int>(comp.size()) <= std::min(exhaustive_limit, 32);
    auto split = small ? exhaustive_split(r.host, comp, sep) : prefix_split(r.host, comp, sep);
    if (split) {
      out.witnesses.push_back({sep, false, std::move(split->first), std::move(split->second)});
      continue;
    }
    fail(small ? FerociousCheck::Outcome::False : FerociousCheck::Outcome::ComponentTooLarge, sep);
  }
  return out;
}

bool verify_witness(const Reduction& r, const SeparatorWitness& w) {
  std::vector<const CutOff*> cuts;
  for (const auto& c : r.cutoffs)
    if (c.separator == w.separator) cuts.push_back(&c);
  if (cuts.empty()) return false;
  if (w.shared) return cuts.size() >= 2;
  if (cuts.size() != 1) return false;
  std::vector<Vertex> both = w.red;
  both.insert(both.end(), w.yellow.begin(), w.yellow.end());
  std::sort(both.begin(), both.end());
  if (both != cuts[0]->component) return false;
  for (const auto* part : {&w.red, &w.yellow})
    if (!connected_within(r.host, *part) || !sees_separator(r.host, *part, w.separator)) return false;
  return true;
}

namespace {

bool decide(const DrpInstance& inst, Reduction* reduced, RootGraph* root, AuxiliaryGraph* aux_out) {
  AuxiliaryGraph aux = build_auxiliary(inst);
  RootGraph t = root_graph(aux);
  Reduction f = irreducible_reduction(t.graph, t.roots);
  const bool feasible = !is_planar(f.graph);
  if (reduced) *reduced = std::move(f);
  if (root) *root = std::move(t);
  if (aux_out) *aux_out = std::move(aux);
  return feasible;
}

std::vector<Vertex> walk(const Graph& g, Vertex from, Vertex to) {
  std::vector<Vertex> p{from};
  Vertex prev = kNoVertex;
  while (p.back() != to) {
    const auto& nb = g.neighbors(p.back());
    const auto next = std::find_if(nb.begin(), nb.end(), [&](Vertex y) { return y != prev; });
    if (next == nb.end() || p.size() > static_cast<std::size_t>(g.num_vertices())) return {};
    prev = p.back();
    p.push_back(*next);
  }
  return p;
}

// Shortcut along chords of g so the path becomes induced.
std::vector<Vertex> induced(const Graph& g, const std::vector<Vertex>& p) {
  std::vector<Vertex> out;
  std::size_t i = 0;
  while (true) {
    out.push_back(p[i]);
    if (i + 1 == p.size()) break;
    std::size_t next = i + 1;
    for (std::size_t j = p.size() - 1; j > i + 1; --j)
      if (g.has_edge(p[i], p[j])) {
        next = j;
        break;
      }
    i = next;
  }
  return out;
}

std::vector<Vertex> splice(const std::vector<Vertex>& p,
                           const std::function<std::vector<Vertex>(Vertex, Vertex)>& expand) {
  std::vector<Vertex> out{p.front()};
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const auto piece = expand(p[i], p[i + 1]);
    out.insert(out.end(), piece.begin() + 1, piece.end());
  }
  return out;
}

}  // namespace

bool paths_exist(const DrpInstance& inst) { return decide(inst, nullptr, nullptr, nullptr); }

DrpCertificate solve(const DrpInstance& inst, const DrpConfig& config) {
  AuxiliaryGraph aux;
  RootGraph root;
  Reduction f;
  DrpCertificate cert;
  if (!decide(inst, &f, &root, &aux)) {
    cert.kind = DrpCertificate::Kind::PlanarReduction;
    std::optional<Reduction> minimal;
    if (config.minimal_reduction) minimal = minimal_planar_reduction(root.graph, root.roots);
    cert.reduction = minimal ? std::move(*minimal) : std::move(f);
    cert.embedding = std::get<PlanarEmbedding>(planarity(cert.reduction.graph));
    if (!check_strong(cert.reduction, cert.embedding)) return cert;
    cert.strength = Strength::Strong;
    auto fer = check_ferociously_strong(cert.reduction, cert.embedding, config.exhaustive_limit);
    if (fer.outcome == FerociousCheck::Outcome::True) cert.strength = Strength::FerociouslyStrong;
    else if (fer.outcome == FerociousCheck::Outcome::ComponentTooLarge) cert.strength = Strength::Undecided;
    cert.witnesses = std::move(fer.witnesses);
    return cert;
  }

  // Probe on the reduced graph without the hub and the 4-cycle.
  Graph probe = f.graph;
  probe.remove_vertex(aux.hub);
  for (const Edge& e : {Edge(inst.s1, inst.s2), Edge(inst.s2, inst.t1), Edge(inst.t1, inst.t2), Edge(inst.t2, inst.s1)})
    probe.remove_edge(e.u, e.v);
  auto still = [&](const Graph& g) { return paths_exist(DrpInstance(g, inst.s1, inst.t1, inst.s2, inst.t2)); };
  for (Vertex v : probe.vertices()) {
    if (v == inst.s1 || v == inst.t1 || v == inst.s2 || v == inst.t2) continue;
    Graph trial = probe;
    trial.remove_vertex(v);
    if (still(trial)) probe = std::move(trial);
  }
  for (const Edge& e : probe.edges()) {
    Graph trial = probe;
    trial.remove_edge(e.u, e.v);
    if (still(trial)) probe = std::move(trial);
  }
  std::vector<Vertex> q1 = induced(f.graph, walk(probe, inst.s1, inst.t1));
  std::vector<Vertex> q2 = induced(f.graph, walk(probe, inst.s2, inst.t2));

  const Graph& t = root.graph;
  auto lift_cutoff = [&](Vertex x, Vertex y) -> std::vector<Vertex> {
    if (t.has_edge(x, y)) return {x, y};
    for (const auto& c : f.cutoffs)
      if (contains(c.separator, x) && contains(c.separator, y)) return path_through(t, x, y, c.component);
    throw Error(ErrorKind::PreconditionViolation, "edge of the reduction has no cut-off to lift through");
  };
  auto lift_virtual = [&](Vertex x, Vertex y) -> std::vector<Vertex> {
    if (aux.graph.has_edge(x, y)) return {x, y};
    std::vector<Vertex> p = root.lifts.at(Edge(x, y));
    if (p.front() != x) std::reverse(p.begin(), p.end());
    return p;
  };
  cert.kind = DrpCertificate::Kind::TwoPaths;
  cert.p1 = splice(splice(q1, lift_cutoff), lift_virtual);
  cert.p2 = splice(splice(q2, lift_cutoff), lift_virtual);
  return cert;
}

namespace {

bool is_path(const Graph& g, const std::vector<Vertex>& p, Vertex from, Vertex to) {
  if (p.empty() || p.front() != from || p.back() != to) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  std::vector<Vertex> s = p;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

bool verify_certificate(const DrpInstance& inst, const DrpCertificate& cert) {
  if (cert.kind == DrpCertificate::Kind::TwoPaths) {
    if (!is_path(inst.graph, cert.p1, inst.s1, inst.t1) || !is_path(inst.graph, cert.p2, inst.s2, inst.t2)) return false;
    std::set<Vertex> first(cert.p1.begin(), cert.p1.end());
    return std::none_of(cert.p2.begin(), cert.p2.end(), [&](Vertex v) { return first.count(v) > 0; });
  }
  const RootGraph root = root_graph(build_auxiliary(inst));
  const Reduction& claimed = cert.reduction;
  if (!(claimed.host == root.graph)) return false;
  Reduction rebuilt;
  try {
    rebuilt = make_reduction(root.graph, root.roots, claimed.vertices);
  } catch (const Error&) {
    return false;
  }
  if (!(rebuilt.graph == claimed.graph) || rebuilt.cutoffs.size() != claimed.cutoffs.size()) return false;
  for (std::size_t i = 0; i < rebuilt.cutoffs.size(); ++i)
    if (rebuilt.cutoffs[i].separator != claimed.cutoffs[i].separator ||
        rebuilt.cutoffs[i].component != claimed.cutoffs[i].component)
      return false;
  if (!is_k_connected(rebuilt.graph, 3) || !verify_embedding(rebuilt.graph, cert.embedding)) return false;
  if (cert.strength == Strength::None) return true;
  if (!check_strong(rebuilt, cert.embedding)) return false;
  if (cert.strength != Strength::FerociouslyStrong) return true;
  std::set<Triangle> covered;
  for (const auto& w : cert.witnesses) {
    if (!verify_witness(rebuilt, w)) return false;
    covered.insert(w.separator);
  }
  return std::all_of(rebuilt.cutoffs.begin(), rebuilt.cutoffs.end(),
                     [&](const CutOff& c) { return covered.count(c.separator) > 0; });
}

}  // namespace tricompact
