// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "support.hpp"
#include "tricompact/compactor.hpp"
#include "tricompact/connectivity.hpp"
#include "tricompact/decomposition.hpp"
#include "tricompact/drp.hpp"
#include "tricompact/generators.hpp"
#include "tricompact/oracles.hpp"

using namespace tricompact;

namespace {

// Pinned limits.
constexpr double kAc1Seconds = 600.0;
constexpr int kAc1RandomSmall = 100000;
constexpr int kAc1RandomLarge = 10000;
constexpr int kAc2Instances = 1000;
constexpr int kAc3Graphs = 500;
constexpr int kAc4Instances = 1000;
constexpr int kAc5Graphs = 10000;
constexpr double kAc6MinFraction = 0.25;
constexpr double kAc7CompactSeconds = 60.0;
constexpr double kAc7CertificateSeconds = 10.0;

const OracleBudget kOracle{220, 1 << 20, 600.0};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// ---------------------------------------------------------------- graphs up to isomorphism

int pair_bit(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Smallest mask over the labellings that sort vertices by (degree,
// neighbour degrees); any isomorphism invariant order gives a canonical form.
std::uint32_t canonical(int n, std::uint32_t mask) {
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask >> pair_bit(n, i, j) & 1) adj[i].push_back(j), adj[j].push_back(i);
  std::vector<std::vector<int>> key(n);
  for (int v = 0; v < n; ++v) {
    key[v].push_back(static_cast<int>(adj[v].size()));
    std::vector<int> nd;
    for (int w : adj[v]) nd.push_back(static_cast<int>(adj[w].size()));
    std::sort(nd.begin(), nd.end());
    key[v].insert(key[v].end(), nd.begin(), nd.end());
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<std::pair<int, int>> blocks;  // [begin, end) of equal keys
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && key[order[j]] == key[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint32_t best = ~0u;
  std::vector<int> pos(n);
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      for (int i = 0; i < n; ++i) pos[order[i]] = i;
      std::uint32_t m = 0;
      for (int i = 0; i < n; ++i)
        for (int j : adj[i])
          if (i < j) m |= 1u << pair_bit(n, pos[i], pos[j]);
      best = std::min(best, m);
      return;
    }
    auto first = order.begin() + blocks[b].first, last = order.begin() + blocks[b].second;
    std::sort(first, last);
    do rec(b + 1);
    while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

// One representative mask per isomorphism class on n vertices.
std::vector<std::uint32_t> graph_classes(int n) {
  const int pairs = n * (n - 1) / 2;
  std::set<std::uint32_t> all{0};
  std::vector<std::uint32_t> level{0};
  for (int k = 0; k < pairs; ++k) {
    std::set<std::uint32_t> next;
    for (std::uint32_t m : level)
      for (int b = 0; b < pairs; ++b)
        if (!(m >> b & 1)) next.insert(canonical(n, m | 1u << b));
    level.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  return {all.begin(), all.end()};
}

bool drp_agrees(const Graph& g, Vertex s1, Vertex t1, Vertex s2, Vertex t2) {
  const bool fast = solve(DrpInstance(g, s1, t1, s2, t2)).feasible();
  return fast == bf_two_disjoint_paths(g, s1, t1, s2, t2).has_value();
}

Result ac1() {
  const auto t0 = Clock::now();
  Result r;
  long long tuples = 0, disagreements = 0;
  std::vector<std::size_t> classes;
  for (int n = 4; n <= 7; ++n) {
    const auto reps = graph_classes(n);
    classes.push_back(reps.size());
    for (std::uint32_t mask : reps) {
      const Graph g = testing::graph_from_mask(n, mask);
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
          for (Vertex c = 0; c < n; ++c)
            for (Vertex d = 0; d < n; ++d) {
              if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
              ++tuples;
              disagreements += !drp_agrees(g, a, b, c, d);
            }
    }
  }
  // Known class counts: 11, 34, 156, 1044.
  const bool enumerated = classes == std::vector<std::size_t>{11, 34, 156, 1044};

  gen::Rng rng(2024);
  auto random_round = [&](int lo, int hi) {
    const int n = lo + static_cast<int>(rng() % (hi - lo + 1));
    const Graph g = testing::random_graph(n, rng);
    std::vector<Vertex> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    disagreements += !drp_agrees(g, v[0], v[1], v[2], v[3]);
  };
  for (int i = 0; i < kAc1RandomSmall; ++i) random_round(4, 7);
  for (int i = 0; i < kAc1RandomLarge; ++i) random_round(8, 14);
  const double secs = since(t0);
  r.pass = enumerated && disagreements == 0 && secs < kAc1Seconds;
  r.detail = fmt("%zu+%zu+%zu+%zu classes, %lld ordered tuples, %d random n<=7, %d random 8<=n<=14, "
                 "%lld disagreements, %.1f s (limit %.0f)",
                 classes[0], classes[1], classes[2], classes[3], tuples, kAc1RandomSmall, kAc1RandomLarge,
                 disagreements, secs, kAc1Seconds);
  return r;
}

// ---------------------------------------------------------------- certificates

Result ac2() {
  Result r;
  gen::Rng rng(77);
  int rooted = 0, random = 0, reductions = 0, unsound = 0, not_strong = 0, ferocious_false = 0, too_large = 0;
  auto run = [&](const DrpInstance& inst) {
    const DrpCertificate cert = solve(inst);
    if (!verify_certificate(inst, cert)) ++unsound;
    if (cert.feasible()) return;
    ++reductions;
    if (!check_strong(cert.reduction, cert.embedding)) ++not_strong;
    const auto fc = check_ferociously_strong(cert.reduction, cert.embedding);
    if (fc.outcome == FerociousCheck::Outcome::False) ++ferocious_false;
    if (fc.outcome == FerociousCheck::Outcome::ComponentTooLarge) ++too_large;
  };
  for (int i = 0; i < kAc2Instances; ++i, ++rooted) {
    const auto rg = gen::separated_terminals(5 + i % 14, i % 8, 1 + i % 9, rng);
    run(DrpInstance(rg.graph, rg.s1, rg.t1, rg.s2, rg.t2));
  }
  for (int i = 0; i < kAc2Instances; ++i, ++random) {
    const int n = 4 + i % 16;
    const Graph g = testing::random_graph(n, rng);
    std::vector<Vertex> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    run(DrpInstance(g, v[0], v[1], v[2], v[3]));
  }
  r.pass = unsound == 0 && not_strong == 0 && ferocious_false == 0 && rooted >= kAc2Instances;
  r.detail = fmt("%d root-graph family + %d random instances, %d planar reductions; %d unverified, "
                 "%d not strong, %d ferocious false, %d too large",
                 rooted, random, reductions, unsound, not_strong, ferocious_false, too_large);
  return r;
}

// ---------------------------------------------------------------- compaction

// Internally disjoint s-t paths by unit-capacity augmenting paths on the
// split graph; an s-t edge is one path. Written apart from the library flow.
int disjoint_paths(const Graph& g, Vertex s, Vertex t, int cap) {
  struct Arc {
    int to, cap, rev;
  };
  const int nodes = 2 * g.id_bound();
  std::vector<std::vector<Arc>> net(nodes);
  auto arc = [&](int a, int b, int c) {
    net[a].push_back({b, c, static_cast<int>(net[b].size())});
    net[b].push_back({a, 0, static_cast<int>(net[a].size()) - 1});
  };
  for (Vertex v : g.vertices()) {
    arc(2 * v, 2 * v + 1, v == s || v == t ? cap : 1);
    for (Vertex w : g.neighbors(v)) arc(2 * v + 1, 2 * w, 1);
  }
  int flow = 0;
  while (flow < cap) {
    std::vector<std::pair<int, int>> from(nodes, {-1, -1});
    std::vector<int> queue{2 * s};
    from[2 * s] = {2 * s, -1};
    for (std::size_t i = 0; i < queue.size() && from[2 * t + 1].first < 0; ++i)
      for (int k = 0; k < static_cast<int>(net[queue[i]].size()); ++k) {
        const Arc& a = net[queue[i]][k];
        if (a.cap > 0 && from[a.to].first < 0) {
          from[a.to] = {queue[i], k};
          queue.push_back(a.to);
        }
      }
    if (from[2 * t + 1].first < 0) break;
    for (int x = 2 * t + 1; x != 2 * s;) {
      auto [p, k] = from[x];
      net[p][k].cap -= 1;
      net[x][net[p][k].rev].cap += 1;
      x = p;
    }
    ++flow;
  }
  return flow;
}

struct StepAudit {
  int steps = 0, edge_sets = 0, stable_sets = 0, matchings = 0, triangles = 0;
  long long flows = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

void audit_sequence(const Graph& start, std::span<const Vertex> prot, const CompactorParams& p, OracleBudget budget,
                    StepAudit& a) {
  CompactionSequence seq;
  try {
    seq = iterative_compactor(start, prot, p, VerifyLevel::Full);
  } catch (const Error& e) {
    a.fail(std::string("compactor threw ") + e.what());
    return;
  }
  Graph g = start;
  for (const auto& step : seq.steps) {
    const CompactorOutput& out = step.output;
    ++a.steps;
    Graph rest = g;
    switch (out.kind) {
      case OutputKind::EdgeSet:
        ++a.edge_sets;
        for (const Edge& e : out.edges) rest.remove_edge(e.u, e.v);
        for (const Edge& e : out.edges) {
          ++a.flows;
          if (disjoint_paths(rest, e.u, e.v, p.c) < p.c) a.fail("deleted edge without c paths");
        }
        break;
      case OutputKind::StableSet:
        ++a.stable_sets;
        for (Vertex v : out.vertices) rest.remove_vertex(v);
        for (Vertex v : out.vertices) {
          const auto& nb = g.neighbors(v);
          for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
              ++a.flows;
              if (disjoint_paths(rest, nb[i], nb[j], p.c) < p.c) a.fail("deleted vertex with a weak neighbour pair");
            }
        }
        break;
      case OutputKind::MatchingOut: ++a.matchings; break;
      case OutputKind::Triangles: ++a.triangles; break;
    }
    Graph next = apply_minor_op(g, out.op(), {}).graph;
    bool ok = false;
    try {
      ok = bf_is_3_connected(next, budget);
    } catch (const Error& e) {
      a.fail(std::string("oracle: ") + e.what());
    }
    if (!ok) a.fail(fmt("step on n=%d gives a graph that is not 3-connected", g.num_vertices()));
    g = std::move(next);
  }
  if (!(g == seq.last)) a.fail("journal and replay disagree");
}

Graph ac3_graph(int i, gen::Rng& rng) {
  const int n = 20 + static_cast<int>(rng() % 181);
  switch (i % 6) {
    case 0: return gen::triangulation(n, n, rng);
    case 1: return gen::random_3connected(n, n / 3, rng);
    case 2: return gen::dense_3connected(std::max(n, 60), 41.0 + rng() % 8, rng);
    case 3: return gen::degree3_attachment(std::max(4, n / 5), n - std::max(4, n / 5), rng);
    case 4: return gen::bipartite_triangles(std::max(3, (n - 3) / 3));
    default: {
      Graph g = gen::random_3connected(std::max(8, n / 3), 2, rng);  // truncation at most triples n
      std::vector<Vertex> deg3;
      for (Vertex v : g.vertices())
        if (g.degree(v) == 3) deg3.push_back(v);
      return gen::truncate(g, deg3);
    }
  }
}

Result ac3() {
  Result r;
  gen::Rng rng(303);
  StepAudit a;
  int graphs = 0, max_n = 0;
  for (int i = 0; i < kAc3Graphs; ++i) {
    const Graph g = ac3_graph(i, rng);
    if (g.num_vertices() > 200) {
      a.fail("generated graph above the oracle range");
      continue;
    }
    max_n = std::max(max_n, g.num_vertices());
    auto vs = g.vertices();
    std::shuffle(vs.begin(), vs.end(), rng);
    vs.resize(rng() % 6);
    const int n0 = std::max(8, g.num_vertices() / 3);
    audit_sequence(g, vs, CompactorParams::make(10, 1024, 0, n0), kOracle, a);
    ++graphs;
  }
  // Stable sets only arise once the matching is below 2cn/d, i.e. n around 10^3.
  StepAudit big;
  for (int i = 0; i < 4; ++i) {
    const Graph g = gen::degree3_attachment(20, 1200 + 50 * i, rng);
    audit_sequence(g, {}, CompactorParams::make(10, 1024, 0, 600), OracleBudget{2000, 1 << 22, 600.0}, big);
  }
  r.pass = a.failures == 0 && big.failures == 0 && graphs >= kAc3Graphs && big.stable_sets > 0;
  r.detail = fmt("%d graphs (n<=%d): %d steps (%d edge sets, %d matchings, %d triangle sets), %lld path flows; "
                 "4 attachment graphs n~1200: %d steps (%d stable sets), %lld flows; %d failures%s%s",
                 graphs, max_n, a.steps, a.edge_sets, a.matchings, a.triangles, a.flows, big.steps, big.stable_sets,
                 big.flows, a.failures + big.failures, a.failures + big.failures ? ", first: " : "",
                 (a.failures ? a.first_failure : big.first_failure).c_str());
  return r;
}

// ---------------------------------------------------------------- gadget lemmas

Graph truncated_instance(int n, gen::Rng& rng) {
  Graph g = gen::random_3connected(n, static_cast<int>(rng() % 4), rng);
  std::vector<Vertex> deg3;
  for (Vertex v : g.vertices())
    if (g.degree(v) == 3 && rng() % 2) deg3.push_back(v);
  return gen::truncate(g, deg3);
}

template <class T>
std::vector<T> random_disjoint(std::vector<T> items, gen::Rng& rng, bool thin) {
  std::shuffle(items.begin(), items.end(), rng);
  std::set<Vertex> used;
  std::vector<T> out;
  for (const auto& it : items) {
    if (thin && rng() % 4 == 0) continue;
    std::vector<Vertex> vs;
    if constexpr (std::is_same_v<T, Edge>) vs = {it.u, it.v};
    else vs = {it[0], it[1], it[2]};
    if (std::any_of(vs.begin(), vs.end(), [&](Vertex v) { return used.count(v) > 0; })) continue;
    used.insert(vs.begin(), vs.end());
    out.push_back(it);
  }
  return out;
}

// A contraction with fewer than four vertices is not 3-connected, so it
// counts against the lemma like any other failure.
struct LemmaTally {
  int checked = 0, counterexamples = 0, degenerate = 0;
  std::string first;

  void record(const Graph& before, const Graph& contracted) {
    ++checked;
    const bool small = contracted.num_vertices() < 4;
    degenerate += small;
    if (small || !bf_is_3_connected(contracted, kOracle)) {
      if (counterexamples++ == 0)
        first = fmt("n=%d m=%d contracts to n=%d m=%d", before.num_vertices(), before.num_edges(),
                    contracted.num_vertices(), contracted.num_edges());
    }
  }
};

Result ac4() {
  Result r;
  gen::Rng rng(404);
  LemmaTally tri, sweet, wb;
  int family = 0;
  for (int k = 3; k <= 60; ++k, ++family) {
    const Graph g = gen::bipartite_triangles(k);
    tri.record(g, apply_minor_op(g, MinorOp::contract_triangles(degree3_triangles(g))).graph);
    auto some = random_disjoint(degree3_triangles(g), rng, true);
    if (!some.empty()) tri.record(g, apply_minor_op(g, MinorOp::contract_triangles(some)).graph);
  }
  const Graph prism = gen::prism();
  tri.record(prism, apply_minor_op(prism, MinorOp::contract_triangles(degree3_triangles(prism))).graph);
  for (int round = 0; tri.checked < kAc4Instances && round < 20 * kAc4Instances; ++round) {
    const Graph g = truncated_instance(6 + round % 30, rng);
    auto ts = random_disjoint(degree3_triangles(g), rng, true);
    if (!ts.empty()) tri.record(g, apply_minor_op(g, MinorOp::contract_triangles(ts)).graph);
  }

  for (int round = 0; sweet.checked < kAc4Instances && round < 20 * kAc4Instances; ++round) {
    const int n = 6 + round % 25;
    const Graph g = round % 3 == 0   ? gen::triangulation(n, n / 2, rng)
                    : round % 3 == 1 ? truncated_instance(n, rng)
                                     : gen::degree3_attachment(5 + round % 6, 1 + round % 9, rng);
    if (g.num_vertices() < 6) continue;
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
      if (is_sweet(g, e)) es.push_back(e);
    auto m = random_disjoint(es, rng, false);
    if (!m.empty()) sweet.record(g, apply_minor_op(g, MinorOp::contract_matching(m)).graph);
  }

  for (int round = 0; wb.checked < kAc4Instances && round < 20 * kAc4Instances; ++round) {
    const Graph g = round % 2 ? gen::triangulation(8 + round % 8, round % 5, rng)
                              : gen::random_3connected(8 + round % 8, round % 6, rng);
    auto cuts = bf_all_3cuts(g, {}, kOracle);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    std::vector<char> used(g.id_bound(), 0), inside(g.id_bound(), 0);
    Matching m;
    for (const auto& cut : cuts) {
      const auto& u = cut.component;
      bool ok = true;
      for (Vertex v : u) ok = ok && !used[v];
      for (Vertex x : cut.separator) ok = ok && !inside[x];
      if (!ok) continue;
      std::vector<Edge> good;
      for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
          if (g.has_edge(u[i], u[j]) && is_well_behaved(g, Edge(u[i], u[j]), cut.separator, u))
            good.emplace_back(u[i], u[j]);
      if (good.empty()) continue;
      m.push_back(good[rng() % good.size()]);
      for (Vertex v : u) used[v] = inside[v] = 1;
      for (Vertex x : cut.separator) used[x] = 1;
    }
    if (!m.empty()) wb.record(g, apply_minor_op(g, MinorOp::contract_matching(m)).graph);
  }

  auto line = [](const char* name, const LemmaTally& t) {
    return fmt("%s %d checked/%d counterexamples (%d below 4 vertices)%s%s", name, t.checked, t.counterexamples,
               t.degenerate, t.counterexamples ? ", first: " : "", t.first.c_str());
  };
  r.pass = tri.counterexamples + sweet.counterexamples + wb.counterexamples == 0 && tri.checked >= kAc4Instances &&
           sweet.checked >= kAc4Instances && wb.checked >= kAc4Instances;
  r.detail = line("triangles", tri) + fmt(" (%d from the K_{k,3} family, plus the prism)", family) + "; " + line("sweet", sweet) +
             "; " + line("well-behaved", wb);
  return r;
}

// ---------------------------------------------------------------- decomposition

Graph node_graph(const TreeNode& node) {
  Vertex bound = 0;
  for (Vertex v : node.vertices) bound = std::max(bound, v + 1);
  Graph h(bound);
  for (Vertex v = 0; v < bound; ++v)
    if (!std::binary_search(node.vertices.begin(), node.vertices.end(), v)) h.remove_vertex(v);
  for (const Edge& e : node.edges) h.add_edge(e.u, e.v);
  return h;
}

bool oracle_cycle(const Graph& h) {
  if (h.num_vertices() < 3 || h.num_edges() != h.num_vertices() || !bf_is_connected(h)) return false;
  for (Vertex v : h.vertices())
    if (h.degree(v) != 2) return false;
  return true;
}

Result ac5() {
  Result r;
  gen::Rng rng(505);
  int graphs = 0, pair_mismatch = 0, bad_nodes = 0, with_cuts = 0;
  for (int round = 0; graphs < kAc5Graphs && round < 50 * kAc5Graphs; ++round) {
    const int n = 3 + round % 7;
    std::uniform_real_distribution<double> p(0.2, 0.7);
    const Graph g = gen::gnp(n, p(rng), rng);
    if (!bf_is_connected(g) || !bf_cut_vertices(g).empty()) continue;
    ++graphs;
    const auto t = strong_2cut_tree(g);
    const auto expected = bf_strong_2cuts(g);
    with_cuts += !expected.empty();
    if (t.cut_pairs() != expected) ++pair_mismatch;
    for (const auto& node : t.nodes) {
      if (!node.is_graph_node()) continue;
      const Graph h = node_graph(node);
      const bool ok = node.kind == NodeKind::ThreeConnected ? bf_is_3_connected(h) : oracle_cycle(h);
      bad_nodes += !ok;
    }
  }
  const auto special = special_2cut_tree(strong_2cut_tree(gen::cycle(6)));
  int leaf_triangles = 0;
  const auto leaves = special.leaves();
  for (int i : leaves) leaf_triangles += special.nodes[i].kind == NodeKind::Triangle;
  const bool c6 = leaves.size() == 3 && leaf_triangles == 3;
  r.pass = graphs >= kAc5Graphs && pair_mismatch == 0 && bad_nodes == 0 && c6;
  r.detail = fmt("%d 2-connected graphs n<=9 (%d with strong 2-cuts): %d cut-pair mismatches, %d bad graph nodes; "
                 "C6 special tree has %zu leaves, %d of them triangles",
                 graphs, with_cuts, pair_mismatch, bad_nodes, leaves.size(), leaf_triangles);
  return r;
}

// ---------------------------------------------------------------- shrink

Result ac6() {
  Result r;
  gen::Rng rng(606);
  int edge_steps = 0, short_steps = 0;
  double worst = 1.0;
  std::string per_graph;
  for (int n : {1000, 1300, 1600}) {
    const Graph g = gen::dense_3connected(n, 45.0, rng);
    const double avg = 2.0 * g.num_edges() / g.num_vertices();
    const auto seq = iterative_compactor(g, {}, CompactorParams::make(10, 1024, 0, n / 4), VerifyLevel::Debug);
    int here = 0;
    for (const auto& s : seq.steps) {
      if (s.output.kind != OutputKind::EdgeSet) continue;
      ++edge_steps;
      ++here;
      const double frac = static_cast<double>(s.output.edges.size()) / s.edges;
      worst = std::min(worst, frac);
      short_steps += frac < kAc6MinFraction;
    }
    per_graph += fmt("%sn=%d avg %.1f: %d edge-set steps", per_graph.empty() ? "" : ", ", n, avg, here);
  }
  r.pass = edge_steps > 0 && short_steps == 0;
  r.detail = per_graph + fmt("; smallest |F|/|E| = %.4f (bound %.2f), %d below", worst, kAc6MinFraction, short_steps);
  return r;
}

// ---------------------------------------------------------------- performance

Result ac7() {
  Result r;
  gen::Rng rng(707);
  const Graph tri = gen::triangulation(33336, 33336, rng);
  auto t0 = Clock::now();
  const auto seq = iterative_compactor(tri, {}, CompactorParams::make(), VerifyLevel::Off);
  const double compact_secs = since(t0);
  const bool result_ok = is_k_connected(seq.last, 3) && seq.journal.replay(seq.start) == seq.last;

  const Graph big = gen::gnm(50000, 1000000, rng);
  t0 = Clock::now();
  const auto cert = sparse_certificate(big, 10);
  const double cert_secs = since(t0);
  const std::size_t kept = cert.kept().size();

  r.pass = compact_secs < kAc7CompactSeconds && cert_secs < kAc7CertificateSeconds && result_ok &&
           kept <= static_cast<std::size_t>(10) * (big.num_vertices() - 1);
  r.detail = fmt("triangulation m=%d compacted to n=%d in %zu steps, %.2f s (limit %.0f), result %s; "
                 "certificate k=10 on m=%d kept %zu edges in %.2f s (limit %.0f)",
                 tri.num_edges(), seq.last.num_vertices(), seq.steps.size(), compact_secs, kAc7CompactSeconds,
                 result_ok ? "3-connected" : "BROKEN", big.num_edges(), kept, cert_secs, kAc7CertificateSeconds);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, Result (*)()>> criteria = {
      {"2-DRP oracle equivalence", ac1},   {"certificate soundness", ac2}, {"compaction preservation", ac3},
      {"gadget lemma properties", ac4},    {"decomposition correctness", ac5}, {"EdgeSet shrink", ac6},
      {"performance sanity", ac7}};
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    const auto t0 = Clock::now();
    Result res;
    try {
      res = criteria[i].second();
    } catch (const std::exception& e) {
      res = {false, std::string("threw: ") + e.what()};
    }
    all = all && res.pass;
    std::printf("AC%d %s %s: %s [%.1f s]\n", id, res.pass ? "PASS" : "FAIL", criteria[i].first, res.detail.c_str(),
                since(t0));
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
