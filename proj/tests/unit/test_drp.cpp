#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "tricompact/drp.hpp"
#include "tricompact/oracles.hpp"

using namespace tricompact;

namespace {

// Every 3-subset in lexicographic order; first one with a root-free component.
std::optional<ReducibleCut> all_triples_cut(const Graph& f, std::span<const Vertex> roots) {
  const auto vs = f.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      for (std::size_t c = b + 1; c < vs.size(); ++c) {
        const Vertex cut[] = {vs[a], vs[b], vs[c]};
        std::vector<Vertex> best;
        std::vector<char> seen(f.id_bound(), 0);
        for (Vertex x : cut) seen[x] = 1;
        for (Vertex s : vs) {
          if (seen[s]) continue;
          std::vector<Vertex> comp{s};
          seen[s] = 1;
          for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex y : f.neighbors(comp[i]))
              if (!seen[y]) {
                seen[y] = 1;
                comp.push_back(y);
              }
          const bool rootless = std::none_of(comp.begin(), comp.end(), [&](Vertex v) {
            return std::find(roots.begin(), roots.end(), v) != roots.end();
          });
          if (rootless && comp.size() > best.size()) best = comp;
        }
        if (!best.empty()) {
          std::sort(best.begin(), best.end());
          return ReducibleCut{Triangle{vs[a], vs[b], vs[c]}, best};
        }
      }
  return std::nullopt;
}

// K4 on 0..3 with extra vertices each joined to 0, 1, 2.
Graph k4_with_caps(const std::vector<std::vector<Vertex>>& caps) {
  Graph g = gen::complete(4);
  for (const auto& cap : caps) {
    std::vector<Vertex> ids;
    for (std::size_t i = 0; i < cap.size(); ++i) ids.push_back(g.add_vertex());
    for (std::size_t i = 0; i < cap.size(); ++i) {
      for (Vertex x : {0, 1, 2})
        if (cap[i] & (1 << x)) g.add_edge(ids[i], x);
      if (i > 0) g.add_edge(ids[i - 1], ids[i]);
    }
  }
  return g;
}

void check_solution(const DrpInstance& inst) {
  const auto cert = solve(inst);
  const bool oracle = bf_two_disjoint_paths(inst.graph, inst.s1, inst.t1, inst.s2, inst.t2).has_value();
  REQUIRE(cert.feasible() == oracle);
  CHECK(verify_certificate(inst, cert));
  if (!cert.feasible()) {
    CHECK(check_strong(cert.reduction, cert.embedding));
    CHECK(cert.strength != Strength::None);
    CHECK(cert.strength != Strength::Strong);
  }
}

}  // namespace

TEST_SUITE("drp") {
  TEST_CASE("auxiliary graph") {
    auto k4 = build_auxiliary(DrpInstance(gen::complete(4), 0, 2, 1, 3));
    CHECK(k4.graph == gen::complete(5));
    CHECK(k4.added_cycle_edges.empty());

    auto c4 = build_auxiliary(DrpInstance(gen::cycle(4), 0, 2, 1, 3));
    CHECK(c4.graph.num_edges() == 8);
    CHECK(c4.graph.degree(c4.hub) == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.graph.degree(v) == 3);

    CHECK_THROWS_AS(DrpInstance(gen::complete(4), 0, 0, 1, 2), Error);
    CHECK_THROWS_AS(DrpInstance(gen::complete(4), 0, 1, 2, 7), Error);
  }

  TEST_CASE("root graph") {
    auto k5 = root_graph(build_auxiliary(DrpInstance(gen::complete(4), 0, 2, 1, 3)));
    CHECK(k5.graph == gen::complete(5));
    CHECK(k5.lifts.empty());

    // W4 plus a detour 0-4-2 across the rim: {0, 2} becomes a virtual edge.
    Graph g = gen::cycle(4);
    const Vertex d = g.add_vertex();
    g.add_edge(0, d);
    g.add_edge(d, 2);
    auto t = root_graph(build_auxiliary(DrpInstance(g, 0, 2, 1, 3)));
    CHECK_FALSE(t.graph.has_vertex(d));
    CHECK(t.graph.has_edge(0, 2));
    REQUIRE(t.lifts.size() == 1);
    CHECK(t.lifts.at(Edge(0, 2)) == std::vector<Vertex>{0, d, 2});

    // A pendant triangle hangs off a root; it is pruned with its block.
    Graph h = gen::cycle(4);
    const Vertex p = h.add_vertex(), q = h.add_vertex();
    h.add_edge(0, p);
    h.add_edge(p, q);
    h.add_edge(0, q);
    auto th = root_graph(build_auxiliary(DrpInstance(h, 0, 2, 1, 3)));
    CHECK(th.graph.num_vertices() == 5);
  }

  TEST_CASE("reducible cuts match all triples") {
    CHECK_FALSE(find_reducible_3cut(gen::complete(5), std::vector<Vertex>{0, 1, 2, 3, 4}).has_value());

    // Pyramid over the face 0,1,2 of K4; roots avoid the apex.
    Graph pyramid = k4_with_caps({{7}});
    const Vertex roots4[] = {0, 1, 2, 3};
    auto cut = find_reducible_3cut(pyramid, roots4);
    REQUIRE(cut.has_value());
    CHECK(cut->separator == Triangle{0, 1, 2});
    CHECK(cut->component == std::vector<Vertex>{4});

    Graph oct = gen::octahedron();
    const Vertex five[] = {0, 1, 2, 3, 4};
    CHECK(find_reducible_3cut(oct, five).has_value() == all_triples_cut(oct, five).has_value());

    gen::Rng rng(71);
    for (int round = 0; round < 300; ++round) {
      Graph f = gen::random_3connected(7 + round % 8, round % 4, rng);
      const Vertex roots[] = {0, 1, 2, 3, 4};
      auto got = find_reducible_3cut(f, roots);
      auto want = all_triples_cut(f, roots);
      REQUIRE(got.has_value() == want.has_value());
      if (!got) continue;
      CHECK(got->separator == want->separator);
      CHECK(got->component.size() == want->component.size());
      Graph smaller = reduce(f, got->separator, got->component);
      CHECK(smaller.num_vertices() < f.num_vertices());
      CHECK(bf_is_3_connected(smaller));
    }
  }

  TEST_CASE("reductions compose") {
    gen::Rng rng(73);
    for (int round = 0; round < 200; ++round) {
      Graph host = gen::random_3connected(8 + round % 10, round % 3, rng);
      const Vertex roots[] = {0, 1, 2, 3, 4};
      Graph f = host;
      while (auto cut = find_reducible_3cut(f, roots)) f = reduce(f, cut->separator, cut->component);
      auto r = make_reduction(host, roots, f.vertices());
      CHECK(r.graph == f);
      CHECK(bf_is_3_connected(r.graph));
      // The sweep reaches a reduction with no further 3-cut to take.
      auto sweep = irreducible_reduction(host, roots);
      CHECK_FALSE(find_reducible_3cut(sweep.graph, roots).has_value());
      CHECK(bf_is_3_connected(sweep.graph));
    }
  }

  TEST_CASE("malformed reductions are rejected") {
    Graph pyramid = k4_with_caps({{7}});
    const Vertex roots[] = {0, 1, 2, 3};
    CHECK_THROWS_AS(make_reduction(pyramid, roots, {0, 1, 2}), Error);
    CHECK_THROWS_AS(make_reduction(pyramid, roots, {0, 1, 3, 4}), Error);
    auto ok = make_reduction(pyramid, roots, {0, 1, 2, 3});
    REQUIRE(ok.cutoffs.size() == 1);
    CHECK(ok.cutoffs[0].separator == Triangle{0, 1, 2});
  }

  TEST_CASE("strong and ferociously strong predicates") {
    const Vertex roots[] = {0, 1, 2, 3};
    SUBCASE("no cut-offs") {
      Graph k4 = gen::complete(4);
      auto r = make_reduction(k4, roots, {0, 1, 2, 3});
      auto emb = std::get<PlanarEmbedding>(planarity(r.graph));
      CHECK(check_strong(r, emb));
      CHECK(check_ferociously_strong(r, emb).outcome == FerociousCheck::Outcome::True);
    }
    SUBCASE("single vertex cannot split") {
      auto r = make_reduction(k4_with_caps({{7}}), roots, {0, 1, 2, 3});
      auto emb = std::get<PlanarEmbedding>(planarity(r.graph));
      CHECK(check_strong(r, emb));
      auto fc = check_ferociously_strong(r, emb);
      CHECK(fc.outcome == FerociousCheck::Outcome::False);
      CHECK(fc.failed == Triangle{0, 1, 2});
    }
    SUBCASE("an edge whose ends both see the separator") {
      auto r = make_reduction(k4_with_caps({{7, 7}}), roots, {0, 1, 2, 3});
      auto emb = std::get<PlanarEmbedding>(planarity(r.graph));
      auto fc = check_ferociously_strong(r, emb);
      REQUIRE(fc.outcome == FerociousCheck::Outcome::True);
      REQUIRE(fc.witnesses.size() == 1);
      CHECK(fc.witnesses[0].red == std::vector<Vertex>{4});
      CHECK(fc.witnesses[0].yellow == std::vector<Vertex>{5});
      CHECK(verify_witness(r, fc.witnesses[0]));
    }
    SUBCASE("an edge with a one-sided end") {
      auto r = make_reduction(k4_with_caps({{7, 3}}), roots, {0, 1, 2, 3});
      auto emb = std::get<PlanarEmbedding>(planarity(r.graph));
      CHECK(check_ferociously_strong(r, emb).outcome == FerociousCheck::Outcome::False);
    }
    SUBCASE("two components on one separator") {
      auto r = make_reduction(k4_with_caps({{7}, {7}}), roots, {0, 1, 2, 3});
      auto emb = std::get<PlanarEmbedding>(planarity(r.graph));
      auto fc = check_ferociously_strong(r, emb);
      REQUIRE(fc.outcome == FerociousCheck::Outcome::True);
      CHECK(fc.witnesses[0].shared);
      CHECK(verify_witness(r, fc.witnesses[0]));
    }
    SUBCASE("separating triangle is not a face") {
      // Triangle 0,1,2 with 3, 4 and 5 each joined to all of it; 5 is cut off.
      Graph g = gen::complete(3);
      for (int i = 0; i < 3; ++i) {
        const Vertex v = g.add_vertex();
        for (Vertex x : {0, 1, 2}) g.add_edge(v, x);
      }
      const Vertex r5[] = {0, 1, 2, 3, 4};
      auto r = make_reduction(g, r5, {0, 1, 2, 3, 4});
      auto emb = std::get<PlanarEmbedding>(planarity(r.graph));
      CHECK_FALSE(check_strong(r, emb));
      CHECK(check_ferociously_strong(r, emb).outcome == FerociousCheck::Outcome::False);
    }
    SUBCASE("large components fall back to prefix splits") {
      // A path of 30 vertices, every one joined to all of the separator.
      std::vector<Vertex> cap(30, 7);
      auto r = make_reduction(k4_with_caps({cap}), roots, {0, 1, 2, 3});
      auto emb = std::get<PlanarEmbedding>(planarity(r.graph));
      auto fc = check_ferociously_strong(r, emb, 20);
      REQUIRE(fc.outcome == FerociousCheck::Outcome::True);
      CHECK(verify_witness(r, fc.witnesses[0]));
      // A long path seeing the separator only at its ends and middle.
      std::vector<Vertex> sparse(30, 0);
      sparse[0] = 1;
      sparse[15] = 2;
      sparse[29] = 4;
      auto s = make_reduction(k4_with_caps({sparse}), roots, {0, 1, 2, 3});
      auto emb2 = std::get<PlanarEmbedding>(planarity(s.graph));
      CHECK(check_ferociously_strong(s, emb2, 20).outcome == FerociousCheck::Outcome::ComponentTooLarge);
      CHECK(check_ferociously_strong(s, emb2, 32).outcome == FerociousCheck::Outcome::False);
    }
  }

  TEST_CASE("solve on the basic instances") {
    DrpInstance k4(gen::complete(4), 0, 2, 1, 3);
    auto a = solve(k4);
    REQUIRE(a.feasible());
    CHECK(a.p1 == std::vector<Vertex>{0, 2});
    CHECK(a.p2 == std::vector<Vertex>{1, 3});
    CHECK(verify_certificate(k4, a));

    DrpInstance c4(gen::cycle(4), 0, 2, 1, 3);
    auto b = solve(c4);
    REQUIRE_FALSE(b.feasible());
    CHECK_FALSE(bf_two_disjoint_paths(c4.graph, 0, 2, 1, 3).has_value());
    CHECK(b.reduction.cutoffs.empty());
    CHECK(verify_certificate(c4, b));
  }

  TEST_CASE("solve agrees with the path oracle on small graphs") {
    for (int n = 4; n <= 6; ++n) {
      const int pairs = testing::pair_count(n);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); mask += n == 6 ? 37 : 1) {
        Graph g = testing::graph_from_mask(n, mask);
        check_solution(DrpInstance(g, 0, 1, 2, 3));
        check_solution(DrpInstance(g, 0, 2, 1, n - 1));
      }
    }
    gen::Rng rng(79);
    for (int round = 0; round < 1500; ++round) {
      const int n = 7 + round % 6;
      Graph g = testing::random_graph(n, rng);
      std::vector<Vertex> vs = g.vertices();
      std::shuffle(vs.begin(), vs.end(), rng);
      check_solution(DrpInstance(g, vs[0], vs[1], vs[2], vs[3]));
    }
  }

  TEST_CASE("paths come back through cut-offs and virtual edges") {
    // K5 minus an edge with long detours hung on 3-cuts and 2-cuts.
    gen::Rng rng(83);
    int feasible = 0;
    for (int round = 0; round < 300; ++round) {
      Graph g = gen::random_3connected(7, 2, rng);
      for (int k = 0; k < 3; ++k) {
        auto vs = g.vertices();
        std::shuffle(vs.begin(), vs.end(), rng);
        const Vertex a = g.add_vertex(), b = g.add_vertex();
        g.add_edge(vs[0], a);
        g.add_edge(a, b);
        g.add_edge(b, vs[1]);
        if (k == 2) g.add_edge(b, vs[2]);
      }
      DrpInstance inst(g, 0, 1, 2, 3);
      auto cert = solve(inst);
      CHECK(verify_certificate(inst, cert));
      CHECK(cert.feasible() == bf_two_disjoint_paths(g, 0, 1, 2, 3).has_value());
      feasible += cert.feasible();
    }
    CHECK(feasible > 30);
  }

  TEST_CASE("ferocious reductions on root-graph families") {
    gen::Rng rng(89);
    int infeasible = 0;
    for (int round = 0; round < 400; ++round) {
      auto rg = gen::separated_terminals(6 + round % 10, 1 + round % 6, 1 + round % 7, rng);
      DrpInstance inst(rg.graph, rg.s1, rg.t1, rg.s2, rg.t2);
      auto cert = solve(inst);
      CHECK(verify_certificate(inst, cert));
      REQUIRE_FALSE(cert.feasible());
      ++infeasible;
      auto fc = check_ferociously_strong(cert.reduction, cert.embedding);
      CHECK(fc.outcome != FerociousCheck::Outcome::False);
      // The classical reduction keeps a subset of the minimal one.
      auto classic = solve(inst, DrpConfig{false, 20});
      CHECK(std::includes(cert.reduction.vertices.begin(), cert.reduction.vertices.end(),
                          classic.reduction.vertices.begin(), classic.reduction.vertices.end()));
    }
    CHECK(infeasible > 50);
  }

  TEST_CASE("tampered certificates fail") {
    DrpInstance k4(gen::complete(4), 0, 2, 1, 3);
    auto a = solve(k4);
    auto bad = a;
    bad.p2 = {1, 0, 3};
    CHECK_FALSE(verify_certificate(k4, bad));
    bad = a;
    bad.p1 = {0, 1, 2};
    CHECK_FALSE(verify_certificate(k4, bad));

    DrpInstance c4(gen::cycle(4), 0, 2, 1, 3);
    auto b = solve(c4);
    auto twisted = b;
    std::reverse(twisted.embedding.rotation[0].begin(), twisted.embedding.rotation[0].end());
    std::swap(twisted.embedding.rotation[4][0], twisted.embedding.rotation[4][1]);
    CHECK_FALSE(verify_certificate(c4, twisted));
    auto shrunk = b;
    shrunk.reduction.vertices.pop_back();
    CHECK_FALSE(verify_certificate(c4, shrunk));
  }
}
