#pragma once

// Brute-force reference answers. Deliberately naive; used as ground truth.

#include <optional>
#include <span>
#include <vector>

#include "tricompact/graph.hpp"

namespace tricompact {

struct OracleBudget {
  int max_vertices = 60;
  int max_edges = 1 << 20;
  double time_cap_seconds = 600.0;

  static OracleBudget paths() { return {14, 1 << 20, 600.0}; }
  static OracleBudget deletion() { return {60, 1 << 20, 600.0}; }
};

struct PathPair {
  std::vector<Vertex> p1;
  std::vector<Vertex> p2;
};

// Vertex-disjoint s1-t1 and s2-t2 paths, or nullopt.
std::optional<PathPair> bf_two_disjoint_paths(const Graph& g, Vertex s1, Vertex t1, Vertex s2,
                                              Vertex t2, OracleBudget budget = OracleBudget::paths());

bool bf_is_connected(const Graph& g, std::span<const Vertex> removed = {});
bool bf_is_k_connected(const Graph& g, int k, OracleBudget budget = OracleBudget::deletion());
bool bf_is_3_connected(const Graph& g, OracleBudget budget = OracleBudget::deletion());

std::vector<Vertex> bf_cut_vertices(const Graph& g);

struct BfCutOff {
  Triangle separator;  // sorted
  std::vector<Vertex> component;  // sorted

  friend bool operator==(const BfCutOff&, const BfCutOff&) = default;
};

// Every (X, U) with |X| = 3, X a vertex cut, U a component of g - X avoiding C.
std::vector<BfCutOff> bf_all_3cuts(const Graph& g, std::span<const Vertex> terminals,
                                   OracleBudget budget = OracleBudget::deletion());

// Pairs {x,y} with g - x - y disconnected and x,y joined by three internally
// disjoint paths (the edge xy counting as one when present).
std::vector<Edge> bf_strong_2cuts(const Graph& g, OracleBudget budget = OracleBudget::deletion());

// Largest family of internally disjoint u-v paths, by enumerating all paths.
int bf_max_disjoint_paths(const Graph& g, Vertex u, Vertex v, OracleBudget budget = {9, 40, 600.0});

// Smallest vertex set (avoiding u, v) separating non-adjacent u and v.
int bf_min_vertex_cut(const Graph& g, Vertex u, Vertex v, OracleBudget budget = {12, 1 << 20, 600.0});

}  // namespace tricompact
