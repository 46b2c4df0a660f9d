#pragma once

#include <span>
#include <vector>

#include "tricompact/graph.hpp"

namespace tricompact {

struct PathSet {
  Vertex source = kNoVertex;
  Vertex target = kNoVertex;
  std::vector<std::vector<Vertex>> paths;

  int count() const { return static_cast<int>(paths.size()); }
};

// Paths of g from source to target with pairwise disjoint interiors.
bool verify_path_set(const Graph& g, const PathSet& ps);

// Unit vertex capacity flow network over a fixed graph. Built once, then
// queried repeatedly; each query costs O(limit * (n + m)).
class VertexFlow {
 public:
  explicit VertexFlow(const Graph& g);

  // Internally disjoint source-target paths, at most cap of them.
  PathSet disjoint_paths(Vertex source, Vertex target, int cap);
  int count(Vertex source, Vertex target, int cap);

  struct Separation {
    int flow = 0;             // min(limit, max flow)
    std::vector<Vertex> cut;  // minimum vertex cut, valid when flow < limit
    std::vector<char> source_side;  // per vertex: reachable from the sources avoiding cut and removed
  };
  enum class CutSide { NearSource, NearSink };

  // Vertex cut between two disjoint sets. Cuttable endpoints may themselves
  // belong to the cut. Vertices in `removed` are ignored entirely.
  Separation separate(std::span<const Vertex> sources, std::span<const Vertex> sinks,
                      bool sources_cuttable, bool sinks_cuttable, int limit, CutSide side,
                      std::span<const Vertex> removed = {});

 private:
  struct Arc {
    int head;
    int rev;
    int cap;
  };

  int in_node(Vertex v) const { return 2 * v; }
  int out_node(Vertex v) const { return 2 * v + 1; }
  void add_arc(int from, int to, int cap);
  void reset();
  int augment(int limit);

  const Graph* graph_;
  std::vector<std::vector<int>> node_arcs_;
  std::vector<Arc> arcs_;
  std::vector<int> residual_;
  std::vector<int> touched_;
  std::vector<char> touched_mark_;
  // per-query state
  std::vector<int> entry_list_;  // nodes fed by the super-source
  std::vector<char> exit_;       // nodes draining into the super-sink
  std::vector<int> exit_list_;
  std::vector<char> blocked_;
  std::vector<int> blocked_list_;
  std::vector<int> parent_arc_;
  std::vector<int> seen_;
  int stamp_ = 0;
};

PathSet count_disjoint_paths(const Graph& g, Vertex u, Vertex v, int cap);

// Connected, biconnected and triconnected for k <= 3 use linear-time
// algorithms; larger k uses flows from k fixed vertices.
bool is_connected(const Graph& g);
bool is_k_connected(const Graph& g, int k);

struct ForestDecomposition {
  std::vector<std::vector<Edge>> forests;  // F1..Fk
  std::vector<Edge> remainder;

  std::vector<Edge> kept() const;
};

// Scan-first-search forest index (1-based) of every edge in g.edges() order.
std::vector<int> scan_first_forest_index(const Graph& g);

ForestDecomposition sparse_certificate(const Graph& g, int k);

// Remainder of the c-certificate minus edges at protected vertices.
// Throws TooSparse unless the average degree exceeds 4c.
std::vector<Edge> dense_edge_deletion(const Graph& g, int c, std::span<const Vertex> protected_vertices);

}  // namespace tricompact
