#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tricompact/graph.hpp"

namespace tricompact {

struct BlockTree {
  std::vector<std::vector<Vertex>> blocks;      // each sorted
  std::vector<std::vector<Edge>> block_edges;   // each sorted
  std::vector<Vertex> cut_vertices;             // sorted
  std::vector<std::vector<int>> blocks_of;      // per vertex id, the blocks containing it
};

BlockTree block_tree(const Graph& g);
bool is_biconnected(const Graph& g);
bool is_triconnected(const Graph& g);

enum class SplitKind { Bond, Polygon, Rigid };

// Triconnected components of a biconnected graph. Edge ids below num_real
// follow g.edges(); the rest are virtual and each sits in exactly two
// components.
struct SplitComponents {
  struct Component {
    SplitKind kind;
    std::vector<int> edges;
  };
  std::vector<Edge> edge_ends;
  int num_real = 0;
  std::vector<Component> components;

  bool is_virtual(int e) const { return e >= num_real; }
};

SplitComponents triconnected_components(const Graph& g);

enum class NodeKind { Cut, ThreeConnected, Cycle, Triangle };

const char* to_string(NodeKind kind);

struct TreeNode {
  NodeKind kind = NodeKind::Cut;
  std::vector<Vertex> vertices;       // sorted; a cut node holds its pair
  std::vector<Edge> edges;            // graph nodes only, sorted
  std::vector<Edge> virtual_edges;    // the edges above that are absent from the host
  std::vector<Vertex> cycle;          // cycle and triangle nodes: cyclic order from the smallest id
  std::vector<int> neighbors;         // sorted tree neighbours
  bool chord = false;                 // cut node introduced by triangulating a cycle

  bool is_graph_node() const { return kind != NodeKind::Cut; }
  int degree() const { return static_cast<int>(neighbors.size()); }
};

struct CutTree {
  std::vector<TreeNode> nodes;

  int num_graph_nodes() const;
  std::vector<Edge> cut_pairs() const;  // sorted, without repeats
  std::vector<int> leaves() const;      // graph nodes of tree degree 1
  bool is_tree() const;
  // Order-independent description used to compare two constructions.
  std::vector<std::string> signature() const;
};

struct Strong2CutTree : CutTree {};
struct Special2CutTree : CutTree {};

// Throws Not2Connected unless g is 2-connected with at least 3 vertices.
Strong2CutTree strong_2cut_tree(const Graph& g);

// Recursive splitting on flow-verified strong 2-cuts; the seed picks which
// cut is split first at every level. Quadratic or worse; meant for checks.
Strong2CutTree strong_2cut_tree_by_splitting(const Graph& g, std::uint64_t seed = 0);

Special2CutTree special_2cut_tree(const Strong2CutTree& t);

struct DecompositionConfig {
  int independent_divisor = 15;
  int leaf_divisor = 2000;
  int path_nodes = 141;
  int path_block = 142;
  int specialty_factor = 7;
};

enum class HarvestKind { Leaves, Degree2Paths, IndependentNodes };

struct Leaf {
  int node = -1;                 // tree node index
  int cut = -1;                  // the adjacent cut node (-1 for a single-node tree)
  std::vector<Vertex> interior;  // node vertices minus the cut pair
};

struct TreeHarvest {
  HarvestKind kind = HarvestKind::Leaves;
  std::vector<Leaf> leaves;
  std::vector<std::vector<int>> paths;  // tree node indices, cut node first and last
  std::vector<Vertex> independent;      // sorted
};

TreeHarvest harvest_leaves(const CutTree& t);
TreeHarvest harvest_degree2_paths(const Strong2CutTree& t, const DecompositionConfig& cfg = {});
TreeHarvest harvest_independent(const Strong2CutTree& t, std::span<const Vertex> candidates,
                                const DecompositionConfig& cfg = {});

// True when a and b share a cut node or a cycle node of length at least four.
bool conflicts_in_tree(const Strong2CutTree& t, Vertex a, Vertex b);

}  // namespace tricompact
