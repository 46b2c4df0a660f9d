#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tricompact {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Triangle = std::array<Vertex, 3>;
using Matching = std::vector<Edge>;
using TriangleSet = std::vector<Triangle>;

enum class ErrorKind {
  NotAnEdge,
  NotATriangle,
  InvalidPayload,
  SameVertex,
  TooSparse,
  Not2Connected,
  Not3Connected,
  BadPartition,
  CoverTooLarge,
  NoGadget,
  PreconditionViolation,
  TooSmall,
  BudgetExceeded,
  ParseError,
  BadTerminals,
  VerificationFailed,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  // Lists are sorted and deduplicated; entries on dead ids must be empty.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adj,
                              std::vector<char> alive);

  // Upper bound on vertex ids; dead ids below it are holes.
  int id_bound() const { return static_cast<int>(adj_.size()); }
  int num_vertices() const { return n_alive_; }
  int num_edges() const { return m_; }

  bool has_vertex(Vertex v) const {
    return v >= 0 && v < id_bound() && alive_[v];
  }
  bool has_edge(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  std::vector<Vertex> vertices() const;
  std::vector<Edge> edges() const;

  Vertex add_vertex();
  // Returns false if the edge already exists. Loops are rejected.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  void remove_vertex(Vertex v);

  void set_label(Vertex v, std::string label);
  const std::string& label(Vertex v) const;
  bool has_labels() const { return !labels_.empty(); }

  // Symmetric, sorted, loop-free, counts consistent.
  bool check_invariants() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.alive_ == b.alive_ && a.adj_ == b.adj_;
  }

 private:
  void require_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> alive_;
  std::vector<std::string> labels_;
  int n_alive_ = 0;
  int m_ = 0;
};

// Graph induced on the given vertices; ids are preserved.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// image[old] is the new id of old, or kNoVertex if old was deleted.
struct VertexMap {
  std::vector<Vertex> image;

  static VertexMap identity(const Graph& g);
  Vertex operator()(Vertex v) const {
    return v >= 0 && v < static_cast<int>(image.size()) ? image[v] : kNoVertex;
  }
  // this followed by next
  VertexMap then(const VertexMap& next) const;
};

struct Minor {
  Graph graph;
  VertexMap map;
};

Minor contract_edge(const Graph& g, Edge e);
Minor contract_triangle(const Graph& g, const Triangle& t);

// Merges each group into its smallest id and simplifies. Groups must be
// pairwise disjoint and each must induce a connected subgraph.
Minor contract_groups(const Graph& g, const std::vector<std::vector<Vertex>>& groups);

enum class MinorOpKind { DeleteEdges, DeleteVertices, ContractMatching, ContractTriangles };

const char* to_string(MinorOpKind kind);

struct MinorOp {
  MinorOpKind kind = MinorOpKind::DeleteEdges;
  std::vector<Edge> edges;          // DeleteEdges, ContractMatching
  std::vector<Vertex> vertices;     // DeleteVertices
  TriangleSet triangles;            // ContractTriangles

  static MinorOp delete_edges(std::vector<Edge> es);
  static MinorOp delete_vertices(std::vector<Vertex> vs);
  static MinorOp contract_matching(Matching m);
  static MinorOp contract_triangles(TriangleSet ts);

  std::size_t payload_size() const;
};

// Throws InvalidPayload if the payload does not fit g or touches a
// protected vertex.
Minor apply_minor_op(const Graph& g, const MinorOp& op,
                     std::span<const Vertex> protected_vertices = {});

class MinorJournal {
 public:
  struct Entry {
    MinorOp op;
    VertexMap map;
  };

  void record(MinorOp op, VertexMap map);
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Re-applies every op from the start graph; throws if a step no longer fits.
  Graph replay(const Graph& start) const;
  VertexMap composed(const Graph& start) const;

 private:
  std::vector<Entry> entries_;
};

bool is_matching(const Graph& g, std::span<const Edge> m);
bool is_triangle_set(const Graph& g, std::span<const Triangle> ts);

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace tricompact
