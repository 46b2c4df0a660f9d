#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tricompact/graph.hpp"

namespace tricompact {

struct CompactorParams {
  int c = 10;
  int d = 1024;
  double delta = 0;    // shrink fraction per step
  double epsilon = 0;  // (2c+1) * delta
  int max_degree = 0;  // ceil(1/epsilon) + 6
  int n0 = 5000;

  // delta <= 0 selects 1/((2c+1) * 2d). Throws PreconditionViolation when
  // c < 10, d <= 1000, n0 < 1 or delta >= 1/((2c+1) d).
  static CompactorParams make(int c = 10, int d = 1024, double delta = 0, int n0 = 5000);
  bool coherent() const;
};

enum class VerifyLevel { Off, Debug, Full };

const char* to_string(VerifyLevel level);
VerifyLevel parse_verify_level(const std::string& s);  // throws ParseError

enum class OutputKind { EdgeSet, StableSet, MatchingOut, Triangles };

const char* to_string(OutputKind kind);

struct CheckRecord {
  std::string condition;
  bool passed = true;
  std::string detail;  // witness or the first offending element
};

struct CompactorOutput {
  OutputKind kind = OutputKind::MatchingOut;
  std::vector<Edge> edges;       // EdgeSet F or matching N
  std::vector<Vertex> vertices;  // StableSet S
  TriangleSet triangles;
  std::string route;             // pipeline branch that produced it
  bool below_target = false;
  std::vector<CheckRecord> transcript;

  MinorOp op() const;
  std::size_t payload_size() const;
  bool empty() const { return payload_size() == 0; }
};

// Independent check of every side condition of out against h. Off checks
// only the cheap structural conditions; Debug adds 3-connectivity of the
// result and at most 64 sampled flow conditions; Full runs every flow.
std::vector<CheckRecord> verify_output(const Graph& h, std::span<const Vertex> protected_vertices,
                                       const CompactorParams& p, const CompactorOutput& out,
                                       VerifyLevel level = VerifyLevel::Full);
bool all_passed(std::span<const CheckRecord> transcript);

// Predicates on single gadgets.
bool is_sweet_end(const Graph& h, Vertex x, Vertex y);
bool is_sweet(const Graph& h, Edge e);
bool is_degree3_triangle(const Graph& h, const Triangle& t);
// Both conditions checked against the whole graph; O(m (n + m)).
bool is_well_behaved(const Graph& h, Edge e, std::span<const Vertex> cut, std::span<const Vertex> side);

// Triangles of degree-3 vertices, each listed once, sorted.
TriangleSet degree3_triangles(const Graph& h);

enum class GadgetKind { Degree3Triangle, WellBehavedEdge, SweetEdge };

const char* to_string(GadgetKind kind);

struct GadgetFinding {
  GadgetKind kind = GadgetKind::SweetEdge;
  Triangle triangle{};
  Edge edge;
  Vertex sweet_end = kNoVertex;
  std::vector<Vertex> cut, side;  // [X, U] of a well-behaved edge
  std::string branch;             // recognisable case of the existence argument, if any
};

// A part of h cut off by `cut`. Each entry of `outside` lists the cut
// vertices through which one outside part attaches; the search treats every
// such part as a single vertex.
struct Region {
  std::vector<Vertex> cut;
  std::vector<Vertex> side;
  std::vector<std::vector<Vertex>> outside;
};

struct RegionGadgets {
  std::optional<GadgetFinding> triangle, well_behaved, sweet;

  bool any() const { return triangle || well_behaved || sweet; }
};

// Exhaustive search of cut plus side for one gadget of each kind.
RegionGadgets search_region(const Graph& h, const Region& r, std::span<const Vertex> protected_vertices,
                            const CompactorParams& p);

// Leaf regions: side is a component of h - cut. Throws NoGadget.
GadgetFinding find_leaf_gadget(const Graph& h, std::span<const Vertex> cut, std::span<const Vertex> side,
                               std::span<const Vertex> protected_vertices, const CompactorParams& p);

// Path regions: the first and last cutsets bound the region. Throws NoGadget.
GadgetFinding find_path_gadget(const Graph& h, std::span<const std::vector<Vertex>> cutsets,
                               std::span<const Vertex> region, std::span<const Vertex> protected_vertices,
                               const CompactorParams& p);

// Nondecreasing degree order, partner of lowest degree, ties by smaller id.
Matching greedy_low_degree_matching(const Graph& h, int d, std::span<const Vertex> protected_vertices);

// Induced submatching, then no vertex of degree at most 12 next to two edges.
Matching refine_matching(const Graph& h, const Matching& m, int d);

// Vertices of the subgraph J. Throws BadPartition unless cover and stable
// partition the vertices, stable is stable and cover meets every edge.
std::vector<Vertex> small_cover_embed(const Graph& f, std::span<const Vertex> cover,
                                      std::span<const Vertex> stable, int c);

// Throws CoverTooLarge when the cover exceeds 10c|V|/d.
CompactorOutput stable_set_output(const Graph& h, const CompactorParams& p,
                                  std::span<const Vertex> protected_vertices);

// Throws PreconditionViolation when h has more than 2c|V| edges or more
// than five protected vertices.
CompactorOutput low_density_compactor(const Graph& h, const CompactorParams& p,
                                      std::span<const Vertex> protected_vertices,
                                      VerifyLevel level = VerifyLevel::Full);

// Throws TooSmall, Not3Connected, or VerificationFailed if the produced
// output does not pass verify_output at the requested level.
CompactorOutput compactor(const Graph& h, std::span<const Vertex> protected_vertices, const CompactorParams& p,
                          VerifyLevel level = VerifyLevel::Full);

struct CompactionStep {
  int vertices = 0, edges = 0;  // of the graph the step was applied to
  CompactorOutput output;
  double shrink = 0;  // 1 - (n' + m') / (n + m)
};

struct CompactionSequence {
  enum class Status { Done, ShrinkBelowTarget };
  Status status = Status::Done;
  Graph start;
  MinorJournal journal;
  std::vector<CompactionStep> steps;
  std::optional<CompactorOutput> stalled;  // the rejected output when the target was missed
  Graph last;
  std::vector<Vertex> protected_last;

  std::size_t length() const { return steps.size() + 1; }  // number of graphs
};

const char* to_string(CompactionSequence::Status s);

CompactionSequence iterative_compactor(const Graph& t, std::span<const Vertex> protected_vertices,
                                       const CompactorParams& p, VerifyLevel level = VerifyLevel::Full);

}  // namespace tricompact
