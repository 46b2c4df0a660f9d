#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tricompact/graph.hpp"
#include "tricompact/planarity.hpp"

namespace tricompact {

// Two disjoint rooted paths: s1 to t1 and s2 to t2.
struct DrpInstance {
  Graph graph;
  Vertex s1 = kNoVertex, t1 = kNoVertex, s2 = kNoVertex, t2 = kNoVertex;

  DrpInstance() = default;
  // Throws BadTerminals unless the four terminals are distinct vertices of g.
  DrpInstance(Graph g, Vertex s1, Vertex t1, Vertex s2, Vertex t2);
};

struct AuxiliaryGraph {
  Graph graph;                  // G plus the hub and the terminal 4-cycle
  Vertex hub = kNoVertex;       // id_bound() of G
  std::array<Vertex, 5> roots;  // hub, s1, s2, t1, t2
  std::vector<Edge> added_cycle_edges;  // cycle edges that were not already in G
};

AuxiliaryGraph build_auxiliary(const DrpInstance& inst);

// The triconnected piece of the auxiliary graph holding the roots. Each
// virtual edge remembers a real path through the part it replaced.
struct RootGraph {
  Graph graph;
  std::array<Vertex, 5> roots;
  std::map<Edge, std::vector<Vertex>> lifts;  // virtual xy -> x..y in the auxiliary graph
};

RootGraph root_graph(const AuxiliaryGraph& aux);

struct CutOff {
  Triangle separator;             // sorted
  std::vector<Vertex> component;  // sorted
};

struct Reduction {
  Graph host;
  std::vector<Vertex> roots;
  std::vector<Vertex> vertices;  // kept vertices, sorted
  std::vector<CutOff> cutoffs;   // ordered by smallest component vertex
  Graph graph;                   // host on vertices plus a triangle on every separator
};

// The reduction of host that keeps exactly `keep`. Throws InvalidPayload if
// keep misses a root or some component of host - keep does not attach to
// exactly three kept vertices.
Reduction make_reduction(const Graph& host, std::span<const Vertex> roots, std::vector<Vertex> keep);

struct ReducibleCut {
  Triangle separator;
  std::vector<Vertex> component;
};

// Among 3-cuts of f with a component avoiding roots: smallest separator,
// then the largest such component. O(n^2 m).
std::optional<ReducibleCut> find_reducible_3cut(const Graph& f, std::span<const Vertex> roots);

// f minus the component, with the separator made a clique.
Graph reduce(const Graph& f, const Triangle& separator, std::span<const Vertex> component);

// Cut-offs at 3-cuts closest to the roots until none is left.
Reduction irreducible_reduction(const Graph& host, std::span<const Vertex> roots);

// For a host with no two paths: cut off only around K33 subdivisions until
// planar. Returns nullopt if a step finds no suitable cut.
std::optional<Reduction> minimal_planar_reduction(const Graph& host, std::span<const Vertex> roots);

enum class Strength { None, Strong, FerociouslyStrong, Undecided };

const char* to_string(Strength s);

// How one separator meets the split condition: two components share it,
// or its only component splits into connected halves each seeing all of it.
struct SeparatorWitness {
  Triangle separator;
  bool shared = false;
  std::vector<Vertex> red, yellow;
};

struct FerociousCheck {
  enum class Outcome { True, False, ComponentTooLarge };
  Outcome outcome = Outcome::True;
  std::vector<SeparatorWitness> witnesses;
  std::optional<Triangle> failed;  // first separator that is refuted or undecided
};

bool check_strong(const Reduction& r, const PlanarEmbedding& emb);

// Exhaustive partition search up to exhaustive_limit vertices per
// component, BFS-prefix splits beyond that.
FerociousCheck check_ferociously_strong(const Reduction& r, const PlanarEmbedding& emb, int exhaustive_limit = 20);

bool verify_witness(const Reduction& r, const SeparatorWitness& w);

struct DrpConfig {
  bool minimal_reduction = true;  // false keeps the classical irreducible reduction
  int exhaustive_limit = 20;
};

struct DrpCertificate {
  enum class Kind { TwoPaths, PlanarReduction };
  Kind kind = Kind::TwoPaths;
  std::vector<Vertex> p1, p2;

  Reduction reduction;
  PlanarEmbedding embedding;
  Strength strength = Strength::None;
  std::vector<SeparatorWitness> witnesses;

  bool feasible() const { return kind == Kind::TwoPaths; }
};

// Decision only: whether the two paths exist.
bool paths_exist(const DrpInstance& inst);

DrpCertificate solve(const DrpInstance& inst, const DrpConfig& config = {});

bool verify_certificate(const DrpInstance& inst, const DrpCertificate& cert);

}  // namespace tricompact
