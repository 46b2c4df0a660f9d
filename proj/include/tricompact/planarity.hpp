#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tricompact/graph.hpp"

namespace tricompact {

// Faces are closed walks: consecutive entries (and last->first) are darts.
struct PlanarEmbedding {
  std::vector<std::vector<Vertex>> rotation;  // per vertex id; empty for dead ids
  std::vector<std::vector<Vertex>> faces;
  int outer_face = -1;
};

struct KuratowskiWitness {
  enum class Kind { K5, K33 };
  Kind kind = Kind::K5;
  std::vector<Vertex> centers;              // 5 or 6; for K33 the two sides are centers[0..2], [3..5]
  std::vector<std::vector<Vertex>> paths;   // center to center, 10 or 9 of them
};

using PlanarityResult = std::variant<PlanarEmbedding, KuratowskiWitness>;

PlanarityResult planarity(const Graph& g);
bool is_planar(const Graph& g);

// A K33 subdivision of a nonplanar 3-connected graph other than K5, built
// from the Kuratowski witness; nullopt when g is planar or K5.
std::optional<KuratowskiWitness> find_k33(const Graph& g);

// Faces of a rotation system. The successor of dart (u,v) is (v,w) with w
// following u in the rotation at v.
std::vector<std::vector<Vertex>> trace_faces(const Graph& g, const std::vector<std::vector<Vertex>>& rotation);

// Rotation matches the adjacency, the faces are exactly the traced ones and
// Euler's formula holds on every component with an edge.
bool verify_embedding(const Graph& g, const PlanarEmbedding& emb);
bool verify_kuratowski(const Graph& g, const KuratowskiWitness& w);

// Whether some face is exactly the triangle abc.
bool is_face_triangle(const PlanarEmbedding& emb, Vertex a, Vertex b, Vertex c);

}  // namespace tricompact
