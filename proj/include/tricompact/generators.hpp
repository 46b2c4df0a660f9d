#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tricompact/graph.hpp"

namespace tricompact::gen {

using Rng = std::mt19937_64;

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);  // sides 0..a-1 and a..a+b-1
Graph wheel(int rim);                    // hub 0, rim 1..rim
Graph prism();
Graph octahedron();

// Each edge present independently with probability p.
Graph gnp(int n, double p, Rng& rng);
Graph gnm(int n, int m, Rng& rng);

// Random 3-connected graph: from K4, splitting high-degree vertices and
// adding edges until n vertices and roughly extra_edges more edges than 3n/2.
Graph random_3connected(int n, int extra_edges, Rng& rng);

// Stacked triangulation (repeated face subdivision) followed by random
// simplicity-preserving edge flips.
Graph triangulation(int n, int flips, Rng& rng);

// Wheel plus random chords until the average degree exceeds avg_degree.
Graph dense_3connected(int n, double avg_degree, Rng& rng);

// K_{k,3} with every vertex of the k side replaced by a triangle.
Graph bipartite_triangles(int k);

// Replaces each listed degree-3 vertex by a triangle with one corner per
// former neighbour. The new corners get fresh ids; the old ids become holes.
Graph truncate(const Graph& g, const std::vector<Vertex>& degree3);

// A 3-connected core on core_n vertices plus k new degree-3 vertices, each
// attached to three random core vertices.
Graph degree3_attachment(int core_n, int k, Rng& rng);

// Glue `leaves` triangles onto the edges of a central triangle chain so the
// strong 2-cut tree is a star.
Graph triangle_star(int leaves);

// A chain of K4s joined along 2-cuts: many degree-two tree nodes in a row.
Graph k4_chain(int links);

struct RootedGraph {
  Graph graph;
  Vertex s1, t1, s2, t2;
};

// A triangulation minus one vertex, with the terminals in the order s1, s2,
// t1, t2 around the resulting face, so the two paths never exist. Then
// `gadgets` random connected graphs of 1..gadget_max vertices are glued into
// random triangular faces, nested inside earlier gadgets at times.
RootedGraph separated_terminals(int core_n, int gadgets, int gadget_max, Rng& rng);

// Builds a named family member: path, cycle, complete, wheel, triangulation,
// random3, dense, bipartite_triangles, attachment.
Graph by_name(const std::string& family, int n, Rng& rng);

}  // namespace tricompact::gen
