#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "swb/error.hpp"

namespace swb {

using vertex_set = std::vector<int>;                 // strictly increasing
using edge = std::pair<int, int>;                    // (a,b) with a < b
using edge_set = std::set<edge>;

inline edge mk_edge(int a, int b) { return a < b ? edge{a, b} : edge{b, a}; }

// Simple undirected graph with totally ordered vertices. The vertex order is
// the integer order; order-preserving maps are rank relabelings.
struct ordered_graph {
  vertex_set vertices;
  edge_set edges;

  ordered_graph() = default;
  ordered_graph(vertex_set v, edge_set e);

  bool has_vertex(int v) const;
  std::size_t degree(int v) const;
  bool operator==(const ordered_graph&) const = default;
};

// G with the vertex order reversed, relabeled back onto an increasing id set
// (rank relabeling i -> -i -> ranks), so * is an involution up to order-iso.
ordered_graph reverse_order(const ordered_graph& g);

// Maximal connected subgraphs, each inheriting the ambient order, sorted by
// minimum vertex.
std::vector<ordered_graph> components(const ordered_graph& g);
int component_count(const ordered_graph& g);

// Vertex sets of components, same order as components().
std::vector<vertex_set> component_vertex_sets(const ordered_graph& g);

// Contraction of g on u: delete the neighbourhood graph of u, then join
// distinct vertices of the adjacency set of u that see a common piece of u.
// Vertex set of the result is exactly vertices(g) minus u.
ordered_graph contract(const ordered_graph& g, const vertex_set& u);

// |components(g)| - |components(g/u)|; always >= 0.
int index_of(const ordered_graph& g, const vertex_set& u);

// Pair-partition of a totally ordered ground set.
struct pair_partition {
  vertex_set ground;
  std::vector<edge> parts;  // each (m,M) with m < M, disjoint, covering ground

  pair_partition() = default;
  pair_partition(vertex_set g, std::vector<edge> p);
  bool operator==(const pair_partition&) const = default;
};

// Two parts cross if m(p) < m(q) < M(p) < M(q) in either order.
bool parts_cross(const edge& p, const edge& q);
bool is_crossingless(const pair_partition& p);

enum class piece_kind { path, cycle };

struct degree2_piece {
  piece_kind kind;
  vertex_set vertices;
  // For paths, the two endpoints in vertex order (a single vertex is a
  // length-0 path with both endpoints equal).
  std::pair<int, int> endpoints{0, 0};
};

struct degree2_classification {
  std::vector<degree2_piece> pieces;          // one per component, by min vertex
  std::vector<edge> endpoint_pairing;         // degree-1 vertices paired by component
};

// Requires max degree 2 (DegreeTooHigh otherwise); splits g into paths and
// cycles and pairs up the degree-1 vertices component-wise.
degree2_classification classify_degree_le2(const ordered_graph& g);

// Relabel by an injective map given as sorted (from -> to) pairs; vertices not
// listed keep their id. Used for order-preserving rank relabelings.
ordered_graph relabel(const ordered_graph& g, const std::vector<std::pair<int, int>>& map);

}  // namespace swb
