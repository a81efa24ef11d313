#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swb/chord.hpp"
#include "swb/graph.hpp"

namespace swb {

// A vertex of a frame: level 0 is the southern edge, levels 1..2N the band
// intervals, level 2N+1 the northern edge. Slots start at 1; the vertex order
// runs anticlockwise, so northern slots are ordered downwards.
struct frame_vertex {
  int level = 0;
  int slot = 0;
  bool operator==(const frame_vertex&) const = default;
  auto operator<=>(const frame_vertex&) const = default;  // plain lexicographic
};

using vertex_pair = std::pair<frame_vertex, frame_vertex>;

// Frame: a one-boundary chord datum plus strand multiplicities on each band
// and the two boundary edges.
struct frame {
  tcd t;
  int f_south = 0;
  int f_north = 0;
  std::vector<int> f_arcs;  // aligned with t.arcs

  frame() = default;
  frame(tcd t_, int south, int north, std::vector<int> f);

  int north_level() const { return t.points() + 1; }
  int f_level(int level) const;
  int complexity() const;
  int vertex_count() const { return f_south + f_north + 2 * complexity(); }

  // true order position: levels ascend, slots ascend except on the northern
  // edge where they descend
  bool before(const frame_vertex& a, const frame_vertex& b) const;
  std::vector<frame_vertex> vertex_list() const;  // in order
  int vertex_rank(const frame_vertex& v) const;

  bool is_internal(const frame_vertex& v) const {
    return v.level >= 1 && v.level <= t.points();
  }
  frame_vertex iota(const frame_vertex& v) const;  // NotInternal on boundary

  bool operator==(const frame&) const = default;
};

frame star(const frame& f);
frame juxtapose(const frame& f2, const frame& f1);
frame insert_frame(const frame& f2, int d, const frame& f1);

// SWB datum: a frame together with a crossingless pairing of its vertices.
struct swb_datum {
  frame fr;
  std::vector<vertex_pair> pairs;  // canonical: (u,v) with u before v, sorted

  swb_datum() = default;
  swb_datum(frame f, std::vector<vertex_pair> p);

  std::pair<int, int> type() const { return {fr.f_south, fr.f_north}; }
  frame_vertex partner(const frame_vertex& v) const;
  bool has_pair(const frame_vertex& a, const frame_vertex& b) const;
  bool operator==(const swb_datum&) const = default;
};

// Compact canonical encoding; equal strings iff equal data.
std::string canonical_key(const swb_datum& th);

// Curve graph on vertex ranks 0..|V|-1: the pairing plus the band edges.
ordered_graph curve_graph(const swb_datum& th);

// Complement graph on the half-slot vertices.
ordered_graph complement_graph(const swb_datum& th);
int complement_component_count(const swb_datum& th);

struct component_info {
  std::vector<frame_vertex> vertices;  // in order
  bool external = false;
  bool fully_external = false;
  int twist = 0;
  bool separating = false;
};

// Components of the curve graph in order of least vertex, fully classified.
std::vector<component_info> classify_components(const swb_datum& th);
// Cheap variant without the separating computation.
std::vector<component_info> components_basic(const swb_datum& th);
bool has_internal_components(const swb_datum& th);

swb_datum delete_component(const swb_datum& th, const std::vector<frame_vertex>& comp);
// Delete all components except the given one.
swb_datum restrict_to_component(const swb_datum& th, const std::vector<frame_vertex>& comp);

swb_datum star(const swb_datum& th);

struct juxtapose_result {
  swb_datum datum;
  int linking = 0;
};

// Vertical stacking: th2 on top of th1 (TypeMismatch unless the glued edges
// agree); the linking number counts closed components swallowed by the glue.
juxtapose_result juxtapose(const swb_datum& th2, const swb_datum& th1);

struct insertion_parts {
  swb_datum inner;                          // no fully external components
  frame outer_frame;
  std::vector<std::pair<frame_vertex, frame_vertex>> embed;  // inner vertex -> host vertex
};

// Splits th across tcd = insert(outer, d, inner_tcd); NotAnInsertion otherwise.
insertion_parts insertion_decompose(const swb_datum& th, int d, const tcd& inner_tcd);

// Splits th across a juxtaposition of its chord datum at rank n1;
// NotJuxtaposable when the datum does not split or a factor leaves TC*.
std::pair<swb_datum, swb_datum> factorize(const swb_datum& th, int n1);

}  // namespace swb
