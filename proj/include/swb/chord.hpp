#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "swb/graph.hpp"

namespace swb {

// Twisted chord datum of rank N: a pair-partition of {1..2N} with a Z2 twist
// per arc. Arcs are stored sorted by lower endpoint ("first appearance from
// bottom to top"), twists aligned with arcs.
struct tcd {
  int rank = 0;
  std::vector<edge> arcs;
  std::vector<int> twists;

  tcd() = default;
  tcd(int n, std::vector<edge> a, std::vector<int> tw);

  int points() const { return 2 * rank; }
  int arc_index_of(int point) const;                  // UnknownArc if outside
  int partner(int point) const;
  int twist_of_point(int point) const { return twists[arc_index_of(point)]; }
  bool has_arc(int a, int b) const;
  bool orientable() const;
  bool operator==(const tcd&) const = default;
  auto operator<=>(const tcd&) const = default;
};

// Named data: the prime factors of the caravan decomposition.
tcd mob_tcd();
tcd ann_tcd();
tcd tor_tcd();
tcd empty_tcd();

// Permutations in one-line notation over {1..2N}: perm[i-1] = image of i.
using perm = std::vector<int>;
perm identity_perm(int n2);
perm omega_perm(int rank);   // order reversing, i -> 2N+1-i
perm cycle_perm(int rank);   // (2N 2N-1 ... 2 1): i -> i-1, 1 -> 2N
perm compose_perms(const perm& outer, const perm& inner);  // outer . inner
perm invert_perm(const perm& p);

tcd permute(const perm& sigma, const tcd& t);
tcd star(const tcd& t);

// A single chord slide: (site, direction).
struct slide_move {
  int site = 0;
  int dir = 0;  // +1 up, -1 down
  bool operator==(const slide_move&) const = default;
};

bool slide_admissible(const tcd& t, int site, int dir);

// The slide permutation of an admissible pair (the explicit four-case cycle);
// nullopt when the pair is not admissible.
std::optional<perm> slide_perm(const tcd& t, int site, int dir);

// Chord slide; acts as the identity on non-admissible pairs. SiteOutOfRange
// when the site is outside {1..2N}.
tcd chord_slide(const tcd& t, int site, int dir);
// Strict variant: NotAdmissible on non-admissible input.
tcd chord_slide_strict(const tcd& t, int site, int dir);

// The move undoing an admissible slide: (sigma(i), eps') with eps' = -eps on
// untwisted target arcs and eps' = eps on twisted ones.
slide_move inverse_slide(const tcd& t, int site, int dir);

tcd apply_moves(const tcd& t, const std::vector<slide_move>& moves);

// Boundary graph on {1..2N} x {+-1}; vertex (i,e) is encoded as 4i+e so the
// integer order matches the diagrammatic bottom-to-top order. The closed
// variant adds the two cap edges at (0,+1) and (2N+1,-1).
int boundary_vertex_id(int point, int side);
ordered_graph boundary_graph(const tcd& t, bool closed = false);
int boundary_component_count(const tcd& t);

// Vertical juxtaposition (t1 at the bottom) and insertion at height d.
tcd juxtapose(const tcd& t2, const tcd& t1);
tcd insert_tcd(const tcd& t2, int d, const tcd& t1);
// Inverse view: does t split as outer #_d inner for this inner block?
bool is_insertion_of(const tcd& t, int d, const tcd& inner, tcd* outer = nullptr);

struct macro_result {
  tcd result;
  std::vector<slide_move> moves;
};

// Evacuation of sites d1..d2 (dir=+1 upward, -1 downward), built iteratively
// with the running permutation. IndexOutOfRange on bad bounds.
macro_result evacuation(const tcd& t, int dir, int d1, int d2);

// Boundary slide of a site over an inserted block. The combined datum must
// equal insert(outer, d, inner) (NotAnInsertion otherwise). dir=-1 moves the
// insertion height d -> d+1, dir=+1 moves d -> d-1.
macro_result boundary_slide_seq(const tcd& combined, int dir, int d, const tcd& inner);

// Move lists alone (positions depend only on d and the inner block).
std::vector<slide_move> bs_down_moves(int d, const tcd& inner);
std::vector<slide_move> bs_up_moves(int d, const tcd& inner, int total_rank);

struct intersection_matrix {
  int size = 0;
  std::vector<std::vector<int>> entries;  // GF(2), symmetric
  std::vector<edge> arc_order;            // arcs sorted by first appearance
};

intersection_matrix im_of(const tcd& t);
int gf2_nullity(const intersection_matrix& m);

// Surface type (b,g,t): caravan has b annuli, g tori, t <= 2 Moebius bands;
// realized by rank N iff 2g + t + b = N.
struct surface_type {
  int b = 0;
  int g = 0;
  int t = 0;
  bool operator==(const surface_type&) const = default;
};

surface_type classify_type(const tcd& t);
tcd caravan_tcd(const surface_type& st);

struct caravan_result {
  surface_type type;
  std::vector<slide_move> trace;  // replaying on the input yields the caravan
};

caravan_result caravan_normalize(const tcd& t);

// The slide sequence of the Moeb#Moeb#Moeb -> Moeb#Tor rewrite, shifted so the
// three bands sit at points 2*offset+1 .. 2*offset+6.
std::vector<slide_move> mob3_rewrite_moves(int offset, int total_rank);

int width_of(const tcd& t, const edge& arc);

// One boundary component <=> invertible intersection matrix; both are
// computed and must agree.
bool is_in_tc_star(const tcd& t);

std::uint64_t tc_count(int rank);          // 2^N (2N-1)!!
std::uint64_t tc_orientable_count(int rank);  // (2N-1)!!

// All rank-N data in a deterministic order. CapExceeded above the cap.
std::vector<tcd> enumerate_tcd(int rank, int cap = 5);
std::vector<std::vector<edge>> enumerate_pairings(int n_points);

}  // namespace swb
