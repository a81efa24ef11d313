#pragma once

#include <string>
#include <vector>

#include "swb/diagram.hpp"

namespace swb {

// Pull-through at (level, slot): removes the turn-back {(i,a),(i,a+1)} by
// contracting it with its band image; identity when not applicable.
swb_datum pull_through(const swb_datum& th, int level, int slot);

bool has_turn_backs(const swb_datum& th);

// Unique turn-back-free representative of the isotopy class.
// HasInternalComponents when the curve graph has internal components.
swb_datum isotopy_reduce(const swb_datum& th);

// Handle slide at (site, dir): chord-slides the frame, transfers multiplicity
// onto the target band and reroutes the strands; identity if not admissible.
swb_datum handle_slide(const swb_datum& th, int site, int dir);

swb_datum apply_slide_moves(const swb_datum& th, const std::vector<slide_move>& moves);

enum class equiv_verdict { equivalent, distinct, undecided };

struct equiv_result {
  equiv_verdict verdict = equiv_verdict::undecided;
  int budget_used = 0;     // slides on the witnessing path, when equivalent
  long nodes_explored = 0;
};

struct equiv_options {
  int budget = 10;
  long max_nodes = 2000000;
};

// Decides handle-slide equivalence by invariants plus bidirectional search
// over isotopy-reduced forms. Inputs must have equal type and no internal
// components.
equiv_result hs_equivalent(const swb_datum& a, const swb_datum& b, const equiv_options& opt);
equiv_result hs_equivalent(const swb_datum& a, const swb_datum& b, int budget);

struct canonical_rep {
  swb_datum rep;
  std::string key;
  int budget = 0;
};

// Budget-limited descent to a locally minimal serialized form in the orbit.
// Equal keys always certify equivalence; the key can only improve when the
// budget grows.
canonical_rep canonicalize(const swb_datum& th, int budget);

// Boundary-parallel strands on the left and right edge.
swb_datum insert_left(const swb_datum& th);
swb_datum insert_right(const swb_datum& th);

// Sf: trades the top-most northern endpoint for a southern one (type (n,m) ->
// (n+1,m-1)); EmptyNorth when m = 0.
swb_datum shift(const swb_datum& th);

// Generator data.
swb_datum zero_datum();                  // the empty square
swb_datum id_datum(int n);
swb_datum cup_datum(int n);              // Sq(0,2n), nested
swb_datum cap_datum(int n);              // Sq(2n,0), nested
swb_datum tor_generator(int l, int m);   // torus crossing, Sq_Tor(l+m,l+m)
swb_datum mob_generator(int n);          // reversal through the twisted band, Sq_Moeb(n,n)

// Block rewrites along an inserted chord block (the two evacuation forms and
// the downward boundary slide), executed as handle-slide macros followed by
// isotopy reduction. SetupViolated when the preconditions fail.
swb_datum rewrite_lemma1(const swb_datum& th, int d, const tcd& inner);
swb_datum rewrite_lemma2(const swb_datum& th, int d, const tcd& inner);
swb_datum rewrite_lemma3(const swb_datum& th, int d, const tcd& inner);

// Decomposes (up to handle-slide equivalence) into rank-0 data and blocks of
// the forms I_L^a(T_{l,m}) and I_L^b(M_n), listed bottom-up; juxtaposing the
// list in order reassembles a datum equivalent to th with zero linking.
std::vector<swb_datum> factor_generators(const swb_datum& th);

}  // namespace swb
