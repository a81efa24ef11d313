#include "swb/chord.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace swb {

tcd::tcd(int n, std::vector<edge> a, std::vector<int> tw)
    : rank(n), arcs(std::move(a)), twists(std::move(tw)) {
  require(rank >= 0, "BadDatum", "rank must be non-negative");
  require(arcs.size() == static_cast<std::size_t>(rank), "BadDatum",
          "rank-" + std::to_string(rank) + " datum needs " + std::to_string(rank) + " arcs");
  require(twists.size() == arcs.size(), "BadDatum", "twists must be aligned with arcs");
  // sort by lower endpoint, carrying twists along
  std::vector<std::size_t> ord(arcs.size());
  std::iota(ord.begin(), ord.end(), 0u);
  for (auto& [a2, b2] : arcs)
    if (a2 > b2) std::swap(a2, b2);
  std::sort(ord.begin(), ord.end(),
            [&](std::size_t x, std::size_t y) { return arcs[x] < arcs[y]; });
  std::vector<edge> sa;
  std::vector<int> st;
  for (auto k : ord) {
    sa.push_back(arcs[k]);
    st.push_back(twists[k] & 1);
  }
  arcs = std::move(sa);
  twists = std::move(st);
  std::vector<int> seen;
  for (auto& [x, y] : arcs) {
    seen.push_back(x);
    seen.push_back(y);
  }
  std::sort(seen.begin(), seen.end());
  std::vector<int> want(2 * rank);
  std::iota(want.begin(), want.end(), 1);
  require(seen == want, "BadDatum", "arcs must partition {1..2N} into pairs");
}

int tcd::arc_index_of(int point) const {
  for (std::size_t k = 0; k < arcs.size(); k++)
    if (arcs[k].first == point || arcs[k].second == point) return static_cast<int>(k);
  fail("UnknownArc", "point " + std::to_string(point) + " outside {1..2N}");
}

int tcd::partner(int point) const {
  const auto& a = arcs[arc_index_of(point)];
  return a.first == point ? a.second : a.first;
}

bool tcd::has_arc(int a, int b) const {
  edge e = mk_edge(a, b);
  return std::binary_search(arcs.begin(), arcs.end(), e);
}

bool tcd::orientable() const {
  return std::all_of(twists.begin(), twists.end(), [](int s) { return s == 0; });
}

tcd mob_tcd() { return tcd(1, {{1, 2}}, {1}); }
tcd ann_tcd() { return tcd(1, {{1, 2}}, {0}); }
tcd tor_tcd() { return tcd(2, {{1, 3}, {2, 4}}, {0, 0}); }
tcd empty_tcd() { return tcd(0, {}, {}); }

perm identity_perm(int n2) {
  perm p(n2);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

perm omega_perm(int rank) {
  perm p(2 * rank);
  for (int i = 1; i <= 2 * rank; i++) p[i - 1] = 2 * rank + 1 - i;
  return p;
}

perm cycle_perm(int rank) {
  int n2 = 2 * rank;
  perm p(n2);
  for (int i = 2; i <= n2; i++) p[i - 1] = i - 1;
  if (n2 > 0) p[0] = n2;
  return p;
}

perm compose_perms(const perm& outer, const perm& inner) {
  require(outer.size() == inner.size(), "BadPermutation", "size mismatch");
  perm p(outer.size());
  for (std::size_t i = 0; i < p.size(); i++) p[i] = outer[inner[i] - 1];
  return p;
}

perm invert_perm(const perm& p) {
  perm q(p.size());
  for (std::size_t i = 0; i < p.size(); i++) q[p[i] - 1] = static_cast<int>(i) + 1;
  return q;
}

tcd permute(const perm& sigma, const tcd& t) {
  require(static_cast<int>(sigma.size()) == t.points(), "BadPermutation",
          "permutation must act on {1..2N}");
  perm check = sigma;
  std::sort(check.begin(), check.end());
  require(check == identity_perm(t.points()), "BadPermutation", "not a bijection");
  std::vector<edge> arcs;
  for (const auto& [a, b] : t.arcs) arcs.push_back(mk_edge(sigma[a - 1], sigma[b - 1]));
  return tcd(t.rank, arcs, t.twists);
}

tcd star(const tcd& t) { return permute(omega_perm(t.rank), t); }

bool slide_admissible(const tcd& t, int site, int dir) {
  int tgt = site + dir;
  if (site < 1 || site > t.points()) return false;
  if (tgt < 1 || tgt > t.points()) return false;
  return !t.has_arc(site, tgt);
}

std::optional<perm> slide_perm(const tcd& t, int site, int dir) {
  if (!slide_admissible(t, site, dir)) return std::nullopt;
  int tgt = site + dir;
  const auto& q = t.arcs[t.arc_index_of(tgt)];
  int sq = t.twists[t.arc_index_of(tgt)];
  int mq = q.first, Mq = q.second;
  perm p = identity_perm(t.points());
  auto shift_down = [&](int from, int to) {  // cycle (to to-1 ... from): x->x-1, from->to
    for (int x = from + 1; x <= to; x++) p[x - 1] = x - 1;
    p[from - 1] = to;
  };
  auto shift_up = [&](int from, int to) {  // cycle (from from+1 ... to): x->x+1, to->from
    for (int x = from; x < to; x++) p[x - 1] = x + 1;
    p[to - 1] = from;
  };
  if (tgt == mq) {
    if ((dir == 1 && sq == 0) || (dir == -1 && sq == 1))
      shift_down(site, Mq);       // (M(q) ... i)
    else
      shift_down(site, Mq - 1);   // (M(q)-1 ... i)
  } else {
    if ((dir == 1 && sq == 0) || (dir == -1 && sq == 1))
      shift_up(mq + 1, site);     // (m(q)+1 ... i)
    else
      shift_up(mq, site);         // (m(q) ... i)
  }
  return p;
}

tcd chord_slide(const tcd& t, int site, int dir) {
  require(site >= 1 && site <= t.points(), "SiteOutOfRange",
          "site " + std::to_string(site) + " outside {1..2N}");
  require(dir == 1 || dir == -1, "SiteOutOfRange", "direction must be +1 or -1");
  auto sig = slide_perm(t, site, dir);
  if (!sig) return t;
  int qi = t.arc_index_of(site + dir);
  int pi = t.arc_index_of(site);
  std::vector<int> tw = t.twists;
  tw[pi] = (tw[pi] + t.twists[qi]) & 1;
  std::vector<edge> arcs;
  for (const auto& [a, b] : t.arcs) arcs.push_back(mk_edge((*sig)[a - 1], (*sig)[b - 1]));
  return tcd(t.rank, arcs, tw);
}

tcd chord_slide_strict(const tcd& t, int site, int dir) {
  require(slide_admissible(t, site, dir), "NotAdmissible",
          "(" + std::to_string(site) + "," + std::to_string(dir) + ") is not admissible");
  return chord_slide(t, site, dir);
}

slide_move inverse_slide(const tcd& t, int site, int dir) {
  auto sig = slide_perm(t, site, dir);
  require(sig.has_value(), "NotAdmissible",
          "(" + std::to_string(site) + "," + std::to_string(dir) + ") is not admissible");
  int sq = t.twists[t.arc_index_of(site + dir)];
  return {(*sig)[site - 1], sq == 0 ? -dir : dir};
}

tcd apply_moves(const tcd& t, const std::vector<slide_move>& moves) {
  tcd cur = t;
  for (const auto& m : moves) cur = chord_slide(cur, m.site, m.dir);
  return cur;
}

int boundary_vertex_id(int point, int side) { return 4 * point + side; }

ordered_graph boundary_graph(const tcd& t, bool closed) {
  vertex_set vs;
  edge_set es;
  int n2 = t.points();
  for (int i = 1; i <= n2; i++) {
    vs.push_back(boundary_vertex_id(i, -1));
    vs.push_back(boundary_vertex_id(i, +1));
  }
  for (int i = 1; i < n2; i++)
    es.insert(mk_edge(boundary_vertex_id(i, +1), boundary_vertex_id(i + 1, -1)));
  for (std::size_t k = 0; k < t.arcs.size(); k++) {
    auto [i, j] = t.arcs[k];
    if (t.twists[k] == 0) {
      es.insert(mk_edge(boundary_vertex_id(i, +1), boundary_vertex_id(j, -1)));
      es.insert(mk_edge(boundary_vertex_id(i, -1), boundary_vertex_id(j, +1)));
    } else {
      es.insert(mk_edge(boundary_vertex_id(i, +1), boundary_vertex_id(j, +1)));
      es.insert(mk_edge(boundary_vertex_id(i, -1), boundary_vertex_id(j, -1)));
    }
  }
  if (closed) {
    vs.push_back(boundary_vertex_id(0, +1));
    vs.push_back(boundary_vertex_id(n2 + 1, -1));
    if (n2 > 0) {
      es.insert(mk_edge(boundary_vertex_id(0, +1), boundary_vertex_id(1, -1)));
      es.insert(mk_edge(boundary_vertex_id(n2, +1), boundary_vertex_id(n2 + 1, -1)));
    } else {
      es.insert(mk_edge(boundary_vertex_id(0, +1), boundary_vertex_id(1, -1)));
    }
  }
  std::sort(vs.begin(), vs.end());
  return ordered_graph(std::move(vs), std::move(es));
}

int boundary_component_count(const tcd& t) {
  if (t.rank == 0) return 1;  // the bare square has one boundary circle
  return component_count(boundary_graph(t, false));
}

tcd juxtapose(const tcd& t2, const tcd& t1) { return insert_tcd(t2, 0, t1); }

tcd insert_tcd(const tcd& t2, int d, const tcd& t1) {
  require(d >= 0 && d <= t2.points(), "HeightOutOfRange",
          "insertion height " + std::to_string(d) + " outside 0..2N");
  auto od = [&](int x) { return x <= d ? x : x + t1.points(); };
  std::vector<edge> arcs;
  std::vector<int> tw;
  for (std::size_t k = 0; k < t1.arcs.size(); k++) {
    arcs.push_back({t1.arcs[k].first + d, t1.arcs[k].second + d});
    tw.push_back(t1.twists[k]);
  }
  for (std::size_t k = 0; k < t2.arcs.size(); k++) {
    arcs.push_back({od(t2.arcs[k].first), od(t2.arcs[k].second)});
    tw.push_back(t2.twists[k]);
  }
  return tcd(t1.rank + t2.rank, arcs, tw);
}

bool is_insertion_of(const tcd& t, int d, const tcd& inner, tcd* outer) {
  int n1 = inner.points();
  if (d < 0 || d + n1 > t.points()) return false;
  std::vector<edge> outer_arcs;
  std::vector<int> outer_tw;
  std::vector<edge> block_arcs;
  std::vector<int> block_tw;
  auto od_inv = [&](int x) { return x <= d ? x : x - n1; };
  for (std::size_t k = 0; k < t.arcs.size(); k++) {
    auto [a, b] = t.arcs[k];
    bool ia = a > d && a <= d + n1, ib = b > d && b <= d + n1;
    if (ia != ib) return false;
    if (ia) {
      block_arcs.push_back({a - d, b - d});
      block_tw.push_back(t.twists[k]);
    } else {
      outer_arcs.push_back({od_inv(a), od_inv(b)});
      outer_tw.push_back(t.twists[k]);
    }
  }
  tcd block(inner.rank, block_arcs, block_tw);
  if (!(block == inner)) return false;
  if (outer) *outer = tcd(t.rank - inner.rank, outer_arcs, outer_tw);
  return true;
}

macro_result evacuation(const tcd& t, int dir, int d1, int d2) {
  require(dir == 1 || dir == -1, "IndexOutOfRange", "direction must be +1 or -1");
  require(1 <= d1 && d1 <= d2 && d2 <= t.points(), "IndexOutOfRange",
          "evacuation bounds outside {1..2N}");
  macro_result out{t, {}};
  perm tau = identity_perm(t.points());
  auto step = [&](int original_site) {
    int site = tau[original_site - 1];
    out.moves.push_back({site, dir});
    if (auto sig = slide_perm(out.result, site, dir)) {
      out.result = chord_slide(out.result, site, dir);
      tau = compose_perms(*sig, tau);
    }
  };
  if (dir == 1)
    for (int d = d2; d >= d1; d--) step(d);
  else
    for (int d = d1; d <= d2; d++) step(d);
  return out;
}

namespace {

// The line of the boundary graph from (1,-1) to (2N,+1), recorded as the
// vertices reached by arc edges: alternating arc edge, vertical edge.
std::vector<std::pair<int, int>> gamma_path_pairs(const tcd& t) {
  std::vector<std::pair<int, int>> pairs;
  if (t.rank == 0) return pairs;
  int pt = 1, side = -1;
  for (;;) {
    int k = t.arc_index_of(pt);
    int nxt = t.partner(pt);
    int nside = t.twists[k] == 1 ? side : -side;
    if (nxt == t.points() && nside == +1) break;
    pairs.push_back({nxt, nside});
    // vertical edge from (i,e) to (i+e,-e)
    pt = nxt + nside;
    side = -nside;
  }
  return pairs;
}

}  // namespace

std::vector<slide_move> bs_down_moves(int d, const tcd& inner) {
  std::vector<slide_move> moves;
  if (inner.rank == 0) return moves;
  moves.push_back({d + inner.points() + 1, -1});
  auto pairs = gamma_path_pairs(inner);
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it)
    moves.push_back({d + it->first + (it->second + 1) / 2, -it->second});
  return moves;
}

std::vector<slide_move> bs_up_moves(int d, const tcd& inner, int total_rank) {
  // conjugate of the downward slide through the order-reversing permutation
  std::vector<slide_move> moves;
  if (inner.rank == 0) return moves;
  int host2 = 2 * (total_rank - inner.rank);
  auto down = bs_down_moves(host2 - d, star(inner));
  for (const auto& m : down) moves.push_back({2 * total_rank + 1 - m.site, -m.dir});
  return moves;
}

macro_result boundary_slide_seq(const tcd& combined, int dir, int d, const tcd& inner) {
  tcd outer;
  require(is_insertion_of(combined, d, inner, &outer), "NotAnInsertion",
          "combined datum is not outer #_d inner for the given block");
  int n2outer = outer.points();
  std::vector<slide_move> moves;
  if (dir == -1) {
    require(0 <= d && d < n2outer, "IndexOutOfRange", "downward slide needs 0 <= d < 2N2");
    moves = bs_down_moves(d, inner);
  } else if (dir == 1) {
    require(0 < d && d <= n2outer, "IndexOutOfRange", "upward slide needs 0 < d <= 2N2");
    moves = bs_up_moves(d, inner, combined.rank);
  } else {
    fail("IndexOutOfRange", "direction must be +1 or -1");
  }
  return {apply_moves(combined, moves), moves};
}

intersection_matrix im_of(const tcd& t) {
  intersection_matrix m;
  m.size = t.rank;
  m.arc_order = t.arcs;  // stored sorted by lower endpoint already
  m.entries.assign(t.rank, std::vector<int>(t.rank, 0));
  for (int i = 0; i < t.rank; i++) {
    m.entries[i][i] = t.twists[i];
    for (int j = i + 1; j < t.rank; j++)
      m.entries[i][j] = m.entries[j][i] = parts_cross(t.arcs[i], t.arcs[j]) ? 1 : 0;
  }
  return m;
}

int gf2_nullity(const intersection_matrix& m) {
  std::vector<std::uint64_t> rows(m.size, 0);
  require(m.size <= 64, "CapExceeded", "matrix too large for GF(2) elimination");
  for (int i = 0; i < m.size; i++)
    for (int j = 0; j < m.size; j++)
      if (m.entries[i][j]) rows[i] |= (1ull << j);
  int rank = 0;
  for (int col = 0; col < m.size; col++) {
    int pivot = -1;
    for (int r = rank; r < m.size; r++)
      if (rows[r] >> col & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < m.size; r++)
      if (r != rank && (rows[r] >> col & 1)) rows[r] ^= rows[rank];
    rank++;
  }
  return m.size - rank;
}

surface_type classify_type(const tcd& t) {
  int b = gf2_nullity(im_of(t));
  int rest = t.rank - b;
  surface_type st;
  st.b = b;
  if (t.orientable()) {
    require(rest % 2 == 0, "ParityViolation",
            "orientable datum with odd handle count; internal bug");
    st.t = 0;
    st.g = rest / 2;
  } else {
    st.t = (rest % 2 == 1) ? 1 : 2;
    st.g = (rest - st.t) / 2;
  }
  return st;
}

tcd caravan_tcd(const surface_type& st) {
  std::vector<edge> arcs;
  std::vector<int> tw;
  int at = 0;
  for (int k = 0; k < st.b; k++) {
    arcs.push_back({at + 1, at + 2});
    tw.push_back(0);
    at += 2;
  }
  for (int k = 0; k < st.g; k++) {
    arcs.push_back({at + 1, at + 3});
    arcs.push_back({at + 2, at + 4});
    tw.push_back(0);
    tw.push_back(0);
    at += 4;
  }
  for (int k = 0; k < st.t; k++) {
    arcs.push_back({at + 1, at + 2});
    tw.push_back(1);
    at += 2;
  }
  return tcd(st.b + 2 * st.g + st.t, arcs, tw);
}

std::vector<slide_move> mob3_rewrite_moves(int offset, int total_rank) {
  int k2 = 2 * offset;
  std::vector<slide_move> moves = {
      {k2 + 2, +1}, {k2 + 5, -1}, {k2 + 2, +1}, {k2 + 4, -1}};
  auto tail = bs_up_moves(k2 + 1, tor_tcd(), total_rank);
  moves.insert(moves.end(), tail.begin(), tail.end());
  return moves;
}

namespace {

// points a..b of t as a standalone datum; requires the range to be arc-closed
tcd sub_block(const tcd& t, int a, int b) {
  std::vector<edge> arcs;
  std::vector<int> tw;
  for (std::size_t k = 0; k < t.arcs.size(); k++) {
    auto [x, y] = t.arcs[k];
    bool ix = x >= a && x <= b, iy = y >= a && y <= b;
    require(ix == iy, "NotAnInsertion", "block is not arc-closed");
    if (ix) {
      arcs.push_back({x - a + 1, y - a + 1});
      tw.push_back(t.twists[k]);
    }
  }
  return tcd((b - a + 1) / 2, arcs, tw);
}

struct caravan_worker {
  tcd cur;
  std::vector<slide_move> trace;

  void play(const std::vector<slide_move>& moves) {
    for (const auto& m : moves) {
      cur = chord_slide(cur, m.site, m.dir);
      trace.push_back(m);
    }
  }
  void play_one(int site, int dir) { play({{site, dir}}); }

  int other_end(int pt) const { return cur.partner(pt); }

  // Extracts every twisted arc as a Moebius block floated to the top.
  // Returns the count of extracted blocks.
  int extract_mobs() {
    int mobs = 0;
    for (;;) {
      int active_hi = cur.points() - 2 * mobs;
      int best = -1;
      for (std::size_t k = 0; k < cur.arcs.size(); k++)
        if (cur.twists[k] == 1 && cur.arcs[k].second <= active_hi)
          if (best < 0 || cur.arcs[k].second > cur.arcs[best].second) best = static_cast<int>(k);
      if (best < 0) return mobs;
      auto [i, j] = cur.arcs[best];
      if (j > i + 1) {
        auto ev = evacuation(cur, +1, i + 1, j - 1);
        play(ev.moves);
      }
      // the twisted arc now sits at {j-1, j}; float it to the active top
      for (int h = j - 2; h < active_hi - 2; h++) play(bs_down_moves(h, mob_tcd()));
      mobs++;
    }
  }

  // Normalizes the orientable region 1..hi into Ann/Tor blocks bottom-up.
  // Returns the block kinds in bottom-up order (1 = Ann, 2 = Tor).
  std::vector<int> normalize_orientable(int hi) {
    std::vector<int> blocks;
    int lo = 1;
    while (lo <= hi) {
      int j = other_end(lo);
      if (j == lo + 1) {
        blocks.push_back(1);
        lo += 2;
        continue;
      }
      bool crossed = false;
      edge p{lo, j};
      for (const auto& a : cur.arcs)
        if (a.second <= hi && parts_cross(p, a)) crossed = true;
      if (!crossed) {
        // closed interior block floats up one step, leaving an adjacent Ann
        play(bs_down_moves(lo, sub_block(cur, lo + 1, j - 1)));
        blocks.push_back(1);
        lo += 2;
        continue;
      }
      // rotate the interior of p until the site above lo pierces p
      while (!parts_cross(p, {std::min(lo + 1, other_end(lo + 1)),
                              std::max(lo + 1, other_end(lo + 1))}))
        play_one(lo + 1, -1);
      int z = other_end(lo + 1);
      // expel the rest of p's interior upward over the piercing arc
      while (other_end(lo) > lo + 2) play_one(lo + 2, -1);
      // walk the interleaved pair upward until it is a contiguous Tor block
      int c = lo;
      while (z > c + 3) {
        play_one(c + 3, -1);
        c++;
      }
      // sink the Tor block back to the floor
      for (int d = c - 1; d >= lo; d--) play(bs_up_moves(d, tor_tcd(), cur.rank));
      blocks.push_back(2);
      lo += 4;
    }
    return blocks;
  }

  // Bubble-sorts extracted Ann/Tor blocks so the annuli sit at the bottom.
  void sort_blocks(std::vector<int>& blocks) {
    for (;;) {
      bool moved = false;
      int pos = 0;  // points below the current block
      for (std::size_t k = 0; k + 1 < blocks.size(); k++) {
        int lower = blocks[k], upper = blocks[k + 1];
        if (lower == 2 && upper == 1) {
          tcd lower_tcd = tor_tcd();
          for (int step = 0; step < 2 * upper; step++)
            play(bs_down_moves(pos + step, lower_tcd));
          std::swap(blocks[k], blocks[k + 1]);
          moved = true;
        }
        pos += 2 * blocks[k];
      }
      if (!moved) return;
    }
  }
};

}  // namespace

caravan_result caravan_normalize(const tcd& t) {
  caravan_worker w{t, {}};
  surface_type want = classify_type(t);

  int mobs = w.extract_mobs();
  int active_hi = w.cur.points() - 2 * mobs;
  auto blocks = w.normalize_orientable(active_hi);
  w.sort_blocks(blocks);
  int lower_rank = 0;
  for (int b : blocks) lower_rank += b;
  while (mobs > 2) {
    w.play(mob3_rewrite_moves(lower_rank, w.cur.rank));
    mobs -= 2;
    lower_rank += 2;  // one more Tor below the remaining bands
  }
  // newly created tori sit directly above the old ones, below the Moebius
  // bands, so the datum is already in caravan layout
  require(w.cur == caravan_tcd(want), "InternalError",
          "caravan normalization did not reach the canonical datum");
  return {want, w.trace};
}

int width_of(const tcd& t, const edge& arc) {
  edge e = mk_edge(arc.first, arc.second);
  require(std::binary_search(t.arcs.begin(), t.arcs.end(), e), "UnknownArc",
          "no such arc in the datum");
  return e.second - e.first - 1;
}

bool is_in_tc_star(const tcd& t) {
  bool one_boundary = boundary_component_count(t) == 1;
  bool invertible = gf2_nullity(im_of(t)) == 0;
  require(one_boundary == invertible, "InternalError",
          "boundary-count and nullity characterisations disagree");
  return one_boundary;
}

std::uint64_t tc_orientable_count(int rank) {
  std::uint64_t v = 1;
  for (int k = 1; k <= rank; k++) v *= static_cast<std::uint64_t>(2 * k - 1);
  return v;
}

std::uint64_t tc_count(int rank) { return tc_orientable_count(rank) << rank; }

std::vector<std::vector<edge>> enumerate_pairings(int n_points) {
  std::vector<std::vector<edge>> out;
  std::vector<edge> cur;
  std::vector<bool> used(n_points + 1, false);
  auto rec = [&](auto&& self) -> void {
    int first = 0;
    for (int i = 1; i <= n_points; i++)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first == 0) {
      out.push_back(cur);
      return;
    }
    used[first] = true;
    for (int j = first + 1; j <= n_points; j++) {
      if (used[j]) continue;
      used[j] = true;
      cur.push_back({first, j});
      self(self);
      cur.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec(rec);
  return out;
}

std::vector<tcd> enumerate_tcd(int rank, int cap) {
  require(rank <= cap, "CapExceeded",
          "rank " + std::to_string(rank) + " above enumeration cap " + std::to_string(cap));
  std::vector<tcd> out;
  for (const auto& arcs : enumerate_pairings(2 * rank)) {
    for (std::uint32_t mask = 0; mask < (1u << rank); mask++) {
      std::vector<int> tw(rank);
      for (int k = 0; k < rank; k++) tw[k] = (mask >> k) & 1;
      out.push_back(tcd(rank, arcs, tw));
    }
  }
  return out;
}

}  // namespace swb
