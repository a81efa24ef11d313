#include "swb/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

namespace swb {

namespace {

// Rebuilds a datum after removing a vertex set: multiplicities drop and the
// surviving slots close up rank-wise per level.
swb_datum rebuild_without(const frame& fr, const std::vector<vertex_pair>& kept_pairs,
                          const std::vector<frame_vertex>& removed,
                          std::vector<int> f_arcs, int f_south, int f_north) {
  std::map<int, std::vector<int>> gone;
  for (const auto& v : removed) gone[v.level].push_back(v.slot);
  for (auto& [lv, slots] : gone) std::sort(slots.begin(), slots.end());
  auto new_slot = [&](const frame_vertex& v) {
    auto it = gone.find(v.level);
    if (it == gone.end()) return v.slot;
    int below = static_cast<int>(std::lower_bound(it->second.begin(), it->second.end(), v.slot) -
                                 it->second.begin());
    return v.slot - below;
  };
  std::vector<vertex_pair> np;
  for (const auto& [u, v] : kept_pairs)
    np.push_back({{u.level, new_slot(u)}, {v.level, new_slot(v)}});
  return swb_datum(frame(fr.t, f_south, f_north, std::move(f_arcs)), np);
}

}  // namespace

swb_datum pull_through(const swb_datum& th, int level, int slot) {
  const frame& fr = th.fr;
  require(level >= 1 && level <= fr.t.points(), "SiteOutOfRange",
          "pull-through level outside {1..2N}");
  require(slot >= 1, "SiteOutOfRange", "slot must be positive");
  if (slot + 1 > fr.f_level(level)) return th;
  frame_vertex u{level, slot}, v{level, slot + 1};
  if (!th.has_pair(u, v)) return th;
  frame_vertex iu = fr.iota(u), iv = fr.iota(v);
  if (th.has_pair(iu, iv)) return th;
  frame_vertex up = th.partner(iu), vp = th.partner(iv);

  std::vector<vertex_pair> kept;
  for (const auto& [a, b] : th.pairs) {
    bool drop = (a == u && b == v) || (a == v && b == u);
    for (const auto& x : {iu, iv})
      if (a == x || b == x) drop = true;
    if (!drop) kept.push_back({a, b});
  }
  kept.push_back({up, vp});
  std::vector<int> fa = fr.f_arcs;
  fa[fr.t.arc_index_of(level)] -= 2;
  return rebuild_without(fr, kept, {u, v, iu, iv}, fa, fr.f_south, fr.f_north);
}

bool has_turn_backs(const swb_datum& th) {
  for (const auto& [a, b] : th.pairs)
    if (a.level == b.level && th.fr.is_internal(a)) return true;
  return false;
}

swb_datum isotopy_reduce(const swb_datum& th) {
  require(!has_internal_components(th), "HasInternalComponents",
          "isotopy reduction needs a curve graph without internal components");
  swb_datum cur = th;
  for (;;) {
    bool fired = false;
    for (int lv = 1; lv <= cur.fr.t.points() && !fired; lv++)
      for (int a = 1; a + 1 <= cur.fr.f_level(lv) && !fired; a++) {
        if (!cur.has_pair({lv, a}, {lv, a + 1})) continue;
        auto nxt = pull_through(cur, lv, a);
        if (!(nxt == cur)) {
          cur = nxt;
          fired = true;
        }
      }
    if (!fired) return cur;
  }
}

swb_datum handle_slide(const swb_datum& th, int site, int dir) {
  const frame& fr = th.fr;
  require(site >= 1 && site <= fr.t.points(), "SiteOutOfRange",
          "handle slide site outside {1..2N}");
  auto sig = slide_perm(fr.t, site, dir);
  if (!sig) return th;
  const perm& sigma = *sig;
  int qi = fr.t.arc_index_of(site + dir);
  int pi = fr.t.arc_index_of(site);
  int fp = fr.f_arcs[pi], fq = fr.f_arcs[qi];

  tcd t2 = chord_slide(fr.t, site, dir);
  std::vector<int> fa(t2.arcs.size());
  for (std::size_t k = 0; k < fr.t.arcs.size(); k++) {
    edge img = mk_edge(sigma[fr.t.arcs[k].first - 1], sigma[fr.t.arcs[k].second - 1]);
    fa[t2.arc_index_of(img.first)] =
        fr.f_arcs[k] + (static_cast<int>(k) == qi ? fp : 0);
  }
  frame fr2(t2, fr.f_south, fr.f_north, fa);

  int si = sigma[site - 1];
  int ip = fr.t.partner(site + dir);
  int sip = sigma[ip - 1];
  std::vector<frame_vertex> blocked;  // the 2 f(p) vertices not in the image of o'
  for (int a = 1; a <= fp; a++) blocked.push_back({si, a});
  for (int a = 1; a <= fp; a++)
    blocked.push_back(sip < si ? frame_vertex{sip, fq + a} : frame_vertex{sip, a});

  // order-preserving map old vertices -> new vertices minus the blocked set
  auto old_list = fr.vertex_list();
  auto new_list = fr2.vertex_list();
  std::vector<frame_vertex> target;
  for (const auto& v : new_list)
    if (std::find(blocked.begin(), blocked.end(), v) == blocked.end()) target.push_back(v);
  require(target.size() == old_list.size(), "InternalError", "handle slide rank mismatch");
  std::map<std::pair<int, int>, frame_vertex> omap;
  for (std::size_t k = 0; k < old_list.size(); k++)
    omap[{old_list[k].level, old_list[k].slot}] = target[k];

  std::vector<vertex_pair> np;
  for (const auto& [a, b] : th.pairs)
    np.push_back({omap[{a.level, a.slot}], omap[{b.level, b.slot}]});
  for (int a = 1; a <= fp; a++) {
    frame_vertex left{si, fp + 1 - a};
    frame_vertex right = sip < si ? frame_vertex{sip, fq + a} : frame_vertex{sip, a};
    np.push_back({left, right});
  }
  return swb_datum(fr2, np);
}

swb_datum apply_slide_moves(const swb_datum& th, const std::vector<slide_move>& moves) {
  swb_datum cur = th;
  for (const auto& m : moves) cur = handle_slide(cur, m.site, m.dir);
  return cur;
}

namespace {

// (endpoint, endpoint, twist) per strand: slide- and isotopy-invariant.
std::vector<std::array<int, 5>> strand_invariant(const swb_datum& th) {
  std::vector<std::array<int, 5>> out;
  for (const auto& c : components_basic(th)) {
    std::vector<std::pair<int, int>> ends;
    for (const auto& v : c.vertices)
      if (!th.fr.is_internal(v)) ends.push_back({v.level == 0 ? 0 : 1, v.slot});
    std::sort(ends.begin(), ends.end());
    if (ends.size() == 2)
      out.push_back({ends[0].first, ends[0].second, ends[1].first, ends[1].second, c.twist});
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct invariant_tuple {
  surface_type type;
  int components;
  int complement;
  std::vector<std::array<int, 5>> strands;
  bool operator==(const invariant_tuple&) const = default;
};

invariant_tuple invariants_of(const swb_datum& th) {
  return {classify_type(th.fr.t), component_count(curve_graph(th)),
          complement_component_count(th), strand_invariant(th)};
}

std::vector<swb_datum> neighbours(const swb_datum& th) {
  std::vector<swb_datum> out;
  for (int site = 1; site <= th.fr.t.points(); site++)
    for (int dir : {+1, -1})
      if (slide_admissible(th.fr.t, site, dir))
        out.push_back(isotopy_reduce(handle_slide(th, site, dir)));
  return out;
}

}  // namespace

equiv_result hs_equivalent(const swb_datum& a, const swb_datum& b, const equiv_options& opt) {
  require(a.type() == b.type(), "TypeMismatch", "data must have equal type");
  require(!has_internal_components(a) && !has_internal_components(b),
          "HasInternalComponents", "strip internal components before comparing");
  swb_datum ra = isotopy_reduce(a), rb = isotopy_reduce(b);
  equiv_result res;
  if (canonical_key(ra) == canonical_key(rb)) {
    res.verdict = equiv_verdict::equivalent;
    return res;
  }
  if (!(invariants_of(ra) == invariants_of(rb))) {
    res.verdict = equiv_verdict::distinct;
    return res;
  }

  struct side {
    std::unordered_map<std::string, int> seen;
    std::vector<swb_datum> frontier;
    int depth = 0;
    bool complete = true;  // no truncation so far
  };
  side sa, sb;
  sa.seen[canonical_key(ra)] = 0;
  sa.frontier.push_back(ra);
  sb.seen[canonical_key(rb)] = 0;
  sb.frontier.push_back(rb);
  long nodes = 2;

  while (sa.depth + sb.depth < opt.budget) {
    side& grow = sa.frontier.size() <= sb.frontier.size() ? sa : sb;
    side& other = (&grow == &sa) ? sb : sa;
    if (grow.frontier.empty()) break;
    std::vector<swb_datum> next;
    grow.depth++;
    for (const auto& cur : grow.frontier) {
      for (auto& child : neighbours(cur)) {
        auto key = canonical_key(child);
        if (grow.seen.count(key)) continue;
        if (nodes >= opt.max_nodes) {
          grow.complete = false;
          continue;
        }
        grow.seen[key] = grow.depth;
        nodes++;
        if (auto it = other.seen.find(key); it != other.seen.end()) {
          res.verdict = equiv_verdict::equivalent;
          res.budget_used = grow.depth + it->second;
          res.nodes_explored = nodes;
          return res;
        }
        next.push_back(std::move(child));
      }
    }
    grow.frontier = std::move(next);
    if (grow.frontier.empty() && grow.complete) {
      // the whole orbit on this side was enumerated without a meeting point
      res.verdict = equiv_verdict::distinct;
      res.nodes_explored = nodes;
      return res;
    }
    if (!grow.complete) break;
  }
  res.verdict = equiv_verdict::undecided;
  res.nodes_explored = nodes;
  return res;
}

equiv_result hs_equivalent(const swb_datum& a, const swb_datum& b, int budget) {
  equiv_options opt;
  opt.budget = budget;
  return hs_equivalent(a, b, opt);
}

canonical_rep canonicalize(const swb_datum& th, int budget) {
  require(!has_internal_components(th), "HasInternalComponents",
          "canonical forms are defined for data without internal components");
  swb_datum cur = isotopy_reduce(th);
  std::string cur_key = canonical_key(cur);
  const long node_cap = 50000;
  for (;;) {
    // best key in the slide ball of radius `budget` around cur
    std::map<std::string, swb_datum> layer{{cur_key, cur}};
    std::set<std::string> seen{cur_key};
    std::string best_key = cur_key;
    swb_datum best = cur;
    long nodes = 1;
    for (int depth = 0; depth < budget && nodes < node_cap; depth++) {
      std::map<std::string, swb_datum> next;
      for (const auto& [k, d] : layer)
        for (auto& child : neighbours(d)) {
          auto key = canonical_key(child);
          if (!seen.insert(key).second) continue;
          if (++nodes >= node_cap) break;
          if (key < best_key) {
            best_key = key;
            best = child;
          }
          next.emplace(std::move(key), std::move(child));
        }
      layer = std::move(next);
    }
    if (best_key < cur_key) {
      cur = best;
      cur_key = best_key;
      continue;
    }
    return {cur, cur_key, budget};
  }
}

swb_datum insert_left(const swb_datum& th) {
  const frame& fr = th.fr;
  frame fr2(fr.t, fr.f_south + 1, fr.f_north + 1, fr.f_arcs);
  int nl = fr.north_level();
  auto shift = [&](const frame_vertex& v) -> frame_vertex {
    if (v.level == 0 || v.level == nl) return {v.level, v.slot + 1};
    return v;
  };
  std::vector<vertex_pair> np;
  for (const auto& [a, b] : th.pairs) np.push_back({shift(a), shift(b)});
  np.push_back({{0, 1}, {nl, 1}});
  return swb_datum(fr2, np);
}

swb_datum insert_right(const swb_datum& th) {
  const frame& fr = th.fr;
  std::vector<int> fa = fr.f_arcs;
  for (int& v : fa) v += 2;
  frame fr2(fr.t, fr.f_south + 1, fr.f_north + 1, fa);
  int nl = fr.north_level();
  auto shift = [&](const frame_vertex& v) -> frame_vertex {
    if (v.level == 0 || v.level == nl) return v;
    return {v.level, v.slot + 1};
  };
  std::vector<vertex_pair> np;
  for (const auto& [a, b] : th.pairs) np.push_back({shift(a), shift(b)});
  // the boundary-parallel strand enters every band once
  if (fr.t.points() == 0) {
    np.push_back({{0, fr.f_south + 1}, {nl, fr.f_north + 1}});
  } else {
    np.push_back({{0, fr.f_south + 1}, {1, 1}});
    for (int lv = 1; lv < fr.t.points(); lv++)
      np.push_back({{lv, fr.f_level(lv) + 2}, {lv + 1, 1}});
    np.push_back({{fr.t.points(), fr.f_level(fr.t.points()) + 2}, {nl, fr.f_north + 1}});
  }
  return swb_datum(fr2, np);
}

swb_datum shift(const swb_datum& th) {
  require(th.fr.f_north > 0, "EmptyNorth", "Sf needs a northern endpoint");
  swb_datum upper = cap_datum(1);
  for (int k = 0; k < th.fr.f_north - 1; k++) upper = insert_right(upper);
  auto res = juxtapose(upper, insert_left(th));
  require(res.linking == 0, "InternalError", "Sf should not close a loop");
  return res.datum;
}

swb_datum zero_datum() { return swb_datum(frame(empty_tcd(), 0, 0, {}), {}); }

swb_datum id_datum(int n) {
  require(n >= 0, "BadDatum", "size must be >= 0");
  swb_datum cur = zero_datum();
  for (int k = 0; k < n; k++) cur = insert_left(cur);
  return cur;
}

swb_datum cap_datum(int n) {
  require(n >= 0, "BadDatum", "size must be >= 0");
  if (n == 0) return zero_datum();
  swb_datum cur = id_datum(n);
  for (int k = 0; k < n; k++) cur = shift(cur);
  return cur;
}

swb_datum cup_datum(int n) { return star(cap_datum(n)); }

swb_datum tor_generator(int l, int m) {
  require(l >= 0 && m >= 0, "BadDatum", "multiplicities must be >= 0");
  frame fr(tor_tcd(), l + m, l + m, {m, l});
  std::vector<vertex_pair> np;
  for (int b = 1; b <= l; b++) np.push_back({{0, b}, {2, l + 1 - b}});
  for (int a = 1; a <= m; a++) np.push_back({{0, l + a}, {1, m + 1 - a}});
  for (int a = 1; a <= m; a++) np.push_back({{3, a}, {5, a}});
  for (int b = 1; b <= l; b++) np.push_back({{4, b}, {5, m + b}});
  return swb_datum(fr, np);
}

swb_datum mob_generator(int n) {
  require(n >= 0, "BadDatum", "multiplicity must be >= 0");
  frame fr(mob_tcd(), n, n, {n});
  std::vector<vertex_pair> np;
  for (int a = 1; a <= n; a++) np.push_back({{0, a}, {1, n + 1 - a}});
  for (int b = 1; b <= n; b++) np.push_back({{2, b}, {3, b}});
  return swb_datum(fr, np);
}

namespace {

void check_setup(const swb_datum& th, int d, const tcd& inner, std::string& why) {
  if (has_turn_backs(th)) why += "[turn-backs present]";
  if (has_internal_components(th)) why += "[internal components present]";
  tcd outer;
  if (!is_insertion_of(th.fr.t, d, inner, &outer))
    why += "[chord datum is not an insertion at the given height]";
  else if (d >= outer.points())
    why += "[no band point above the block]";
}

swb_datum rewrite_evacuation(const swb_datum& th, int d, const tcd& inner, int want_twist) {
  std::string why;
  check_setup(th, d, inner, why);
  if (why.empty()) {
    tcd outer;
    is_insertion_of(th.fr.t, d, inner, &outer);
    int sp = outer.twists[outer.arc_index_of(d + 1)];
    if (sp != want_twist) why += "[band above the block has the wrong twist]";
  }
  require(why.empty(), "SetupViolated", why);
  auto ev = evacuation(th.fr.t, +1, d + 1, d + inner.points());
  return isotopy_reduce(apply_slide_moves(th, ev.moves));
}

}  // namespace

swb_datum rewrite_lemma1(const swb_datum& th, int d, const tcd& inner) {
  return rewrite_evacuation(th, d, inner, 0);
}

swb_datum rewrite_lemma2(const swb_datum& th, int d, const tcd& inner) {
  return rewrite_evacuation(th, d, inner, 1);
}

swb_datum rewrite_lemma3(const swb_datum& th, int d, const tcd& inner) {
  std::string why;
  check_setup(th, d, inner, why);
  if (why.empty()) {
    int level_above = d + inner.points() + 1;
    for (const auto& [a, b] : th.pairs) {
      bool ia = a.level > d && a.level <= d + inner.points();
      bool ib = b.level > d && b.level <= d + inner.points();
      if ((ia && b.level == level_above) || (ib && a.level == level_above)) {
        why += "[block strands attach to the band right above it]";
        break;
      }
    }
  }
  require(why.empty(), "SetupViolated", why);
  return isotopy_reduce(apply_slide_moves(th, bs_down_moves(d, inner)));
}

namespace {

struct peeled_block {
  swb_datum t1, mid, t2;
};

// A reduced generator-frame block equals T2 # (I_L^a(generator)) # T1 for
// planar T1, T2: strands on opposite sides of the band travel through one of
// the a left lanes.
peeled_block peel_block(const swb_datum& block) {
  const frame& fr = block.fr;
  bool is_tor = fr.t == tor_tcd();
  require(is_tor || fr.t == mob_tcd(), "InternalError", "peel expects a prime block");
  require(!has_turn_backs(block) && !has_internal_components(block), "InternalError",
          "peel expects a reduced block without internal components");
  auto side_of = [&](const frame_vertex& v) {
    // 0 = reaches the generator from below, 1 = from above
    if (v.level == 0) return 0;
    if (v.level == fr.north_level()) return 1;
    if (is_tor) return v.level <= 2 ? 0 : 1;
    return v.level == 1 ? 0 : 1;
  };
  int lanes = 0;
  for (const auto& [a, b] : block.pairs)
    if (side_of(a) != side_of(b)) lanes++;

  swb_datum mid = is_tor ? tor_generator(fr.f_arcs[1], fr.f_arcs[0])
                         : mob_generator(fr.f_arcs[0]);
  for (int k = 0; k < lanes; k++) mid = insert_left(mid);
  int mid_size = mid.fr.f_south;

  // ports: where each block endpoint meets the generator layer
  auto down_port = [&](const frame_vertex& v) -> int {
    if (v.level == 0) return -v.slot;  // block's own southern edge
    return mid.partner(v).slot;        // generator south slot
  };
  auto up_port = [&](const frame_vertex& v) -> int {
    if (v.level == fr.north_level()) return -v.slot;
    return mid.partner(v).slot;        // generator north slot
  };

  std::vector<vertex_pair> p1, p2;
  int next_lane = 1;
  int nl1 = 1, nl2 = 1;  // t1 north level is 1, t2 north level is 1 (rank 0)
  for (const auto& [a, b] : block.pairs) {
    int sa = side_of(a), sb = side_of(b);
    auto t1_vertex = [&](const frame_vertex& v) -> frame_vertex {
      int port = down_port(v);
      return port < 0 ? frame_vertex{0, -port} : frame_vertex{nl1, port};
    };
    auto t2_vertex = [&](const frame_vertex& v) -> frame_vertex {
      int port = up_port(v);
      return port < 0 ? frame_vertex{nl2, -port} : frame_vertex{0, port};
    };
    if (sa == 0 && sb == 0)
      p1.push_back({t1_vertex(a), t1_vertex(b)});
    else if (sa == 1 && sb == 1)
      p2.push_back({t2_vertex(a), t2_vertex(b)});
    else {
      const auto& dn = sa == 0 ? a : b;
      const auto& up = sa == 0 ? b : a;
      int lane = next_lane++;
      p1.push_back({t1_vertex(dn), {nl1, lane}});
      p2.push_back({{0, lane}, t2_vertex(up)});
    }
  }
  swb_datum t1(frame(empty_tcd(), fr.f_south, mid_size, {}), p1);
  swb_datum t2(frame(empty_tcd(), mid_size, fr.f_north, {}), p2);

  auto low = juxtapose(mid, t1);
  require(low.linking == 0, "InternalError", "peel produced a linking number");
  auto full = juxtapose(t2, low.datum);
  require(full.linking == 0 && full.datum == block, "InternalError",
          "peel does not reassemble the block");
  return {t1, mid, t2};
}

}  // namespace

std::vector<swb_datum> factor_generators(const swb_datum& th) {
  swb_datum cur = th;
  for (;;) {  // strip internal components first
    auto comps = components_basic(cur);
    auto it = std::find_if(comps.begin(), comps.end(),
                           [](const component_info& c) { return !c.external; });
    if (it == comps.end()) break;
    cur = delete_component(cur, it->vertices);
  }
  cur = isotopy_reduce(cur);
  if (cur.fr.t.rank == 0) return {cur};

  auto car = caravan_normalize(cur.fr.t);
  cur = isotopy_reduce(apply_slide_moves(cur, car.trace));

  std::vector<swb_datum> out;
  auto emit_block = [&](const swb_datum& blk) {
    auto peeled = peel_block(blk);
    if (!(peeled.t1 == id_datum(peeled.t1.fr.f_south))) out.push_back(peeled.t1);
    out.push_back(peeled.mid);
    if (!(peeled.t2 == id_datum(peeled.t2.fr.f_south))) out.push_back(peeled.t2);
  };
  std::vector<int> block_ranks(car.type.g, 2);
  block_ranks.insert(block_ranks.end(), car.type.t, 1);
  for (int r : block_ranks) {
    auto [blk, rest] = factorize(cur, r);
    emit_block(blk);
    cur = rest;
  }
  if (!(cur == id_datum(cur.fr.f_south)) || out.empty()) out.push_back(cur);
  return out;
}

}  // namespace swb
