#include "swb/diagram.hpp"

#include <algorithm>
#include <map>

namespace swb {

frame::frame(tcd t_, int south, int north, std::vector<int> f)
    : t(std::move(t_)), f_south(south), f_north(north), f_arcs(std::move(f)) {
  require(is_in_tc_star(t), "BadFrame", "frame chord datum must have one boundary circle");
  require(f_south >= 0 && f_north >= 0, "BadFrame", "boundary multiplicities must be >= 0");
  require(f_arcs.size() == t.arcs.size(), "BadFrame", "f must be aligned with the arcs");
  for (int v : f_arcs) require(v >= 0, "BadFrame", "multiplicities must be >= 0");
}

int frame::f_level(int level) const {
  if (level == 0) return f_south;
  if (level == north_level()) return f_north;
  return f_arcs[t.arc_index_of(level)];
}

int frame::complexity() const {
  int c = 0;
  for (int v : f_arcs) c += v;
  return c;
}

bool frame::before(const frame_vertex& a, const frame_vertex& b) const {
  if (a.level != b.level) return a.level < b.level;
  if (a.level == north_level()) return a.slot > b.slot;
  return a.slot < b.slot;
}

std::vector<frame_vertex> frame::vertex_list() const {
  std::vector<frame_vertex> out;
  for (int lv = 0; lv <= north_level(); lv++) {
    int f = f_level(lv);
    if (lv == north_level())
      for (int a = f; a >= 1; a--) out.push_back({lv, a});
    else
      for (int a = 1; a <= f; a++) out.push_back({lv, a});
  }
  return out;
}

int frame::vertex_rank(const frame_vertex& v) const {
  int r = 0;
  for (int lv = 0; lv < v.level; lv++) r += f_level(lv);
  if (v.level == north_level()) return r + (f_north - v.slot);
  return r + v.slot - 1;
}

frame_vertex frame::iota(const frame_vertex& v) const {
  require(is_internal(v), "NotInternal", "iota is only defined on band vertices");
  int k = t.arc_index_of(v.level);
  int j = t.partner(v.level);
  if (t.twists[k] == 0) return {j, f_arcs[k] + 1 - v.slot};
  return {j, v.slot};
}

frame star(const frame& f) {
  tcd st = star(f.t);
  int n2 = f.t.points();
  std::vector<int> fa(st.arcs.size());
  for (std::size_t k = 0; k < f.t.arcs.size(); k++) {
    edge img = mk_edge(n2 + 1 - f.t.arcs[k].first, n2 + 1 - f.t.arcs[k].second);
    fa[st.arc_index_of(img.first)] = f.f_arcs[k];
  }
  return frame(st, f.f_north, f.f_south, fa);
}

frame juxtapose(const frame& f2, const frame& f1) {
  tcd t = juxtapose(f2.t, f1.t);
  std::vector<int> fa(t.arcs.size());
  for (std::size_t k = 0; k < f1.t.arcs.size(); k++)
    fa[t.arc_index_of(f1.t.arcs[k].first)] = f1.f_arcs[k];
  for (std::size_t k = 0; k < f2.t.arcs.size(); k++)
    fa[t.arc_index_of(f2.t.arcs[k].first + f1.t.points())] = f2.f_arcs[k];
  return frame(t, f1.f_south, f2.f_north, fa);
}

frame insert_frame(const frame& f2, int d, const frame& f1) {
  // boundary multiplicities stay with the outer frame
  tcd t = insert_tcd(f2.t, d, f1.t);
  int n1 = f1.t.points();
  auto od = [&](int x) { return x <= d ? x : x + n1; };
  std::vector<int> fa(t.arcs.size());
  for (std::size_t k = 0; k < f1.t.arcs.size(); k++)
    fa[t.arc_index_of(f1.t.arcs[k].first + d)] = f1.f_arcs[k];
  for (std::size_t k = 0; k < f2.t.arcs.size(); k++)
    fa[t.arc_index_of(od(f2.t.arcs[k].first))] = f2.f_arcs[k];
  return frame(t, f2.f_south, f2.f_north, fa);
}

swb_datum::swb_datum(frame f, std::vector<vertex_pair> p) : fr(std::move(f)), pairs(std::move(p)) {
  for (auto& [u, v] : pairs)
    if (!fr.before(u, v)) std::swap(u, v);
  std::sort(pairs.begin(), pairs.end(), [&](const vertex_pair& a, const vertex_pair& b) {
    return fr.vertex_rank(a.first) < fr.vertex_rank(b.first);
  });
  auto verts = fr.vertex_list();
  std::vector<int> seen;
  for (const auto& [u, v] : pairs) {
    seen.push_back(fr.vertex_rank(u));
    seen.push_back(fr.vertex_rank(v));
  }
  std::sort(seen.begin(), seen.end());
  std::vector<int> want(verts.size());
  for (std::size_t i = 0; i < verts.size(); i++) want[i] = static_cast<int>(i);
  require(seen == want, "BadPairing", "pairing must cover each frame vertex exactly once");
  for (std::size_t i = 0; i < pairs.size(); i++)
    for (std::size_t j = i + 1; j < pairs.size(); j++) {
      edge a{fr.vertex_rank(pairs[i].first), fr.vertex_rank(pairs[i].second)};
      edge b{fr.vertex_rank(pairs[j].first), fr.vertex_rank(pairs[j].second)};
      require(!parts_cross(a, b), "InvariantError",
              "pairing has a crossing at ranks " + std::to_string(a.first) + "-" +
                  std::to_string(a.second) + " x " + std::to_string(b.first) + "-" +
                  std::to_string(b.second));
    }
}

frame_vertex swb_datum::partner(const frame_vertex& v) const {
  for (const auto& [a, b] : pairs) {
    if (a == v) return b;
    if (b == v) return a;
  }
  fail("BadPairing", "vertex not present in the pairing");
}

bool swb_datum::has_pair(const frame_vertex& a, const frame_vertex& b) const {
  for (const auto& [u, v] : pairs)
    if ((u == a && v == b) || (u == b && v == a)) return true;
  return false;
}

std::string canonical_key(const swb_datum& th) {
  std::vector<int> vals;
  const auto& t = th.fr.t;
  vals.push_back(t.rank);
  for (std::size_t k = 0; k < t.arcs.size(); k++) {
    vals.push_back(t.arcs[k].first);
    vals.push_back(t.arcs[k].second);
    vals.push_back(t.twists[k]);
  }
  vals.push_back(th.fr.f_south);
  vals.push_back(th.fr.f_north);
  for (int f : th.fr.f_arcs) vals.push_back(f);
  for (const auto& [u, v] : th.pairs) {
    vals.push_back(th.fr.vertex_rank(u));
    vals.push_back(th.fr.vertex_rank(v));
  }
  std::string out;
  out.reserve(vals.size() * 2);
  for (int v : vals) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return out;
}

ordered_graph curve_graph(const swb_datum& th) {
  auto verts = th.fr.vertex_list();
  ordered_graph g;
  for (std::size_t i = 0; i < verts.size(); i++) g.vertices.push_back(static_cast<int>(i));
  for (const auto& [u, v] : th.pairs)
    g.edges.insert(mk_edge(th.fr.vertex_rank(u), th.fr.vertex_rank(v)));
  for (const auto& v : verts)
    if (th.fr.is_internal(v))
      g.edges.insert(mk_edge(th.fr.vertex_rank(v), th.fr.vertex_rank(th.fr.iota(v))));
  return g;
}

namespace {

struct half_vertex {
  int level;
  int pos;  // pos represents slot pos - 1/2, so pos runs 1..f(level)+1
  bool operator==(const half_vertex&) const = default;
};

// combined order key inside a level: full slot a -> 2a, half pos h -> 2h-1
struct complement_ctx {
  const swb_datum& th;
  std::vector<half_vertex> halves;           // in frame order
  std::vector<std::pair<int, long>> fulls;   // (rank, global key) of full vertices

  explicit complement_ctx(const swb_datum& th_) : th(th_) {
    const frame& fr = th.fr;
    for (int lv = 0; lv <= fr.north_level(); lv++) {
      int f = fr.f_level(lv);
      if (lv == fr.north_level())
        for (int h = f + 1; h >= 1; h--) halves.push_back({lv, h});
      else
        for (int h = 1; h <= f + 1; h++) halves.push_back({lv, h});
    }
  }

  long key_full(const frame_vertex& v) const {
    long in_level = v.level == th.fr.north_level() ? -(2L * v.slot) : 2L * v.slot;
    return (static_cast<long>(v.level) << 20) + in_level;
  }
  long key_half(const half_vertex& v) const {
    long in_level = v.level == th.fr.north_level() ? -(2L * v.pos - 1) : 2L * v.pos - 1;
    return (static_cast<long>(v.level) << 20) + in_level;
  }

  half_vertex iota(const half_vertex& v) const {
    int k = th.fr.t.arc_index_of(v.level);
    int j = th.fr.t.partner(v.level);
    if (th.fr.t.twists[k] == 0) return {j, th.fr.f_arcs[k] + 2 - v.pos};
    return {j, v.pos};
  }
};

}  // namespace

ordered_graph complement_graph(const swb_datum& th) {
  complement_ctx ctx(th);
  int n = static_cast<int>(ctx.halves.size());
  ordered_graph g;
  for (int i = 0; i < n; i++) g.vertices.push_back(i);
  auto rank_of = [&](const half_vertex& v) {
    for (int i = 0; i < n; i++)
      if (ctx.halves[i] == v) return i;
    fail("InternalError", "half vertex not found");
  };
  for (int i = 0; i < n; i++)
    if (ctx.halves[i].level >= 1 && ctx.halves[i].level <= th.fr.t.points())
      g.edges.insert(mk_edge(i, rank_of(ctx.iota(ctx.halves[i]))));
  // all half pairs crossing no part of the pairing
  std::vector<std::pair<long, long>> part_keys;
  for (const auto& [u, v] : th.pairs) {
    long a = ctx.key_full(u), b = ctx.key_full(v);
    part_keys.push_back({std::min(a, b), std::max(a, b)});
  }
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      long a = ctx.key_half(ctx.halves[i]), b = ctx.key_half(ctx.halves[j]);
      if (a > b) std::swap(a, b);
      bool crossed = false;
      for (const auto& [pa, pb] : part_keys) {
        if ((a < pa && pa < b && b < pb) || (pa < a && a < pb && pb < b)) {
          crossed = true;
          break;
        }
      }
      if (!crossed) g.edges.insert(mk_edge(i, j));
    }
  return g;
}

int complement_component_count(const swb_datum& th) {
  return component_count(complement_graph(th));
}

namespace {

swb_datum keep_vertices(const swb_datum& th, const std::vector<frame_vertex>& keep) {
  const frame& fr = th.fr;
  auto kept = [&](const frame_vertex& v) {
    return std::find(keep.begin(), keep.end(), v) != keep.end();
  };
  std::vector<int> fa(fr.f_arcs.size(), 0);
  int south = 0, north = 0;
  std::map<int, std::vector<int>> slots_by_level;
  for (const auto& v : keep) slots_by_level[v.level].push_back(v.slot);
  for (auto& [lv, slots] : slots_by_level) std::sort(slots.begin(), slots.end());
  for (const auto& v : keep) {
    if (v.level == 0)
      south++;
    else if (v.level == fr.north_level())
      north++;
  }
  for (std::size_t k = 0; k < fr.t.arcs.size(); k++) {
    int lv = fr.t.arcs[k].first;
    auto it = slots_by_level.find(lv);
    fa[k] = it == slots_by_level.end() ? 0 : static_cast<int>(it->second.size());
  }
  auto new_slot = [&](const frame_vertex& v) {
    const auto& slots = slots_by_level[v.level];
    return static_cast<int>(std::lower_bound(slots.begin(), slots.end(), v.slot) -
                            slots.begin()) +
           1;
  };
  std::vector<vertex_pair> np;
  for (const auto& [u, v] : th.pairs) {
    bool ku = kept(u), kv = kept(v);
    require(ku == kv, "NotAComponent", "vertex set is not a union of components");
    if (ku) np.push_back({{u.level, new_slot(u)}, {v.level, new_slot(v)}});
  }
  return swb_datum(frame(fr.t, south, north, fa), np);
}

int twist_of(const swb_datum& th, const std::vector<frame_vertex>& comp) {
  int tw = 0;
  for (const auto& v : comp)
    if (th.fr.is_internal(v)) {
      auto w = th.fr.iota(v);
      if (th.fr.before(v, w)) tw += th.fr.t.twists[th.fr.t.arc_index_of(v.level)];
    }
  return tw & 1;
}

}  // namespace

std::vector<component_info> components_basic(const swb_datum& th) {
  auto verts = th.fr.vertex_list();
  std::vector<component_info> out;
  for (const auto& vs : component_vertex_sets(curve_graph(th))) {
    component_info info;
    for (int r : vs) info.vertices.push_back(verts[r]);
    info.external = false;
    info.fully_external = true;
    for (const auto& v : info.vertices) {
      if (th.fr.is_internal(v))
        info.fully_external = false;
      else
        info.external = true;
    }
    info.twist = twist_of(th, info.vertices);
    out.push_back(std::move(info));
  }
  return out;
}

std::vector<component_info> classify_components(const swb_datum& th) {
  auto out = components_basic(th);
  for (auto& info : out) {
    auto alone = restrict_to_component(th, info.vertices);
    int cc = complement_component_count(alone);
    require(cc == 1 || cc == 2, "InternalError",
            "single-curve complement must have one or two pieces");
    info.separating = cc == 2;
  }
  return out;
}

bool has_internal_components(const swb_datum& th) {
  for (const auto& c : components_basic(th))
    if (!c.external) return true;
  return false;
}

swb_datum delete_component(const swb_datum& th, const std::vector<frame_vertex>& comp) {
  auto verts = th.fr.vertex_list();
  std::vector<frame_vertex> keep;
  for (const auto& v : verts)
    if (std::find(comp.begin(), comp.end(), v) == comp.end()) keep.push_back(v);
  return keep_vertices(th, keep);
}

swb_datum restrict_to_component(const swb_datum& th, const std::vector<frame_vertex>& comp) {
  return keep_vertices(th, comp);
}

swb_datum star(const swb_datum& th) {
  frame sf = star(th.fr);
  int lmax = th.fr.north_level();
  auto flip = [&](const frame_vertex& v) -> frame_vertex {
    return {lmax - v.level, th.fr.f_level(v.level) + 1 - v.slot};
  };
  std::vector<vertex_pair> np;
  for (const auto& [u, v] : th.pairs) np.push_back({flip(u), flip(v)});
  return swb_datum(sf, np);
}

juxtapose_result juxtapose(const swb_datum& th2, const swb_datum& th1) {
  require(th1.fr.f_north == th2.fr.f_south, "TypeMismatch",
          "north multiplicity of the lower datum must match south of the upper");
  int m = th1.fr.f_north;
  auto v1 = th1.fr.vertex_list();
  auto v2 = th2.fr.vertex_list();
  int w1 = th1.fr.vertex_count() - m;  // lower vertices kept
  int w2 = th2.fr.vertex_count() - m;  // upper vertices kept
  int w_total = w1 + w2;

  // ids: kept lower vertices by rank, then kept upper; glued layer afterwards
  auto id1 = [&](const frame_vertex& v) -> int {
    if (v.level == th1.fr.north_level()) return w_total + (v.slot - 1);
    return th1.fr.vertex_rank(v);
  };
  auto id2 = [&](const frame_vertex& v) -> int {
    if (v.level == 0) return w_total + (v.slot - 1);
    return w1 + th2.fr.vertex_rank(v) - m;  // upper south occupies the first m ranks
  };

  ordered_graph composite, pairing_graph;
  for (int i = 0; i < w_total + m; i++) {
    composite.vertices.push_back(i);
    pairing_graph.vertices.push_back(i);
  }
  auto add1 = [&](const frame_vertex& a, const frame_vertex& b, bool curve_only) {
    composite.edges.insert(mk_edge(id1(a), id1(b)));
    if (!curve_only) pairing_graph.edges.insert(mk_edge(id1(a), id1(b)));
  };
  auto add2 = [&](const frame_vertex& a, const frame_vertex& b, bool curve_only) {
    composite.edges.insert(mk_edge(id2(a), id2(b)));
    if (!curve_only) pairing_graph.edges.insert(mk_edge(id2(a), id2(b)));
  };
  for (const auto& [a, b] : th1.pairs) add1(a, b, false);
  for (const auto& [a, b] : th2.pairs) add2(a, b, false);
  for (const auto& v : v1)
    if (th1.fr.is_internal(v)) add1(v, th1.fr.iota(v), true);
  for (const auto& v : v2)
    if (th2.fr.is_internal(v)) add2(v, th2.fr.iota(v), true);

  vertex_set glued;
  for (int i = 0; i < m; i++) glued.push_back(w_total + i);
  int linking = index_of(composite, glued);

  frame combined = juxtapose(th2.fr, th1.fr);
  auto verts = combined.vertex_list();
  auto contracted = contract(pairing_graph, glued);
  std::vector<vertex_pair> np;
  for (const auto& [a, b] : contracted.edges) np.push_back({verts[a], verts[b]});
  return {swb_datum(combined, np), linking};
}

insertion_parts insertion_decompose(const swb_datum& th, int d, const tcd& inner_tcd) {
  tcd outer_t;
  require(is_insertion_of(th.fr.t, d, inner_tcd, &outer_t), "NotAnInsertion",
          "chord datum does not split as outer #_d inner");
  int n1 = inner_tcd.points();
  const frame& fr = th.fr;
  auto in_block = [&](const frame_vertex& v) { return v.level > d && v.level <= d + n1; };
  auto below = [&](const frame_vertex& v) { return v.level <= d; };

  std::vector<frame_vertex> u_att, w_att;  // boundary attachments, by order
  std::vector<vertex_pair> inner_pairs;
  for (const auto& [a, b] : th.pairs) {
    bool ia = in_block(a), ib = in_block(b);
    if (ia && ib) continue;
    if (ia || ib) {
      const auto& outside = ia ? b : a;
      if (below(outside))
        u_att.push_back(outside);
      else
        w_att.push_back(outside);
    }
  }
  auto cmp = [&](const frame_vertex& a, const frame_vertex& b) { return fr.before(a, b); };
  std::sort(u_att.begin(), u_att.end(), cmp);
  std::sort(w_att.begin(), w_att.end(), cmp);
  std::reverse(w_att.begin(), w_att.end());  // w_1 is the greatest
  int n = static_cast<int>(u_att.size());
  int mm = static_cast<int>(w_att.size());

  std::vector<int> f1(inner_tcd.arcs.size());
  for (std::size_t k = 0; k < inner_tcd.arcs.size(); k++)
    f1[k] = fr.f_arcs[fr.t.arc_index_of(inner_tcd.arcs[k].first + d)];
  frame inner_frame(inner_tcd, n, mm, f1);

  std::vector<int> f2(outer_t.arcs.size());
  auto od = [&](int x) { return x <= d ? x : x + n1; };
  for (std::size_t k = 0; k < outer_t.arcs.size(); k++)
    f2[k] = fr.f_arcs[fr.t.arc_index_of(od(outer_t.arcs[k].first))];
  frame outer_frame(outer_t, fr.f_south, fr.f_north, f2);

  auto pull_in = [&](const frame_vertex& v) -> frame_vertex { return {v.level - d, v.slot}; };
  std::vector<std::pair<frame_vertex, frame_vertex>> embed;
  for (int i = 0; i < n; i++)
    embed.push_back({{0, i + 1}, u_att[i]});
  for (const auto& v : fr.vertex_list())
    if (in_block(v)) embed.push_back({pull_in(v), v});
  for (int j = 0; j < mm; j++)
    embed.push_back({{inner_tcd.points() + 1, j + 1}, w_att[j]});

  auto host_partner = [&](const frame_vertex& hv) { return th.partner(hv); };
  for (const auto& [a, b] : th.pairs)
    if (in_block(a) && in_block(b)) inner_pairs.push_back({pull_in(a), pull_in(b)});
  for (int i = 0; i < n; i++)
    inner_pairs.push_back({{0, i + 1}, pull_in(host_partner(u_att[i]))});
  for (int j = 0; j < mm; j++)
    inner_pairs.push_back({{inner_tcd.points() + 1, j + 1}, pull_in(host_partner(w_att[j]))});

  return {swb_datum(inner_frame, inner_pairs), outer_frame, embed};
}

std::pair<swb_datum, swb_datum> factorize(const swb_datum& th, int n1) {
  const frame& fr = th.fr;
  require(n1 >= 0 && n1 <= fr.t.rank, "NotJuxtaposable", "split rank out of range");
  // the chord datum must split with no spanning arcs
  std::vector<edge> arcs1, arcs2;
  std::vector<int> tw1, tw2, fa1, fa2;
  for (std::size_t k = 0; k < fr.t.arcs.size(); k++) {
    auto [a, b] = fr.t.arcs[k];
    bool ia = a <= 2 * n1, ib = b <= 2 * n1;
    require(ia == ib, "NotJuxtaposable", "an arc spans the split");
    if (ia) {
      arcs1.push_back({a, b});
      tw1.push_back(fr.t.twists[k]);
      fa1.push_back(fr.f_arcs[k]);
    } else {
      arcs2.push_back({a - 2 * n1, b - 2 * n1});
      tw2.push_back(fr.t.twists[k]);
      fa2.push_back(fr.f_arcs[k]);
    }
  }
  tcd t1(n1, arcs1, tw1), t2(fr.t.rank - n1, arcs2, tw2);
  require(is_in_tc_star(t1) && is_in_tc_star(t2), "NotJuxtaposable",
          "a factor would leave the one-boundary class");

  auto lower = [&](const frame_vertex& v) { return v.level <= 2 * n1; };
  std::vector<frame_vertex> cross_low, cross_high;
  std::vector<vertex_pair> e1, e2;
  for (const auto& [a, b] : th.pairs) {
    bool la = lower(a), lb = lower(b);
    if (la && lb)
      e1.push_back({a, b});
    else if (!la && !lb)
      e2.push_back({a, b});
    else {
      cross_low.push_back(la ? a : b);
      cross_high.push_back(la ? b : a);
    }
  }
  auto cmp = [&](const frame_vertex& a, const frame_vertex& b) { return fr.before(a, b); };
  std::vector<std::size_t> ord(cross_low.size());
  for (std::size_t i = 0; i < ord.size(); i++) ord[i] = i;
  std::sort(ord.begin(), ord.end(),
            [&](std::size_t x, std::size_t y) { return cmp(cross_low[x], cross_low[y]); });
  int m = static_cast<int>(ord.size());

  frame f1(t1, fr.f_south, m, fa1);
  frame f2(t2, m, fr.f_north, fa2);
  auto down_map = [&](const frame_vertex& v) -> frame_vertex { return v; };  // levels agree
  auto up_map = [&](const frame_vertex& v) -> frame_vertex {
    return {v.level - 2 * n1, v.slot};
  };
  std::vector<vertex_pair> p1, p2;
  for (const auto& [a, b] : e1) p1.push_back({down_map(a), down_map(b)});
  for (const auto& [a, b] : e2) p2.push_back({up_map(a), up_map(b)});
  for (int k = 0; k < m; k++) {
    p1.push_back({down_map(cross_low[ord[k]]), {2 * n1 + 1, k + 1}});
    p2.push_back({{0, k + 1}, up_map(cross_high[ord[k]])});
  }
  return {swb_datum(f1, p1), swb_datum(f2, p2)};
}

}  // namespace swb
