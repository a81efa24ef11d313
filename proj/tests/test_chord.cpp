#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "swb/chord.hpp"

using namespace swb;

static tcd p2_datum() {  // Tor stacked on Moeb: {1,2} twisted, {3,5}, {4,6}
  return tcd(3, {{1, 2}, {3, 5}, {4, 6}}, {1, 0, 0});
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_tcd(0).size() == 1);
  CHECK(enumerate_tcd(1).size() == 2);
  CHECK(enumerate_tcd(2).size() == 12);
  CHECK(enumerate_tcd(3).size() == 120);
  CHECK(tc_count(4) == 1680);
  CHECK(tc_orientable_count(3) == 15);
  CHECK_THROWS_WITH_AS(enumerate_tcd(9), doctest::Contains("CapExceeded"), swb::error);
}

TEST_CASE("permute") {
  auto p2 = p2_datum();
  auto starred = star(p2);
  CHECK(starred == tcd(3, {{5, 6}, {2, 4}, {1, 3}}, {1, 0, 0}));
  CHECK(permute(identity_perm(6), p2) == p2);
  CHECK(permute(cycle_perm(2), tor_tcd()) == tor_tcd());
  CHECK_THROWS_WITH_AS(permute(perm{1, 1, 2, 3, 4, 5}, p2),
                       doctest::Contains("BadPermutation"), swb::error);
}

TEST_CASE("chord slide") {
  // Tor and Moeb are fixed by every slide
  for (int i = 1; i <= 4; i++)
    for (int dir : {+1, -1}) CHECK(chord_slide(tor_tcd(), i, dir) == tor_tcd());
  for (int i = 1; i <= 2; i++)
    for (int dir : {+1, -1}) CHECK(chord_slide(mob_tcd(), i, dir) == mob_tcd());

  auto ann2 = juxtapose(ann_tcd(), ann_tcd());
  auto slid = chord_slide(ann2, 2, +1);
  CHECK(slid == tcd(2, {{1, 4}, {2, 3}}, {0, 0}));
  auto sig = slide_perm(ann2, 2, +1);
  REQUIRE(sig.has_value());
  CHECK(*sig == perm{1, 4, 2, 3});  // the cycle (4 3 2)

  CHECK_THROWS_WITH_AS(chord_slide(ann2, 9, +1), doctest::Contains("SiteOutOfRange"),
                       swb::error);
  CHECK_THROWS_WITH_AS(chord_slide_strict(ann2, 1, +1), doctest::Contains("NotAdmissible"),
                       swb::error);
}

TEST_CASE("inverse slide") {
  auto ann2 = juxtapose(ann_tcd(), ann_tcd());
  auto inv = inverse_slide(ann2, 2, +1);
  CHECK(inv == slide_move{4, -1});
  CHECK(chord_slide(chord_slide(ann2, 2, +1), inv.site, inv.dir) == ann2);
  CHECK_THROWS_WITH_AS(inverse_slide(mob_tcd(), 1, +1), doctest::Contains("NotAdmissible"),
                       swb::error);

  for (int n = 1; n <= 3; n++)
    for (const auto& t : enumerate_tcd(n))
      for (int i = 1; i <= 2 * n; i++)
        for (int dir : {+1, -1}) {
          if (!slide_admissible(t, i, dir)) continue;
          auto inv2 = inverse_slide(t, i, dir);
          CHECK(chord_slide(chord_slide(t, i, dir), inv2.site, inv2.dir) == t);
        }
}

TEST_CASE("boundary graph") {
  CHECK(boundary_component_count(mob_tcd()) == 1);
  CHECK(boundary_component_count(ann_tcd()) == 2);
  CHECK(boundary_component_count(tor_tcd()) == 1);
  CHECK(boundary_component_count(empty_tcd()) == 1);

  // a path joins (1,-1) to (2N,+1)
  for (const auto& t : enumerate_tcd(3)) {
    auto g = boundary_graph(t);
    CHECK(g.degree(boundary_vertex_id(1, -1)) == 1);
    CHECK(g.degree(boundary_vertex_id(2 * t.rank, +1)) == 1);
    CHECK(oracles::brute_connected(g, boundary_vertex_id(1, -1),
                                   boundary_vertex_id(2 * t.rank, +1)));
    // closing the graph does not change the component count
    CHECK(component_count(boundary_graph(t, true)) == component_count(g));
  }
}

TEST_CASE("juxtaposition and insertion") {
  CHECK(juxtapose(tor_tcd(), mob_tcd()) == p2_datum());
  CHECK(insert_tcd(mob_tcd(), 1, tor_tcd()) == permute(cycle_perm(3), p2_datum()));
  CHECK(juxtapose(p2_datum(), empty_tcd()) == p2_datum());
  CHECK(juxtapose(empty_tcd(), p2_datum()) == p2_datum());
  CHECK_THROWS_WITH_AS(insert_tcd(mob_tcd(), 7, tor_tcd()),
                       doctest::Contains("HeightOutOfRange"), swb::error);

  // insertion associativity and star behaviour, small exhaustive sweep
  auto tc1 = enumerate_tcd(1);
  for (const auto& t1 : tc1)
    for (const auto& t2 : tc1)
      for (const auto& t3 : enumerate_tcd(2)) {
        for (int d1 = 0; d1 <= t2.points(); d1++)
          for (int d2 = 0; d2 <= t3.points(); d2++)
            CHECK(insert_tcd(t3, d2, insert_tcd(t2, d1, t1)) ==
                  insert_tcd(insert_tcd(t3, d2, t2), d1 + d2, t1));
        for (int d1 = 0; d1 <= t3.points(); d1++)
          for (int d2 = d1 + 1; d2 <= t3.points(); d2++)
            CHECK(insert_tcd(insert_tcd(t3, d2, t2), d1, t1) ==
                  insert_tcd(insert_tcd(t3, d1, t1), d2 + t1.points(), t2));
        for (int d = 0; d <= t3.points(); d++)
          CHECK(star(insert_tcd(t3, d, t1)) ==
                insert_tcd(star(t3), t3.points() - d, star(t1)));
      }
}

TEST_CASE("conjugation identities for slides") {
  for (int n = 1; n <= 3; n++) {
    auto omega = omega_perm(n);
    for (const auto& t : enumerate_tcd(n)) {
      for (int i = 1; i <= 2 * n; i++)
        for (int dir : {+1, -1})
          CHECK(chord_slide(t, i, dir) ==
                permute(omega, chord_slide(permute(omega, t), omega[i - 1], -dir)));
      auto c = cycle_perm(n);
      auto cinv = invert_perm(c);
      for (int i = 2; i < 2 * n; i++) {
        if (!t.has_arc(i + 1, t.partner(i + 1))) continue;
        int ip = t.partner(i + 1);
        auto rhs = permute(cinv, chord_slide(permute(c, t), i - 1, +1));
        if (ip == 1) rhs = permute(cinv, rhs);
        CHECK(chord_slide(t, i, +1) == rhs);
      }
    }
  }
}

TEST_CASE("slide invariants") {
  for (int n = 1; n <= 3; n++)
    for (const auto& t : enumerate_tcd(n)) {
      int bc = boundary_component_count(t);
      int nul = gf2_nullity(im_of(t));
      for (int i = 1; i <= 2 * n; i++)
        for (int dir : {+1, -1}) {
          if (!slide_admissible(t, i, dir)) continue;
          auto t2 = chord_slide(t, i, dir);
          CHECK(boundary_component_count(t2) == bc);
          CHECK(t2.orientable() == t.orientable());
          CHECK(gf2_nullity(im_of(t2)) == nul);
        }
    }
}

TEST_CASE("evacuation and boundary slides satisfy the height identities") {
  for (int n1 = 1; n1 <= 2; n1++)
    for (int n2 = 1; n2 <= 2; n2++)
      for (const auto& t1 : enumerate_tcd(n1))
        for (const auto& t2 : enumerate_tcd(n2))
          for (int d = 0; d < 2 * n2; d++) {
            auto combined = insert_tcd(t2, d, t1);
            int i = t2.partner(d + 1);
            int sp = t2.twists[t2.arc_index_of(d + 1)];
            auto ev = evacuation(combined, +1, d + 1, d + 2 * n1);
            if (sp == 0)
              CHECK(ev.result == insert_tcd(t2, i, t1));
            else
              CHECK(ev.result == insert_tcd(t2, i - 1, star(t1)));
            CHECK(apply_moves(combined, ev.moves) == ev.result);

            auto bs = boundary_slide_seq(combined, -1, d, t1);
            CHECK(bs.result == insert_tcd(t2, d + 1, t1));
            if (d > 0) {
              auto up = boundary_slide_seq(combined, +1, d, t1);
              CHECK(up.result == insert_tcd(t2, d - 1, t1));
            }
          }
  CHECK_THROWS_WITH_AS(
      boundary_slide_seq(juxtapose(tor_tcd(), mob_tcd()), -1, 1, mob_tcd()),
      doctest::Contains("NotAnInsertion"), swb::error);
}

TEST_CASE("the three-band rewrite reproduces the expected move sequence") {
  auto mob3 = juxtapose(mob_tcd(), juxtapose(mob_tcd(), mob_tcd()));
  auto firsts = std::vector<slide_move>{{2, +1}, {5, -1}, {2, +1}, {4, -1}};
  auto mid = apply_moves(mob3, firsts);
  CHECK(mid == insert_tcd(mob_tcd(), 1, tor_tcd()));
  auto bs = boundary_slide_seq(mid, +1, 1, tor_tcd());
  CHECK(bs.result == juxtapose(mob_tcd(), tor_tcd()));

  auto all = mob3_rewrite_moves(0, 3);
  REQUIRE(all.size() == firsts.size() + bs.moves.size());
  for (std::size_t k = 0; k < firsts.size(); k++) CHECK(all[k] == firsts[k]);
  CHECK(apply_moves(mob3, all) == juxtapose(mob_tcd(), tor_tcd()));
}

TEST_CASE("intersection matrices") {
  CHECK(im_of(mob_tcd()).entries == std::vector<std::vector<int>>{{1}});
  CHECK(im_of(ann_tcd()).entries == std::vector<std::vector<int>>{{0}});
  CHECK(im_of(tor_tcd()).entries == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(im_of(p2_datum()).entries ==
        std::vector<std::vector<int>>{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  CHECK(gf2_nullity(im_of(p2_datum())) == 0);
  CHECK(gf2_nullity(im_of(juxtapose(ann_tcd(), ann_tcd()))) == 2);

  // direct-sum rule under juxtaposition
  std::mt19937 rng(3);
  for (int it = 0; it < 50; it++) {
    auto a = oracles::random_tcd(rng, 1 + it % 3);
    auto b = oracles::random_tcd(rng, 1 + (it / 3) % 3);
    auto m = im_of(juxtapose(b, a));
    auto ma = im_of(a), mb = im_of(b);
    for (int i = 0; i < m.size; i++)
      for (int j = 0; j < m.size; j++) {
        int want = 0;
        if (i < ma.size && j < ma.size)
          want = ma.entries[i][j];
        else if (i >= ma.size && j >= ma.size)
          want = mb.entries[i - ma.size][j - ma.size];
        CHECK(m.entries[i][j] == want);
      }
  }
}

TEST_CASE("surface types") {
  CHECK(classify_type(tor_tcd()) == surface_type{0, 1, 0});
  CHECK(classify_type(juxtapose(tor_tcd(), mob_tcd())) == surface_type{0, 1, 1});
  auto mob3 = juxtapose(mob_tcd(), juxtapose(mob_tcd(), mob_tcd()));
  CHECK(classify_type(mob3) == surface_type{0, 1, 1});
  CHECK(classify_type(empty_tcd()) == surface_type{0, 0, 0});

  // type is constant on slide orbits and orbits biject with realizable types
  for (int n = 0; n <= 3; n++) {
    auto all = enumerate_tcd(n);
    std::map<tcd, int> orbit_of;
    int orbits = 0;
    for (const auto& t : all) {
      if (orbit_of.count(t)) continue;
      int id = orbits++;
      std::vector<tcd> frontier{t};
      orbit_of[t] = id;
      auto want = classify_type(t);
      while (!frontier.empty()) {
        auto cur = frontier.back();
        frontier.pop_back();
        CHECK(classify_type(cur) == want);
        for (int i = 1; i <= 2 * n; i++)
          for (int dir : {+1, -1}) {
            auto nxt = chord_slide(cur, i, dir);
            if (!orbit_of.count(nxt)) {
              orbit_of[nxt] = id;
              frontier.push_back(nxt);
            }
          }
      }
    }
    int realizable = 0;
    for (int b = 0; b <= n; b++)
      for (int g = 0; 2 * g + b <= n; g++)
        for (int tt = 0; tt <= 2; tt++)
          if (b + 2 * g + tt == n) realizable++;
    CHECK(orbits == realizable);
  }
}

TEST_CASE("caravan normalization") {
  // caravans are already normal
  for (int b = 0; b <= 1; b++)
    for (int g = 0; g <= 1; g++)
      for (int tt = 0; tt <= 2; tt++) {
        auto c = caravan_tcd({b, g, tt});
        auto res = caravan_normalize(c);
        CHECK(res.trace.empty());
        CHECK(res.type == surface_type{b, g, tt});
      }

  auto mob3 = juxtapose(mob_tcd(), juxtapose(mob_tcd(), mob_tcd()));
  auto res = caravan_normalize(mob3);
  CHECK(res.type == surface_type{0, 1, 1});
  CHECK(apply_moves(mob3, res.trace) == caravan_tcd({0, 1, 1}));

  for (int n = 0; n <= 3; n++)
    for (const auto& t : enumerate_tcd(n)) {
      auto r = caravan_normalize(t);
      CHECK(r.type == classify_type(t));
      CHECK(apply_moves(t, r.trace) == caravan_tcd(r.type));
    }
}

TEST_CASE("width") {
  auto t = tcd(3, {{1, 2}, {3, 6}, {4, 5}}, {0, 0, 0});
  CHECK(width_of(t, {1, 2}) == 0);
  CHECK(width_of(t, {3, 6}) == 2);
  CHECK_THROWS_WITH_AS(width_of(t, {1, 4}), doctest::Contains("UnknownArc"), swb::error);
}

TEST_CASE("tc-star membership") {
  CHECK(is_in_tc_star(tor_tcd()));
  CHECK(!is_in_tc_star(ann_tcd()));
  CHECK(is_in_tc_star(mob_tcd()));
  for (const auto& t : enumerate_tcd(3))
    CHECK(is_in_tc_star(t) == (gf2_nullity(im_of(t)) == 0));
}
