#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "swb/diagram.hpp"
#include "swb/moves.hpp"

using namespace swb;

// Three-strand datum on a genus-one non-orientable frame; its two curves are
// one untwisted strand bundle and one strand through the twisted band.
static swb_datum theta1() {
  frame fr(tcd(2, {{1, 3}, {2, 4}}, {0, 1}), 3, 1, {2, 1});
  std::vector<vertex_pair> pairs = {
      {{0, 1}, {3, 2}}, {{0, 2}, {3, 1}}, {{0, 3}, {1, 1}}, {{1, 2}, {2, 1}}, {{5, 1}, {4, 1}}};
  return swb_datum(fr, pairs);
}

// One-band datum with the core curve of the twisted band plus a boundary
// strand and a northern cap.
static swb_datum theta4() {
  frame fr(mob_tcd(), 1, 3, {1});
  std::vector<vertex_pair> pairs = {{{1, 1}, {2, 1}}, {{0, 1}, {3, 3}}, {{3, 2}, {3, 1}}};
  return swb_datum(fr, pairs);
}

TEST_CASE("frame basics") {
  frame fr(tor_tcd(), 2, 2, {1, 1});
  CHECK(fr.complexity() == 2);
  CHECK(fr.vertex_count() == 8);
  auto verts = fr.vertex_list();
  CHECK(verts.front() == frame_vertex{0, 1});
  CHECK(verts.back() == frame_vertex{5, 1});  // north slots run downwards
  for (std::size_t k = 0; k + 1 < verts.size(); k++)
    CHECK(fr.before(verts[k], verts[k + 1]));
  for (std::size_t k = 0; k < verts.size(); k++)
    CHECK(fr.vertex_rank(verts[k]) == static_cast<int>(k));

  CHECK_THROWS_WITH_AS(frame(ann_tcd(), 1, 1, {0}), doctest::Contains("BadFrame"),
                       swb::error);
}

TEST_CASE("iota") {
  frame fr(tcd(2, {{1, 3}, {2, 4}}, {0, 1}), 0, 0, {2, 2});
  CHECK(fr.iota({1, 1}) == frame_vertex{3, 2});   // untwisted reverses slots
  CHECK(fr.iota({2, 1}) == frame_vertex{4, 1});   // twisted keeps slots
  std::mt19937 rng(5);
  for (int it = 0; it < 40; it++) {
    auto th = oracles::random_swb(rng, 2, 2);
    for (const auto& v : th.fr.vertex_list())
      if (th.fr.is_internal(v)) CHECK(th.fr.iota(th.fr.iota(v)) == v);
  }
  CHECK_THROWS_WITH_AS(fr.iota({0, 1}), doctest::Contains("NotInternal"), swb::error);
}

TEST_CASE("curve graph shape") {
  std::mt19937 rng(9);
  for (int it = 0; it < 40; it++) {
    auto th = oracles::random_swb(rng, 2, 2);
    auto g = curve_graph(th);
    auto verts = th.fr.vertex_list();
    for (std::size_t r = 0; r < verts.size(); r++) {
      if (th.fr.is_internal(verts[r]))
        CHECK(g.degree(static_cast<int>(r)) == 2);
      else
        CHECK(g.degree(static_cast<int>(r)) == 1);
    }
    CHECK_NOTHROW(classify_degree_le2(g));
  }
  CHECK(component_count(curve_graph(id_datum(1))) == 1);
  CHECK(component_count(curve_graph(cup_datum(1))) == 1);
  CHECK(component_count(curve_graph(mob_generator(1))) == 1);
}

TEST_CASE("complement graph") {
  CHECK(complement_component_count(zero_datum()) == 1);
  CHECK(complement_component_count(theta1()) == 1);
  CHECK(complement_component_count(tor_generator(0, 0)) == 1);

  std::mt19937 rng(13);
  for (int it = 0; it < 40; it++) {
    auto th = oracles::random_swb(rng, 2, 2);
    CHECK(complement_component_count(th) <= component_count(curve_graph(th)) + 1);
  }
}

TEST_CASE("component classification") {
  auto infos = classify_components(theta1());
  REQUIRE(infos.size() == 2);
  bool saw_twisted = false;
  for (const auto& c : infos) {
    CHECK(c.external);
    if (c.twist == 1) {
      saw_twisted = true;
      CHECK(!c.separating);
    }
  }
  CHECK(saw_twisted);

  auto infos4 = classify_components(theta4());
  REQUIRE(infos4.size() == 3);
  int internal_twisted = 0, external_untwisted = 0, fully_external = 0;
  for (const auto& c : infos4) {
    if (!c.external) {
      CHECK(c.twist == 1);
      CHECK(!c.separating);
      internal_twisted++;
    } else if (c.fully_external) {
      fully_external++;
    } else {
      CHECK(c.twist == 0);
      external_untwisted++;
    }
  }
  CHECK(internal_twisted == 1);
  CHECK(external_untwisted == 1);
  CHECK(fully_external == 1);

  // a twisted component is never separating
  std::mt19937 rng(17);
  for (int it = 0; it < 30; it++) {
    auto th = oracles::random_swb(rng, 2, 2);
    for (const auto& c : classify_components(th))
      if (c.twist == 1) CHECK(!c.separating);
  }
}

TEST_CASE("deletion") {
  auto cup = cup_datum(1);
  auto comps = components_basic(cup);
  REQUIRE(comps.size() == 1);
  CHECK(delete_component(cup, comps[0].vertices) == zero_datum());

  std::mt19937 rng(23);
  for (int it = 0; it < 40; it++) {
    auto th = oracles::random_swb(rng, 2, 2);
    auto cs = components_basic(th);
    if (cs.size() < 2) continue;
    // deletion commutes between distinct components and with star
    auto del0 = delete_component(th, cs[0].vertices);
    auto del1 = delete_component(th, cs[1].vertices);
    auto image = [](const std::vector<frame_vertex>& gone,
                    const std::vector<frame_vertex>& comp) {
      std::vector<frame_vertex> out;
      for (const auto& v : comp) {
        int below = 0;
        for (const auto& g : gone)
          if (g.level == v.level && g.slot < v.slot) below++;
        out.push_back({v.level, v.slot - below});
      }
      return out;
    };
    CHECK(delete_component(del0, image(cs[0].vertices, cs[1].vertices)) ==
          delete_component(del1, image(cs[1].vertices, cs[0].vertices)));
    auto starred = star(th);
    std::vector<frame_vertex> comp_star;
    int lmax = th.fr.north_level();
    for (const auto& v : cs[0].vertices)
      comp_star.push_back({lmax - v.level, th.fr.f_level(v.level) + 1 - v.slot});
    CHECK(star(delete_component(th, cs[0].vertices)) ==
          delete_component(starred, comp_star));
  }
}

TEST_CASE("star") {
  CHECK(star(cup_datum(1)) == cap_datum(1));
  CHECK(star(tor_generator(1, 2)) == tor_generator(2, 1));
  CHECK(star(mob_generator(2)) == mob_generator(2));
  std::mt19937 rng(29);
  for (int it = 0; it < 40; it++) {
    auto th = oracles::random_swb(rng, 2, 2);
    CHECK(star(star(th)) == th);
    // twists and separating status survive the reflection
    auto a = classify_components(th);
    auto b = classify_components(star(th));
    std::vector<std::pair<int, bool>> ta, tb;
    for (const auto& c : a) ta.push_back({c.twist, c.separating});
    for (const auto& c : b) tb.push_back({c.twist, c.separating});
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    CHECK(ta == tb);
  }
}

TEST_CASE("juxtaposition") {
  auto loop = juxtapose(cap_datum(1), cup_datum(1));
  CHECK(loop.linking == 1);
  CHECK(loop.datum == zero_datum());

  std::mt19937 rng(31);
  for (int it = 0; it < 60; it++) {
    auto th = oracles::random_swb(rng, 2, 2);
    auto [n, m] = th.type();
    auto left = juxtapose(id_datum(m), th);
    CHECK(left.linking == 0);
    CHECK(left.datum == th);
    auto right = juxtapose(th, id_datum(n));
    CHECK(right.linking == 0);
    CHECK(right.datum == th);
  }
  CHECK_THROWS_WITH_AS(juxtapose(cup_datum(1), cup_datum(1)),
                       doctest::Contains("TypeMismatch"), swb::error);
}

TEST_CASE("juxtaposition associativity with linking bookkeeping") {
  std::mt19937 rng(37);
  for (int it = 0; it < 60; it++) {
    auto th1 = oracles::random_swb(rng, 2, 2);
    auto th2 = oracles::random_swb_typed(rng, 2, th1.fr.f_north, 2);
    auto th3 = oracles::random_swb_typed(rng, 2, th2.fr.f_north, 2);
    auto a = juxtapose(th2, th1);
    auto b = juxtapose(th3, a.datum);
    auto c = juxtapose(th3, th2);
    auto d = juxtapose(c.datum, th1);
    CHECK(b.datum == d.datum);
    CHECK(a.linking + b.linking == d.linking + c.linking);

    // star is an anti-homomorphism preserving the linking number
    auto s = juxtapose(star(th1), star(th2));
    CHECK(s.datum == star(a.datum));
    CHECK(s.linking == a.linking);
  }
}

TEST_CASE("insertion decomposition") {
  std::mt19937 rng(41);
  for (int it = 0; it < 60; it++) {
    auto inner = oracles::random_tcd_star(rng, 1 + it % 2);
    auto outer = oracles::random_tcd_star(rng, 1 + (it / 2) % 2);
    std::uniform_int_distribution<int> dd(0, outer.points());
    int d = dd(rng);
    auto combined_t = insert_tcd(outer, d, inner);
    if (!is_in_tc_star(combined_t)) continue;
    auto th = oracles::random_swb_on(rng, combined_t, 2);
    auto parts = insertion_decompose(th, d, inner);
    CHECK(parts.inner.fr.t == inner);
    // no fully external components inside the block
    for (const auto& c : components_basic(parts.inner)) CHECK(!c.fully_external);
    // the embedding carries the inner pairing into the host pairing
    for (const auto& [u, v] : parts.inner.pairs) {
      frame_vertex hu{}, hv{};
      for (const auto& [iv, hostv] : parts.embed) {
        if (iv == u) hu = hostv;
        if (iv == v) hv = hostv;
      }
      CHECK(th.has_pair(hu, hv));
    }
    // frames reassemble
    CHECK(insert_frame(parts.outer_frame, d, parts.inner.fr) == th.fr);
    // determinism
    auto again = insertion_decompose(th, d, inner);
    CHECK(again.inner == parts.inner);
    CHECK(again.outer_frame == parts.outer_frame);
  }
  CHECK_THROWS_WITH_AS(insertion_decompose(theta1(), 1, mob_tcd()),
                       doctest::Contains("NotAnInsertion"), swb::error);
}

TEST_CASE("factorization") {
  std::mt19937 rng(43);
  int done = 0;
  for (int it = 0; it < 300 && done < 60; it++) {
    auto a = oracles::random_swb(rng, 2, 2);
    auto b = oracles::random_swb_typed(rng, 2, a.fr.f_north, 2);
    auto prod = juxtapose(b, a);
    if (prod.linking != 0) continue;  // factorization reproduces zero-linking splits
    done++;
    auto [f1, f2] = factorize(prod.datum, a.fr.t.rank);
    auto re = juxtapose(f2, f1);
    CHECK(re.linking == 0);
    CHECK(re.datum == prod.datum);
    CHECK(f1.fr.t == a.fr.t);
    CHECK(f2.fr.t == b.fr.t);
  }
  CHECK(done > 20);

  // degenerate split at rank 0
  auto th = theta1();
  auto [low, high] = factorize(th, 0);
  CHECK(low.fr.t.rank == 0);
  auto re = juxtapose(high, low);
  CHECK(re.linking == 0);
  CHECK(re.datum == th);

  CHECK_THROWS_WITH_AS(factorize(theta1(), 1), doctest::Contains("NotJuxtaposable"),
                       swb::error);
}
