#include "scarrays/errors.hpp"
#include "scarrays/fixtures.hpp"
#include "scarrays/region.hpp"

#include <doctest.h>

#include <set>

using namespace sca;

TEST_CASE("trivial and free geodesics") {
  Geometry free2(fixtures::free_group(2));
  VertexId u = free2.vertex(parse_word("abA", free2.presentation().alphabet));
  const GeodesicSet& same = free2.geodesics(u, u);
  CHECK(same.distance == 0);
  REQUIRE(same.paths.size() == 1);
  CHECK(same.paths[0].length() == 0);
  VertexId v = free2.vertex(parse_word("bbA", free2.presentation().alphabet));
  const GeodesicSet& gs = free2.geodesics(u, v);
  CHECK(gs.distance == 6);
  CHECK(gs.paths.size() == 1);
  CHECK(free2.contours_near({u, v}).empty());
}

TEST_CASE("an arc of a long contour is its unique geodesic") {
  Presentation p = fixtures::p140();
  Geometry geo(p);
  const Word& r = p.relators[0];
  VertexId u = geo.vertex(Word(r.begin(), r.begin() + 100));
  VertexId v = geo.vertex(Word(r.begin(), r.begin() + 107));
  const GeodesicSet& gs = geo.geodesics(u, v);
  CHECK(gs.distance == 7);
  REQUIRE(gs.paths.size() == 1);
  CHECK(gs.paths[0].labels == Word(r.begin() + 100, r.begin() + 107));
}

TEST_CASE("contour against a path") {
  Presentation p = fixtures::p140();
  Geometry geo(p);
  const Word& r = p.relators[0];
  ContourId c = geo.trace(geo.identity(), r);
  CHECK(geo.contour(c).length() == r.size());

  Word five(r.begin(), r.begin() + 5);
  Letter off = r[5] == make_letter(0, 1) ? make_letter(1, 1) : make_letter(0, 1);
  if (off == inv(r[4])) off = inv(off);
  Word label = five;
  label.push_back(off);
  label.push_back(off);
  Path path = geo.path_from(geo.identity(), label);
  auto arc = geo.intersect(c, path);
  REQUIRE(arc);
  CHECK(arc->start == 0);
  CHECK(arc->length == 5);

  Path sub = geo.path_from(geo.vertex(Word(r.begin(), r.begin() + 40)), Word(r.begin() + 40, r.begin() + 52));
  auto whole = geo.intersect(c, sub);
  REQUIRE(whole);
  CHECK(whole->length == 12);

  Path away = geo.path_from(geo.vertex(parse_word("AAAA", p.alphabet)), parse_word("A", p.alphabet));
  CHECK_FALSE(geo.intersect(c, away));
}

TEST_CASE("contours through the identity on the staircase") {
  Presentation p = fixtures::p8();
  Geometry geo(p);
  std::vector<ContourId> cs = geo.contours_near({geo.identity()});
  // one loop per starting position on the primitive relator
  std::set<std::vector<EdgeKey>> distinct;
  for (ContourId c : cs) {
    CHECK(geo.contour(c).has_vertex(geo.identity()));
    distinct.insert(geo.contour(c).sorted_edges);
  }
  CHECK(distinct.size() == cs.size());
  CHECK(cs.size() == 35);
}

TEST_CASE("vertices are group elements") {
  Presentation p = fixtures::q34();
  Geometry geo(p);
  const Word& r = p.relators[0];
  CHECK(geo.vertex(r) == geo.identity());
  Word half(r.begin(), r.begin() + 10);
  Word rest = inverse(Word(r.begin() + 10, r.end()));
  CHECK(geo.vertex(half) == geo.vertex(rest));
  VertexId k = geo.vertex(parse_word("ab", p.alphabet));
  VertexId g = geo.vertex(parse_word("cD", p.alphabet));
  CHECK(geo.translate(k, g) == geo.vertex(parse_word("abcD", p.alphabet)));
  CHECK(geo.neighbor(geo.identity(), make_letter(0, 1)) == geo.vertex(parse_word("a", p.alphabet)));
}

TEST_CASE("hull geodesics match the ball") {
  Presentation p = fixtures::toy();
  Geometry geo(p);
  Region reg(p, 6);
  for (std::size_t v = 0; v < reg.num_vertices(); ++v) {
    if (reg.depth(v) > 3) continue;
    for (std::size_t u = 0; u < reg.num_vertices(); u += 7) {
      if (reg.depth(u) > 2) continue;
      GeodesicSet ball = distance_and_geodesics(reg, geo, reg.word(u), reg.word(v));
      const GeodesicSet& hull = geo.geodesics(geo.vertex(reg.word(u)), geo.vertex(reg.word(v)));
      REQUIRE(ball.distance == hull.distance);
      std::set<Word> a, b;
      for (const auto& q : ball.paths) a.insert(q.labels);
      for (const auto& q : hull.paths) b.insert(q.labels);
      REQUIRE(a == b);
    }
  }
}

TEST_CASE("arcs on a path") {
  Presentation p = fixtures::q34();
  Geometry geo(p);
  const Word& r = p.relators[0];
  Path path = geo.path_from(geo.identity(), Word(r.begin(), r.begin() + 12));
  auto arcs = geo.arcs_on_path(path, rat(1, 4));
  REQUIRE(arcs.size() == 1);
  CHECK(arcs[0].length == 12);
  CHECK(geo.arcs_on_path(path, rat(1, 2)).empty());
}
