#include "scarrays/fixtures.hpp"
#include "scarrays/properarray.hpp"

#include <doctest.h>

using namespace sca;

TEST_CASE("Lipschitz constant at the default constants") {
  ProperArrayParams p;
  CHECK(p.K1() == rat(10, 11));
  CHECK(p.K2() == rat(10, 11));
  CHECK(p.L() == 694);
  CHECK(p.L() == p.first().xi_bound() + p.second().eta_bound());
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("projections") {
  Presentation q = fixtures::q34();
  Geometry geo(q);
  ContourId c = geo.trace(geo.identity(), q.relators[0]);
  SparseVector v(Domain::Contours);
  CHECK(project_contours(v, geo).empty());
  v.set(c, 34);
  SparseVector pv = project_contours(v, geo);
  CHECK(pv.support_size() == 34);
  for (const auto& [k, x] : pv.entries()) CHECK(x == 1);

  SparseVector e(Domain::Edges);
  e.set(geo.edge(geo.identity(), make_letter(0, 1)), 1);
  SparseVector pe = project_edges(e, geo);
  CHECK(pe.support_size() == 2);
  CHECK(pe.l1() == 1);

  Path path = geo.path_from(geo.identity(), parse_word("abcde", q.alphabet));
  SparseVector run(Domain::Edges);
  for (EdgeKey k : geo.path_edges(path)) run.set(k, 1);
  SparseVector pr = project_edges(run, geo);
  CHECK(pr.l1() == 5);
  CHECK(pr.get(path.front()) == rat(1, 2));
  CHECK(pr.get(path.vertices[2]) == 1);

  SparseVector mixed(Domain::Edges);
  mixed.set(geo.edge(geo.identity(), make_letter(0, 1)), 1);
  mixed.set(geo.edge(geo.identity(), make_letter(1, 1)), -1);
  CHECK(project_edges(mixed, geo).l1() == 1);
}

TEST_CASE("free group: the array is the path") {
  Presentation p = fixtures::free_group(2);
  p.lambda = rat(1, 33);
  Geometry geo(p);
  ProperArray pa(geo, ProperArrayParams{});
  VertexId g = geo.vertex(parse_word("abAB", p.alphabet));
  CHECK(pa.phi(g, g).empty());
  const SparseVector& phi = pa.phi(geo.identity(), g);
  CHECK(phi.l1() == 4);
  PhiTildeStats s = pa.phi_tilde_stats(geo.identity(), g, geo.vertex(parse_word("a", p.alphabet)));
  CHECK(s.squared_norm == 4);
  CHECK(s.drift_ok);
  CHECK(s.drift == 1);
}

TEST_CASE("array on a relator arc") {
  Presentation q = fixtures::q34();
  Geometry geo(q);
  ProperArray pa(geo, ProperArrayParams{});
  const Word& r = q.relators[0];
  for (std::size_t m : {3, 8, 12, 16}) {
    VertexId h = geo.vertex(Word(r.begin(), r.begin() + m));
    const SparseVector& phi = pa.phi(geo.identity(), h);
    CHECK(phi.nonnegative());
    CHECK(phi.l1() >= static_cast<long>(m));
    CHECK(phi.l1() == pa.xi1(geo.identity(), h).l1() + pa.eta2(geo.identity(), h).l1());
    CHECK(phi == pa.phi(h, geo.identity()));
    for (int i = 0; i < 10; ++i) {
      VertexId k = geo.vertex(Word{letter_from_index(i)});
      PhiTildeStats s = pa.phi_tilde_stats(geo.identity(), h, k);
      CHECK(s.drift_ok);
      CHECK(s.drift <= 694);
      CHECK(s.squared_norm == phi.l1());
    }
  }
}
