#include "scarrays/errors.hpp"
#include "scarrays/fixtures.hpp"

#include <doctest.h>

#include <set>

using namespace sca;

namespace {

// Longest common prefix over distinct pairs of cyclic shifts of r^{±1}.
std::size_t brute_max_piece(const std::vector<Word>& rels, const Rational& lambda, bool& verdict) {
  std::set<Word> all;
  for (const auto& r : rels)
    for (std::size_t s = 0; s < r.size(); ++s) {
      all.insert(rotate(r, s));
      all.insert(rotate(inverse(r), s));
    }
  std::vector<Word> v(all.begin(), all.end());
  std::size_t best = 0;
  verdict = true;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (i == j) continue;
      std::size_t cap = std::min(v[i].size(), v[j].size()), k = 0;
      while (k < cap && v[i][k] == v[j][k]) ++k;
      best = std::max(best, k);
      if (!(Rational(static_cast<long>(k)) < lambda * static_cast<long>(cap))) verdict = false;
    }
  return best;
}

}  // namespace

TEST_CASE("parse presentation text") {
  Presentation p = parse_presentation("gens: a b\nlambda: 1/6\naba^-1b^-1\n");
  CHECK(p.rank() == 2);
  CHECK(p.lambda == rat(1, 6));
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0].size() == 4);
  CHECK_THROWS_AS(parse_presentation("gens: a\nab(c\n"), ParseError);
}

TEST_CASE("piece table against brute force") {
  for (const Presentation& p : {fixtures::commutator(), fixtures::p8(), fixtures::toy(), fixtures::q34(),
                                fixtures::r35()}) {
    bool verdict = false;
    std::size_t best = brute_max_piece(p.relators, p.lambda, verdict);
    PieceReport pr = piece_table(p);
    CHECK(pr.max_piece_length == best);
    CHECK(pr.lambda_verdict == verdict);
  }
  CHECK_FALSE(piece_table(fixtures::commutator()).lambda_verdict);
  CHECK(piece_table(fixtures::commutator()).max_piece_length == 1);
  CHECK(piece_table(fixtures::q34()).lambda_verdict);
  CHECK(piece_table(fixtures::toy()).lambda_verdict);
}

TEST_CASE("staircase of height 7 has a piece of length 12") {
  PieceReport pr = piece_table(fixtures::p8());
  CHECK(pr.max_piece_length == 12);
  CHECK_FALSE(pr.lambda_verdict);
  REQUIRE(pr.witness);
  CHECK(pr.witness->piece.size() == 12);
  CHECK(pr.symmetrized_size == 70);
}

TEST_CASE("empty relator set") {
  Presentation p = fixtures::free_group(1);
  PieceReport pr = piece_table(p);
  CHECK(pr.max_piece_length == 0);
  CHECK(pr.lambda_verdict);
  CHECK_FALSE(star_condition(p));
}

TEST_CASE("generated staircases") {
  CHECK(generate_family(7).relators[0].size() == 35);
  CHECK(generate_family(1).relators[0].size() == 2);
  CHECK(generate_family(140).relators[0].size() == 10010);
  CHECK_THROWS_AS(generate_family(0), InvalidParams);
}

TEST_CASE("normalize_star splits short relators off") {
  auto [big, small] = normalize_star(fixtures::p8());
  CHECK(big.relators.size() == 1);
  CHECK(small.relators.empty());

  Presentation cube = symmetrize(parse_presentation("gens: a b\nlambda: 1/6\naaa\n"));
  auto [b2, s2] = normalize_star(cube);
  CHECK(b2.relators.empty());
  CHECK(s2.relators.size() == 1);
  CHECK(s2.alphabet.size() == 2);

  Presentation mixed = symmetrize(parse_presentation("gens: a b c d\nlambda: 1/6\naaa\nbcdbcdbcDbcD\n"));
  auto [b3, s3] = normalize_star(mixed);
  CHECK(b3.relators.size() == 1);
  CHECK(s3.relators.size() == 1);
  for (const auto& g : b3.alphabet) CHECK(g != "a");

  Presentation clash = symmetrize(parse_presentation("gens: a b\nlambda: 1/6\naaa\nabababaBaB\n"));
  CHECK_THROWS_AS(normalize_star(clash), InvariantViolation);
}

TEST_CASE("truncate drops long relators") {
  Presentation p = symmetrize(parse_presentation("gens: a b\nlambda: 1/6\naaa\nabababaBaB\n"));
  CHECK(truncate(p, 5).relators.size() == 1);
  CHECK(truncate(p, 10).relators.size() == 2);
}
