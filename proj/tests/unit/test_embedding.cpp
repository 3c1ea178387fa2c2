#include "scarrays/embedding.hpp"
#include "scarrays/errors.hpp"
#include "scarrays/fixtures.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace sca;

namespace {

long scan(const Rational& lambda) {
  for (long M = 3;; ++M) {
    Rational m(M);
    if (((1 + 1 / m) * lambda + 2 / m) / (1 - 2 / m) < Rational(1, 33)) return M;
  }
}

}  // namespace

TEST_CASE("least exponent") {
  CHECK(minimal_exponent(rat(15, 512)) == scan(rat(15, 512)));
  CHECK(minimal_exponent(rat(15, 512)) == 2078);
  CHECK(exponent_condition(rat(15, 512), 2078));
  CHECK_FALSE(exponent_condition(rat(15, 512), 2077));
  CHECK(minimal_exponent(rat(1, 100)) == scan(rat(1, 100)));
}

TEST_CASE("psi lengths") {
  CHECK(psi_length(5, 0) == 2 * 6 * 5 + 1);
  CHECK(psi_length(2078, 3) == 2ull * (3 + 2078 + 1) * 2078 + 1);
}

TEST_CASE("letter graph") {
  LetterGraph g = letter_graph(fixtures::p8());
  CHECK(g.components.size() == 1);
  CHECK(g.max_valency() == 1);
  LetterGraph c = letter_graph(fixtures::chain_source(9));
  CHECK(c.max_valency() == 8);
  Presentation two = symmetrize(parse_presentation("gens: a b c d\nlambda: 1/6\nabab\ncdcd\n"));
  LetterGraph t = letter_graph(two);
  CHECK(t.components.size() == 2);
  CHECK(split_components(two, t).size() == 2);
  CHECK(t.distances(0)[1] == 1);
  CHECK(t.distances(0)[2] == -1);
}

TEST_CASE("reduced word enumeration") {
  CHECK(nth_reduced_word(2, 2, 0) == Word{make_letter(0, 1), make_letter(0, 1)});
  CHECK(nth_reduced_word(2, 2, 1) == Word{make_letter(0, 1), make_letter(1, 1)});
  std::set<Word> seen;
  for (std::uint64_t k = 0; k < 36; ++k) {
    Word w = nth_reduced_word(2, 3, k);
    CHECK(is_reduced(w));
    seen.insert(w);
  }
  CHECK(seen.size() == 36);
}

TEST_CASE("chain of nine letters at valency eight") {
  EmbedOptions o;
  o.N = 8;
  o.cap = 100000;
  EmbeddingResult r = embed(fixtures::chain_source(9), o);
  CHECK(r.M == 2078);
  CHECK(r.exponent_ok);
  CHECK(r.generator_pieces.verdict);
  CHECK(r.pieces.verdict);
  CHECK(r.passed());
  REQUIRE(r.psi.size() == 9);
  for (std::size_t x = 0; x < 9; ++x) CHECK(r.psi[x].size() == psi_length(r.M, r.distance[x]));
  for (const auto& l : r.lengths) CHECK(l.ok);
  CHECK(r.alphabet.size() == 2 * (8 + 3));
  o.N = 7;
  CHECK_THROWS_AS(embed(fixtures::chain_source(9), o), ValencyExceeded);
}

TEST_CASE("short source relators break the bound") {
  EmbedOptions o;
  o.N = 2;
  o.cap = 1000;
  EmbeddingResult r = embed(fixtures::chain_source(3), o);
  CHECK_FALSE(r.pieces.verdict);
  CHECK_FALSE(r.passed());
}

TEST_CASE("rewritten relator of the seven-letter source") {
  EmbedOptions o;
  o.N = 6;
  o.cap = 1000;
  EmbeddingResult r = embed(fixtures::r35_source(), o);
  CHECK(r.pieces.verdict);
  CHECK(r.withheld == 1);
  CHECK(r.emitted == 0);
}
