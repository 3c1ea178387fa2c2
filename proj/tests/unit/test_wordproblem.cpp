#include "scarrays/fixtures.hpp"
#include "scarrays/wordproblem.hpp"

#include <doctest.h>

#include <random>

using namespace sca;

TEST_CASE("Dehn reduction on the staircase") {
  Presentation p = fixtures::p8();
  DehnIndex d(p);
  Word r = p.relators[0];
  CHECK(d.reduce(r).empty());
  CHECK(d.reduce(concat(r, r)).empty());
  Word ab = parse_word("ab", p.alphabet);
  CHECK(d.reduce(ab) == ab);
  CHECK(d.is_identity(Word{}));
  CHECK_FALSE(d.is_identity(parse_word("a", p.alphabet)));
  CHECK_FALSE(d.is_identity(parse_word("B", p.alphabet)));
}

TEST_CASE("conjugates of a relator are trivial") {
  Presentation p = fixtures::q34();
  DehnIndex d(p);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    Word g;
    std::size_t len = rng() % 6;
    while (g.size() < len) {
      Letter x = letter_from_index(static_cast<int>(rng() % 10));
      if (!g.empty() && g.back() == inv(x)) continue;
      g.push_back(x);
    }
    Word c = multiply(multiply(g, rotate(p.relators[0], rng() % 34)), inverse(g));
    CHECK(d.is_identity(c));
  }
}

TEST_CASE("Greendlinger subwords") {
  Presentation p = fixtures::p8();
  Word r = p.relators[0];
  auto hit = find_greendlinger_subword(r, p, rat(1, 2));
  REQUIRE(hit);
  CHECK(hit->subword_length == r.size());
  CHECK_FALSE(find_greendlinger_subword(parse_word("ab", p.alphabet), p, rat(1, 2)));

  // 33 letters of a 35-letter relator clear the 10/11 threshold
  Word w(r.begin(), r.begin() + 33);
  Word tail = parse_word("AAA", p.alphabet);
  w.insert(w.end(), tail.begin(), tail.end());
  free_reduce_inplace(w);
  auto h2 = find_greendlinger_subword(w, p, rat(10, 11));
  REQUIRE(h2);
  CHECK(h2->subword_length >= 32);
  Word shorter(r.begin(), r.begin() + 31);
  CHECK_FALSE(find_greendlinger_subword(shorter, p, rat(10, 11)));
}

TEST_CASE("relevant relator bound") {
  CHECK(relevant_relator_bound(5) == 20);
  CHECK(relevant_relator_bound(0) == 0);
}
