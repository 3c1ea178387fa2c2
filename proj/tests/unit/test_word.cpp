#include "scarrays/presentation.hpp"
#include "scarrays/errors.hpp"

#include <doctest.h>

#include <set>

using namespace sca;

namespace {
const Alphabet ab{"a", "b"};
Word w(const char* s) { return parse_word(s, ab); }
}  // namespace

TEST_CASE("free and cyclic reduction") {
  CHECK(reduce(w("aAb")) == w("b"));
  CHECK(reduce(Word{}).empty());
  CHECK(reduce(w("baB"), ReduceMode::Cyclic) == w("a"));
  CHECK(reduce(w("abBA")).empty());
  Word x = w("abBaAb");
  free_reduce_inplace(x);
  CHECK(x == w("ab"));
}

TEST_CASE("parse and format round trip") {
  CHECK(parse_word("a^-1 b^3", ab) == w("Abbb"));
  CHECK(parse_word("(ab)^2", ab) == w("abab"));
  CHECK(parse_word("(ab)^-1", ab) == w("BA"));
  CHECK(format_word(w("aBBa"), ab) == "aB^2a");
  CHECK(parse_word(format_word(w("aBBa"), ab), ab) == w("aBBa"));
  CHECK_THROWS_AS(parse_word("ab(c", ab), ParseError);
  CHECK_THROWS_AS(parse_word("z", ab), ParseError);
}

TEST_CASE("letter encoding") {
  for (int i = 0; i < 6; ++i) CHECK(letter_index(letter_from_index(i)) == i);
  CHECK(inv(make_letter(2, 1)) == make_letter(2, -1));
}

TEST_CASE("primitive period and canonical rotation") {
  CHECK(primitive_period(w("ababab")) == 2);
  CHECK(primitive_period(w("aab")) == 3);
  Word r = w("bab");
  std::set<Word> images;
  for (std::size_t s = 0; s < 3; ++s) {
    images.insert(canonical_cyclic(rotate(r, s)));
    images.insert(canonical_cyclic(inverse(rotate(r, s))));
  }
  CHECK(images.size() == 1);
}

TEST_CASE("symmetrized sets") {
  CHECK(symmetrize(std::vector<Word>{w("ab")}).size() == 4);
  CHECK(symmetrize(std::vector<Word>{w("a")}).size() == 2);
  CHECK_THROWS_AS(symmetrize(std::vector<Word>{w("aA")}), EmptyRelator);

  // the staircase of height 7 is primitive, so its 35 shifts and their inverses are distinct
  Word r = staircase_word(7, make_letter(0, 1), make_letter(1, 1));
  REQUIRE(r.size() == 35);
  std::set<Word> brute;
  for (std::size_t s = 0; s < r.size(); ++s) {
    brute.insert(rotate(r, s));
    brute.insert(rotate(inverse(r), s));
  }
  CHECK(symmetrize(std::vector<Word>{r}).size() == brute.size());
  CHECK(brute.size() == 70);
  CHECK(SymmetrizedSet(generate_family(7)).size() == 70);
}
