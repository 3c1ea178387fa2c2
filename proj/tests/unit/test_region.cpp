#include "scarrays/errors.hpp"
#include "scarrays/fixtures.hpp"
#include "scarrays/region.hpp"

#include <doctest.h>

using namespace sca;

namespace {

std::vector<Word> reduced_words(int rank, int max_len) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == max_len) continue;
    for (int c = 0; c < 2 * rank; ++c) {
      Letter x = letter_from_index(c);
      if (!out[i].empty() && out[i].back() == inv(x)) continue;
      Word w = out[i];
      w.push_back(x);
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("ball sizes") {
  CHECK(Region(fixtures::free_group(2), 2).num_vertices() == 17);
  CHECK(Region(fixtures::free_group(2), 0).num_vertices() == 1);

  Presentation z3 = symmetrize(parse_presentation("gens: a\nlambda: 1/6\naaa\n"));
  CHECK(Region(z3, 3, RegionOptions{1000, true}).num_vertices() == 3);
  CHECK_THROWS_AS(Region(z3, 3), NotSmallCancellation);
}

TEST_CASE("fold agrees with Dehn on the staircase ball") {
  Presentation p = fixtures::p8();
  p.lambda = rat(1, 3);  // fold test only
  Region reg(p, 2, RegionOptions{100000, true});
  CHECK(reg.num_vertices() == 17);
}

TEST_CASE("fold agrees with Dehn on the toy ball") {
  Presentation p = fixtures::toy();
  Region reg(p, 4);
  DehnIndex d(p);
  auto words = reduced_words(3, 4);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j)
      REQUIRE(d.equal(words[i], words[j]) == (reg.find_word(words[i]) == reg.find_word(words[j])));
  for (std::size_t v = 0; v < reg.num_vertices(); ++v) CHECK(reg.depth(v) == static_cast<int>(reg.word(v).size()));
}

TEST_CASE("locate walks the folded graph") {
  Presentation p = fixtures::toy();
  Region reg(p, 5);
  Word r = p.relators[0];
  CHECK(reg.locate(Word(r.begin(), r.begin() + 5)) == reg.find_word(inverse(Word(r.begin() + 5, r.end()))));
  CHECK(reg.find_word(Word(6, make_letter(0, 1))) == -1);
}

TEST_CASE("vertex cap") {
  CHECK_THROWS_AS(Region(fixtures::free_group(3), 6, RegionOptions{100, false}), ResourceLimit);
}

TEST_CASE("dot output names every vertex") {
  Region reg(fixtures::free_group(1), 2);
  std::string dot = reg.to_dot();
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(reg.num_edges() == 4);
}
