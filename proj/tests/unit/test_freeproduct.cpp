#include "scarrays/errors.hpp"
#include "scarrays/fixtures.hpp"
#include "scarrays/freeproduct.hpp"

#include <doctest.h>

using namespace sca;

namespace {
Word tk(int k) { return Word(static_cast<std::size_t>(k < 0 ? -k : k), make_letter(0, k < 0 ? -1 : 1)); }
}  // namespace

TEST_CASE("word-length factor") {
  FactorArray z = word_length_factor("t");
  CHECK(z.array(Word{}).empty());
  for (int k = -6; k <= 6; ++k) CHECK(squared_norm(z.array(tk(k))) == (k < 0 ? -k : k));
  CHECK(z.normalize(Word{make_letter(0, 1), make_letter(0, -1)}).empty());
  for (int k = -4; k <= 4; ++k) CHECK(check_symmetry_axiom(z, 3, tk(k)));
}

TEST_CASE("patching lifts small norms") {
  FactorArray z = word_length_factor("t");
  FactorVector v = patched(z, 3, tk(2));
  CHECK(squared_norm(v) == 2 * 9);
  CHECK(squared_norm(patched(z, 3, tk(9))) == 9);
  CHECK(patched(z, 3, Word{}).empty());
}

TEST_CASE("free product of two cyclic factors") {
  std::vector<FactorArray> f{word_length_factor("s"), word_length_factor("t")};
  CHECK(combine_free_product(f, {}).entries.empty());

  NormalForm one{{1, tk(3)}};
  CHECK(combine_free_product(f, one).squared_norm() == squared_norm(patched(f[0], 1, tk(3))));

  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b) {
      if (a == 0 || b == 0) continue;
      NormalForm g{{1, tk(a)}, {2, tk(b)}, {1, tk(b)}};
      Rational direct = squared_norm(patched(f[0], 1, tk(a))) + squared_norm(patched(f[1], 2, tk(b))) +
                        squared_norm(patched(f[0], 1, tk(b)));
      REQUIRE(combine_free_product(f, g).squared_norm() == direct);
      REQUIRE(syllable_norm_sum(f, g) == direct);
    }

  CHECK_THROWS_AS(check_normal_form(f, {{1, tk(1)}, {1, tk(2)}}), NotNormalForm);
  CHECK_THROWS_AS(check_normal_form(f, {{1, Word{}}}), NotNormalForm);
  CHECK_THROWS_AS(check_normal_form(f, {{3, tk(1)}}), NotNormalForm);
}

TEST_CASE("properness count") {
  std::vector<FactorArray> f{word_length_factor("s"), word_length_factor("t")};
  std::vector<std::vector<Word>> cands(2);
  for (int k = 1; k <= 6; ++k)
    for (auto& c : cands) {
      c.push_back(tk(k));
      c.push_back(tk(-k));
    }
  PropernessCount pc = properness_count(f, 2, cands);
  CHECK(pc.count >= 1);
  CHECK(mpz_class(pc.count) <= pc.bound);
}

TEST_CASE("array factor from a small-cancellation group") {
  Presentation q = fixtures::q34();
  Geometry geo(q);
  ProperArray pa(geo, ProperArrayParams{});
  FactorArray c = phi_tilde_factor(pa, "G");
  CHECK(c.symmetry == ArraySymmetry::Symmetric);
  Word ab = parse_word("ab", q.alphabet);
  CHECK(squared_norm(c.array(c.normalize(ab))) == pa.phi(geo.identity(), geo.vertex(ab)).l1());
  CHECK(check_symmetry_axiom(c, 2, c.normalize(ab)));
  CHECK(squared_norm(patched(c, 3, c.normalize(ab))) >= 9);
}
