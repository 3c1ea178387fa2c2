#include "scarrays/fixtures.hpp"

#include <algorithm>
#include <set>

namespace sca::fixtures {

namespace {

Presentation make(const std::string& gens, const std::string& lambda, const std::string& rels) {
  return symmetrize(parse_presentation("gens: " + gens + "\nlambda: " + lambda + "\n" + rels + "\n"));
}

Word slice(const Word& r, std::size_t from, std::size_t len) {
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(r[(from + i) % r.size()]);
  return w;
}

}  // namespace

Presentation toy() { return make("a b c", "1/8", "aabaBacaC"); }

Presentation q34() { return make("a b c d e", "1/33", "aabaBacaCadaDaeaEbbcbCbdbDbebEccdE"); }

Presentation r35(const Rational& lambda) {
  Presentation p = make("a b c d e f g", "1/6", "aabaBacaCadaDaeaEafaFagaGbbcbCbdbDG");
  p.lambda = lambda;
  return p;
}

Presentation p8() {
  Presentation p = generate_family(7);
  p.lambda = rat(1, 6);
  return p;
}

Presentation p140() {
  Presentation p = generate_family(140);
  p.lambda = rat(1, 33);
  return p;
}

Presentation commutator() { return make("a b", "1/6", "a b a^-1 b^-1"); }

Presentation free_group(int rank) {
  Presentation p;
  for (int i = 0; i < rank; ++i) p.alphabet.push_back(rank <= 26 ? std::string(1, char('a' + i)) : "x" + std::to_string(i + 1));
  p.symmetrized = true;
  return p;
}

Presentation chain_source(int n) {
  std::string gens, rel;
  for (int i = 1; i <= n; ++i) {
    gens += (i > 1 ? " x" : "x") + std::to_string(i);
    rel += " x" + std::to_string(i);
  }
  return make(gens, "15/512", rel);
}

Presentation r35_source() { return r35(rat(15, 512)); }

std::vector<DriftPair> drift_pairs(const Presentation& p) {
  std::vector<DriftPair> out;
  if (p.relators.empty()) return out;
  const Word& r = p.relators.front();
  const std::size_t n = r.size();
  if (n < 4) return out;

  std::vector<Letter> letters;
  for (int i = 0; i < 2 * p.rank(); ++i) letters.push_back(letter_from_index(i));
  auto emit = [&](const std::string& s, const Word& g, const Word& h) {
    for (Letter x : letters) out.push_back({s, g, h, x});
  };

  std::set<std::size_t> ms;
  for (std::size_t m : {n / 6, n / 4, n / 3, 2 * n / 5, (n - 1) / 2})
    if (m >= 1) ms.insert(m);
  for (std::size_t m : ms)
    for (std::size_t i = 0; i < 3; ++i) emit("arc", slice(r, 0, i), slice(r, 0, m));

  const std::size_t a = std::max<std::size_t>(2, (12 * n + 17) / 34);
  int chains = 0;
  for (std::size_t k = 0; k < n && chains < 2; ++k) {
    if (k == a - 1 || r[k] != r[a - 1]) continue;
    Word h = slice(r, 0, a);
    Word tail = slice(r, k + 1, a);
    h.insert(h.end(), tail.begin(), tail.end());
    if (!is_reduced(h)) continue;
    for (std::size_t i : {0, 1, 3}) emit("chain", slice(h, 0, i), h);
    ++chains;
  }

  Word half = slice(r, 0, n / 2);
  for (std::size_t i = 0; i < 3; ++i) emit("bigon", slice(r, 0, i), half);
  emit("bigon", Word{inv(r.back())}, half);
  return out;
}

}  // namespace sca::fixtures
