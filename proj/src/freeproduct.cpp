#include "scarrays/freeproduct.hpp"

#include "scarrays/errors.hpp"

#include <functional>

namespace sca {

Rational squared_norm(const FactorVector& v) {
  Rational s = 0;
  for (const auto& [k, a] : v) s += a.square();
  return s;
}

FactorVector patched(const FactorArray& f, int n, const Word& x) {
  FactorVector r = f.array(x);
  if (squared_norm(r) < static_cast<long>(n) * n) {
    FactorVector p;
    if (!x.empty()) {
      p[x] = Amplitude{n, false};
      // the sign follows the factor's symmetry so the patch keeps its axiom
      p[Word{}] = Amplitude{f.symmetry == ArraySymmetry::Anti ? -n : n, false};
    }
    return p;
  }
  return r;
}

FactorVector translate(const FactorArray& f, const Word& h, const FactorVector& v) {
  FactorVector out;
  for (const auto& [k, a] : v) out[f.normalize(multiply(h, k))] = a;
  return out;
}

bool check_symmetry_axiom(const FactorArray& f, int n, const Word& x) {
  Word xi = f.normalize(inverse(x));
  FactorVector lhs = translate(f, x, patched(f, n, xi));
  FactorVector rhs = patched(f, n, x);
  if (f.symmetry == ArraySymmetry::Anti) {
    for (auto& [k, a] : rhs) {
      if (a.root) throw InvalidParams("anti-symmetry check on square-root entries");
      a.value = -a.value;
    }
  }
  return lhs == rhs;
}

bool operator<(const Syllable& a, const Syllable& b) {
  if (a.factor != b.factor) return a.factor < b.factor;
  return word_less(a.element, b.element);
}

bool operator==(const Syllable& a, const Syllable& b) {
  return a.factor == b.factor && a.element == b.element;
}

Rational ProductVector::squared_norm() const {
  Rational s = 0;
  for (const auto& [k, a] : entries) s += a.square();
  return s;
}

void check_normal_form(const std::vector<FactorArray>& factors, const NormalForm& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& s = g[i];
    if (s.factor < 1 || s.factor > static_cast<int>(factors.size()))
      throw NotNormalForm("syllable names factor " + std::to_string(s.factor));
    if (s.element.empty()) throw NotNormalForm("trivial syllable");
    if (factors[s.factor - 1].normalize(s.element) != s.element)
      throw NotNormalForm("syllable is not in the factor's normal form");
    if (i > 0 && g[i - 1].factor == s.factor)
      throw NotNormalForm("adjacent syllables lie in the same factor");
  }
}

ProductVector combine_free_product(const std::vector<FactorArray>& factors, const NormalForm& g) {
  check_normal_form(factors, g);
  ProductVector out;
  NormalForm prefix;
  for (const auto& s : g) {
    for (const auto& [x, a] : patched(factors[s.factor - 1], s.factor, s.element)) {
      NormalForm elem = prefix;
      if (!x.empty()) elem.push_back({s.factor, x});
      if (!out.entries.emplace(ProductKey{std::move(elem), s.factor}, a).second)
        throw InvariantViolation("supports of two free-product terms overlap");
    }
    prefix.push_back(s);
  }
  return out;
}

Rational syllable_norm_sum(const std::vector<FactorArray>& factors, const NormalForm& g) {
  Rational s = 0;
  for (const auto& syl : g) s += squared_norm(patched(factors[syl.factor - 1], syl.factor, syl.element));
  return s;
}

FactorArray word_length_factor(const std::string& generator) {
  FactorArray f;
  f.name = "Z<" + generator + ">";
  f.symmetry = ArraySymmetry::Anti;
  f.normalize = [](const Word& w) { return reduce(w); };
  f.array = [](const Word& x) {
    long k = 0;
    for (Letter l : x) k += sign_of(l);
    FactorVector v;
    auto power = [](long j) { return Word(static_cast<std::size_t>(std::labs(j)), make_letter(0, j < 0 ? -1 : 1)); };
    if (k > 0)
      for (long j = 1; j <= k; ++j) v[power(j)] = Amplitude{1, false};
    else
      for (long j = k + 1; j <= 0; ++j) v[power(j)] = Amplitude{-1, false};
    return v;
  };
  return f;
}

FactorArray phi_tilde_factor(ProperArray& pa, const std::string& name) {
  FactorArray f;
  f.name = name;
  f.symmetry = ArraySymmetry::Symmetric;
  Geometry& geo = pa.geometry();
  f.normalize = [&geo](const Word& w) { return geo.word(geo.vertex(w)); };
  f.array = [&pa, &geo](const Word& x) {
    FactorVector v;
    for (const auto& [k, val] : pa.phi(geo.identity(), geo.vertex(x)).entries())
      v[geo.word(static_cast<VertexId>(k))] = Amplitude{val, true};
    return v;
  };
  return f;
}

PropernessCount properness_count(const std::vector<FactorArray>& factors, int N,
                                 const std::vector<std::vector<Word>>& candidates) {
  PropernessCount pc;
  const Rational limit = static_cast<long>(N) * N;
  std::vector<std::vector<std::pair<Word, Rational>>> small(factors.size());
  mpz_class per = 0;
  for (std::size_t n = 0; n < factors.size(); ++n) {
    for (const auto& x : candidates[n]) {
      Rational s = squared_norm(patched(factors[n], static_cast<int>(n + 1), x));
      if (s <= limit) small[n].push_back({x, s});
    }
    if (static_cast<int>(n + 1) <= N) per += 1 + small[n].size();
  }
  mpz_pow_ui(pc.bound.get_mpz_t(), per.get_mpz_t(), static_cast<unsigned long>(N) * N);
  std::function<void(int, const Rational&)> dfs = [&](int last, const Rational& used) {
    ++pc.count;
    for (std::size_t n = 0; n < factors.size(); ++n) {
      if (static_cast<int>(n + 1) == last) continue;
      for (const auto& [x, s] : small[n])
        if (used + s <= limit) dfs(static_cast<int>(n + 1), used + s);
    }
  };
  dfs(0, Rational(0));
  return pc;
}

}  // namespace sca
