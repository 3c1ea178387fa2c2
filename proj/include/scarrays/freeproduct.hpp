#pragma once

#include "scarrays/properarray.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace sca {

// Entry of a factor array: value itself, or its square root when root is set.
struct Amplitude {
  Rational value;
  bool root = false;
  Rational square() const { return root ? value : Rational(value * value); }
  bool operator==(const Amplitude& o) const { return value == o.value && root == o.root; }
};

using FactorVector = std::map<Word, Amplitude>;  // keys: factor elements in normal form

enum class ArraySymmetry { Anti, Symmetric };

struct FactorArray {
  std::string name;
  ArraySymmetry symmetry = ArraySymmetry::Anti;
  std::function<Word(const Word&)> normalize;       // canonical form, empty for 1
  std::function<FactorVector(const Word&)> array;   // r_n on a normalized element
};

// n (1-based) picks the patch level: r'_n(x) = n(1_x ∓ 1_1) when ‖r_n(x)‖² < n²,
// minus for anti-symmetric factors, plus for symmetric ones.
FactorVector patched(const FactorArray& f, int n, const Word& x);
Rational squared_norm(const FactorVector& v);

// Left translation inside one factor: keys k ↦ normalize(h k).
FactorVector translate(const FactorArray& f, const Word& h, const FactorVector& v);
// The symmetry axiom the factor declares, checked at x.
bool check_symmetry_axiom(const FactorArray& f, int n, const Word& x);

struct Syllable {
  int factor = 0;  // 1-based
  Word element;
};
using NormalForm = std::vector<Syllable>;

// Key of ℓ²(G) ⊗ ℓ²(N): (element of the free product, factor index).
using ProductKey = std::pair<NormalForm, int>;
bool operator<(const Syllable& a, const Syllable& b);
bool operator==(const Syllable& a, const Syllable& b);

struct ProductVector {
  std::map<ProductKey, Amplitude> entries;
  Rational squared_norm() const;
};

void check_normal_form(const std::vector<FactorArray>& factors, const NormalForm& g);

// R(g) = Σ λ(h_0 ⋯ h_{i-1}) r'_{n_i}(h_i) ⊗ e_{n_i}; throws InvariantViolation if two
// terms share a support key.
ProductVector combine_free_product(const std::vector<FactorArray>& factors, const NormalForm& g);
Rational syllable_norm_sum(const std::vector<FactorArray>& factors, const NormalForm& g);

// Infinite cyclic factor with r(k) = Σ_{j=1..k} 1_{t^j} for k > 0 and
// r(k) = -Σ_{j=k+1..0} 1_{t^j} for k < 0, so ‖r(k)‖² = |k|.
FactorArray word_length_factor(const std::string& generator);
// c(x) = Φ~[1, x] of a small-cancellation group.
FactorArray phi_tilde_factor(ProperArray& pa, const std::string& name);

// #{g : ‖R(g)‖² <= N²} by enumeration, and the bound (Σ_{n<=N} #{x : ‖r'_n(x)‖ <= N})^{N²}.
struct PropernessCount {
  std::size_t count = 0;
  mpz_class bound;
};
PropernessCount properness_count(const std::vector<FactorArray>& factors, int N,
                                 const std::vector<std::vector<Word>>& candidates);

}  // namespace sca
