#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sca {

// Generator g (0-based) is encoded as g+1, its inverse as -(g+1).
using Letter = std::int16_t;
using Word = std::vector<Letter>;
using Alphabet = std::vector<std::string>;

inline Letter make_letter(int gen, int sign) {
  return static_cast<Letter>(sign > 0 ? gen + 1 : -(gen + 1));
}
inline int gen_of(Letter x) { return (x > 0 ? x : -x) - 1; }
inline int sign_of(Letter x) { return x > 0 ? 1 : -1; }
inline Letter inv(Letter x) { return static_cast<Letter>(-x); }
// Dense index in [0, 2k): 2g for x, 2g+1 for x^-1.
inline int letter_index(Letter x) { return 2 * gen_of(x) + (x < 0 ? 1 : 0); }
inline Letter letter_from_index(int i) { return make_letter(i / 2, (i % 2) ? -1 : 1); }

enum class ReduceMode { Free, Cyclic };

Word inverse(const Word& w);
Word reduce(const Word& w, ReduceMode mode = ReduceMode::Free);
void free_reduce_inplace(Word& w);
Word concat(const Word& a, const Word& b);
// Freely reduced product a*b for reduced a,b.
Word multiply(const Word& a, const Word& b);
Word rotate(const Word& w, std::size_t k);
bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);
// Smallest p with w a power of its length-p prefix (p == |w| when primitive).
std::size_t primitive_period(const Word& w);
// Start of the least rotation of w under letter_less.
std::size_t least_rotation(const Word& w);
// Least rotation over w and w^-1 (letter order by letter_index).
Word canonical_cyclic(const Word& w);
bool letter_less(Letter a, Letter b);
bool word_less(const Word& a, const Word& b);
// Shortlex order on words.
bool shortlex_less(const Word& a, const Word& b);
std::vector<long> exponent_sums(const Word& w, int rank);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Text format: juxtaposed generator names, capitalised name or x^-1 for
// inverses, x^k for powers, (...)^k for grouped powers.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);
std::string format_letter(Letter x, const Alphabet& alphabet);

}  // namespace sca
