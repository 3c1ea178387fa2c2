#pragma once

#include "scarrays/rational.hpp"
#include "scarrays/word.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sca {

// When `symmetrized` is set, `relators` holds one canonical representative
// per cyclic class up to inversion; the symmetric closure is implicit.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;
  Rational lambda = rat(1, 6);
  bool symmetrized = false;

  int rank() const { return static_cast<int>(alphabet.size()); }
  std::size_t max_relator_length() const;
  std::size_t min_relator_length() const;
};

// Every cyclic shift of every relator and its inverse, without duplicates.
class SymmetrizedSet {
 public:
  struct Elem {
    std::uint32_t base;
    std::uint32_t shift;
  };

  explicit SymmetrizedSet(const Presentation& p);

  std::size_t size() const { return elems_.size(); }
  const std::vector<Elem>& elems() const { return elems_; }
  const std::vector<Word>& bases() const { return bases_; }
  std::size_t length(const Elem& e) const { return bases_[e.base].size(); }
  Letter at(const Elem& e, std::size_t k) const {
    const Word& b = bases_[e.base];
    std::size_t i = e.shift + k;
    if (i >= b.size()) i -= b.size();
    return b[i];
  }
  Word word(const Elem& e) const { return rotate(bases_[e.base], e.shift); }
  std::size_t lcp(const Elem& a, const Elem& b) const;
  // Index of the presentation relator that base b came from.
  std::size_t relator_of(std::uint32_t base) const { return relator_of_[base]; }

 private:
  std::vector<Word> bases_;
  std::vector<std::size_t> relator_of_;
  std::vector<Elem> elems_;
};

struct PieceWitness {
  Word u;
  Word v;
  Word piece;
};

struct PieceReport {
  std::size_t max_piece_length = 0;
  std::optional<PieceWitness> witness;
  bool lambda_verdict = true;
  bool star_verdict = false;
  std::size_t symmetrized_size = 0;
};

Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);
std::string format_presentation(const Presentation& p);

std::vector<Word> symmetrize(const std::vector<Word>& relators);
Presentation symmetrize(const Presentation& p);

PieceReport piece_table(const Presentation& p);
// (*) alone: every relator longer than 1/lambda and every letter used.
bool star_condition(const Presentation& p);

std::pair<Presentation, Presentation> normalize_star(const Presentation& p);

enum class Family {
  Staircase,  // <a,b | a b a b^2 ... a b^n>
  Linked      // staircases of height 7 on consecutive letter pairs x_i, x_{i+1}, i < n
};

Presentation generate_family(int n, Family family = Family::Staircase);
Word staircase_word(int n, Letter a, Letter b);

// Relators of length at most max_len, as produced by a caller-supplied generator.
using RelatorGenerator = std::function<std::vector<Word>(std::size_t max_len)>;
Presentation from_generator(const Alphabet& alphabet, const Rational& lambda,
                            const RelatorGenerator& gen, std::size_t max_len);

// Drops relators longer than max_len.
Presentation truncate(const Presentation& p, std::size_t max_len);

}  // namespace sca
