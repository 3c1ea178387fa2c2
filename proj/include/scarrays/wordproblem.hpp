#pragma once

#include "scarrays/presentation.hpp"
#include "scarrays/suffix_automaton.hpp"

#include <memory>
#include <optional>

namespace sca {

struct GreendlingerHit {
  Word relator;  // cyclic shift of a relator^{±1} that starts with the subword
  std::size_t subword_start = 0;
  std::size_t subword_length = 0;
};

// Substring index over the symmetrized relators, one automaton per relator length.
class DehnIndex {
 public:
  explicit DehnIndex(const Presentation& p);

  const Presentation& presentation() const { return pres_; }

  // Longest subword of w that is a subword of some relator r with
  // length > threshold * |r|; ties go to the earliest start.
  std::optional<GreendlingerHit> find_greendlinger(const Word& w, const Rational& threshold) const;

  Word reduce(const Word& w) const;
  bool is_identity(const Word& w) const;
  bool equal(const Word& u, const Word& v) const;

  // Number of replacement steps taken by the last reduce() on this thread.
  static std::size_t last_steps();

 private:
  struct Group {
    std::size_t length;
    std::vector<Word> bases;
    std::unique_ptr<SuffixAutomaton> sam;
  };

  // Runs Dehn's algorithm into the thread-local stack; returns its size.
  std::size_t run(const Word& w) const;

  Presentation pres_;
  std::vector<Group> groups_;
  int sigma_ = 0;
};

Word dehn_reduce(const Word& w, const Presentation& p);
bool is_identity(const Word& w, const Presentation& p);
std::optional<GreendlingerHit> find_greendlinger_subword(const Word& w, const Presentation& p,
                                                         const Rational& threshold);

// Words of length <= L never need relators longer than 2 * (2L) when L = 2 * radius.
inline long relevant_relator_bound(long radius) { return 4 * radius; }

}  // namespace sca
