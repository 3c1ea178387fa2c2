#pragma once

#include "scarrays/rational.hpp"
#include "scarrays/word.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sca {

// Letters unit[k mod |unit|] for k < length. Literal segments have length == |unit|.
struct Segment {
  Word unit;
  std::uint64_t length = 0;
  bool periodic = false;

  Letter at(std::uint64_t k) const { return unit[periodic ? k % unit.size() : k]; }
  std::uint64_t period() const { return periodic ? unit.size() : 0; }
};

// Words with long periodic stretches, stored as runs.
class RunWord {
 public:
  RunWord() = default;
  explicit RunWord(const Word& w);
  static RunWord power(const Word& unit, std::uint64_t count);

  // Freely reduces across the junction.
  void append(const RunWord& other);
  RunWord inverse() const;
  RunWord reversed() const;
  // Conjugates to a cyclically reduced word.
  void cyclic_reduce();
  // Runs shorter than 2|unit| become literal, units become primitive, literal
  // letters continuing a neighbouring run are absorbed into it.
  void canonicalize();

  std::uint64_t size() const { return total_; }
  bool empty() const { return total_ == 0; }
  Letter at(std::uint64_t pos) const;
  const std::vector<Segment>& segments() const { return segs_; }
  std::uint64_t segment_start(std::size_t s) const { return starts_[s]; }
  // Index of the segment holding pos.
  std::size_t segment_of(std::uint64_t pos) const;

  Word materialize(std::uint64_t limit = 1ull << 27) const;
  std::string format(const Alphabet& alphabet) const;
  bool is_reduced() const;

 private:
  void push(Segment s);
  void reindex();

  std::vector<Segment> segs_;
  std::vector<std::uint64_t> starts_;
  std::uint64_t total_ = 0;
};

RunWord concat(const RunWord& a, const RunWord& b);

// Longest common prefix of the cyclic words a, b read from positions i, j, capped.
std::uint64_t cyclic_lcp(const RunWord& a, std::uint64_t i, const RunWord& b, std::uint64_t j,
                         std::uint64_t cap);
// Same for plain words read from position 0.
std::uint64_t prefix_lcp(const RunWord& a, const RunWord& b);

struct PieceCertificate {
  // Longest piece among the checked pairs; exact whenever it reaches `bound`.
  std::uint64_t max_piece = 0;
  // Any pair outside the checked ones has common prefix < bound.
  std::uint64_t bound = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t min_length = 0;
  bool verdict = false;
  std::optional<std::pair<std::size_t, std::size_t>> worst;  // word indices
};

// C'(lambda) over all cyclic shifts of the words and their inverses. The words
// must be cyclically reduced; runs must be maximal and at least twice the
// longest period, which canonicalize() plus the check here enforce.
PieceCertificate certify_pieces(const std::vector<RunWord>& words, const Rational& lambda);

struct PrefixPieceReport {
  std::uint64_t max_piece = 0;
  bool verdict = true;
};

// Common prefixes between distinct members of the set closed under inversion.
PrefixPieceReport prefix_pieces(const std::vector<RunWord>& words, const Rational& lambda);

}  // namespace sca
