#pragma once

#include "scarrays/presentation.hpp"
#include "scarrays/runword.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sca {

// Letters joined when some relator uses both.
struct LetterGraph {
  std::vector<std::vector<int>> adjacent;    // sorted neighbour lists
  std::vector<std::vector<int>> components;  // ordered by least letter
  std::vector<int> component_of;

  std::size_t max_valency() const;
  // Breadth-first distances from `from` inside its component, -1 elsewhere.
  std::vector<int> distances(int from) const;
};

LetterGraph letter_graph(const Presentation& p);

// One presentation per component, generators renumbered in order. Throws
// InvariantViolation unless every relator lands in exactly one component.
std::vector<Presentation> split_components(const Presentation& p, const LetterGraph& g);

// (1 - 2/M)^-1 [(1 + 1/M) lambda + 2/M] < 1/33
bool exponent_condition(const Rational& lambda, long M);
long minimal_exponent(const Rational& lambda);

// k-th reduced word of the given length over `rank` generators, letters
// ordered x1 < x1^-1 < x2 < ...
Word nth_reduced_word(int rank, std::size_t length, std::uint64_t k);

struct EmbedOptions {
  int N = 0;
  std::optional<long> exponent;  // overrides the minimal M
  std::uint64_t cap = 1000000;    // longest relator written to the text output
  std::size_t component = 0;
};

struct LengthCheck {
  std::size_t relator = 0;
  long m = 0;
  bool ok = false;
};

struct EmbeddingResult {
  Presentation source;  // the chosen component
  int N = 0;
  long M = 0;
  bool exponent_ok = false;
  Alphabet alphabet;                 // a1..a(N+1) b c a1'..a(N+1)' b' c'
  std::vector<int> distance;         // from the base letter, per source generator
  std::vector<Word> w;               // per source generator
  std::vector<RunWord> psi;          // (w b)^M c (w b)^-M
  std::vector<RunWord> psi_prime;
  std::vector<RunWord> relators;     // one per source relator class
  std::vector<LengthCheck> lengths;
  PrefixPieceReport generator_pieces;  // {psi'(x) psi(x)^-1} at 1/M
  PieceCertificate pieces;             // relators at 1/33
  std::size_t emitted = 0;
  std::size_t withheld = 0;
  std::string text;

  bool passed() const;
};

std::uint64_t psi_length(long M, int n);  // 2(n+M+1)M+1

EmbeddingResult embed(const Presentation& p, const EmbedOptions& opt);

}  // namespace sca
