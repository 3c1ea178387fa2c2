#pragma once

#include "scarrays/presentation.hpp"

#include <cstdint>
#include <vector>

namespace sca {

// Image of a word in the abelianization, as a canonical coset representative
// of Z^rank modulo the lattice spanned by the relator exponent vectors.
class AbelianKey {
 public:
  explicit AbelianKey(const Presentation& p);

  std::vector<std::int64_t> key(const Word& w) const;
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const;

  // Hermite normal form rows (pivot columns strictly increasing, pivots positive).
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  int rank_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<int> pivots_;
};

}  // namespace sca
