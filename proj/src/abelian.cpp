#include "scarrays/abelian.hpp"

#include "scarrays/errors.hpp"

#include <gmpxx.h>

#include <utility>

namespace sca {

namespace {

using Row = std::vector<mpz_class>;

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

AbelianKey::AbelianKey(const Presentation& p) : rank_(p.rank()) {
  std::vector<Row> m;
  for (const auto& r : p.relators) {
    Row row(rank_, 0);
    for (Letter x : r) row[gen_of(x)] += sign_of(x);
    m.push_back(std::move(row));
  }
  std::vector<Row> hnf;
  std::size_t top = 0;
  for (int col = 0; col < rank_ && top < m.size(); ++col) {
    // gcd elimination on column col among rows top..end
    for (;;) {
      std::size_t piv = m.size();
      for (std::size_t i = top; i < m.size(); ++i)
        if (m[i][col] != 0 && (piv == m.size() || abs(m[i][col]) < abs(m[piv][col]))) piv = i;
      if (piv == m.size()) break;
      std::swap(m[top], m[piv]);
      bool done = true;
      for (std::size_t i = top + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        mpz_class q = floor_div(m[i][col], m[top][col]);
        for (int c = col; c < rank_; ++c) m[i][c] -= q * m[top][c];
        if (m[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (top < m.size() && m[top][col] != 0) {
      if (m[top][col] < 0)
        for (auto& v : m[top]) v = -v;
      pivots_.push_back(col);
      ++top;
    }
  }
  m.resize(top);
  // reduce entries above each pivot into [0, pivot)
  for (std::size_t i = 0; i < m.size(); ++i) {
    int col = pivots_[i];
    for (std::size_t j = 0; j < i; ++j) {
      mpz_class q = floor_div(m[j][col], m[i][col]);
      if (q != 0)
        for (int c = 0; c < rank_; ++c) m[j][c] -= q * m[i][c];
    }
  }
  for (const auto& row : m) {
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.fits_slong_p()) throw ResourceLimit("abelianization entries too large");
      r.push_back(v.get_si());
    }
    rows_.push_back(std::move(r));
  }
}

std::vector<std::int64_t> AbelianKey::reduce(std::vector<std::int64_t> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    int col = pivots_[i];
    std::int64_t d = rows_[i][col];
    std::int64_t q = v[col] / d;
    if (v[col] - q * d < 0) --q;
    if (q == 0) continue;
    for (int c = col; c < rank_; ++c) v[c] -= q * rows_[i][c];
  }
  return v;
}

std::vector<std::int64_t> AbelianKey::key(const Word& w) const {
  std::vector<std::int64_t> v(rank_, 0);
  for (Letter x : w) v[gen_of(x)] += sign_of(x);
  return reduce(std::move(v));
}

}  // namespace sca
