#include "scarrays/runword.hpp"

#include "scarrays/errors.hpp"
#include "scarrays/presentation.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace sca {

namespace {

Letter front_letter(const Segment& s) { return s.at(0); }
Letter back_letter(const Segment& s) { return s.at(s.length - 1); }

void drop_front(Segment& s, std::uint64_t k) {
  if (s.periodic) {
    s.unit = rotate(s.unit, static_cast<std::size_t>(k % s.unit.size()));
  } else {
    s.unit.erase(s.unit.begin(), s.unit.begin() + static_cast<std::ptrdiff_t>(k));
  }
  s.length -= k;
}

void drop_back(Segment& s, std::uint64_t k) {
  s.length -= k;
  if (!s.periodic) s.unit.resize(static_cast<std::size_t>(s.length));
}

Word letters(const Segment& s) {
  Word w;
  w.reserve(static_cast<std::size_t>(s.length));
  for (std::uint64_t k = 0; k < s.length; ++k) w.push_back(s.at(k));
  return w;
}

// unit' with unit'[k] = f(unit[(len-1-k) mod p]).
template <class F>
Segment flip(const Segment& s, F f) {
  Segment out;
  out.length = s.length;
  out.periodic = s.periodic;
  std::size_t p = s.periodic ? s.unit.size() : static_cast<std::size_t>(s.length);
  out.unit.resize(p);
  for (std::size_t k = 0; k < p; ++k) out.unit[k] = f(s.at(s.length - 1 - k));
  return out;
}

bool continues(const Segment& a, const Segment& b) {
  if (!a.periodic || !b.periodic || a.unit.size() != b.unit.size()) return false;
  return b.unit == rotate(a.unit, static_cast<std::size_t>(a.length % a.unit.size()));
}

}  // namespace

RunWord::RunWord(const Word& w) {
  Word r = reduce(w);
  if (!r.empty()) push(Segment{r, r.size(), false});
  reindex();
}

RunWord RunWord::power(const Word& unit, std::uint64_t count) {
  if (unit.empty() || !is_cyclically_reduced(unit))
    throw InvalidParams("run unit must be non-empty and cyclically reduced");
  RunWord out;
  if (count > 0) out.push(Segment{unit, count * unit.size(), true});
  out.reindex();
  return out;
}

void RunWord::push(Segment s) {
  while (!segs_.empty() && s.length > 0) {
    Segment& t = segs_.back();
    if (back_letter(t) != inv(front_letter(s))) break;
    std::uint64_t k = 1;
    std::size_t p = t.unit.size();
    if (t.periodic && s.periodic && p == s.unit.size() && t.length >= p && s.length >= p) {
      bool bulk = true;
      for (std::size_t i = 0; i < p && bulk; ++i)
        bulk = inv(t.at(t.length - 1 - i)) == s.unit[i];
      if (bulk) k = std::min(t.length, s.length);
    }
    drop_back(t, k);
    total_ -= k;
    drop_front(s, k);
    if (t.length == 0) segs_.pop_back();
  }
  if (s.length == 0) return;
  if (!segs_.empty()) {
    Segment& t = segs_.back();
    if (!t.periodic && !s.periodic) {
      t.unit.insert(t.unit.end(), s.unit.begin(), s.unit.end());
      t.length += s.length;
      total_ += s.length;
      return;
    }
    if (continues(t, s)) {
      t.length += s.length;
      total_ += s.length;
      return;
    }
  }
  total_ += s.length;
  segs_.push_back(std::move(s));
}

void RunWord::reindex() {
  starts_.assign(segs_.size(), 0);
  std::uint64_t at = 0;
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    starts_[i] = at;
    at += segs_[i].length;
  }
  total_ = at;
}

void RunWord::append(const RunWord& other) {
  for (const auto& s : other.segs_) push(s);
  reindex();
}

RunWord concat(const RunWord& a, const RunWord& b) {
  RunWord out = a;
  out.append(b);
  return out;
}

RunWord RunWord::inverse() const {
  RunWord out;
  for (auto it = segs_.rbegin(); it != segs_.rend(); ++it)
    out.segs_.push_back(flip(*it, [](Letter x) { return inv(x); }));
  out.reindex();
  return out;
}

RunWord RunWord::reversed() const {
  RunWord out;
  for (auto it = segs_.rbegin(); it != segs_.rend(); ++it)
    out.segs_.push_back(flip(*it, [](Letter x) { return x; }));
  out.reindex();
  return out;
}

void RunWord::cyclic_reduce() {
  while (total_ >= 2 && at(0) == inv(at(total_ - 1))) {
    if (segs_.size() == 1) {
      Segment last{Word{back_letter(segs_[0])}, 1, false};
      drop_back(segs_[0], 1);
      segs_.push_back(last);
    }
    Segment f = segs_.front();
    segs_.erase(segs_.begin());
    total_ -= f.length;
    push(std::move(f));
    reindex();
  }
  reindex();
}

void RunWord::canonicalize() {
  std::vector<Segment> in = std::move(segs_);
  segs_.clear();
  total_ = 0;
  for (auto& s : in) {
    if (s.periodic) {
      std::size_t d = primitive_period(s.unit);
      s.unit.resize(d);
      if (s.length < 2 * d) s = Segment{letters(s), s.length, false};
    }
    push(std::move(s));
  }
  // Absorb literal letters that continue a neighbouring run.
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    if (!segs_[i].periodic) continue;
    while (i + 1 < segs_.size() && !segs_[i + 1].periodic &&
           segs_[i + 1].unit.front() == segs_[i].at(segs_[i].length)) {
      segs_[i].length += 1;
      drop_front(segs_[i + 1], 1);
      if (segs_[i + 1].length == 0) segs_.erase(segs_.begin() + static_cast<std::ptrdiff_t>(i + 1));
    }
    while (i > 0 && !segs_[i - 1].periodic && segs_[i - 1].unit.back() == segs_[i].unit.back()) {
      Segment& s = segs_[i];
      s.unit = rotate(s.unit, s.unit.size() - 1);
      s.length += 1;
      drop_back(segs_[i - 1], 1);
      if (segs_[i - 1].length == 0) {
        segs_.erase(segs_.begin() + static_cast<std::ptrdiff_t>(i - 1));
        --i;
      }
    }
  }
  in = std::move(segs_);
  segs_.clear();
  total_ = 0;
  for (auto& s : in) push(std::move(s));
  reindex();
}

std::size_t RunWord::segment_of(std::uint64_t pos) const {
  auto it = std::upper_bound(starts_.begin(), starts_.end(), pos);
  return static_cast<std::size_t>(it - starts_.begin()) - 1;
}

Letter RunWord::at(std::uint64_t pos) const {
  std::size_t s = segment_of(pos);
  return segs_[s].at(pos - starts_[s]);
}

Word RunWord::materialize(std::uint64_t limit) const {
  if (total_ > limit) throw ResourceLimit("word of length " + std::to_string(total_) + " exceeds the materialization limit");
  Word w;
  w.reserve(static_cast<std::size_t>(total_));
  for (const auto& s : segs_) {
    Word l = letters(s);
    w.insert(w.end(), l.begin(), l.end());
  }
  return w;
}

bool RunWord::is_reduced() const {
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    const Segment& s = segs_[i];
    std::uint64_t n = s.periodic ? std::min<std::uint64_t>(s.length, s.unit.size() + 1) : s.length;
    for (std::uint64_t k = 1; k < n; ++k)
      if (s.at(k) == inv(s.at(k - 1))) return false;
    if (i + 1 < segs_.size() && front_letter(segs_[i + 1]) == inv(back_letter(s))) return false;
  }
  return true;
}

std::string RunWord::format(const Alphabet& alphabet) const {
  std::string out;
  auto add = [&](const std::string& t) {
    if (t.empty()) return;
    if (!out.empty()) out += ' ';
    out += t;
  };
  for (const auto& s : segs_) {
    if (!s.periodic) {
      add(format_word(s.unit, alphabet));
      continue;
    }
    std::uint64_t reps = s.length / s.unit.size();
    std::uint64_t rest = s.length % s.unit.size();
    add("(" + format_word(s.unit, alphabet) + ")^" + std::to_string(reps));
    add(format_word(Word(s.unit.begin(), s.unit.begin() + static_cast<std::ptrdiff_t>(rest)), alphabet));
  }
  return out;
}

namespace {

struct Cursor {
  const RunWord* w;
  std::size_t seg;
  std::uint64_t off;

  Cursor(const RunWord& word, std::uint64_t pos) : w(&word) {
    seg = word.segment_of(pos);
    off = pos - word.segment_start(seg);
  }
  const Segment& s() const { return w->segments()[seg]; }
  std::uint64_t rem() const { return s().length - off; }
  Letter letter() const { return s().at(off); }
  void advance(std::uint64_t k) {
    const std::size_t n = w->segments().size();
    while (k >= rem()) {
      k -= rem();
      seg = seg + 1 == n ? 0 : seg + 1;
      off = 0;
    }
    off += k;
  }
};

bool aligned(const Cursor& a, const Cursor& b) {
  const Segment& x = a.s();
  const Segment& y = b.s();
  if (!x.periodic || !y.periodic || x.unit.size() != y.unit.size()) return false;
  for (std::size_t k = 0; k < x.unit.size(); ++k)
    if (x.at(a.off + k) != y.at(b.off + k)) return false;
  return true;
}

std::uint64_t lcp(Cursor a, Cursor b, std::uint64_t cap) {
  std::uint64_t L = 0;
  std::size_t sa = a.seg, sb = b.seg;
  int known = -1;
  while (L < cap) {
    if (a.seg != sa || b.seg != sb) {
      sa = a.seg;
      sb = b.seg;
      known = -1;
    }
    if (known < 0) known = aligned(a, b) ? 1 : 0;
    if (known) {
      std::uint64_t step = std::min({a.rem(), b.rem(), cap - L});
      a.advance(step);
      b.advance(step);
      L += step;
      continue;
    }
    if (a.letter() != b.letter()) break;
    a.advance(1);
    b.advance(1);
    ++L;
  }
  return L;
}

constexpr std::uint64_t kMod = (1ull << 61) - 1;
constexpr std::uint64_t kBase = 1000003;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kMod);
  std::uint64_t hi = static_cast<std::uint64_t>(r >> 61);
  std::uint64_t s = lo + hi;
  return s >= kMod ? s - kMod : s;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kMod ? s - kMod : s;
}

// Letters w[start .. start+count) read cyclically.
Word extract(const RunWord& w, std::uint64_t start, std::uint64_t count) {
  Word out;
  out.reserve(static_cast<std::size_t>(count));
  Cursor c(w, start % w.size());
  for (std::uint64_t k = 0; k < count; ++k) {
    out.push_back(c.letter());
    c.advance(1);
  }
  return out;
}

struct Entry {
  std::uint64_t hash;
  std::uint32_t word;
  std::uint32_t pos;
  bool operator<(const Entry& o) const {
    return std::tie(hash, word, pos) < std::tie(o.hash, o.word, o.pos);
  }
};

// Window hashes at every listed position (sorted, unique, in [0, |w|)).
void hash_windows(const RunWord& w, std::uint32_t id, const std::vector<std::uint64_t>& pos,
                  std::uint64_t width, std::uint64_t base_pow, std::vector<Entry>& out) {
  std::size_t i = 0;
  while (i < pos.size()) {
    std::size_t j = i;
    while (j + 1 < pos.size() && pos[j + 1] == pos[j] + 1) ++j;
    std::uint64_t first = pos[i];
    std::uint64_t count = pos[j] - first + 1;
    Word text = extract(w, first, count + width - 1);
    std::uint64_t h = 0;
    for (std::uint64_t k = 0; k < width; ++k) h = addmod(mulmod(h, kBase), letter_index(text[k]) + 1);
    for (std::uint64_t k = 0; k < count; ++k) {
      out.push_back({h, id, static_cast<std::uint32_t>(first + k)});
      if (k + 1 == count) break;
      std::uint64_t drop = mulmod(letter_index(text[k]) + 1, base_pow);
      h = addmod(h, kMod - drop);
      h = addmod(mulmod(h, kBase), letter_index(text[k + width]) + 1);
    }
    i = j + 1;
  }
}

std::uint64_t window_hash(const RunWord& w, std::uint64_t pos, std::uint64_t width) {
  Word text = extract(w, pos, width);
  std::uint64_t h = 0;
  for (Letter x : text) h = addmod(mulmod(h, kBase), letter_index(x) + 1);
  return h;
}

// Every position where a segment starts, plus every literal letter.
std::vector<std::uint64_t> boundaries(const RunWord& w) {
  std::vector<std::uint64_t> out;
  for (std::size_t s = 0; s < w.segments().size(); ++s) {
    const Segment& seg = w.segments()[s];
    std::uint64_t start = w.segment_start(s);
    if (seg.periodic) {
      out.push_back(start);
    } else {
      for (std::uint64_t k = 0; k < seg.length; ++k) out.push_back(start + k);
    }
  }
  return out;
}

bool below(std::uint64_t piece, const Rational& lambda, std::uint64_t len) {
  return Rational(static_cast<unsigned long>(piece)) < lambda * static_cast<unsigned long>(len);
}

PieceCertificate brute_force(const std::vector<RunWord>& words, const Rational& lambda) {
  Presentation p;
  int rank = 0;
  for (const auto& w : words) {
    Word m = w.materialize();
    for (Letter x : m) rank = std::max(rank, gen_of(x) + 1);
    p.relators.push_back(std::move(m));
  }
  for (int g = 0; g < rank; ++g) p.alphabet.push_back("g" + std::to_string(g));
  p.lambda = lambda;
  PieceReport rep = piece_table(symmetrize(p));
  PieceCertificate c;
  c.max_piece = rep.max_piece_length;
  c.bound = 0;
  c.verdict = rep.lambda_verdict;
  c.min_length = std::numeric_limits<std::uint64_t>::max();
  for (const auto& w : words) c.min_length = std::min(c.min_length, w.size());
  c.pairs_checked = rep.symmetrized_size * (rep.symmetrized_size - 1) / 2;
  return c;
}

}  // namespace

std::uint64_t cyclic_lcp(const RunWord& a, std::uint64_t i, const RunWord& b, std::uint64_t j,
                         std::uint64_t cap) {
  if (a.empty() || b.empty()) return 0;
  return lcp(Cursor(a, i % a.size()), Cursor(b, j % b.size()), cap);
}

std::uint64_t prefix_lcp(const RunWord& a, const RunWord& b) {
  std::uint64_t cap = std::min(a.size(), b.size());
  if (cap == 0) return 0;
  return lcp(Cursor(a, 0), Cursor(b, 0), cap);
}

PieceCertificate certify_pieces(const std::vector<RunWord>& input, const Rational& lambda) {
  std::vector<RunWord> F;
  for (const auto& w : input) {
    RunWord c = w;
    c.cyclic_reduce();
    if (c.empty()) throw EmptyRelator("relator reduces to the empty word");
    c.canonicalize();
    RunWord ci = c.inverse();
    ci.canonicalize();
    F.push_back(std::move(c));
    F.push_back(std::move(ci));
  }

  std::uint64_t pmax = 0, lst = 0, min_len = std::numeric_limits<std::uint64_t>::max(), total = 0;
  for (const auto& w : F) {
    min_len = std::min(min_len, w.size());
    total += w.size();
    const auto& segs = w.segments();
    std::uint64_t run = 0, wrap = 0;
    bool leading = true;
    for (const auto& s : segs) {
      if (s.periodic) {
        pmax = std::max<std::uint64_t>(pmax, s.unit.size());
        if (leading) wrap = run;
        leading = false;
        run = 0;
      } else {
        run += s.length;
        lst = std::max(lst, run);
      }
    }
    lst = std::max(lst, leading ? run : run + wrap);
  }

  const std::uint64_t bound = 5 * pmax + lst + 1;
  bool structured = pmax > 0 && below(bound - 1, lambda, min_len);
  if (!structured && total <= (1ull << 22)) return brute_force(input, lambda);
  if (!structured) throw ResourceLimit("piece certification needs long runs or a word small enough to expand");

  for (const auto& w : F) {
    const auto& segs = w.segments();
    for (std::size_t s = 0; s < segs.size(); ++s) {
      const Segment& seg = segs[s];
      if (!seg.periodic) continue;
      std::size_t p = seg.unit.size();
      if (primitive_period(seg.unit) != p || seg.length < 2 * pmax)
        throw InvariantViolation("run too short or not primitive for certification");
      std::uint64_t start = w.segment_start(s);
      Letter after = w.at((start + seg.length) % w.size());
      Letter before = w.at((start + w.size() - 1) % w.size());
      if (after == seg.at(seg.length) || before == seg.unit[p - 1])
        throw InvariantViolation("run is not maximal");
    }
  }

  for (const auto& w : F)
    if (w.size() > std::numeric_limits<std::uint32_t>::max()) throw ResourceLimit("word too long to index");
  std::vector<RunWord> R;
  for (const auto& w : F) R.push_back(w.reversed());

  const std::uint64_t D = lst + 2 * pmax;
  const std::uint64_t width = pmax;
  std::uint64_t base_pow = 1;
  for (std::uint64_t k = 1; k < width; ++k) base_pow = mulmod(base_pow, kBase);

  std::vector<std::vector<std::uint64_t>> bnd(F.size());
  std::vector<Entry> table;
  for (std::size_t b = 0; b < F.size(); ++b) {
    bnd[b] = boundaries(F[b]);
    const std::uint64_t n = F[b].size();
    std::vector<std::uint64_t> pos;
    for (std::uint64_t x : bnd[b]) {
      if (2 * D >= n) {
        for (std::uint64_t k = 0; k < n; ++k) pos.push_back(k);
        break;
      }
      for (std::uint64_t t = 0; t < 2 * D - 1; ++t) pos.push_back((x + n - (D - 1) + t) % n);
    }
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    hash_windows(F[b], static_cast<std::uint32_t>(b), pos, width, base_pow, table);
  }
  std::sort(table.begin(), table.end());

  PieceCertificate cert;
  cert.bound = bound;
  cert.min_length = min_len;
  cert.verdict = true;

  auto evaluate = [&](std::size_t a, std::uint64_t i, std::size_t b, std::uint64_t j) {
    if (a == b && i == j) return;
    const std::uint64_t na = F[a].size(), nb = F[b].size();
    const std::uint64_t cap = std::min(na, nb);
    ++cert.pairs_checked;
    std::uint64_t fwd = cyclic_lcp(F[a], i, F[b], j, cap);
    if (fwd >= cap && na == nb) return;
    std::uint64_t back = cyclic_lcp(R[a], (na - i) % na, R[b], (nb - j) % nb, cap);
    std::uint64_t piece = std::min(cap, fwd + back);
    if (piece >= cap && na == nb) return;
    if (piece > cert.max_piece) {
      cert.max_piece = piece;
      cert.worst = std::make_pair(a / 2, b / 2);
    }
    if (!below(piece, lambda, cap)) cert.verdict = false;
  };

  for (std::size_t a = 0; a < F.size(); ++a) {
    for (std::uint64_t x : bnd[a]) {
      std::uint64_t h = window_hash(F[a], x, width);
      auto lo = std::lower_bound(table.begin(), table.end(), Entry{h, 0, 0});
      for (auto it = lo; it != table.end() && it->hash == h; ++it) evaluate(a, x, it->word, it->pos);
    }
  }

  // Runs starting a common stretch against an aligned run elsewhere.
  struct RunInfo {
    std::size_t word;
    std::uint64_t start, length;
    std::size_t phase;
  };
  std::map<Word, std::vector<RunInfo>> classes;
  for (std::size_t w = 0; w < F.size(); ++w) {
    const auto& segs = F[w].segments();
    for (std::size_t s = 0; s < segs.size(); ++s) {
      if (!segs[s].periodic) continue;
      std::size_t r = least_rotation(segs[s].unit);
      classes[rotate(segs[s].unit, r)].push_back({w, F[w].segment_start(s), segs[s].length, r});
    }
  }
  for (const auto& [canon, runs] : classes) {
    const std::uint64_t p = canon.size();
    for (const auto& A : runs) {
      for (const auto& B : runs) {
        std::uint64_t o0 = (A.phase + p - B.phase) % p;
        if (o0 >= B.length) continue;
        std::vector<std::uint64_t> offs{o0};
        if (B.length >= A.length && B.length - A.length >= o0) {
          std::uint64_t lim = B.length - A.length;
          std::uint64_t ole = o0 + (lim - o0) / p * p;
          offs.push_back(ole);
          if (ole + p < B.length) offs.push_back(ole + p);
        }
        for (std::uint64_t o : offs) evaluate(A.word, A.start, B.word, B.start + o);
      }
    }
  }
  return cert;
}

PrefixPieceReport prefix_pieces(const std::vector<RunWord>& words, const Rational& lambda) {
  std::vector<RunWord> F;
  for (const auto& w : words) {
    F.push_back(w);
    F.push_back(w.inverse());
  }
  PrefixPieceReport rep;
  for (std::size_t a = 0; a < F.size(); ++a) {
    for (std::size_t b = a + 1; b < F.size(); ++b) {
      std::uint64_t cap = std::min(F[a].size(), F[b].size());
      std::uint64_t L = prefix_lcp(F[a], F[b]);
      if (L == cap && F[a].size() == F[b].size()) continue;
      rep.max_piece = std::max(rep.max_piece, L);
      if (!below(L, lambda, cap)) rep.verdict = false;
    }
  }
  return rep;
}

}  // namespace sca
