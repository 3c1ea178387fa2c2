#include "scarrays/word.hpp"

#include "scarrays/errors.hpp"

#include <algorithm>
#include <cctype>

namespace sca {

Word inverse(const Word& w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = inv(w[w.size() - 1 - i]);
  return out;
}

void free_reduce_inplace(Word& w) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (top > 0 && w[top - 1] == inv(w[i])) {
      --top;
    } else {
      w[top++] = w[i];
    }
  }
  w.resize(top);
}

Word reduce(const Word& w, ReduceMode mode) {
  Word out = w;
  free_reduce_inplace(out);
  if (mode == ReduceMode::Cyclic) {
    std::size_t a = 0, b = out.size();
    while (b - a >= 2 && out[a] == inv(out[b - 1])) {
      ++a;
      --b;
    }
    out = Word(out.begin() + a, out.begin() + b);
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word multiply(const Word& a, const Word& b) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[a.size() - 1 - k] == inv(b[k])) ++k;
  Word out;
  out.reserve(a.size() + b.size() - 2 * k);
  out.insert(out.end(), a.begin(), a.end() - k);
  out.insert(out.end(), b.begin() + k, b.end());
  return out;
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  Word out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inv(w[i - 1])) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || w.front() != inv(w.back());
}

std::size_t primitive_period(const Word& w) {
  std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  std::size_t p = n - fail[n - 1];
  return (n % p == 0) ? p : n;
}

bool letter_less(Letter a, Letter b) { return letter_index(a) < letter_index(b); }

bool word_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return word_less(a, b);
}

// Booth's algorithm.
std::size_t least_rotation(const Word& w) {
  std::size_t n = w.size();
  if (n == 0) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    int a = letter_index(w[(i + k) % n]);
    int b = letter_index(w[(j + k) % n]);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) i += k + 1; else j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

Word canonical_cyclic(const Word& w) {
  Word a = rotate(w, least_rotation(w));
  Word wi = inverse(w);
  Word b = rotate(wi, least_rotation(wi));
  return word_less(b, a) ? b : a;
}

std::vector<long> exponent_sums(const Word& w, int rank) {
  std::vector<long> v(rank, 0);
  for (Letter x : w) v[gen_of(x)] += sign_of(x);
  return v;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ w.size();
  for (Letter x : w) {
    h ^= static_cast<std::uint16_t>(x);
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

namespace {

struct NameTable {
  std::vector<std::pair<std::string, Letter>> entries;
  explicit NameTable(const Alphabet& alphabet) {
    for (std::size_t g = 0; g < alphabet.size(); ++g)
      entries.emplace_back(alphabet[g], make_letter(static_cast<int>(g), 1));
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
      std::string up = alphabet[g];
      for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (up == alphabet[g]) continue;
      if (std::find(alphabet.begin(), alphabet.end(), up) != alphabet.end()) continue;
      entries.emplace_back(up, make_letter(static_cast<int>(g), -1));
    }
  }
  // Longest name matching at pos.
  bool match(std::string_view s, std::size_t pos, Letter& out, std::size_t& len) const {
    len = 0;
    for (const auto& [name, x] : entries) {
      if (name.size() > len && s.compare(pos, name.size(), name) == 0) {
        len = name.size();
        out = x;
      }
    }
    return len > 0;
  }
};

struct WordParser {
  std::string_view s;
  const NameTable& names;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == '*' || s[pos] == '.'))
      ++pos;
  }

  long exponent() {
    skip();
    if (pos >= s.size() || s[pos] != '^') return 1;
    ++pos;
    skip();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError("missing exponent in '" + std::string(s) + "'");
    long e = std::stol(std::string(s.substr(start, pos - start)));
    return neg ? -e : e;
  }

  static void append_power(Word& out, const Word& base, long e) {
    Word b = e < 0 ? inverse(base) : base;
    long n = e < 0 ? -e : e;
    for (long k = 0; k < n; ++k) out.insert(out.end(), b.begin(), b.end());
  }

  Word sequence(bool inner) {
    Word out;
    for (;;) {
      skip();
      if (pos >= s.size()) {
        if (inner) throw ParseError("unbalanced '(' in '" + std::string(s) + "'");
        return out;
      }
      if (s[pos] == ')') {
        if (!inner) throw ParseError("unbalanced ')' in '" + std::string(s) + "'");
        ++pos;
        return out;
      }
      if (s[pos] == '(') {
        ++pos;
        Word group = sequence(true);
        append_power(out, group, exponent());
        continue;
      }
      if (s[pos] == '1' && (pos + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
        Letter dummy;
        std::size_t len;
        if (!names.match(s, pos, dummy, len)) {
          ++pos;
          continue;
        }
      }
      Letter x;
      std::size_t len;
      if (!names.match(s, pos, x, len))
        throw ParseError("unknown generator at '" + std::string(s.substr(pos)) + "'");
      pos += len;
      append_power(out, Word{x}, exponent());
    }
  }
};

bool single_char_names(const Alphabet& alphabet) {
  for (const auto& n : alphabet)
    if (n.size() != 1 || !std::isalpha(static_cast<unsigned char>(n[0]))) return false;
  return true;
}

bool has_upper_inverse(const Alphabet& alphabet, int g) {
  std::string up = alphabet[g];
  for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up == alphabet[g]) return false;
  return std::find(alphabet.begin(), alphabet.end(), up) == alphabet.end();
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  NameTable names(alphabet);
  WordParser p{text, names};
  Word w = p.sequence(false);
  free_reduce_inplace(w);
  return w;
}

std::string format_letter(Letter x, const Alphabet& alphabet) {
  int g = gen_of(x);
  if (x > 0) return alphabet[g];
  if (has_upper_inverse(alphabet, g)) {
    std::string up = alphabet[g];
    for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return up;
  }
  return alphabet[g] + "^-1";
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  bool compact = single_char_names(alphabet);
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    std::size_t run = j - i;
    int g = gen_of(w[i]);
    std::string tok;
    if (w[i] > 0 || has_upper_inverse(alphabet, g)) {
      tok = format_letter(w[i], alphabet);
      if (run > 1) tok += "^" + std::to_string(run);
    } else {
      tok = alphabet[g] + "^-" + std::to_string(run);
    }
    if (!out.empty() && !compact) out += ' ';
    out += tok;
    i = j;
  }
  return out;
}

}  // namespace sca
