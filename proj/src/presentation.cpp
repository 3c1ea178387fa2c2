#include "scarrays/presentation.hpp"

#include "scarrays/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace sca {

std::size_t Presentation::max_relator_length() const {
  std::size_t m = 0;
  for (const auto& r : relators) m = std::max(m, r.size());
  return m;
}

std::size_t Presentation::min_relator_length() const {
  if (relators.empty()) return 0;
  std::size_t m = std::numeric_limits<std::size_t>::max();
  for (const auto& r : relators) m = std::min(m, r.size());
  return m;
}

SymmetrizedSet::SymmetrizedSet(const Presentation& p) {
  if (!p.symmetrized) throw NotSymmetrized("presentation is not symmetrized");
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const Word& r = p.relators[i];
    Word ri = inverse(r);
    bases_.push_back(r);
    relator_of_.push_back(i);
    // r^-1 is already covered when it is a rotation of r
    Word rr = concat(r, r);
    bool inside = false;
    for (std::size_t s = 0; s < r.size() && !inside; ++s)
      inside = std::equal(ri.begin(), ri.end(), rr.begin() + s);
    if (!inside) {
      bases_.push_back(ri);
      relator_of_.push_back(i);
    }
  }
  for (std::uint32_t b = 0; b < bases_.size(); ++b) {
    std::size_t period = primitive_period(bases_[b]);
    for (std::uint32_t s = 0; s < period; ++s) elems_.push_back({b, s});
  }
}

std::size_t SymmetrizedSet::lcp(const Elem& a, const Elem& b) const {
  std::size_t n = std::min(length(a), length(b));
  std::size_t k = 0;
  while (k < n && at(a, k) == at(b, k)) ++k;
  return k;
}

namespace {

std::string strip(std::string s) {
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool valid_name(const std::string& n) {
  if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0]))) return false;
  for (char c : n)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  return true;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::vector<std::string> relator_lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string s = strip(line);
    if (s.empty()) continue;
    if (s.rfind("gens:", 0) == 0) {
      if (have_gens) throw ParseError("duplicate gens line");
      std::string rest = s.substr(5);
      for (char& c : rest)
        if (c == ',') c = ' ';
      std::istringstream names(rest);
      std::string n;
      while (names >> n) {
        if (!valid_name(n)) throw ParseError("bad generator name '" + n + "'");
        if (std::find(p.alphabet.begin(), p.alphabet.end(), n) != p.alphabet.end())
          throw ParseError("duplicate generator '" + n + "'");
        p.alphabet.push_back(n);
      }
      if (p.alphabet.size() > 16000) throw ParseError("too many generators");
      have_gens = true;
    } else if (s.rfind("lambda:", 0) == 0) {
      p.lambda = parse_rational(s.substr(7));
      if (p.lambda <= 0) throw ParseError("lambda must be positive");
    } else {
      if (!have_gens) throw ParseError("relator before gens line: '" + s + "'");
      relator_lines.push_back(s);
    }
  }
  if (!have_gens) throw ParseError("missing gens line");
  for (const auto& s : relator_lines) p.relators.push_back(parse_word(s, p.alphabet));
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_presentation(ss.str());
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& n : p.alphabet) out += " " + n;
  out += "\nlambda: " + to_string(p.lambda) + "\n";
  for (const auto& r : p.relators) out += format_word(r, p.alphabet) + "\n";
  return out;
}

std::vector<Word> symmetrize(const std::vector<Word>& relators) {
  std::set<Word> out;
  for (const auto& w : relators) {
    Word r = reduce(w, ReduceMode::Cyclic);
    if (r.empty()) throw EmptyRelator("relator reduces to the empty word");
    Word ri = inverse(r);
    for (std::size_t s = 0; s < r.size(); ++s) {
      out.insert(rotate(r, s));
      out.insert(rotate(ri, s));
    }
  }
  return {out.begin(), out.end()};
}

Presentation symmetrize(const Presentation& p) {
  Presentation q = p;
  std::set<Word> reps;
  for (const auto& w : p.relators) {
    Word r = reduce(w, ReduceMode::Cyclic);
    if (r.empty()) throw EmptyRelator("relator reduces to the empty word");
    reps.insert(canonical_cyclic(r));
  }
  q.relators.assign(reps.begin(), reps.end());
  std::sort(q.relators.begin(), q.relators.end(), shortlex_less);
  q.symmetrized = true;
  return q;
}

bool star_condition(const Presentation& p) {
  std::vector<bool> used(p.alphabet.size(), false);
  for (const auto& r : p.relators) {
    if (!(p.lambda * static_cast<long>(r.size()) > 1)) return false;
    for (Letter x : r) used[gen_of(x)] = true;
  }
  return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

namespace {

int cyclic_compare(const SymmetrizedSet& s, const SymmetrizedSet::Elem& a,
                   const SymmetrizedSet::Elem& b) {
  std::size_t la = s.length(a), lb = s.length(b);
  std::size_t n = std::min(la, lb);
  for (std::size_t k = 0; k < n; ++k) {
    int x = letter_index(s.at(a, k)), y = letter_index(s.at(b, k));
    if (x != y) return x < y ? -1 : 1;
  }
  if (la == lb) return 0;
  return la < lb ? -1 : 1;
}

}  // namespace

PieceReport piece_table(const Presentation& p) {
  SymmetrizedSet sym(p);
  PieceReport rep;
  rep.symmetrized_size = sym.size();
  rep.star_verdict = star_condition(p);
  std::vector<SymmetrizedSet::Elem> order = sym.elems();
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    return cyclic_compare(sym, a, b) < 0;
  });
  std::size_t n = order.size();
  if (n < 2) return rep;
  std::vector<std::size_t> adj(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    adj[i] = sym.lcp(order[i], order[i + 1]);
    if (adj[i] == sym.length(order[i]) && adj[i] == sym.length(order[i + 1]))
      throw InvariantViolation("duplicate word in symmetrized set");
    if (!rep.witness || adj[i] > rep.max_piece_length) {
      rep.max_piece_length = adj[i];
      Word u = sym.word(order[i]);
      rep.witness = PieceWitness{u, sym.word(order[i + 1]), Word(u.begin(), u.begin() + adj[i])};
    }
  }
  // Every pair (i, j), i < j, has lcp = min(adj[i..j-1]); for each i and each
  // length class the nearest class member on the right attains the maximum.
  std::vector<std::size_t> classes;
  for (const auto& e : order) classes.push_back(sym.length(e));
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  const std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> running(classes.size(), inf);
  std::vector<bool> seen(classes.size(), false);
  for (std::size_t ii = n; ii-- > 0;) {
    std::size_t ci = std::lower_bound(classes.begin(), classes.end(), sym.length(order[ii])) - classes.begin();
    if (ii + 1 < n)
      for (auto& r : running) r = std::min(r, adj[ii]);
    for (std::size_t c = 0; c < classes.size() && rep.lambda_verdict; ++c) {
      if (!seen[c]) continue;
      std::size_t m = std::min(classes[c], sym.length(order[ii]));
      if (!(Rational(static_cast<long>(running[c])) < p.lambda * static_cast<long>(m)))
        rep.lambda_verdict = false;
    }
    seen[ci] = true;
    running[ci] = inf;
  }
  return rep;
}

std::pair<Presentation, Presentation> normalize_star(const Presentation& p) {
  if (!p.symmetrized) throw NotSymmetrized("normalize_star needs a symmetrized presentation");
  std::vector<int> owner(p.alphabet.size(), 0);  // 0 unused, 1 long, 2 short
  for (const auto& r : p.relators) {
    bool is_long = p.lambda * static_cast<long>(r.size()) > 1;
    for (Letter x : r) {
      int& o = owner[gen_of(x)];
      int want = is_long ? 1 : 2;
      if (o != 0 && o != want)
        throw InvariantViolation("letter " + p.alphabet[gen_of(x)] +
                                 " occurs in a long and a short relator");
      o = want;
    }
  }
  Presentation first, second;
  first.lambda = second.lambda = p.lambda;
  first.symmetrized = second.symmetrized = true;
  std::vector<int> remap(p.alphabet.size(), -1);
  for (std::size_t g = 0; g < p.alphabet.size(); ++g) {
    Presentation& dst = owner[g] == 1 ? first : second;
    remap[g] = static_cast<int>(dst.alphabet.size());
    dst.alphabet.push_back(p.alphabet[g]);
  }
  for (const auto& r : p.relators) {
    bool is_long = p.lambda * static_cast<long>(r.size()) > 1;
    Word w;
    for (Letter x : r) w.push_back(make_letter(remap[gen_of(x)], sign_of(x)));
    (is_long ? first : second).relators.push_back(canonical_cyclic(w));
  }
  for (Presentation* q : {&first, &second})
    std::sort(q->relators.begin(), q->relators.end(), shortlex_less);
  return {first, second};
}

Word staircase_word(int n, Letter a, Letter b) {
  Word w;
  for (int k = 1; k <= n; ++k) {
    w.push_back(a);
    for (int j = 0; j < k; ++j) w.push_back(b);
  }
  return w;
}

Presentation generate_family(int n, Family family) {
  if (n < 1) throw InvalidParams("family size must be at least 1");
  Presentation p;
  if (family == Family::Staircase) {
    p.alphabet = {"a", "b"};
    p.relators.push_back(staircase_word(n, make_letter(0, 1), make_letter(1, 1)));
  } else {
    for (int i = 0; i <= n; ++i) p.alphabet.push_back("x" + std::to_string(i));
    for (int i = 0; i < n; ++i)
      p.relators.push_back(staircase_word(7, make_letter(i, 1), make_letter(i + 1, 1)));
  }
  return symmetrize(p);
}

Presentation from_generator(const Alphabet& alphabet, const Rational& lambda,
                            const RelatorGenerator& gen, std::size_t max_len) {
  Presentation p;
  p.alphabet = alphabet;
  p.lambda = lambda;
  for (auto& w : gen(max_len))
    if (w.size() <= max_len) p.relators.push_back(std::move(w));
  return symmetrize(p);
}

Presentation truncate(const Presentation& p, std::size_t max_len) {
  Presentation q = p;
  q.relators.clear();
  for (const auto& r : p.relators)
    if (r.size() <= max_len) q.relators.push_back(r);
  return q;
}

}  // namespace sca
