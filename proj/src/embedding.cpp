#include "scarrays/embedding.hpp"

#include "scarrays/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sca {

std::size_t LetterGraph::max_valency() const {
  std::size_t v = 0;
  for (const auto& a : adjacent) v = std::max(v, a.size());
  return v;
}

std::vector<int> LetterGraph::distances(int from) const {
  std::vector<int> d(adjacent.size(), -1);
  std::deque<int> q{from};
  d[from] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : adjacent[x])
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
  }
  return d;
}

LetterGraph letter_graph(const Presentation& p) {
  const int n = p.rank();
  std::vector<std::set<int>> adj(n);
  for (const auto& r : p.relators) {
    std::set<int> used;
    for (Letter x : r) used.insert(gen_of(x));
    for (int a : used)
      for (int b : used)
        if (a != b) adj[a].insert(b);
  }
  LetterGraph g;
  for (const auto& s : adj) g.adjacent.emplace_back(s.begin(), s.end());
  g.component_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (g.component_of[x] >= 0) continue;
    std::vector<int> d = g.distances(x);
    std::vector<int> comp;
    for (int y = 0; y < n; ++y)
      if (d[y] >= 0) {
        comp.push_back(y);
        g.component_of[y] = static_cast<int>(g.components.size());
      }
    g.components.push_back(std::move(comp));
  }
  return g;
}

std::vector<Presentation> split_components(const Presentation& p, const LetterGraph& g) {
  std::vector<Presentation> out(g.components.size());
  std::vector<int> local(p.rank(), -1);
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    out[c].lambda = p.lambda;
    for (int x : g.components[c]) {
      local[x] = static_cast<int>(out[c].alphabet.size());
      out[c].alphabet.push_back(p.alphabet[x]);
    }
  }
  std::size_t placed = 0;
  for (const auto& r : p.relators) {
    if (r.empty()) continue;
    int c = g.component_of[gen_of(r[0])];
    Word lr;
    for (Letter x : r) {
      if (g.component_of[gen_of(x)] != c) throw InvariantViolation("relator spans two letter-graph components");
      lr.push_back(make_letter(local[gen_of(x)], sign_of(x)));
    }
    out[c].relators.push_back(std::move(lr));
    ++placed;
  }
  std::size_t total = 0;
  for (const auto& q : out) total += q.relators.size();
  if (total != placed) throw InvariantViolation("components do not partition the relators");
  return out;
}

bool exponent_condition(const Rational& lambda, long M) {
  if (M <= 2) return false;
  Rational m(M);
  Rational lhs = ((1 + 1 / m) * lambda + 2 / m) / (1 - 2 / m);
  return lhs < rat(1, 33);
}

long minimal_exponent(const Rational& lambda) {
  if (lambda >= rat(1, 33)) throw InvalidParams("source lambda must be below 1/33");
  for (long M = 3; M < 100000000; ++M)
    if (exponent_condition(lambda, M)) return M;
  throw ResourceLimit("no exponent below 10^8");
}

Word nth_reduced_word(int rank, std::size_t length, std::uint64_t k) {
  if (length == 0) {
    if (k != 0) throw InvalidParams("only one word of length 0");
    return {};
  }
  const std::uint64_t letters = 2 * static_cast<std::uint64_t>(rank);
  std::vector<std::uint64_t> digit(length, 0);
  for (std::size_t i = length; i-- > 1;) {
    digit[i] = k % (letters - 1);
    k /= letters - 1;
  }
  if (k >= letters) throw InvalidParams("index beyond the reduced words of this length");
  digit[0] = k;
  Word w;
  w.push_back(letter_from_index(static_cast<int>(digit[0])));
  for (std::size_t i = 1; i < length; ++i) {
    int idx = static_cast<int>(digit[i]);
    if (idx >= letter_index(inv(w.back()))) ++idx;
    w.push_back(letter_from_index(idx));
  }
  return w;
}

std::uint64_t psi_length(long M, int n) {
  return 2 * static_cast<std::uint64_t>(n + M + 1) * static_cast<std::uint64_t>(M) + 1;
}

bool EmbeddingResult::passed() const {
  if (!exponent_ok || !generator_pieces.verdict || !pieces.verdict) return false;
  for (const auto& l : lengths)
    if (!l.ok) return false;
  return true;
}

EmbeddingResult embed(const Presentation& input, const EmbedOptions& opt) {
  if (opt.N < 1) throw InvalidParams("N must be positive");
  LetterGraph whole = letter_graph(input);
  std::vector<Presentation> comps = split_components(input, whole);
  if (opt.component >= comps.size()) throw InvalidParams("no such letter-graph component");

  EmbeddingResult res;
  res.source = symmetrize(comps[opt.component]);
  res.N = opt.N;
  const Presentation& src = res.source;
  if (src.lambda >= rat(1, 33)) throw InvalidParams("source lambda must be below 1/33");
  PieceReport rep = piece_table(src);
  if (!rep.lambda_verdict) throw NotSmallCancellation("source presentation fails its declared C'(lambda)");

  LetterGraph g = letter_graph(src);
  if (g.max_valency() > static_cast<std::size_t>(opt.N))
    throw ValencyExceeded("letter graph valency " + std::to_string(g.max_valency()) + " exceeds N = " +
                          std::to_string(opt.N));

  res.M = opt.exponent ? *opt.exponent : minimal_exponent(src.lambda);
  if (res.M < 1) throw InvalidParams("exponent must be positive");
  res.exponent_ok = exponent_condition(src.lambda, res.M);
  const long M = res.M;

  const int K = opt.N + 1;
  for (int i = 1; i <= K; ++i) res.alphabet.push_back("a" + std::to_string(i));
  res.alphabet.push_back("b");
  res.alphabet.push_back("c");
  for (int i = 1; i <= K; ++i) res.alphabet.push_back("a" + std::to_string(i) + "'");
  res.alphabet.push_back("b'");
  res.alphabet.push_back("c'");
  const int shift = K + 2;
  const Letter b = make_letter(K, 1), c = make_letter(K + 1, 1);
  auto prime = [&](const Word& w) {
    Word out;
    for (Letter x : w) out.push_back(make_letter(gen_of(x) + shift, sign_of(x)));
    return out;
  };

  const int rank = src.rank();
  res.distance = src.rank() ? g.distances(0) : std::vector<int>{};
  std::vector<std::uint64_t> seen_at(rank + 1, 0);
  res.w.resize(rank);
  for (int x = 0; x < rank; ++x) {
    int n = res.distance[x];
    res.w[x] = nth_reduced_word(K, static_cast<std::size_t>(n + M), seen_at[n]++);
  }

  std::vector<RunWord> beta;
  for (int x = 0; x < rank; ++x) {
    Word unit = res.w[x];
    unit.push_back(b);
    RunWord psi = RunWord::power(unit, M);
    psi.append(RunWord(Word{c}));
    psi.append(RunWord::power(inverse(unit), M));
    Word unit_p = prime(unit);
    RunWord psi_p = RunWord::power(unit_p, M);
    psi_p.append(RunWord(Word{prime(Word{c})}));
    psi_p.append(RunWord::power(inverse(unit_p), M));
    RunWord bx = concat(psi_p, psi.inverse());
    bx.canonicalize();
    beta.push_back(bx);
    res.psi.push_back(std::move(psi));
    res.psi_prime.push_back(std::move(psi_p));
  }

  res.generator_pieces = prefix_pieces(beta, Rational(1, M));

  for (std::size_t i = 0; i < src.relators.size(); ++i) {
    const Word& r = src.relators[i];
    RunWord acc;
    std::set<std::uint64_t> lens;
    for (Letter x : r) {
      acc.append(x > 0 ? beta[gen_of(x)] : beta[gen_of(x)].inverse());
      lens.insert(res.psi[gen_of(x)].size());
    }
    acc.cyclic_reduce();
    acc.canonicalize();
    res.relators.push_back(std::move(acc));

    LengthCheck lc{i, 0, false};
    std::uint64_t lo = *lens.begin();
    const std::uint64_t step = 2 * static_cast<std::uint64_t>(M);
    if ((lo - 1) % step == 0) {
      lc.m = static_cast<long>((lo - 1) / step) - 1;
      lc.ok = lc.m >= M;
      for (std::uint64_t l : lens) lc.ok = lc.ok && (l == lo || l == lo + step);
    }
    res.lengths.push_back(lc);
  }

  if (!res.relators.empty()) res.pieces = certify_pieces(res.relators, rat(1, 33));
  else res.pieces.verdict = true;

  std::string text = "# generated by sc-arrays embed\n";
  text += "# M = " + std::to_string(M) + ", N = " + std::to_string(opt.N) + "\n";
  text += "gens:";
  for (const auto& n : res.alphabet) text += " " + n;
  text += "\nlambda: 1/33\n";
  for (std::size_t i = 0; i < res.relators.size(); ++i) {
    const RunWord& r = res.relators[i];
    if (r.size() > opt.cap) {
      ++res.withheld;
      text += "# withheld relator " + std::to_string(i) + " of length " + std::to_string(r.size()) + "\n";
      continue;
    }
    ++res.emitted;
    text += r.format(res.alphabet) + "\n";
  }
  res.text = std::move(text);
  return res;
}

}  // namespace sca
