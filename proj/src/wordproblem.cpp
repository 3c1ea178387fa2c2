#include "scarrays/wordproblem.hpp"

#include "scarrays/errors.hpp"

#include <map>

namespace sca {

namespace {

thread_local std::vector<Letter> t_stack;
thread_local std::vector<int> t_state;
thread_local std::vector<int> t_len;
thread_local std::vector<Letter> t_pending;
thread_local std::size_t t_steps = 0;

}  // namespace

DehnIndex::DehnIndex(const Presentation& p) : pres_(p.symmetrized ? p : symmetrize(p)) {
  sigma_ = 2 * pres_.rank();
  SymmetrizedSet sym(pres_);
  std::map<std::size_t, std::vector<Word>> by_len;
  for (const auto& b : sym.bases()) by_len[b.size()].push_back(b);
  for (auto& [len, bases] : by_len) {
    Group g;
    g.length = len;
    g.bases = std::move(bases);
    g.sam = std::make_unique<SuffixAutomaton>(std::max(sigma_, 1));
    for (std::size_t i = 0; i < g.bases.size(); ++i) {
      std::vector<int> s;
      s.reserve(2 * len);
      for (int rep = 0; rep < 2; ++rep)
        for (Letter x : g.bases[i]) s.push_back(letter_index(x));
      g.sam->add_string(s, static_cast<int>(i));
    }
    groups_.push_back(std::move(g));
  }
}

std::size_t DehnIndex::last_steps() { return t_steps; }

std::size_t DehnIndex::run(const Word& w) const {
  const std::size_t G = groups_.size();
  auto& stack = t_stack;
  auto& state = t_state;
  auto& len = t_len;
  auto& pending = t_pending;
  stack.clear();
  state.clear();
  len.clear();
  pending.assign(w.rbegin(), w.rend());
  t_steps = 0;
  while (!pending.empty()) {
    Letter x = pending.back();
    pending.pop_back();
    if (!stack.empty() && stack.back() == inv(x)) {
      stack.pop_back();
      state.resize(state.size() - G);
      len.resize(len.size() - G);
      continue;
    }
    std::size_t base = state.size();
    stack.push_back(x);
    int c = letter_index(x);
    int best_g = -1;
    std::size_t best_l = 0;
    for (std::size_t g = 0; g < G; ++g) {
      int st = base ? state[base - G + g] : 0;
      int l = base ? len[base - G + g] : 0;
      groups_[g].sam->step(st, l, c);
      state.push_back(st);
      len.push_back(l);
      std::size_t L = groups_[g].length;
      std::size_t m = std::min<std::size_t>(l, L);
      if (2 * m > L && m > best_l) {
        best_l = m;
        best_g = static_cast<int>(g);
      }
    }
    if (best_g < 0) continue;
    const Group& grp = groups_[best_g];
    auto [sid, end] = grp.sam->firstpos(state[base + best_g]);
    std::size_t L = grp.length;
    std::size_t start = static_cast<std::size_t>(end) + 1 - best_l;
    std::size_t off = start % L;
    const Word& r = grp.bases[sid];
    // pending is read from the back, so the inverse complement goes in back to front
    for (std::size_t k = best_l; k < L; ++k) pending.push_back(inv(r[(off + k) % L]));
    stack.resize(stack.size() - best_l);
    state.resize(state.size() - G * best_l);
    len.resize(len.size() - G * best_l);
    ++t_steps;
  }
  return stack.size();
}

Word DehnIndex::reduce(const Word& w) const {
  run(w);
  return Word(t_stack.begin(), t_stack.end());
}

bool DehnIndex::is_identity(const Word& w) const { return run(w) == 0; }

bool DehnIndex::equal(const Word& u, const Word& v) const {
  return is_identity(multiply(inverse(u), v));
}

std::optional<GreendlingerHit> DehnIndex::find_greendlinger(const Word& w,
                                                            const Rational& threshold) const {
  std::optional<GreendlingerHit> best;
  std::vector<int> st(groups_.size(), 0), l(groups_.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    int c = letter_index(w[i]);
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      groups_[g].sam->step(st[g], l[g], c);
      std::size_t L = groups_[g].length;
      std::size_t m = std::min<std::size_t>(l[g], L);
      if (!(Rational(static_cast<long>(m)) > threshold * static_cast<long>(L))) continue;
      std::size_t start = i + 1 - m;
      bool better = !best || m > best->subword_length ||
                    (m == best->subword_length && start < best->subword_start);
      if (!better) continue;
      best = GreendlingerHit{{}, start, m};
      auto [sid, end] = groups_[g].sam->firstpos(st[g]);
      std::size_t off = (static_cast<std::size_t>(end) + 1 - m) % L;
      best->relator = rotate(groups_[g].bases[sid], off);
    }
  }
  return best;
}

Word dehn_reduce(const Word& w, const Presentation& p) { return DehnIndex(p).reduce(w); }

bool is_identity(const Word& w, const Presentation& p) { return DehnIndex(p).is_identity(w); }

std::optional<GreendlingerHit> find_greendlinger_subword(const Word& w, const Presentation& p,
                                                         const Rational& threshold) {
  return DehnIndex(p).find_greendlinger(w, threshold);
}

}  // namespace sca
