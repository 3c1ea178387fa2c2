#include "scarrays/suffix_automaton.hpp"

#include <algorithm>

namespace sca {

SuffixAutomaton::SuffixAutomaton(int sigma) : sigma_(sigma) {
  new_state(0, -1, -1);
  link_[0] = -1;
}

int SuffixAutomaton::new_state(int len, int id, int end) {
  int s = static_cast<int>(len_.size());
  next_.resize(next_.size() + sigma_, -1);
  link_.push_back(-1);
  len_.push_back(len);
  fp_id_.push_back(id);
  fp_end_.push_back(end);
  return s;
}

int SuffixAutomaton::clone_state(int q, int len) {
  int c = new_state(len, fp_id_[q], fp_end_[q]);
  std::copy_n(next_.begin() + static_cast<std::ptrdiff_t>(q) * sigma_, sigma_,
              next_.begin() + static_cast<std::ptrdiff_t>(c) * sigma_);
  link_[c] = link_[q];
  return c;
}

int SuffixAutomaton::extend(int last, int c, int id, int end) {
  auto at = [&](int s) -> int& { return next_[static_cast<std::size_t>(s) * sigma_ + c]; };
  if (at(last) >= 0) {
    int q = at(last);
    if (len_[last] + 1 == len_[q]) return q;
    int cl = clone_state(q, len_[last] + 1);
    for (int p = last; p >= 0 && at(p) == q; p = link_[p]) at(p) = cl;
    link_[q] = cl;
    return cl;
  }
  int cur = new_state(len_[last] + 1, id, end);
  int p = last;
  while (p >= 0 && at(p) < 0) {
    at(p) = cur;
    p = link_[p];
  }
  if (p < 0) {
    link_[cur] = 0;
  } else {
    int q = at(p);
    if (len_[p] + 1 == len_[q]) {
      link_[cur] = q;
    } else {
      int cl = clone_state(q, len_[p] + 1);
      for (; p >= 0 && at(p) == q; p = link_[p]) at(p) = cl;
      link_[q] = cl;
      link_[cur] = cl;
    }
  }
  return cur;
}

void SuffixAutomaton::add_string(const std::vector<int>& s, int id) {
  int last = 0;
  for (std::size_t i = 0; i < s.size(); ++i) last = extend(last, s[i], id, static_cast<int>(i));
}

}  // namespace sca
