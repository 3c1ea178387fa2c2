#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sca {

// Generalized suffix automaton over symbols in [0, sigma).
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(int sigma);

  void add_string(const std::vector<int>& s, int id);

  int root() const { return 0; }
  int next(int st, int c) const { return next_[static_cast<std::size_t>(st) * sigma_ + c]; }
  int link(int st) const { return link_[st]; }
  int len(int st) const { return len_[st]; }
  // Some occurrence of the state's strings: (string id, index of last symbol).
  std::pair<int, int> firstpos(int st) const { return {fp_id_[st], fp_end_[st]}; }
  std::size_t size() const { return len_.size(); }
  int sigma() const { return sigma_; }

  // One step of a matching-statistics scan.
  void step(int& st, int& l, int c) const {
    while (st != 0 && next(st, c) < 0) {
      st = link_[st];
      l = len_[st];
    }
    int n = next(st, c);
    if (n >= 0) {
      st = n;
      ++l;
    } else {
      st = 0;
      l = 0;
    }
  }

 private:
  int new_state(int len, int id, int end);
  int clone_state(int q, int len);
  int extend(int last, int c, int id, int end);

  int sigma_;
  std::vector<int> next_;
  std::vector<int> link_;
  std::vector<int> len_;
  std::vector<int> fp_id_;
  std::vector<int> fp_end_;
};

}  // namespace sca
