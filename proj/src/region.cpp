#include "scarrays/region.hpp"

#include "scarrays/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <sstream>

namespace sca {

std::size_t vertex_cap_from_env(std::size_t fallback) {
  const char* s = std::getenv("SC_ARRAYS_MAX_VERTICES");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0' || v == 0) throw InvalidParams("SC_ARRAYS_MAX_VERTICES must be a positive integer");
  return static_cast<std::size_t>(v);
}

namespace {

struct Folder {
  int sigma;
  std::vector<long> table;
  std::vector<long> uf;
  bool changed = false;

  long find(long v) {
    while (uf[v] != v) {
      uf[v] = uf[uf[v]];
      v = uf[v];
    }
    return v;
  }
  long at(long v, int c) {
    long t = table[v * sigma + c];
    return t < 0 ? -1 : find(t);
  }
  void merge(long a, long b) {
    std::deque<std::pair<long, long>> q{{a, b}};
    while (!q.empty()) {
      auto [x, y] = q.front();
      q.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (y < x) std::swap(x, y);
      uf[y] = x;
      changed = true;
      for (int c = 0; c < sigma; ++c) {
        long t = table[y * sigma + c];
        if (t < 0) continue;
        t = find(t);
        long s = table[x * sigma + c];
        if (s < 0)
          table[x * sigma + c] = t;
        else if (find(s) != t)
          q.push_back({s, t});
      }
    }
  }
  // One relator loop read from v.
  void scan(long v, const Word& r, std::size_t shift) {
    const std::size_t L = r.size();
    auto letter = [&](std::size_t k) { return r[(shift + k) % L]; };
    long f = v;
    std::size_t i = 0;
    while (i < L) {
      long t = at(f, letter_index(letter(i)));
      if (t < 0) break;
      f = t;
      ++i;
    }
    if (i == L) {
      if (f != v) merge(f, v);
      return;
    }
    long b = v;
    std::size_t j = L;
    while (j > i) {
      long t = at(b, letter_index(inv(letter(j - 1))));
      if (t < 0) break;
      b = t;
      --j;
    }
    if (j == i) {
      merge(f, b);
    } else if (j == i + 1) {
      Letter x = letter(i);
      table[f * sigma + letter_index(x)] = b;
      table[b * sigma + letter_index(inv(x))] = f;
      changed = true;
    }
  }
};

}  // namespace

Region::Region(const Presentation& p, int radius, RegionOptions opts)
    : pres_(p.symmetrized ? p : symmetrize(p)), radius_(radius) {
  if (radius < 0) throw InvalidParams("radius must be nonnegative");
  if (!opts.unsafe_no_cprime) {
    if (pres_.lambda > rat(1, 6))
      throw NotSmallCancellation("ball construction needs lambda <= 1/6");
    if (!piece_table(pres_).lambda_verdict)
      throw NotSmallCancellation("presentation fails C'(" + to_string(pres_.lambda) + ")");
    for (const auto& r : pres_.relators)
      if (primitive_period(r) != r.size())
        throw NotSmallCancellation("relator is a proper power");
  }
  sigma_ = 2 * pres_.rank();
  const std::size_t cap = vertex_cap_from_env(opts.max_vertices);

  // free tree of radius R+1 so that every edge leaving a ball vertex is present
  std::vector<Word> node_word{Word{}};
  std::vector<int> node_depth{0};
  tree_child_.assign(sigma_, -1);
  Folder F;
  F.sigma = sigma_;
  F.table.assign(sigma_, -1);
  for (std::size_t v = 0; v < node_word.size(); ++v) {
    if (node_depth[v] > radius) continue;
    for (int c = 0; c < sigma_; ++c) {
      Letter x = letter_from_index(c);
      const Word& w = node_word[v];
      if (!w.empty() && w.back() == inv(x)) continue;
      if (node_word.size() >= cap)
        throw ResourceLimit("ball exceeds the vertex cap of " + std::to_string(cap));
      long child = static_cast<long>(node_word.size());
      Word cw = w;
      cw.push_back(x);
      node_word.push_back(std::move(cw));
      node_depth.push_back(node_depth[v] + 1);
      tree_child_.resize(tree_child_.size() + sigma_, -1);
      F.table.resize(F.table.size() + sigma_, -1);
      tree_child_[v * sigma_ + c] = child;
      F.table[v * sigma_ + c] = child;
      F.table[child * sigma_ + letter_index(inv(x))] = static_cast<long>(v);
    }
  }
  const long N = static_cast<long>(node_word.size());
  F.uf.resize(N);
  for (long v = 0; v < N; ++v) F.uf[v] = v;

  SymmetrizedSet sym(pres_);
  do {
    F.changed = false;
    ++rounds_;
    for (long v = 0; v < N; ++v) {
      if (F.find(v) != v) continue;
      for (const auto& e : sym.elems()) {
        F.scan(F.find(v), sym.bases()[e.base], e.shift);
        if (F.find(v) != v) break;
      }
    }
  } while (F.changed);

  // ball vertices: classes holding a node of depth <= R, numbered by least node
  std::vector<long> cls(N, -1);
  tree_class_.assign(N, -1);
  for (long v = 0; v < N; ++v) {
    if (node_depth[v] > radius) continue;
    long r = F.find(v);
    if (cls[r] < 0) {
      cls[r] = static_cast<long>(reps_.size());
      reps_.push_back(node_word[v]);
      depth_.push_back(node_depth[v]);
    }
    tree_class_[v] = cls[r];
  }
  edges_.assign(reps_.size() * sigma_, -1);
  for (long v = 0; v < N; ++v) {
    if (tree_class_[v] < 0) continue;
    long rv = tree_class_[v];
    for (int c = 0; c < sigma_; ++c) {
      long t = F.at(F.find(v), c);
      if (t >= 0 && cls[t] >= 0) edges_[rv * sigma_ + c] = cls[t];
    }
  }
}

std::size_t Region::num_edges() const {
  std::size_t n = 0;
  for (std::size_t v = 0; v < reps_.size(); ++v)
    for (int g = 0; g < pres_.rank(); ++g)
      if (edges_[v * sigma_ + 2 * g] >= 0) ++n;
  return n;
}

long Region::find_word(const Word& w) const {
  long v = 0;
  for (Letter x : w) {
    if (v >= static_cast<long>(tree_class_.size())) return -1;
    v = tree_child_.size() > static_cast<std::size_t>(v * sigma_ + letter_index(x))
            ? tree_child_[v * sigma_ + letter_index(x)]
            : -1;
    if (v < 0) return -1;
  }
  return tree_class_[v];
}

long Region::locate(const Word& w) const {
  long v = 0;
  for (Letter x : w) {
    v = edges_[v * sigma_ + letter_index(x)];
    if (v < 0) return -1;
  }
  return v;
}

std::string Region::to_dot() const {
  std::ostringstream os;
  os << "digraph region {\n";
  for (std::size_t v = 0; v < reps_.size(); ++v) {
    std::string label = reps_[v].empty() ? "1" : format_word(reps_[v], pres_.alphabet);
    os << "  v" << v << " [label=\"" << label << "\"];\n";
  }
  for (std::size_t v = 0; v < reps_.size(); ++v)
    for (int g = 0; g < pres_.rank(); ++g) {
      long t = edges_[v * sigma_ + 2 * g];
      if (t >= 0) os << "  v" << v << " -> v" << t << " [label=\"" << pres_.alphabet[g] << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

GeodesicSet distance_and_geodesics(const Region& reg, Geometry& geo, const Word& u, const Word& v,
                                   std::size_t max_paths) {
  Word t = multiply(inverse(u), v);
  long target = reg.locate(t);
  if (target < 0) throw OutOfRegion("endpoint lies outside the ball");
  const std::size_t n = reg.num_vertices();
  const int sigma = 2 * reg.presentation().rank();
  std::vector<long> dt(n, -1);
  std::deque<long> q{target};
  dt[target] = 0;
  while (!q.empty()) {
    long a = q.front();
    q.pop_front();
    for (int c = 0; c < sigma; ++c) {
      long b = reg.target(a, letter_from_index(c));
      if (b >= 0 && dt[b] < 0) {
        dt[b] = dt[a] + 1;
        q.push_back(b);
      }
    }
  }
  GeodesicSet out;
  out.distance = static_cast<std::size_t>(dt[0]);
  Word cur;
  std::vector<Word> labels;
  std::function<void(long)> dfs = [&](long a) {
    if (a == target) {
      if (labels.size() >= max_paths) throw ResourceLimit("too many geodesics");
      labels.push_back(cur);
      return;
    }
    for (int c = 0; c < sigma; ++c) {
      Letter x = letter_from_index(c);
      long b = reg.target(a, x);
      if (b < 0 || dt[b] != dt[a] - 1) continue;
      cur.push_back(x);
      dfs(b);
      cur.pop_back();
    }
  };
  dfs(0);
  VertexId g = geo.vertex(u);
  for (const auto& w : labels) out.paths.push_back(geo.path_from(g, w));
  return out;
}

}  // namespace sca
