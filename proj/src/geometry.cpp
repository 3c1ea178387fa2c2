#include "scarrays/geometry.hpp"

#include "scarrays/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <unordered_set>

namespace sca {

bool ContourInfo::has_edge(EdgeKey e) const {
  return std::binary_search(sorted_edges.begin(), sorted_edges.end(), e);
}

bool ContourInfo::has_vertex(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::size_t Geometry::VecHash::operator()(const std::vector<std::int64_t>& v) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

std::size_t Geometry::PairHash::operator()(const std::pair<VertexId, Word>& p) const {
  return WordHash{}(p.second) * 31 + p.first;
}

Geometry::Geometry(const Presentation& p, GeometryOptions opts)
    : opts_(std::move(opts)),
      dehn_(p),
      sym_(dehn_.presentation()),
      abel_(dehn_.presentation()) {
  sigma_ = 2 * dehn_.presentation().rank();
  if (opts_.hull_theta) {
    theta_ = *opts_.hull_theta;
  } else {
    theta_ = rat(1, 2) - 3 * dehn_.presentation().lambda;
    if (theta_ < 0) theta_ = 0;
  }
  by_first_.resize(sigma_);
  for (const auto& e : sym_.elems()) by_first_[letter_index(sym_.at(e, 0))].push_back(e);
  vertex(Word{});
}

VertexId Geometry::vertex(const Word& w0) {
  Word w = reduce(w0);
  if (auto it = word_cache_.find(w); it != word_cache_.end()) return it->second;
  Word d = dehn_.reduce(w);
  VertexId id;
  if (auto it = dehn_map_.find(d); it != dehn_map_.end()) {
    id = it->second;
  } else {
    auto& bucket = buckets_[abel_.key(d)];
    Word dinv = inverse(d);
    id = std::numeric_limits<VertexId>::max();
    for (VertexId c : bucket) {
      if (dehn_.is_identity(multiply(dinv, words_[c]))) {
        id = c;
        break;
      }
    }
    if (id == std::numeric_limits<VertexId>::max()) {
      if (words_.size() >= opts_.max_vertices)
        throw ResourceLimit("vertex cap of " + std::to_string(opts_.max_vertices) + " reached");
      id = static_cast<VertexId>(words_.size());
      words_.push_back(d);
      nbr_.resize(nbr_.size() + sigma_, -1);
      bucket.push_back(id);
    }
    dehn_map_.emplace(std::move(d), id);
  }
  word_cache_.emplace(std::move(w), id);
  return id;
}

VertexId Geometry::neighbor(VertexId v, Letter x) {
  std::size_t slot = static_cast<std::size_t>(v) * sigma_ + letter_index(x);
  if (nbr_[slot] >= 0) return static_cast<VertexId>(nbr_[slot]);
  Word w = words_[v];
  if (!w.empty() && w.back() == inv(x))
    w.pop_back();
  else
    w.push_back(x);
  VertexId u = vertex(w);
  nbr_[static_cast<std::size_t>(v) * sigma_ + letter_index(x)] = static_cast<std::int32_t>(u);
  nbr_[static_cast<std::size_t>(u) * sigma_ + letter_index(inv(x))] = static_cast<std::int32_t>(v);
  return u;
}

VertexId Geometry::walk(VertexId v, const Word& w) {
  for (Letter x : w) v = neighbor(v, x);
  return v;
}

VertexId Geometry::translate(VertexId k, VertexId v) {
  if (k == 0) return v;
  return vertex(multiply(words_[k], words_[v]));
}

EdgeKey Geometry::edge(VertexId v, Letter x) {
  if (sign_of(x) > 0) return make_edge(v, gen_of(x));
  return make_edge(neighbor(v, x), gen_of(x));
}

Path Geometry::path_from(VertexId g, const Word& w) {
  Path p;
  p.vertices.push_back(g);
  for (Letter x : w) {
    p.vertices.push_back(neighbor(p.vertices.back(), x));
    p.labels.push_back(x);
  }
  return p;
}

std::vector<EdgeKey> Geometry::path_edges(const Path& p) {
  std::vector<EdgeKey> out;
  out.reserve(p.length());
  for (std::size_t i = 0; i < p.length(); ++i) {
    Letter x = p.labels[i];
    out.push_back(sign_of(x) > 0 ? make_edge(p.vertices[i], gen_of(x))
                                 : make_edge(p.vertices[i + 1], gen_of(x)));
  }
  return out;
}

Path Geometry::translate(VertexId k, const Path& p) {
  return path_from(translate(k, p.front()), p.labels);
}

ContourId Geometry::trace(VertexId start, const Word& reading) {
  auto key = std::make_pair(start, reading);
  if (auto it = trace_memo_.find(key); it != trace_memo_.end()) return it->second;
  ContourInfo c;
  c.start = start;
  c.reading = reading;
  VertexId v = start;
  for (Letter x : reading) {
    c.vertices.push_back(v);
    c.edges.push_back(edge(v, x));
    v = neighbor(v, x);
  }
  if (v != start) throw InvariantViolation("relator loop does not close at " + format_word(words_[start], presentation().alphabet));
  std::vector<VertexId> vs = c.vertices;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw InvariantViolation("contour is not a simple loop");
  c.sorted_edges = c.edges;
  std::sort(c.sorted_edges.begin(), c.sorted_edges.end());
  ContourId id;
  if (auto it = contour_ids_.find(c.sorted_edges); it != contour_ids_.end()) {
    id = it->second;
  } else {
    id = static_cast<ContourId>(contours_.size());
    contour_ids_.emplace(c.sorted_edges, id);
    contours_.push_back(std::move(c));
  }
  trace_memo_.emplace(std::move(key), id);
  return id;
}

ContourId Geometry::translate_contour(VertexId k, ContourId c) {
  VertexId s = contours_[c].start;
  Word reading = contours_[c].reading;
  return trace(translate(k, s), reading);
}

std::vector<ContourId> Geometry::contours_near(const std::vector<VertexId>& near) {
  std::vector<ContourId> out;
  for (VertexId v : near)
    for (const auto& e : sym_.elems()) out.push_back(trace(v, sym_.word(e)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Arc> Geometry::intersect(ContourId c, const Path& p) {
  auto edges = path_edges(p);
  const ContourInfo& info = contours_[c];
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (info.has_edge(edges[i])) idx.push_back(i);
  if (idx.empty()) return std::nullopt;
  if (idx.back() - idx.front() + 1 != idx.size())
    throw InvariantViolation("contour meets a path in more than one arc");
  return Arc{c, idx.front(), idx.size()};
}

std::vector<Arc> Geometry::arcs_on_path(const Path& p, const Rational& t) {
  std::vector<Arc> out;
  const Word& lab = p.labels;
  const std::size_t n = lab.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : by_first_[letter_index(lab[i])]) {
      std::size_t L = sym_.length(e);
      if (i > 0 && lab[i - 1] == sym_.at(e, L - 1)) continue;
      std::size_t k = 1;
      while (k < L && i + k < n && lab[i + k] == sym_.at(e, k)) ++k;
      if (Rational(static_cast<long>(k)) < t * static_cast<long>(L)) continue;
      ContourId c = trace(p.vertices[i], sym_.word(e));
      auto arc = intersect(c, p);
      if (!arc || arc->start != i || arc->length != k)
        throw InvariantViolation("contour arc on a path disagrees with its edge intersection");
      out.push_back(*arc);
    }
  }
  std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) {
    return a.start != b.start ? a.start < b.start : a.contour < b.contour;
  });
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (out[i].contour == out[i + 1].contour)
      throw InvariantViolation("contour meets a path in more than one arc");
  return out;
}

const GeodesicSet& Geometry::geodesics(VertexId g, VertexId h) {
  auto key = std::make_pair(g, h);
  if (auto it = geo_cache_.find(key); it != geo_cache_.end()) return it->second;
  auto res = compute_geodesics(g, h);
  return geo_cache_.emplace(key, std::move(res)).first->second;
}

namespace {

struct Hull {
  std::unordered_map<VertexId, std::vector<std::pair<VertexId, Letter>>> adj;
  std::unordered_set<EdgeKey> edges;

  void add(VertexId a, Letter x, VertexId b, EdgeKey e) {
    if (!edges.insert(e).second) return;
    adj[a].push_back({b, x});
    adj[b].push_back({a, inv(x)});
  }

  std::unordered_map<VertexId, std::size_t> bfs(VertexId s) const {
    std::unordered_map<VertexId, std::size_t> d;
    std::deque<VertexId> q{s};
    d[s] = 0;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop_front();
      auto it = adj.find(v);
      if (it == adj.end()) continue;
      for (auto [u, x] : it->second) {
        (void)x;
        if (d.emplace(u, d[v] + 1).second) q.push_back(u);
      }
    }
    return d;
  }
};

}  // namespace

GeodesicSet Geometry::compute_geodesics(VertexId g, VertexId h) {
  GeodesicSet out;
  if (g == h) {
    out.paths.push_back(Path{{g}, {}});
    return out;
  }
  Word w = dehn_.reduce(multiply(inverse(words_[g]), words_[h]));
  Path start = path_from(g, w);
  if (start.back() != h) throw InvariantViolation("Dehn-reduced word does not reach its endpoint");

  Hull Y;
  std::set<std::vector<VertexId>> absorbed;
  auto absorb = [&](const Path& p) {
    if (!absorbed.insert(p.vertices).second) return;
    for (std::size_t i = 0; i < p.length(); ++i)
      Y.add(p.vertices[i], p.labels[i], p.vertices[i + 1], edge(p.vertices[i], p.labels[i]));
    for (const Arc& a : arcs_on_path(p, theta_)) {
      const ContourInfo c = contours_[a.contour];
      for (std::size_t k = 0; k < c.length(); ++k)
        Y.add(c.vertices[k], c.reading[k], c.vertices[(k + 1) % c.length()], c.edges[k]);
    }
  };

  std::vector<Path> current{start};
  for (;;) {
    for (const auto& p : current) absorb(p);
    auto dg = Y.bfs(g);
    auto dh = Y.bfs(h);
    std::size_t d = dg.at(h);
    // enumerate every shortest path in Y, lexicographic by letter index
    std::vector<Path> paths;
    Path cur{{g}, {}};
    std::function<void(VertexId)> dfs = [&](VertexId v) {
      if (v == h) {
        if (paths.size() >= opts_.max_geodesics)
          throw ResourceLimit("more than " + std::to_string(opts_.max_geodesics) + " geodesics");
        paths.push_back(cur);
        return;
      }
      auto nb = Y.adj.at(v);
      std::sort(nb.begin(), nb.end(), [](const auto& a, const auto& b) {
        return letter_index(a.second) < letter_index(b.second);
      });
      std::size_t rem = d - cur.length();
      for (auto [u, x] : nb) {
        auto it = dh.find(u);
        if (it == dh.end() || it->second + 1 != rem) continue;
        cur.vertices.push_back(u);
        cur.labels.push_back(x);
        dfs(u);
        cur.vertices.pop_back();
        cur.labels.pop_back();
      }
    };
    dfs(g);
    bool grew = false;
    for (const auto& p : paths)
      if (!absorbed.count(p.vertices)) grew = true;
    if (!grew) {
      out.distance = d;
      out.paths = std::move(paths);
      return out;
    }
    current = std::move(paths);
  }
}

}  // namespace sca
