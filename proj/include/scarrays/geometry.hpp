#pragma once

#include "scarrays/abelian.hpp"
#include "scarrays/presentation.hpp"
#include "scarrays/wordproblem.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace sca {

using VertexId = std::uint32_t;
using ContourId = std::uint32_t;
// Positive edge (tail, generator); the undirected edge it spans is identified with it.
using EdgeKey = std::uint64_t;

inline EdgeKey make_edge(VertexId tail, int gen) {
  return (static_cast<EdgeKey>(tail) << 16) | static_cast<EdgeKey>(gen);
}
inline VertexId edge_tail(EdgeKey e) { return static_cast<VertexId>(e >> 16); }
inline int edge_gen(EdgeKey e) { return static_cast<int>(e & 0xffff); }

struct Path {
  std::vector<VertexId> vertices;  // v0 .. vn
  Word labels;                     // labels[i] takes vertices[i] to vertices[i+1]
  std::size_t length() const { return labels.size(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
};

struct GeodesicSet {
  std::size_t distance = 0;
  std::vector<Path> paths;
};

struct ContourInfo {
  VertexId start = 0;
  Word reading;                      // relator read from start
  std::vector<VertexId> vertices;    // vertices[k] = start * reading[0..k)
  std::vector<EdgeKey> edges;        // edges[k] joins vertices[k] and vertices[k+1 mod n]
  std::vector<EdgeKey> sorted_edges; // canonical identity
  std::size_t length() const { return reading.size(); }
  bool has_edge(EdgeKey e) const;
  bool has_vertex(VertexId v) const;
};

// r ∩ p for a contour r and a path p: edges start .. start+length-1 of p.
struct Arc {
  ContourId contour = 0;
  std::size_t start = 0;
  std::size_t length = 0;
};

struct GeometryOptions {
  std::size_t max_geodesics = 200000;
  std::size_t max_vertices = 5000000;
  // Hull threshold; defaults to max(0, 1/2 - 3 lambda).
  std::optional<Rational> hull_theta;
};

// Lazily explored Cayley graph with globally identified vertices.
class Geometry {
 public:
  explicit Geometry(const Presentation& p, GeometryOptions opts = {});

  const Presentation& presentation() const { return dehn_.presentation(); }
  const DehnIndex& dehn() const { return dehn_; }
  const SymmetrizedSet& symmetrized() const { return sym_; }
  const GeometryOptions& options() const { return opts_; }

  VertexId identity() const { return 0; }
  VertexId vertex(const Word& w);
  const Word& word(VertexId v) const { return words_[v]; }
  std::size_t num_vertices() const { return words_.size(); }
  VertexId neighbor(VertexId v, Letter x);
  VertexId walk(VertexId v, const Word& w);
  VertexId translate(VertexId k, VertexId v);  // k * v
  EdgeKey edge(VertexId v, Letter x);

  Path path_from(VertexId g, const Word& w);
  std::vector<EdgeKey> path_edges(const Path& p);
  Path translate(VertexId k, const Path& p);

  ContourId trace(VertexId start, const Word& reading);
  const ContourInfo& contour(ContourId c) const { return contours_[c]; }
  std::size_t num_contours() const { return contours_.size(); }
  ContourId translate_contour(VertexId k, ContourId c);
  std::vector<ContourId> contours_near(const std::vector<VertexId>& near);

  // Maximal arcs of contours on p with |r ∩ p| >= t|r| and at least one edge,
  // sorted by start; each is cross-checked against intersect().
  std::vector<Arc> arcs_on_path(const Path& p, const Rational& t);
  std::optional<Arc> intersect(ContourId c, const Path& p);

  // Distance and the complete geodesic set.
  const GeodesicSet& geodesics(VertexId g, VertexId h);
  std::size_t distance(VertexId g, VertexId h) { return geodesics(g, h).distance; }

  const Rational& hull_theta() const { return theta_; }

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const;
  };
  struct PairHash {
    std::size_t operator()(const std::pair<VertexId, Word>& p) const;
  };

  GeodesicSet compute_geodesics(VertexId g, VertexId h);

  GeometryOptions opts_;
  DehnIndex dehn_;
  SymmetrizedSet sym_;
  AbelianKey abel_;
  Rational theta_;
  int sigma_;
  std::vector<std::vector<SymmetrizedSet::Elem>> by_first_;  // elements by first letter

  std::vector<Word> words_;
  std::vector<std::int32_t> nbr_;
  std::unordered_map<Word, VertexId, WordHash> word_cache_;
  std::unordered_map<Word, VertexId, WordHash> dehn_map_;
  std::unordered_map<std::vector<std::int64_t>, std::vector<VertexId>, VecHash> buckets_;

  std::vector<ContourInfo> contours_;
  std::map<std::vector<EdgeKey>, ContourId> contour_ids_;
  std::unordered_map<std::pair<VertexId, Word>, ContourId, PairHash> trace_memo_;

  std::map<std::pair<VertexId, VertexId>, GeodesicSet> geo_cache_;
};

}  // namespace sca
