#pragma once

#include "scarrays/geometry.hpp"

#include <string>
#include <vector>

namespace sca {

struct RegionOptions {
  std::size_t max_vertices = 2000000;  // SC_ARRAYS_MAX_VERTICES overrides
  bool unsafe_no_cprime = false;       // skip the C'(1/6) gate (fold tests only)
};

// Cap from SC_ARRAYS_MAX_VERTICES when set, else the fallback.
std::size_t vertex_cap_from_env(std::size_t fallback);

// Ball of radius R around 1: the free tree of reduced words folded by relator loops.
class Region {
 public:
  Region(const Presentation& p, int radius, RegionOptions opts = {});

  int radius() const { return radius_; }
  const Presentation& presentation() const { return pres_; }
  std::size_t num_vertices() const { return reps_.size(); }
  const Word& word(std::size_t v) const { return reps_[v]; }
  std::size_t base() const { return 0; }
  int depth(std::size_t v) const { return depth_[v]; }
  // Target of the edge v --x--> or -1 when it leaves the ball.
  long target(std::size_t v, Letter x) const { return edges_[v * sigma_ + letter_index(x)]; }
  std::size_t num_edges() const;  // undirected
  std::size_t fold_rounds() const { return rounds_; }

  // Class of a reduced word of length <= radius; -1 if longer.
  long find_word(const Word& w) const;
  // Region vertex equal to w in G, searched by walking the folded graph.
  long locate(const Word& w) const;

  std::string to_dot() const;

 private:
  long find(long v) const;

  Presentation pres_;
  int radius_;
  int sigma_;
  std::vector<Word> reps_;
  std::vector<int> depth_;
  std::vector<long> edges_;
  std::vector<long> tree_class_;  // tree node -> region vertex
  std::vector<long> tree_child_;  // tree node * sigma + letter -> tree node
  std::size_t rounds_ = 0;
};

// Exact distance and every geodesic between the elements represented by u and v,
// computed inside the ball (recentred at u). Paths carry global vertex ids of geo.
GeodesicSet distance_and_geodesics(const Region& reg, Geometry& geo, const Word& u, const Word& v,
                                   std::size_t max_paths = 200000);

}  // namespace sca
