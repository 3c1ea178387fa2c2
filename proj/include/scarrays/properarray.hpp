#pragma once

#include "scarrays/arrays.hpp"

#include <map>
#include <memory>

namespace sca {

struct ProperArrayParams {
  Rational lambda = rat(1, 33);
  Rational mu = rat(4, 33);
  Rational nu10 = rat(6, 33);
  Rational nu11 = parse_rational("7.1/33");
  Rational nu20 = parse_rational("11.1/33");
  Rational nu21 = parse_rational("12.2/33");
  bool relaxed = false;

  void validate() const;
  bool satisfies_bounds() const;
  ArrayParams first() const;   // (ν10, ν11)
  ArrayParams second() const;  // (ν20, ν21)
  Rational K1() const { return lambda / (nu11 - nu10); }
  Rational K2() const { return lambda / (nu21 - nu20); }
  Rational L() const;
};

// Spreads ξ(r)/|r| over the vertices of each contour.
SparseVector project_contours(const SparseVector& v, const Geometry& geo);
// Spreads η(e)/2 over the two endpoints of each edge.
SparseVector project_edges(const SparseVector& v, Geometry& geo);

struct PhiTildeStats {
  Rational squared_norm;   // ‖Φ~[g,h]‖₂² = ‖Φ[g,h]‖₁
  Rational drift;          // ‖Φ[g,h] - Φ[gk,h]‖₁
  Rational drift_bound;    // L d(1,k)
  bool drift_ok = true;
};

class ProperArray {
 public:
  ProperArray(Geometry& geo, ProperArrayParams params);

  Geometry& geometry() { return geo_; }
  const ProperArrayParams& params() const { return params_; }
  ArrayEngine& first() { return *e1_; }
  ArrayEngine& second() { return *e2_; }
  StepFunction psi1() const { return {params_.nu10, params_.nu11}; }
  StepFunction psi2() const { return {params_.nu20, params_.nu21}; }

  SparseVector xi1(VertexId g, VertexId h);
  SparseVector eta2(VertexId g, VertexId h);
  const SparseVector& phi(VertexId g, VertexId h);
  PhiTildeStats phi_tilde_stats(VertexId g, VertexId h, VertexId k);
  // Floating values of Φ~ entries, for export only.
  std::map<VertexId, double> phi_tilde_approx(VertexId g, VertexId h);

 private:
  Geometry& geo_;
  ProperArrayParams params_;
  std::unique_ptr<ArrayEngine> e1_, e2_;
  std::map<std::pair<VertexId, VertexId>, SparseVector> phi_cache_;
};

}  // namespace sca
