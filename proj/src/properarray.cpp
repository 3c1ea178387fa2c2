#include "scarrays/properarray.hpp"

#include "scarrays/errors.hpp"

#include <cmath>

namespace sca {

bool ProperArrayParams::satisfies_bounds() const {
  return first().satisfies_bounds() && second().satisfies_bounds() &&
         nu11 + 2 * lambda <= nu20 - 2 * lambda;
}

void ProperArrayParams::validate() const {
  first().validate();
  second().validate();
  if (!relaxed && !(nu11 + 2 * lambda <= nu20 - 2 * lambda))
    throw InvalidParams("need nu11 + 2*lambda <= nu20 - 2*lambda");
}

ArrayParams ProperArrayParams::first() const { return {lambda, mu, nu10, nu11, relaxed}; }
ArrayParams ProperArrayParams::second() const { return {lambda, mu, nu20, nu21, relaxed}; }

Rational ProperArrayParams::L() const {
  Rational k1 = K1(), k2 = K2();
  return 1 / ((1 - k1) * (nu11 - nu10)) + 1 + 1 / (k2 * (1 - k2) * (nu21 - nu20));
}

SparseVector project_contours(const SparseVector& v, const Geometry& geo) {
  if (v.domain() != Domain::Contours) throw InvalidParams("project_contours needs a contour vector");
  SparseVector out(Domain::Vertices);
  for (const auto& [c, val] : v.entries()) {
    const auto& info = geo.contour(static_cast<ContourId>(c));
    Rational share = val / static_cast<long>(info.length());
    for (VertexId u : info.vertices) out.add(u, share);
  }
  return out;
}

SparseVector project_edges(const SparseVector& v, Geometry& geo) {
  if (v.domain() != Domain::Edges) throw InvalidParams("project_edges needs an edge vector");
  SparseVector out(Domain::Vertices);
  for (const auto& [e, val] : v.entries()) {
    Rational half = val / 2;
    VertexId t = edge_tail(e);
    out.add(t, half);
    out.add(geo.neighbor(t, make_letter(edge_gen(e), 1)), half);
  }
  return out;
}

ProperArray::ProperArray(Geometry& geo, ProperArrayParams params) : geo_(geo), params_(std::move(params)) {
  params_.validate();
  e1_ = std::make_unique<ArrayEngine>(geo_, params_.first());
  e2_ = std::make_unique<ArrayEngine>(geo_, params_.second());
}

SparseVector ProperArray::xi1(VertexId g, VertexId h) { return e1_->xi(g, h, psi1()); }

SparseVector ProperArray::eta2(VertexId g, VertexId h) { return e2_->eta(g, h, psi2()); }

const SparseVector& ProperArray::phi(VertexId g, VertexId h) {
  auto key = std::make_pair(g, h);
  if (auto it = phi_cache_.find(key); it != phi_cache_.end()) return it->second;
  SparseVector v = project_contours(xi1(g, h), geo_) + project_edges(eta2(g, h), geo_);
  return phi_cache_.emplace(key, std::move(v)).first->second;
}

PhiTildeStats ProperArray::phi_tilde_stats(VertexId g, VertexId h, VertexId k) {
  PhiTildeStats s;
  const SparseVector a = phi(g, h);
  s.squared_norm = a.l1();  // Σ (√Φ(k))² = Σ Φ(k) since Φ >= 0
  VertexId gk = geo_.vertex(multiply(geo_.word(g), geo_.word(k)));
  s.drift = (a - phi(gk, h)).l1();
  s.drift_bound = params_.L() * static_cast<long>(geo_.distance(geo_.identity(), k));
  s.drift_ok = s.drift <= s.drift_bound;
  return s;
}

std::map<VertexId, double> ProperArray::phi_tilde_approx(VertexId g, VertexId h) {
  std::map<VertexId, double> out;
  for (const auto& [k, v] : phi(g, h).entries()) out[static_cast<VertexId>(k)] = std::sqrt(v.get_d());
  return out;
}

}  // namespace sca
