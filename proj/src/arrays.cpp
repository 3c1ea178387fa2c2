#include "scarrays/arrays.hpp"

#include "scarrays/errors.hpp"

#include <algorithm>
#include <set>

namespace sca {

void ArrayParams::validate() const {
  if (!(lambda > 0)) throw InvalidParams("lambda must be positive");
  if (!(nu0 < nu1)) throw InvalidParams("need nu0 < nu1");
  if (!relaxed && !satisfies_bounds())
    throw InvalidParams("need mu+2*lambda <= nu0 < nu1 <= 1/2-4*lambda and nu0+lambda < nu1");
}

bool ArrayParams::satisfies_bounds() const {
  return mu + 2 * lambda <= nu0 && nu0 < nu1 && nu1 <= rat(1, 2) - 4 * lambda && nu0 + lambda < nu1;
}

Rational ArrayParams::xi_bound() const {
  Rational k = K();
  return 1 / ((1 - k) * (nu1 - nu0));
}

Rational ArrayParams::eta_bound() const {
  Rational k = K();
  return 1 + 1 / (k * (1 - k) * (nu1 - nu0));
}

StepFunction::StepFunction(Rational a, Rational b) : nu0(std::move(a)), nu1(std::move(b)) {
  if (!(nu0 < nu1)) throw InvalidParams("step function needs nu0 < nu1");
}

Rational StepFunction::operator()(const Rational& x) const {
  if (x <= nu0) return 0;
  if (x >= nu1) return 1;
  return Rational((x - nu0) / (nu1 - nu0));
}

Rational psi_eval(const StepFunction& f, const Rational& x) { return f(x); }

Rational SparseVector::get(std::uint64_t k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseVector::set(std::uint64_t k, const Rational& v) {
  if (v == 0)
    entries_.erase(k);
  else
    entries_[k] = v;
}

void SparseVector::add(std::uint64_t k, const Rational& v) { set(k, get(k) + v); }

Rational SparseVector::l1() const {
  Rational s = 0;
  for (const auto& [k, v] : entries_) s += abs(v);
  return s;
}

Rational SparseVector::l2_squared() const {
  Rational s = 0;
  for (const auto& [k, v] : entries_) s += v * v;
  return s;
}

bool SparseVector::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second > 0; });
}

SparseVector SparseVector::operator+(const SparseVector& o) const {
  if (o.domain_ != domain_) throw InvalidParams("adding vectors over different domains");
  SparseVector r = *this;
  for (const auto& [k, v] : o.entries_) r.add(k, v);
  return r;
}

SparseVector SparseVector::operator-(const SparseVector& o) const {
  if (o.domain_ != domain_) throw InvalidParams("subtracting vectors over different domains");
  SparseVector r = *this;
  for (const auto& [k, v] : o.entries_) r.add(k, -v);
  return r;
}

ContourChain chain_weights(const std::vector<ChainLink>& links, const StepFunction& f) {
  ContourChain c;
  const std::size_t n = links.size();
  c.links = links;
  c.overlap.resize(n);
  c.alpha.assign(n, 0);
  c.beta.assign(n, 0);
  c.rho.assign(n, 0);
  c.sigma.assign(n, 0);
  c.tau.assign(n, 0);
  auto common = [&](std::size_t i, std::size_t j) -> long {
    std::size_t lo = std::max(links[i].start, links[j].start);
    std::size_t hi = std::min(links[i].start + links[i].length, links[j].start + links[j].length);
    return hi > lo ? static_cast<long>(hi - lo) : 0;
  };
  for (std::size_t i = 0; i < n; ++i) {
    long len = static_cast<long>(links[i].contour_length);
    c.overlap[i] = rat(static_cast<long>(links[i].length), len);
    if (i > 0) c.alpha[i] = rat(common(i - 1, i), len);
    if (i + 1 < n) c.beta[i] = rat(common(i, i + 1), len);
  }
  for (std::size_t i = 0; i < n; ++i)
    c.rho[i] = f(i == 0 ? c.overlap[0] : Rational(c.overlap[i] - c.rho[i - 1] * c.alpha[i]));
  for (std::size_t i = n; i-- > 0;)
    c.sigma[i] = f(i + 1 == n ? c.overlap[i] : Rational(c.overlap[i] - c.sigma[i + 1] * c.beta[i]));
  for (std::size_t i = 0; i < n; ++i) {
    Rational t = c.overlap[i];
    if (i > 0) t -= c.rho[i - 1] * c.alpha[i];
    if (i + 1 < n) t -= c.sigma[i + 1] * c.beta[i];
    c.tau[i] = t;
  }
  return c;
}

void check_chain(const ContourChain& c, const Rational& lambda) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && !(c.links[i - 1].start < c.links[i].start))
      throw InvariantViolation("chain order is not strictly increasing along the path");
    if (i + 1 < n &&
        c.beta[i] * static_cast<long>(c.links[i].contour_length) !=
            c.alpha[i + 1] * static_cast<long>(c.links[i + 1].contour_length))
      throw InvariantViolation("beta_i |r_i| != alpha_{i+1} |r_{i+1}|");
    if (!(c.alpha[i] < lambda) || !(c.beta[i] < lambda))
      throw InvariantViolation("consecutive contour overlap is not a small piece");
    if (!(c.overlap[i] - 2 * lambda < c.tau[i]) || !(c.tau[i] <= c.overlap[i]))
      throw InvariantViolation("tau outside (overlap - 2 lambda, overlap]");
    for (const Rational* v : {&c.rho[i], &c.sigma[i]})
      if (*v < 0 || *v > 1) throw InvariantViolation("rho or sigma outside [0, 1]");
  }
  if (n > 0 && (c.alpha.front() != 0 || c.beta.back() != 0))
    throw InvariantViolation("end conventions alpha_1 = beta_n = 0 broken");
}

ArrayEngine::ArrayEngine(Geometry& geo, ArrayParams params) : geo_(geo), params_(std::move(params)) {
  params_.validate();
}

std::vector<Arc> ArrayEngine::contours_on_geodesic(const Path& p, const Rational& mu_prime) {
  auto arcs = geo_.arcs_on_path(p, mu_prime);
  for (std::size_t i = 0; i + 1 < arcs.size(); ++i)
    if (arcs[i].start == arcs[i + 1].start)
      throw InvariantViolation("two contours begin their arcs at the same vertex of a geodesic");
  // no arc of C_{p,λ} contains another
  const Rational& lam = geo_.presentation().lambda;
  std::vector<const Arc*> big;
  for (const auto& a : arcs)
    if (Rational(static_cast<long>(a.length)) >= lam * static_cast<long>(geo_.contour(a.contour).length()))
      big.push_back(&a);
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = i + 1; j < big.size(); ++j)
      if (big[i]->start + big[i]->length >= big[j]->start + big[j]->length)
        throw InvariantViolation("one contour arc contains another");
  return arcs;
}

std::vector<ContourId> ArrayEngine::order_on(const Path& p, const std::vector<ContourId>& A) {
  std::vector<std::pair<std::size_t, ContourId>> pos;
  for (ContourId c : A) {
    auto arc = geo_.intersect(c, p);
    if (!arc) throw InvariantViolation("contour of the chain does not meet the geodesic");
    pos.push_back({arc->start, c});
  }
  std::sort(pos.begin(), pos.end());
  for (std::size_t i = 0; i + 1 < pos.size(); ++i)
    if (pos[i].first == pos[i + 1].first)
      throw InvariantViolation("two contours begin their arcs at the same vertex of a geodesic");
  std::vector<ContourId> out;
  for (auto& [s, c] : pos) out.push_back(c);
  return out;
}

std::vector<ContourId> ArrayEngine::contours_common(VertexId g, VertexId h, const Rational& mu_prime) {
  auto key = std::make_tuple(g, h, mu_prime);
  if (auto it = common_cache_.find(key); it != common_cache_.end()) return it->second;
  const auto& gs = geo_.geodesics(g, h);
  std::vector<ContourId> order;
  std::set<ContourId> common;
  bool first = true;
  for (const auto& p : gs.paths) {
    std::set<ContourId> here;
    std::vector<ContourId> seq;
    for (const auto& a : contours_on_geodesic(p, mu_prime)) {
      here.insert(a.contour);
      seq.push_back(a.contour);
    }
    if (first) {
      common = here;
      order = seq;
      first = false;
    } else {
      std::set<ContourId> next;
      for (ContourId c : common)
        if (here.count(c)) next.insert(c);
      common.swap(next);
    }
  }
  std::vector<ContourId> out;
  for (ContourId c : order)
    if (common.count(c)) out.push_back(c);
  for (const auto& p : gs.paths)
    if (order_on(p, out) != out)
      throw InvariantViolation("geodesics order common contours differently");
  common_cache_.emplace(key, out);
  return out;
}

ContourChain ArrayEngine::chain(const Path& p, const std::vector<ContourId>& A, const StepFunction& f) {
  std::vector<ChainLink> links;
  for (ContourId c : A) {
    auto arc = geo_.intersect(c, p);
    if (!arc) throw InvariantViolation("contour of the chain does not meet the geodesic");
    links.push_back({arc->start, arc->length, geo_.contour(c).length()});
  }
  ContourChain ch = chain_weights(links, f);
  ch.contours = A;
  check_chain(ch, geo_.presentation().lambda);
  return ch;
}

SparseVector ArrayEngine::xi_along(const Path& p, const StepFunction& f, const std::vector<ContourId>& A) {
  SparseVector v(Domain::Contours);
  auto ch = chain(p, A, f);
  for (std::size_t i = 0; i < ch.size(); ++i)
    v.set(ch.contours[i], f(ch.tau[i]) * static_cast<long>(ch.links[i].contour_length));
  return v;
}

const SparseVector& ArrayEngine::xi(VertexId g, VertexId h, const StepFunction& f) {
  auto key = std::make_tuple(g, h, f.nu0, f.nu1);
  if (auto it = xi_cache_.find(key); it != xi_cache_.end()) return it->second;
  auto A = contours_common(g, h, params_.mu);
  SparseVector best(Domain::Contours);
  for (const auto& p : geo_.geodesics(g, h).paths) {
    auto v = xi_along(p, f, A);
    for (const auto& [k, val] : v.entries())
      if (val > best.get(k)) best.set(k, val);
  }
  return xi_cache_.emplace(key, std::move(best)).first->second;
}

std::vector<EdgeKey> ArrayEngine::geodesic_edges(VertexId g, VertexId h) {
  std::set<EdgeKey> es;
  for (const auto& p : geo_.geodesics(g, h).paths)
    for (EdgeKey e : geo_.path_edges(p)) es.insert(e);
  return {es.begin(), es.end()};
}

SparseVector ArrayEngine::eta(VertexId g, VertexId h, const StepFunction& f,
                              const std::optional<std::vector<ContourId>>& A) {
  std::vector<ContourId> set = A ? *A : contours_common(g, h, params_.mu);
  const SparseVector xv = xi(g, h, f);
  SparseVector out(Domain::Edges);
  for (EdgeKey e : geodesic_edges(g, h)) {
    Rational m = 0;
    for (ContourId c : set) {
      const auto& info = geo_.contour(c);
      if (!info.has_edge(e)) continue;
      Rational r = xv.get(c) / static_cast<long>(info.length());
      if (r > m) m = r;
    }
    out.set(e, 1 - m);
  }
  return out;
}

SparseVector ArrayEngine::translate(VertexId k, const SparseVector& v) {
  SparseVector out(v.domain());
  for (const auto& [key, val] : v.entries()) {
    std::uint64_t nk = 0;
    switch (v.domain()) {
      case Domain::Contours:
        nk = geo_.translate_contour(k, static_cast<ContourId>(key));
        break;
      case Domain::Edges:
        nk = make_edge(geo_.translate(k, edge_tail(key)), edge_gen(key));
        break;
      case Domain::Vertices:
        nk = geo_.translate(k, static_cast<VertexId>(key));
        break;
    }
    out.set(nk, val);
  }
  return out;
}

}  // namespace sca
