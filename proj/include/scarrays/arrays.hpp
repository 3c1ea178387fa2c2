#pragma once

#include "scarrays/geometry.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace sca {

struct ArrayParams {
  Rational lambda = rat(1, 33);
  Rational mu = rat(4, 33);
  Rational nu0 = rat(6, 33);
  Rational nu1 = parse_rational("7.1/33");
  bool relaxed = false;

  // Throws InvalidParams unless mu+2λ <= ν0 < ν1 <= 1/2-4λ and ν0+λ < ν1
  // (relaxed mode only asks for ν0 < ν1).
  void validate() const;
  bool satisfies_bounds() const;
  Rational K() const { return lambda / (nu1 - nu0); }
  Rational xi_bound() const;   // 1 / ((1-K)(ν1-ν0))
  Rational eta_bound() const;  // 1 + 1 / (K(1-K)(ν1-ν0))
};

struct StepFunction {
  Rational nu0;
  Rational nu1;
  StepFunction(Rational a, Rational b);
  Rational operator()(const Rational& x) const;
};

Rational psi_eval(const StepFunction& f, const Rational& x);

enum class Domain { Contours, Edges, Vertices };

// Finitely supported rational function; zero entries are never stored.
class SparseVector {
 public:
  explicit SparseVector(Domain d = Domain::Contours) : domain_(d) {}

  Domain domain() const { return domain_; }
  const std::map<std::uint64_t, Rational>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Rational get(std::uint64_t k) const;
  void set(std::uint64_t k, const Rational& v);
  void add(std::uint64_t k, const Rational& v);

  Rational l1() const;
  Rational l2_squared() const;
  bool nonnegative() const;

  SparseVector operator+(const SparseVector& o) const;
  SparseVector operator-(const SparseVector& o) const;
  bool operator==(const SparseVector& o) const {
    return domain_ == o.domain_ && entries_ == o.entries_;
  }

 private:
  Domain domain_;
  std::map<std::uint64_t, Rational> entries_;
};

// One contour of a chain as seen from the path: edges start..start+length-1.
struct ChainLink {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t contour_length = 0;
};

struct ContourChain {
  std::vector<ContourId> contours;
  std::vector<ChainLink> links;
  std::vector<Rational> overlap;  // |r ∩ p| / |r|
  std::vector<Rational> alpha, beta, rho, sigma, tau;
  std::size_t size() const { return links.size(); }
};

// Weights of an ordered chain from the arcs alone.
ContourChain chain_weights(const std::vector<ChainLink>& links, const StepFunction& f);

// Checks the chain identities; throws InvariantViolation naming the failure.
void check_chain(const ContourChain& c, const Rational& lambda);

class ArrayEngine {
 public:
  ArrayEngine(Geometry& geo, ArrayParams params);

  Geometry& geometry() { return geo_; }
  const ArrayParams& params() const { return params_; }

  // C_{p,μ'} ordered along p.
  std::vector<Arc> contours_on_geodesic(const Path& p, const Rational& mu_prime);
  // C_{g,h,μ'} ordered along any geodesic; the order is checked on every geodesic.
  std::vector<ContourId> contours_common(VertexId g, VertexId h, const Rational& mu_prime);
  // Orders A by position on p; throws if some contour misses p or two share a start.
  std::vector<ContourId> order_on(const Path& p, const std::vector<ContourId>& A);

  ContourChain chain(const Path& p, const std::vector<ContourId>& A, const StepFunction& f);
  SparseVector xi_along(const Path& p, const StepFunction& f, const std::vector<ContourId>& A);
  const SparseVector& xi(VertexId g, VertexId h, const StepFunction& f);
  SparseVector eta(VertexId g, VertexId h, const StepFunction& f,
                   const std::optional<std::vector<ContourId>>& A = std::nullopt);

  // E_{g,h}: union of the edge sets of all geodesics.
  std::vector<EdgeKey> geodesic_edges(VertexId g, VertexId h);

  // π(k) on contour and edge vectors.
  SparseVector translate(VertexId k, const SparseVector& v);

 private:
  Geometry& geo_;
  ArrayParams params_;
  std::map<std::tuple<VertexId, VertexId, Rational>, std::vector<ContourId>> common_cache_;
  std::map<std::tuple<VertexId, VertexId, Rational, Rational>, SparseVector> xi_cache_;
};

}  // namespace sca
