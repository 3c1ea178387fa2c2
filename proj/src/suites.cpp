#include "scarrays/suites.hpp"

#include "scarrays/embedding.hpp"
#include "scarrays/errors.hpp"
#include "scarrays/freeproduct.hpp"
#include "scarrays/region.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace sca {

const std::vector<std::string> kSuites = {"ad-lemma", "xi-drift", "eta-drift", "phi", "embed", "freeproduct"};

namespace {

using nlohmann::json;

json params_json(const ArrayParams& a) {
  return {{"lambda", rational_json(a.lambda)}, {"mu", rational_json(a.mu)},
          {"nu0", rational_json(a.nu0)},       {"nu1", rational_json(a.nu1)}};
}

json config_json(const Presentation& p, const SuiteOptions& opt) {
  const auto& q = opt.params;
  return {{"mode", opt.relaxed ? "relaxed" : "paper"},
          {"presentation", format_presentation(p)},
          {"seed", opt.seed},
          {"samples", opt.samples},
          {"radius", opt.radius},
          {"scenarios", opt.scenarios},
          {"lambda", rational_json(q.lambda)},
          {"mu", rational_json(q.mu)},
          {"nu10", rational_json(q.nu10)},
          {"nu11", rational_json(q.nu11)},
          {"nu20", rational_json(q.nu20)},
          {"nu21", rational_json(q.nu21)}};
}

CheckResult named(const std::string& name) {
  CheckResult c;
  c.name = name;
  return c;
}

void raise(std::optional<Rational>& m, const Rational& v) {
  if (!m || v > *m) m = v;
}

// Bound checks become informational outside the proven range.
void settle(CheckResult& c, bool ok, bool informational) {
  if (informational) {
    c.verdict = Verdict::Skipped;
    c.note = "informational: constants outside the proven range";
    return;
  }
  c.verdict = verdict_of(ok, c.pairs_tested);
}

// Runs f on one pair; pairs that leave the explored part of the graph are skipped.
template <class F>
bool guarded(std::vector<CheckResult*> checks, F&& f) {
  try {
    f();
    for (auto* c : checks) ++c->pairs_tested;
    return true;
  } catch (const ResourceLimit&) {
  } catch (const OutOfRegion&) {
  }
  for (auto* c : checks) ++c->pairs_skipped;
  return false;
}

struct Ctx {
  Geometry geo;
  ProperArray pa;
  Ctx(const Presentation& p, const SuiteOptions& opt)
      : geo(p, GeometryOptions{200000, opt.max_vertices, std::nullopt}), pa(geo, opt.params) {}
};

Report drift_suite(const Presentation& p, const SuiteOptions& opt, bool eta) {
  Report rep;
  rep.command = eta ? "verify eta-drift" : "verify xi-drift";
  rep.config = config_json(p, opt);
  Ctx ctx(p, opt);
  Geometry& geo = ctx.geo;
  ProperArray& pa = ctx.pa;
  const ArrayParams ap = eta ? opt.params.second() : opt.params.first();
  const bool info = !ap.satisfies_bounds();
  ArrayEngine& eng = eta ? pa.second() : pa.first();
  const StepFunction f = eta ? pa.psi2() : pa.psi1();

  CheckResult l1;
  l1.name = eta ? "eta-l1-drift" : "xi-l1-drift";
  l1.params = params_json(ap);
  if (!info) l1.bound = eta ? ap.eta_bound() : ap.xi_bound();
  CheckResult decay;
  decay.name = "xi-contour-decay";
  decay.params = params_json(ap);
  decay.params["K"] = rational_json(ap.K());
  decay.bound = Rational(1);
  CheckResult stable = named(eta ? "eta-stability" : "xi-stability");
  stable.note = "arrays unchanged when the contour set grows by the contours of the neighbouring pair";
  bool ok_l1 = true, ok_decay = true, ok_stable = true;

  std::map<std::string, std::uint64_t> per_scenario;
  for (const auto& dp : sample_pairs(p, opt)) {
    std::vector<CheckResult*> cs{&l1, &stable};
    if (!eta) cs.push_back(&decay);
    bool done = guarded(cs, [&] {
      VertexId g = geo.vertex(dp.g), h = geo.vertex(dp.h), gx = geo.neighbor(g, dp.x);
      const std::vector<ContourId> A = eng.contours_common(g, h, ap.mu);
      std::vector<ContourId> U = A;
      for (ContourId c : eng.contours_common(gx, h, ap.mu))
        if (std::find(U.begin(), U.end(), c) == U.end()) U.push_back(c);
      if (eta) {
        const SparseVector e = eng.eta(g, h, f);
        Rational d = (e - eng.eta(gx, h, f)).l1();
        raise(l1.max_observed, d);
        if (l1.bound && !(d < *l1.bound)) ok_l1 = false;
        if (!info && !(eng.eta(g, h, f, U) == e)) ok_stable = false;
        return;
      }
      const SparseVector a = eng.xi(g, h, f);
      const SparseVector b = eng.xi(gx, h, f);
      Rational d = (a - b).l1();
      raise(l1.max_observed, d);
      if (l1.bound && !(d < *l1.bound)) ok_l1 = false;
      if (info) return;
      // the union is ordered along any geodesic from g
      for (const Path& path : geo.geodesics(g, h).paths) {
        std::vector<ContourId> ord = eng.order_on(path, U);
        if (!(eng.xi_along(path, f, eng.order_on(path, A)) == eng.xi_along(path, f, ord))) ok_stable = false;
        Rational scale = 1;
        for (ContourId c : ord) {
          Rational ratio = abs(a.get(c) - b.get(c)) * (ap.nu1 - ap.nu0) / scale;
          raise(decay.max_observed, ratio);
          if (!(ratio < 1)) ok_decay = false;
          scale *= ap.K();
        }
      }
    });
    if (done) ++per_scenario[dp.scenario];
  }
  settle(l1, ok_l1, info);
  rep.checks.push_back(l1);
  settle(stable, ok_stable, info);
  rep.checks.push_back(stable);
  if (!eta) {
    settle(decay, ok_decay, info);
    rep.checks.push_back(decay);
  }
  rep.summary["pairs_by_scenario"] = per_scenario;
  rep.summary["vertices_explored"] = geo.num_vertices();
  rep.summary["contours_traced"] = geo.num_contours();
  return rep;
}

Report phi_suite(const Presentation& p, const SuiteOptions& opt) {
  Report rep;
  rep.command = "verify phi";
  rep.config = config_json(p, opt);
  Ctx ctx(p, opt);
  Geometry& geo = ctx.geo;
  ProperArray& pa = ctx.pa;
  const bool info = !opt.params.satisfies_bounds();

  CheckResult nonneg = named("phi-nonnegative-finite"), sym = named("phi-symmetric"), equi = named("phi-equivariant"),
      lower = named("phi-dominates-distance"), drift = named("phi-drift"), tilde = named("phi-tilde-norm-identity"),
      split = named("phi-norm-splits");
  lower.bound = Rational(1);
  if (!info) drift.bound = opt.params.L();
  drift.params["L"] = info ? json(nullptr) : rational_json(opt.params.L());
  bool ok_nonneg = true, ok_sym = true, ok_equi = true, ok_lower = true, ok_drift = true, ok_tilde = true,
       ok_split = true;

  for (const auto& dp : sample_pairs(p, opt)) {
    guarded({&nonneg, &sym, &equi, &lower, &drift, &tilde, &split}, [&] {
      VertexId g = geo.vertex(dp.g), h = geo.vertex(dp.h);
      VertexId k = geo.vertex(Word{dp.x});
      const SparseVector phi = pa.phi(g, h);
      if (!phi.nonnegative() || (g != h && phi.empty())) ok_nonneg = false;
      if (!(pa.phi(h, g) == phi)) ok_sym = false;
      VertexId kg = geo.translate(k, g), kh = geo.translate(k, h);
      if (!(pa.phi(kg, kh) == pa.first().translate(k, phi))) ok_equi = false;

      const Rational norm = phi.l1();
      const long d = static_cast<long>(geo.distance(g, h));
      if (norm > 0) raise(lower.max_observed, Rational(d) / norm);
      if (!(Rational(d) <= norm)) ok_lower = false;

      Rational sq = 0;
      for (const auto& [v, val] : phi.entries()) sq += Amplitude{val, true}.square();
      if (sq != norm) ok_tilde = false;
      raise(tilde.max_observed, abs(sq - norm));

      if (norm != pa.xi1(g, h).l1() + pa.eta2(g, h).l1()) ok_split = false;

      PhiTildeStats st = pa.phi_tilde_stats(g, h, k);
      raise(drift.max_observed, st.drift);
      if (!st.drift_ok) ok_drift = false;
    });
  }
  nonneg.verdict = verdict_of(ok_nonneg, nonneg.pairs_tested);
  sym.verdict = verdict_of(ok_sym, sym.pairs_tested);
  equi.verdict = verdict_of(ok_equi, equi.pairs_tested);
  lower.verdict = verdict_of(ok_lower, lower.pairs_tested);
  tilde.verdict = verdict_of(ok_tilde, tilde.pairs_tested);
  split.verdict = verdict_of(ok_split, split.pairs_tested);
  settle(drift, ok_drift, info);
  rep.checks = {nonneg, sym, equi, lower, drift, tilde, split};
  rep.summary["vertices_explored"] = geo.num_vertices();
  return rep;
}

// Edge indices of a shared with b form one cyclic interval of a.
bool cyclic_interval(const std::vector<bool>& mark) {
  const std::size_t n = mark.size();
  std::size_t ups = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (mark[i] && !mark[(i + n - 1) % n]) ++ups;
  return ups <= 1;
}

Report ad_lemma_suite(const Presentation& p, const SuiteOptions& opt) {
  Report rep;
  rep.command = "verify ad-lemma";
  rep.config = config_json(p, opt);
  Geometry geo(p, GeometryOptions{200000, opt.max_vertices, std::nullopt});
  const Rational lambda = p.lambda;

  CheckResult unique = named("arc-unique-geodesic"), bigon = named("half-arc-two-geodesics"), single = named("contour-path-single-arc"),
      pair = named("contour-contour-single-arc"), hull = named("hull-matches-ball");
  pair.bound = lambda;
  bool ok_unique = true, ok_bigon = true, ok_pair = true, ok_hull = true;

  std::vector<VertexId> centres{geo.identity()};
  const auto pairs = sample_pairs(p, opt);
  for (const auto& dp : pairs) {
    if (centres.size() >= 3) break;
    VertexId h = geo.vertex(dp.h);
    if (std::find(centres.begin(), centres.end(), h) == centres.end()) centres.push_back(h);
  }
  const std::vector<ContourId> contours = geo.contours_near(centres);

  for (ContourId c : contours) {
    const ContourInfo info = geo.contour(c);
    const std::size_t n = info.length();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t s = 1; 2 * s <= n; ++s) {
        std::vector<VertexId> fwd, bwd;
        for (std::size_t t = 0; t <= s; ++t) fwd.push_back(info.vertices[(i + t) % n]);
        for (std::size_t t = 0; t <= n - s; ++t) bwd.push_back(info.vertices[(i + n - t) % n]);
        CheckResult& cr = 2 * s < n ? unique : bigon;
        guarded({&cr}, [&] {
          const GeodesicSet& gs = geo.geodesics(fwd.front(), fwd.back());
          if (2 * s < n) {
            if (gs.distance != s || gs.paths.size() != 1 || gs.paths[0].vertices != fwd) ok_unique = false;
          } else {
            std::set<std::vector<VertexId>> got, want{fwd, bwd};
            for (const auto& q : gs.paths) got.insert(q.vertices);
            if (gs.distance != s || got != want) ok_bigon = false;
          }
          raise(cr.max_observed, Rational(static_cast<long>(gs.paths.size())));
        });
      }
    }
  }
  unique.verdict = verdict_of(ok_unique, unique.pairs_tested);
  bigon.verdict = verdict_of(ok_bigon, bigon.pairs_tested);
  unique.note = "geodesics between contour vertices closer than half the contour";
  bigon.note = "geodesics between antipodal contour vertices";

  // intersect() raises on a split arc, so reaching the end is the check
  std::set<std::pair<std::vector<std::int16_t>, std::vector<std::int16_t>>> seen;
  for (const auto& dp : pairs) {
    if (!seen.insert({dp.g, dp.h}).second) continue;
    guarded({&single}, [&] {
      const GeodesicSet& gs = geo.geodesics(geo.vertex(dp.g), geo.vertex(dp.h));
      for (const auto& path : gs.paths) {
        std::vector<VertexId> ends{path.front(), path.back()};
        for (ContourId c : geo.contours_near(ends)) {
          auto arc = geo.intersect(c, path);
          raise(single.max_observed, Rational(arc ? static_cast<long>(arc->length) : 0));
        }
        geo.arcs_on_path(path, Rational(0));
      }
    });
  }
  single.verdict = verdict_of(true, single.pairs_tested);

  for (std::size_t a = 0; a < contours.size(); ++a) {
    const ContourInfo A = geo.contour(contours[a]);
    for (std::size_t b = a + 1; b < contours.size(); ++b) {
      const ContourInfo& B = geo.contour(contours[b]);
      std::vector<bool> ma(A.length()), mb(B.length());
      std::size_t shared = 0;
      for (std::size_t i = 0; i < A.length(); ++i)
        if (B.has_edge(A.edges[i])) {
          ma[i] = true;
          ++shared;
        }
      ++pair.pairs_tested;
      if (shared == 0) continue;
      for (std::size_t i = 0; i < B.length(); ++i) mb[i] = A.has_edge(B.edges[i]);
      if (!cyclic_interval(ma) || !cyclic_interval(mb)) ok_pair = false;
      Rational frac(static_cast<long>(shared), static_cast<long>(std::min(A.length(), B.length())));
      frac.canonicalize();
      raise(pair.max_observed, frac);
      if (!(frac < lambda)) ok_pair = false;
    }
  }
  pair.verdict = verdict_of(ok_pair, pair.pairs_tested);
  pair.note = "shared edges as a fraction of the shorter contour";

  if (opt.samples > 0 && opt.radius > 0) {
    Region reg(p, opt.radius, RegionOptions{opt.max_vertices, opt.unsafe_no_cprime});
    for (const auto& dp : pairs) {
      if (dp.scenario != "ball") continue;
      for (const Word& u : {Word{}, dp.g}) {
        guarded({&hull}, [&] {
          GeodesicSet ball = distance_and_geodesics(reg, geo, u, dp.h);
          const GeodesicSet& gs = geo.geodesics(geo.vertex(u), geo.vertex(dp.h));
          std::set<Word> x, y;
          for (const auto& q : ball.paths) x.insert(q.labels);
          for (const auto& q : gs.paths) y.insert(q.labels);
          if (ball.distance != gs.distance || x != y) ok_hull = false;
        });
      }
    }
  }
  hull.verdict = verdict_of(ok_hull, hull.pairs_tested);
  hull.note = "geodesic sets from the contour hull against breadth-first search in the ball";

  rep.checks = {unique, bigon, single, pair, hull};
  rep.summary["contours"] = contours.size();
  rep.summary["vertices_explored"] = geo.num_vertices();
  return rep;
}

Report embed_suite(const Presentation& p, const SuiteOptions& opt) {
  Report rep;
  rep.command = "verify embed";
  EmbedOptions eo;
  LetterGraph lg = letter_graph(p);
  eo.N = opt.N > 0 ? opt.N : std::max<int>(1, static_cast<int>(lg.max_valency()));
  eo.exponent = opt.exponent;
  eo.cap = opt.cap;
  eo.component = opt.component;
  rep.config = {{"N", eo.N},
                {"cap", eo.cap},
                {"component", eo.component},
                {"exponent", opt.exponent ? json(*opt.exponent) : json(nullptr)},
                {"presentation", format_presentation(p)}};
  EmbeddingResult r = embed(p, eo);
  const Rational lam = r.source.lambda;
  auto lhs = [&](long M) {
    Rational m(M);
    return Rational(((1 + 1 / m) * lam + 2 / m) / (1 - 2 / m));
  };

  CheckResult ex = named("exponent-condition");
  ex.bound = rat(1, 33);
  ex.max_observed = lhs(r.M);
  ex.pairs_tested = 1;
  bool minimal = opt.exponent || r.M <= 3 || !exponent_condition(lam, r.M - 1);
  ex.verdict = verdict_of(r.exponent_ok && minimal);
  ex.params["M"] = r.M;
  ex.note = opt.exponent ? "exponent given" : "least M found by scan";

  CheckResult gp = named("generator-set-pieces");
  std::uint64_t shortest = 0;
  for (const auto& w : r.psi) shortest = shortest == 0 ? 2 * w.size() : std::min(shortest, 2 * w.size());
  Rational gbound(static_cast<long>(shortest), r.M);
  gbound.canonicalize();
  gp.bound = gbound;
  gp.max_observed = Rational(static_cast<long>(r.generator_pieces.max_piece));
  gp.pairs_tested = r.psi.size();
  gp.verdict = verdict_of(r.generator_pieces.verdict, gp.pairs_tested);
  gp.params["lambda"] = rational_json(Rational(1, r.M));

  CheckResult rp = named("relator-pieces");
  Rational rbound(static_cast<long>(r.pieces.min_length), 33L);
  rbound.canonicalize();
  rp.bound = rbound;
  rp.max_observed = Rational(static_cast<long>(r.pieces.max_piece));
  rp.pairs_tested = r.pieces.pairs_checked;
  rp.verdict = r.relators.empty() ? Verdict::Skipped : verdict_of(r.pieces.verdict);
  rp.params["lambda"] = rational_json(rat(1, 33));
  rp.note = "all rewritten relators in compressed form; the cap limits only the text output";

  CheckResult lc = named("relator-lengths");
  bool ok = true;
  json lens = json::array();
  for (std::size_t i = 0; i < r.lengths.size(); ++i) {
    ok = ok && r.lengths[i].ok;
    lens.push_back({{"relator", i}, {"m", r.lengths[i].m}, {"ok", r.lengths[i].ok}});
  }
  lc.pairs_tested = r.lengths.size();
  lc.verdict = verdict_of(ok, lc.pairs_tested);

  rep.checks = {ex, gp, rp, lc};
  json psi_lengths = json::array();
  for (const auto& w : r.psi) psi_lengths.push_back(w.size());
  json rel_lengths = json::array();
  for (const auto& w : r.relators) rel_lengths.push_back(w.size());
  rep.summary = {{"M", r.M},
                 {"N", r.N},
                 {"components", lg.components.size()},
                 {"psi_lengths", psi_lengths},
                 {"relator_lengths", rel_lengths},
                 {"length_classes", lens},
                 {"emitted", r.emitted},
                 {"withheld", r.withheld},
                 {"piece_bound_exact_above", r.pieces.bound}};
  return rep;
}

// Normal forms with at most `syllables` syllables over the element lists.
void each_normal_form(const std::vector<std::vector<Word>>& elems, int syllables,
                      const std::function<void(const NormalForm&)>& fn) {
  NormalForm cur;
  std::function<void(int)> rec = [&](int last) {
    fn(cur);
    if (static_cast<int>(cur.size()) == syllables) return;
    for (std::size_t n = 0; n < elems.size(); ++n) {
      if (static_cast<int>(n + 1) == last) continue;
      for (const auto& x : elems[n]) {
        cur.push_back({static_cast<int>(n + 1), x});
        rec(static_cast<int>(n + 1));
        cur.pop_back();
      }
    }
  };
  rec(0);
}

}  // namespace

Report run_freeproduct(const std::vector<FactorArray>& factors, const std::vector<std::vector<Word>>& elems,
                       int syllables, int properness_N) {
  Report rep;
  rep.command = "verify freeproduct";
  json names = json::array();
  for (const auto& f : factors) names.push_back(f.name);
  rep.config = {{"factors", names}, {"syllables", syllables}, {"properness_N", properness_N}};

  CheckResult zero = named("identity-maps-to-zero"), norm = named("squared-norm-identity"), patch = named("patched-norm"),
      axiom = named("symmetry-axiom"), proper = named("properness-count");
  zero.pairs_tested = 1;
  zero.verdict = verdict_of(combine_free_product(factors, {}).entries.empty());

  bool ok_norm = true;
  each_normal_form(elems, syllables, [&](const NormalForm& g) {
    if (g.empty()) return;
    Rational direct = 0;
    for (const auto& s : g) {
      FactorVector v = patched(factors[s.factor - 1], s.factor, s.element);
      for (const auto& [k, a] : v) direct += a.root ? a.value : Rational(a.value * a.value);
    }
    if (combine_free_product(factors, g).squared_norm() != direct) ok_norm = false;
    ++norm.pairs_tested;
  });
  norm.verdict = verdict_of(ok_norm, norm.pairs_tested);
  norm.note = "normal forms tested";

  bool ok_patch = true, ok_axiom = true;
  for (std::size_t n = 0; n < factors.size(); ++n) {
    const int level = static_cast<int>(n + 1);
    for (const auto& x : elems[n]) {
      Rational s = squared_norm(patched(factors[n], level, x));
      if (s < Rational(level * level)) ok_patch = false;
      ++patch.pairs_tested;
      if (!check_symmetry_axiom(factors[n], level, x)) ok_axiom = false;
      ++axiom.pairs_tested;
    }
  }
  patch.verdict = verdict_of(ok_patch, patch.pairs_tested);
  axiom.verdict = verdict_of(ok_axiom, axiom.pairs_tested);

  PropernessCount pc = properness_count(factors, properness_N, elems);
  proper.pairs_tested = 1;
  proper.max_observed = Rational(static_cast<long>(pc.count));
  proper.bound = Rational(pc.bound);
  proper.verdict = verdict_of(mpz_class(pc.count) <= pc.bound);

  rep.checks = {zero, norm, patch, axiom, proper};
  return rep;
}

Presentation prepare(const Presentation& p, SuiteOptions& opt) {
  Presentation q = p.symmetrized ? p : symmetrize(p);
  if (!opt.relaxed) {
    opt.params = ProperArrayParams{};
    q.lambda = rat(1, 33);
  } else {
    opt.params.lambda = q.lambda;
    opt.params.relaxed = true;
  }
  if (!opt.unsafe_no_cprime && !piece_table(q).lambda_verdict)
    throw NotSmallCancellation("presentation fails C'(" + to_string(q.lambda) + ")");
  return q;
}

std::vector<fixtures::DriftPair> sample_pairs(const Presentation& p, const SuiteOptions& opt) {
  std::vector<fixtures::DriftPair> out;
  if (opt.scenarios) out = fixtures::drift_pairs(p);
  if (opt.samples == 0 || opt.radius < 1 || p.rank() == 0) return out;
  Region reg(p, opt.radius, RegionOptions{opt.max_vertices, opt.unsafe_no_cprime});
  std::vector<std::vector<std::size_t>> by_depth(opt.radius + 1);
  for (std::size_t v = 0; v < reg.num_vertices(); ++v) by_depth[reg.depth(v)].push_back(v);
  std::vector<int> depths;
  for (int d = 1; d <= opt.radius; ++d)
    if (!by_depth[d].empty()) depths.push_back(d);
  if (depths.empty()) return out;
  std::mt19937_64 rng(opt.seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const auto& layer = by_depth[depths[s % depths.size()]];
    fixtures::DriftPair dp;
    dp.scenario = "ball";
    dp.g = reg.word(pick(reg.num_vertices()));
    dp.h = reg.word(layer[pick(layer.size())]);
    dp.x = letter_from_index(static_cast<int>(pick(2 * p.rank())));
    out.push_back(std::move(dp));
  }
  return out;
}

Report run_suite(const std::string& suite, const Presentation& input, SuiteOptions opt) {
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw InvalidParams("unknown suite '" + suite + "'");
  if (suite == "embed") return embed_suite(input, opt);
  Presentation p = prepare(input, opt);
  if (suite == "xi-drift") return drift_suite(p, opt, false);
  if (suite == "eta-drift") return drift_suite(p, opt, true);
  if (suite == "phi") return phi_suite(p, opt);
  if (suite == "ad-lemma") return ad_lemma_suite(p, opt);

  Geometry geo(p, GeometryOptions{200000, opt.max_vertices, std::nullopt});
  ProperArray pa(geo, opt.params);
  std::vector<FactorArray> factors{word_length_factor("t"), phi_tilde_factor(pa, "G")};
  std::vector<std::vector<Word>> elems(2);
  for (int k = 1; k <= opt.syllable_norm; ++k) {
    elems[0].push_back(Word(k, make_letter(0, 1)));
    elems[0].push_back(Word(k, make_letter(0, -1)));
  }
  const int r = std::min(opt.radius, 2);
  Region reg(p, r, RegionOptions{opt.max_vertices, opt.unsafe_no_cprime});
  for (std::size_t v = 1; v < reg.num_vertices(); ++v) elems[1].push_back(geo.word(geo.vertex(reg.word(v))));
  Report rep = run_freeproduct(factors, elems, 3, opt.properness_N);
  rep.config["presentation"] = format_presentation(p);
  rep.config["syllable_norm"] = opt.syllable_norm;
  rep.config["radius"] = r;
  return rep;
}

Report run_check(const Presentation& input) {
  Report rep;
  rep.command = "check";
  Presentation p = input.symmetrized ? input : symmetrize(input);
  rep.config = {{"presentation", format_presentation(p)}, {"lambda", rational_json(p.lambda)}};
  PieceReport pr = piece_table(p);

  CheckResult cp = named("cprime");
  cp.params["lambda"] = rational_json(p.lambda);
  cp.pairs_tested = pr.symmetrized_size;
  cp.max_observed = Rational(static_cast<long>(pr.max_piece_length));
  if (!p.relators.empty()) {
    Rational b = p.lambda * static_cast<long>(p.min_relator_length());
    cp.bound = b;
  }
  cp.verdict = p.relators.empty() ? Verdict::Pass : verdict_of(pr.lambda_verdict);
  cp.note = "longest piece; each piece must be shorter than lambda times its relator";

  CheckResult st = named("star");
  st.pairs_tested = p.relators.size();
  st.verdict = verdict_of(star_condition(p), 1);
  st.note = "every relator longer than 1/lambda and every generator used";
  st.verdict = st.verdict == Verdict::Fail ? Verdict::Skipped : st.verdict;

  rep.checks = {cp, st};
  json w = nullptr;
  if (pr.witness)
    w = {{"u", format_word(pr.witness->u, p.alphabet)},
         {"v", format_word(pr.witness->v, p.alphabet)},
         {"piece", format_word(pr.witness->piece, p.alphabet)}};
  rep.summary = {{"symmetrized_size", pr.symmetrized_size},
                 {"max_piece", pr.max_piece_length},
                 {"star", star_condition(p)},
                 {"witness", w}};
  return rep;
}

}  // namespace sca
