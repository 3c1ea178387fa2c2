#include "scarrays/errors.hpp"
#include "scarrays/embedding.hpp"
#include "scarrays/region.hpp"
#include "scarrays/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace sca;
using nlohmann::json;

namespace {

struct Globals {
  std::string presentation;
  std::string mode = "paper";
  std::uint64_t seed = 1;
  bool unsafe = false;
  std::string report;
  std::string mu, nu10, nu11, nu20, nu21;
};

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidParams("cannot write " + path);
  f << text;
}

int finish(const Report& rep, const std::string& path) {
  write_out(path, rep.dump());
  if (!path.empty() && path != "-")
    std::cerr << rep.command << ": " << to_string(rep.overall()) << "\n";
  return rep.overall() == Verdict::Fail ? 1 : 0;
}

SuiteOptions suite_options(const Globals& g) {
  SuiteOptions o;
  o.relaxed = g.mode == "relaxed";
  o.seed = g.seed;
  o.unsafe_no_cprime = g.unsafe;
  o.max_vertices = vertex_cap_from_env(o.max_vertices);
  const bool custom = !(g.mu.empty() && g.nu10.empty() && g.nu11.empty() && g.nu20.empty() && g.nu21.empty());
  if (custom && !o.relaxed) throw InvalidParams("paper mode fixes mu and the nu values; use --mode relaxed");
  if (!g.mu.empty()) o.params.mu = parse_rational(g.mu);
  if (!g.nu10.empty()) o.params.nu10 = parse_rational(g.nu10);
  if (!g.nu11.empty()) o.params.nu11 = parse_rational(g.nu11);
  if (!g.nu20.empty()) o.params.nu20 = parse_rational(g.nu20);
  if (!g.nu21.empty()) o.params.nu21 = parse_rational(g.nu21);
  return o;
}

json vector_json(const SparseVector& v, Geometry& geo, Domain d) {
  json out = json::array();
  for (const auto& [k, val] : v.entries()) {
    json e;
    const Alphabet& a = geo.presentation().alphabet;
    if (d == Domain::Contours) {
      const auto& c = geo.contour(static_cast<ContourId>(k));
      e["start"] = format_word(geo.word(c.start), a);
      e["reading"] = format_word(c.reading, a);
    } else {
      e["tail"] = format_word(geo.word(edge_tail(k)), a);
      e["label"] = a[edge_gen(k)];
    }
    e["value"] = rational_json(val);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small-cancellation arrays: presentations, balls, contour arrays and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--mode", g.mode, "paper or relaxed")->check(CLI::IsMember({"paper", "relaxed"}));
  app.add_option("--seed", g.seed, "seed for sampled pairs");
  app.add_flag("--unsafe-no-cprime", g.unsafe, "skip the small-cancellation gate");
  app.add_option("--mu", g.mu, "relaxed mode: mu");
  app.add_option("--nu10", g.nu10, "relaxed mode: first step, lower end");
  app.add_option("--nu11", g.nu11, "relaxed mode: first step, upper end");
  app.add_option("--nu20", g.nu20, "relaxed mode: second step, lower end");
  app.add_option("--nu21", g.nu21, "relaxed mode: second step, upper end");

  auto add_common = [&](CLI::App* c) {
    c->add_option("-p,--presentation", g.presentation, "presentation file")->required();
    c->add_option("--report", g.report, "JSON report path (stdout if omitted)");
  };

  auto* check = app.add_subcommand("check", "piece table and C'(lambda) verdict");
  add_common(check);
  std::vector<std::string> words;
  check->add_option("--word", words, "words to reduce with Dehn's algorithm");

  auto* ball = app.add_subcommand("ball", "ball of radius R in the Cayley graph");
  add_common(ball);
  int radius = 2;
  bool stats = false;
  std::string dot;
  ball->add_option("-r,--radius", radius, "radius")->check(CLI::NonNegativeNumber);
  ball->add_flag("--stats", stats, "vertex and edge counts");
  ball->add_option("--dump-dot", dot, "write the ball as Graphviz");

  auto* arrays = app.add_subcommand("arrays", "xi and eta for one pair of vertices");
  add_common(arrays);
  std::vector<std::string> pair;
  std::string nu0 = "6/33", nu1 = "7.1/33";
  arrays->add_option("--pair", pair, "g,h as words")->expected(1, 2)->delimiter(',')->required();
  arrays->add_option("--nu0", nu0, "step lower end");
  arrays->add_option("--nu1", nu1, "step upper end");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  std::string suite;
  SuiteOptions vo;
  verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(kSuites));
  verify->add_option("--samples", vo.samples, "random pairs drawn from the ball");
  verify->add_option("--radius", vo.radius, "ball radius for sampling");
  verify->add_flag("!--no-scenarios", vo.scenarios, "skip the built-in contour scenarios");
  verify->add_option("--N", vo.N, "embed: valency bound");
  verify->add_option("--exponent", vo.exponent, "embed: exponent M instead of the least one");
  verify->add_option("--cap", vo.cap, "embed: longest relator written as text");
  verify->add_option("--component", vo.component, "embed: letter-graph component");
  verify->add_option("--syllable-norm", vo.syllable_norm, "freeproduct: largest power in the cyclic factor");
  verify->add_option("--properness-N", vo.properness_N, "freeproduct: norm level for the count");

  auto* emb = app.add_subcommand("embed", "embed into a finitely generated C'(1/33) group");
  add_common(emb);
  EmbedOptions eo;
  std::string out;
  emb->add_option("--N", eo.N, "valency bound")->required();
  emb->add_option("--cap", eo.cap, "longest relator written as text");
  emb->add_option("--component", eo.component, "letter-graph component");
  emb->add_option("--exponent", eo.exponent, "exponent M instead of the least one");
  emb->add_option("-o,--output", out, "presentation output (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Presentation p = load_presentation(g.presentation);
    if (*check) {
      Report rep = run_check(p);
      Presentation q = symmetrize(p);
      json out = json::array();
      for (const auto& w : words) {
        Word x = parse_word(w, q.alphabet);
        out.push_back({{"word", w}, {"reduced", format_word(dehn_reduce(x, q), q.alphabet)},
                       {"identity", is_identity(x, q)}});
      }
      if (!words.empty()) rep.summary["words"] = out;
      return finish(rep, g.report);
    }

    if (*ball) {
      SuiteOptions o = suite_options(g);
      Region reg(symmetrize(p), radius, RegionOptions{o.max_vertices, g.unsafe});
      if (!dot.empty()) write_out(dot, reg.to_dot());
      Report rep;
      rep.command = "ball";
      rep.config = {{"presentation", format_presentation(reg.presentation())}, {"radius", radius}};
      Geometry geo(reg.presentation(), GeometryOptions{200000, o.max_vertices, std::nullopt});
      std::vector<VertexId> near;
      for (std::size_t v = 0; v < reg.num_vertices(); ++v) near.push_back(geo.vertex(reg.word(v)));
      rep.summary = {{"vertices", reg.num_vertices()},
                     {"edges", reg.num_edges()},
                     {"contours", geo.contours_near(near).size()},
                     {"fold_rounds", reg.fold_rounds()}};
      if (!stats) {
        json words = json::array();
        for (std::size_t v = 0; v < reg.num_vertices(); ++v)
          words.push_back(format_word(reg.word(v), reg.presentation().alphabet));
        rep.summary["words"] = words;
      }
      return finish(rep, g.report);
    }

    if (*arrays) {
      SuiteOptions o = suite_options(g);
      Presentation q = prepare(p, o);
      ArrayParams ap = o.params.first();
      ap.nu0 = parse_rational(nu0);
      ap.nu1 = parse_rational(nu1);
      if ((ap.nu0 != o.params.nu10 || ap.nu1 != o.params.nu11) && !o.relaxed &&
          (ap.nu0 != o.params.nu20 || ap.nu1 != o.params.nu21))
        throw InvalidParams("paper mode uses (6/33, 7.1/33) or (11.1/33, 12.2/33)");
      Geometry geo(q, GeometryOptions{200000, o.max_vertices, std::nullopt});
      ArrayEngine eng(geo, ap);
      StepFunction f(ap.nu0, ap.nu1);
      if (pair.size() == 1) pair.push_back("");
      VertexId a = geo.vertex(parse_word(pair[0], q.alphabet));
      VertexId b = geo.vertex(parse_word(pair[1], q.alphabet));
      SparseVector xi = eng.xi(a, b, f);
      SparseVector eta = eng.eta(a, b, f);
      Report rep;
      rep.command = "arrays";
      rep.config = {{"presentation", format_presentation(q)},
                    {"g", pair[0]},
                    {"h", pair[1]},
                    {"nu0", rational_json(ap.nu0)},
                    {"nu1", rational_json(ap.nu1)},
                    {"mode", g.mode}};
      rep.summary = {{"distance", geo.distance(a, b)},
                     {"geodesics", geo.geodesics(a, b).paths.size()},
                     {"xi", vector_json(xi, geo, Domain::Contours)},
                     {"xi_l1", rational_json(xi.l1())},
                     {"eta", vector_json(eta, geo, Domain::Edges)},
                     {"eta_l1", rational_json(eta.l1())}};
      return finish(rep, g.report);
    }

    if (*verify) {
      SuiteOptions o = suite_options(g);
      o.samples = vo.samples;
      o.radius = vo.radius;
      o.scenarios = vo.scenarios;
      o.N = vo.N;
      o.exponent = vo.exponent;
      o.cap = vo.cap;
      o.component = vo.component;
      o.syllable_norm = vo.syllable_norm;
      o.properness_N = vo.properness_N;
      return finish(run_suite(suite, p, o), g.report);
    }

    if (*emb) {
      EmbeddingResult r = embed(p, eo);
      write_out(out, r.text);
      std::cerr << "M = " << r.M << ", " << r.emitted << " relators written, " << r.withheld
                << " withheld, C'(1/33) " << (r.pieces.verdict ? "pass" : "fail") << "\n";
      return r.passed() ? 0 : 1;
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
