#include "scarrays/embedding.hpp"
#include "scarrays/errors.hpp"
#include "scarrays/region.hpp"
#include "scarrays/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sca;

namespace {

Presentation parse(const std::string& text) { return symmetrize(parse_presentation(text)); }

Word word_of(const Presentation& p, const std::string& w) { return parse_word(w, p.alphabet); }

}  // namespace

PYBIND11_MODULE(_scarrays, m) {
  m.doc() = "Small-cancellation presentations, contour arrays and their verification suites";

  // later translators are tried first, so the subclass goes last
  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  py::class_<Presentation>(m, "Presentation")
      .def(py::init(&parse), py::arg("text"))
      .def_property_readonly("alphabet", [](const Presentation& p) { return p.alphabet; })
      .def_property_readonly("relators",
                             [](const Presentation& p) {
                               std::vector<std::string> out;
                               for (const auto& r : p.relators) out.push_back(format_word(r, p.alphabet));
                               return out;
                             })
      .def_property_readonly("lambda_", [](const Presentation& p) { return to_string(p.lambda); })
      .def("__str__", &format_presentation)
      .def("reduce",
           [](const Presentation& p, const std::string& w) {
             return format_word(dehn_reduce(word_of(p, w), p), p.alphabet);
           })
      .def("is_identity", [](const Presentation& p, const std::string& w) { return is_identity(word_of(p, w), p); })
      .def("max_piece", [](const Presentation& p) { return piece_table(p).max_piece_length; })
      .def("satisfies_cprime", [](const Presentation& p) { return piece_table(p).lambda_verdict; });

  m.def("load", [](const std::string& path) { return symmetrize(load_presentation(path)); }, py::arg("path"));
  m.def("check", [](const Presentation& p) { return run_check(p).dump(); }, py::arg("presentation"),
        "JSON report of the C'(lambda) check");

  m.def(
      "ball_size",
      [](const Presentation& p, int radius, bool unsafe) {
        Region reg(p, radius, RegionOptions{vertex_cap_from_env(2000000), unsafe});
        return py::make_tuple(reg.num_vertices(), reg.num_edges());
      },
      py::arg("presentation"), py::arg("radius"), py::arg("unsafe_no_cprime") = false);

  m.def(
      "verify",
      [](const Presentation& p, const std::string& suite, std::uint64_t seed, std::size_t samples, int radius,
         bool relaxed, int N) {
        SuiteOptions o;
        o.seed = seed;
        o.samples = samples;
        o.radius = radius;
        o.relaxed = relaxed;
        o.N = N;
        py::gil_scoped_release release;
        return run_suite(suite, p, o).dump();
      },
      py::arg("presentation"), py::arg("suite"), py::arg("seed") = 1, py::arg("samples") = 16,
      py::arg("radius") = 2, py::arg("relaxed") = false, py::arg("N") = 0, "JSON report of one suite");

  m.def(
      "minimal_exponent", [](const std::string& lambda) { return minimal_exponent(parse_rational(lambda)); },
      py::arg("lambda_"));

  m.def(
      "embed",
      [](const Presentation& p, int N, std::optional<long> exponent, std::uint64_t cap) {
        EmbedOptions o;
        o.N = N;
        o.exponent = exponent;
        o.cap = cap;
        EmbeddingResult r = embed(p, o);
        py::dict d;
        d["M"] = r.M;
        d["passed"] = r.passed();
        d["max_piece"] = r.pieces.max_piece;
        std::vector<std::uint64_t> lens;
        for (const auto& w : r.relators) lens.push_back(w.size());
        d["relator_lengths"] = lens;
        d["text"] = r.text;
        return d;
      },
      py::arg("presentation"), py::arg("N"), py::arg("exponent") = std::nullopt, py::arg("cap") = 1000000);

  auto fx = m.def_submodule("fixtures", "Presentations used throughout the tests");
  fx.def("toy", &fixtures::toy);
  fx.def("q34", &fixtures::q34);
  fx.def("p8", &fixtures::p8);
  fx.def("commutator", &fixtures::commutator);
  fx.def("free_group", &fixtures::free_group, py::arg("rank"));
  fx.def("chain_source", &fixtures::chain_source, py::arg("n"));
}
