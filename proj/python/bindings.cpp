#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "linkstar/cli.hpp"
#include "linkstar/document.hpp"
#include "linkstar/error.hpp"
#include "linkstar/render.hpp"
#include "linkstar/shutter.hpp"
#include "linkstar/verify.hpp"

namespace py = pybind11;
using namespace linkstar;

namespace {

// Rationals cross the boundary as fractions.Fraction; ints and "p/q" strings
// are accepted on the way in.
Rat to_rat(const py::handle& h) { return Rat::parse(py::str(h).cast<std::string>()); }

py::object from_rat(const Rat& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.str());
}

Point to_point(const py::handle& h) {
  const auto seq = py::reinterpret_borrow<py::sequence>(h);
  if (seq.size() != 2) throw py::value_error("a point is a pair (x, y)");
  return {to_rat(seq[0]), to_rat(seq[1])};
}

py::tuple from_point(const Point& p) { return py::make_tuple(from_rat(p.x), from_rat(p.y)); }

std::vector<Point> to_points(const py::iterable& it) {
  std::vector<Point> out;
  for (const auto& h : it) out.push_back(to_point(h));
  return out;
}

py::list from_points(const std::vector<Point>& pts) {
  py::list out;
  for (const Point& p : pts) out.append(from_point(p));
  return out;
}

py::dict witness_dict(const WitnessReport& r) {
  py::dict d;
  d["witness"] = from_point(r.witness);
  d["method"] = r.method == WitnessMethod::ProofFormula ? "proof-formula" : "exhaustive";
  d["assigned"] = r.assigned;
  d["untouched"] = r.untouched;
  py::list paths;
  for (const PathCertificate& c : r.paths) paths.append(from_points(c.vertices));
  d["paths"] = paths;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact n-link visibility constructions, verification and the finite shutter process";

  static py::exception<Error> error(m, "LinkstarError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("orientation", [](py::object p, py::object q, py::object r) {
    return static_cast<int>(orientation(to_point(p), to_point(q), to_point(r)));
  }, "Sign of the turn p -> q -> r: 1 counter-clockwise, -1 clockwise, 0 collinear.");

  m.def("line_through", [](py::object p, py::object q) {
    const Line l = line_through(to_point(p), to_point(q));
    return py::make_tuple(from_rat(l.a()), from_rat(l.b()), from_rat(l.c()));
  }, "Canonical (a, b, c) with a*x + b*y = c.");

  m.def("proof_witness_index", &proof_witness_index, py::arg("k"), py::arg("untouched"));

  py::class_<Construction>(m, "Construction")
      .def_static("generate", [](int k, int n, std::uint64_t seed) { return build_snk(make_polygon(k, seed), n); },
                  py::arg("k"), py::arg("n") = 2, py::arg("seed") = 1)
      .def_static("from_document", [](const std::string& text) { return doc::construction_from_json(doc::parse(text)); })
      .def("to_document", [](const Construction& c) { return doc::dump(doc::construction_to_json(c)); })
      .def("render_svg", &render_svg)
      .def_readonly("n", &Construction::n)
      .def_readonly("k", &Construction::k)
      .def_property_readonly("vertices", [](const Construction& c) { return from_points(c.polygon.vertices); })
      .def_property_readonly("midpoints", [](const Construction& c) { return from_points(c.c); })
      .def_property_readonly("endpoints", [](const Construction& c) { return from_points(c.e); })
      .def_property_readonly("segment_count", [](const Construction& c) { return c.complex.size(); })
      .def("a", [](const Construction& c, int i) { return from_point(c.polygon.a(i)); })
      .def("b", [](const Construction& c, int i) { return from_point(c.polygon.b(i)); })
      .def("contains_point", [](const Construction& c, py::object p) { return c.complex.contains_point(to_point(p)); })
      .def("contains_segment", [](const Construction& c, py::object p, py::object q) {
        return c.complex.contains_segment(to_point(p), to_point(q));
      })
      .def("link_distance", [](const Construction& c, py::object p, py::object q) {
        return link_distance(c.complex, to_point(p), to_point(q));
      })
      .def("common_viewer", [](const Construction& c, py::iterable targets, std::size_t n) -> py::object {
        const auto z = common_viewer(c.complex, to_points(targets), n);
        return z ? py::object(from_point(*z)) : py::object(py::none());
      })
      .def("sample", [](const Construction& c, std::size_t count, std::uint64_t seed) {
        return from_points(sample_on_complex(c.complex, count, seed));
      }, py::arg("count"), py::arg("seed") = 0)
      .def("verify_star1", [](const Construction& c, py::iterable tuple) { return witness_dict(verify_star1(c, to_points(tuple))); })
      .def("endpoints_share_viewer", [](const Construction& c, py::iterable targets) {
        return !emptiness_trace(c, to_points(targets)).empty();
      }, "True when the n-link regions of the targets intersect.")
      .def("verify_star2", [](const Construction& c) { return verify_star2(c).empty(); },
           "Raises LinkstarError when the k+1 endpoints share a viewer.");

  m.def("shutter_run", [](py::iterable K, py::iterable tuples) {
    std::vector<KTuple> ts;
    for (const auto& t : tuples) ts.emplace_back(to_points(py::reinterpret_borrow<py::iterable>(t)));
    const ShutterRun run = shutter_run(to_points(K), ts);
    py::dict d;
    d["A"] = from_points(run.state.A.points());
    d["B"] = from_points(run.state.B.points());
    d["B0_size"] = run.state.b0_size;
    d["steps"] = run.state.step;
    py::list witnesses;
    for (const HistoryEntry& h : run.state.history) witnesses.append(from_point(h.witness));
    d["witnesses"] = witnesses;
    d["common_viewer"] = exists_common_viewer_of_K(run.state).has_value();
    return d;
  }, py::arg("K"), py::arg("tuples"), "Shutter basis on tuples[0], then one step per further tuple.");

  m.def("seeded_shutter_input", [](int k, std::size_t count, std::uint64_t seed) {
    py::list tuples;
    for (const KTuple& t : seeded_tuples(k, count, seed)) tuples.append(from_points(t.points()));
    return py::make_tuple(from_points(seeded_K(k, seed)), tuples);
  }, py::arg("k"), py::arg("count"), py::arg("seed"));

  m.def("sees_through_T", [](py::object x, py::object y, py::iterable A) {
    return sees_through_T(to_point(x), to_point(y), AxisSet(to_points(A)));
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs one command-line invocation in-process; returns (exit_code, stdout, stderr).");
}
