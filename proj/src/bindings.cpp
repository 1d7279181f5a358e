#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tourneykit/connectivity.hpp"
#include "tourneykit/dominating.hpp"
#include "tourneykit/extremal.hpp"
#include "tourneykit/factors.hpp"
#include "tourneykit/generators.hpp"
#include "tourneykit/hamiltonicity.hpp"
#include "tourneykit/pipeline.hpp"
#include "tourneykit/serialize.hpp"

namespace py = pybind11;
using namespace tourneykit;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

std::string status_name(Status s) { return to_string(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "tournament partition toolkit";

  py::register_exception<Error>(m, "TourneyError");

  py::class_<Tournament>(m, "Tournament")
      .def_property_readonly("n", &Tournament::n)
      .def("arcs", [](const Tournament& t) { return t.arcs(); })
      .def("has_arc", &Tournament::has_arc)
      .def("out_degree", &Tournament::out_degree)
      .def("in_degree", &Tournament::in_degree)
      .def("to_json",
           [](const Tournament& t) { return instance_to_json(t).dump(); })
      .def("digest", [](const Tournament& t) { return digest_hex(t); })
      .def("compact", [](const Tournament& t) { return to_compact(t); })
      .def("__repr__", [](const Tournament& t) {
        return "<Tournament n=" + std::to_string(t.n()) + ">";
      });

  m.def("make_tournament", &make_tournament, py::arg("n"), py::arg("arcs"));
  m.def("from_json", [](const std::string& text) {
    return Tournament::validated(parse_instance(text).graph);
  });
  m.def("random_tournament", &random_tournament, py::arg("n"), py::arg("seed"));
  m.def("paley_tournament", &paley_tournament, py::arg("q"));
  m.def("transitive_tournament", &transitive_tournament, py::arg("n"));
  m.def("extremal_tournament", [](int s, int mm, int sp) {
    return extremal_tournament(ExtremalSpec{s, mm, sp});
  });

  m.def("kappa",
        [](const Tournament& t) { return connectivity_report(t).kappa; });
  m.def("is_strongly_k_connected", [](const Tournament& t, int k) {
    return is_strongly_k_connected(t, k).ok;
  });
  m.def("diameter", [](const Tournament& t) -> py::object {
    auto d = diameter(t);
    return d ? py::cast(*d) : py::none();
  });

  m.def("camion_cycle",
        [](const Tournament& t) { return camion_cycle(t).vertices; });
  m.def("moon_cycle", [](const Tournament& t, int v, int len) {
    return moon_cycle(t, v, len).vertices;
  });

  m.def("almost_dominating",
        [](const Tournament& t, int x, int c, const std::string& kind) {
          DomKind dk = kind == "B" ? DomKind::B : DomKind::A;
          auto s = almost_dominating(t, x, c, dk);
          py::dict out;
          out["kind"] = kind;
          out["path"] = s.path;
          out["uncovered"] = s.uncovered;
          out["ell"] = s.ell;
          int deg = dk == DomKind::A ? t.out_degree(x) : t.in_degree(x);
          out["bound_holds"] = s.bound_holds(deg);
          return out;
        });

  m.def("sparse_linkage", [](const Tournament& t, int k) {
    auto r = sparse_linkage(t, k);
    py::dict out;
    out["status"] = status_name(r.status);
    out["A"] = r.pair.a;
    out["B"] = r.pair.b;
    out["budget"] = r.pair.budget;
    return out;
  });

  m.def(
      "find_factor",
      [](const Tournament& t, const std::vector<int>& lengths,
         const std::map<int, int>& pins) {
        FactorSpec spec;
        spec.lengths = lengths;
        spec.prescribed = pins;
        auto r = find_factor(t, spec);
        py::dict out;
        out["status"] = status_name(r.status);
        py::list cycles;
        for (const auto& c : r.factor.cycles) cycles.append(c.vertices);
        out["cycles"] = cycles;
        return out;
      },
      py::arg("t"), py::arg("lengths"), py::arg("pins") = std::map<int, int>{});

  m.def("max_transitive_subtournament",
        [](const Tournament& t, int size) -> py::object {
          auto w = max_transitive_subtournament(t, size);
          return w ? py::cast(*w) : py::none();
        });

  m.def(
      "partition_k_connected",
      [](const Tournament& t, int parts, int k, const std::vector<int>& sizes,
         const std::vector<VertexList>& pins) {
        auto r = partition_k_connected(t, parts, k, sizes, pins);
        py::dict out;
        out["status"] = status_name(r.status);
        py::list plist;
        for (const auto& pc : r.certificate.parts) plist.append(pc.part);
        out["parts"] = plist;
        return out;
      },
      py::arg("t"), py::arg("parts"), py::arg("k"), py::arg("sizes"),
      py::arg("pins") = std::vector<VertexList>{});

  m.def("linked_paths_with_lengths",
        [](const Tournament& t, const std::vector<Arc>& pairs,
           const std::vector<int>& lengths) {
          PathLinkSpec spec{pairs, lengths};
          auto r = linked_paths_with_lengths(t, spec);
          py::dict out;
          out["status"] = status_name(r.status);
          out["paths"] = r.paths.paths;
          return out;
        });

  m.def("certify_extremal", [](const Tournament& t, int s, int mm, int sp,
                               int k) {
    auto cert = certify_extremal(t, ExtremalSpec{s, mm, sp}, k);
    py::dict out;
    out["kappa_exact"] = cert.kappa_exact;
    out["kappa_ok"] = cert.kappa_ok;
    out["diameter_exact"] = cert.diameter_exact;
    out["diameter_ok"] = cert.diameter_ok;
    out["layer_separator_ok"] = cert.layer_separator_ok;
    out["subtournament_verified"] = cert.subtournament_verified;
    if (cert.min_k_subtournament)
      out["min_k_subtournament"] = *cert.min_k_subtournament;
    return out;
  });

  m.def("hall_matching",
        [](int na, int nb, const std::vector<Arc>& edges) {
          auto r = hall_matching(BipartiteGraph::from_edges(na, nb, edges));
          py::dict out;
          out["perfect"] = r.perfect;
          out["match_of_a"] = r.match_of_a;
          out["deficiency_witness"] = r.deficiency_witness;
          return out;
        });

  m.def("run_report", [](const std::string& json_text) {
    return json_to_py(nlohmann::json::parse(json_text));
  });
}
