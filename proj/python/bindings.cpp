#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "msv/complexity.hpp"
#include "msv/constructions.hpp"
#include "msv/diagrams.hpp"
#include "msv/errors.hpp"
#include "msv/graph_cone.hpp"
#include "msv/ideal.hpp"
#include "msv/render.hpp"
#include "msv/serialize.hpp"
#include "msv/survey.hpp"

namespace py = pybind11;
using namespace msv;

namespace {

std::vector<std::pair<int, int>> cells_as_pairs(const CellSet& cells) {
  std::vector<std::pair<int, int>> out;
  for (Cell c : cells.cells()) out.emplace_back(c.row, c.col);
  return out;
}

CellSet cells_from_pairs(const std::vector<std::pair<int, int>>& pairs,
                         int n) {
  CellSet out(n);
  for (auto [r, c] : pairs) out.insert(r, c);
  return out;
}

py::dict report_to_dict(const ComplexityReport& r) {
  py::dict d;
  d["permutation"] = r.w.to_string();
  d["n"] = r.n;
  d["card_opposite_rothe"] = r.card_opposite_rothe;
  d["card_dominant"] = r.card_dominant;
  d["card_southwest"] = r.card_southwest;
  d["card_l"] = r.card_l;
  d["card_l_prime"] = r.card_l_prime;
  d["vertex_count"] = r.vertex_count;
  d["component_count"] = r.component_count;
  d["cone_dim"] = r.cone_dim;
  d["dim_msv"] = r.dim_msv;
  d["dim_y"] = r.dim_y;
  d["length"] = r.length;
  d["complexity"] = r.complexity;
  return d;
}

Permutation make_permutation(const py::object& value) {
  if (py::isinstance<Permutation>(value)) {
    return value.cast<Permutation>();
  }
  if (py::isinstance<py::str>(value)) {
    return Permutation::parse(value.cast<std::string>());
  }
  return Permutation::from_one_line(value.cast<std::vector<int>>());
}

RenderSpec make_render_spec(const std::string& target,
                            const std::vector<std::string>& layers,
                            bool labels) {
  RenderSpec spec;
  if (target == "tikz") {
    spec.target = RenderTarget::tikz;
  } else if (target == "ascii") {
    spec.target = RenderTarget::ascii;
  } else {
    throw std::invalid_argument("target must be 'ascii' or 'tikz'");
  }
  for (const std::string& name : layers) {
    const auto layer = layer_from_name(name);
    if (!layer) throw std::invalid_argument("unknown layer '" + name + "'");
    spec.show.push_back(*layer);
  }
  spec.cell_labels = labels;
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Diagrams, edge cones and torus-action complexity of the varieties "
      "attached to matrix Schubert varieties";

  py::register_exception<limit_error>(m, "LimitError", PyExc_RuntimeError);
  py::register_exception<verification_error>(m, "VerificationError",
                                             PyExc_RuntimeError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const py::object& value) {
             return make_permutation(value);
           }),
           py::arg("word"),
           "Build from one-line text ('3412', '3,4,1,2') or a list of values")
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def_static("longest_element", &Permutation::longest_element,
                  py::arg("n"))
      .def_static("adjacent_transposition",
                  &Permutation::adjacent_transposition, py::arg("n"),
                  py::arg("i"))
      .def_property_readonly("n", &Permutation::size)
      .def_property_readonly("word",
                             [](const Permutation& w) { return w.word(); })
      .def("__call__", &Permutation::operator(), py::arg("i"))
      .def("__len__", &Permutation::size)
      .def("__mul__",
           [](const Permutation& u, const Permutation& v) { return u * v; })
      .def("inverse", &Permutation::inverse)
      .def("noninversions", &Permutation::noninversions)
      .def("coxeter_length", &Permutation::coxeter_length)
      .def("rank_at", &Permutation::rank_at, py::arg("a"), py::arg("b"))
      .def("dots",
           [](const Permutation& w) { return cells_as_pairs(w.dots()); })
      .def("is_identity", &Permutation::is_identity)
      .def("__str__", &Permutation::to_string)
      .def("__repr__",
           [](const Permutation& w) {
             return "Permutation('" + w.to_string() + "')";
           })
      .def("__eq__",
           [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__lt__",
           [](const Permutation& a, const Permutation& b) { return a < b; })
      .def("__hash__", [](const Permutation& w) {
        return py::hash(py::str(w.to_string()));
      });

  py::class_<ComplexityReport>(m, "ComplexityReport")
      .def_property_readonly(
          "permutation", [](const ComplexityReport& r) { return r.w; })
      .def_readonly("n", &ComplexityReport::n)
      .def_readonly("card_opposite_rothe",
                    &ComplexityReport::card_opposite_rothe)
      .def_readonly("card_dominant", &ComplexityReport::card_dominant)
      .def_readonly("card_southwest", &ComplexityReport::card_southwest)
      .def_readonly("card_l", &ComplexityReport::card_l)
      .def_readonly("card_l_prime", &ComplexityReport::card_l_prime)
      .def_readonly("vertex_count", &ComplexityReport::vertex_count)
      .def_readonly("component_count", &ComplexityReport::component_count)
      .def_readonly("cone_dim", &ComplexityReport::cone_dim)
      .def_readonly("dim_msv", &ComplexityReport::dim_msv)
      .def_readonly("dim_y", &ComplexityReport::dim_y)
      .def_readonly("length", &ComplexityReport::length)
      .def_readonly("complexity", &ComplexityReport::complexity)
      .def("to_dict", &report_to_dict)
      .def("__repr__", [](const ComplexityReport& r) {
        return "ComplexityReport(" + r.w.to_string() +
               ", d=" + std::to_string(r.complexity) + ")";
      });

  py::class_<SpectrumResult>(m, "SpectrumResult")
      .def_readonly("n", &SpectrumResult::n)
      .def_readonly("achieved", &SpectrumResult::achieved)
      .def_readonly("witnesses", &SpectrumResult::witnesses)
      .def_readonly("max_complexity", &SpectrumResult::max_complexity)
      .def_readonly("maximizers", &SpectrumResult::maximizers)
      .def_readonly("total_enumerated", &SpectrumResult::total_enumerated)
      .def("__repr__", [](const SpectrumResult& s) {
        return "SpectrumResult(n=" + std::to_string(s.n) +
               ", max=" + std::to_string(s.max_complexity) + ")";
      });

  py::class_<VerificationOutcome>(m, "VerificationOutcome")
      .def_property_readonly(
          "theorem",
          [](const VerificationOutcome& v) {
            return std::string(theorem_name(v.theorem));
          })
      .def_readonly("n", &VerificationOutcome::n)
      .def_readonly("passed", &VerificationOutcome::passed)
      .def_readonly("note", &VerificationOutcome::note)
      .def_readonly("counterexample", &VerificationOutcome::counterexample)
      .def("__bool__",
           [](const VerificationOutcome& v) { return v.passed; })
      .def("__repr__", [](const VerificationOutcome& v) {
        return std::string("VerificationOutcome(") + theorem_name(v.theorem) +
               ", n=" + std::to_string(v.n) +
               (v.passed ? ", passed)" : ", FAILED)");
      });

  py::class_<RankCondition>(m, "RankCondition")
      .def_property_readonly(
          "cell",
          [](const RankCondition& rc) {
            return std::make_pair(rc.cell.row, rc.cell.col);
          })
      .def_readonly("bound", &RankCondition::bound)
      .def("__repr__", [](const RankCondition& rc) {
        return "RankCondition(cell=(" + std::to_string(rc.cell.row) + "," +
               std::to_string(rc.cell.col) +
               "), bound=" + std::to_string(rc.bound) + ")";
      });

  py::class_<MinorDescriptor>(m, "MinorDescriptor")
      .def_readonly("rows", &MinorDescriptor::rows)
      .def_readonly("cols", &MinorDescriptor::cols)
      .def_property_readonly(
          "zero_cells",
          [](const MinorDescriptor& md) {
            std::vector<std::pair<int, int>> out;
            for (Cell c : md.zero_cells) out.emplace_back(c.row, c.col);
            return out;
          })
      .def_property_readonly("size", &MinorDescriptor::size)
      .def("__str__",
           [](const MinorDescriptor& md) { return to_string(md); })
      .def("__repr__", [](const MinorDescriptor& md) {
        return "MinorDescriptor(" + to_string(md) + ")";
      });

  // diagrams
  m.def("opposite_rothe", [](const py::object& w) {
    return cells_as_pairs(opposite_rothe(make_permutation(w)));
  });
  m.def("essential_set", [](const py::object& w) {
    return cells_as_pairs(essential_set(make_permutation(w)));
  });
  m.def("dominant_piece", [](const py::object& w) {
    return cells_as_pairs(dominant_piece(make_permutation(w)));
  });
  m.def("southwest_closure", [](const py::object& w) {
    return cells_as_pairs(southwest_closure(make_permutation(w)));
  });
  m.def("l_diagram", [](const py::object& w) {
    return cells_as_pairs(l_diagram(make_permutation(w)));
  });
  m.def("l_prime_diagram", [](const py::object& w) {
    return cells_as_pairs(l_prime_diagram(make_permutation(w)));
  });
  m.def("bundle", [](const py::object& w) {
    const DiagramBundle b = bundle(make_permutation(w));
    py::dict d;
    d["opposite_rothe"] = cells_as_pairs(b.opposite_rothe);
    d["essential"] = cells_as_pairs(b.essential);
    d["dominant"] = cells_as_pairs(b.dominant);
    d["southwest"] = cells_as_pairs(b.southwest);
    d["l"] = cells_as_pairs(b.l_diagram);
    d["l_prime"] = cells_as_pairs(b.l_prime);
    return d;
  });
  m.def(
      "connected_components",
      [](const std::vector<std::pair<int, int>>& cells, int n) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const CellSet& comp :
             connected_components(cells_from_pairs(cells, n))) {
          out.push_back(cells_as_pairs(comp));
        }
        return out;
      },
      py::arg("cells"), py::arg("n"));
  m.def(
      "is_french_young",
      [](const std::vector<std::pair<int, int>>& cells, int n) {
        return is_french_young(cells_from_pairs(cells, n));
      },
      py::arg("cells"), py::arg("n"));

  // graph and cone
  m.def("graph", [](const py::object& w) {
    const BipartiteGraph g = graph_of(l_diagram(make_permutation(w)));
    py::dict d;
    d["rows"] = g.rows;
    d["cols"] = g.cols;
    std::vector<std::pair<int, int>> edges;
    for (const Cell& e : g.edges) edges.emplace_back(e.row, e.col);
    d["edges"] = edges;
    d["components"] = component_count(g);
    return d;
  });
  m.def(
      "cone_dim_by_rank",
      [](const py::object& w) {
        const Permutation perm = make_permutation(w);
        return cone_dim_by_rank(
            weight_generators(l_diagram(perm), perm.size()));
      },
      "Exact integer-rank dimension of the weight cone");
  m.def("cone_dim_by_formula", [](const py::object& w) {
    return cone_dim_by_formula(graph_of(l_diagram(make_permutation(w))));
  });

  // complexity
  m.def(
      "analyze",
      [](const py::object& w, bool check_rank) {
        return analyze(make_permutation(w), check_rank);
      },
      py::arg("w"), py::arg("check_rank") = false);
  m.def("dim_msv",
        [](const py::object& w) { return dim_msv(make_permutation(w)); });
  m.def("dim_y",
        [](const py::object& w) { return dim_y(make_permutation(w)); });

  // ideal descriptors
  m.def("rank_conditions", [](const py::object& w) {
    return rank_conditions(make_permutation(w));
  });
  m.def(
      "minor_generators",
      [](const py::object& w, bool for_y, uint64_t cap) {
        return minor_generators(make_permutation(w), for_y, cap);
      },
      py::arg("w"), py::arg("for_y") = false,
      py::arg("cap") = kDefaultMinorCap);
  m.def(
      "minor_count",
      [](const py::object& w, bool for_y) {
        return minor_count(make_permutation(w), for_y);
      },
      py::arg("w"), py::arg("for_y") = false);

  // constructions
  m.def("w0_si", &w0_si, py::arg("n"), py::arg("i"));
  m.def(
      "compose_antidiagonal",
      [](const py::object& alpha, const py::object& beta, int k) {
        return compose_antidiagonal(make_permutation(alpha),
                                    make_permutation(beta), k);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("k"));
  m.def("permutation_with_noninversions", &permutation_with_noninversions,
        py::arg("m"), py::arg("t"));
  m.def("witness", &witness, py::arg("n"), py::arg("d"));

  // survey
  m.def(
      "spectrum",
      [](int n, int workers, int max_exhaustive_n) {
        return spectrum(n, workers, max_exhaustive_n);
      },
      py::arg("n"), py::arg("workers") = 1,
      py::arg("max_exhaustive_n") = kDefaultMaxExhaustiveN,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "verify",
      [](const std::string& theorem, int n, int workers,
         int max_exhaustive_n) {
        const auto id = theorem_from_name(theorem);
        if (!id) {
          throw std::invalid_argument("unknown theorem '" + theorem +
                                      "' (use max, unique, spectrum, no-one)");
        }
        return verify(*id, n, workers, max_exhaustive_n);
      },
      py::arg("theorem"), py::arg("n"), py::arg("workers") = 1,
      py::arg("max_exhaustive_n") = kDefaultMaxExhaustiveN,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "enumerate_reports",
      [](int n, int max_exhaustive_n) {
        std::vector<ComplexityReport> out;
        enumerate_reports(
            n, [&out](const ComplexityReport& r) { out.push_back(r); },
            max_exhaustive_n);
        return out;
      },
      py::arg("n"), py::arg("max_exhaustive_n") = kDefaultMaxExhaustiveN);
  m.def(
      "sample_reports",
      [](int n, int count, uint64_t seed) {
        std::vector<ComplexityReport> out;
        sample_reports(n, count, seed, [&out](const ComplexityReport& r) {
          out.push_back(r);
        });
        return out;
      },
      py::arg("n"), py::arg("count"), py::arg("seed"));
  m.def("save_cache", &save_cache, py::arg("result"), py::arg("path"));
  m.def("load_cache", &load_cache, py::arg("n"), py::arg("path"));

  // rendering
  m.def(
      "render",
      [](const py::object& w, const std::string& target,
         const std::vector<std::string>& layers, bool labels) {
        return render(make_permutation(w),
                      make_render_spec(target, layers, labels));
      },
      py::arg("w"), py::arg("target") = "ascii",
      py::arg("layers") = std::vector<std::string>{"dots", "opposite_rothe"},
      py::arg("labels") = false);

  m.attr("DEFAULT_MAX_EXHAUSTIVE_N") = kDefaultMaxExhaustiveN;
  m.attr("DEFAULT_MINOR_CAP") = kDefaultMinorCap;
  m.attr("__version__") = "0.1.0";
}
