// Python face of the engine: canonical text in, canonical text out.  Every
// element crosses the boundary in its rendered form, so exactness survives.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wminus/dims.hpp"
#include "wminus/env.hpp"
#include "wminus/fock.hpp"
#include "wminus/heis.hpp"
#include "wminus/lie.hpp"
#include "wminus/parse.hpp"
#include "wminus/trace.hpp"
#include "wminus/verify.hpp"

namespace py = pybind11;
using namespace wminus;

namespace {

std::string py_bracket(const std::string& lhs, const std::string& rhs) {
  return render(bracket(parse_lie(lhs), parse_lie(rhs)));
}

std::string py_sigma(const std::string& x) { return render(sigma_apply(parse_lie(x))); }

bool py_is_member(const std::string& x) { return is_in_wminus(parse_lie(x)); }

std::string py_normalize(const std::string& x) {
  return render(pbw_normal_form(parse_env(x)));
}

std::string py_reduce(const std::string& x) {
  return render(quotient_reduce(pbw_normal_form(parse_env(x))));
}

std::string py_act(const std::string& elem, const std::string& vec) {
  return render(act_env(parse_env(elem), parse_fock(vec)));
}

std::string py_heis_embed(const std::string& x) { return render(heis_embed(parse_heis(x))); }

std::string py_heis_bracket(const std::string& lhs, const std::string& rhs) {
  return render(heis_bracket(parse_heis(lhs), parse_heis(rhs)));
}

std::map<std::pair<int64_t, int64_t>, int64_t> py_dims(int64_t max_rank, int64_t max_weight,
                                                       int side) {
  DimTable t = series_coefficients(max_rank, max_weight, side);
  return {t.begin(), t.end()};
}

std::string py_expand(const std::string& x) {
  std::vector<std::string> missing;
  TraceExpr flat = shipped_ledger().expand(parse_trace(x), &missing);
  if (!missing.empty()) {
    std::string names;
    for (const auto& n : missing) names += (names.empty() ? "" : ", ") + n;
    throw py::value_error("undefined names: " + names);
  }
  return render(flat);
}

std::string py_phi(const std::string& x) {
  try {
    return render(phi_image(parse_trace(x), shipped_ledger(), calibrated_assignment()));
  } catch (const MissingNames& m) {
    std::string names;
    for (const auto& n : m.names) names += (names.empty() ? "" : ", ") + n;
    throw py::value_error("undefined names: " + names);
  }
}

py::dict py_check(const std::string& lhs, const std::string& rhs, const std::string& mode,
                  const std::string& compare, int64_t fock_bound) {
  CheckOutcome oc = check_relation(parse_trace(lhs), parse_trace(rhs), mode, compare, fock_bound,
                                   shipped_ledger(), calibrated_assignment());
  py::dict out;
  out["status"] = status_name(oc.status);
  out["difference"] = render(oc.difference);
  out["note"] = oc.note;
  return out;
}

py::dict py_calibrate() {
  CalibrationReport rep = calibrate_phi();
  py::dict out;
  out["consistent"] = rep.consistent;
  py::dict assignment;
  assignment["a1"] = render(rep.assignment.a1);
  assignment["a2"] = render(rep.assignment.a2);
  assignment["a3"] = render(rep.assignment.a3);
  assignment["a4"] = render(rep.assignment.a4);
  out["assignment"] = assignment;
  py::list steps;
  for (const auto& s : rep.steps) {
    py::dict step;
    step["parameter"] = s.parameter;
    step["instance"] = s.instance;
    step["value"] = render(s.value);
    step["solved"] = s.solved;
    step["note"] = s.note;
    steps.append(step);
  }
  out["steps"] = steps;
  py::list cores;
  for (const auto& [id, st] : rep.core_checks) {
    py::dict c;
    c["id"] = id;
    c["status"] = status_name(st);
    cores.append(c);
  }
  out["core_checks"] = cores;
  out["variant_notes"] = rep.variant_notes;
  return out;
}

py::dict py_verify(const std::string& suite, uint64_t seed, int64_t samples, int64_t max_size) {
  VerifyOptions opt;
  opt.seed = seed;
  if (samples > 0) {
    opt.lie_samples = samples;
    opt.pbw_samples = samples;
  }
  if (max_size >= 0) opt.fock_bound = max_size;
  VerifyResult res = run_suite(suite, opt);
  py::dict out;
  py::list reports;
  for (const auto& r : res.reports) {
    py::dict rep;
    rep["suite"] = r.suite;
    rep["id"] = r.id;
    rep["status"] = r.status;
    rep["unexpected"] = r.unexpected;
    rep["note"] = r.note;
    reports.append(rep);
  }
  out["reports"] = reports;
  out["unexpected"] = res.unexpected;
  return out;
}

std::string py_ledger_entries() {
  std::ostringstream os;
  for (const auto& e : shipped_ledger().entries())
    os << e.name << "\t" << render(e.def) << "\t" << e.anchor << "\n";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact engine for the fixed subalgebra of twisted differential operators on the "
            "circle, its level-one Fock action, and the presented-relation checker.  All "
            "elements pass as canonical text; see render/parse in the C++ headers.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const MissingNames& mn) {
      std::string names;
      for (const auto& n : mn.names) names += (names.empty() ? "" : ", ") + n;
      PyErr_SetString(PyExc_ValueError, ("undefined names: " + names).c_str());
    }
  });

  m.def("bracket", &py_bracket, py::arg("lhs"), py::arg("rhs"),
        "Lie bracket of two elements; returns canonical text.");
  m.def("sigma", &py_sigma, py::arg("x"),
        "The reflection anti-involution with the decreed signs.");
  m.def("is_member", &py_is_member, py::arg("x"),
        "Whether the element lies in the fixed subalgebra.");
  m.def("normalize", &py_normalize, py::arg("x"),
        "Straighten a product expression into PBW normal form.");
  m.def("reduce", &py_reduce, py::arg("x"),
        "Normal form in the quotient: C = 1, degree-zero constant dropped.");
  m.def("act", &py_act, py::arg("element"), py::arg("vector"),
        "Apply an envelope element to a Fock vector.");
  m.def("heis_embed", &py_heis_embed, py::arg("x"),
        "Embed a twisted Heisenberg element into the subalgebra.");
  m.def("heis_bracket", &py_heis_bracket, py::arg("lhs"), py::arg("rhs"),
        "Bracket in the twisted Heisenberg algebra.");
  m.def("dims", &py_dims, py::arg("max_rank"), py::arg("max_weight"), py::arg("side") = 1,
        "Graded dimensions as a dict keyed by (rank, weight).");
  m.def("multiset_count", &multiset_generator_count, py::arg("rank"), py::arg("weight"),
        "Direct count of generator multisets at the given bidegree.");
  m.def("expand", &py_expand, py::arg("x"),
        "Rewrite a trace expression over the four generators via the ledger.");
  m.def("phi", &py_phi, py::arg("x"),
        "Image of a trace expression under the calibrated generator map.");
  m.def("check", &py_check, py::arg("lhs"), py::arg("rhs"), py::arg("mode") = "pbw",
        py::arg("compare") = "exact", py::arg("fock_bound") = 8,
        "Compare the images of two trace expressions; returns status/difference/note.");
  m.def("calibrate", &py_calibrate, "Re-derive the generator map coefficients.");
  m.def("verify", &py_verify, py::arg("suite") = "all", py::arg("seed") = 20240801,
        py::arg("samples") = -1, py::arg("max_size") = -1,
        "Run a verification suite; returns reports and the unexpected count.");
  m.def("ledger", &py_ledger_entries,
        "The shipped definition ledger as name/definition/anchor lines.");
  m.def("manifest", []() { return std::string(embedded_manifest()); },
        "The embedded relation manifest text.");
}
