#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "lexntf/decomp.hpp"
#include "lexntf/depth.hpp"
#include "lexntf/errors.hpp"
#include "lexntf/ideal.hpp"
#include "lexntf/lexseg.hpp"
#include "lexntf/monomial.hpp"
#include "lexntf/verify.hpp"

namespace py = pybind11;
using namespace lexntf;
using nlohmann::json;

namespace {

/// Accepts "x1*x2^3", "[1,3,0]" or a sequence of ints.
Monomial to_monomial(const py::handle& obj, std::size_t n) {
  if (py::isinstance<py::str>(obj)) return parse_monomial(obj.cast<std::string>(), n);
  const auto e = obj.cast<std::vector<Exponent>>();
  if (e.size() != n) throw DimensionError("exponent vector length " + std::to_string(e.size()) + " != n");
  return Monomial(n, e);
}

MonomialIdeal to_ideal(std::size_t n, const py::handle& gens) {
  if (py::isinstance<py::str>(gens)) return minimalize(n, parse_monomial_list(gens.cast<std::string>(), n));
  std::vector<Monomial> out;
  for (const auto& g : gens) out.push_back(to_monomial(g, n));
  return minimalize(n, std::move(out));
}

LexSpec to_spec(std::size_t n, const py::handle& u, const py::handle& v) {
  LexSpec s{n, 0, to_monomial(u, n), to_monomial(v, n)};
  s.d = s.u.degree();
  s.validate();
  return s;
}

py::object to_py(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

DecompositionMethod method_from(const std::string& s) {
  if (s == "auto") return DecompositionMethod::automatic;
  if (s == "splitting") return DecompositionMethod::splitting;
  if (s == "socle") return DecompositionMethod::socle;
  throw DomainError("unknown decomposition method " + s);
}

DepthRoute route_from(const std::string& s) {
  if (s == "auto") return DepthRoute::automatic;
  if (s == "hochster") return DepthRoute::hochster;
  if (s == "colon") return DepthRoute::colon;
  throw DomainError("unknown depth route " + s);
}

}  // namespace

PYBIND11_MODULE(_lexntf, m) {
  m.doc() = "Monomial ideals, lexsegment ideals and their powers.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", base.ptr());

  m.def("format_monomial", [](const py::handle& mono, std::size_t n) { return to_string(to_monomial(mono, n)); },
        py::arg("m"), py::arg("n"));
  m.def("parse_monomial", [](const std::string& text, std::size_t n) {
    const auto e = parse_monomial(text, n).exponents();
    return std::vector<Exponent>(e.begin(), e.end());
  }, py::arg("text"), py::arg("n"));

  m.def("lexsegment", [](std::size_t n, const py::handle& u, const py::handle& v) {
    json out = json::array();
    for (const auto& x : enumerate_lexsegment(to_spec(n, u, v))) out.push_back(to_json(x));
    return to_py(out);
  }, py::arg("n"), py::arg("u"), py::arg("v"), "Monomials of L(u, v), descending lex.");

  m.def("classify", [](std::size_t n, const py::handle& u, const py::handle& v) {
    const auto fc = classify_any(to_spec(n, u, v));
    json out = to_json(fc.reduced);
    out["reduced_spec"] = fc.normalized.spec.d > 0 ? to_json(fc.normalized.spec) : json(nullptr);
    out["ass"] = fc.ass ? to_json(*fc.ass) : json(nullptr);
    return to_py(out);
  }, py::arg("n"), py::arg("u"), py::arg("v"), "Classifier output for L(u, v) after normalizing the ends.");

  m.def("power", [](std::size_t n, const py::handle& gens, unsigned k) {
    return to_py(to_json(ideal_power(to_ideal(n, gens), k)));
  }, py::arg("n"), py::arg("gens"), py::arg("k"));

  m.def("colon", [](std::size_t n, const py::handle& gens, const py::handle& mono) {
    return to_py(to_json(ideal_colon(to_ideal(n, gens), to_monomial(mono, n))));
  }, py::arg("n"), py::arg("gens"), py::arg("m"));

  m.def("decompose", [](std::size_t n, const py::handle& gens, const std::string& method) {
    json out = json::array();
    for (const auto& q : irreducible_decomposition(to_ideal(n, gens), method_from(method))) out.push_back(to_json(q));
    return to_py(out);
  }, py::arg("n"), py::arg("gens"), py::arg("method") = "auto");

  m.def("associated_primes", [](std::size_t n, const py::handle& gens, const std::string& method) {
    return to_py(to_json(associated_primes(to_ideal(n, gens), method_from(method))));
  }, py::arg("n"), py::arg("gens"), py::arg("method") = "auto");

  m.def("ass_bruteforce", [](std::size_t n, const py::handle& gens) {
    return to_py(to_json(ass_bruteforce(to_ideal(n, gens))));
  }, py::arg("n"), py::arg("gens"));

  m.def("depth", [](std::size_t n, const py::handle& gens, const std::string& route, bool fast_path) {
    DepthOptions o;
    o.route = route_from(route);
    o.fast_path = fast_path;
    const DepthReport r = depth_report(to_ideal(n, gens), o);
    return to_py({{"depth", r.depth}, {"pd", r.pd}, {"added", r.added}, {"route", name(r.route)},
                  {"fast_path_hit", r.fast_path_hit}});
  }, py::arg("n"), py::arg("gens"), py::arg("route") = "auto", py::arg("fast_path") = true);

  m.def("ntf_check", [](std::size_t n, const py::handle& u, const py::handle& v, unsigned kmax) {
    const LexSpec s = to_spec(n, u, v);
    NtfBruteforce bf;
    {
      py::gil_scoped_release release;
      bf = is_ntf_bruteforce(s, kmax ? kmax : 2 * s.d + 1);
    }
    return to_py({{"ntf_up_to_kmax", bf.ntf_up_to_kmax},
                  {"first_failing_k", bf.first_failing_k ? json(*bf.first_failing_k) : json(nullptr)},
                  {"kmax", bf.kmax}});
  }, py::arg("n"), py::arg("u"), py::arg("v"), py::arg("kmax") = 0);

  m.def("depth_profile", [](std::size_t n, const py::handle& u, const py::handle& v, unsigned kmax) {
    const LexSpec s = to_spec(n, u, v);
    py::gil_scoped_release release;
    return depth_profile_bruteforce(s, kmax);
  }, py::arg("n"), py::arg("u"), py::arg("v"), py::arg("kmax"));

  m.def("proof_witness", [](std::size_t n, const py::handle& u, const py::handle& v, const std::string& which,
                            unsigned k) {
    const LexSpec s = to_spec(n, u, v);
    const Monomial w = proof_witness(s, witness_case_from_name(which), k);
    const bool ok = is_depth_zero_witness(ideal_power(lexsegment_ideal(s), k), w);
    return to_py({{"m", to_json(w)}, {"ok", ok}});
  }, py::arg("n"), py::arg("u"), py::arg("v"), py::arg("case"), py::arg("k"));

  m.def("witness_cases", [](std::size_t n, const py::handle& u, const py::handle& v) {
    std::vector<std::string> out;
    for (WitnessCase c : applicable_witness_cases(to_spec(n, u, v))) out.emplace_back(name(c));
    return out;
  }, py::arg("n"), py::arg("u"), py::arg("v"));

  m.def("survey", [](std::size_t n, unsigned d, unsigned kmax, const std::string& mode, unsigned threads) {
    SurveyOptions o;
    o.kmax = kmax;
    if (mode == "depth") o.mode = SurveyMode::depth;
    else if (mode != "ass") throw DomainError("unknown survey mode " + mode);
    o.threads = threads;
    SurveyReport r;
    {
      py::gil_scoped_release release;
      r = survey(n, d, o);
    }
    return to_py(to_json(r));
  }, py::arg("n"), py::arg("d"), py::arg("kmax") = 0, py::arg("mode") = "ass", py::arg("threads") = 0);
}
