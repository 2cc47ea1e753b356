#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "symcap/capacityfn.hpp"
#include "symcap/classes.hpp"
#include "symcap/cli.hpp"
#include "symcap/cremona.hpp"
#include "symcap/domains.hpp"
#include "symcap/ech.hpp"
#include "symcap/staircase.hpp"
#include "symcap/weights.hpp"

namespace py = pybind11;
using namespace symcap;

// Exact values cross the boundary as strings; integers as Python ints.
namespace {

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& x) { return BigInt(py::repr(x).cast<std::string>()); }

std::vector<std::string> strs(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

py::list ints(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::dict step_dict(const StepReport& r) {
  py::dict d;
  d["k"] = r.k;
  d["class"] = r.e.full().str();
  d["center"] = r.e.center().str();
  d["quasi_perfect"] = r.quasi_perfect;
  d["perfect"] = r.perfect;
  d["adjacent_to_next"] = r.adjacent_to_next;
  d["obstructive"] = r.obstructive;
  d["mu_center"] = r.mu_center.str();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact ECH capacities, obstruction classes and staircases";
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("continued_fraction", [](const std::string& z) { return cf_of(Rational::parse(z)).str(); }, py::arg("z"));
  m.def("weight_expansion", [](const std::string& z) { return strs(weight_expansion(Rational::parse(z)).entries()); },
        py::arg("z"));
  m.def("integral_weights", [](const py::int_& p, const py::int_& q) { return ints(integral_weights(from_py(p), from_py(q))); },
        py::arg("p"), py::arg("q"));

  m.def("capacities", [](const std::string& tuple, size_t K) {
    return strs(convex_capacities(WeightTuple::parse(tuple), K).values());
  }, py::arg("tuple"), py::arg("K"));
  m.def("ellipsoid_capacities", [](const std::string& a, const std::string& b, size_t K) {
    return strs(ellipsoid_capacities(Rational::parse(a), Rational::parse(b), K).values());
  }, py::arg("a"), py::arg("b"), py::arg("K"));

  m.def("stats", [](const std::string& tuple) {
    auto s = stats(WeightTuple::parse(tuple));
    py::dict d;
    d["per"] = s.per.str();
    d["vol"] = s.vol.str();
    d["a0"] = s.a0 ? py::object(py::str(s.a0->str())) : py::object(py::none());
    return d;
  }, py::arg("tuple"));
  m.def("cut", [](const std::string& polygon_text) {
    return cut_decomposition(RationalPolygon::parse(polygon_text)).tuple.str();
  }, py::arg("polygon_text"), "negative weight tuple of a polygon given one \"x y\" vertex per line");

  m.def("cremona_chain", [](const std::string& tuple) {
    std::vector<std::string> out;
    for (const auto& t : cremona_chain(WeightTuple::parse(tuple))) out.push_back(t.str());
    return out;
  }, py::arg("tuple"));
  m.def("is_exceptional", [](const std::string& cls) {
    return is_exceptional(ClassVector::of(ObstructionClass::parse(cls)));
  }, py::arg("cls"));
  m.def("mu", [](const std::string& cls, const std::string& tuple, const std::string& z) {
    return mu_at(ObstructionClass::parse(cls), Target::of(WeightTuple::parse(tuple)), Surd::parse(z)).str();
  }, py::arg("cls"), py::arg("tuple"), py::arg("z"));

  m.def("staircase", [](long n, size_t k) {
    auto f = make_family(n);
    auto L = limit_domain(f);
    py::dict d;
    d["n"] = n;
    d["t"] = f.t;
    d["z_inf"] = L.z_inf.str();
    d["limit_tuple"] = L.tuple.str();
    py::list steps;
    for (const auto& r : verify_steps(f, k)) steps.append(step_dict(r));
    d["steps"] = steps;
    return d;
  }, py::arg("n"), py::arg("k"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "run the command line front end; returns (exit code, stdout, stderr)");
}
