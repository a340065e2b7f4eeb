#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tarski/analysis.hpp"
#include "tarski/cli.hpp"
#include "tarski/core.hpp"
#include "tarski/cuntz.hpp"
#include "tarski/duality.hpp"
#include "tarski/error.hpp"
#include "tarski/finite_monoid.hpp"
#include "tarski/prefix_map.hpp"
#include "tarski/suites.hpp"

namespace py = pybind11;
using namespace tarski;

namespace {

CuntzMonoid monoid_of(PrefixMap const& s)
{
  return CuntzMonoid(s.alphabet());
}

std::string label_of(FiniteMonoid const& m, FiniteMonoid::element_type x)
{
  return m.label(x);
}

} // namespace

PYBIND11_MODULE(_tarski, m)
{
  m.doc() = "Boolean inverse monoids: finite instances, duality and the Cuntz monoids C_n";

  static PyObject* error_type = py::exception<Error>(m, "TarskiError", PyExc_ValueError).inc_ref().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (Error const& e) {
      auto const args = py::make_tuple(e.what(), std::string(to_string(e.kind())));
      PyErr_SetObject(error_type, args.ptr());
    }
  });

  py::class_<PrefixMap>(m, "PrefixMap")
    .def(py::init([](int n, std::string const& text) { return PrefixMap::parse(n, text); }), py::arg("n"),
         py::arg("text"))
    .def_static("identity", &PrefixMap::identity)
    .def_static("zero", &PrefixMap::zero)
    .def_property_readonly("alphabet", &PrefixMap::alphabet)
    .def_property_readonly("pairs", &PrefixMap::pairs)
    .def("is_idempotent", &PrefixMap::is_idempotent)
    .def("cylinders", &PrefixMap::cylinders)
    .def("inverse", &PrefixMap::inverse)
    .def("meet", &PrefixMap::meet)
    .def("join", &PrefixMap::join)
    .def("complement", &PrefixMap::complement)
    .def("clopen_string", &PrefixMap::to_clopen_string)
    .def("__mul__", [](PrefixMap const& a, PrefixMap const& b) { return a * b; })
    .def("__eq__", [](PrefixMap const& a, PrefixMap const& b) { return a == b; })
    .def("__hash__", [](PrefixMap const& a) { return std::hash<PrefixMap>{}(a); })
    .def("__bool__", [](PrefixMap const& a) { return !a.empty(); })
    .def("__str__", &PrefixMap::to_string)
    .def("__repr__", [](PrefixMap const& a) { return "PrefixMap(" + std::to_string(a.alphabet()) + ", '" + a.to_string() + "')"; });

  py::class_<EPPoint>(m, "EPPoint")
    .def(py::init([](int n, std::string const& text) { return EPPoint::parse(n, text); }), py::arg("n"),
         py::arg("text"))
    .def_property_readonly("prefix", &EPPoint::prefix)
    .def_property_readonly("period", &EPPoint::period)
    .def("head", &EPPoint::head)
    .def("__eq__", [](EPPoint const& a, EPPoint const& b) { return a == b; })
    .def("__str__", &EPPoint::to_string)
    .def("__repr__", [](EPPoint const& p) { return "EPPoint('" + p.to_string() + "')"; });

  m.def("domain_idempotent", [](PrefixMap const& s) { return domain(monoid_of(s), s); });
  m.def("range_idempotent", [](PrefixMap const& s) { return range(monoid_of(s), s); });
  m.def("phi", [](PrefixMap const& s) { return phi(monoid_of(s), s); });
  m.def("sigma", [](PrefixMap const& s) { return sigma(monoid_of(s), s); });
  m.def("cooper_decompose", [](PrefixMap const& s) { return cooper_decompose(monoid_of(s), s); });
  m.def("leq", [](PrefixMap const& s, PrefixMap const& t) { return leq(monoid_of(s), s, t); });
  m.def("compatible", [](PrefixMap const& s, PrefixMap const& t) { return compatible(monoid_of(s), s, t); });
  m.def("orthogonal", [](PrefixMap const& s, PrefixMap const& t) { return orthogonal(monoid_of(s), s, t); });
  m.def("is_unit", [](PrefixMap const& s) { return is_unit(monoid_of(s), s); });
  m.def("is_involution", [](PrefixMap const& s) { return is_involution(monoid_of(s), s); });
  m.def("is_infinitesimal", [](PrefixMap const& s) { return is_infinitesimal(monoid_of(s), s); });
  m.def("apply_point", &cuntz::apply_point);

  m.def("infinitesimal_at", &cuntz::infinitesimal_at);
  m.def("f1_witness", &cuntz::f1_witness);
  m.def("f2_witness", [](PrefixMap const& t, PrefixMap const& e) {
    auto const w = cuntz::f2_witness(t, e);
    return py::dict(py::arg("unit") = w.unit, py::arg("region") = w.region,
                    py::arg("infinitesimal") = w.infinitesimal, py::arg("moved_point") = w.moved_point);
  });
  m.def("f3_witness", [](PrefixMap const& e) {
    auto const w = cuntz::f3_witness(e);
    return py::dict(py::arg("unit") = w.unit, py::arg("a") = w.a, py::arg("b") = w.b,
                    py::arg("blocks") = w.blocks, py::arg("cycle") = w.cycle_notation());
  });
  m.def("properly_infinite_witness", &cuntz::properly_infinite_witness);
  m.def("transfer_witness", &cuntz::transfer_witness);
  m.def("conjugator_unit", &cuntz::conjugator_unit);
  m.def("clopen_iso", &cuntz::clopen_iso);
  m.def("piecewise_factorize", [](PrefixMap const& s) {
    std::vector<std::pair<PrefixMap, PrefixMap>> out;
    for (auto const& part : cuntz::piecewise_factorize(s))
      out.emplace_back(part.unit, part.idempotent);
    return out;
  });
  m.def("principality_decompose", [](PrefixMap const& s) -> py::dict {
    auto const r = cuntz::principality_decompose(s);
    if (auto const* d = std::get_if<cuntz::PrincipalDecomposition>(&r))
      return py::dict(py::arg("idempotent") = d->idempotent, py::arg("infinitesimals") = d->infinitesimals);
    auto const& w = std::get<cuntz::NonPrincipalWitness>(r);
    return py::dict(py::arg("pair") = w.pair, py::arg("fixed_point") = w.fixed_point);
  });
  m.def("find_moved_point", &cuntz::find_moved_point);
  m.def("separating_idempotent", [](PrefixMap const& g, EPPoint const& p) { return cuntz::separating_idempotent(g, p); });
  m.def("support_cover", &cuntz::support_cover);
  m.def("unit_in_ultrafilter", &cuntz::unit_in_ultrafilter);
  m.def("hengist_witness", &cuntz::hengist_witness);

  py::class_<FiniteMonoid>(m, "FiniteMonoid")
    .def(py::init([](std::string const& spec) { return finite_instance_from_spec(spec); }), py::arg("spec"))
    .def_property_readonly("name", &FiniteMonoid::name)
    .def("__len__", &FiniteMonoid::size)
    .def("elements", [](FiniteMonoid const& s) {
      std::vector<std::string> out;
      for (auto x : s.elements())
        out.push_back(s.label(x));
      return out;
    })
    .def("normalize", [](FiniteMonoid const& s, std::string const& x) { return s.label(s.parse(x)); })
    .def("multiply", [](FiniteMonoid const& s, std::string const& a, std::string const& b) {
      return label_of(s, s.multiply(s.parse(a), s.parse(b)));
    })
    .def("inverse", [](FiniteMonoid const& s, std::string const& a) { return label_of(s, s.inverse(s.parse(a))); })
    .def("idempotent_count", [](FiniteMonoid const& s) { return s.idempotents().size(); })
    .def("atoms", [](FiniteMonoid const& s) {
      std::vector<std::string> out;
      for (auto a : s.atoms())
        out.push_back(s.label(a));
      return out;
    })
    .def("units_order", [](FiniteMonoid const& s) { return group_of_units(s).order(); })
    .def("is_fundamental", [](FiniteMonoid const& s) { return is_fundamental(s); })
    .def("is_zero_simplifying", [](FiniteMonoid const& s) { return is_zero_simplifying(s); })
    .def("classify", [](FiniteMonoid const& s) { return classify(s).n; })
    .def("__repr__", [](FiniteMonoid const& s) { return "FiniteMonoid('" + s.name() + "')"; });

  m.def("_analyze_json", [](FiniteMonoid const& s) { return analyze(s).dump(); });
  m.def("_analyze_cuntz_json", [](int n, std::uint64_t seed, std::size_t samples) {
    return analyze_cuntz(n, seed, samples).dump();
  });
  m.def("_roundtrip_json", [](FiniteMonoid const& s) { return duality_roundtrip_monoid(s).certificate.dump(); });
  m.def("_suite_json", [](std::string const& name, std::string const& instance, std::uint64_t seed,
                          std::size_t samples) {
    suites::Options o;
    o.instance = instance;
    o.seed = seed;
    o.samples = samples;
    return suites::run(name, o).to_json().dump();
  });
  m.def("cli", [](std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
