#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "annular/bijections.hpp"
#include "annular/errors.hpp"
#include "annular/map_families.hpp"
#include "annular/moments.hpp"
#include "annular/monte_carlo.hpp"
#include "annular/nc_families.hpp"
#include "annular/parallel.hpp"
#include "annular/permutation.hpp"
#include "annular/serialize.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace annular;

namespace {

GroundSet domain_of(int n, bool is_signed) {
  return is_signed ? GroundSet::signed_set(n) : GroundSet::unsigned_set(n);
}

std::vector<std::string> cycle_strings(const FamilySet& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back(to_cycle_string(p));
  return out;
}

Ensemble ensemble(const std::string& name) {
  const auto e = ensemble_from_string(name);
  if (!e) throw InvalidArgument("unknown ensemble: " + name);
  return *e;
}

NCTag nc_tag(const std::string& name) {
  const auto t = nc_tag_from_string(name);
  if (!t) throw InvalidArgument("unknown family: " + name);
  return *t;
}

}  // namespace

PYBIND11_MODULE(_annular, m) {
  m.doc() = "Annular non-crossing families, ribbon graphs and matrix moments";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainMismatch>(m, "DomainMismatch", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  m.def("set_thread_count", &set_thread_count, py::arg("threads"));
  m.def("thread_count", &thread_count);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string& cycles, int n, bool is_signed) {
             return parse_cycles(cycles, domain_of(n, is_signed));
           }),
           py::arg("cycles"), py::arg("n"), py::arg("signed") = false)
      .def_property_readonly("n", [](const Permutation& p) { return p.domain().n(); })
      .def_property_readonly("is_signed",
                             [](const Permutation& p) { return p.domain().is_signed(); })
      .def("__call__", &Permutation::operator(), py::arg("label"))
      .def("cycles", &Permutation::cycles)
      .def("num_cycles", [](const Permutation& p) { return num_cycles(p); })
      .def("inverse", [](const Permutation& p) { return inverse(p); })
      .def("__mul__", [](const Permutation& p, const Permutation& q) { return compose(p, q); })
      .def("__eq__", [](const Permutation& p, const Permutation& q) { return p == q; })
      .def("__hash__", [](const Permutation& p) { return py::hash(py::str(to_cycle_string(p))); })
      .def("__str__", [](const Permutation& p) { return to_cycle_string(p); })
      .def("__repr__", [](const Permutation& p) {
        return "Permutation('" + to_cycle_string(p) + "', " + std::to_string(p.domain().n()) +
               (p.domain().is_signed() ? ", signed=True)" : ")");
      });

  m.def("is_noncrossing", &is_noncrossing, py::arg("pi"), py::arg("gamma"));
  m.def("euler_defect", &euler_defect, py::arg("pi"), py::arg("gamma"));
  m.def("is_delta_symmetric", &is_delta_symmetric, py::arg("pi"));
  m.def("torus_frame", [](int n, int u, int v) { return torus_frame(n, u, v).gamma; });
  m.def("klein_frame", [](int n, int u, int v) { return klein_frame(n, u, v).gamma; });
  m.def("annulus_frame", [](int n) { return annulus_frame(n).gamma; });
  m.def("disk_frame", [](int n) { return disk_frame(n).gamma; });

  m.def(
      "ribbon_family",
      [](const std::string& name, int n, int genus, std::optional<int> p) {
        const auto need_p = [&] {
          if (!p) throw InvalidArgument("family " + name + " needs p");
          return *p;
        };
        if (name == "a") return cycle_strings(family_a(n, genus));
        if (name == "b") return cycle_strings(family_b(n, genus));
        if (name == "a-tilde") return cycle_strings(family_a_tilde(n, genus, need_p()));
        if (name == "b-tilde") return cycle_strings(family_b_tilde(n, genus, need_p()));
        if (name == "a-hat") return cycle_strings(family_a_hat(n, genus, need_p()));
        if (name == "b-hat") return cycle_strings(family_b_hat(n, genus, need_p()));
        throw InvalidArgument("unknown family: " + name);
      },
      py::arg("name"), py::arg("n"), py::arg("genus"), py::arg("p") = py::none(),
      "Members of a, b, a-tilde, b-tilde, a-hat or b-hat. `genus` is g or k.");

  m.def(
      "nc_family",
      [](const std::string& tag, int n, int p) {
        return cycle_strings(family_nc({nc_tag(tag), n, p}).members);
      },
      py::arg("tag"), py::arg("n"), py::arg("p") = 0);

  m.def(
      "verify_json",
      [](const std::string& name, int n, int p, const std::string& hat_map) {
        const HatMap hm = hat_map == "tau0" ? HatMap::Tau0 : HatMap::Inverse;
        BijectionReport r;
        if (name == "phi1") r = verify_phi1(n);
        else if (name == "phi2") r = verify_phi2(n);
        else if (name == "torus-eq") r = verify_torus_equality(n);
        else if (name == "phi1-tilde") r = verify_phi1_tilde(n, p);
        else if (name == "phi2-tilde") r = verify_phi2_tilde(n, p);
        else if (name == "a-tilde-eq") r = verify_a_tilde_equality(n, p);
        else if (name == "phi1-hat") r = verify_phi1_hat(n, p, hm);
        else if (name == "phi2-hat") r = verify_phi2_hat(n, p, hm);
        else if (name == "a-hat-eq") r = verify_a_hat_equality(n, p);
        else if (name == "lemma3-orientable") r = verify_lemma3_orientable(n);
        else if (name == "lemma3-nonorientable") r = verify_lemma3_nonorientable(n);
        else throw InvalidArgument("unknown bijection: " + name);
        return to_json(r).dump();
      },
      py::arg("name"), py::arg("n"), py::arg("p") = 0, py::arg("hat_map") = "inverse");

  m.def(
      "moment_json",
      [](const std::string& ens, int n, const std::string& method) {
        if (method == "wick") return to_json(wick_moment(ensemble(ens), n)).dump();
        if (method == "genus") return to_json(genus_expansion_moment(ensemble(ens), n)).dump();
        throw InvalidArgument("method must be wick or genus");
      },
      py::arg("ensemble"), py::arg("n"), py::arg("method") = "wick");

  m.def(
      "oracle_moment",
      [](const std::string& ens, int n, int N, std::optional<int> M) {
        const Rational r = wick_oracle_small_n(ensemble(ens), n, N, M);
        return std::pair{boost::multiprecision::numerator(r).str(),
                         boost::multiprecision::denominator(r).str()};
      },
      py::arg("ensemble"), py::arg("n"), py::arg("N"), py::arg("M") = py::none());

  m.def(
      "mc_moment_json",
      [](const std::string& ens, int n, int N, std::optional<int> M, std::uint64_t samples,
         std::uint64_t seed) {
        py::gil_scoped_release release;
        return to_json(mc_moment(ensemble(ens), n, N, M, samples, seed)).dump();
      },
      py::arg("ensemble"), py::arg("n"), py::arg("N"), py::arg("M") = py::none(),
      py::arg("samples") = 100000, py::arg("seed") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> all{"annular"};
        all.insert(all.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : all) argv.push_back(a.c_str());
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process: (exit code, stdout, stderr).");
}
