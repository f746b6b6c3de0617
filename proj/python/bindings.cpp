#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ssq/cli.hpp"
#include "ssq/errors.hpp"
#include "ssq/hypergeom.hpp"
#include "ssq/primes.hpp"
#include "ssq/quintic.hpp"
#include "ssq/superelliptic.hpp"

namespace py = pybind11;

namespace {

ssq::QuinticFamily fixed_family(int type) {
  switch (type) {
    case 1: return ssq::QuinticFamily::Type1_Fermat;
    case 2: return ssq::QuinticFamily::Type2_Hurwitz;
    case 3: return ssq::QuinticFamily::Type3;
    case 4: return ssq::QuinticFamily::Type4_Z20;
    case 5: return ssq::QuinticFamily::Type5_Z16;
    default: throw ssq::InvalidArgument("type must be one of 1..5, got " + std::to_string(type));
  }
}

py::dict as_dict(const ssq::CountResult& r) {
  py::dict d;
  d["p"] = r.p;
  d["family"] = std::string(ssq::family_name(r.family));
  d["residue"] = r.residue;
  d["deg_g"] = r.deg_g ? py::object(py::int_(*r.deg_g)) : py::object(py::none());
  d["count"] = r.count;
  d["adjustments"] = r.adjustments;
  d["method"] = std::string(ssq::method_name(r.method));
  return d;
}

std::vector<std::uint32_t> residues(const ssq::DensePoly& g) { return {g.residues().begin(), g.residues().end()}; }

ssq::SuperellipticCurve make_curve(int n, const std::vector<std::int64_t>& f, std::uint64_t p) {
  return ssq::SuperellipticCurve(n, ssq::DensePoly(ssq::PrimeField(p), std::span<const std::int64_t>(f)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Superspecial plane quintics over finite fields";

  auto base = py::register_exception<ssq::Error>(m, "Error");
  py::register_exception<ssq::InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<ssq::PochhammerDivisionByZero>(m, "PochhammerDivisionByZero", base.ptr());
  py::register_exception<ssq::InvariantViolation>(m, "InvariantViolation", base.ptr());

  m.def("is_prime", &ssq::is_prime, py::arg("n"));
  m.def("primes_in_range", &ssq::primes_in_range, py::arg("lo"), py::arg("hi"));

  m.def("count_z10", [](std::uint64_t p) { return as_dict(ssq::count_z10(ssq::PrimeField(p))); }, py::arg("p"));
  m.def("count_z8", [](std::uint64_t p) { return as_dict(ssq::count_z8(ssq::PrimeField(p))); }, py::arg("p"));
  m.def("z10_closed_form", &ssq::z10_closed_form, py::arg("p"));
  m.def("g_poly_z10", [](std::uint64_t p) { return residues(ssq::g_poly_z10(ssq::PrimeField(p))); }, py::arg("p"),
        "Coefficients of G(lambda), constant term first.");
  m.def("g_poly_z8", [](std::uint64_t p) { return residues(ssq::g_poly_z8(ssq::PrimeField(p))); }, py::arg("p"));

  m.def(
      "fixed_type_is_superspecial",
      [](int type, std::uint64_t p) { return ssq::fixed_type_is_superspecial(fixed_family(type), p); },
      py::arg("type"), py::arg("p"));
  m.def("hurwitz_st", &ssq::hurwitz_st, py::arg("p"), py::arg("i"), py::arg("j"));

  m.def(
      "truncated_hg",
      [](std::tuple<std::int64_t, std::int64_t> a, std::tuple<std::int64_t, std::int64_t> b,
         std::tuple<std::int64_t, std::int64_t> c, std::int64_t d, std::uint64_t p) {
        auto q = [](const auto& t) { return ssq::RationalParam(std::get<0>(t), std::get<1>(t)); };
        return residues(ssq::truncated_hg({q(a), q(b), q(c), d}, ssq::PrimeField(p)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("p"),
      "Parameters are (numerator, denominator) pairs.");

  m.def(
      "oracle",
      [](int n, const std::vector<std::int64_t>& f, std::uint64_t p) {
        const ssq::OracleReport r = ssq::oracle_report(make_curve(n, f, p));
        std::vector<std::tuple<int, int, int, int>> w;
        for (const auto& t : r.witnesses) w.emplace_back(t.i, t.j, t.h, t.k);
        return py::make_tuple(r.superspecial, w);
      },
      py::arg("n"), py::arg("f"), py::arg("p"),
      "Coefficient test for y^n = f(x); returns (superspecial, witnesses (i, j, h, k)).");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = ssq::cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
