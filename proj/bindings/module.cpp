// Python bindings for the main operations: Todd power series, generalized
// Dedekind sums, zeta values of real quadratic irrationalities, cone
// classification, negative-regular continued fractions, and the numeric
// theta-fit oracle. Exact rationals cross the boundary as
// fractions.Fraction; arbitrary-precision integers as Python int.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "toddzeta/bseq.hpp"
#include "toddzeta/cone2d.hpp"
#include "toddzeta/contfrac.hpp"
#include "toddzeta/dedekind.hpp"
#include "toddzeta/oracle.hpp"
#include "toddzeta/quadfield.hpp"
#include "toddzeta/toddseries.hpp"
#include "toddzeta/zetavalues.hpp"

namespace py = pybind11;

namespace {

using toddzeta::BSeq;
using toddzeta::QuadForm;
using toddzeta::cone2d::Cone2D;
using toddzeta::exactmath::Int;
using toddzeta::exactmath::Rat;

py::object to_fraction(const Rat& r) {
  py::object fraction_type =
      py::module_::import("fractions").attr("Fraction");
  return fraction_type(toddzeta::exactmath::to_string(r));
}

py::object to_pyint(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

Int to_int(long long v) { return Int(static_cast<long>(v)); }

BSeq to_bseq(const std::vector<long long>& entries) {
  std::vector<Int> es;
  es.reserve(entries.size());
  for (long long e : entries) es.push_back(to_int(e));
  return BSeq(std::move(es));
}

toddzeta::dedekind::ToddMethod parse_todd_method(const std::string& name) {
  if (name == "cf") return toddzeta::dedekind::ToddMethod::cf;
  if (name == "ppd") return toddzeta::dedekind::ToddMethod::ppd;
  throw py::value_error("method must be 'cf' or 'ppd'");
}

py::dict series_dict(const toddzeta::exactmath::BiSeries& s) {
  py::dict out;
  for (const auto& [ij, c] : s.terms())
    out[py::make_tuple(ij.first, ij.second)] = to_fraction(c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact Todd power series of 2D lattice cones, generalized Dedekind "
      "sums, and zeta values of real quadratic irrationalities.";

  m.def(
      "todd",
      [](long long p, long long q, int degree, const std::string& method) {
        toddzeta::toddseries::ToddSeries t =
            parse_todd_method(method) == toddzeta::dedekind::ToddMethod::cf
                ? toddzeta::toddseries::todd_cf(to_int(p), to_int(q), degree)
                : toddzeta::toddseries::todd_ppd(to_int(p), to_int(q),
                                                 degree);
        return series_dict(t.series);
      },
      py::arg("p"), py::arg("q"), py::arg("degree"), py::arg("method") = "cf",
      "Todd series of the cone of type (p, q) as {(i, j): Fraction}.");

  m.def(
      "todd_str",
      [](long long p, long long q, int degree, const std::string& method) {
        toddzeta::toddseries::ToddSeries t =
            parse_todd_method(method) == toddzeta::dedekind::ToddMethod::cf
                ? toddzeta::toddseries::todd_cf(to_int(p), to_int(q), degree)
                : toddzeta::toddseries::todd_ppd(to_int(p), to_int(q),
                                                 degree);
        return t.series.str();
      },
      py::arg("p"), py::arg("q"), py::arg("degree"), py::arg("method") = "cf",
      "Todd series as human-readable text.");

  m.def(
      "dedekind",
      [](int i, int j, long long p, long long q, const std::string& method) {
        Rat v;
        if (method == "direct")
          v = toddzeta::dedekind::dedekind_direct(i, j, to_int(p), to_int(q));
        else if (method == "todd")
          v = toddzeta::dedekind::dedekind_via_todd(i, j, to_int(p),
                                                    to_int(q));
        else
          throw py::value_error("method must be 'direct' or 'todd'");
        return to_fraction(v);
      },
      py::arg("i"), py::arg("j"), py::arg("p"), py::arg("q"),
      py::arg("method") = "direct",
      "Generalized Dedekind sum s_{i,j}(p, q) as a Fraction.");

  m.def(
      "classical_dedekind",
      [](long long p, long long q) {
        return to_fraction(
            toddzeta::dedekind::classical_dedekind(to_int(p), to_int(q)));
      },
      py::arg("p"), py::arg("q"),
      "Classical Dedekind sum s(p, q) = s_{1,1}(-p, q).");

  m.def(
      "zeta",
      [](const std::vector<long long>& b, int n, const std::string& route) {
        BSeq seq = to_bseq(b);
        if (route == "field")
          return to_fraction(toddzeta::zetavalues::zeta_field(seq, n));
        if (route != "general")
          throw py::value_error("route must be 'field' or 'general'");
        toddzeta::quadfield::QuadFieldData d =
            toddzeta::quadfield::build_quadfield(seq);
        return to_fraction(toddzeta::zetavalues::zeta_general(
            toddzeta::quadfield::tau_cone(d),
            toddzeta::quadfield::q_b_form(d), n));
      },
      py::arg("b"), py::arg("n"), py::arg("route") = "field",
      "Zeta value at -n of the periodic sequence b, as a Fraction.");

  m.def(
      "zeta_zero",
      [](const std::vector<long long>& b) {
        return to_fraction(toddzeta::zetavalues::zeta_zero(to_bseq(b)));
      },
      py::arg("b"), "Closed form (1/12) sum(b_i - 3) for the value at 0.");

  m.def(
      "error_term",
      [](const std::vector<long long>& b, int n) {
        return to_fraction(toddzeta::zetavalues::error_term(to_bseq(b), n));
      },
      py::arg("b"), py::arg("n"),
      "Closing error term of the cyclic formula; identically zero.");

  m.def(
      "classify",
      [](long long x1, long long y1, long long x2, long long y2) {
        Cone2D cone = toddzeta::cone2d::make_cone(
            {to_int(x1), to_int(y1)}, {to_int(x2), to_int(y2)});
        toddzeta::cone2d::ConeType t = toddzeta::cone2d::classify(cone);
        return py::make_tuple(to_pyint(t.p), to_pyint(t.q));
      },
      py::arg("x1"), py::arg("y1"), py::arg("x2"), py::arg("y2"),
      "Lattice type (p, q) of the cone spanned by (x1, y1) and (x2, y2).");

  m.def(
      "ncf_expand",
      [](long long q, long long p) {
        std::vector<long long> out;
        for (const Int& e :
             toddzeta::contfrac::ncf_expand(to_int(q), to_int(p)).entries)
          out.push_back(e.get_si());
        return out;
      },
      py::arg("q"), py::arg("p"),
      "Negative-regular continued fraction of q/p (entries >= 2).");

  m.def(
      "ncf_eval",
      [](const std::vector<long long>& entries) {
        std::vector<Int> es;
        es.reserve(entries.size());
        for (long long e : entries) es.push_back(to_int(e));
        return to_fraction(toddzeta::contfrac::ncf_eval(es));
      },
      py::arg("entries"),
      "Value of the negative-regular continued fraction as a Fraction.");

  m.def(
      "check_reciprocity",
      [](long long p, long long q, int degree) {
        toddzeta::toddseries::IdentityReport r =
            toddzeta::toddseries::check_reciprocity(to_int(p), to_int(q),
                                                    degree);
        return py::make_tuple(r.ok, r.detail);
      },
      py::arg("p"), py::arg("q"), py::arg("degree"),
      "Exact two-cone reciprocity check; returns (ok, detail).");

  m.def(
      "fit_zeta",
      [](const std::vector<long long>& b, int n_max) {
        toddzeta::oracle::FitResult fit =
            toddzeta::oracle::fit_zeta(to_bseq(b), n_max);
        std::vector<double> hats;
        for (int n = 0; n <= n_max; ++n) hats.push_back(fit.zeta_hat(n));
        py::dict out;
        out["zeta_hat"] = hats;
        out["coeff"] = fit.coeff;
        out["residual_rms"] = fit.residual_rms;
        out["well_conditioned"] = fit.well_conditioned;
        return out;
      },
      py::arg("b"), py::arg("n_max"),
      "Floating-point theta-sum fit; zeta_hat[n] estimates the value at -n.");
}
