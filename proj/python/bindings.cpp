#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "confblocks/cb.hpp"
#include "confblocks/cli.hpp"
#include "confblocks/nefgeo.hpp"
#include "confblocks/qgrass.hpp"
#include "confblocks/schur.hpp"

namespace py = pybind11;
using namespace confblocks;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::str(to_string(x))); }

py::object to_py(const Rational& x) {
  static const auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*fraction)(to_py(BigInt(boost::multiprecision::numerator(x))),
                  to_py(BigInt(boost::multiprecision::denominator(x))));
}

// A weight is either text ("2w1+w3", "[3,1,1]") or a list of row lengths.
SlWeight to_weight(py::handle obj, int r) {
  if (py::isinstance<py::str>(obj)) return parse_weight(obj.cast<std::string>(), r);
  return SlWeight(r, Partition(obj.cast<std::vector<int>>()));
}

std::vector<SlWeight> to_weights(const py::sequence& seq, int r) {
  std::vector<SlWeight> out;
  for (auto item : seq) out.push_back(to_weight(item, r));
  return out;
}

std::vector<std::string> names(const std::vector<SlWeight>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ranks, levels and degrees of type-A conformal block bundles on genus-zero curves";
  m.attr("__version__") = cli::kVersion;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def(
      "parse_weight", [](const std::string& text, int r) { return parse_weight(text, r).diagram().parts(); },
      py::arg("text"), py::arg("r"), "Normalized diagram of a weight of sl_{r+1}.");
  m.def(
      "weight_name", [](py::handle w, int r) { return to_weight(w, r).to_string(); }, py::arg("weight"), py::arg("r"));
  m.def(
      "dual", [](py::handle w, int r) { return dual_star(to_weight(w, r)).diagram().parts(); }, py::arg("weight"),
      py::arg("r"));
  m.def(
      "transpose", [](py::handle w, int r, int level) { return transpose(to_weight(w, r), level).diagram().parts(); },
      py::arg("weight"), py::arg("r"), py::arg("level"));

  m.def(
      "lr_coefficient",
      [](std::vector<int> lam, std::vector<int> mu, std::vector<int> nu) {
        return lr_coefficient(Partition(lam), Partition(mu), Partition(nu));
      },
      py::arg("lam"), py::arg("mu"), py::arg("nu"));
  m.def(
      "coinvariant_rank", [](int r, const py::sequence& ws) { return to_py(coinvariant_rank(r, to_weights(ws, r))); },
      py::arg("r"), py::arg("weights"));
  m.def(
      "invariant_oracle",
      [](int r, const py::sequence& ws, std::uint64_t capacity) {
        return to_py(invariant_oracle(r, to_weights(ws, r), capacity));
      },
      py::arg("r"), py::arg("weights"), py::arg("capacity") = kDefaultOracleCapacity);

  m.def(
      "rim_hook_reduce",
      [](std::vector<int> p, int k, int n) -> py::object {
        const auto red = rim_hook_reduce(Partition(p), GrassmannBox(k, n));
        if (!red) return py::none();
        return py::make_tuple(red->remainder.parts(), red->degree, red->sign);
      },
      py::arg("partition"), py::arg("k"), py::arg("n"), "(remainder, q-degree, sign), or None when the class vanishes.");
  m.def(
      "gw_invariant",
      [](int k, int n, const std::vector<std::vector<int>>& classes, int degree) {
        std::vector<Partition> ps(classes.begin(), classes.end());
        return to_py(gw_invariant(GrassmannBox(k, n), ps, degree));
      },
      py::arg("k"), py::arg("n"), py::arg("classes"), py::arg("degree"));

  m.def(
      "cb_rank",
      [](int r, int level, const py::sequence& ws) { return to_py(cb_rank(BlockSetup(r, level, to_weights(ws, r)))); },
      py::arg("r"), py::arg("level"), py::arg("weights"));
  m.def(
      "witten_rank",
      [](int r, int level, const py::sequence& ws) { return to_py(witten_rank(BlockSetup(r, level, to_weights(ws, r)))); },
      py::arg("r"), py::arg("level"), py::arg("weights"));
  m.def(
      "fusion_coefficient",
      [](int r, int level, py::handle a, py::handle b, py::handle c) {
        return to_py(fusion_coefficient(r, level, to_weight(a, r), to_weight(b, r), to_weight(c, r)));
      },
      py::arg("r"), py::arg("level"), py::arg("a"), py::arg("b"), py::arg("c"));
  m.def(
      "kac_walton_fusion",
      [](int r, int level, py::handle a, py::handle b, py::handle c) {
        return to_py(kac_walton_fusion(r, level, to_weight(a, r), to_weight(b, r), to_weight(c, r)));
      },
      py::arg("r"), py::arg("level"), py::arg("a"), py::arg("b"), py::arg("c"));
  m.def(
      "critical_level",
      [](int r, const py::sequence& ws) -> py::object {
        const auto c = critical_level(r, to_weights(ws, r));
        return c ? py::object(py::int_(*c)) : py::object(py::none());
      },
      py::arg("r"), py::arg("weights"));
  m.def(
      "theta_level", [](int r, const py::sequence& ws) { return to_py(theta_level(r, to_weights(ws, r))); },
      py::arg("r"), py::arg("weights"));
  m.def(
      "conformal_weight",
      [](int r, int level, py::handle w) { return to_py(conformal_weight(r, level, to_weight(w, r))); }, py::arg("r"),
      py::arg("level"), py::arg("weight"));

  m.def(
      "vanishing_report",
      [](int r, int level, const py::sequence& ws) {
        const auto rep = vanishing_report(BlockSetup(r, level, to_weights(ws, r)));
        py::dict d;
        d["critical_level"] = rep.critical_level ? py::object(py::int_(*rep.critical_level)) : py::object(py::none());
        d["theta_level"] = to_py(rep.theta_level);
        d["above_critical"] = rep.above_critical;
        d["above_theta"] = rep.above_theta;
        d["rank_classical"] = to_py(rep.rank_classical);
        d["rank_cb"] = to_py(rep.rank_cb);
        d["ranks_equal"] = rep.ranks_equal;
        return d;
      },
      py::arg("r"), py::arg("level"), py::arg("weights"));
  m.def(
      "partner",
      [](int r, int level, const py::sequence& ws, bool force) {
        const auto p = partner(BlockSetup(r, level, to_weights(ws, r)), force);
        py::dict d;
        d["r"] = p.partner.r();
        d["level"] = p.partner.level();
        d["weights"] = names(p.partner.weights());
        d["rank_source"] = to_py(p.rank_source);
        d["rank_partner"] = to_py(p.rank_partner);
        d["rank_classical"] = to_py(p.rank_classical);
        d["identity_holds"] = p.identity_holds;
        return d;
      },
      py::arg("r"), py::arg("level"), py::arg("weights"), py::arg("force") = false);
  m.def(
      "factorization_rank",
      [](int r, int level, const py::sequence& ws, const std::vector<int>& subset) {
        return to_py(factorization_rank(BlockSetup(r, level, to_weights(ws, r)), subset));
      },
      py::arg("r"), py::arg("level"), py::arg("weights"), py::arg("subset"), "Subset indices are 0-based.");
  m.def(
      "degree_m04",
      [](int r, int level, const py::sequence& ws) {
        const auto d = degree_m04(r, level, to_weights(ws, r));
        py::dict out;
        out["degree"] = to_py(d.degree);
        out["rank"] = to_py(d.rank);
        out["bulk_term"] = to_py(d.bulk_term);
        py::list pairings;
        for (const auto& t : d.pairing_terms) pairings.append(to_py(t));
        out["pairing_terms"] = pairings;
        return out;
      },
      py::arg("r"), py::arg("level"), py::arg("weights"));

  m.def(
      "fcurves", [](int n) {
        std::vector<std::string> out;
        for (const auto& f : FCurve::all(n)) out.push_back(f.to_string());
        return out;
      },
      py::arg("n"), "Every F-curve on n points as '1|2|3|4,5'.");
  m.def(
      "contracts",
      [](int r, int level, const py::sequence& ws, const std::string& curve, const std::string& mode) {
        const auto weights = to_weights(ws, r);
        const FCurve f = FCurve::parse(curve, static_cast<int>(weights.size()));
        if (mode == "theta") return contracts_theta(level, weights, f).contracts;
        if (mode != "typeA") throw ParseError("mode must be 'typeA' or 'theta'");
        return contracts_type_a(r, level, weights, f).contracts;
      },
      py::arg("r"), py::arg("level"), py::arg("weights"), py::arg("curve"), py::arg("mode") = "typeA");
  m.def(
      "hassett_weights",
      [](int r, int level, const py::sequence& ws, const std::string& mode) {
        const auto weights = to_weights(ws, r);
        if (mode != "typeA" && mode != "theta") throw ParseError("mode must be 'typeA' or 'theta'");
        const HassettWeights a =
            mode == "theta" ? hassett_weights_theta(level, weights) : hassett_weights_type_a(r, level, weights);
        py::list out;
        for (const auto& x : a.weights()) out.append(to_py(x));
        return out;
      },
      py::arg("r"), py::arg("level"), py::arg("weights"), py::arg("mode") = "typeA");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
