// Python bindings for the main operations: exact bound evaluation, the
// golden comparison table, construction export, and distance verification.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cdcodes/bounds.hpp"
#include "cdcodes/codefile.hpp"
#include "cdcodes/constructions.hpp"
#include "cdcodes/verify.hpp"

namespace py = pybind11;

namespace {

// arbitrary-precision values cross the boundary as Python ints
py::int_ big(const cdc::Int& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

cdc::CodeFamily family(const std::string& name, long q, long n, long k,
                       long delta) {
  if (name == "lifted-mrd") return cdc::lifted_mrd(q, n, k, delta);
  if (name == "parallel")
    return cdc::parallel(q, n, k, delta, cdc::coset_grmc(q, n, k, delta));
  if (name == "staircase")
    return cdc::multilevel(q, n, k, delta, cdc::lemma13_vectors(n, k, delta));
  if (name == "corollary3") return cdc::corollary3(q, n, k, delta);
  if (name == "theorem2") return cdc::theorem2(q, delta);
  throw std::invalid_argument("unknown construction '" + name + "'");
}

py::dict report_dict(const cdc::VerifyReport& rep) {
  py::dict d;
  d["mode"] = rep.mode;
  d["seed"] = rep.seed;
  d["pairs_checked"] = rep.pairs_checked;
  d["claimed"] = rep.claimed;
  d["min_distance_observed"] = rep.min_distance_observed;
  d["violations"] = rep.violations;
  d["formula_size"] = big(rep.formula_size);
  d["enumerated_size"] = big(rep.enumerated_size);
  d["pass"] = rep.pass();
  return d;
}

}  // namespace

PYBIND11_MODULE(_cdcodes, m) {
  m.doc() = "constant-dimension subspace code toolkit";

  m.def(
      "gaussian_binomial",
      [](long q, long n, long k) { return big(cdc::gaussian_binomial(q, n, k)); },
      py::arg("q"), py::arg("n"), py::arg("k"));

  m.def(
      "rank_distribution",
      [](long q, long mm, long n, long delta, long r) {
        return big(cdc::rank_distribution(q, mm, n, delta, r));
      },
      py::arg("q"), py::arg("m"), py::arg("n"), py::arg("delta"), py::arg("r"));

  m.def(
      "lower_bound",
      [](const std::string& which, long q, long n, long k, long delta) {
        return big(cdc::lower_bound(which, q, n, k, delta));
      },
      py::arg("which"), py::arg("q"), py::arg("n") = 0, py::arg("k") = 0,
      py::arg("delta") = 0);

  m.def(
      "family_size",
      [](const std::string& name, long q, long n, long k, long delta) {
        return big(family(name, q, n, k, delta).size());
      },
      py::arg("name"), py::arg("q"), py::arg("n") = 0, py::arg("k") = 0,
      py::arg("delta") = 0);

  m.def(
      "table1",
      [](const std::vector<int>& qs) {
        py::list out;
        for (const auto& r : cdc::table1(qs)) {
          py::dict d;
          d["q"] = r.q;
          d["n"] = r.n;
          d["d"] = r.d;
          d["k"] = r.k;
          d["family"] = r.family;
          d["computed_new"] = big(r.computed_new);
          d["computed_old"] = big(r.computed_old);
          d["computed_diff"] = big(r.computed_diff);
          d["printed_new"] = r.printed_new;
          d["printed_old"] = r.printed_old;
          d["printed_diff"] = r.printed_diff;
          d["ok"] = r.ok();
          out.append(d);
        }
        return out;
      },
      py::arg("qs") = std::vector<int>{});

  m.def(
      "ratio_report",
      [](long q) {
        cdc::BoundOracle oracle;
        auto r = cdc::ratio_remark3(q, oracle);
        py::dict d;
        d["decimal"] = r.decimal;
        d["provenance"] = r.provenance;
        d["meets_threshold"] = r.meets_094548;
        return d;
      },
      py::arg("q"));

  m.def(
      "construct_text",
      [](const std::string& name, long q, long n, long k, long delta,
         long long limit) {
        cdc::CodeFamily f = family(name, q, n, k, delta);
        std::vector<cdc::Subspace> subs;
        cdc::Int want = (limit < 0) ? f.size() : cdc::Int(limit);
        if (want > cdc::Int(cdc::default_budget()))
          throw std::runtime_error("enumeration exceeds budget; pass a limit");
        for (const auto& p : f.parts) {
          if (cdc::Int(subs.size()) >= want) break;
          for (cdc::Int i = 0; i < p.count && cdc::Int(subs.size()) < want; ++i)
            subs.push_back(p.member(i));
        }
        return cdc::render_codefile(f.q, f.n, f.k, subs);
      },
      py::arg("name"), py::arg("q"), py::arg("n") = 0, py::arg("k") = 0,
      py::arg("delta") = 0, py::arg("limit") = -1);

  m.def(
      "verify_text",
      [](const std::string& text, long distance) {
        cdc::CodeFile f = cdc::parse_codefile(text);
        return report_dict(cdc::verify_subspaces(f.subspaces, distance));
      },
      py::arg("text"), py::arg("distance"));

  m.def(
      "verify_construction",
      [](const std::string& name, long q, long n, long k, long delta,
         long distance, const std::string& mode, std::uint64_t seed,
         std::uint64_t samples) {
        cdc::CodeFamily f = family(name, q, n, k, delta);
        if (distance == 0) distance = f.min_dist;
        cdc::VerifyReport rep =
            (mode == "exhaustive")
                ? cdc::verify_cdc_exhaustive(f, distance)
                : cdc::verify_cdc_sampled(f, distance, seed, samples);
        return report_dict(rep);
      },
      py::arg("name"), py::arg("q"), py::arg("n") = 0, py::arg("k") = 0,
      py::arg("delta") = 0, py::arg("distance") = 0,
      py::arg("mode") = "exhaustive", py::arg("seed") = 1,
      py::arg("samples") = 100000);
}
