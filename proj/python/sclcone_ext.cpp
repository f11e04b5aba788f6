#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sclcone/arc_graph.hpp"
#include "sclcone/chain.hpp"
#include "sclcone/disk_enum.hpp"
#include "sclcone/family.hpp"
#include "sclcone/heisenberg.hpp"
#include "sclcone/scl_engine.hpp"

namespace py = pybind11;
using namespace sclcone;

namespace {

py::object fraction(const Rational& q) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_string(q));
}

py::object maybe_fraction(const std::optional<Rational>& q) { return q ? fraction(*q) : py::none(); }

Rational from_python(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

Chain make_chain(const std::string& text, int order_a, int order_b, const std::optional<std::string>& gens) {
  std::array<char, 2> names{};
  if (gens) {
    if (gens->size() != 2) throw std::invalid_argument("gens takes two letters, e.g. 'ab'");
    names = {(*gens)[0], (*gens)[1]};
  } else {
    names = infer_generators(text);
  }
  return parse_chain(text, {FactorSpec{names[0], order_a}, FactorSpec{names[1], order_b}});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact stable commutator length in free products of two cyclic groups";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError");

  m.def(
      "normalize",
      [](const std::string& chain, int order_a, int order_b, std::optional<std::string> gens) {
        return render(normalize(make_chain(chain, order_a, order_b, gens)));
      },
      py::arg("chain"), py::arg("order_a") = 0, py::arg("order_b") = 0, py::arg("gens") = py::none());

  m.def(
      "compute_scl",
      [](const std::string& chain, int order_a, int order_b, std::optional<std::string> gens,
         const std::string& strategy) {
        SclOptions opts;
        if (strategy == "enumerate") opts.strategy = Strategy::Enumerate;
        else if (strategy != "cg") throw std::invalid_argument("strategy must be 'cg' or 'enumerate'");
        SclResult r;
        {
          py::gil_scoped_release release;
          r = compute_scl(make_chain(chain, order_a, order_b, gens), opts);
        }
        py::dict out;
        out["status"] = to_string(r.status);
        out["value"] = r.status == SclStatus::Infinite ? py::none() : fraction(r.value);
        out["chain"] = render(r.chain);
        out["certificate_ok"] = r.certificate_ok;
        out["warnings"] = r.warnings;
        out["json"] = to_json(r);
        return out;
      },
      py::arg("chain"), py::arg("order_a") = 0, py::arg("order_b") = 0, py::arg("gens") = py::none(),
      py::arg("strategy") = "cg");

  m.def(
      "disk_generators",
      [](const std::string& chain, int order_a, int order_b, int factor, std::optional<std::string> gens) {
        Chain c = normalize(make_chain(chain, order_a, order_b, gens));
        ArcSystem sys(c);
        auto set = enumerate_disk_generators(sys, factor, sys.order(factor));
        std::vector<std::string> labels;
        for (std::size_t t = 0; t < sys.turn_count(factor); ++t) labels.push_back(sys.turn_label(factor, static_cast<int>(t)));
        return py::make_tuple(labels, set.generators);
      },
      py::arg("chain"), py::arg("order_a"), py::arg("order_b"), py::arg("factor") = 0, py::arg("gens") = py::none());

  m.def(
      "scan",
      [](const std::string& chain, std::vector<int> orders_a, std::vector<int> orders_b, int jobs) {
        ScanTable t;
        Chain c = make_chain(chain, 0, 0, std::nullopt);
        {
          py::gil_scoped_release release;
          t = scan(c, std::move(orders_a), std::move(orders_b), jobs);
        }
        py::list rows;
        for (const auto& r : t.rows)
          rows.append(py::make_tuple(r.order_a, r.order_b, r.status,
                                     r.status == "finite" || r.status == "empty" ? fraction(r.value) : py::none()));
        return rows;
      },
      py::arg("chain"), py::arg("orders_a"), py::arg("orders_b"), py::arg("jobs") = 1);

  m.def(
      "fit",
      [](const std::vector<std::pair<int, py::object>>& points, int max_period, int max_degree) {
        ScanTable t;
        for (const auto& [o, v] : points) t.rows.push_back({o, 0, "finite", from_python(v), 0, ""});
        auto report = detect_congruence_pattern(t, 0, max_period, max_degree);
        py::list out;
        for (const auto& f : report.fits)
          out.append(py::dict(py::arg("period") = f.period, py::arg("residue") = f.residue, py::arg("first") = f.first,
                              py::arg("last") = f.last, py::arg("formula") = f.f.render()));
        return out;
      },
      py::arg("points"), py::arg("max_period") = 6, py::arg("max_degree") = 2,
      "Exact congruence-class rational fits of (order, value) pairs.");

  m.def("formula_product",
        [](std::int64_t i, std::int64_t j, int ka, int kb) { return maybe_fraction(formula_product(i, j, {ka, kb})); });
  m.def("formula_commutator", [](int ka, int kb) { return fraction(formula_commutator({ka, kb})); });
  m.def("formula_self_product", [](std::int64_t p, std::int64_t q) { return maybe_fraction(formula_self_product(p, q)); });
  m.def("walker_word", [](const std::string& family) {
    auto f = parse_walker_family(family);
    if (!f) throw std::invalid_argument("unknown family " + family);
    return walker_word(*f);
  });
  m.def("walker_reference", [](const std::string& family, int o1, int o2) {
    auto f = parse_walker_family(family);
    if (!f) throw std::invalid_argument("unknown family " + family);
    return maybe_fraction(walker_reference(*f, o1, o2));
  });

  m.def("enumerate_words", &enumerate_words, py::arg("u"), py::arg("v"), py::arg("max_length") = 8);
  m.def("word_exponent", &word_exponent);
  m.def("suv_bruteforce", &suv_bruteforce, py::arg("u"), py::arg("v"), py::arg("max_length") = 8);
  m.def("suv_formula", [](int u, int v) -> py::object {
    auto r = suv_formula(u, v);
    if (!r) return py::none();
    return py::make_tuple(r->lo, r->hi);
  });
  m.def("disk_region", &disk_region);
}
