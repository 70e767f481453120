#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "biparam/chain.hpp"
#include "biparam/error.hpp"
#include "biparam/goursat.hpp"
#include "biparam/inversion.hpp"
#include "biparam/resolvent.hpp"
#include "biparam/waiting.hpp"
#include "biparam/warranty.hpp"

namespace py = pybind11;
using namespace biparam;

namespace {

template <class T>
py::array_t<T> to_numpy(const SquareMatrix<T>& m) {
  const auto n = static_cast<py::ssize_t>(m.size());
  py::array_t<T> out({n, n});
  auto v = out.template mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i)
    for (py::ssize_t j = 0; j < n; ++j) v(i, j) = m(i, j);
  return out;
}

QueryPoint qp(std::pair<double, double> p) { return {p.first, p.second}; }

InversionConfig make_config(int euler_terms, int digits, const std::string& order) {
  InversionConfig cfg;
  cfg.eulerTerms = euler_terms;
  cfg.targetDecimalDigits = digits;
  if (order == "usage-first")
    cfg.innerOuterOrder = InversionOrder::UsageFirst;
  else if (order == "time-first")
    cfg.innerOuterOrder = InversionOrder::TimeFirst;
  else
    throw Error(ErrorCode::InvalidArgument, "order must be 'usage-first' or 'time-first'");
  cfg.validate();
  return cfg;
}

py::dict expense_dict(const ExpenseReport& r) {
  py::dict d;
  d["ewe"] = r.ewe;
  d["probabilities"] = r.perRegionProbabilities;
  d["contributions"] = r.perRegionContributions;
  return d;
}

}  // namespace

PYBIND11_MODULE(_biparam, m) {
  m.doc() = "Markov chains indexed by time and usage";

  static py::exception<Error> error_type(m, "BiparamError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("code") = to_string(e.code());
      inst.attr("numerical") = is_numerical(e.code());
      inst.attr("row") = e.row() ? py::cast(*e.row()) : py::none();
      inst.attr("col") = e.col() ? py::cast(*e.col()) : py::none();
      inst.attr("value") = e.value() ? py::cast(*e.value()) : py::none();
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  py::class_<InversionConfig>(m, "InversionConfig")
      .def(py::init(&make_config), py::arg("euler_terms") = 35, py::arg("digits") = 8,
           py::arg("order") = "usage-first")
      .def_readonly("euler_terms", &InversionConfig::eulerTerms)
      .def_readonly("digits", &InversionConfig::targetDecimalDigits)
      .def_property_readonly("order", [](const InversionConfig& c) {
        return c.innerOuterOrder == InversionOrder::UsageFirst ? "usage-first" : "time-first";
      });

  py::class_<GeneratorMatrix>(m, "GeneratorMatrix")
      .def_property_readonly("states", &GeneratorMatrix::states)
      .def_property_readonly("matrix", [](const GeneratorMatrix& g) { return to_numpy(g.matrix()); })
      .def("__repr__", [](const GeneratorMatrix& g) {
        return "<GeneratorMatrix states=" + std::to_string(g.states()) + ">";
      });

  py::class_<TransitionMatrix>(m, "TransitionMatrix")
      .def_property_readonly("p", [](const TransitionMatrix& t) { return to_numpy(t.p); })
      .def_property_readonly("t", [](const TransitionMatrix& t) { return t.at.t; })
      .def_property_readonly("u", [](const TransitionMatrix& t) { return t.at.u; })
      .def_property_readonly("method", [](const TransitionMatrix& t) { return std::string(to_string(t.method)); })
      .def_readonly("range_warning", &TransitionMatrix::rangeWarning);

  m.def("validate_generator", py::overload_cast<const std::vector<std::vector<double>>&>(&validate_generator),
        py::arg("a"));

  m.def(
      "series_transition",
      [](const GeneratorMatrix& a, double t, double u, int max_terms, double rel_tol) {
        return series_transition(a, {t, u}, max_terms, rel_tol);
      },
      py::arg("a"), py::arg("t"), py::arg("u"), py::arg("max_terms") = kSeriesMaxTerms,
      py::arg("rel_tol") = kSeriesRelTol);

  m.def(
      "invert2d_matrix",
      [](const GeneratorMatrix& a, double t, double u, const InversionConfig& cfg) {
        return invert2d_matrix(a, {t, u}, cfg);
      },
      py::arg("a"), py::arg("t"), py::arg("u"), py::arg("config") = InversionConfig{});

  m.def(
      "invert2d_scalar",
      [](const std::function<Complex(Complex, Complex)>& k, double t, double u, const InversionConfig& cfg) {
        const ScalarTransform f = [&k](const TransformPoint& s) { return k(s.s1, s.s2); };
        return invert2d_scalar(f, {t, u}, cfg);
      },
      py::arg("k"), py::arg("t"), py::arg("u"), py::arg("config") = InversionConfig{},
      "k(s1, s2) -> complex is the double Laplace transform; returns its original at (t, u).");

  m.def(
      "resolvent_at",
      [](const GeneratorMatrix& a, Complex s1, Complex s2) { return to_numpy(resolvent_at(a, {s1, s2})); },
      py::arg("a"), py::arg("s1"), py::arg("s2"));

  py::class_<GoursatGrid>(m, "GoursatGrid")
      .def_property_readonly("h", &GoursatGrid::h)
      .def_property_readonly("k", &GoursatGrid::k)
      .def_property_readonly("nt", [](const GoursatGrid& g) { return g.spec().nt; })
      .def_property_readonly("nu", [](const GoursatGrid& g) { return g.spec().nu; })
      .def("node", [](const GoursatGrid& g, std::size_t i, std::size_t j) {
        if (i > g.spec().nt || j > g.spec().nu) throw Error(ErrorCode::OutOfDomain, "node index outside the grid");
        return to_numpy(g.node(i, j));
      })
      .def(
          "lookup", [](const GoursatGrid& g, double t, double u) { return grid_lookup(g, {t, u}); }, py::arg("t"),
          py::arg("u"));

  auto side_of = [](const std::string& s) {
    if (s == "backward") return KolmogorovSide::Backward;
    if (s == "forward") return KolmogorovSide::Forward;
    throw Error(ErrorCode::InvalidArgument, "side must be 'backward' or 'forward'");
  };

  m.def(
      "solve_goursat",
      [side_of](const GeneratorMatrix& a, double T, double U, std::size_t nt, std::size_t nu,
                const std::string& side) {
        return solve_goursat(a, GoursatSpec{T, U, nt, nu}, side_of(side));
      },
      py::arg("a"), py::arg("T"), py::arg("U"), py::arg("nt"), py::arg("nu"), py::arg("side") = "backward");

  m.def(
      "pde_transition",
      [side_of](const GeneratorMatrix& a, double t, double u, std::size_t nt, std::size_t nu, bool richardson,
                const std::string& side) { return pde_transition(a, {t, u}, nt, nu, richardson, side_of(side)); },
      py::arg("a"), py::arg("t"), py::arg("u"), py::arg("nt") = 400, py::arg("nu") = 400,
      py::arg("richardson") = false, py::arg("side") = "backward");

  m.def(
      "compute_transition",
      [](const GeneratorMatrix& a, double t, double u, const std::string& method, const InversionConfig& cfg,
         std::size_t nt, std::size_t nu, bool richardson) {
        SolverOptions o;
        o.method = parse_method(method);
        o.inversion = cfg;
        o.pdeTimeSteps = nt;
        o.pdeUsageSteps = nu;
        o.pdeRichardson = richardson;
        return compute_transition(a, {t, u}, o);
      },
      py::arg("a"), py::arg("t"), py::arg("u"), py::arg("method") = "series", py::arg("config") = InversionConfig{},
      py::arg("nt") = 400, py::arg("nu") = 400, py::arg("richardson") = false);

  m.def(
      "marginal_distribution",
      [](const std::vector<double>& initial, const TransitionMatrix& p) {
        return marginal_distribution(ProbabilityVector(initial), p).values();
      },
      py::arg("initial"), py::arg("p"));

  m.def(
      "survival",
      [](double lambda1, double lambda2, double t, double u) {
        return survival(WaitingRegionRates{0, lambda1, lambda2}, {t, u});
      },
      py::arg("lambda1"), py::arg("lambda2"), py::arg("t"), py::arg("u"));

  m.def(
      "factorization_residual",
      [](double lambda1, double lambda2, std::pair<double, double> p1, std::pair<double, double> p2) {
        return factorization_residual(WaitingRegionRates{0, lambda1, lambda2}, qp(p1), qp(p2));
      },
      py::arg("lambda1"), py::arg("lambda2"), py::arg("p1"), py::arg("p2"));
  m.def(
      "factorization_residual_of",
      [](const std::function<double(double, double)>& fbar, std::pair<double, double> p1,
         std::pair<double, double> p2) {
        return factorization_residual([&fbar](QueryPoint q) { return fbar(q.t, q.u); }, qp(p1), qp(p2));
      },
      py::arg("survival"), py::arg("p1"), py::arg("p2"));

  py::class_<WaitingDistribution>(m, "WaitingDistribution")
      .def_readonly("from_state", &WaitingDistribution::fromState)
      .def("density_transform", [](const WaitingDistribution& w, Complex s1, Complex s2) {
        return w.densityTransform({s1, s2});
      })
      .def("cdf_transform", [](const WaitingDistribution& w, Complex s1, Complex s2) {
        return w.cdfTransform({s1, s2});
      });

  m.def("extract_waiting_transforms", &extract_waiting_transforms, py::arg("a"));

  m.def(
      "waiting_cdf_at",
      [](const WaitingDistribution& w, double t, double u, const InversionConfig& cfg) {
        return waiting_cdf_at(w, {t, u}, cfg);
      },
      py::arg("w"), py::arg("t"), py::arg("u"), py::arg("config") = InversionConfig{});

  py::class_<WarrantyPolicy>(m, "WarrantyPolicy")
      .def_readonly("from_state", &WarrantyPolicy::fromState)
      .def_readonly("base_cost", &WarrantyPolicy::baseCost)
      .def_property_readonly("regions", [](const WarrantyPolicy& p) {
        py::list out;
        for (const auto& r : p.regions) out.append(py::make_tuple(r.tLimit, r.uLimit, r.cost));
        return out;
      });

  m.def(
      "validate_policy",
      [](const std::vector<std::tuple<double, double, double>>& regions, std::size_t from_state, double base_cost) {
        std::vector<CoverageRegion> rs;
        for (const auto& [t, u, c] : regions) rs.push_back({t, u, c});
        return validate_policy(std::move(rs), from_state, base_cost);
      },
      py::arg("regions"), py::arg("from_state") = 1, py::arg("base_cost") = 1.0,
      "regions: sequence of (t_limit, u_limit, cost), nested and increasing.");

  m.def(
      "expected_warranty_expense",
      [](const WarrantyPolicy& policy, const WaitingDistribution& g, const InversionConfig& cfg) {
        return expense_dict(expected_warranty_expense(policy, g, cfg));
      },
      py::arg("policy"), py::arg("g"), py::arg("config") = InversionConfig{});

  m.def(
      "ck_residual",
      [](const GeneratorMatrix& a, std::pair<double, double> p1, std::pair<double, double> p2,
         const std::string& method) {
        SolverOptions o;
        o.method = parse_method(method);
        return ck_residual(a, qp(p1), qp(p2), o);
      },
      py::arg("a"), py::arg("p1"), py::arg("p2"), py::arg("method") = "series");
}
