#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "kentucky/counting.hpp"
#include "kentucky/decompose.hpp"
#include "kentucky/fibonacci_poly.hpp"
#include "kentucky/gaps.hpp"
#include "kentucky/sampler.hpp"
#include "kentucky/sequence.hpp"
#include "kentucky/stats.hpp"

namespace py = pybind11;
using namespace kentucky;

// GMP values cross the boundary as python ints / fractions.Fraction.
namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
public:
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = mpz_class(py::str(src).cast<std::string>(), 10);
        return true;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<mpq_class> {
public:
    PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyFloat_Check(src.ptr())) {  // doubles are exact dyadic rationals
            value = mpq_class(PyFloat_AsDouble(src.ptr()));
            return true;
        }
        if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
        const mpz_class num(py::str(src.attr("numerator")).cast<std::string>(), 10);
        const mpz_class den(py::str(src.attr("denominator")).cast<std::string>(), 10);
        value = mpq_class(num, den);
        value.canonicalize();
        return true;
    }

    static handle cast(const mpq_class& v, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        py::object num = py::reinterpret_steal<py::object>(
            PyLong_FromString(v.get_num().get_str().c_str(), nullptr, 10));
        py::object den = py::reinterpret_steal<py::object>(
            PyLong_FromString(v.get_den().get_str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

std::vector<Nat> sequence_terms(std::size_t count) {
    SequenceTable t(count);
    return {t.terms().begin(), t.terms().end()};
}

py::dict decomposition_dict(const SequenceTable& t, const Decomposition& d) {
    py::dict out;
    out["value"] = d.value;
    out["indices"] = d.indices;
    std::vector<Nat> terms;
    std::vector<std::size_t> bins;
    for (std::size_t l : d.indices) {
        terms.push_back(t.term(l));
        bins.push_back(SequenceTable::bin_of(l));
    }
    out["terms"] = terms;
    out["bins"] = bins;
    out["gaps"] = gaps_of(d);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic for the Kentucky-2 ((1,2)-Generacci) sequence";

    // sequence
    m.def("terms", &sequence_terms, py::arg("count"),
          "First `count` Kentucky-2 terms via the recurrence");
    m.def("term_closed_form", &term_closed_form, py::arg("n"),
          "a_n from the closed forms 2^{n/2} / (2^{(n+1)/2+1} + (-1)^{(n+1)/2})/3");
    m.def("build_constructive", &build_constructive, py::arg("skip"), py::arg("bin_size"),
          py::arg("count"), "First terms of the general (s,b) sequence by adjoining");

    // decompositions
    m.def("is_legal",
          [](const std::vector<std::size_t>& indices) { return is_legal(indices); },
          py::arg("indices"));
    m.def("decompose",
          [](const Nat& value) {
              SequenceTable t;
              return decomposition_dict(t, decompose(t, value));
          },
          py::arg("value"), "Unique legal decomposition as a dict");
    m.def("enumerate_all",
          [](const Nat& value, std::size_t max_index) {
              SequenceTable t;
              std::vector<std::vector<std::size_t>> out;
              for (const auto& d : enumerate_all(t, value, max_index)) out.push_back(d.indices);
              return out;
          },
          py::arg("value"), py::arg("max_index"),
          "Every legal index set over a_1..a_max_index summing to value");

    // summand counting
    m.def("summand_count", &summand_count, py::arg("n"), py::arg("k"));
    m.def("summand_count_closed", &summand_count_closed, py::arg("n"), py::arg("k"));
    m.def("summand_count_row", &summand_count_row, py::arg("n"));
    m.def("summand_count_row_gf", &summand_count_row_gf, py::arg("n"));
    m.def("fibonacci_poly", &fibonacci_poly, py::arg("n"), py::arg("x"));
    m.def("fibonacci_poly_radical", &fibonacci_poly_radical, py::arg("n"), py::arg("x"));
    m.def("fibonacci_poly_derivative", &fibonacci_poly_derivative, py::arg("n"), py::arg("x"));
    m.def("summand_poly", &summand_poly, py::arg("n"), "Coefficients of g_n(y)");
    m.def("summand_poly_fib", &summand_poly_fib, py::arg("n"), py::arg("y"));
    m.def("summand_poly_radical", &summand_poly_radical, py::arg("n"), py::arg("y"));

    // moments and normal-convergence diagnostics
    m.def("exact_mean", &exact_mean, py::arg("n"));
    m.def("exact_variance", &exact_variance, py::arg("n"));
    m.def("variance_closed_form", &variance_closed_form, py::arg("n"));
    m.def("asymptotic_moments", &asymptotic_moments, py::arg("n"));
    m.def("gaussian_diagnostics",
          [](std::size_t n, const std::vector<double>& t_grid) {
              const auto s = gaussian_diagnostics(n, t_grid);
              py::dict out;
              out["n"] = s.n;
              out["mean"] = s.mean;
              out["variance"] = s.variance;
              out["pmf"] = s.pmf;
              out["ks_to_normal"] = s.ks_to_normal;
              out["mgf_log_residual"] = s.mgf_log_residual;
              return out;
          },
          py::arg("n"), py::arg("t_grid") = std::vector<double>{-2.0, -1.0, 1.0, 2.0});

    // gaps
    m.def("gap_count_formula", &gap_count_formula, py::arg("n"), py::arg("g"));
    m.def("total_gap_count", &total_gap_count, py::arg("n"));
    m.def("gap_histogram",
          [](std::size_t n, const std::string& method) {
              GapHistogram h;
              if (method == "formula") {
                  h = gap_histogram_formula(n);
              } else if (method == "enumerate") {
                  SequenceTable t;
                  h = gap_histogram_bruteforce(t, n);
              } else {
                  throw std::invalid_argument("method must be 'formula' or 'enumerate'");
              }
              py::dict out;
              for (const auto& [g, c] : h.counts) out[py::int_(g)] = c;
              return out;
          },
          py::arg("n"), py::arg("method") = "formula");
    m.def("gap_probability", &gap_probability, py::arg("n"), py::arg("g"));
    m.def("gap_probability_limit", &gap_probability_limit, py::arg("g"));

    // sampling
    py::class_<SplitMix64>(m, "SplitMix64")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("next", &SplitMix64::next);
    m.def("uniform_below", &uniform_below, py::arg("bound"), py::arg("rng"));
    m.def("run_experiment",
          [](std::uint64_t count, const Nat& bound, std::uint64_t seed, unsigned workers) {
              SampleConfig cfg;
              cfg.count = count;
              cfg.bound = bound;
              cfg.seed = seed;
              cfg.workers = workers;
              SequenceTable t;
              const auto r = run_experiment(cfg, t);
              py::dict out;
              out["empirical_mean"] = r.empirical_mean;
              out["empirical_std"] = r.empirical_std;
              out["predicted_mean"] = r.predicted_mean;
              out["predicted_std"] = r.predicted_std;
              out["n_effective"] = r.n_effective;
              py::dict hist;
              for (const auto& [k, c] : r.histogram) hist[py::int_(k)] = c;
              out["histogram"] = hist;
              return out;
          },
          py::arg("count"), py::arg("bound"), py::arg("seed") = 0, py::arg("workers") = 1);

#ifdef KENTUCKY2_VERSION
    m.attr("__version__") = KENTUCKY2_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
