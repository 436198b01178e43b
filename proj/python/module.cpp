// Python bindings for the main operations: codec round trips, bounds,
// experiments and the container format.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sldc/bench.hpp"
#include "sldc/bounds.hpp"
#include "sldc/container.hpp"
#include "sldc/errors.hpp"
#include "sldc/speedlimit.hpp"

namespace py = pybind11;

namespace {

sldc::CodeParams make_params(std::uint64_t n, std::uint64_t r, std::uint64_t d,
                             std::uint64_t seed, std::uint64_t k_max) {
  return sldc::CodeParams{n, r, d, seed, k_max};
}

}  // namespace

PYBIND11_MODULE(_sldc, m) {
  m.doc() = "locally decodable compression of sparse binary sequences";

  py::register_exception<sldc::SearchCapExceeded>(m, "SearchCapExceeded");
  py::register_exception<sldc::InconsistentCodeword>(m, "InconsistentCodeword");
  py::register_exception<sldc::ContainerError>(m, "ContainerError");

  py::class_<sldc::CodeParams>(m, "CodeParams")
      .def(py::init(&make_params), py::arg("n"), py::arg("r"), py::arg("d"),
           py::arg("seed") = 0, py::arg("k_max") = 0)
      .def_readonly("n", &sldc::CodeParams::n)
      .def_readonly("r", &sldc::CodeParams::r)
      .def_readonly("d", &sldc::CodeParams::d)
      .def_readonly("seed", &sldc::CodeParams::master_seed);

  py::class_<sldc::Codeword>(m, "Codeword")
      .def_readonly("length", &sldc::Codeword::length)
      .def_readonly("ones", &sldc::Codeword::ones);

  py::class_<sldc::Codebook>(m, "Codebook")
      .def(py::init<sldc::CodeParams>())
      .def("probe_plan", &sldc::Codebook::probe_plan, py::arg("j"),
           py::arg("length"))
      .def("encode",
           [](const sldc::Codebook& book,
              const std::vector<std::uint64_t>& support) {
             return sldc::encode(book,
                                 {book.params().n, support});
           })
      .def("decode_bit",
           [](const sldc::Codebook& book, const sldc::Codeword& c,
              std::uint64_t j) { return sldc::decode_bit(book, c, j).first; })
      .def("decode_full",
           [](const sldc::Codebook& book, const sldc::Codeword& c) {
             return sldc::decode_full(book, c).support;
           });

  m.def("binom", [](std::int64_t n, std::int64_t k) {
    // Exact arbitrary precision: hand the decimal string to python's int.
    return py::module_::import("builtins").attr("int")(
        sldc::binom_exact(n, k).str());
  });
  m.def("log_binom", &sldc::log_binom);
  m.def("level_size", &sldc::level_size);

  m.def("lower_bound_adaptive", &sldc::lower_bound_adaptive, py::arg("n"),
        py::arg("r"), py::arg("d"), py::arg("eps") = 0.0);
  m.def("upper_bound_nonadaptive", &sldc::upper_bound_nonadaptive);
  m.def("lym_lower_bound",
        [](std::uint64_t n, std::uint64_t r, std::uint64_t d, double eps) {
          const sldc::LymBound b = sldc::lym_lower_bound(n, r, d, eps);
          return py::make_tuple(b.m, b.bound);
        },
        py::arg("n"), py::arg("r"), py::arg("d"), py::arg("eps") = 0.0);
  m.def("bounds_report",
        [](std::uint64_t n, std::uint64_t r, std::uint64_t d, double eps) {
          const sldc::BoundsReport b = sldc::bounds_report(n, r, d, eps);
          py::dict out;
          out["n"] = b.n;
          out["r"] = b.r;
          out["d"] = b.d;
          out["entropy_bits"] = b.entropy_bits;
          out["lower_thm1"] = b.lower_thm1;
          out["m_available"] = b.m_available;
          out["M"] = b.m;
          out["lower_lym"] = b.lower_lym;
          out["upper_thm2"] = b.upper_thm2;
          return out;
        },
        py::arg("n"), py::arg("r"), py::arg("d"), py::arg("eps") = 0.0);

  m.def("mc_expected_length",
        [](const sldc::CodeParams& params, std::uint64_t trials,
           std::uint64_t seed) {
          const sldc::LengthStats s =
              sldc::mc_expected_length(params, trials, seed);
          py::dict out;
          out["trials"] = s.trials;
          out["mean"] = s.mean;
          out["stddev"] = s.stddev;
          out["ci95_halfwidth"] = s.ci95_halfwidth;
          out["min"] = s.min;
          out["max"] = s.max;
          out["histogram"] = s.histogram;
          return out;
        });
  m.def("exhaustive_verify", [](const sldc::CodeParams& params) {
    const sldc::VerifyReport r = sldc::exhaustive_verify(params);
    py::dict out;
    out["sequences"] = r.sequences;
    out["queries"] = r.queries;
    out["errors"] = r.errors;
    out["max_probes"] = r.max_probes;
    out["injective"] = r.injective;
    out["non_adaptive_ok"] = r.non_adaptive_ok;
    out["min_level_ok"] = r.min_level_ok;
    return out;
  });

  m.def("run_protocol",
        [](const sldc::Codebook& book, const std::vector<std::uint64_t>& set,
           std::uint64_t i) {
          const sldc::Transcript t = sldc::run_protocol(book, set, i);
          py::dict out;
          out["answer"] = t.answer;
          out["z"] = t.z;
          out["length"] = t.codeword_length;
          out["rounds"] = t.rounds.size();
          out["alice_bits_sent"] = t.alice_bits_sent;
          out["bob_bits_sent"] = t.bob_bits_sent;
          return out;
        });

  m.def("serialize",
        [](const sldc::CodeParams& params, const sldc::Codeword& c) {
          const auto bytes = sldc::serialize_codeword(params, c);
          return py::bytes(reinterpret_cast<const char*>(bytes.data()),
                           bytes.size());
        });
  m.def("parse", [](py::bytes raw) {
    std::string buffer = raw;
    const auto [params, c] = sldc::parse_codeword(
        {reinterpret_cast<const std::uint8_t*>(buffer.data()), buffer.size()});
    return py::make_tuple(params, c);
  });
}
