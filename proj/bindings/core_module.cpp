#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "modtab/errors.hpp"
#include "modtab/json_io.hpp"
#include "modtab/modring.hpp"
#include "modtab/primes.hpp"
#include "modtab/proofs.hpp"
#include "modtab/tables.hpp"
#include "modtab/unit_group.hpp"

namespace py = pybind11;

namespace {

using nlohmann::json;

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list result;
            for (const auto& item : j) result.append(json_to_py(item));
            return result;
        }
        case json::value_t::object: {
            py::dict result;
            for (auto it = j.begin(); it != j.end(); ++it) {
                result[py::str(it.key())] = json_to_py(it.value());
            }
            return result;
        }
        default:
            return py::none();
    }
}

py::object diagonal_report_py(const modtab::DiagonalReport& r) {
    return json_to_py(modtab::to_json(r));
}

modtab::DiagonalReport dispatch_check(std::uint64_t n, const std::string& method) {
    if (method == "brute" || method == "table") {
        return modtab::check_diagonal_table(n);
    }
    if (method == "units") {
        return modtab::check_diagonal_units(n);
    }
    if (method == "structural") {
        return modtab::check_diagonal_structural(n);
    }
    throw std::domain_error("unknown method: " + method);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "modular multiplication tables, unit groups and the divisors of 24";

    py::register_exception<modtab::SizeLimitError>(m, "SizeLimitError");
    py::register_exception<modtab::InconclusiveError>(m, "Inconclusive");
    py::register_exception<modtab::TheoremViolationError>(m, "TheoremViolation");

    py::class_<modtab::ResidueRing>(m, "ResidueRing")
        .def(py::init<std::uint64_t>(), py::arg("n"))
        .def_property_readonly("n", &modtab::ResidueRing::modulus)
        .def("one", &modtab::ResidueRing::one)
        .def("mul", &modtab::ResidueRing::mul, py::arg("a"), py::arg("b"))
        .def("inverse", &modtab::ResidueRing::inverse, py::arg("a"))
        .def("units", &modtab::ResidueRing::units);

    m.def("mul",
          [](std::uint64_t n, std::uint64_t a, std::uint64_t b) {
              return modtab::ResidueRing(n).mul(a, b);
          },
          py::arg("n"), py::arg("a"), py::arg("b"));
    m.def("inverse",
          [](std::uint64_t n, std::uint64_t a) {
              return modtab::ResidueRing(n).inverse(a);
          },
          py::arg("n"), py::arg("a"));
    m.def("units",
          [](std::uint64_t n) { return modtab::ResidueRing(n).units(); },
          py::arg("n"));

    m.def("render_table",
          [](std::uint64_t n, std::uint64_t cap) {
              return modtab::render_table(modtab::ResidueRing(n), cap);
          },
          py::arg("n"), py::arg("cap") = modtab::kDefaultRenderCap);
    m.def("table_text",
          [](std::uint64_t n) {
              return modtab::format_table_text(
                  modtab::render_table(modtab::ResidueRing(n)));
          },
          py::arg("n"));
    m.def("check_diagonal",
          [](std::uint64_t n, const std::string& method) {
              return diagonal_report_py(dispatch_check(n, method));
          },
          py::arg("n"), py::arg("method") = "structural");
    m.def("cube_check",
          [](std::uint64_t n) { return json_to_py(to_json(modtab::cube_check(n))); },
          py::arg("n"));
    m.def("cube_scan",
          [](std::uint64_t limit) { return modtab::cube_scan(limit); },
          py::arg("limit"));

    m.def("factorize",
          [](std::uint64_t n) { return json_to_py(to_json(modtab::factorize(n))); },
          py::arg("n"));
    m.def("euler_phi", &modtab::euler_phi, py::arg("n"));
    m.def("unit_group_structure",
          [](std::uint64_t n) {
              return json_to_py(to_json(modtab::unit_group_structure(n)));
          },
          py::arg("n"));
    m.def("is_f2_vector_space", &modtab::is_f2_vector_space, py::arg("n"));

    py::class_<modtab::CrtIsomorphism>(m, "CrtIsomorphism")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("a"), py::arg("b"))
        .def_property_readonly("a", &modtab::CrtIsomorphism::modulus_a)
        .def_property_readonly("b", &modtab::CrtIsomorphism::modulus_b)
        .def_property_readonly("product", &modtab::CrtIsomorphism::product)
        .def("forward", &modtab::CrtIsomorphism::forward, py::arg("x"))
        .def("backward", &modtab::CrtIsomorphism::backward, py::arg("ra"),
             py::arg("rb"));

    py::class_<modtab::PrimeTable>(m, "PrimeTable")
        .def(py::init<std::uint64_t>(), py::arg("limit"))
        .def_property_readonly("limit", &modtab::PrimeTable::limit)
        .def("is_prime", &modtab::PrimeTable::is_prime, py::arg("x"))
        .def("pi", &modtab::PrimeTable::pi, py::arg("x"))
        .def("primes_in", &modtab::PrimeTable::primes_in, py::arg("lo"),
             py::arg("hi"))
        .def("bertrand_witness",
             [](const modtab::PrimeTable& t, std::uint64_t n) {
                 return modtab::bertrand_witness(t, n);
             },
             py::arg("n"))
        .def("erdos_witnesses",
             [](const modtab::PrimeTable& t, std::uint64_t n) {
                 return modtab::erdos_witnesses(t, n);
             },
             py::arg("n"))
        .def("ramanujan_primes",
             [](const modtab::PrimeTable& t, std::size_t count) {
                 return modtab::ramanujan_primes(t, count);
             },
             py::arg("count"))
        .def("dirichlet_witness",
             [](const modtab::PrimeTable& t, std::uint64_t q, std::uint64_t r,
                std::uint64_t avoid, std::uint64_t bound) {
                 return modtab::dirichlet_witness(
                     t, modtab::DirichletQuery{q, r, avoid,
                                               bound ? bound : t.limit()});
             },
             py::arg("q"), py::arg("r"), py::arg("avoid") = 1,
             py::arg("bound") = 0)
        .def("smallest_nondividing_prime",
             [](const modtab::PrimeTable& t, std::uint64_t n) {
                 return modtab::smallest_nondividing_prime(t, n);
             },
             py::arg("n"));

    m.def("verify_crt",
          [](std::uint64_t limit) {
              return json_to_py(to_json(modtab::verify_proof_crt(limit)));
          },
          py::arg("limit") = 1000);
    m.def("verify_dirichlet",
          [](std::uint64_t n, std::uint64_t bound, std::uint64_t sieve_limit) {
              const modtab::PrimeTable table(sieve_limit);
              return json_to_py(to_json(modtab::verify_proof_dirichlet(
                  n, bound ? bound : table.limit(), table)));
          },
          py::arg("n") = 24, py::arg("bound") = 0,
          py::arg("sieve_limit") = modtab::kDefaultSieveLimit);
    m.def("verify_units",
          [](std::uint64_t max_prime_power, std::uint64_t sieve_limit) {
              const modtab::PrimeTable table(sieve_limit);
              return json_to_py(
                  to_json(modtab::verify_proof_unit_structure(max_prime_power,
                                                              table)));
          },
          py::arg("max_prime_power") = 10000,
          py::arg("sieve_limit") = modtab::kDefaultSieveLimit);
    m.def("verify_bertrand",
          [](std::uint64_t scan_limit, std::uint64_t sieve_limit) {
              const modtab::PrimeTable table(sieve_limit);
              return json_to_py(
                  to_json(modtab::verify_proof_bertrand(scan_limit, table)));
          },
          py::arg("scan_limit") = 100000,
          py::arg("sieve_limit") = modtab::kDefaultSieveLimit);
    m.def("verify_erdos",
          [](std::uint64_t scan_limit, std::uint64_t sieve_limit) {
              const modtab::PrimeTable table(sieve_limit);
              return json_to_py(
                  to_json(modtab::verify_proof_erdos(scan_limit, table)));
          },
          py::arg("scan_limit") = 100000,
          py::arg("sieve_limit") = modtab::kDefaultSieveLimit);
    m.def("verify_proposition",
          [](std::uint64_t n, std::uint64_t prime_bound,
             std::uint64_t sieve_limit) {
              const modtab::PrimeTable table(sieve_limit);
              return json_to_py(to_json(
                  modtab::verify_proposition_equivalence(n, prime_bound, table)));
          },
          py::arg("n") = 24, py::arg("prime_bound") = 10000,
          py::arg("sieve_limit") = modtab::kDefaultSieveLimit);
}
