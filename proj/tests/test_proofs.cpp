#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "modtab/errors.hpp"
#include "modtab/json_io.hpp"
#include "modtab/proofs.hpp"
#include "modtab/tables.hpp"
#include "modtab/unit_group.hpp"

using namespace modtab;

namespace {

const std::vector<std::uint64_t> kDivisorsOf24{1, 2, 3, 4, 6, 8, 12, 24};

bool all_checked(const ProofVerdict& v) {
    for (const auto& s : v.steps) {
        if (!s.checked) return false;
    }
    return v.overall == ProofOutcome::pass;
}

bool is_candidate(std::uint64_t n, const std::vector<std::uint64_t>& primes) {
    for (std::uint64_t p : primes) {
        if (p * p >= n + 1) break;
        if (n % p != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("proposition equivalence on landmark moduli") {
    const PrimeTable table(10000);

    const auto v24 = verify_proposition_equivalence(24, 10000, table);
    CHECK(all_checked(v24));
    for (int i = 0; i < 4; ++i) {
        CHECK(v24.steps[i].evidence.value("holds", false));
    }

    const auto v5 = verify_proposition_equivalence(5, 10000, table);
    CHECK(all_checked(v5));  // all four statements false, hence agreement
    for (int i = 0; i < 4; ++i) {
        CHECK_FALSE(v5.steps[i].evidence.value("holds", true));
    }

    const auto v1 = verify_proposition_equivalence(1, 10000, table);
    CHECK(all_checked(v1));
    for (int i = 0; i < 4; ++i) {
        CHECK(v1.steps[i].evidence.value("holds", false));
    }
}

TEST_CASE("proposition statement 4 is flagged as a bounded sample") {
    const PrimeTable table(10000);
    const auto v = verify_proposition_equivalence(30, 10000, table);
    CHECK(v.steps[3].evidence.value("sampled", false));
    CHECK(all_checked(v));
}

TEST_CASE("proposition skips the table scan above the pair-scan cap") {
    const PrimeTable table(10000);
    const auto v = verify_proposition_equivalence(6000, 10000, table);
    CHECK(v.steps[0].evidence.value("skipped", false));
    CHECK(v.overall == ProofOutcome::pass);
}

TEST_CASE("proposition equivalence holds for every modulus below 2000") {
    const PrimeTable table(10000);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        const auto v = verify_proposition_equivalence(n, 10000, table);
        if (v.overall != ProofOutcome::pass) {
            FAIL("proposition equivalence failed at n=", n);
        }
    }
}

TEST_CASE("crt replay") {
    const auto v100 = verify_proof_crt(100);
    CHECK(all_checked(v100));
    CHECK(v100.steps.back().evidence["surviving"] == kDivisorsOf24);

    const auto v24 = verify_proof_crt(24);
    CHECK(all_checked(v24));
    CHECK(v24.steps.back().evidence["surviving"] == kDivisorsOf24);

    const auto v8 = verify_proof_crt(8);
    CHECK(all_checked(v8));
    CHECK(v8.steps.back().evidence["surviving"] ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8});

    CHECK_THROWS_AS(verify_proof_crt(5001), SizeLimitError);
    CHECK_THROWS_AS(verify_proof_crt(0), std::domain_error);
}

TEST_CASE("dirichlet replay: modulus with a large prime factor") {
    const PrimeTable table(10000);
    const auto v35 = verify_proof_dirichlet(35, 10000, table);
    CHECK(all_checked(v35));
    CHECK(v35.steps[0].evidence["q0"] == 5);
    const std::uint64_t p = v35.steps[2].evidence["witness_prime"];
    CHECK(p % 5 == 2);
    CHECK(35 % p != 0);
    CHECK((p * p - 1) % 35 != 0);

    const auto v7 = verify_proof_dirichlet(7, 10000, table);
    CHECK(all_checked(v7));
    CHECK(v7.steps[0].evidence["q0"] == 7);
    CHECK(v7.steps[2].evidence["witness_prime"] == 2);
}

TEST_CASE("dirichlet replay: modulus of the form 2^u 3^v") {
    const PrimeTable table(10000);
    const auto v24 = verify_proof_dirichlet(24, 10000, table);
    CHECK(all_checked(v24));
    CHECK(v24.steps[1].evidence["smallest_nondividing_prime"] == 5);

    const auto v16 = verify_proof_dirichlet(16, 10000, table);
    CHECK(all_checked(v16));  // 16 = 2^4: no diagonal property, 16 does not divide 24
}

TEST_CASE("dirichlet replay goes inconclusive when the bound is exhausted") {
    const PrimeTable table(10000);
    const auto v = verify_proof_dirichlet(10, 5, table);
    CHECK(v.overall == ProofOutcome::inconclusive);
}

TEST_CASE("unit structure replay") {
    const PrimeTable table(10000);
    const std::vector<std::uint64_t> expected{2, 3, 4, 8};

    const auto v100 = verify_proof_unit_structure(100, table);
    CHECK(all_checked(v100));
    CHECK(v100.steps[1].evidence["exponent_le_2"] == expected);

    const auto v8 = verify_proof_unit_structure(8, table);
    CHECK(all_checked(v8));
    CHECK(v8.steps[1].evidence["exponent_le_2"] == expected);

    const auto v9 = verify_proof_unit_structure(9, table);
    CHECK(all_checked(v9));
    CHECK(v9.steps[1].evidence["exponent_le_2"] == expected);  // 9 excluded

    CHECK_THROWS_AS(verify_proof_unit_structure(10001, table), SizeLimitError);
}

TEST_CASE("bertrand replay") {
    const PrimeTable table(10000);
    const auto v = verify_proof_bertrand(1000, table);
    CHECK(all_checked(v));
    CHECK(v.steps[0].evidence["candidates"] ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 12, 18, 24, 30});
    CHECK(v.steps[1].evidence["inequality"] == "15(n+1) <= 4n");
    CHECK(v.steps[2].evidence["witness"] == std::vector<std::uint64_t>{11, 191});
    CHECK(v.steps[2].evidence["product"] == 2101);
    CHECK(v.steps[3].evidence["witness"] == std::vector<std::uint64_t>{7, 13});
    CHECK(v.steps[3].evidence["product"] == 91);
    CHECK(v.steps.back().evidence["diagonal_moduli"] == kDivisorsOf24);

    CHECK_THROWS_AS(verify_proof_bertrand(398, table), std::domain_error);
}

TEST_CASE("erdos replay") {
    const PrimeTable table(10000);
    const auto v = verify_proof_erdos(1000, table);
    CHECK(all_checked(v));
    CHECK(v.steps[1].evidence["inequality"] == "30(n+1) <= 4n");
    CHECK(v.steps[1].evidence["example"]["n"] == 143);
    CHECK(v.steps[1].evidence["example"]["primes"] ==
          std::vector<std::uint64_t>{7, 11});
    CHECK(v.steps.back().evidence["diagonal_moduli"] == kDivisorsOf24);

    CHECK_THROWS_AS(verify_proof_erdos(143, table), std::domain_error);
}

TEST_CASE("the five routes certify the same moduli below 10^4") {
    const PrimeTable table(10000);
    const auto primes = table.primes_in(2, 101);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        const bool by_units = check_diagonal_units(n).holds;
        const bool by_structure = check_diagonal_structural(n).holds;

        const auto f = factorize(n);
        const std::uint64_t two_part = std::uint64_t{1} << f.two_exponent;
        const bool by_crt = 8 % two_part == 0 && 3 % f.odd_part == 0;

        bool big_factor = false;
        for (const auto& pp : f.factors) {
            if (pp.p > 3) big_factor = true;
        }
        const bool by_dirichlet = !big_factor && 24 % n == 0;

        const bool by_gap = is_candidate(n, primes) && n <= 24 && by_units;

        const bool expected = 24 % n == 0;
        if (by_units != expected || by_structure != expected ||
            by_crt != expected || by_dirichlet != expected ||
            by_gap != expected) {
            FAIL("route disagreement at n=", n);
        }
    }
}

TEST_CASE("verdict json shape") {
    const PrimeTable table(10000);
    const auto j = to_json(verify_proof_dirichlet(24, 10000, table));
    CHECK(j["proof"] == "dirichlet");
    CHECK(j["overall"] == true);
    CHECK(j["inconclusive"] == false);
    CHECK(j["steps"].is_array());
    for (const auto& step : j["steps"]) {
        CHECK(step.contains("description"));
        CHECK(step.contains("checked"));
        CHECK(step.contains("evidence"));
    }

    const auto inconclusive = to_json(verify_proof_dirichlet(10, 5, table));
    CHECK(inconclusive["overall"] == false);
    CHECK(inconclusive["inconclusive"] == true);
}
