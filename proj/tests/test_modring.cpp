#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "modtab/modring.hpp"

using modtab::kMaxModulus;
using modtab::ResidueRing;

TEST_CASE("ring construction") {
    CHECK(ResidueRing(8).modulus() == 8);
    CHECK(ResidueRing(1).modulus() == 1);
    CHECK(ResidueRing(1).one() == 0);  // trivial ring: 0 is the unit element
    CHECK(ResidueRing(kMaxModulus).modulus() == kMaxModulus);
    CHECK_THROWS_AS(ResidueRing(0), std::domain_error);
    CHECK_THROWS_AS(ResidueRing(kMaxModulus + 1), std::domain_error);
}

TEST_CASE("multiplication") {
    CHECK(ResidueRing(8).mul(3, 5) == 7);
    CHECK(ResidueRing(5).mul(2, 3) == 1);
    CHECK(ResidueRing(17).mul(0, 11) == 0);
    CHECK_THROWS_AS(ResidueRing(8).mul(8, 1), std::domain_error);
    CHECK_THROWS_AS(ResidueRing(8).mul(1, 9), std::domain_error);

    // near the capacity bound: (n-1)^2 = 1 (mod n) must come out exact
    const ResidueRing big(kMaxModulus);
    CHECK(big.mul(kMaxModulus - 1, kMaxModulus - 1) == 1);
}

TEST_CASE("inverse") {
    CHECK(ResidueRing(9).inverse(2) == 5);
    CHECK(ResidueRing(8).inverse(3) == 3);
    CHECK_FALSE(ResidueRing(6).inverse(2).has_value());
    CHECK(ResidueRing(1).inverse(0) == 0);
    CHECK_THROWS_AS(ResidueRing(6).inverse(6), std::domain_error);
}

TEST_CASE("units") {
    CHECK(ResidueRing(8).units() == std::vector<std::uint64_t>{1, 3, 5, 7});
    CHECK(ResidueRing(1).units() == std::vector<std::uint64_t>{0});
    CHECK(ResidueRing(5).units() == std::vector<std::uint64_t>{1, 2, 3, 4});
}

TEST_CASE("inverse exists exactly for residues coprime to n") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        const ResidueRing ring(n);
        for (std::uint64_t a = 0; a < n; ++a) {
            const bool coprime = std::gcd(a, n) == 1;
            if (ring.inverse(a).has_value() != coprime) {
                FAIL("inverse existence wrong at a=", a, " mod ", n);
            }
        }
    }
}

TEST_CASE("every unit times its inverse is the unit element") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        const ResidueRing ring(n);
        const std::uint64_t one = ring.one();
        for (std::uint64_t a : ring.units()) {
            const auto inv = ring.inverse(a);
            if (!inv || ring.mul(a, *inv) != one) {
                FAIL("bad inverse for a=", a, " mod ", n);
            }
        }
    }
}

TEST_CASE("unit count equals euler phi by gcd count") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        std::uint64_t phi = 0;
        for (std::uint64_t a = 0; a < n; ++a) {
            if (std::gcd(a, n) == 1) ++phi;
        }
        if (n == 1) phi = 1;
        if (ResidueRing(n).units().size() != phi) {
            FAIL("unit count mismatch at n=", n);
        }
    }
}

TEST_CASE("mul is commutative and associative on random triples") {
    std::mt19937_64 rng(20240824);
    for (int trial = 0; trial < 100000; ++trial) {
        const std::uint64_t n = rng() % 100000 + 1;
        const ResidueRing ring(n);
        const std::uint64_t a = rng() % n;
        const std::uint64_t b = rng() % n;
        const std::uint64_t c = rng() % n;
        if (ring.mul(a, b) != ring.mul(b, a)) {
            FAIL("commutativity broken at n=", n);
        }
        if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c))) {
            FAIL("associativity broken at n=", n);
        }
    }
}
