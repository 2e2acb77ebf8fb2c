#include <doctest.h>

#include <vector>

#include "modtab/errors.hpp"
#include "modtab/modring.hpp"
#include "modtab/tables.hpp"

using namespace modtab;

namespace {

// Independent oracle: scan every one of the n^3 triples, no symmetry cut,
// no early structure.
bool cube_holds_oracle(std::uint64_t n) {
    const std::uint64_t one = 1 % n;
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = 0; j < n; ++j) {
            for (std::uint64_t k = 0; k < n; ++k) {
                if ((i * j % n) * k % n == one && !(i == j && j == k)) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("render_table matches the Z_8 multiplication table entry for entry") {
    const auto m = render_table(ResidueRing(8));
    const std::vector<std::vector<std::uint32_t>> expected{
        {0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 2, 3, 4, 5, 6, 7},
        {0, 2, 4, 6, 0, 2, 4, 6}, {0, 3, 6, 1, 4, 7, 2, 5},
        {0, 4, 0, 4, 0, 4, 0, 4}, {0, 5, 2, 7, 4, 1, 6, 3},
        {0, 6, 4, 2, 0, 6, 4, 2}, {0, 7, 6, 5, 4, 3, 2, 1}};
    CHECK(m == expected);
}

TEST_CASE("render_table edge cases") {
    CHECK(render_table(ResidueRing(1)) ==
          std::vector<std::vector<std::uint32_t>>{{0}});
    CHECK(render_table(ResidueRing(2)) ==
          std::vector<std::vector<std::uint32_t>>{{0, 0}, {0, 1}});
    CHECK_THROWS_AS(render_table(ResidueRing(5000), 4096), SizeLimitError);
}

TEST_CASE("table text format") {
    const auto text = format_table_text(render_table(ResidueRing(2)));
    CHECK(text == "*|0 1\n-----\n0|0 0\n1|0 1\n");
    const auto csv = format_table_csv(render_table(ResidueRing(2)));
    CHECK(csv == "0,0\n0,1\n");
}

TEST_CASE("diagonal check via table scan") {
    const auto r5 = check_diagonal_table(5);
    CHECK_FALSE(r5.holds);
    CHECK(r5.witness == std::make_pair<std::uint64_t, std::uint64_t>(2, 3));

    CHECK(check_diagonal_table(24).holds);

    const auto r30 = check_diagonal_table(30);
    CHECK_FALSE(r30.holds);
    CHECK(r30.witness == std::make_pair<std::uint64_t, std::uint64_t>(7, 13));

    CHECK(check_diagonal_table(1).holds);
    CHECK_THROWS_AS(check_diagonal_table(5001), SizeLimitError);
}

TEST_CASE("diagonal check via units") {
    const auto r9 = check_diagonal_units(9);
    CHECK_FALSE(r9.holds);
    CHECK(r9.witness == std::make_pair<std::uint64_t, std::uint64_t>(2, 5));

    CHECK(check_diagonal_units(12).holds);

    const auto r210 = check_diagonal_units(210);
    CHECK_FALSE(r210.holds);
    CHECK(r210.witness == std::make_pair<std::uint64_t, std::uint64_t>(11, 191));
}

TEST_CASE("table and units methods agree below 2000, witnesses re-multiply to 1") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        const auto by_table = check_diagonal_table(n);
        const auto by_units = check_diagonal_units(n);
        if (by_table.holds != by_units.holds) {
            FAIL("method disagreement at n=", n);
        }
        const ResidueRing ring(n);
        for (const auto& rep : {by_table, by_units}) {
            if (rep.holds) continue;
            REQUIRE(rep.witness.has_value());
            const auto [a, b] = *rep.witness;
            if (a == b || ring.mul(a, b) != ring.one()) {
                FAIL("invalid witness at n=", n);
            }
        }
    }
}

TEST_CASE("cube check") {
    CHECK(cube_check(2).holds);
    CHECK(cube_check(1).holds);

    const auto r3 = cube_check(3);
    CHECK_FALSE(r3.holds);
    CHECK(r3.witness == std::array<std::uint64_t, 3>{1, 2, 2});

    const auto r5 = cube_check(5);
    CHECK_FALSE(r5.holds);
    CHECK(r5.witness == std::array<std::uint64_t, 3>{1, 2, 3});

    CHECK_THROWS_AS(cube_check(1001), SizeLimitError);
}

TEST_CASE("cube witnesses multiply to 1 off the diagonal") {
    const ResidueRing r3(3);
    for (std::uint64_t n = 3; n <= 60; ++n) {
        const auto rep = cube_check(n);
        if (rep.holds) continue;
        REQUIRE(rep.witness.has_value());
        const auto [i, j, k] = *rep.witness;
        const ResidueRing ring(n);
        CHECK(ring.mul(ring.mul(i, j), k) == ring.one());
        CHECK_FALSE((i == j && j == k));
    }
}

TEST_CASE("cube check agrees with the exhaustive full-triple oracle") {
    for (std::uint64_t n = 1; n <= 40; ++n) {
        if (cube_check(n).holds != cube_holds_oracle(n)) {
            FAIL("cube oracle disagreement at n=", n);
        }
    }
}

TEST_CASE("cube scan") {
    CHECK(cube_scan(2) == std::vector<std::uint64_t>{1, 2});
    CHECK(cube_scan(50) == std::vector<std::uint64_t>{1, 2});
    CHECK(cube_scan(200) == std::vector<std::uint64_t>{1, 2});
    CHECK_THROWS_AS(cube_scan(1001), SizeLimitError);
}

TEST_CASE("a cube with the diagonal property forces the table property") {
    for (std::uint64_t n = 1; n <= 100; ++n) {
        if (cube_check(n).holds) {
            CHECK(check_diagonal_units(n).holds);
        }
    }
}
