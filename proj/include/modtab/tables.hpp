#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modtab/modring.hpp"

namespace modtab {

enum class DiagonalMethod { table, units, structural };

const char* to_string(DiagonalMethod m);

/// Verdict of the diagonal-property check for one modulus: does every 1 in
/// the multiplication table of Z_n sit at a position (a, a)?
///
/// When the property fails, `witness` holds the off-diagonal pair (a, b),
/// a != b, with a*b = 1 (mod n) that certifies the failure.
struct DiagonalReport {
    std::uint64_t n = 0;
    bool holds = false;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
    DiagonalMethod method = DiagonalMethod::table;
};

/// Same question for the multiplication cube: entry (i, j, k) is i*j*k mod n
/// and the diagonal is the set of points (i, i, i).
struct CubeReport {
    std::uint64_t n = 0;
    bool holds = false;
    std::optional<std::array<std::uint64_t, 3>> witness;
};

inline constexpr std::uint64_t kDefaultRenderCap = 4096;
inline constexpr std::uint64_t kDefaultPairScanCap = 5000;
inline constexpr std::uint64_t kDefaultCubeCap = 1000;

// The full n-by-n multiplication table, M[a][b] = a*b mod n.
std::vector<std::vector<std::uint32_t>> render_table(
    const ResidueRing& ring, std::uint64_t cap = kDefaultRenderCap);

// O(n^2) streaming scan over pairs a < b; reports the lexicographically
// first off-diagonal 1.  Never materializes the table.
DiagonalReport check_diagonal_table(std::uint64_t n,
                                    std::uint64_t cap = kDefaultPairScanCap);

// Unit-based check: the property holds iff a^2 = 1 for every unit a.  The
// witness on failure is (a, a^-1) for the smallest failing unit a.
DiagonalReport check_diagonal_units(std::uint64_t n);

// Exhaustive triple scan in i <= j <= k order (symmetry cuts the work 6x);
// the witness is the first triple found in that order.
CubeReport cube_check(std::uint64_t n, std::uint64_t cap = kDefaultCubeCap);

// All n <= limit whose multiplication cube has 1's only on the diagonal.
std::vector<std::uint64_t> cube_scan(std::uint64_t limit,
                                     std::uint64_t cap = kDefaultCubeCap);

// Text format consumed by downstream tooling: header "*|0 1 ... n-1", a
// dashed separator of the same width, then one "a|..." row per residue,
// entries single-space separated.
std::string format_table_text(const std::vector<std::vector<std::uint32_t>>& m);

// Plain matrix rows, comma separated, no header.
std::string format_table_csv(const std::vector<std::vector<std::uint32_t>>& m);

}  // namespace modtab
