#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modtab/modring.hpp"
#include "modtab/tables.hpp"

namespace modtab {

struct PrimePower {
    std::uint64_t p = 0;
    unsigned c = 0;

    bool operator==(const PrimePower&) const = default;
};

/// Prime-power decomposition of n, plus the 2-adic split n = 2^t * k with
/// k odd.
struct Factorization {
    std::uint64_t n = 0;
    std::vector<PrimePower> factors;  // ascending p; empty for n = 1
    unsigned two_exponent = 0;        // t
    std::uint64_t odd_part = 1;       // k
};

/// Primary decomposition of the unit group of Z_n as a direct sum of cyclic
/// groups.  `cyclic_orders` lists the orders grouped per prime power of n,
/// ascending in p; trivial factors are dropped except for n in {1, 2},
/// where the whole group is trivial and the orders are {1}.
struct AbelianGroupStructure {
    std::vector<std::uint64_t> cyclic_orders;
    std::uint64_t order = 1;     // product of cyclic_orders == phi(n)
    std::uint64_t exponent = 1;  // lcm of cyclic_orders
};

// Trial division by primes up to sqrt(n); exact within the modulus cap.
Factorization factorize(std::uint64_t n);

// phi(n) via the factorization formula prod p^(c-1) * (p-1); phi(1) = 1.
std::uint64_t euler_phi(std::uint64_t n);

// Structure of the units of Z_{p^c}: C_1 for p^c = 2, C_2 for p^c = 4,
// C_2 + C_{2^(c-2)} for p = 2 and c >= 3, and C_{phi(p^c)} for odd p.
AbelianGroupStructure local_unit_structure(std::uint64_t p, unsigned c);

// Concatenation of the local structures over all prime powers of n.
AbelianGroupStructure unit_group_structure(std::uint64_t n);

// Least e >= 1 with a^e = 1 for every unit a: the lcm of the cyclic orders.
std::uint64_t group_exponent(const AbelianGroupStructure& s);

// Structural diagonal-property decision: holds iff the group exponent
// divides 2 (equivalently, iff n divides 24).  On failure the witness is
// (a, a^-1) for the smallest unit a of order greater than 2.
DiagonalReport check_diagonal_structural(std::uint64_t n);

// The unit group is an F_2 vector space exactly when every unit squares
// to 1, i.e. exactly when the diagonal property holds.
bool is_f2_vector_space(std::uint64_t n);

/// The ring isomorphism Z_ab = Z_a + Z_b for coprime a, b.
///
/// forward maps x to (x mod a, x mod b); backward reconstructs x from a
/// residue pair via the extended Euclidean coefficients.  Both directions
/// compose to the identity and preserve multiplication.
class CrtIsomorphism {
public:
    CrtIsomorphism(std::uint64_t a, std::uint64_t b);

    std::uint64_t modulus_a() const { return a_; }
    std::uint64_t modulus_b() const { return b_; }
    std::uint64_t product() const { return ab_; }

    std::pair<std::uint64_t, std::uint64_t> forward(std::uint64_t x) const;
    std::uint64_t backward(std::uint64_t ra, std::uint64_t rb) const;

private:
    std::uint64_t a_;
    std::uint64_t b_;
    std::uint64_t ab_;
    std::uint64_t inv_a_mod_b_;
    std::uint64_t inv_b_mod_a_;
};

}  // namespace modtab
