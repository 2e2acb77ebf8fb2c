#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "modtab/primes.hpp"

namespace modtab {

enum class ProofId { crt, dirichlet, unit_structure, bertrand, erdos, proposition };

const char* to_string(ProofId id);

enum class ProofOutcome { pass, fail, inconclusive };

/// One machine-checked claim inside a replayed argument.
struct ProofStep {
    std::string description;
    bool checked = false;
    nlohmann::json evidence;
};

/// A chain of numeric claims standing in for one written argument.
/// `overall` is the conjunction of the step booleans, except that an
/// exhausted bounded search yields `inconclusive` (neither pass nor fail).
struct ProofVerdict {
    ProofId proof;
    std::vector<ProofStep> steps;
    ProofOutcome overall = ProofOutcome::fail;
};

// Cross-validates the four equivalent phrasings of the diagonal property
// for one modulus: the table scan, the unit-square check, divisibility of
// a^2 - 1 over coprime a, and divisibility of p^2 - 1 over primes up to
// prime_bound (a bounded sample, flagged "sampled" in the evidence).
ProofVerdict verify_proposition_equivalence(std::uint64_t n,
                                            std::uint64_t prime_bound,
                                            const PrimeTable& table);

// Replays the two-adic split argument for every n <= limit: the property
// is multiplicative across n = 2^t * k, odd moduli with the property
// divide 3, powers of two divide 8, and the surviving set is exactly the
// divisors of (8)(3) = 24.
ProofVerdict verify_proof_crt(std::uint64_t limit);

// Replays the arithmetic-progression argument for one modulus n.  When n
// has a prime factor q0 > 3, a prime p = 2 (mod q0) not dividing n
// certifies the failure of the property; otherwise n = 2^u * 3^v, the
// prime 5 is coprime to n, and the property forces n | 5^2 - 1 = 24.
ProofVerdict verify_proof_dirichlet(std::uint64_t n, std::uint64_t bound,
                                    const PrimeTable& table);

// Checks the classified unit-group exponents against brute-force element
// orders for every prime power up to the bound, locates the prime powers
// of exponent at most 2, and re-derives the divisors-of-24 conclusion.
ProofVerdict verify_proof_unit_structure(std::uint64_t max_prime_power,
                                         const PrimeTable& table);

// Replays the prime-gap contrapositive: harvests candidates (moduli
// divisible by every prime below sqrt(n+1)), rules out n >= 399 via two
// prime-bearing intervals and the impossible inequality 15(n+1) <= 4n,
// eliminates 210 and 30 by explicit witnesses, and recertifies n <= 24.
ProofVerdict verify_proof_bertrand(std::uint64_t scan_limit,
                                   const PrimeTable& table);

// Same harvest, but a single interval with two primes and the impossible
// inequality 30(n+1) <= 4n rules out n >= 143 in one stroke.
ProofVerdict verify_proof_erdos(std::uint64_t scan_limit,
                                const PrimeTable& table);

}  // namespace modtab
