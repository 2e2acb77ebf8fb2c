#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace modtab {

inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;
inline constexpr std::uint64_t kDefaultSieveLimit = 1'000'000;

/// Sieve-backed prime table over [0, limit] with O(1) primality and pi(x)
/// lookups.  Immutable after construction and freely shareable.
class PrimeTable {
public:
    explicit PrimeTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    bool is_prime(std::uint64_t x) const;

    // Number of primes <= x.  Throws std::out_of_range for x > limit.
    std::uint64_t pi(std::uint64_t x) const;

    // All primes in [lo, hi], ascending (hi <= limit).
    std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) const;

private:
    std::uint64_t limit_;
    std::vector<bool> is_prime_;
    std::vector<std::uint32_t> pi_prefix_;
};

inline PrimeTable sieve(std::uint64_t limit) { return PrimeTable(limit); }

/// One arithmetic-progression witness query: find a prime p = q*x + r that
/// does not divide `avoid`.  Requires gcd(q, r) = 1; that is what makes the
/// progression provably infinite, so a bounded miss is inconclusive rather
/// than a disproof.
struct DirichletQuery {
    std::uint64_t q = 0;      // prime modulus of the progression
    std::uint64_t r = 0;      // residue class, 0 <= r < q
    std::uint64_t avoid = 1;  // primes dividing this are skipped
    std::uint64_t bound = kDefaultSieveLimit;  // search cap
};

// Smallest prime strictly between n and 2n (n >= 2, 2n <= limit).
std::uint64_t bertrand_witness(const PrimeTable& table, std::uint64_t n);

// Two smallest distinct primes strictly between n and 2n (n >= 6).
std::pair<std::uint64_t, std::uint64_t> erdos_witnesses(const PrimeTable& table,
                                                        std::uint64_t n);

// For k = 1..count, the smallest p_k such that pi(x) - pi(x/2) >= k for
// every integer x in [p_k, limit].  Certified only when limit >= 4 * p_k;
// otherwise throws InconclusiveError.
std::vector<std::uint64_t> ramanujan_primes(const PrimeTable& table,
                                            std::size_t count);

// Smallest prime p <= bound with p = r (mod q) and p not dividing avoid;
// empty when the bounded search is exhausted.
std::optional<std::uint64_t> dirichlet_witness(const PrimeTable& table,
                                               const DirichletQuery& query);

// Smallest prime that does not divide n (2 for n = 1).
std::uint64_t smallest_nondividing_prime(const PrimeTable& table,
                                         std::uint64_t n);

}  // namespace modtab
