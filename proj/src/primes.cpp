#include "modtab/primes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "modtab/errors.hpp"

namespace modtab {

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
    if (limit == 0) {
        throw std::domain_error("sieve limit must be positive");
    }
    if (limit > kMaxSieveLimit) {
        throw SizeLimitError("sieve limit cap is " +
                             std::to_string(kMaxSieveLimit) + ", got " +
                             std::to_string(limit));
    }
    is_prime_.assign(limit + 1, true);
    is_prime_[0] = false;
    if (limit >= 1) is_prime_[1] = false;
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (!is_prime_[p]) continue;
        for (std::uint64_t m = p * p; m <= limit; m += p) {
            is_prime_[m] = false;
        }
    }
    pi_prefix_.resize(limit + 1);
    std::uint32_t count = 0;
    for (std::uint64_t x = 0; x <= limit; ++x) {
        if (is_prime_[x]) ++count;
        pi_prefix_[x] = count;
    }
}

bool PrimeTable::is_prime(std::uint64_t x) const {
    if (x > limit_) {
        throw std::out_of_range("x = " + std::to_string(x) +
                                " beyond sieve limit " + std::to_string(limit_));
    }
    return is_prime_[x];
}

std::uint64_t PrimeTable::pi(std::uint64_t x) const {
    if (x > limit_) {
        throw std::out_of_range("x = " + std::to_string(x) +
                                " beyond sieve limit " + std::to_string(limit_));
    }
    return pi_prefix_[x];
}

std::vector<std::uint64_t> PrimeTable::primes_in(std::uint64_t lo,
                                                 std::uint64_t hi) const {
    if (hi > limit_) {
        throw std::out_of_range("range end beyond sieve limit");
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = std::max<std::uint64_t>(lo, 2); x <= hi; ++x) {
        if (is_prime_[x]) out.push_back(x);
    }
    return out;
}

std::uint64_t bertrand_witness(const PrimeTable& table, std::uint64_t n) {
    if (n < 2) {
        throw std::domain_error("bertrand witness needs n >= 2");
    }
    if (2 * n > table.limit()) {
        throw std::out_of_range("sieve limit too small: need 2n <= limit");
    }
    for (std::uint64_t p = n + 1; p < 2 * n; ++p) {
        if (table.is_prime(p)) return p;
    }
    throw TheoremViolationError("no prime in (" + std::to_string(n) + ", " +
                                std::to_string(2 * n) + ")");
}

std::pair<std::uint64_t, std::uint64_t> erdos_witnesses(const PrimeTable& table,
                                                        std::uint64_t n) {
    if (n < 6) {
        throw std::domain_error("erdos witnesses need n >= 6");
    }
    if (2 * n > table.limit()) {
        throw std::out_of_range("sieve limit too small: need 2n <= limit");
    }
    std::uint64_t first = 0;
    for (std::uint64_t p = n + 1; p < 2 * n; ++p) {
        if (!table.is_prime(p)) continue;
        if (first == 0) {
            first = p;
        } else {
            return {first, p};
        }
    }
    throw TheoremViolationError("fewer than two primes in (" +
                                std::to_string(n) + ", " +
                                std::to_string(2 * n) + ")");
}

std::vector<std::uint64_t> ramanujan_primes(const PrimeTable& table,
                                            std::size_t count) {
    if (count == 0) {
        throw std::domain_error("count must be at least 1");
    }
    const std::uint64_t limit = table.limit();
    // thresholds[k] = smallest x0 with min over [x0, limit] of
    // pi(x) - pi(x/2) >= k.  The suffix minimum is nondecreasing in x0, so
    // one downward sweep assigns every threshold at the exact spot where
    // the running minimum dips below k.
    std::vector<std::uint64_t> thresholds(count + 1, 0);
    std::uint64_t running_min = UINT64_MAX;
    for (std::uint64_t x = limit;; --x) {
        const std::uint64_t f = (x >= 2) ? table.pi(x) - table.pi(x / 2) : 0;
        if (f < running_min) {
            const std::uint64_t hi = std::min<std::uint64_t>(running_min, count);
            for (std::uint64_t k = f + 1; k <= hi; ++k) {
                thresholds[k] = x + 1;
            }
            running_min = f;
        }
        if (x == 0) break;
    }
    const std::uint64_t largest = thresholds[count];
    if (largest > limit || 4 * largest > limit) {
        throw InconclusiveError(
            "sieve limit " + std::to_string(limit) +
            " cannot certify threshold " + std::to_string(count) +
            "; need limit >= 4 * p_k");
    }
    std::vector<std::uint64_t> result(thresholds.begin() + 1, thresholds.end());
    for (std::uint64_t p : result) {
        if (!table.is_prime(p)) {
            throw TheoremViolationError("threshold " + std::to_string(p) +
                                        " is not prime");
        }
    }
    return result;
}

std::optional<std::uint64_t> dirichlet_witness(const PrimeTable& table,
                                               const DirichletQuery& query) {
    if (query.q < 2) {
        throw std::domain_error("progression modulus must be at least 2");
    }
    {
        bool prime_q = query.q >= 2;
        for (std::uint64_t d = 2; d * d <= query.q; ++d) {
            if (query.q % d == 0) {
                prime_q = false;
                break;
            }
        }
        if (!prime_q) {
            throw std::domain_error("progression modulus must be prime");
        }
    }
    if (query.r >= query.q) {
        throw std::domain_error("residue class must satisfy 0 <= r < q");
    }
    if (std::gcd(query.q, query.r) != 1) {
        throw std::domain_error("gcd(q, r) must be 1");
    }
    if (query.avoid == 0) {
        throw std::domain_error("avoid must be positive");
    }
    if (query.bound > table.limit()) {
        throw std::out_of_range("search bound beyond sieve limit");
    }
    for (std::uint64_t p = query.r; p <= query.bound; p += query.q) {
        if (p >= 2 && table.is_prime(p) && query.avoid % p != 0) {
            return p;
        }
    }
    return std::nullopt;
}

std::uint64_t smallest_nondividing_prime(const PrimeTable& table,
                                         std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("n must be positive");
    }
    for (std::uint64_t p = 2; p <= table.limit(); ++p) {
        if (table.is_prime(p) && n % p != 0) {
            return p;
        }
    }
    throw std::out_of_range("sieve limit too small to find a non-divisor");
}

}  // namespace modtab
