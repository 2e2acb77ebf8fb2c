#include "modtab/modring.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace modtab {

ResidueRing::ResidueRing(std::uint64_t n) : n_(n) {
    if (n == 0) {
        throw std::domain_error("modulus must be positive");
    }
    if (n > kMaxModulus) {
        throw std::domain_error("modulus " + std::to_string(n) +
                                " exceeds capacity 2^32 - 1");
    }
}

void ResidueRing::require_canonical(std::uint64_t a) const {
    if (a >= n_) {
        throw std::domain_error("residue " + std::to_string(a) +
                                " is not canonical mod " + std::to_string(n_));
    }
}

std::uint64_t ResidueRing::mul(std::uint64_t a, std::uint64_t b) const {
    require_canonical(a);
    require_canonical(b);
    // a, b < 2^32, so a*b fits in 64 bits exactly.
    return (a * b) % n_;
}

std::optional<std::uint64_t> ResidueRing::inverse(std::uint64_t a) const {
    require_canonical(a);
    if (n_ == 1) {
        return 0;  // trivial ring: 0 is the unit element
    }
    // Extended Euclid on (a, n): maintains old_r = a*old_s (mod n).
    std::int64_t old_r = static_cast<std::int64_t>(a);
    std::int64_t r = static_cast<std::int64_t>(n_);
    std::int64_t old_s = 1;
    std::int64_t s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        return std::nullopt;  // gcd(a, n) != 1
    }
    std::int64_t x = old_s % static_cast<std::int64_t>(n_);
    if (x < 0) {
        x += static_cast<std::int64_t>(n_);
    }
    return static_cast<std::uint64_t>(x);
}

std::vector<std::uint64_t> ResidueRing::units() const {
    std::vector<std::uint64_t> result;
    for (std::uint64_t a = 0; a < n_; ++a) {
        if (std::gcd(a, n_) == 1) {
            result.push_back(a);
        }
    }
    return result;  // {0} for n = 1, since gcd(0, 1) = 1
}

}  // namespace modtab
