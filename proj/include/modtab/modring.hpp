#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace modtab {

// Largest supported modulus: below 2^32 the product of two canonical
// residues always fits a uint64_t exactly.  Larger moduli are rejected.
inline constexpr std::uint64_t kMaxModulus = 0xFFFFFFFFULL;

/// The ring Z_n with canonical representatives 0..n-1.
///
/// Z_1 is the trivial ring: its single element 0 doubles as the unit
/// element, and inverse(0) = 0.
class ResidueRing {
public:
    explicit ResidueRing(std::uint64_t n);

    std::uint64_t modulus() const { return n_; }

    // The multiplicative identity, i.e. 1 mod n (0 in the trivial ring).
    std::uint64_t one() const { return 1 % n_; }

    // (a * b) mod n, computed exactly.
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;

    // The unique b with a*b = 1 (mod n) when gcd(a, n) = 1, via the
    // extended Euclidean algorithm; empty otherwise.
    std::optional<std::uint64_t> inverse(std::uint64_t a) const;

    // All a in [0, n) with gcd(a, n) = 1, ascending.  units(Z_1) = {0}.
    std::vector<std::uint64_t> units() const;

private:
    std::uint64_t n_;

    void require_canonical(std::uint64_t a) const;
};

inline ResidueRing make_ring(std::uint64_t n) { return ResidueRing(n); }

}  // namespace modtab
