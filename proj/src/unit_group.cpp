#include "modtab/unit_group.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace modtab {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

// p^c, rejecting results beyond the modulus cap.
std::uint64_t checked_pow(std::uint64_t p, unsigned c) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < c; ++i) {
        if (result > kMaxModulus / p) {
            throw std::domain_error("prime power exceeds capacity 2^32 - 1");
        }
        result *= p;
    }
    return result;
}

AbelianGroupStructure make_structure(std::vector<std::uint64_t> orders) {
    AbelianGroupStructure s;
    s.cyclic_orders = std::move(orders);
    s.order = 1;
    s.exponent = 1;
    for (std::uint64_t k : s.cyclic_orders) {
        s.order *= k;
        s.exponent = std::lcm(s.exponent, k);
    }
    return s;
}

}  // namespace

Factorization factorize(std::uint64_t n) {
    if (n == 0 || n > kMaxModulus) {
        throw std::domain_error("factorize expects 1 <= n <= 2^32 - 1");
    }
    Factorization f;
    f.n = n;
    std::uint64_t m = n;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        unsigned c = 0;
        while (m % d == 0) {
            m /= d;
            ++c;
        }
        f.factors.push_back({d, c});
    }
    if (m > 1) {
        f.factors.push_back({m, 1});
    }
    if (!f.factors.empty() && f.factors.front().p == 2) {
        f.two_exponent = f.factors.front().c;
    }
    f.odd_part = n >> f.two_exponent;
    return f;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = 1;
    for (const auto& [p, c] : factorize(n).factors) {
        std::uint64_t pc1 = 1;
        for (unsigned i = 0; i + 1 < c; ++i) pc1 *= p;
        phi *= pc1 * (p - 1);
    }
    return phi;
}

AbelianGroupStructure local_unit_structure(std::uint64_t p, unsigned c) {
    if (!is_prime_u64(p)) {
        throw std::domain_error(std::to_string(p) + " is not prime");
    }
    if (c == 0) {
        throw std::domain_error("exponent must be at least 1");
    }
    const std::uint64_t pc = checked_pow(p, c);
    if (p == 2) {
        if (c == 1) return make_structure({1});
        if (c == 2) return make_structure({2});
        return make_structure({2, pc / 4});  // C_2 + C_{2^(c-2)}
    }
    return make_structure({pc / p * (p - 1)});  // cyclic of order phi(p^c)
}

AbelianGroupStructure unit_group_structure(std::uint64_t n) {
    if (n == 0 || n > kMaxModulus) {
        throw std::domain_error("modulus out of range");
    }
    if (n <= 2) {
        return make_structure({1});
    }
    std::vector<std::uint64_t> orders;
    for (const auto& [p, c] : factorize(n).factors) {
        for (std::uint64_t k : local_unit_structure(p, c).cyclic_orders) {
            if (k > 1) {
                orders.push_back(k);  // drop trivial factors
            }
        }
    }
    return make_structure(std::move(orders));
}

std::uint64_t group_exponent(const AbelianGroupStructure& s) {
    std::uint64_t e = 1;
    for (std::uint64_t k : s.cyclic_orders) {
        e = std::lcm(e, k);
    }
    return e;
}

DiagonalReport check_diagonal_structural(std::uint64_t n) {
    const ResidueRing ring(n);
    const auto structure = unit_group_structure(n);
    if (group_exponent(structure) <= 2) {
        return {n, true, std::nullopt, DiagonalMethod::structural};
    }
    // Some unit has order > 2; the smallest one is the witness.
    const std::uint64_t one = ring.one();
    for (std::uint64_t a = 2; a < n; ++a) {
        if (std::gcd(a, n) == 1 && (a * a) % n != one) {
            return {n, false, std::make_pair(a, *ring.inverse(a)),
                    DiagonalMethod::structural};
        }
    }
    throw std::logic_error("exponent > 2 but no failing unit found");
}

bool is_f2_vector_space(std::uint64_t n) {
    return check_diagonal_structural(n).holds;
}

CrtIsomorphism::CrtIsomorphism(std::uint64_t a, std::uint64_t b)
    : a_(a), b_(b) {
    if (a == 0 || b == 0) {
        throw std::domain_error("moduli must be positive");
    }
    if (std::gcd(a, b) != 1) {
        throw std::domain_error("moduli " + std::to_string(a) + " and " +
                                std::to_string(b) + " are not coprime");
    }
    if (a > kMaxModulus / b) {
        throw std::domain_error("product modulus exceeds capacity 2^32 - 1");
    }
    ab_ = a * b;
    inv_a_mod_b_ = *ResidueRing(b).inverse(a % b);
    inv_b_mod_a_ = *ResidueRing(a).inverse(b % a);
}

std::pair<std::uint64_t, std::uint64_t> CrtIsomorphism::forward(
    std::uint64_t x) const {
    if (x >= ab_) {
        throw std::domain_error("residue not canonical mod the product");
    }
    return {x % a_, x % b_};
}

std::uint64_t CrtIsomorphism::backward(std::uint64_t ra, std::uint64_t rb) const {
    if (ra >= a_ || rb >= b_) {
        throw std::domain_error("residue pair not canonical");
    }
    // Every factor is < ab <= 2^32, so each partial product fits 64 bits.
    const std::uint64_t t1 = (ra * b_) % ab_ * inv_b_mod_a_ % ab_;
    const std::uint64_t t2 = (rb * a_) % ab_ * inv_a_mod_b_ % ab_;
    return (t1 + t2) % ab_;
}

}  // namespace modtab
