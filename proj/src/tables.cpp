#include "modtab/tables.hpp"

#include <numeric>
#include <sstream>
#include <string>

#include "modtab/errors.hpp"

namespace modtab {

const char* to_string(DiagonalMethod m) {
    switch (m) {
        case DiagonalMethod::table: return "table";
        case DiagonalMethod::units: return "units";
        case DiagonalMethod::structural: return "structural";
    }
    return "?";
}

std::vector<std::vector<std::uint32_t>> render_table(const ResidueRing& ring,
                                                     std::uint64_t cap) {
    const std::uint64_t n = ring.modulus();
    if (n > cap) {
        throw SizeLimitError("table render cap is " + std::to_string(cap) +
                             ", got n = " + std::to_string(n));
    }
    std::vector<std::vector<std::uint32_t>> m(n);
    for (std::uint64_t a = 0; a < n; ++a) {
        m[a].resize(n);
        for (std::uint64_t b = 0; b < n; ++b) {
            m[a][b] = static_cast<std::uint32_t>((a * b) % n);
        }
    }
    return m;
}

DiagonalReport check_diagonal_table(std::uint64_t n, std::uint64_t cap) {
    const ResidueRing ring(n);
    if (n > cap) {
        throw SizeLimitError(
            "pair-scan cap is " + std::to_string(cap) + ", got n = " +
            std::to_string(n) + "; use the units or structural method");
    }
    const std::uint64_t one = ring.one();
    for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = a + 1; b < n; ++b) {
            if ((a * b) % n == one) {
                return {n, false, std::make_pair(a, b), DiagonalMethod::table};
            }
        }
    }
    return {n, true, std::nullopt, DiagonalMethod::table};
}

DiagonalReport check_diagonal_units(std::uint64_t n) {
    const ResidueRing ring(n);
    const std::uint64_t one = ring.one();
    for (std::uint64_t a = 0; a < n; ++a) {
        if (std::gcd(a, n) != 1) {
            continue;
        }
        if ((a * a) % n != one) {
            return {n, false, std::make_pair(a, *ring.inverse(a)),
                    DiagonalMethod::units};
        }
    }
    return {n, true, std::nullopt, DiagonalMethod::units};
}

CubeReport cube_check(std::uint64_t n, std::uint64_t cap) {
    const ResidueRing ring(n);
    if (n > cap) {
        throw SizeLimitError("cube scan cap is " + std::to_string(cap) +
                             ", got n = " + std::to_string(n));
    }
    const std::uint64_t one = ring.one();
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = i; j < n; ++j) {
            const std::uint64_t ij = (i * j) % n;
            for (std::uint64_t k = j; k < n; ++k) {
                if ((ij * k) % n == one && !(i == j && j == k)) {
                    return {n, false, std::array<std::uint64_t, 3>{i, j, k}};
                }
            }
        }
    }
    return {n, true, std::nullopt};
}

std::vector<std::uint64_t> cube_scan(std::uint64_t limit, std::uint64_t cap) {
    if (limit > cap) {
        throw SizeLimitError("cube scan cap is " + std::to_string(cap) +
                             ", got limit = " + std::to_string(limit));
    }
    std::vector<std::uint64_t> result;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        if (cube_check(n, cap).holds) {
            result.push_back(n);
        }
    }
    return result;
}

std::string format_table_text(const std::vector<std::vector<std::uint32_t>>& m) {
    std::ostringstream out;
    std::ostringstream header;
    header << "*|";
    for (std::size_t b = 0; b < m.size(); ++b) {
        header << (b ? " " : "") << b;
    }
    const std::string head = header.str();
    out << head << '\n' << std::string(head.size(), '-') << '\n';
    for (std::size_t a = 0; a < m.size(); ++a) {
        out << a << '|';
        for (std::size_t b = 0; b < m[a].size(); ++b) {
            out << (b ? " " : "") << m[a][b];
        }
        out << '\n';
    }
    return out.str();
}

std::string format_table_csv(const std::vector<std::vector<std::uint32_t>>& m) {
    std::ostringstream out;
    for (const auto& row : m) {
        for (std::size_t b = 0; b < row.size(); ++b) {
            out << (b ? "," : "") << row[b];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace modtab
