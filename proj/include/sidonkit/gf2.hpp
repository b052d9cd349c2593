#pragma once

#include <bit>
#include <cstdint>

namespace sidon {

// An element of F_2^t packed into an integer: bit i carries coordinate a_i,
// so the integer sum a_i * 2^i "is" the vector (a_0, ..., a_{t-1}).
using bitvec = std::uint32_t;

// Largest ambient dimension the point-set machinery accepts. 2^25-bit
// occupancy tables are 4 MiB, so everything stays desk-scale.
inline constexpr unsigned kMaxDimension = 25;

inline int parity(std::uint32_t x) { return std::popcount(x) & 1; }

// Coordinate dot product a.b over F_2 (a non-degenerate bilinear form).
inline int dot(bitvec a, bitvec b) { return parity(a & b); }

// --- polynomials over GF(2), coefficient i = bit i ---

// degree of p, or -1 for the zero polynomial
inline int poly_degree(std::uint64_t p) {
    return p == 0 ? -1 : 63 - std::countl_zero(p);
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m);
std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b);

// Irreducibility over GF(2) via the Rabin criterion:
// p of degree d is irreducible iff x^(2^d) == x (mod p) and
// gcd(x^(2^(d/q)) - x, p) = 1 for every prime q dividing d.
bool is_irreducible(std::uint64_t poly);

// Lexicographically smallest (as integer) monic irreducible of the given
// degree; this is the polynomial listed in data/moduli.txt.
bitvec smallest_irreducible(unsigned degree);

// F_2^n realised as GF(2)[x] residues modulo a fixed irreducible polynomial.
// Immutable after construction; all operations are pure.
class FieldContext {
public:
    // Throws std::invalid_argument unless modulus is monic of degree n
    // and irreducible. 1 <= n <= kMaxDimension.
    FieldContext(unsigned n, bitvec modulus);

    static FieldContext with_default_modulus(unsigned n);

    unsigned degree() const { return n_; }
    bitvec modulus() const { return modulus_; }
    std::uint64_t order() const { return std::uint64_t(1) << n_; }

    bitvec mul(bitvec a, bitvec b) const;
    // square-and-multiply; 0^0 = 1, 0^e = 0 for e > 0
    bitvec pow(bitvec a, std::uint64_t e) const;
    // a^(2^n - 2); maps 0 to 0
    bitvec inv(bitvec a) const;

private:
    unsigned n_;
    bitvec modulus_;

    void check_element(bitvec a) const;
};

}  // namespace sidon
