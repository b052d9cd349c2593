#include "sidonkit/gf2.hpp"

#include <stdexcept>
#include <string>

namespace sidon {

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    int dm = poly_degree(m);
    int da = poly_degree(a);
    while (da >= dm) {
        a ^= m << (da - dm);
        da = poly_degree(a);
    }
    return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

namespace {

// carry-less product reduced mod m; operands must have degree < deg(m) <= 31
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
    }
    return poly_mod(r, m);
}

}  // namespace

bool is_irreducible(std::uint64_t poly) {
    int d = poly_degree(poly);
    if (d < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
    if (d == 1) return true;

    const std::uint64_t x = 0b10;
    // h_i = x^(2^i) mod poly, by repeated squaring
    std::uint64_t h = poly_mod(x, poly);
    unsigned deg = static_cast<unsigned>(d);
    for (unsigned i = 1; i <= deg; ++i) {
        h = poly_mulmod(h, h, poly);
        if (i == deg) {
            if (h != poly_mod(x, poly)) return false;
        } else if (deg % i == 0) {
            // i = d/q for some prime q dividing d?
            unsigned cofactor = deg / i;
            bool cofactor_prime = cofactor >= 2;
            for (unsigned p = 2; p * p <= cofactor; ++p)
                if (cofactor % p == 0) { cofactor_prime = false; break; }
            if (cofactor_prime && poly_degree(poly_gcd(h ^ x, poly)) != 0) return false;
        }
    }
    return true;
}

bitvec smallest_irreducible(unsigned degree) {
    if (degree < 1 || degree > kMaxDimension)
        throw std::invalid_argument("smallest_irreducible: unsupported degree");
    for (std::uint64_t cand = std::uint64_t(1) << degree; cand < std::uint64_t(1) << (degree + 1); ++cand)
        if (is_irreducible(cand)) return static_cast<bitvec>(cand);
    throw std::logic_error("smallest_irreducible: none found");  // unreachable
}

FieldContext::FieldContext(unsigned n, bitvec modulus) : n_(n), modulus_(modulus) {
    if (n < 1 || n > kMaxDimension)
        throw std::invalid_argument("FieldContext: need 1 <= n <= " + std::to_string(kMaxDimension));
    if (poly_degree(modulus) != static_cast<int>(n))
        throw std::invalid_argument("FieldContext: modulus degree != n");
    if (!is_irreducible(modulus))
        throw std::invalid_argument("FieldContext: modulus is reducible");
}

FieldContext FieldContext::with_default_modulus(unsigned n) {
    return FieldContext(n, smallest_irreducible(n));
}

void FieldContext::check_element(bitvec a) const {
    if (a >> n_)
        throw std::invalid_argument("field element out of range for F_2^" + std::to_string(n_));
}

bitvec FieldContext::mul(bitvec a, bitvec b) const {
    check_element(a);
    check_element(b);
    std::uint32_t r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> n_) a ^= modulus_;
    }
    return r;
}

bitvec FieldContext::pow(bitvec a, std::uint64_t e) const {
    check_element(a);
    bitvec result = 1;
    bitvec base = a;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

bitvec FieldContext::inv(bitvec a) const {
    check_element(a);
    if (a == 0) return 0;
    return pow(a, order() - 2);
}

}  // namespace sidon
