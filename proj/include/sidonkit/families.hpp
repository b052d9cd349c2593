#pragma once

#include <cstdint>
#include <string>

#include "sidonkit/gf2.hpp"
#include "sidonkit/sidon.hpp"
#include "sidonkit/vbf.hpp"

namespace sidon {

// truth table of x -> x^e over the given field
VectorialBooleanFunction power_function(const FieldContext& ctx, std::uint64_t exponent);

// Gold function x -> x^(2^k + 1); requires gcd(k, n) = 1 and 1 <= k < n.
VectorialBooleanFunction gold_function(const FieldContext& ctx, unsigned k);

// x -> x^(-1) with 0 -> 0; APN exactly for odd n >= 5
VectorialBooleanFunction inverse_function(const FieldContext& ctx);

// Dobbertin function x -> x^(2^(4k) + 2^(3k) + 2^(2k) + 2^k - 1), n = 5k.
VectorialBooleanFunction dobbertin_function(const FieldContext& ctx);

// Exact linearity of the inverse function for odd n >= 5:
// floor(2^(n/2+1) + 1) rounded down to a multiple of 4, evaluated with
// exact integer square roots (floor(2^(n/2+1)) = isqrt(2^(n+2)), never a
// perfect square for odd n).
std::uint32_t inverse_linearity_formula(unsigned n);

// 2^(3n/5) + 2^(2n/5) for n divisible by 5; verified against computed
// spectra only for n = 5 and n = 10, conjectural beyond.
std::uint64_t dobbertin_conjectured_linearity(unsigned n);

// graph G_F = { x | (F(x) << n) } in dimension n + m; Sidon iff F is APN
PointSet graph(const VectorialBooleanFunction& f);

// Best hyperplane slice of the graph of an APN function: a Sidon set of
// size 2^(n-1) + lin(F)/2 in dimension 2n - 1. Input must be APN.
PointSet apn_slice_sidon(const VectorialBooleanFunction& f);

// The multiplicative subgroup of order 2^n + 1 in F_2^(2n), as points in
// dimension 2n; for even n the set stays Sidon with 0 appended.
// Size: 2^n + 1 (n odd), 2^n + 2 (n even).
PointSet mult_subgroup_sidon(unsigned n);

// Size of the classical construction in dimension t (t >= 3):
//   t = 2n:     2^n + 1 (n odd), 2^n + 2 (n even)
//   t = 2n - 1: 2^(n-1) + 2^((n-1)/2) (n odd), 2^(n-1) + 2^(n/2) (n even)
std::uint64_t classical_size(unsigned t);

// Formula upper bound for the maximum Sidon size in F_2^t:
// 2^((t+1)/2) - 2 for odd t, nearest integer to sqrt(2^(t+1)) for even t,
// both via exact integer arithmetic.
std::uint64_t sidon_upper_bound(unsigned t);

struct FamilySpec {
    enum class Kind { gold, inverse, dobbertin, mult_subgroup, from_file };
    Kind kind = Kind::inverse;
    unsigned gold_k = 1;
    std::string path;  // for from_file
};

// Parses the CLI family names: gold, gold:<k>, inverse, dobbertin,
// mult-subgroup, file:<path>.
FamilySpec parse_family_spec(const std::string& name);

}  // namespace sidon
