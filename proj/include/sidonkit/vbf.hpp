#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sidonkit/gf2.hpp"

namespace sidon {

// Truth table of F: F_2^n -> F_2^m, table[x] = F(x).
struct VectorialBooleanFunction {
    unsigned n = 0;
    unsigned m = 0;
    std::vector<std::uint32_t> table;

    // Validates: table has exactly 2^n entries, every entry < 2^m.
    static VectorialBooleanFunction make(unsigned n, unsigned m, std::vector<std::uint32_t> table);

    std::uint32_t operator()(std::uint32_t x) const { return table[x]; }
    std::size_t domain_size() const { return std::size_t(1) << n; }
};

// Full spectrum W_F(a,b) = sum_x (-1)^(a.x + b.F(x)), stored dense,
// index (b << n) | a.
struct WalshSpectrum {
    unsigned n = 0;
    unsigned m = 0;
    std::vector<std::int32_t> values;

    std::int32_t at(std::uint32_t a, std::uint32_t b) const {
        return values[(std::size_t(b) << n) | a];
    }
};

// max over a != 0, b of #{x : F(x) + F(x+a) = b}. n = m not required.
unsigned differential_uniformity(const VectorialBooleanFunction& f);

// differential uniformity 2; requires n = m
bool is_apn(const VectorialBooleanFunction& f);

// Per component b: build the sign vector x -> (-1)^(b.F(x)) and run one
// FWHT of length 2^n. Guarded by n + m <= 32.
WalshSpectrum walsh_spectrum(const VectorialBooleanFunction& f);

// max |W_F(a,b)| over all a and b != 0; streams one component at a time
std::uint32_t linearity(const VectorialBooleanFunction& f);

// #{x : a.F(x) = lambda}, a != 0
unsigned component_weight(const VectorialBooleanFunction& f, std::uint32_t a, int lambda);

// true iff every derivative x -> F(x+a)+F(x)+F(a)+F(0) is linear,
// i.e. all components have algebraic degree <= 2. Requires n = m <= 16.
bool is_quadratic(const VectorialBooleanFunction& f);

// lin F <= 2^n - 4; input must be APN
bool apn_linearity_bound_check(const VectorialBooleanFunction& f);

// Text format: header "n m", then 2^n lines of F(x) in hex, row index = x.
// '#' starts a comment; blank lines ignored.
VectorialBooleanFunction read_truth_table(std::istream& in);
VectorialBooleanFunction load_truth_table(const std::string& path);
void write_truth_table(const VectorialBooleanFunction& f, std::ostream& out);

}  // namespace sidon
