#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sidonkit/sidon.hpp"

namespace sidon {

// A binary linear code described by its parity-check matrix: each column
// is a t-bit value, column j = columns[j], row i = bit i. Parameters are
// [length, length - check_bits, >= certified_distance].
struct LinearCode {
    unsigned check_bits = 0;
    std::vector<std::uint32_t> columns;
    unsigned certified_distance = 0;

    unsigned length() const { return static_cast<unsigned>(columns.size()); }
    int dimension() const { return static_cast<int>(columns.size()) - static_cast<int>(check_bits); }

    bool operator==(const LinearCode&) const = default;
};

// GF(2) rank of a set of column vectors.
unsigned column_rank(const std::vector<std::uint32_t>& columns);

// Translate M by its smallest element (so 0 joins the set), drop 0, and
// use the remaining points as parity-check columns: a [|M|-1, |M|-1-t,
// >=5] code. Requires: M Sidon, |M| >= t + 2, columns of full rank t
// (rank deficit is an error reporting the actual span dimension).
LinearCode sidon_to_code(const PointSet& m);

// Minimum distance >= 5 certificate: columns distinct and nonzero, no
// three and no four distinct columns XOR to zero (i.e. the columns form a
// sum-free Sidon set). O(m^2) with a pair-XOR occupancy table.
bool verify_distance_ge5(const LinearCode& code);

// Smallest w <= cap with w columns XOR-ing to zero, or nullopt for
// "every codeword has weight > cap". Weights 5 and 6 use a
// meet-in-the-middle split (triple sums against pair sums / other triple
// sums). cap <= 6.
std::optional<unsigned> exact_min_distance(const LinearCode& code, unsigned cap);

// Text format: header "t m d", then t rows of m space-separated bits,
// row i column j = bit i of columns[j]. Byte-deterministic.
void export_parity_check(const LinearCode& code, std::ostream& out);
LinearCode import_parity_check(std::istream& in);

}  // namespace sidon
