#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sidonkit/gf2.hpp"

namespace sidon {

// A finite subset of F_2^t. Points are kept sorted ascending without
// duplicates; all points < 2^t, 1 <= t <= kMaxDimension.
struct PointSet {
    unsigned t = 1;
    std::vector<std::uint32_t> points;

    // Sorts and deduplicates; validates range and dimension.
    static PointSet make(unsigned t, std::vector<std::uint32_t> points);

    std::size_t size() const { return points.size(); }
    bool contains(std::uint32_t v) const;

    bool operator==(const PointSet&) const = default;
};

// W_M(a) = sum_{m in M} (-1)^(a.m) for every a, values[a] = W_M(a).
struct SetWalshSpectrum {
    unsigned t = 1;
    std::vector<std::int32_t> values;
};

// All pairwise XORs of distinct elements are distinct -- equivalently no
// four distinct elements XOR to zero. O(|M|^2) with a 2^t-bit table.
bool is_sidon(const PointSet& m);

// No three distinct elements XOR to zero.
bool is_sum_free(const PointSet& m);

// No point of F_2^t \ M can be added without breaking the Sidon property.
// x is blocked iff x is in M or x = m1^m2^m3 for a distinct triple, so the
// check is an O(|M|^3) sweep marking a 2^t-bit table. Input must be Sidon.
bool is_maximal_sidon(const PointSet& m);

// FWHT of the 0/1 indicator vector of M.
SetWalshSpectrum set_walsh(const PointSet& m);

// lin M = max |W_M(a)| over a != 0
std::uint32_t set_linearity(const PointSet& m);

// { m ^ b : m in M }
PointSet translate(const PointSet& m, std::uint32_t b);

// { m in M : a.m == side }, still in ambient dimension t; a != 0
PointSet hyperplane_intersect(const PointSet& m, std::uint32_t a, int side);

// Re-encode points of the hyperplane H_a = {p : a.p = 0} in dimension t-1
// by deleting coordinate `pivot` (the lowest set bit of a); on H_a that
// coordinate is determined by the others, so this is a linear bijection.
// Every point must satisfy a.p = 0.
PointSet project_hyperplane(const PointSet& points, std::uint32_t a);

struct HyperplaneSlice {
    std::uint32_t a = 0;  // chosen hyperplane normal
    int side = 0;         // 0 if W_M(a) > 0, else 1
    PointSet sliced;      // in dimension t-1
};

// Pick a != 0 maximizing |W_M(a)| (ties: smallest a), take the heavier
// side and project it to F_2^(t-1). The side-1 case is first translated
// onto H_a (by the pivot unit vector, which the projection deletes anyway).
// |sliced| = (|M| + lin M)/2, and sliced is Sidon whenever M is.
// Requires |M| >= 1 and t >= 2.
HyperplaneSlice best_hyperplane_slice(const PointSet& m);

// Text format: header "t", then one point per line in decimal.
// '#' starts a comment; blank lines ignored.
PointSet read_point_set(std::istream& in);
PointSet load_point_set(const std::string& path);
void write_point_set(const PointSet& m, std::ostream& out);

}  // namespace sidon
