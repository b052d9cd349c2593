#include "sidonkit/sidon.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sidonkit/errors.hpp"
#include "sidonkit/fwht.hpp"

namespace sidon {

namespace {

// flat 2^t-bit occupancy table, allocated per call
class BitTable {
public:
    explicit BitTable(unsigned t) : words_((std::size_t(1) << t >> 6) + 1) {}
    bool test(std::uint32_t v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
    void set(std::uint32_t v) { words_[v >> 6] |= std::uint64_t(1) << (v & 63); }
    // returns previous value
    bool test_and_set(std::uint32_t v) {
        std::uint64_t& w = words_[v >> 6];
        std::uint64_t mask = std::uint64_t(1) << (v & 63);
        bool old = w & mask;
        w |= mask;
        return old;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

private:
    std::vector<std::uint64_t> words_;
};

}  // namespace

PointSet PointSet::make(unsigned t, std::vector<std::uint32_t> points) {
    if (t < 1) throw std::invalid_argument("PointSet: t must be >= 1");
    if (t > kMaxDimension)
        throw capacity_error("PointSet: t > " + std::to_string(kMaxDimension));
    for (std::uint32_t p : points)
        if (p >> t) throw std::invalid_argument("PointSet: point exceeds 2^t");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return PointSet{t, std::move(points)};
}

bool PointSet::contains(std::uint32_t v) const {
    return std::binary_search(points.begin(), points.end(), v);
}

bool is_sidon(const PointSet& m) {
    // Sidon <=> all pairwise XORs of distinct elements are distinct
    BitTable seen(m.t);
    const auto& p = m.points;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (seen.test_and_set(p[i] ^ p[j])) return false;
    return true;
}

bool is_sum_free(const PointSet& m) {
    const auto& p = m.points;
    BitTable member(m.t);
    for (std::uint32_t v : p) member.set(v);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            std::uint32_t v = p[i] ^ p[j];
            // v == p[i] or p[j] only when the other is 0: not three distinct
            if (member.test(v) && v != p[i] && v != p[j]) return false;
        }
    return true;
}

bool is_maximal_sidon(const PointSet& m) {
    if (!is_sidon(m)) throw std::invalid_argument("is_maximal_sidon: input is not Sidon");
    // x can be added iff x is outside M and never equals a XOR of three
    // distinct elements (x = m1^m2^m3 forces x distinct from all three,
    // since e.g. x = m1 would give m2 = m3)
    BitTable blocked(m.t);
    const auto& p = m.points;
    for (std::uint32_t v : p) blocked.set(v);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            std::uint32_t d = p[i] ^ p[j];
            for (std::size_t k = j + 1; k < p.size(); ++k) blocked.set(d ^ p[k]);
        }
    return blocked.count() == std::size_t(1) << m.t;
}

SetWalshSpectrum set_walsh(const PointSet& m) {
    std::vector<std::int32_t> indicator(std::size_t(1) << m.t, 0);
    for (std::uint32_t v : m.points) indicator[v] = 1;
    fwht(indicator.data(), indicator.size());
    return SetWalshSpectrum{m.t, std::move(indicator)};
}

std::uint32_t set_linearity(const PointSet& m) {
    SetWalshSpectrum spec = set_walsh(m);
    std::uint32_t best = 0;
    for (std::size_t a = 1; a < spec.values.size(); ++a) {
        std::int32_t w = spec.values[a];
        std::uint32_t aw = static_cast<std::uint32_t>(w < 0 ? -w : w);
        if (aw > best) best = aw;
    }
    return best;
}

PointSet translate(const PointSet& m, std::uint32_t b) {
    if (b >> m.t) throw std::invalid_argument("translate: b exceeds 2^t");
    std::vector<std::uint32_t> moved(m.points);
    for (std::uint32_t& v : moved) v ^= b;
    std::sort(moved.begin(), moved.end());
    return PointSet{m.t, std::move(moved)};
}

PointSet hyperplane_intersect(const PointSet& m, std::uint32_t a, int side) {
    if (a == 0) throw std::invalid_argument("hyperplane_intersect: a must be nonzero");
    if (a >> m.t) throw std::invalid_argument("hyperplane_intersect: a exceeds 2^t");
    if (side != 0 && side != 1) throw std::invalid_argument("hyperplane_intersect: side must be 0 or 1");
    std::vector<std::uint32_t> kept;
    for (std::uint32_t v : m.points)
        if (dot(a, v) == side) kept.push_back(v);
    return PointSet{m.t, std::move(kept)};
}

namespace {

std::uint32_t delete_coordinate(std::uint32_t v, unsigned pivot) {
    std::uint32_t low = v & ((std::uint32_t(1) << pivot) - 1);
    return (v >> (pivot + 1) << pivot) | low;
}

}  // namespace

PointSet project_hyperplane(const PointSet& points, std::uint32_t a) {
    if (a == 0) throw std::invalid_argument("project_hyperplane: a must be nonzero");
    if (a >> points.t) throw std::invalid_argument("project_hyperplane: a exceeds 2^t");
    if (points.t < 2) throw std::invalid_argument("project_hyperplane: t must be >= 2");
    const unsigned pivot = std::countr_zero(a);
    std::vector<std::uint32_t> mapped;
    mapped.reserve(points.size());
    for (std::uint32_t v : points.points) {
        if (dot(a, v) != 0)
            throw std::invalid_argument("project_hyperplane: point off the hyperplane");
        mapped.push_back(delete_coordinate(v, pivot));
    }
    std::sort(mapped.begin(), mapped.end());
    return PointSet{points.t - 1, std::move(mapped)};
}

HyperplaneSlice best_hyperplane_slice(const PointSet& m) {
    if (m.points.empty()) throw std::invalid_argument("best_hyperplane_slice: empty set");
    if (m.t < 2) throw std::invalid_argument("best_hyperplane_slice: t must be >= 2");
    SetWalshSpectrum spec = set_walsh(m);
    std::uint32_t best_a = 1;
    std::int64_t best_abs = -1;
    for (std::size_t a = 1; a < spec.values.size(); ++a) {
        std::int64_t aw = std::abs(std::int64_t(spec.values[a]));
        if (aw > best_abs) {
            best_abs = aw;
            best_a = static_cast<std::uint32_t>(a);
        }
    }
    const int side = spec.values[best_a] > 0 ? 0 : 1;
    PointSet half = hyperplane_intersect(m, best_a, side);
    if (side == 1) {
        // move the affine side onto H_a; the translation vector is the
        // pivot coordinate, which the projection deletes anyway
        half = translate(half, std::uint32_t(1) << std::countr_zero(best_a));
    }
    return HyperplaneSlice{best_a, side, project_hyperplane(half, best_a)};
}

PointSet read_point_set(std::istream& in) {
    std::string line;
    int line_no = 0;
    unsigned t = 0;
    bool have_header = false;
    std::vector<std::uint32_t> points;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::string tok;
        while (row >> tok) {
            char* end = nullptr;
            unsigned long v = std::strtoul(tok.c_str(), &end, 10);
            if (tok[0] == '-' || end == tok.c_str() || *end != '\0')
                throw parse_error("point set: bad integer '" + tok + "'", line_no);
            if (!have_header) {
                if (v < 1 || v > kMaxDimension)
                    throw parse_error("point set: dimension t out of range", line_no);
                t = static_cast<unsigned>(v);
                have_header = true;
            } else {
                if (v >> t) throw parse_error("point set: point exceeds 2^t", line_no);
                points.push_back(static_cast<std::uint32_t>(v));
            }
        }
    }
    if (!have_header) throw parse_error("point set: missing dimension header", line_no + 1);
    return PointSet::make(t, std::move(points));
}

PointSet load_point_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open point set file: " + path);
    return read_point_set(in);
}

void write_point_set(const PointSet& m, std::ostream& out) {
    out << m.t << '\n';
    for (std::uint32_t v : m.points) out << v << '\n';
}

}  // namespace sidon
