#include "sidonkit/codes.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "sidonkit/errors.hpp"

namespace sidon {

unsigned column_rank(const std::vector<std::uint32_t>& columns) {
    std::uint32_t pivot[32] = {};  // pivot[b] = basis vector with leading bit b
    unsigned rank = 0;
    for (std::uint32_t c : columns) {
        while (c != 0) {
            unsigned lead = 31 - std::countl_zero(c);
            if (pivot[lead] == 0) {
                pivot[lead] = c;
                ++rank;
                break;
            }
            c ^= pivot[lead];
        }
    }
    return rank;
}

LinearCode sidon_to_code(const PointSet& m) {
    if (!is_sidon(m)) throw std::invalid_argument("sidon_to_code: input is not Sidon");
    if (m.size() < m.t + 2)
        throw std::invalid_argument("sidon_to_code: need |M| >= t + 2 for a positive dimension");
    // translate by the smallest element, then discard the resulting 0;
    // what remains is a sum-free Sidon set
    const std::uint32_t base = m.points.front();
    std::vector<std::uint32_t> columns;
    columns.reserve(m.size() - 1);
    for (std::uint32_t v : m.points)
        if (v != base) columns.push_back(v ^ base);
    std::sort(columns.begin(), columns.end());

    unsigned rank = column_rank(columns);
    if (rank != m.t)
        throw std::invalid_argument("sidon_to_code: columns span only dimension " +
                                    std::to_string(rank) + " of " + std::to_string(m.t) +
                                    "; project the set down first");

    LinearCode code{m.t, std::move(columns), 0};
    if (!verify_distance_ge5(code))
        throw std::logic_error("sidon_to_code: distance certificate failed");  // unreachable
    code.certified_distance = 5;
    return code;
}

bool verify_distance_ge5(const LinearCode& code) {
    const unsigned t = code.check_bits;
    if (t < 1 || t > kMaxDimension) return false;
    const auto& cols = code.columns;
    std::vector<std::uint64_t> column_bits(((std::size_t(1) << t) >> 6) + 1);
    std::vector<std::uint64_t> pair_bits(column_bits.size());
    auto test = [](const std::vector<std::uint64_t>& bits, std::uint32_t v) {
        return (bits[v >> 6] >> (v & 63)) & 1;
    };
    auto set = [](std::vector<std::uint64_t>& bits, std::uint32_t v) {
        bits[v >> 6] |= std::uint64_t(1) << (v & 63);
    };
    for (std::uint32_t c : cols) {
        if (c == 0 || (c >> t) || test(column_bits, c)) return false;  // d >= 3 fails
        set(column_bits, c);
    }
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j) {
            std::uint32_t v = cols[i] ^ cols[j];
            // v in columns (and not one of the pair) => three columns sum to 0;
            // v = cols[i] or cols[j] is impossible here since columns are nonzero
            if (test(column_bits, v)) return false;
            // two disjoint pairs sharing a XOR => four columns sum to 0
            if (test(pair_bits, v)) return false;
            set(pair_bits, v);
        }
    return true;
}

std::optional<unsigned> exact_min_distance(const LinearCode& code, unsigned cap) {
    if (cap > 6) throw capacity_error("exact_min_distance: cap > 6");
    const auto& cols = code.columns;
    const std::size_t m = cols.size();

    // w = 1, 2: zero or repeated column
    if (cap >= 1)
        for (std::uint32_t c : cols)
            if (c == 0) return 1;
    if (cap >= 2) {
        std::unordered_set<std::uint32_t> seen;
        seen.reserve(m * 2);
        for (std::uint32_t c : cols)
            if (!seen.insert(c).second) return 2;
    }
    // From here on columns are distinct and nonzero, so any two pairs (or a
    // pair and a triple, or two triples) with equal XOR are automatically
    // disjoint: a shared index would force a relation of lower weight,
    // which has already been ruled out.
    std::unordered_set<std::uint32_t> member(cols.begin(), cols.end());
    if (cap >= 3) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (member.count(cols[i] ^ cols[j])) return 3;
    }
    std::unordered_set<std::uint32_t> pair_sums;
    if (cap >= 4) {
        pair_sums.reserve(m * m / 2 + 1);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (!pair_sums.insert(cols[i] ^ cols[j]).second) return 4;
    }
    if (cap >= 5) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const std::uint32_t dij = cols[i] ^ cols[j];
                for (std::size_t k = j + 1; k < m; ++k)
                    if (pair_sums.count(dij ^ cols[k])) return 5;
            }
    }
    if (cap >= 6) {
        std::unordered_set<std::uint32_t> triple_sums;
        triple_sums.reserve(m * m * m / 6 + 1);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const std::uint32_t dij = cols[i] ^ cols[j];
                for (std::size_t k = j + 1; k < m; ++k)
                    if (!triple_sums.insert(dij ^ cols[k]).second) return 6;
            }
    }
    return std::nullopt;
}

void export_parity_check(const LinearCode& code, std::ostream& out) {
    out << code.check_bits << ' ' << code.length() << ' ' << code.certified_distance << '\n';
    for (unsigned row = 0; row < code.check_bits; ++row) {
        for (std::size_t j = 0; j < code.columns.size(); ++j) {
            if (j) out << ' ';
            out << ((code.columns[j] >> row) & 1);
        }
        out << '\n';
    }
}

LinearCode import_parity_check(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw parse_error("parity check: missing header", 1);
    ++line_no;
    unsigned t = 0, m = 0, d = 0;
    {
        std::istringstream hdr(line);
        if (!(hdr >> t >> m >> d) || t < 1 || t > kMaxDimension)
            throw parse_error("parity check: bad 't m d' header", line_no);
    }
    std::vector<std::uint32_t> columns(m, 0);
    for (unsigned row = 0; row < t; ++row) {
        if (!std::getline(in, line)) throw parse_error("parity check: missing row", line_no + 1);
        ++line_no;
        std::istringstream bits(line);
        for (unsigned j = 0; j < m; ++j) {
            int bit = -1;
            if (!(bits >> bit) || (bit != 0 && bit != 1))
                throw parse_error("parity check: bad bit in row", line_no);
            columns[j] |= std::uint32_t(bit) << row;
        }
        int extra = 0;
        if (bits >> extra) throw parse_error("parity check: row too long", line_no);
    }
    return LinearCode{t, std::move(columns), d};
}

}  // namespace sidon
