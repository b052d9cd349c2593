#include "oracles.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace oracle {

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < 64; ++i)
        if ((b >> i) & 1) r ^= a << i;
    return r;
}

std::uint64_t poly_rem(std::uint64_t a, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("poly_rem: zero modulus");
    int dm = 63 - std::countl_zero(m);
    for (int i = 63; i >= dm; --i)
        if ((a >> i) & 1) a ^= m << (i - dm);
    return a;
}

std::uint32_t gf_mul(std::uint32_t modulus, std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(poly_rem(clmul(a, b), modulus));
}

bool is_irreducible_trial(std::uint64_t p) {
    int d = p == 0 ? -1 : 63 - std::countl_zero(p);
    if (d < 1) return false;
    for (int dd = 1; dd <= d / 2; ++dd)
        for (std::uint64_t g = std::uint64_t(1) << dd; g < std::uint64_t(1) << (dd + 1); ++g)
            if (poly_rem(p, g) == 0) return false;
    return true;
}

std::int64_t walsh_direct(const sidon::VectorialBooleanFunction& f, std::uint32_t a, std::uint32_t b) {
    std::int64_t sum = 0;
    for (std::uint32_t x = 0; x < (std::uint32_t(1) << f.n); ++x) {
        int e = (std::popcount(a & x) + std::popcount(b & f.table[x])) & 1;
        sum += e ? -1 : 1;
    }
    return sum;
}

std::int64_t set_walsh_direct(const sidon::PointSet& m, std::uint32_t a) {
    std::int64_t sum = 0;
    for (std::uint32_t v : m.points) sum += (std::popcount(a & v) & 1) ? -1 : 1;
    return sum;
}

unsigned ddt_max_full(const sidon::VectorialBooleanFunction& f) {
    const std::size_t dn = std::size_t(1) << f.n;
    const std::size_t dm = std::size_t(1) << f.m;
    std::vector<unsigned> ddt(dn * dm, 0);
    for (std::size_t a = 0; a < dn; ++a)
        for (std::size_t x = 0; x < dn; ++x)
            ++ddt[a * dm + (f.table[x] ^ f.table[x ^ a])];
    unsigned best = 0;
    for (std::size_t a = 1; a < dn; ++a)
        for (std::size_t b = 0; b < dm; ++b)
            if (ddt[a * dm + b] > best) best = ddt[a * dm + b];
    return best;
}

bool is_sidon_four_tuple(const sidon::PointSet& m) {
    const auto& p = m.points;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            for (std::size_t k = j + 1; k < p.size(); ++k)
                for (std::size_t l = k + 1; l < p.size(); ++l)
                    if ((p[i] ^ p[j] ^ p[k] ^ p[l]) == 0) return false;
    return true;
}

bool is_sum_free_triples(const sidon::PointSet& m) {
    const auto& p = m.points;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            for (std::size_t k = j + 1; k < p.size(); ++k)
                if ((p[i] ^ p[j] ^ p[k]) == 0) return false;
    return true;
}

bool is_maximal_reinsertion(const sidon::PointSet& m) {
    for (std::uint32_t x = 0; x < (std::uint32_t(1) << m.t); ++x) {
        if (m.contains(x)) continue;
        std::vector<std::uint32_t> extended(m.points);
        extended.push_back(x);
        if (sidon::is_sidon(sidon::PointSet::make(m.t, std::move(extended)))) return false;
    }
    return true;
}

std::optional<unsigned> min_distance_enumeration(const sidon::LinearCode& code) {
    const unsigned m = code.length();
    const unsigned t = code.check_bits;
    if (m > 63) throw std::invalid_argument("min_distance_enumeration: length > 63");

    // rows of H as m-bit masks
    std::vector<std::uint64_t> rows(t, 0);
    for (unsigned j = 0; j < m; ++j)
        for (unsigned i = 0; i < t; ++i)
            if ((code.columns[j] >> i) & 1) rows[i] |= std::uint64_t(1) << j;

    // row echelon with recorded pivot columns
    std::vector<unsigned> pivot_cols;
    unsigned row = 0;
    for (unsigned col = 0; col < m && row < t; ++col) {
        unsigned sel = row;
        while (sel < t && !((rows[sel] >> col) & 1)) ++sel;
        if (sel == t) continue;
        std::swap(rows[row], rows[sel]);
        for (unsigned i = 0; i < t; ++i)
            if (i != row && ((rows[i] >> col) & 1)) rows[i] ^= rows[row];
        pivot_cols.push_back(col);
        ++row;
    }
    const unsigned rank = row;

    // one kernel basis vector per free column
    std::vector<std::uint64_t> basis;
    std::vector<bool> is_pivot(m, false);
    for (unsigned c : pivot_cols) is_pivot[c] = true;
    for (unsigned col = 0; col < m; ++col) {
        if (is_pivot[col]) continue;
        std::uint64_t v = std::uint64_t(1) << col;
        for (unsigned r = 0; r < rank; ++r)
            if ((rows[r] >> col) & 1) v |= std::uint64_t(1) << pivot_cols[r];
        basis.push_back(v);
    }

    if (basis.size() > 20) throw std::invalid_argument("min_distance_enumeration: dimension > 20");
    unsigned best = std::numeric_limits<unsigned>::max();
    for (std::uint64_t combo = 1; combo < (std::uint64_t(1) << basis.size()); ++combo) {
        std::uint64_t word = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if ((combo >> i) & 1) word ^= basis[i];
        unsigned w = std::popcount(word);
        if (w < best) best = w;
    }
    if (best == std::numeric_limits<unsigned>::max()) return std::nullopt;
    return best;
}

}  // namespace oracle
