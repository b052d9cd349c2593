#include "sidonkit/families.hpp"

#include <numeric>
#include <stdexcept>

#include "sidonkit/errors.hpp"
#include "sidonkit/intmath.hpp"

namespace sidon {

VectorialBooleanFunction power_function(const FieldContext& ctx, std::uint64_t exponent) {
    const unsigned n = ctx.degree();
    std::vector<std::uint32_t> table(std::size_t(1) << n);
    for (std::size_t x = 0; x < table.size(); ++x)
        table[x] = ctx.pow(static_cast<bitvec>(x), exponent);
    return VectorialBooleanFunction::make(n, n, std::move(table));
}

VectorialBooleanFunction gold_function(const FieldContext& ctx, unsigned k) {
    const unsigned n = ctx.degree();
    if (k < 1 || k >= n || std::gcd(k, n) != 1)
        throw std::invalid_argument("gold_function: need 1 <= k < n with gcd(k, n) = 1");
    return power_function(ctx, (std::uint64_t(1) << k) + 1);
}

VectorialBooleanFunction inverse_function(const FieldContext& ctx) {
    const unsigned n = ctx.degree();
    std::vector<std::uint32_t> table(std::size_t(1) << n);
    for (std::size_t x = 0; x < table.size(); ++x)
        table[x] = ctx.inv(static_cast<bitvec>(x));
    return VectorialBooleanFunction::make(n, n, std::move(table));
}

VectorialBooleanFunction dobbertin_function(const FieldContext& ctx) {
    const unsigned n = ctx.degree();
    if (n % 5 != 0) throw std::invalid_argument("dobbertin_function: n must be divisible by 5");
    const unsigned k = n / 5;
    const std::uint64_t e = (std::uint64_t(1) << (4 * k)) + (std::uint64_t(1) << (3 * k)) +
                            (std::uint64_t(1) << (2 * k)) + (std::uint64_t(1) << k) - 1;
    return power_function(ctx, e);
}

std::uint32_t inverse_linearity_formula(unsigned n) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("inverse_linearity_formula: n must be odd and >= 5");
    // floor(2^(n/2+1)) = isqrt(2^(n+2)); 2^(n+2) has an odd exponent, so it
    // is never a perfect square and the +1 below cannot overshoot
    std::uint64_t v = isqrt_u64(std::uint64_t(1) << (n + 2)) + 1;
    return static_cast<std::uint32_t>(v - v % 4);
}

std::uint64_t dobbertin_conjectured_linearity(unsigned n) {
    if (n % 5 != 0 || n == 0)
        throw std::invalid_argument("dobbertin_conjectured_linearity: n must be divisible by 5");
    return (std::uint64_t(1) << (3 * n / 5)) + (std::uint64_t(1) << (2 * n / 5));
}

PointSet graph(const VectorialBooleanFunction& f) {
    if (f.n + f.m > kMaxDimension)
        throw capacity_error("graph: ambient dimension n + m exceeds " + std::to_string(kMaxDimension));
    std::vector<std::uint32_t> points(f.domain_size());
    for (std::size_t x = 0; x < points.size(); ++x)
        points[x] = static_cast<std::uint32_t>(x) | (f.table[x] << f.n);
    return PointSet::make(f.n + f.m, std::move(points));
}

PointSet apn_slice_sidon(const VectorialBooleanFunction& f) {
    if (!is_apn(f)) throw std::invalid_argument("apn_slice_sidon: input is not APN");
    return best_hyperplane_slice(graph(f)).sliced;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p * p <= v; ++p)
        if (v % p == 0) {
            primes.push_back(p);
            while (v % p == 0) v /= p;
        }
    if (v > 1) primes.push_back(v);
    return primes;
}

bool is_primitive(const FieldContext& ctx, bitvec g, const std::vector<std::uint64_t>& primes) {
    const std::uint64_t group = ctx.order() - 1;
    for (std::uint64_t p : primes)
        if (ctx.pow(g, group / p) == 1) return false;
    return true;
}

}  // namespace

PointSet mult_subgroup_sidon(unsigned n) {
    if (n < 1 || 2 * n > kMaxDimension)
        throw std::invalid_argument("mult_subgroup_sidon: need 1 <= n <= " +
                                    std::to_string(kMaxDimension / 2));
    FieldContext ctx = FieldContext::with_default_modulus(2 * n);
    const std::uint64_t group = ctx.order() - 1;
    const std::vector<std::uint64_t> primes = prime_factors(group);
    bitvec g = 2;
    while (!is_primitive(ctx, g, primes)) ++g;
    // h generates the subgroup of order 2^n + 1
    const bitvec h = ctx.pow(g, (std::uint64_t(1) << n) - 1);
    std::vector<std::uint32_t> points;
    points.reserve((std::size_t(1) << n) + 2);
    bitvec cur = 1;
    for (std::size_t i = 0; i <= std::size_t(1) << n; ++i) {
        points.push_back(cur);
        cur = ctx.mul(cur, h);
    }
    if (n % 2 == 0) points.push_back(0);
    return PointSet::make(2 * n, std::move(points));
}

std::uint64_t classical_size(unsigned t) {
    if (t < 3 || t > 60) throw std::invalid_argument("classical_size: t out of range");
    if (t % 2 == 0) {
        unsigned n = t / 2;
        return (std::uint64_t(1) << n) + (n % 2 == 1 ? 1 : 2);
    }
    unsigned n = (t + 1) / 2;
    unsigned half = n % 2 == 0 ? n / 2 : (n - 1) / 2;
    return (std::uint64_t(1) << (n - 1)) + (std::uint64_t(1) << half);
}

std::uint64_t sidon_upper_bound(unsigned t) {
    if (t < 1 || t > 60) throw std::invalid_argument("sidon_upper_bound: t out of range");
    if (t % 2 == 1) return (std::uint64_t(1) << ((t + 1) / 2)) - 2;
    // nearest integer to sqrt(2^(t+1)): round up exactly when
    // 4 * 2^(t+1) >= (2r+1)^2
    const std::uint64_t square = std::uint64_t(1) << (t + 1);
    std::uint64_t r = isqrt_u64(square);
    if (4 * square >= (2 * r + 1) * (2 * r + 1)) ++r;
    return r;
}

FamilySpec parse_family_spec(const std::string& name) {
    FamilySpec spec;
    if (name == "inverse") {
        spec.kind = FamilySpec::Kind::inverse;
    } else if (name == "dobbertin") {
        spec.kind = FamilySpec::Kind::dobbertin;
    } else if (name == "mult-subgroup") {
        spec.kind = FamilySpec::Kind::mult_subgroup;
    } else if (name == "gold") {
        spec.kind = FamilySpec::Kind::gold;
        spec.gold_k = 1;
    } else if (name.rfind("gold:", 0) == 0) {
        spec.kind = FamilySpec::Kind::gold;
        std::size_t pos = 0;
        int k = 0;
        try {
            k = std::stoi(name.substr(5), &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad gold exponent parameter: " + name);
        }
        if (pos != name.size() - 5 || k < 1)
            throw std::invalid_argument("bad gold exponent parameter: " + name);
        spec.gold_k = static_cast<unsigned>(k);
    } else if (name.rfind("file:", 0) == 0) {
        spec.kind = FamilySpec::Kind::from_file;
        spec.path = name.substr(5);
        if (spec.path.empty()) throw std::invalid_argument("file: needs a path");
    } else {
        throw std::invalid_argument("unknown family: " + name);
    }
    return spec;
}

}  // namespace sidon
