#include "sidonkit/vbf.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sidonkit/errors.hpp"
#include "sidonkit/fwht.hpp"

namespace sidon {

VectorialBooleanFunction VectorialBooleanFunction::make(unsigned n, unsigned m,
                                                        std::vector<std::uint32_t> table) {
    if (n < 1 || n > 31 || m < 1 || m > 31)
        throw std::invalid_argument("VectorialBooleanFunction: dimensions out of range");
    if (table.size() != std::size_t(1) << n)
        throw std::invalid_argument("VectorialBooleanFunction: table must have 2^n entries");
    for (std::uint32_t v : table)
        if (m < 32 && (v >> m))
            throw std::invalid_argument("VectorialBooleanFunction: entry exceeds 2^m");
    return VectorialBooleanFunction{n, m, std::move(table)};
}

unsigned differential_uniformity(const VectorialBooleanFunction& f) {
    const std::size_t size = f.domain_size();
    std::vector<std::uint32_t> counts(std::size_t(1) << f.m);
    unsigned max_count = 0;
    for (std::size_t a = 1; a < size; ++a) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t x = 0; x < size; ++x) {
            std::uint32_t b = f.table[x] ^ f.table[x ^ a];
            if (++counts[b] > max_count) max_count = counts[b];
        }
    }
    return max_count;
}

bool is_apn(const VectorialBooleanFunction& f) {
    if (f.n != f.m) throw std::invalid_argument("is_apn: requires n = m");
    return differential_uniformity(f) == 2;
}

namespace {

void component_signs(const VectorialBooleanFunction& f, std::uint32_t b, std::int32_t* out) {
    const std::size_t size = f.domain_size();
    for (std::size_t x = 0; x < size; ++x)
        out[x] = 1 - 2 * dot(b, f.table[x]);
}

void check_spectrum_guard(const VectorialBooleanFunction& f) {
    if (f.n + f.m > 32)
        throw capacity_error("walsh_spectrum: n + m > 32");
}

}  // namespace

WalshSpectrum walsh_spectrum(const VectorialBooleanFunction& f) {
    check_spectrum_guard(f);
    const std::size_t size = f.domain_size();
    WalshSpectrum spec{f.n, f.m, std::vector<std::int32_t>(std::size_t(1) << (f.n + f.m))};
    for (std::uint32_t b = 0; b < (std::uint32_t(1) << f.m); ++b) {
        std::int32_t* row = spec.values.data() + (std::size_t(b) << f.n);
        component_signs(f, b, row);
        fwht(row, size);
    }
    return spec;
}

std::uint32_t linearity(const VectorialBooleanFunction& f) {
    check_spectrum_guard(f);
    const std::size_t size = f.domain_size();
    std::vector<std::int32_t> row(size);
    std::uint32_t best = 0;
    for (std::uint32_t b = 1; b < (std::uint32_t(1) << f.m); ++b) {
        component_signs(f, b, row.data());
        fwht(row.data(), size);
        for (std::int32_t w : row) {
            std::uint32_t aw = static_cast<std::uint32_t>(w < 0 ? -w : w);
            if (aw > best) best = aw;
        }
    }
    return best;
}

unsigned component_weight(const VectorialBooleanFunction& f, std::uint32_t a, int lambda) {
    if (a == 0) throw std::invalid_argument("component_weight: a must be nonzero");
    if (f.m < 32 && (a >> f.m)) throw std::invalid_argument("component_weight: a out of range");
    if (lambda != 0 && lambda != 1)
        throw std::invalid_argument("component_weight: lambda must be 0 or 1");
    unsigned count = 0;
    for (std::uint32_t v : f.table)
        if (dot(a, v) == lambda) ++count;
    return count;
}

bool is_quadratic(const VectorialBooleanFunction& f) {
    if (f.n != f.m) throw std::invalid_argument("is_quadratic: requires n = m");
    if (f.n > 16) throw capacity_error("is_quadratic: n > 16");
    const std::size_t size = f.domain_size();
    const std::uint32_t f0 = f.table[0];
    // linear extension of the derivative from its values on basis vectors
    std::vector<std::uint32_t> lin(size);
    for (std::size_t a = 1; a < size; ++a) {
        const std::uint32_t da0 = f.table[a] ^ f0;
        lin[0] = 0;
        for (std::size_t x = 1; x < size; ++x) {
            std::size_t low = x & (~x + 1);
            if (x == low)
                lin[x] = f.table[x ^ a] ^ f.table[x] ^ da0;  // basis value
            else
                lin[x] = lin[x ^ low] ^ lin[low];
            if (lin[x] != (f.table[x ^ a] ^ f.table[x] ^ da0)) return false;
        }
    }
    return true;
}

bool apn_linearity_bound_check(const VectorialBooleanFunction& f) {
    if (!is_apn(f)) throw std::invalid_argument("apn_linearity_bound_check: input is not APN");
    return static_cast<std::int64_t>(linearity(f)) <= (std::int64_t(1) << f.n) - 4;
}

namespace {

// strips comments, returns next non-blank line
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t end = line.find_last_not_of(" \t\r");
        if (end == std::string::npos) continue;
        line.erase(end + 1);
        return true;
    }
    return false;
}

}  // namespace

VectorialBooleanFunction read_truth_table(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no))
        throw parse_error("truth table: missing 'n m' header", line_no + 1);
    unsigned n = 0, m = 0;
    {
        std::istringstream hdr(line);
        if (!(hdr >> n >> m) || n < 1 || n > 31 || m < 1 || m > 31)
            throw parse_error("truth table: bad 'n m' header", line_no);
        std::string extra;
        if (hdr >> extra) throw parse_error("truth table: trailing tokens in header", line_no);
    }
    std::vector<std::uint32_t> table;
    table.reserve(std::size_t(1) << n);
    while (table.size() < (std::size_t(1) << n)) {
        if (!next_content_line(in, line, line_no))
            throw parse_error("truth table: expected 2^n entries", line_no + 1);
        std::istringstream row(line);
        std::string tok;
        while (row >> tok) {
            char* end = nullptr;
            unsigned long v = std::strtoul(tok.c_str(), &end, 16);
            if (tok[0] == '-' || end == tok.c_str() || *end != '\0')
                throw parse_error("truth table: bad hex value '" + tok + "'", line_no);
            if (m < 32 && (v >> m))
                throw parse_error("truth table: value exceeds 2^m", line_no);
            table.push_back(static_cast<std::uint32_t>(v));
            if (table.size() > (std::size_t(1) << n))
                throw parse_error("truth table: more than 2^n entries", line_no);
        }
    }
    return VectorialBooleanFunction::make(n, m, std::move(table));
}

VectorialBooleanFunction load_truth_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open truth table file: " + path);
    return read_truth_table(in);
}

void write_truth_table(const VectorialBooleanFunction& f, std::ostream& out) {
    out << f.n << ' ' << f.m << '\n';
    char buf[16];
    for (std::uint32_t v : f.table) {
        std::snprintf(buf, sizeof buf, "%x", v);
        out << buf << '\n';
    }
}

}  // namespace sidon
