#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sidonkit/codes.hpp"
#include "sidonkit/errors.hpp"
#include "sidonkit/families.hpp"

using namespace sidon;

namespace {

LinearCode make_code(unsigned t, std::vector<std::uint32_t> cols) {
    return LinearCode{t, std::move(cols), 0};
}

std::vector<std::uint32_t> random_columns(unsigned t, std::size_t m, std::mt19937& rng) {
    std::vector<std::uint32_t> cols(m);
    for (auto& c : cols) c = 1 + rng() % ((1u << t) - 1);
    return cols;
}

}  // namespace

TEST_CASE("column rank") {
    CHECK(column_rank({1, 2, 4, 8}) == 4);
    CHECK(column_rank({1, 2, 3}) == 2);
    CHECK(column_rank({}) == 0);
    CHECK(column_rank({0, 0}) == 0);
    CHECK(column_rank({7, 7, 7}) == 1);
}

TEST_CASE("sidon_to_code") {
    SUBCASE("inverse slice gives a [21, 12] code with full rank") {
        PointSet m = apn_slice_sidon(inverse_function(FieldContext::with_default_modulus(5)));
        LinearCode code = sidon_to_code(m);
        CHECK(code.length() == 21);
        CHECK(code.dimension() == 12);
        CHECK(code.check_bits == 9);
        CHECK(code.certified_distance == 5);
        CHECK(column_rank(code.columns) == 9);
        CHECK(verify_distance_ge5(code));
    }
    SUBCASE("|M| = t + 1 is rejected: the code would have dimension 0") {
        PointSet m = PointSet::make(3, {0, 1, 2, 4});
        REQUIRE(is_sidon(m));
        CHECK_THROWS_AS(sidon_to_code(m), std::invalid_argument);
    }
    SUBCASE("non-Sidon input is rejected") {
        CHECK_THROWS_AS(sidon_to_code(PointSet::make(2, {0, 1, 2, 3})), std::invalid_argument);
    }
    SUBCASE("rank-deficient span reports the actual dimension") {
        // a 9-point Sidon set living in a 6-dimensional subspace of F_2^7
        PointSet sub = mult_subgroup_sidon(3);
        PointSet embedded = PointSet::make(7, sub.points);
        REQUIRE(is_sidon(embedded));
        try {
            sidon_to_code(embedded);
            FAIL("expected invalid_argument");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("dimension 6") != std::string::npos);
        }
    }
}

TEST_CASE("verify_distance_ge5") {
    CHECK_FALSE(verify_distance_ge5(make_code(2, {1, 2, 3})));     // 1^2^3 = 0
    CHECK(verify_distance_ge5(make_code(5, {1, 2, 4, 8, 16})));    // standard basis
    CHECK_FALSE(verify_distance_ge5(make_code(3, {1, 2, 2})));     // repeat
    CHECK_FALSE(verify_distance_ge5(make_code(3, {0, 1, 2})));     // zero column
    CHECK_FALSE(verify_distance_ge5(make_code(3, {1, 2, 4, 7})));  // 1^2^4^7 = 0

    SUBCASE("codes from random Sidon sets always pass") {
        std::mt19937 rng(50);
        for (int i = 0; i < 60; ++i) {
            unsigned t = 4 + rng() % 7;
            // greedy Sidon set, then keep only full-rank spans
            std::vector<std::uint32_t> order(std::size_t(1) << t);
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<std::uint32_t> chosen;
            std::vector<bool> pair_seen(std::size_t(1) << t, false);
            for (std::uint32_t cand : order) {
                if (chosen.size() >= 4 + t) break;
                bool ok = true;
                for (std::uint32_t c : chosen)
                    if (pair_seen[c ^ cand]) { ok = false; break; }
                if (!ok) continue;
                for (std::uint32_t c : chosen) pair_seen[c ^ cand] = true;
                chosen.push_back(cand);
            }
            PointSet m = PointSet::make(t, chosen);
            if (m.size() < t + 2) continue;
            LinearCode code;
            try {
                code = sidon_to_code(m);
            } catch (const std::invalid_argument&) {
                continue;  // rank-deficient sample
            }
            CHECK(verify_distance_ge5(code));
            // conversely: the columns form a sum-free Sidon set, and adding
            // back 0 keeps the set Sidon
            PointSet cols = PointSet::make(t, code.columns);
            CHECK(is_sidon(cols));
            CHECK(is_sum_free(cols));
            std::vector<std::uint32_t> with_zero(code.columns);
            with_zero.push_back(0);
            CHECK(is_sidon(PointSet::make(t, with_zero)));
        }
    }
}

TEST_CASE("exact_min_distance") {
    CHECK(exact_min_distance(make_code(2, {1, 2, 3}), 5) == 3);
    CHECK(exact_min_distance(make_code(3, {0, 1, 2}), 5) == 1);
    CHECK(exact_min_distance(make_code(3, {1, 2, 2}), 5) == 2);
    CHECK(exact_min_distance(make_code(3, {1, 2, 4, 7}), 5) == 4);
    CHECK(exact_min_distance(make_code(4, {1, 2, 4, 8, 15}), 5) == 5);
    CHECK(exact_min_distance(make_code(5, {1, 2, 4, 8, 16, 31}), 6) == 6);
    CHECK(exact_min_distance(make_code(5, {1, 2, 4, 8, 16, 31}), 5) == std::nullopt);
    CHECK(exact_min_distance(make_code(5, {1, 2, 4, 8, 16}), 5) == std::nullopt);
    CHECK_THROWS_AS(exact_min_distance(make_code(3, {1}), 7), capacity_error);

    SUBCASE("agrees with codeword enumeration on random codes") {
        std::mt19937 rng(51);
        for (int i = 0; i < 200; ++i) {
            unsigned t = 3 + rng() % 8;
            std::size_t m = 2 + rng() % (t + 12);
            if (m > t + 14) m = t + 14;
            LinearCode code = make_code(t, random_columns(t, m, rng));
            auto enumerated = oracle::min_distance_enumeration(code);
            for (unsigned cap : {4u, 5u, 6u}) {
                auto fast = exact_min_distance(code, cap);
                if (enumerated && *enumerated <= cap) {
                    CHECK(fast == enumerated);
                } else {
                    CHECK(fast == std::nullopt);
                }
            }
        }
    }
}

TEST_CASE("parity check export and import") {
    SUBCASE("two-column identity") {
        std::ostringstream out;
        export_parity_check(make_code(2, {1, 2}), out);
        CHECK(out.str() == "2 2 0\n1 0\n0 1\n");
    }
    SUBCASE("round trip") {
        std::mt19937 rng(52);
        for (int i = 0; i < 30; ++i) {
            unsigned t = 2 + rng() % 10;
            LinearCode code = make_code(t, random_columns(t, 3 + rng() % 20, rng));
            code.certified_distance = 5;
            std::stringstream buf;
            export_parity_check(code, buf);
            CHECK(import_parity_check(buf) == code);
        }
    }
    SUBCASE("malformed inputs") {
        std::istringstream empty("");
        CHECK_THROWS_AS(import_parity_check(empty), parse_error);
        std::istringstream bad_bit("2 2 5\n1 0\n0 2\n");
        CHECK_THROWS_AS(import_parity_check(bad_bit), parse_error);
        std::istringstream missing_row("2 3 5\n1 0 1\n");
        CHECK_THROWS_AS(import_parity_check(missing_row), parse_error);
    }
}
