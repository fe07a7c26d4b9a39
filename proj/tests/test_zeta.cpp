#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zetadiv/curves.hpp"
#include "zetadiv/errors.hpp"
#include "zetadiv/zeta.hpp"

using namespace zetadiv;

namespace {

std::vector<mpz_class> mpz_vec(std::initializer_list<long> v) {
    std::vector<mpz_class> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

const LPolynomial LD1{2, 2, IntPolynomial{1, 1, 0, 2, 4}};

}  // namespace

TEST_SUITE("zeta") {

TEST_CASE("lpoly_from_counts") {
    CHECK(lpoly_from_counts(2, 2, mpz_vec({4, 4})) == LD1);
    CHECK(lpoly_from_counts(2, 1, mpz_vec({3})).poly == IntPolynomial{1, 0, 2});
    CHECK(lpoly_from_counts(3, 1, mpz_vec({5})).poly == IntPolynomial{1, 1, 3});
    CHECK(lpoly_from_counts(2, 2, mpz_vec({4, 4, 16, 24})) == LD1);
    CHECK(lpoly_from_counts(5, 0, {}).poly == IntPolynomial{1});
    CHECK_THROWS_AS(lpoly_from_counts(2, 2, mpz_vec({4, 4, 17})), NotConsistent);
    CHECK_THROWS_AS(lpoly_from_counts(2, 2, mpz_vec({4})), InvalidInput);
}

TEST_CASE("counts_from_lpoly") {
    CHECK(counts_from_lpoly(LD1, 4).counts == mpz_vec({4, 4, 16, 24}));
    CHECK(counts_from_lpoly(LPolynomial{7, 0, IntPolynomial{1}}, 3).counts == mpz_vec({8, 50, 344}));
    CHECK(counts_from_lpoly(LPolynomial{3, 1, IntPolynomial{1, 1, 3}}, 2).counts == mpz_vec({5, 15}));  // s = (-1, -5)
}

TEST_CASE("extension_lpoly") {
    CHECK(extension_lpoly(LD1, 1) == LD1);
    const auto L2 = extension_lpoly(LD1, 2);
    CHECK(L2.q == 4);
    CHECK(L2.genus == 2);
    CHECK(L2.poly == IntPolynomial{1, -1, 4, -4, 16});
    CHECK(validate_lpoly(L2).ok);
    CHECK(extension_poly(IntPolynomial{1, -3}, 3) == IntPolynomial{1, -27});
    CHECK_THROWS(extension_poly(IntPolynomial{2, 1}, 2));
}

TEST_CASE("p_rank_manin") {
    CHECK(p_rank_manin(LD1, 2) == 1);
    CHECK(p_rank_manin(LPolynomial{2, 1, IntPolynomial{1, 0, 2}}, 2) == 0);
    CHECK(p_rank_manin(LPolynomial{3, 1, IntPolynomial{1, 1, 3}}, 3) == 1);
}

TEST_CASE("validate_lpoly") {
    CHECK(validate_lpoly(LD1, true).ok);
    CHECK(validate_lpoly(LPolynomial{2, 1, IntPolynomial{1, 0, 2}}, true).ok);
    const auto bad = validate_lpoly(LPolynomial{2, 1, IntPolynomial{1, 1}});
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.failures.empty());
    CHECK_FALSE(validate_lpoly(LPolynomial{2, 2, IntPolynomial{1, 1, 0, 2, 5}}).ok);   // functional equation
    CHECK_FALSE(validate_lpoly(LPolynomial{2, 1, IntPolynomial{2, 0, 4}}).ok);         // constant term
    // Satisfies the functional equation but has roots off the circle.
    CHECK_FALSE(validate_lpoly(LPolynomial{2, 1, IntPolynomial{1, 5, 2}}, true).ok);
    for (double r : normalized_root_moduli(LD1)) CHECK(r == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("roundtrip through counts on synthetic Weil polynomials") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 120; ++t) {
        const long q = std::array<long, 5>{2, 3, 4, 5, 9}[rng() % 5];
        const unsigned g = rng() % 9;
        const auto L = oracle::synthetic_weil(q, g, rng);
        CHECK(validate_lpoly(L).ok);
        const auto counts = counts_from_lpoly(L, std::max(1u, g)).counts;
        std::vector<mpz_class> first(counts.begin(), counts.begin() + g);
        CHECK(lpoly_from_counts(L.q, g, first) == L);
        CHECK(lpoly_from_counts(L.q, g, counts_from_lpoly(L, 2 * g + 1).counts) == L);
        for (std::size_t m = 0; m < counts.size(); ++m) CHECK(within_weil_bound(L.q, g, m + 1, counts[m]));
    }
}

TEST_CASE("extension consistency and tower law") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        const long q = std::array<long, 3>{2, 3, 5}[rng() % 3];
        const auto L = oracle::synthetic_weil(q, 1 + rng() % 5, rng);
        const unsigned a = 1 + rng() % 3, b = 1 + rng() % 3;
        CHECK(extension_lpoly(extension_lpoly(L, a), b) == extension_lpoly(L, a * b));
        const auto base = counts_from_lpoly(L, 12).counts;
        const auto ext = counts_from_lpoly(extension_lpoly(L, a), 12 / a).counts;
        for (unsigned m = 1; m * a <= 12; ++m) CHECK(ext[m - 1] == base[m * a - 1]);
        const auto p = static_cast<std::uint32_t>(q);
        CHECK(p_rank_manin(extension_lpoly(L, a), p) == p_rank_manin(L, p));
        CHECK(validate_lpoly(extension_lpoly(L, a)).ok);
    }
}

TEST_CASE("curve L-polynomials validate") {
    for (unsigned k = 1; k <= 3; ++k) {
        const auto c = dk_curve(k);
        const auto s = count_series(c, genus(c), {2, 34});
        const auto L = lpoly_from_counts(s.q, genus(c), s.counts);
        CHECK(validate_lpoly(L, true).ok);
        CHECK(p_rank_manin(L, 2) == two_rank_deuring(c));
    }
    const auto three = as2_curve(RationalMap(2, {1, 0, 1, 1}, {0, 1, 1}));
    const auto s = count_series(three, 4, {2, 34});
    const auto L = lpoly_from_counts(s.q, 2, s.counts);
    CHECK(validate_lpoly(L, true).ok);
    CHECK(p_rank_manin(L, 2) == 2);
}

}  // TEST_SUITE
