#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zetadiv/char_sum.hpp"
#include "zetadiv/errors.hpp"
#include "zetadiv/finite_field.hpp"
#include "zetadiv/gfp_poly.hpp"
#include "zetadiv/rational_map.hpp"

using namespace zetadiv;

namespace {

// Brute-force irreducibility: no factor of degree <= m/2, by trial division
// against every monic polynomial of that degree.
bool irreducible_by_trial(const gfp::Poly& f, std::uint32_t p) {
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            gfp::Poly g(d + 1);
            std::uint64_t w = v;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(w % p);
                w /= p;
            }
            g[d] = 1;
            if (gfp::rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::uint64_t element_order(const FiniteField& F, FieldElement a) {
    std::uint64_t n = 1;
    for (auto x = a; !(x == F.one()); x = F.mul(x, a)) ++n;
    return n;
}

}  // namespace

TEST_SUITE("finite_fields") {

TEST_CASE("prime field GF(2)") {
    const auto F = make_field(2, 1);
    CHECK(F.order() == 2);
    CHECK(F.modulus() == gfp::Poly{0, 1});
    CHECK(F.trace(F.one()) == 1);
    CHECK(F.generator() == F.one());
}

TEST_CASE("default moduli") {
    CHECK(make_field(2, 4).modulus() == gfp::Poly{1, 1, 0, 0, 1});
    CHECK(make_field(3, 2).modulus() == gfp::Poly{1, 0, 1});
    CHECK(default_modulus(2, 2) == gfp::Poly{1, 1, 1});
    CHECK(default_modulus(2, 3) == gfp::Poly{1, 1, 0, 1});
}

TEST_CASE("default modulus is the first irreducible by value") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (unsigned m = 1; m <= (p == 2 ? 10u : 4u); ++m) {
            const auto mod = default_modulus(p, m);
            REQUIRE(mod.size() == m + 1);
            CHECK(irreducible_by_trial(mod, p));
            // Nothing smaller of the same degree is irreducible.
            const std::uint64_t base = gfp::encode(mod, p);
            std::uint64_t low = 1;
            for (unsigned i = 0; i < m; ++i) low *= p;
            for (std::uint64_t v = low; v < base; ++v) CHECK_FALSE(irreducible_by_trial(gfp::decode(v, p), p));
        }
    }
}

TEST_CASE("Rabin test agrees with trial division") {
    for (std::uint32_t p : {2u, 3u}) {
        for (unsigned m = 1; m <= 6; ++m) {
            std::uint64_t low = 1;
            for (unsigned i = 0; i < m; ++i) low *= p;
            for (std::uint64_t v = low; v < 2 * low; ++v) {
                const auto f = gfp::decode(v, p);
                CHECK(gfp::is_irreducible(f, p) == irreducible_by_trial(f, p));
            }
        }
    }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(make_field(4, 2), NoPrime);
    CHECK_THROWS_AS(make_field(2, 2, gfp::Poly{1, 0, 1}), ModulusReducible);
    CHECK_THROWS_AS(make_field(3, 2, gfp::Poly{2, 0, 1}), ModulusReducible);
    CHECK_THROWS_AS(make_field(2, 49), TooLarge);
    CHECK_NOTHROW(make_field(2, 4, gfp::Poly{1, 0, 0, 1, 1}));
}

TEST_CASE("generator has full order") {
    for (auto [p, m] : {std::pair{2u, 1u}, {2u, 4u}, {2u, 8u}, {2u, 11u}, {3u, 2u}, {3u, 5u}, {5u, 3u}, {7u, 2u}}) {
        const auto F = make_field(p, m);
        CHECK(element_order(F, F.generator()) == F.order() - 1);
    }
    // Large field: order only checked through the prime factors of q - 1.
    const auto F = make_field(2, 33);
    const std::uint64_t n = F.order() - 1;
    CHECK(F.pow(F.generator(), n) == F.one());
    for (auto r : gfp::prime_factors(n)) CHECK_FALSE(F.pow(F.generator(), n / r) == F.one());
}

TEST_CASE("trace in GF(4)") {
    const auto F = make_field(2, 2);
    const auto w = F.x();
    CHECK(F.mul(w, F.mul(w, w)) == F.one());
    CHECK(F.trace(w) == 1);
    CHECK(F.trace(F.one()) == 0);
    CHECK(F.trace(F.zero()) == 0);
}

TEST_CASE("binary trace mask equals the definition, m <= 12") {
    for (unsigned m = 1; m <= 12; ++m) {
        const auto F = make_field(2, m);
        const oracle::NaiveField N(2, F.modulus());
        for (std::uint64_t i = 0; i < F.order(); ++i) {
            const std::uint32_t t = F.trace(FieldElement{i});
            if (t != N.trace(N.element(i))) {
                FAIL("m=" << m << " element " << i);
            }
            if (t != F.trace_by_definition(FieldElement{i})) FAIL("definition m=" << m);
        }
    }
}

TEST_CASE("arithmetic matches schoolbook reference") {
    std::mt19937_64 rng(7);
    for (auto [p, m] : {std::pair{2u, 5u}, {2u, 13u}, {2u, 31u}, {2u, 40u}, {3u, 4u}, {3u, 12u}, {5u, 6u}, {3u, 25u}}) {
        const auto F = make_field(p, m);
        const oracle::NaiveField N(p, F.modulus());
        std::uniform_int_distribution<std::uint64_t> pick(0, F.order() - 1);
        for (int t = 0; t < 300; ++t) {
            const auto a = pick(rng), b = pick(rng);
            const FieldElement A{a}, B{b};
            CHECK(F.mul(A, B).packed == N.index(N.mul(N.element(a), N.element(b))));
            CHECK(F.add(A, B).packed == N.index(N.add(N.element(a), N.element(b))));
            CHECK(F.add(F.sub(A, B), B) == A);
            CHECK(F.add(A, F.neg(A)) == F.zero());
            if (a != 0) CHECK(F.mul(A, F.inv(A)) == F.one());
            CHECK(F.pow(A, F.order()) == A);
        }
        CHECK_THROWS_AS(F.inv(F.zero()), ZeroDivisor);
    }
}

TEST_CASE("trace is linear and Frobenius invariant") {
    std::mt19937_64 rng(11);
    for (auto [p, m] : {std::pair{2u, 9u}, {2u, 34u}, {3u, 7u}, {5u, 4u}, {3u, 23u}}) {
        const auto F = make_field(p, m);
        std::uniform_int_distribution<std::uint64_t> pick(0, F.order() - 1);
        for (int t = 0; t < 200; ++t) {
            const FieldElement a{pick(rng)}, b{pick(rng)};
            CHECK(F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % p);
            CHECK(F.trace(F.frobenius(a)) == F.trace(a));
            CHECK(F.trace(a) == F.trace_by_definition(a));
        }
    }
}

TEST_CASE("quadratic character") {
    const auto F = make_field(3, 3);
    std::uint64_t squares = 0;
    for (std::uint64_t i = 1; i < F.order(); ++i) {
        const FieldElement a{i};
        const int chi = F.quadratic_character(a);
        CHECK(chi == (F.pow(a, (F.order() - 1) / 2) == F.one() ? 1 : -1));
        squares += chi == 1;
    }
    CHECK(squares == (F.order() - 1) / 2);
    CHECK(F.quadratic_character(F.zero()) == 0);
}

TEST_CASE("rational map normal form") {
    // (x^2 + x) / (x^2 + 1) = x / (x + 1) over GF(2)
    const RationalMap f(2, {0, 1, 1}, {1, 0, 1});
    CHECK(f.numerator() == gfp::Poly{0, 1});
    CHECK(f.denominator() == gfp::Poly{1, 1});
    // Monic denominator over GF(3): 1 / (2x) = 2 / x
    const RationalMap g(3, {1}, {0, 2});
    CHECK(g.numerator() == gfp::Poly{2});
    CHECK(g.denominator() == gfp::Poly{0, 1});
    CHECK_THROWS_AS(RationalMap(2, {1}, {0}), ZeroDivisor);
    CHECK_THROWS_AS(RationalMap(6, {1}), NoPrime);
    CHECK(dk_map(1) == RationalMap(2, {1, 0, 0, 0, 1}, {0, 1}));
}

TEST_CASE("eval_rational_map") {
    const auto f = dk_map(1);  // x^3 + 1/x
    const auto F2 = make_field(2, 1);
    CHECK_FALSE(eval_rational_map(F2, f, F2.zero()).has_value());
    CHECK(eval_rational_map(F2, f, F2.one()) == F2.zero());
    const auto F4 = make_field(2, 2);
    const auto w = F4.x();
    CHECK(eval_rational_map(F4, f, w) == F4.add(F4.one(), F4.mul(w, w)));
}

TEST_CASE("char_sum hand values") {
    const EnumerationOptions one{1, 34};
    CHECK(char_sum(make_field(2, 1), dk_map(1), one) == 1);
    CHECK(char_sum(make_field(2, 2), dk_map(1), one) == -1);
    CHECK(char_sum(make_field(2, 1), dk_map(2), one) == 1);
    CHECK_THROWS_AS(char_sum(make_field(2, 20), dk_map(1), EnumerationOptions{1, 19}), TooLarge);
}

TEST_CASE("char_sum matches naive iteration, m <= 12") {
    const std::vector<RationalMap> maps{
        dk_map(1),
        dk_map(2),
        dk_map(3),
        RationalMap(2, {0, 0, 0, 1}),                  // x^3
        RationalMap(2, {1, 0, 1, 1}, {0, 1, 1}),       // x + 1/x + 1/(x+1)
        RationalMap(2, {1}, {0, 1, 1}),                // 1/(x^2+x)
        RationalMap(2, {1, 1, 0, 0, 0, 1}, {1, 1, 1}), // general denominator
        RationalMap(2, {1, 0, 0, 0, 0, 1}, {0, 0, 0, 1}),  // x^2 + x^-3
        RationalMap(2, {0, 1, 0, 1, 1}),               // polynomial with several terms
    };
    for (unsigned m = 1; m <= 12; ++m) {
        const auto F = make_field(2, m);
        const oracle::NaiveField N(2, F.modulus());
        for (const auto& f : maps) {
            const auto fast = char_sum(F, f, {2, 34});
            const auto slow = oracle::char_sum(N, f.numerator(), f.denominator());
            if (fast != slow) FAIL("m=" << m << " fast " << fast << " naive " << slow);
            const auto dist = trace_distribution(F, f, {3, 34});
            std::uint64_t defined = 0;
            for (std::uint64_t i = 0; i < F.order(); ++i)
                defined += eval_rational_map(F, f, FieldElement{i}).has_value();
            CHECK(dist.trace_zero + dist.trace_one == defined);
            CHECK(dist.sum() == fast);
        }
    }
}

TEST_CASE("char_sum is independent of the thread count") {
    const auto F = make_field(2, 19);
    const auto f = dk_map(3);
    const auto ref = char_sum(F, f, {1, 34});
    for (unsigned t : {2u, 3u, 8u}) CHECK(char_sum(F, f, {t, 34}) == ref);
    const RationalMap g(2, {1, 1, 0, 1}, {1, 0, 1, 1});
    const auto gref = char_sum(F, g, {1, 34});
    for (unsigned t : {2u, 5u}) CHECK(char_sum(F, g, {t, 34}) == gref);
}

}  // TEST_SUITE
