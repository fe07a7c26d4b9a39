#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zetadiv/curves.hpp"
#include "zetadiv/intpoly.hpp"

namespace zetadiv {

/// L(t) = prod (1 - alpha_i t) of a genus-g curve over GF(q).
struct LPolynomial {
    mpz_class q;
    unsigned genus = 0;
    IntPolynomial poly;

    friend bool operator==(const LPolynomial&, const LPolynomial&) = default;
};

/// Rebuilds L from N_1..N_g via s_m = q^m + 1 - N_m, Newton, and the
/// functional equation a_(2g-i) = q^(g-i) a_i. Any counts past N_g are
/// cross-checked against the completed polynomial. Throws NotConsistent.
LPolynomial lpoly_from_counts(const mpz_class& q, unsigned g, std::span<const mpz_class> counts);

/// N_m = q^m + 1 - s_m for m = 1..r.
PointCountSeries counts_from_lpoly(const LPolynomial& L, unsigned r);

/// prod (1 - alpha_i^n t) of a polynomial with f(0) = 1, via power sums.
IntPolynomial extension_poly(const IntPolynomial& f, unsigned n);

/// L-polynomial of the same curve over GF(q^n).
LPolynomial extension_lpoly(const LPolynomial& L, unsigned n);

/// Degree of L mod p (Manin); the reduction of a constant 1 has degree 0.
unsigned p_rank_manin(const LPolynomial& L, std::uint32_t p);

struct LpolyValidation {
    bool ok = true;
    std::vector<std::string> failures;
    /// max |(|root| * sqrt(q)) - 1| over the complex roots when requested.
    double root_deviation = 0.0;
};

/// Structural checks: L(0) = 1, degree 2g, functional equation. With
/// check_roots, also requires every root to have modulus q^(-1/2) within
/// `tolerance` (relative, numerical).
LpolyValidation validate_lpoly(const LPolynomial& L, bool check_roots = false, double tolerance = 1e-6);

/// Complex roots of L(u / sqrt(q)) as moduli (all 1 for a Weil polynomial).
std::vector<double> normalized_root_moduli(const LPolynomial& L);

}  // namespace zetadiv
