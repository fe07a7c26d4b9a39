#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zetadiv/finite_field.hpp"
#include "zetadiv/gfp_poly.hpp"

namespace zetadiv {

/// f(x) = numerator / denominator with coefficients in GF(p). Stored in
/// lowest terms with a monic denominator.
class RationalMap {
public:
    /// Throws ZeroDivisor for a zero denominator, NoPrime for composite p.
    RationalMap(std::uint32_t p, gfp::Poly numerator, gfp::Poly denominator = {1});

    std::uint32_t p() const { return p_; }
    const gfp::Poly& numerator() const { return num_; }
    const gfp::Poly& denominator() const { return den_; }

    /// When the denominator is a monomial x^e the map is a Laurent
    /// polynomial; returns its (exponent, coefficient) terms.
    struct Term {
        std::int64_t exponent;
        std::uint32_t coeff;
    };
    std::optional<std::vector<Term>> laurent_terms() const;

    friend bool operator==(const RationalMap&, const RationalMap&) = default;

private:
    std::uint32_t p_;
    gfp::Poly num_;
    gfp::Poly den_;
};

/// x^(2^k+1) + x^(-1) over GF(2).
RationalMap dk_map(unsigned k);

/// Evaluates a GF(p) polynomial at a field element (Horner).
FieldElement eval_poly(const FiniteField& field, const gfp::Poly& f, FieldElement x);

/// f(x), or nullopt when x is a pole (denominator vanishes).
std::optional<FieldElement> eval_rational_map(const FiniteField& field, const RationalMap& f, FieldElement x);

}  // namespace zetadiv
