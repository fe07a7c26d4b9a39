#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "zetadiv/gf2_arith.hpp"
#include "zetadiv/gfp_poly.hpp"

namespace zetadiv {

/// An element of GF(p^m) in the power basis of the field modulus, packed as
/// sum c_i p^i. For p = 2 this is the usual bit vector.
struct FieldElement {
    std::uint64_t packed = 0;
    friend bool operator==(FieldElement, FieldElement) = default;
};

/// Largest field order the library will construct (generator search factors
/// order - 1 by trial division).
inline constexpr std::uint64_t kMaxFieldOrder = 1ULL << 48;

/// GF(p^m) for small p. Immutable; copies share the precomputed tables, so a
/// field can be handed to any number of worker threads.
class FiniteField {
public:
    std::uint32_t p() const;
    unsigned m() const;
    std::uint64_t order() const;
    const gfp::Poly& modulus() const;
    FieldElement generator() const;
    bool is_binary() const { return p() == 2; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    /// The class of x in GF(p)[x]/(modulus).
    FieldElement x() const;
    FieldElement from_prime(std::uint32_t c) const;
    /// Reduces an arbitrary GF(p) polynomial modulo the field modulus.
    FieldElement from_coeffs(const gfp::Poly& coeffs) const;
    gfp::Poly coeffs(FieldElement a) const;
    bool contains(FieldElement a) const { return a.packed < order(); }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement sqr(FieldElement a) const { return mul(a, a); }
    /// Throws ZeroDivisor for zero.
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    /// Negative exponents are taken in the multiplicative group; a must be
    /// nonzero when e < 0.
    FieldElement pow_signed(FieldElement a, std::int64_t e) const;
    FieldElement frobenius(FieldElement a) const { return pow(a, p()); }

    /// Absolute trace to GF(p), via the precomputed linear form.
    std::uint32_t trace(FieldElement a) const;
    /// Trace as the literal sum a + a^p + ... + a^(p^(m-1)).
    std::uint32_t trace_by_definition(FieldElement a) const;

    /// Quadratic character (0 at zero, else +1/-1). Odd characteristic only.
    int quadratic_character(FieldElement a) const;

    /// Binary fields: bit i is Tr(x^i), so Tr(a) = parity(a & mask).
    std::uint64_t trace_mask() const;
    const gf2::Reducer& reducer() const;

    friend bool operator==(const FiniteField& a, const FiniteField& b) {
        return a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus();
    }

private:
    struct Impl;
    explicit FiniteField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;

    friend FiniteField make_field(std::uint32_t, unsigned, std::optional<gfp::Poly>);
};

/// Lexicographically first monic irreducible of degree m over GF(p)
/// (smallest value of sum c_i p^i). Cached.
gfp::Poly default_modulus(std::uint32_t p, unsigned m);

/// Builds GF(p^m). Throws NoPrime, ModulusReducible, InvalidInput (malformed
/// modulus) or TooLarge (order above kMaxFieldOrder).
FiniteField make_field(std::uint32_t p, unsigned m, std::optional<gfp::Poly> modulus = std::nullopt);

/// Process-wide cache of default-modulus fields.
FiniteField cached_field(std::uint32_t p, unsigned m);

}  // namespace zetadiv
