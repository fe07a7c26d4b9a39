#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace zetadiv::gfp {

/// Dense polynomial over the prime field GF(p), ascending coefficients,
/// each in [0, p). The zero polynomial is the empty vector; a normalized
/// polynomial has a nonzero last coefficient.
using Poly = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);

/// Prime factors of n (distinct, ascending) by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint32_t p);

/// Legendre symbol of a modulo an odd prime p: 0, 1 or -1.
int legendre(std::uint32_t a, std::uint32_t p);

void normalize(Poly& f);
/// Reduces arbitrary signed integer coefficients into [0, p) and normalizes.
Poly from_integers(const std::vector<long long>& coeffs, std::uint32_t p);

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }
inline bool is_zero(const Poly& f) { return f.empty(); }
inline bool is_one(const Poly& f) { return f.size() == 1 && f[0] == 1; }
inline std::uint32_t leading(const Poly& f) { return f.empty() ? 0 : f.back(); }

Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly scale(const Poly& a, std::uint32_t c, std::uint32_t p);
Poly make_monic(const Poly& a, std::uint32_t p);
Poly derivative(const Poly& a, std::uint32_t p);

/// Quotient and remainder; throws ZeroDivisor when b is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint32_t p);
Poly rem(const Poly& a, const Poly& b, std::uint32_t p);
Poly div_exact(const Poly& a, const Poly& b, std::uint32_t p);

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b, std::uint32_t p);

/// base^e mod modulus.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus, std::uint32_t p);

std::uint32_t eval(const Poly& f, std::uint32_t x, std::uint32_t p);

/// Rabin irreducibility test.
bool is_irreducible(const Poly& f, std::uint32_t p);

struct SquarefreeFactor {
    Poly factor;          // monic, squarefree
    unsigned multiplicity;
};

/// Squarefree decomposition f = lc * prod factor^multiplicity, valid in
/// characteristic p (handles p-th power parts).
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& f, std::uint32_t p);

bool is_squarefree(const Poly& f, std::uint32_t p);

/// Encodes f as sum c_i p^i; used for lexicographic enumeration.
std::uint64_t encode(const Poly& f, std::uint32_t p);
Poly decode(std::uint64_t value, std::uint32_t p);

}  // namespace zetadiv::gfp
