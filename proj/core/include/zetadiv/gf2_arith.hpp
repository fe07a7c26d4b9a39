#pragma once

// Carryless arithmetic on bit-packed GF(2)[x] values.

#include <bit>
#include <cstdint>

#if defined(__PCLMUL__)
#include <wmmintrin.h>
#endif

namespace zetadiv::gf2 {

using u128 = unsigned __int128;

inline u128 clmul_portable(std::uint64_t a, std::uint64_t b) {
    // 4-bit windowed shift-and-xor.
    u128 table[16];
    table[0] = 0;
    table[1] = a;
    for (int i = 2; i < 16; i += 2) {
        table[i] = table[i / 2] << 1;
        table[i + 1] = table[i] ^ a;
    }
    u128 r = 0;
    for (int shift = 60; shift >= 0; shift -= 4) {
        r = (r << 4) ^ table[(b >> shift) & 0xF];
    }
    return r;
}

inline u128 clmul(std::uint64_t a, std::uint64_t b) {
#if defined(__PCLMUL__)
    const __m128i va = _mm_cvtsi64_si128(static_cast<long long>(a));
    const __m128i vb = _mm_cvtsi64_si128(static_cast<long long>(b));
    const __m128i prod = _mm_clmulepi64_si128(va, vb, 0x00);
    const auto lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(prod));
    const auto hi = static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_srli_si128(prod, 8)));
    return (u128(hi) << 64) | lo;
#else
    return clmul_portable(a, b);
#endif
}

/// Reduction modulo x^m + tail, where deg(tail) < m. Each fold lowers the
/// degree by at least m - deg(tail); lexicographically-first moduli have a
/// low-degree tail, so two folds are typical. The fold count is fixed at
/// construction so the hot loop has no data-dependent branch.
struct Reducer {
    unsigned m = 1;
    std::uint64_t tail = 0;
    std::uint64_t mask = 1;
    unsigned folds = 0;

    Reducer() = default;
    Reducer(unsigned degree, std::uint64_t tail_bits)
        : m(degree), tail(tail_bits), mask(degree >= 64 ? ~0ULL : ((1ULL << degree) - 1)) {
        // Worst case starts from a product of degree 2m - 2.
        const int tail_degree = tail == 0 ? -1 : 63 - std::countl_zero(tail);
        int d = 2 * static_cast<int>(m) - 2;
        while (d >= static_cast<int>(m)) {
            d = tail_degree < 0 ? -1 : d - static_cast<int>(m) + tail_degree;
            ++folds;
        }
    }

    /// Reduces a product of two reduced elements.
    std::uint64_t reduce(u128 v) const {
        for (unsigned i = 0; i < folds; ++i) {
            v = (v & mask) ^ clmul(static_cast<std::uint64_t>(v >> m), tail);
        }
        return static_cast<std::uint64_t>(v);
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(clmul(a, b)); }
};

inline unsigned parity(std::uint64_t v) {
#if defined(__GNUC__)
    return static_cast<unsigned>(__builtin_parityll(v));
#else
    return static_cast<unsigned>(std::popcount(v) & 1);
#endif
}

}  // namespace zetadiv::gf2
