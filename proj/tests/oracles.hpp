// Slow, independent reference implementations used only by the tests.
#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "zetadiv/intpoly.hpp"
#include "zetadiv/zeta.hpp"

namespace oracle {

using Coeffs = std::vector<std::uint32_t>;  // ascending, over GF(p)

/// Field element: the first m entries are the power-basis coordinates.
using Elem = std::array<std::uint32_t, 48>;

/// GF(p^m) as coefficient arrays, schoolbook multiply and reduction by the
/// given monic modulus.
class NaiveField {
public:
    NaiveField(std::uint32_t p, Coeffs modulus) : p_(p), mod_(std::move(modulus)), m_(static_cast<unsigned>(mod_.size() - 1)) {
        order_ = 1;
        for (unsigned i = 0; i < m_; ++i) order_ *= p_;
    }

    std::uint32_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint64_t order() const { return order_; }

    /// Base-p digits of i; matches the library's packing.
    Elem element(std::uint64_t i) const {
        Elem e{};
        for (unsigned j = 0; j < m_; ++j) {
            e[j] = static_cast<std::uint32_t>(i % p_);
            i /= p_;
        }
        return e;
    }
    std::uint64_t index(const Elem& e) const {
        std::uint64_t v = 0;
        for (unsigned j = m_; j-- > 0;) v = v * p_ + e[j];
        return v;
    }
    Elem constant(std::uint32_t c) const {
        Elem e{};
        e[0] = c % p_;
        return e;
    }
    bool is_zero(const Elem& a) const {
        for (unsigned j = 0; j < m_; ++j)
            if (a[j]) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r{};
        for (unsigned j = 0; j < m_; ++j) r[j] = (a[j] + b[j]) % p_;
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        std::array<std::uint64_t, 96> t{};
        for (unsigned i = 0; i < m_; ++i)
            if (a[i])
                for (unsigned j = 0; j < m_; ++j) t[i + j] += std::uint64_t(a[i]) * b[j];
        for (unsigned d = 2 * m_ - 1; d >= m_; --d) {
            const std::uint64_t c = t[d] % p_;
            if (!c) continue;
            for (unsigned j = 0; j < m_; ++j) t[d - m_ + j] += (p_ - c) * mod_[j];
        }
        Elem r{};
        for (unsigned j = 0; j < m_; ++j) r[j] = static_cast<std::uint32_t>(t[j] % p_);
        return r;
    }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = constant(1);
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(const Elem& a) const { return pow(a, order_ - 2); }

    /// a + a^p + ... + a^(p^(m-1)), an element of GF(p).
    std::uint32_t trace(const Elem& a) const {
        Elem s{}, x = a;
        for (unsigned i = 0; i < m_; ++i) {
            s = add(s, x);
            x = pow(x, p_);
        }
        return s[0];
    }

    /// Horner over GF(p) coefficients.
    Elem eval(const Coeffs& f, const Elem& x) const {
        Elem r{};
        for (std::size_t i = f.size(); i-- > 0;) r = add(mul(r, x), constant(f[i]));
        return r;
    }

private:
    std::uint32_t p_;
    Coeffs mod_;
    unsigned m_;
    std::uint64_t order_;
};

inline std::size_t deg(const Coeffs& f) {
    std::size_t d = f.size();
    while (d > 0 && f[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
}

/// Sum of (-1)^Tr(num(x)/den(x)) over every x with den(x) != 0.
inline std::int64_t char_sum(const NaiveField& F, const Coeffs& num, const Coeffs& den) {
    std::int64_t s = 0;
    for (std::uint64_t i = 0; i < F.order(); ++i) {
        const auto x = F.element(i);
        const auto d = F.eval(den, x);
        if (F.is_zero(d)) continue;
        s += F.trace(F.mul(F.eval(num, x), F.inv(d))) ? -1 : 1;
    }
    return s;
}

/// Points of the smooth model of y^2 + y = num/den over GF(2^m), by trying
/// every (x, y); one point above each pole, two or none above a regular
/// point at infinity.
inline std::uint64_t as2_points(const NaiveField& F, const Coeffs& num, const Coeffs& den) {
    std::vector<std::uint64_t> lhs(F.order());
    for (std::uint64_t j = 0; j < F.order(); ++j) {
        const auto y = F.element(j);
        lhs[j] = F.index(F.add(F.mul(y, y), y));
    }
    std::uint64_t n = 0;
    for (std::uint64_t i = 0; i < F.order(); ++i) {
        const auto x = F.element(i);
        const auto d = F.eval(den, x);
        if (F.is_zero(d)) {
            ++n;
            continue;
        }
        const auto v = F.index(F.mul(F.eval(num, x), F.inv(d)));
        for (std::uint64_t j = 0; j < F.order(); ++j) n += lhs[j] == v;
    }
    if (deg(num) > deg(den)) return n + 1;
    const std::uint64_t c = deg(num) == deg(den) ? 1 : 0;  // f(infinity) over GF(2)
    for (std::uint64_t j = 0; j < F.order(); ++j) n += lhs[j] == c;
    return n;
}

/// Points of the smooth model of y^2 + h y = f over GF(p^m), p odd. Tries
/// every (x, y) while p^(2m) <= 2^24, else counts square roots of
/// F = f + h^2/4 with a histogram of squares.
inline std::uint64_t hyper_points(const NaiveField& F, const Coeffs& h, const Coeffs& f) {
    const std::uint32_t p = F.p();
    const std::uint32_t inv4 = [&] {
        for (std::uint32_t a = 1; a < p; ++a)
            if ((4ull * a) % p == 1) return a;
        return 0u;
    }();
    Coeffs big(std::max(f.size(), 2 * h.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) big[i] = f[i] % p;
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j)
            big[i + j] = static_cast<std::uint32_t>((big[i + j] + std::uint64_t(h[i]) * h[j] % p * inv4) % p);

    std::vector<std::uint32_t> roots(F.order(), 0);
    for (std::uint64_t j = 0; j < F.order(); ++j) {
        const auto y = F.element(j);
        ++roots[F.index(F.mul(y, y))];
    }

    std::uint64_t n = 0;
    const bool per_pair = F.order() * F.order() <= (1ull << 24);
    for (std::uint64_t i = 0; i < F.order(); ++i) {
        const auto x = F.element(i);
        if (per_pair) {
            const auto hx = F.eval(h, x);
            const auto fx = F.index(F.eval(f, x));
            for (std::uint64_t j = 0; j < F.order(); ++j) {
                const auto y = F.element(j);
                n += F.index(F.mul(y, F.add(y, hx))) == fx;
            }
        } else {
            n += roots[F.index(F.eval(big, x))];
        }
    }
    const std::size_t d = deg(big);
    if (d % 2 == 1) return n + 1;
    return n + (roots[F.index(F.constant(big[d]))] ? 2 : 0);
}

/// Product of g factors 1 - a t + q t^2 with |a| <= 2 sqrt(q): a genuine
/// Weil polynomial of genus g.
inline zetadiv::LPolynomial synthetic_weil(long q, unsigned g, std::mt19937_64& rng) {
    long bound = 0;
    while ((bound + 1) * (bound + 1) <= 4 * q) ++bound;
    std::uniform_int_distribution<long> pick(-bound, bound);
    zetadiv::IntPolynomial L{1};
    for (unsigned i = 0; i < g; ++i) L = L * zetadiv::IntPolynomial{1, -pick(rng), q};
    return {mpz_class(q), g, L};
}

/// Random polynomial with constant term 1 and nonzero leading term.
inline zetadiv::IntPolynomial random_unit_poly(unsigned degree, long range, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> pick(-range, range);
    std::vector<mpz_class> c(degree + 1);
    c[0] = 1;
    for (unsigned i = 1; i <= degree; ++i) c[i] = pick(rng);
    while (degree > 0 && c[degree] == 0) c[degree] = pick(rng);
    return zetadiv::IntPolynomial(c);
}

/// Newton identities the long way: s_n as sums of n-th powers of the roots
/// is not available over Z, so use the companion-matrix trace
/// s_n = trace(M^n) of the reversed polynomial.
inline std::vector<mpz_class> power_sums_by_matrix(const zetadiv::IntPolynomial& f, unsigned r) {
    // f(t) = prod(1 - a_i t)  <=>  a_i are roots of t^d f(1/t) = sum f_i t^(d-i).
    const std::size_t d = static_cast<std::size_t>(f.degree());
    const mpz_class lead = f[0];  // leading coefficient of the reversal; must be +-1
    std::vector<std::vector<mpz_class>> M(d, std::vector<mpz_class>(d, 0));
    for (std::size_t i = 1; i < d; ++i) M[i][i - 1] = 1;
    for (std::size_t i = 0; i < d; ++i) M[i][d - 1] = -f[d - i] * lead;
    std::vector<std::vector<mpz_class>> P = M;
    std::vector<mpz_class> out;
    for (unsigned n = 1; n <= r; ++n) {
        mpz_class tr = 0;
        for (std::size_t i = 0; i < d; ++i) tr += P[i][i];
        out.push_back(tr);
        std::vector<std::vector<mpz_class>> Q(d, std::vector<mpz_class>(d, 0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k)
                if (P[i][k] != 0)
                    for (std::size_t j = 0; j < d; ++j) Q[i][j] += P[i][k] * M[k][j];
        P = std::move(Q);
    }
    return out;
}

}  // namespace oracle
