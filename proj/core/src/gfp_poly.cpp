#include "zetadiv/gfp_poly.hpp"

#include <algorithm>

#include "zetadiv/errors.hpp"

namespace zetadiv::gfp {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t result = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) result = result * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw ZeroDivisor("inverse of 0 mod " + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

int legendre(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) return 0;
    return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

void normalize(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly from_integers(const std::vector<long long>& coeffs, std::uint32_t p) {
    Poly f(coeffs.size());
    const long long P = p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        f[i] = static_cast<std::uint32_t>(((coeffs[i] % P) + P) % P);
    }
    normalize(f);
    return f;
}

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = (x + y) % p;
    }
    normalize(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    normalize(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] = (acc[i + j] + std::uint64_t(a[i]) * b[j]) % p;
        }
    }
    Poly r(acc.begin(), acc.end());
    normalize(r);
    return r;
}

Poly scale(const Poly& a, std::uint32_t c, std::uint32_t p) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint32_t>(std::uint64_t(a[i]) * c % p);
    normalize(r);
    return r;
}

Poly make_monic(const Poly& a, std::uint32_t p) {
    if (a.empty()) return a;
    return scale(a, inv_mod(a.back(), p), p);
}

Poly derivative(const Poly& a, std::uint32_t p) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = static_cast<std::uint32_t>(std::uint64_t(a[i]) * (i % p) % p);
    normalize(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint32_t p) {
    if (b.empty()) throw ZeroDivisor("polynomial division by zero over GF(" + std::to_string(p) + ")");
    Poly r = a;
    normalize(r);
    if (r.size() < b.size()) return {{}, r};
    Poly q(r.size() - b.size() + 1, 0);
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    for (std::size_t i = r.size(); i-- >= b.size();) {
        const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(r[i]) * lead_inv % p);
        const std::size_t shift = i + 1 - b.size();
        q[shift] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[shift + j] = static_cast<std::uint32_t>((r[shift + j] + p - std::uint64_t(c) * b[j] % p) % p);
        }
    }
    normalize(q);
    normalize(r);
    return {q, r};
}

Poly rem(const Poly& a, const Poly& b, std::uint32_t p) { return divmod(a, b, p).second; }

Poly div_exact(const Poly& a, const Poly& b, std::uint32_t p) { return divmod(a, b, p).first; }

Poly gcd(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly x = a, y = b;
    normalize(x);
    normalize(y);
    while (!y.empty()) {
        Poly r = rem(x, y, p);
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x, p);
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus, std::uint32_t p) {
    Poly result{1};
    result = rem(result, modulus, p);
    Poly b = rem(base, modulus, p);
    while (e) {
        if (e & 1) result = rem(mul(result, b, p), modulus, p);
        e >>= 1;
        if (e) b = rem(mul(b, b, p), modulus, p);
    }
    return result;
}

std::uint32_t eval(const Poly& f, std::uint32_t x, std::uint32_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    return static_cast<std::uint32_t>(acc);
}

namespace {

// x^(p^k) mod f by repeated p-th powering.
Poly frobenius_power_of_x(unsigned k, const Poly& f, std::uint32_t p) {
    Poly x{0, 1};
    Poly r = rem(x, f, p);
    for (unsigned i = 0; i < k; ++i) r = powmod(r, p, f, p);
    return r;
}

}  // namespace

bool is_irreducible(const Poly& f_in, std::uint32_t p) {
    Poly f = make_monic(f_in, p);
    const int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly x{0, 1};
    if (frobenius_power_of_x(static_cast<unsigned>(n), f, p) != rem(x, f, p)) return false;
    for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(n))) {
        Poly h = sub(frobenius_power_of_x(static_cast<unsigned>(n / r), f, p), x, p);
        if (!is_one(gcd(h, f, p))) return false;
    }
    return true;
}

namespace {

// g(x)^(1/p) for a polynomial whose derivative vanishes; coefficients of a
// prime field are fixed by Frobenius.
Poly pth_root(const Poly& g, std::uint32_t p) {
    Poly r;
    for (std::size_t i = 0; i < g.size(); i += p) r.push_back(g[i]);
    normalize(r);
    return r;
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& f_in, std::uint32_t p) {
    std::vector<SquarefreeFactor> out;
    Poly f = make_monic(f_in, p);
    if (degree(f) < 1) return out;

    Poly c = gcd(f, derivative(f, p), p);
    Poly w = div_exact(f, c, p);
    unsigned i = 1;
    while (!is_one(w)) {
        Poly y = gcd(w, c, p);
        Poly z = div_exact(w, y, p);
        if (degree(z) > 0) out.push_back({z, i});
        ++i;
        w = std::move(y);
        c = div_exact(c, w, p);
    }
    if (degree(c) > 0) {
        for (const auto& sf : squarefree_decomposition(pth_root(c, p), p)) {
            out.push_back({sf.factor, sf.multiplicity * p});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SquarefreeFactor& a, const SquarefreeFactor& b) { return a.multiplicity < b.multiplicity; });
    return out;
}

bool is_squarefree(const Poly& f, std::uint32_t p) {
    Poly g = f;
    normalize(g);
    if (g.empty()) return false;
    for (const auto& sf : squarefree_decomposition(g, p)) {
        if (sf.multiplicity > 1) return false;
    }
    return true;
}

std::uint64_t encode(const Poly& f, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = v * p + f[i];
    return v;
}

Poly decode(std::uint64_t value, std::uint32_t p) {
    Poly f;
    while (value) {
        f.push_back(static_cast<std::uint32_t>(value % p));
        value /= p;
    }
    return f;
}

}  // namespace zetadiv::gfp
