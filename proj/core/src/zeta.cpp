#include "zetadiv/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "zetadiv/errors.hpp"

namespace zetadiv {

namespace {

mpz_class power(const mpz_class& q, unsigned e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), e);
    return r;
}

}  // namespace

LPolynomial lpoly_from_counts(const mpz_class& q, unsigned g, std::span<const mpz_class> counts) {
    if (q < 2) throw InvalidInput("field size must be at least 2");
    if (counts.size() < g) {
        throw InvalidInput("genus " + std::to_string(g) + " needs " + std::to_string(g) + " point counts, got " +
                           std::to_string(counts.size()));
    }
    PowerSumSeries s(g);
    for (unsigned m = 1; m <= g; ++m) s[m - 1] = power(q, m) + 1 - counts[m - 1];

    std::vector<mpz_class> low;
    try {
        low = newton_coefficients(s, g);
    } catch (const NotPowerSums& e) {
        throw NotConsistent(std::string("counts are not those of a curve: ") + e.what());
    }

    std::vector<mpz_class> coeffs(2 * g + 1);
    for (unsigned i = 0; i <= g; ++i) {
        coeffs[i] = low[i];
        coeffs[2 * g - i] = power(q, g - i) * low[i];
    }
    LPolynomial L{q, g, IntPolynomial(std::move(coeffs))};

    if (counts.size() > g) {
        const auto implied = counts_from_lpoly(L, static_cast<unsigned>(counts.size()));
        for (std::size_t m = g; m < counts.size(); ++m) {
            if (implied.counts[m] != counts[m]) {
                throw NotConsistent("N_" + std::to_string(m + 1) + " = " + counts[m].get_str() +
                                    " but the completed L-polynomial implies " + implied.counts[m].get_str());
            }
        }
    }
    return L;
}

PointCountSeries counts_from_lpoly(const LPolynomial& L, unsigned r) {
    const PowerSumSeries s = power_sums_from_poly(L.poly, r);
    PointCountSeries out{L.q, {}};
    out.counts.reserve(r);
    for (unsigned m = 1; m <= r; ++m) out.counts.push_back(power(L.q, m) + 1 - s[m - 1]);
    return out;
}

IntPolynomial extension_poly(const IntPolynomial& f, unsigned n) {
    if (n == 0) throw InvalidInput("extension degree must be at least 1");
    if (f.constant_term() != 1) throw InvalidInput("extension_poly expects f(0) = 1");
    const int d = f.degree();
    if (d <= 0 || n == 1) return f;
    const PowerSumSeries s = power_sums_from_poly(f, static_cast<std::size_t>(d) * n);
    PowerSumSeries sub(static_cast<std::size_t>(d));
    for (int j = 1; j <= d; ++j) sub[j - 1] = s[static_cast<std::size_t>(j) * n - 1];
    return poly_from_power_sums(sub, static_cast<std::size_t>(d));
}

LPolynomial extension_lpoly(const LPolynomial& L, unsigned n) {
    return {power(L.q, n), L.genus, extension_poly(L.poly, n)};
}

unsigned p_rank_manin(const LPolynomial& L, std::uint32_t p) {
    if (p < 2) throw InvalidInput("p must be prime");
    const mpz_class P = p;
    unsigned deg = 0;
    const auto& c = L.poly.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!mpz_divisible_p(c[i].get_mpz_t(), P.get_mpz_t())) deg = static_cast<unsigned>(i);
    }
    return deg;
}

std::vector<double> normalized_root_moduli(const LPolynomial& L) {
    using cld = std::complex<long double>;
    const int d = L.poly.degree();
    if (d <= 0) return {};
    const long double sq = std::sqrt(static_cast<long double>(L.q.get_d()));

    // b_i = a_i q^(-i/2): the roots u = t sqrt(q) lie on the unit circle.
    std::vector<long double> b(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        b[i] = static_cast<long double>(L.poly[static_cast<std::size_t>(i)].get_d()) / std::pow(sq, static_cast<long double>(i));
    }

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = static_cast<double>(-b[i] / b[d]);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    const auto eig = solver.eigenvalues();

    std::vector<double> moduli;
    moduli.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        cld z(eig[k].real(), eig[k].imag());
        // Newton polish in extended precision.
        for (int it = 0; it < 8; ++it) {
            cld val = 0, der = 0;
            for (int i = d; i >= 0; --i) {
                der = der * z + val;
                val = val * z + b[i];
            }
            if (std::abs(der) == 0) break;
            const cld step = val / der;
            z -= step;
            if (std::abs(step) < 1e-18L) break;
        }
        moduli.push_back(static_cast<double>(std::abs(z)));
    }
    return moduli;
}

LpolyValidation validate_lpoly(const LPolynomial& L, bool check_roots, double tolerance) {
    LpolyValidation v;
    auto fail = [&](std::string msg) {
        v.ok = false;
        v.failures.push_back(std::move(msg));
    };
    if (L.poly.constant_term() != 1) fail("constant term is " + L.poly.constant_term().get_str() + ", expected 1");
    if (L.poly.degree() != static_cast<int>(2 * L.genus)) {
        fail("degree " + std::to_string(L.poly.degree()) + " != 2g = " + std::to_string(2 * L.genus));
    } else {
        for (unsigned i = 0; i <= L.genus; ++i) {
            const mpz_class expected = power(L.q, L.genus - i) * L.poly[i];
            if (L.poly[2 * L.genus - i] != expected) {
                fail("functional equation fails at a_" + std::to_string(2 * L.genus - i) + ": " +
                     L.poly[2 * L.genus - i].get_str() + " != q^" + std::to_string(L.genus - i) + " * a_" +
                     std::to_string(i));
                break;
            }
        }
    }
    if (check_roots && v.ok) {
        for (double r : normalized_root_moduli(L)) v.root_deviation = std::max(v.root_deviation, std::abs(r - 1.0));
        if (v.root_deviation > tolerance) {
            fail("a root modulus deviates from q^(-1/2) by relative " + std::to_string(v.root_deviation));
        }
    }
    return v;
}

}  // namespace zetadiv
