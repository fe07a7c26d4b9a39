#include "zetadiv/intpoly.hpp"

#include <algorithm>
#include <utility>

#include "zetadiv/errors.hpp"

namespace zetadiv {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::monomial(mpz_class c, std::size_t degree) {
    std::vector<mpz_class> v(degree + 1);
    v[degree] = std::move(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_strings(const std::vector<std::string>& coeffs) {
    std::vector<mpz_class> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) {
        mpz_class c;
        if (s.empty() || c.set_str(s, 10) != 0) throw InvalidInput("not a decimal integer: '" + s + "'");
        v.push_back(std::move(c));
    }
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const mpz_class& c, const IntPolynomial& a) {
    std::vector<mpz_class> v(a.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * a.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial result{1};
    IntPolynomial base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpz_class> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::expand_power(unsigned k) const {
    if (k == 0) throw InvalidInput("expand_power requires k >= 1");
    if (is_zero()) return {};
    std::vector<mpz_class> v((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::negate_variable() const {
    IntPolynomial r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

IntPolynomial IntPolynomial::divide_scalar(const mpz_class& c) const {
    std::vector<mpz_class> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::truncate(std::size_t n) const {
    if (coeffs_.size() <= n + 1) return *this;
    return IntPolynomial(std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1)));
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    mpz_class c = content();
    if (leading() < 0) c = -c;
    return divide_scalar(c);
}

std::string IntPolynomial::to_string(bool spaced) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += spaced ? (negative ? " - " : " + ") : (negative ? "-" : "+");
        }
        const mpz_class mag = abs(c);
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) out += "t";
        if (i >= 2) out += "^" + std::to_string(i);
        first = false;
    }
    return out;
}

std::vector<std::string> IntPolynomial::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

DivisionResult divides_with_quotient(const IntPolynomial& d, const IntPolynomial& n) {
    if (d.is_zero()) throw ZeroDivisor("division by the zero polynomial");
    if (n.is_zero()) return {true, IntPolynomial{}};
    if (n.degree() < d.degree()) return {false, std::nullopt};

    std::vector<mpz_class> rem = n.coeffs();
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    std::vector<mpz_class> quot(rem.size() - dd);
    const mpz_class& lead = d.leading();
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t())) return {false, std::nullopt};
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
        const std::size_t shift = i - dd;
        for (std::size_t j = 0; j <= dd; ++j) {
            mpz_submul(rem[shift + j].get_mpz_t(), c.get_mpz_t(), d.coeffs()[j].get_mpz_t());
        }
        quot[shift] = std::move(c);
    }
    for (std::size_t i = 0; i < dd; ++i) {
        if (rem[i] != 0) return {false, std::nullopt};
    }
    return {true, IntPolynomial(std::move(quot))};
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw ZeroDivisor("pseudo-remainder by the zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<mpz_class> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const mpz_class& lead = b.leading();
    for (std::size_t i = r.size(); i-- > db;) {
        const mpz_class c = r[i];
        for (auto& x : r) x *= lead;
        const std::size_t shift = i - db;
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), b.coeffs()[j].get_mpz_t());
        }
        r.pop_back();
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial gcd_primitive(const IntPolynomial& a_in, const IntPolynomial& b_in) {
    if (a_in.is_zero() && b_in.is_zero()) throw InvalidInput("gcd of two zero polynomials");
    if (b_in.is_zero()) return a_in.primitive_part();
    if (a_in.is_zero()) return b_in.primitive_part();

    IntPolynomial a = a_in.primitive_part();
    IntPolynomial b = b_in.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);

    // Subresultant PRS: every division below is exact.
    mpz_class g = 1, h = 1;
    while (true) {
        const unsigned delta = static_cast<unsigned>(a.degree() - b.degree());
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        if (r.degree() == 0) return IntPolynomial{1};
        mpz_class h_pow;
        mpz_pow_ui(h_pow.get_mpz_t(), h.get_mpz_t(), delta);
        a = std::move(b);
        b = r.divide_scalar(g * h_pow);
        g = a.leading();
        if (delta == 0) {
            // h unchanged
        } else {
            mpz_class g_pow, h_prev;
            mpz_pow_ui(g_pow.get_mpz_t(), g.get_mpz_t(), delta);
            mpz_pow_ui(h_prev.get_mpz_t(), h.get_mpz_t(), delta - 1);
            mpz_divexact(h.get_mpz_t(), g_pow.get_mpz_t(), h_prev.get_mpz_t());
        }
    }
    return b.primitive_part();
}

bool squarefree_over_q(const IntPolynomial& f) {
    if (f.is_zero()) throw InvalidInput("squarefree test of the zero polynomial");
    if (f.degree() <= 0) return true;
    return gcd_primitive(f, f.derivative()).degree() == 0;
}

PowerSumSeries power_sums_from_poly(const IntPolynomial& f, std::size_t r) {
    const mpz_class a0 = f.constant_term();
    if (a0 == 0) throw ZeroConstantTerm("power sums need f(0) != 0");
    PowerSumSeries s(r);
    for (std::size_t n = 1; n <= r; ++n) {
        mpz_class acc = -mpz_class(static_cast<unsigned long>(n)) * f[n];
        for (std::size_t i = 1; i < n; ++i) {
            if (i > static_cast<std::size_t>(f.degree())) break;
            mpz_submul(acc.get_mpz_t(), f.coeffs()[i].get_mpz_t(), s[n - i - 1].get_mpz_t());
        }
        if (!mpz_divisible_p(acc.get_mpz_t(), a0.get_mpz_t())) {
            throw NotPowerSums("power sum s_" + std::to_string(n) + " is not integral");
        }
        mpz_divexact(s[n - 1].get_mpz_t(), acc.get_mpz_t(), a0.get_mpz_t());
    }
    return s;
}

std::vector<mpz_class> newton_coefficients(const PowerSumSeries& s, std::size_t d) {
    if (s.size() < d) throw InvalidInput("need at least " + std::to_string(d) + " power sums");
    std::vector<mpz_class> a(d + 1);
    a[0] = 1;
    for (std::size_t n = 1; n <= d; ++n) {
        mpz_class acc = s[n - 1];
        for (std::size_t i = 1; i < n; ++i) mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), s[n - i - 1].get_mpz_t());
        const mpz_class nn = static_cast<unsigned long>(n);
        if (!mpz_divisible_p(acc.get_mpz_t(), nn.get_mpz_t())) {
            throw NotPowerSums("Newton division by " + std::to_string(n) + " is inexact");
        }
        mpz_divexact(a[n].get_mpz_t(), acc.get_mpz_t(), nn.get_mpz_t());
        a[n] = -a[n];
    }
    return a;
}

IntPolynomial poly_from_power_sums(const PowerSumSeries& s, std::size_t d) {
    IntPolynomial f(newton_coefficients(s, d));
    if (f.degree() != static_cast<int>(d)) {
        throw NotPowerSums("reconstructed polynomial has degree " + std::to_string(f.degree()) + ", expected " +
                           std::to_string(d));
    }
    return f;
}

std::optional<IntPolynomial> support_in_tk(const IntPolynomial& f, unsigned k) {
    if (k == 0) throw InvalidInput("support_in_tk requires k >= 1");
    std::vector<mpz_class> h;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i % k == 0) {
            h.push_back(f.coeffs()[i]);
        } else if (f.coeffs()[i] != 0) {
            return std::nullopt;
        }
    }
    return IntPolynomial(std::move(h));
}

}  // namespace zetadiv
