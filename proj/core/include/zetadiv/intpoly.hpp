#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zetadiv {

/// Dense polynomial in Z[t] with arbitrary-precision coefficients, stored
/// ascending and always normalized (no trailing zeros; zero is empty).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(mpz_class c, std::size_t degree);
    /// Parses ascending decimal strings.
    static IntPolynomial from_strings(const std::vector<std::string>& coeffs);

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of t^i (zero past the degree).
    mpz_class operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }
    const mpz_class& leading() const { return coeffs_.back(); }
    mpz_class constant_term() const { return (*this)[0]; }

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const mpz_class& c, const IntPolynomial& a);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    IntPolynomial pow(unsigned e) const;
    IntPolynomial derivative() const;
    /// f(t^k).
    IntPolynomial expand_power(unsigned k) const;
    /// f(-t).
    IntPolynomial negate_variable() const;
    /// Exact division of every coefficient by c (caller guarantees divisibility).
    IntPolynomial divide_scalar(const mpz_class& c) const;
    /// Keeps coefficients of t^0..t^n.
    IntPolynomial truncate(std::size_t n) const;

    /// gcd of the coefficients, nonnegative (0 for the zero polynomial).
    mpz_class content() const;
    /// Divides out the content and makes the leading coefficient positive.
    IntPolynomial primitive_part() const;

    /// "4t^4 + 2t^3 + t + 1" (spaced) or "4t^4+2t^3+t+1" (compact);
    /// descending powers, unit coefficients elided.
    std::string to_string(bool spaced = true) const;
    /// Ascending decimal coefficient strings.
    std::vector<std::string> to_strings() const;

private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

/// Power sums s_1..s_r of the reciprocal roots of a polynomial.
using PowerSumSeries = std::vector<mpz_class>;

struct DivisionResult {
    bool divides = false;
    std::optional<IntPolynomial> quotient;
};

/// Exact division in Z[t]. Throws ZeroDivisor when d is zero.
DivisionResult divides_with_quotient(const IntPolynomial& d, const IntPolynomial& n);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd over Q (subresultant PRS), positive leading coefficient.
/// Throws InvalidInput when both inputs are zero.
IntPolynomial gcd_primitive(const IntPolynomial& a, const IntPolynomial& b);

/// True iff f has no repeated complex root, i.e. gcd(f, f') is constant.
bool squarefree_over_q(const IntPolynomial& f);

/// Newton's identities: f(t) = f(0) prod(1 - alpha_i t), returns
/// sum alpha_i^n for n = 1..r. Throws ZeroConstantTerm when f(0) = 0 and
/// NotPowerSums when f(0) does not make the sums integral.
PowerSumSeries power_sums_from_poly(const IntPolynomial& f, std::size_t r);

/// The first d+1 coefficients 1, a_1, ..., a_d of prod(1 - alpha_i t) from
/// power sums s_1..s_d; a_d may be zero. Throws NotPowerSums on an inexact
/// Newton division.
std::vector<mpz_class> newton_coefficients(const PowerSumSeries& s, std::size_t d);

/// The degree-d polynomial prod(1 - alpha_i t) with the given power sums.
/// Throws NotPowerSums on an inexact division or when the result has
/// degree below d.
IntPolynomial poly_from_power_sums(const PowerSumSeries& s, std::size_t d);

/// h with f(t) = h(t^k), when f lies in Z[t^k].
std::optional<IntPolynomial> support_in_tk(const IntPolynomial& f, unsigned k);

}  // namespace zetadiv
