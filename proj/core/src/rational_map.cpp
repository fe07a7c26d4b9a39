#include "zetadiv/rational_map.hpp"

#include <string>

#include "zetadiv/errors.hpp"

namespace zetadiv {

RationalMap::RationalMap(std::uint32_t p, gfp::Poly numerator, gfp::Poly denominator) : p_(p) {
    if (!gfp::is_prime(p)) throw NoPrime(std::to_string(p) + " is not prime");
    for (auto* poly : {&numerator, &denominator}) {
        for (auto& c : *poly) c %= p;
        gfp::normalize(*poly);
    }
    if (denominator.empty()) throw ZeroDivisor("rational map with zero denominator");
    const gfp::Poly g = gfp::gcd(numerator, denominator, p);
    if (!numerator.empty() && gfp::degree(g) > 0) {
        numerator = gfp::div_exact(numerator, g, p);
        denominator = gfp::div_exact(denominator, g, p);
    }
    if (numerator.empty()) denominator = {1};
    const std::uint32_t lc_inv = gfp::inv_mod(denominator.back(), p);
    num_ = gfp::scale(numerator, lc_inv, p);
    den_ = gfp::scale(denominator, lc_inv, p);
}

std::optional<std::vector<RationalMap::Term>> RationalMap::laurent_terms() const {
    const int e = gfp::degree(den_);
    for (int i = 0; i < e; ++i) {
        if (den_[i] != 0) return std::nullopt;
    }
    std::vector<Term> terms;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] != 0) terms.push_back({static_cast<std::int64_t>(i) - e, num_[i]});
    }
    return terms;
}

RationalMap dk_map(unsigned k) {
    if (k == 0 || k > 40) throw InvalidInput("D_k requires 1 <= k <= 40");
    // (x^(2^k+2) + 1) / x
    gfp::Poly num((1ULL << k) + 3, 0);
    num.front() = 1;
    num.back() = 1;
    return RationalMap(2, std::move(num), gfp::Poly{0, 1});
}

FieldElement eval_poly(const FiniteField& field, const gfp::Poly& f, FieldElement x) {
    FieldElement acc = field.zero();
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = field.add(field.mul(acc, x), field.from_prime(f[i]));
    }
    return acc;
}

std::optional<FieldElement> eval_rational_map(const FiniteField& field, const RationalMap& f, FieldElement x) {
    if (field.p() != f.p()) throw InvalidInput("rational map characteristic does not match the field");
    const FieldElement den = eval_poly(field, f.denominator(), x);
    if (den.packed == 0) return std::nullopt;
    return field.mul(eval_poly(field, f.numerator(), x), field.inv(den));
}

}  // namespace zetadiv
