#include "zetadiv/curves.hpp"

#include <string>

#include "zetadiv/errors.hpp"
#include "zetadiv/finite_field.hpp"

namespace zetadiv {

std::uint32_t CurveModel::characteristic() const {
    if (const auto* as2 = std::get_if<As2Model>(&model)) return as2->f.p();
    return std::get<HyperOddModel>(model).p;
}

CurveModel as2_curve(RationalMap f, std::string label) {
    if (f.p() != 2) throw InvalidInput("Artin-Schreier model requires characteristic 2");
    CurveModel c{As2Model{std::move(f)}, std::move(label), {}};
    validate_curve(c);
    return c;
}

CurveModel hyper_odd_curve(std::uint32_t p, gfp::Poly h, gfp::Poly f, std::string label) {
    if (!gfp::is_prime(p)) throw NoPrime(std::to_string(p) + " is not prime");
    if (p == 2) throw InvalidInput("hyperelliptic odd model requires odd characteristic");
    for (auto* poly : {&h, &f}) {
        for (auto& c : *poly) c %= p;
        gfp::normalize(*poly);
    }
    CurveModel c{HyperOddModel{p, std::move(h), std::move(f)}, std::move(label), {}};
    validate_curve(c);
    return c;
}

CurveModel dk_curve(unsigned k) { return as2_curve(dk_map(k), "D_" + std::to_string(k)); }

std::vector<PoleClass> pole_classes(const RationalMap& f) {
    std::vector<PoleClass> out;
    for (const auto& sf : gfp::squarefree_decomposition(f.denominator(), f.p())) {
        out.push_back({sf.factor, static_cast<unsigned>(gfp::degree(sf.factor)), sf.multiplicity, false});
    }
    const int at_inf = gfp::degree(f.numerator()) - gfp::degree(f.denominator());
    if (at_inf > 0) out.push_back({{}, 1, static_cast<unsigned>(at_inf), true});
    return out;
}

gfp::Poly completed_square(const HyperOddModel& c) {
    const std::uint32_t quarter = gfp::inv_mod(4 % c.p, c.p);
    return gfp::add(c.f, gfp::scale(gfp::mul(c.h, c.h, c.p), quarter, c.p), c.p);
}

void validate_curve(const CurveModel& c) {
    if (const auto* as2 = std::get_if<As2Model>(&c.model)) {
        const auto poles = pole_classes(as2->f);
        if (poles.empty()) throw NotReduced("f has no pole; y^2 + y = f(x) is not a smooth connected curve");
        for (const auto& pc : poles) {
            if (pc.order % 2 == 0) {
                throw NotReduced("pole of even order " + std::to_string(pc.order) +
                                 (pc.at_infinity ? " at infinity" : " at a finite place"));
            }
        }
        return;
    }
    const auto& hy = std::get<HyperOddModel>(c.model);
    const gfp::Poly F = completed_square(hy);
    if (gfp::degree(F) < 1) throw InvalidInput("completed square f + h^2/4 is constant");
    if (!gfp::is_squarefree(F, hy.p)) throw InvalidInput("f + h^2/4 has a repeated root; the model is singular");
}

unsigned genus(const CurveModel& c) {
    validate_curve(c);
    if (const auto* as2 = std::get_if<As2Model>(&c.model)) {
        unsigned total = 0;
        for (const auto& pc : pole_classes(as2->f)) total += pc.places * (pc.order + 1);
        return total / 2 - 1;
    }
    const int d = gfp::degree(completed_square(std::get<HyperOddModel>(c.model)));
    return static_cast<unsigned>((d - 1) / 2);
}

unsigned two_rank_deuring(const CurveModel& c) {
    const auto* as2 = std::get_if<As2Model>(&c.model);
    if (!as2) throw InvalidInput("Deuring-Shafarevich 2-rank applies to Artin-Schreier models");
    validate_curve(c);
    unsigned places = 0;
    for (const auto& pc : pole_classes(as2->f)) places += pc.places;
    return (places - 1) * (as2->f.p() - 1);
}

namespace {

mpz_class count_as2(const As2Model& c, unsigned m, const EnumerationOptions& options) {
    if (m > options.max_m) {
        throw TooLarge("m = " + std::to_string(m) + " exceeds the enumeration bound " + std::to_string(options.max_m));
    }
    const FiniteField field = cached_field(2, m);
    const std::int64_t s = char_sum(field, c.f, options);

    // Above infinity: one place if it is a pole, otherwise split or inert
    // according to Tr(f(infinity)).
    unsigned at_infinity = 1;
    const int gap = gfp::degree(c.f.numerator()) - gfp::degree(c.f.denominator());
    if (gap <= 0) {
        const bool value_is_one = gap == 0;  // leading coefficients are 1 over GF(2)
        const unsigned tr = value_is_one ? (m & 1U) : 0U;
        at_infinity = tr == 0 ? 2 : 0;
    }
    mpz_class n = mpz_class(1) << m;
    n += mpz_class(static_cast<long>(s));
    n += at_infinity;
    return n;
}

mpz_class count_hyper_odd(const HyperOddModel& c, unsigned m, const EnumerationOptions& options) {
    const gfp::Poly F = completed_square(c);
    mpz_class q_m;
    mpz_ui_pow_ui(q_m.get_mpz_t(), c.p, m);
    if (q_m > (mpz_class(1) << options.max_m)) {
        throw TooLarge(std::to_string(c.p) + "^" + std::to_string(m) + " exceeds the enumeration bound 2^" +
                       std::to_string(options.max_m));
    }
    const FiniteField field = cached_field(c.p, m);
    std::int64_t chi_sum = 0;
    for (std::uint64_t i = 0; i < field.order(); ++i) {
        chi_sum += field.quadratic_character(eval_poly(field, F, {i}));
    }
    mpz_class n = q_m + chi_sum;
    if (gfp::degree(F) % 2 == 1) {
        n += 1;
    } else {
        // Leading coefficient lies in GF(p); it is a square in every even-degree extension.
        const int chi = (m % 2 == 0) ? 1 : gfp::legendre(F.back(), c.p);
        n += 1 + chi;
    }
    return n;
}

}  // namespace

mpz_class count_points(const CurveModel& c, unsigned m, const EnumerationOptions& options) {
    if (m == 0) throw InvalidInput("extension degree must be at least 1");
    validate_curve(c);
    if (const auto* as2 = std::get_if<As2Model>(&c.model)) return count_as2(*as2, m, options);
    return count_hyper_odd(std::get<HyperOddModel>(c.model), m, options);
}

bool within_weil_bound(const mpz_class& q, unsigned g, unsigned m, const mpz_class& n) {
    mpz_class qm;
    mpz_pow_ui(qm.get_mpz_t(), q.get_mpz_t(), m);
    const mpz_class dev = n - qm - 1;
    return dev * dev <= mpz_class(4) * g * g * qm;
}

PointCountSeries count_series(const CurveModel& c, unsigned r, const EnumerationOptions& options) {
    const unsigned g = genus(c);
    PointCountSeries series{mpz_class(c.characteristic()), {}};
    series.counts.reserve(r);
    for (unsigned m = 1; m <= r; ++m) {
        mpz_class n = count_points(c, m, options);
        if (!within_weil_bound(series.q, g, m, n)) {
            throw NotConsistent("count " + n.get_str() + " over GF(q^" + std::to_string(m) + ") violates the Weil bound");
        }
        series.counts.push_back(std::move(n));
    }
    return series;
}

std::int64_t gsum(unsigned k, unsigned m, const EnumerationOptions& options) {
    if (m == 0) throw InvalidInput("extension degree must be at least 1");
    if (m > options.max_m) {
        throw TooLarge("m = " + std::to_string(m) + " exceeds the enumeration bound " + std::to_string(options.max_m));
    }
    return char_sum(cached_field(2, m), dk_map(k), options);
}

}  // namespace zetadiv
