#include "zetadiv/decomp.hpp"

#include <numeric>
#include <string>

#include "zetadiv/errors.hpp"

namespace zetadiv {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::TheoremAppliesHolds: return "TheoremApplies&Holds";
        case Verdict::TheoremAppliesViolationFound: return "TheoremApplies&ViolationFound";
        case Verdict::HypothesisFails: return "HypothesisFails";
    }
    return "?";
}

std::string to_string(SplitOutcome o) {
    switch (o) {
        case SplitOutcome::Split: return "Split";
        case SplitOutcome::NoSplit: return "NoSplit";
        case SplitOutcome::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

DivisibilityReport evaluate(LPolynomial lc, LPolynomial ld, const std::vector<mpz_class>& counts_c,
                            const std::vector<mpz_class>& counts_d, unsigned k, unsigned horizon) {
    DivisibilityReport r;
    r.k = k;
    r.horizon = horizon;
    for (unsigned m = 1; m <= horizon; ++m) {
        if (m % k == 0) continue;
        CountComparison row{m, counts_c[m - 1], counts_d[m - 1]};
        if (!row.equal() && !r.hyp1_first_failure) r.hyp1_first_failure = m;
        r.hyp1_rows.push_back(std::move(row));
    }
    r.hyp2_squarefree = squarefree_over_q(extension_poly(lc.poly, k));

    auto division = divides_with_quotient(lc.poly, ld.poly);
    r.divides = division.divides;
    r.quotient = std::move(division.quotient);
    if (r.quotient) {
        r.quotient_compressed = support_in_tk(*r.quotient, k);
        r.quotient_in_tk = r.quotient_compressed.has_value();
    }

    if (!r.hyp1_holds() || !r.hyp2_squarefree) {
        r.verdict = Verdict::HypothesisFails;
    } else if (r.divides && r.quotient_in_tk) {
        r.verdict = Verdict::TheoremAppliesHolds;
    } else {
        r.verdict = Verdict::TheoremAppliesViolationFound;
    }
    r.lc = std::move(lc);
    r.ld = std::move(ld);
    return r;
}

void require_k(unsigned k, unsigned horizon) {
    if (k == 0) throw InvalidInput("k must be positive");
    if (horizon == 0) throw InvalidInput("horizon must be positive");
}

}  // namespace

DivisibilityReport check_main_theorem(const LPolynomial& lc, const LPolynomial& ld, unsigned k, unsigned horizon) {
    require_k(k, horizon);
    if (lc.q != ld.q) throw InvalidInput("L-polynomials are over different base fields");
    const auto cc = counts_from_lpoly(lc, horizon);
    const auto cd = counts_from_lpoly(ld, horizon);
    return evaluate(lc, ld, cc.counts, cd.counts, k, horizon);
}

DivisibilityReport check_main_theorem(const CurveModel& c, const CurveModel& d, unsigned k, unsigned horizon,
                                      const EnumerationOptions& options) {
    require_k(k, horizon);
    if (c.characteristic() != d.characteristic()) throw InvalidInput("curves are over different base fields");
    const unsigned gc = genus(c), gd = genus(d);
    if (horizon < std::max(gc, gd)) {
        throw InvalidInput("horizon " + std::to_string(horizon) + " is below the genus " +
                           std::to_string(std::max(gc, gd)));
    }
    const auto sc = count_series(c, horizon, options);
    const auto sd = count_series(d, horizon, options);
    LPolynomial lc = lpoly_from_counts(sc.q, gc, sc.counts);
    LPolynomial ld = lpoly_from_counts(sd.q, gd, sd.counts);
    return evaluate(std::move(lc), std::move(ld), sc.counts, sd.counts, k, horizon);
}

bool master_identity_check(const LPolynomial& lc, const LPolynomial& ld, unsigned k) {
    if (k == 0) throw InvalidInput("k must be positive");
    if (lc.q != ld.q) throw InvalidInput("L-polynomials are over different base fields");
    const IntPolynomial lhs = lc.poly.pow(k) * extension_poly(ld.poly, k).expand_power(k);
    const IntPolynomial rhs = ld.poly.pow(k) * extension_poly(lc.poly, k).expand_power(k);
    return lhs == rhs;
}

bool converse_counts_check(const LPolynomial& lc, const IntPolynomial& qpoly, unsigned k, unsigned horizon) {
    require_k(k, horizon);
    if (qpoly.constant_term() != 1) throw InvalidInput("quotient polynomial must satisfy q(0) = 1");
    const IntPolynomial ld = qpoly.expand_power(k) * lc.poly;
    const auto sc = power_sums_from_poly(lc.poly, horizon);
    const auto sd = power_sums_from_poly(ld, horizon);
    for (unsigned m = 1; m <= horizon; ++m) {
        if (m % k != 0 && sc[m - 1] != sd[m - 1]) return false;
    }
    return true;
}

SplitResult split_two_prime(const IntPolynomial& q, std::uint32_t p1, std::uint32_t p2) {
    if (q.constant_term() != 1) throw InvalidInput("split_two_prime expects Q(0) = 1");
    if (!gfp::is_prime(p1) || !gfp::is_prime(p2) || p1 == p2) {
        throw InvalidInput("split_two_prime needs two distinct primes");
    }
    const bool swapped = p1 != 2 && p2 == 2;
    if (swapped) std::swap(p1, p2);

    auto finish = [&](SplitResult r) {
        if (swapped) std::swap(r.a, r.b);
        return r;
    };
    auto make_split = [&](IntPolynomial a, IntPolynomial b, std::string reason) {
        SplitResult r{SplitOutcome::Split, std::move(a), std::move(b), std::move(reason)};
        if (r.a->expand_power(p1) * r.b->expand_power(p2) != q) {
            throw NotConsistent("split does not reproduce Q");
        }
        return finish(std::move(r));
    };

    const unsigned deg = static_cast<unsigned>(q.degree());
    bool feasible = false;
    for (unsigned a = 0; a * p1 <= deg && !feasible; ++a) feasible = (deg - a * p1) % p2 == 0;
    if (!feasible) {
        return finish({SplitOutcome::NoSplit, std::nullopt, std::nullopt,
                       "degree " + std::to_string(deg) + " is not a nonnegative combination of " +
                           std::to_string(p1) + " and " + std::to_string(p2)});
    }

    if (p1 == 2) {
        IntPolynomial g = gcd_primitive(q, q.negate_variable());
        if (g.constant_term() < 0) g = -g;
        auto even = support_in_tk(g, 2);
        auto division = divides_with_quotient(g, q);
        if (!even || !division.divides) throw NotConsistent("gcd(Q(t), Q(-t)) is not an even divisor of Q");
        if (auto b = support_in_tk(*division.quotient, p2)) {
            return make_split(*even, *b, "gcd(Q(t), Q(-t)) gives the t^2 part");
        }
        // The gcd contains every factor of Q lying in Z[t^2], so the residual
        // decides the question.
        return finish({SplitOutcome::NoSplit, std::nullopt, std::nullopt,
                       "Q / gcd(Q(t), Q(-t)) is not in Z[t^" + std::to_string(p2) + "]"});
    }

    if (auto a = support_in_tk(q, p1)) return make_split(*a, IntPolynomial{1}, "Q lies in Z[t^p1]");
    if (auto b = support_in_tk(q, p2)) return make_split(IntPolynomial{1}, *b, "Q lies in Z[t^p2]");
    return finish({SplitOutcome::Inconclusive, std::nullopt, std::nullopt,
                   "two odd primes: only trivial splits are attempted"});
}

std::optional<bool> DkReport::conjecture_refined() const {
    if (!divides) return false;
    switch (shape) {
        case QuotientShape::Trivial: return true;
        case QuotientShape::PrimePower: return quotient_in_tp;
        case QuotientShape::TwoPrimes:
            if (!split || split->outcome == SplitOutcome::Inconclusive) return std::nullopt;
            return split->outcome == SplitOutcome::Split;
        case QuotientShape::Unattempted: return std::nullopt;
    }
    return std::nullopt;
}

DkReport verify_conjecture_dk(unsigned k, std::optional<unsigned> horizon, const EnumerationOptions& options) {
    if (k == 0) throw InvalidInput("k must be positive");
    DkReport r;
    r.k = k;
    const CurveModel dk = dk_curve(k);
    r.genus = genus(dk);
    r.horizon = std::max(r.genus, horizon.value_or(r.genus));
    if (r.horizon > options.max_m) {
        throw TooLarge("D_" + std::to_string(k) + " needs counts up to m = " + std::to_string(r.horizon) +
                       ", above the enumeration bound " + std::to_string(options.max_m));
    }
    const auto series = count_series(dk, r.horizon, options);
    r.counts = series.counts;
    r.l_dk = lpoly_from_counts(series.q, r.genus, series.counts);
    if (k == 1) {
        r.l_d1 = r.l_dk;
    } else {
        const CurveModel d1 = dk_curve(1);
        const auto s1 = count_series(d1, 2, options);
        r.l_d1 = lpoly_from_counts(s1.q, 2, s1.counts);
    }
    r.lpoly_valid = validate_lpoly(r.l_dk).ok;

    auto division = divides_with_quotient(r.l_d1.poly, r.l_dk.poly);
    r.divides = division.divides;
    r.quotient = std::move(division.quotient);

    for (auto p : gfp::prime_factors(k)) r.primes.push_back(static_cast<std::uint32_t>(p));
    for (auto p : r.primes) {
        if (!squarefree_over_q(extension_poly(r.l_d1.poly, p))) r.d1_extensions_squarefree = false;
    }

    r.prank_dk = p_rank_manin(r.l_dk, 2);
    if (r.quotient) r.prank_quotient = p_rank_manin({r.l_dk.q, 0, *r.quotient}, 2);

    if (r.primes.empty()) {
        r.shape = QuotientShape::Trivial;
    } else if (r.primes.size() == 1) {
        r.shape = QuotientShape::PrimePower;
        if (r.quotient) {
            r.quotient_compressed = support_in_tk(*r.quotient, r.primes[0]);
            r.quotient_in_tp = r.quotient_compressed.has_value();
        }
    } else if (r.primes.size() == 2) {
        r.shape = QuotientShape::TwoPrimes;
        if (r.quotient) r.split = split_two_prime(*r.quotient, r.primes[0], r.primes[1]);
    } else {
        r.shape = QuotientShape::Unattempted;
    }
    return r;
}

std::int64_t GsumTable::value(unsigned k, unsigned m) const {
    if (k == 0 || m == 0 || k > k_max || m > m_max) throw InvalidInput("(k, m) outside the scanned rectangle");
    return entries[static_cast<std::size_t>(k - 1) * m_max + (m - 1)].value;
}

GsumTable gsum_invariance_scan(unsigned k_max, unsigned m_max, const EnumerationOptions& options) {
    if (k_max == 0 || m_max == 0) throw InvalidInput("k_max and m_max must be positive");
    if (m_max > options.max_m) {
        throw TooLarge("m_max = " + std::to_string(m_max) + " exceeds the enumeration bound " +
                       std::to_string(options.max_m));
    }
    GsumTable t;
    t.k_max = k_max;
    t.m_max = m_max;
    t.entries.reserve(static_cast<std::size_t>(k_max) * m_max);
    for (unsigned k = 1; k <= k_max; ++k) {
        for (unsigned m = 1; m <= m_max; ++m) t.entries.push_back({k, m, gsum(k, m, options)});
    }
    for (unsigned k = 1; k <= k_max; ++k) {
        for (unsigned m = 1; m <= m_max; ++m) {
            if (t.value(k, m) != t.value(std::gcd(k, m), m)) t.mismatches.emplace_back(k, m);
        }
    }
    return t;
}

bool CounterexampleReport::all_passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return !checks.empty();
}

CounterexampleReport counterexample_f3() {
    CounterexampleReport r;
    r.lc = {3, 1, IntPolynomial{1, 1, 3}};
    r.ld = {3, 2, IntPolynomial{1, 1, -2, 3, 9}};

    constexpr unsigned kHorizon = 25;
    const auto cc = counts_from_lpoly(r.lc, kHorizon);
    const auto cd = counts_from_lpoly(r.ld, kHorizon);

    bool coprime_equal = true;
    std::string coprime_detail = "checked m in {";
    for (unsigned m = 1; m <= kHorizon; ++m) {
        if (std::gcd(m, 6u) != 1) continue;
        coprime_detail += (coprime_detail.back() == '{' ? "" : ",") + std::to_string(m);
        if (cc.counts[m - 1] != cd.counts[m - 1]) coprime_equal = false;
    }
    coprime_detail += "}";
    r.checks.push_back({"equal counts for gcd(m,6)=1, m<=25", coprime_equal, coprime_detail});

    r.checks.push_back({"counts differ at m=2", cc.counts[1] != cd.counts[1],
                        "N_2(C) = " + cc.counts[1].get_str() + ", N_2(D) = " + cd.counts[1].get_str()});

    const auto division = divides_with_quotient(r.lc.poly, r.ld.poly);
    r.checks.push_back({"L_C does not divide L_D", !division.divides, "exact division in Z[t]"});

    r.checks.push_back({"L_C squarefree", squarefree_over_q(r.lc.poly), r.lc.poly.to_string()});

    bool ext_ok = true;
    unsigned first_bad = 0;
    for (unsigned n = 1; n <= 12; ++n) {
        if (!squarefree_over_q(extension_poly(r.lc.poly, n))) {
            ext_ok = false;
            first_bad = n;
            break;
        }
    }
    r.checks.push_back({"L_C^(n) squarefree for n<=12", ext_ok,
                        ext_ok ? "all n in 1..12" : "fails at n = " + std::to_string(first_bad)});
    return r;
}

}  // namespace zetadiv
