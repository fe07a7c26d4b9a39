#include "zetadiv_cli/report.hpp"

#include <iomanip>
#include <sstream>

namespace zetadiv::cli {

namespace {

using json = io::json;

json big(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json big_array(const std::vector<mpz_class>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(big(x));
    return a;
}

json opt_poly(const std::optional<IntPolynomial>& f) {
    if (!f) return nullptr;
    return f->to_string(false);
}

json lpoly_json(const LPolynomial& L) {
    json j = io::to_json(L);
    j["poly"] = L.poly.to_string(false);
    return j;
}

json opt_bool(std::optional<bool> b) {
    if (!b) return nullptr;
    return *b;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_text(const std::optional<IntPolynomial>& f) { return f ? f->to_string() : "-"; }

std::string curve_name(const CurveModel& c) {
    if (!c.label.empty()) return c.label;
    if (const auto* as2 = std::get_if<As2Model>(&c.model)) {
        return "y^2 + y = (" + IntPolynomial(std::vector<mpz_class>(as2->f.numerator().begin(), as2->f.numerator().end())).to_string() +
               ") / (" +
               IntPolynomial(std::vector<mpz_class>(as2->f.denominator().begin(), as2->f.denominator().end())).to_string() + ")";
    }
    return "hyperelliptic curve over GF(" + std::to_string(c.characteristic()) + ")";
}

const char* sign_note = "N_m = q^m + 1 + G_m";

}  // namespace

std::string human(const LPolynomial& L) { return L.poly.to_string(true); }

std::string to_string(QuotientShape s) {
    switch (s) {
        case QuotientShape::Trivial:
            return "trivial";
        case QuotientShape::PrimePower:
            return "prime_power";
        case QuotientShape::TwoPrimes:
            return "two_primes";
        case QuotientShape::Unattempted:
            return "unattempted";
    }
    return "unknown";
}

// ---- JSON ----

json report_json(const CountReport& r) {
    json j;
    j["schema"] = kSchemaVersion;
    j["report"] = "count";
    j["curve"] = io::to_json(r.curve);
    j["q"] = big(r.series.q);
    j["genus"] = r.genus;
    json rows = json::array();
    for (std::size_t i = 0; i < r.series.counts.size(); ++i)
        rows.push_back(json{{"m", r.first_m + i}, {"points", big(r.series.counts[i])}});
    j["counts"] = rows;
    return j;
}

json report_json(const LpolyReport& r) {
    json j;
    j["schema"] = kSchemaVersion;
    j["report"] = "lpoly";
    j["curve"] = io::to_json(r.curve);
    j["horizon"] = r.horizon;
    j["counts"] = big_array(r.counts);
    j["lpoly"] = lpoly_json(r.lpoly);
    j["valid"] = r.validation.ok;
    j["failures"] = r.validation.failures;
    j["p_rank"] = r.p_rank;
    if (r.curve.is_as2()) j["two_rank_deuring"] = r.deuring_two_rank;
    return j;
}

json report_json(const GsumReport& r) {
    json j;
    j["schema"] = kSchemaVersion;
    j["report"] = "gsum";
    j["k"] = r.k;
    j["m"] = r.m;
    j["value"] = r.value;
    j["points"] = big(r.points);
    j["convention"] = sign_note;
    return j;
}

json report_json(const DivisibilityReport& r) {
    json j;
    j["schema"] = kSchemaVersion;
    j["report"] = "check-div";
    j["k"] = r.k;
    j["horizon"] = r.horizon;
    j["lc"] = lpoly_json(r.lc);
    j["ld"] = lpoly_json(r.ld);
    json rows = json::array();
    for (const auto& row : r.hyp1_rows)
        rows.push_back(json{{"m", row.m}, {"count_c", big(row.count_c)}, {"count_d", big(row.count_d)}, {"equal", row.equal()}});
    j["hypothesis_counts"] = json{{"certified_up_to", r.horizon},
                                  {"holds", r.hyp1_holds()},
                                  {"first_failure", r.hyp1_first_failure ? json(*r.hyp1_first_failure) : json(nullptr)},
                                  {"rows", rows}};
    j["hypothesis_squarefree"] = r.hyp2_squarefree;
    j["divides"] = r.divides;
    j["quotient"] = opt_poly(r.quotient);
    j["quotient_in_tk"] = r.quotient_in_tk;
    j["quotient_compressed"] = opt_poly(r.quotient_compressed);
    j["verdict"] = to_string(r.verdict);
    return j;
}

json report_json(const DkReport& r) {
    json j;
    j["schema"] = kSchemaVersion;
    j["report"] = "verify-dk";
    j["k"] = r.k;
    j["genus"] = r.genus;
    j["horizon"] = r.horizon;
    j["counts"] = big_array(r.counts);
    j["l_dk"] = lpoly_json(r.l_dk);
    j["l_d1"] = lpoly_json(r.l_d1);
    j["lpoly_valid"] = r.lpoly_valid;
    j["divides"] = r.divides;
    j["quotient"] = opt_poly(r.quotient);
    json primes = json::array();
    for (auto p : r.primes) primes.push_back(p);
    j["primes"] = primes;
    j["shape"] = to_string(r.shape);
    j["quotient_in_tp"] = r.quotient_in_tp;
    j["quotient_compressed"] = opt_poly(r.quotient_compressed);
    if (r.split) {
        j["split"] = json{{"outcome", to_string(r.split->outcome)},
                          {"a", opt_poly(r.split->a)},
                          {"b", opt_poly(r.split->b)},
                          {"reason", r.split->reason}};
    } else {
        j["split"] = nullptr;
    }
    j["p_rank"] = json{{"l_dk", r.prank_dk}, {"quotient", r.prank_quotient}};
    j["d1_extensions_squarefree"] = r.d1_extensions_squarefree;
    j["conjecture_divisible"] = r.conjecture_divisible();
    j["conjecture_refined"] = opt_bool(r.conjecture_refined());
    j["convention"] = sign_note;
    return j;
}

json report_json(const GsumTable& r) {
    json j;
    j["schema"] = kSchemaVersion;
    j["report"] = "scan-gsum";
    j["k_max"] = r.k_max;
    j["m_max"] = r.m_max;
    json rows = json::array();
    for (const auto& e : r.entries) rows.push_back(json{{"k", e.k}, {"m", e.m}, {"value", e.value}});
    j["entries"] = rows;
    json mism = json::array();
    for (const auto& [k, m] : r.mismatches) mism.push_back(json{{"k", k}, {"m", m}});
    j["mismatches"] = mism;
    j["consistent"] = r.mismatches.empty();
    return j;
}

json report_json(const CounterexampleReport& r) {
    json j;
    j["schema"] = kSchemaVersion;
    j["report"] = "counterexample";
    j["lc"] = lpoly_json(r.lc);
    j["ld"] = lpoly_json(r.ld);
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = checks;
    j["all_passed"] = r.all_passed();
    return j;
}

// ---- tables ----

std::string report_table(const CountReport& r) {
    std::ostringstream os;
    os << "curve: " << curve_name(r.curve) << "\n";
    os << "q = " << r.series.q << ", genus " << r.genus << "\n";
    os << std::setw(4) << "m" << "  N_m\n";
    for (std::size_t i = 0; i < r.series.counts.size(); ++i)
        os << std::setw(4) << r.first_m + i << "  " << r.series.counts[i] << "\n";
    return os.str();
}

std::string report_table(const LpolyReport& r) {
    std::ostringstream os;
    os << "curve: " << curve_name(r.curve) << "\n";
    os << "q = " << r.lpoly.q << ", genus " << r.lpoly.genus << ", counts up to m = " << r.horizon << "\n";
    os << "L(t) = " << human(r.lpoly) << "\n";
    os << "functional equation / Weil checks: " << (r.validation.ok ? "ok" : "FAILED") << "\n";
    for (const auto& f : r.validation.failures) os << "  " << f << "\n";
    os << "p-rank (Manin): " << r.p_rank << "\n";
    if (r.curve.is_as2()) os << "2-rank (Deuring): " << r.deuring_two_rank << "\n";
    return os.str();
}

std::string report_table(const GsumReport& r) {
    std::ostringstream os;
    os << "G_" << r.m << "^(" << r.k << ") = " << r.value << "\n";
    os << "N_" << r.m << "(D_" << r.k << ") = " << r.points << "  (" << sign_note << ")\n";
    return os.str();
}

std::string report_table(const DivisibilityReport& r) {
    std::ostringstream os;
    os << "k = " << r.k << ", horizon = " << r.horizon << "\n";
    os << "L_C(t) = " << human(r.lc) << "\n";
    os << "L_D(t) = " << human(r.ld) << "\n";
    os << "hypothesis: equal counts for k not dividing m (certified up to m = " << r.horizon << ")\n";
    os << std::setw(4) << "m" << "  " << std::setw(14) << "N_m(C)" << "  " << std::setw(14) << "N_m(D)" << "  equal\n";
    for (const auto& row : r.hyp1_rows)
        os << std::setw(4) << row.m << "  " << std::setw(14) << row.count_c << "  " << std::setw(14) << row.count_d << "  "
           << yes_no(row.equal()) << "\n";
    os << "hypothesis: L_C^(k) squarefree: " << yes_no(r.hyp2_squarefree) << "\n";
    os << "divides: " << yes_no(r.divides) << "\n";
    os << "quotient: " << opt_text(r.quotient) << "\n";
    if (r.quotient_compressed) os << "quotient in t^" << r.k << ": " << r.quotient_compressed->to_string() << "\n";
    os << "verdict: " << to_string(r.verdict) << "\n";
    return os.str();
}

std::string report_table(const DkReport& r) {
    std::ostringstream os;
    os << "D_" << r.k << ": genus " << r.genus << ", counts up to m = " << r.horizon << "\n";
    os << "L_D" << r.k << "(t) = " << human(r.l_dk) << "\n";
    os << "L_D1(t) = " << human(r.l_d1) << "\n";
    os << "L-polynomial checks: " << (r.lpoly_valid ? "ok" : "FAILED") << "\n";
    os << "divisible by L_D1: " << yes_no(r.divides) << "\n";
    os << "quotient: " << opt_text(r.quotient) << "\n";
    os << "shape: " << to_string(r.shape);
    if (!r.primes.empty()) {
        os << " (primes";
        for (auto p : r.primes) os << " " << p;
        os << ")";
    }
    os << "\n";
    if (r.shape == QuotientShape::PrimePower) {
        os << "quotient in t^" << r.primes.front() << ": " << yes_no(r.quotient_in_tp);
        if (r.quotient_compressed) os << "  [" << r.quotient_compressed->to_string() << "]";
        os << "\n";
    }
    if (r.split) {
        os << "split: " << to_string(r.split->outcome);
        if (r.split->a) os << "  A = " << r.split->a->to_string();
        if (r.split->b) os << "  B = " << r.split->b->to_string();
        if (!r.split->reason.empty()) os << "  (" << r.split->reason << ")";
        os << "\n";
    }
    os << "p-rank: L_D" << r.k << " " << r.prank_dk << ", quotient " << r.prank_quotient << "\n";
    os << "extensions of L_D1 squarefree: " << yes_no(r.d1_extensions_squarefree) << "\n";
    const auto refined = r.conjecture_refined();
    os << "conjecture (divisibility): " << (r.conjecture_divisible() ? "holds" : "fails") << "\n";
    os << "conjecture (shape): " << (!refined ? "undecided" : (*refined ? "holds" : "fails")) << "\n";
    return os.str();
}

std::string report_table(const GsumTable& r) {
    std::ostringstream os;
    os << std::setw(4) << "m";
    for (unsigned k = 1; k <= r.k_max; ++k) os << std::setw(12) << ("k=" + std::to_string(k));
    os << "\n";
    for (unsigned m = 1; m <= r.m_max; ++m) {
        os << std::setw(4) << m;
        for (unsigned k = 1; k <= r.k_max; ++k) os << std::setw(12) << r.value(k, m);
        os << "\n";
    }
    if (r.mismatches.empty()) {
        os << "all (k,m) consistent\n";
    } else {
        os << r.mismatches.size() << " mismatches:";
        for (const auto& [k, m] : r.mismatches) os << " (" << k << "," << m << ")";
        os << "\n";
    }
    return os.str();
}

std::string report_table(const CounterexampleReport& r) {
    std::ostringstream os;
    os << "L_C(t) = " << human(r.lc) << "\n";
    os << "L_D(t) = " << human(r.ld) << "\n";
    for (const auto& c : r.checks) os << (c.passed ? "[pass] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    os << (r.all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
    return os.str();
}

}  // namespace zetadiv::cli
