#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zetadiv/char_sum.hpp"
#include "zetadiv/curves.hpp"
#include "zetadiv/intpoly.hpp"
#include "zetadiv/zeta.hpp"

namespace zetadiv {

enum class Verdict {
    TheoremAppliesHolds,
    TheoremAppliesViolationFound,
    HypothesisFails,
};

std::string to_string(Verdict v);

struct CountComparison {
    unsigned m;
    mpz_class count_c;
    mpz_class count_d;
    bool equal() const { return count_c == count_d; }
};

/// Result of testing L_D(t) = q(t^k) L_C(t) for a pair of curves (or of
/// L-polynomials). Equal counts are only certified for m <= horizon.
struct DivisibilityReport {
    unsigned k = 1;
    unsigned horizon = 1;
    LPolynomial lc;
    LPolynomial ld;
    /// Rows for every m <= horizon with k not dividing m.
    std::vector<CountComparison> hyp1_rows;
    std::optional<unsigned> hyp1_first_failure;
    bool hyp2_squarefree = false;
    bool divides = false;
    std::optional<IntPolynomial> quotient;
    bool quotient_in_tk = false;
    /// h with quotient(t) = h(t^k), when quotient_in_tk.
    std::optional<IntPolynomial> quotient_compressed;
    Verdict verdict = Verdict::HypothesisFails;

    bool hyp1_holds() const { return !hyp1_first_failure.has_value(); }
};

/// Curve-level check: counts both curves for m = 1..horizon, builds both
/// L-polynomials, then tests the hypotheses and the conclusion.
/// Throws InvalidInput if the curves live over different fields or the
/// horizon is below either genus.
DivisibilityReport check_main_theorem(const CurveModel& c, const CurveModel& d, unsigned k, unsigned horizon,
                                      const EnumerationOptions& options = {});

/// Same check with the counts implied by two L-polynomials.
DivisibilityReport check_main_theorem(const LPolynomial& lc, const LPolynomial& ld, unsigned k, unsigned horizon);

/// L_C(t)^k L_D^(k)(t^k) == L_D(t)^k L_C^(k)(t^k).
bool master_identity_check(const LPolynomial& lc, const LPolynomial& ld, unsigned k);

/// With L_D = qpoly(t^k) L_C, compares counts for all m <= horizon, k not
/// dividing m. Throws InvalidInput unless qpoly(0) = 1.
bool converse_counts_check(const LPolynomial& lc, const IntPolynomial& qpoly, unsigned k, unsigned horizon);

enum class SplitOutcome { Split, NoSplit, Inconclusive };

std::string to_string(SplitOutcome o);

/// Q(t) = A(t^p1) B(t^p2) with A, B compressed.
struct SplitResult {
    SplitOutcome outcome = SplitOutcome::Inconclusive;
    std::optional<IntPolynomial> a;
    std::optional<IntPolynomial> b;
    std::string reason;
};

/// Decides Q(t) = A(t^p1) B(t^p2) when one prime is 2, through
/// gcd(Q(t), Q(-t)); two odd primes only get the trivial splits.
SplitResult split_two_prime(const IntPolynomial& q, std::uint32_t p1, std::uint32_t p2);

enum class QuotientShape { Trivial, PrimePower, TwoPrimes, Unattempted };

struct DkReport {
    unsigned k = 1;
    unsigned genus = 0;
    unsigned horizon = 0;
    std::vector<mpz_class> counts;
    LPolynomial l_dk;
    LPolynomial l_d1;
    bool divides = false;
    std::optional<IntPolynomial> quotient;
    std::vector<std::uint32_t> primes;  // distinct prime factors of k
    QuotientShape shape = QuotientShape::Trivial;
    /// Prime-power k: support of the quotient in t^p.
    bool quotient_in_tp = false;
    std::optional<IntPolynomial> quotient_compressed;
    /// Two-prime k.
    std::optional<SplitResult> split;
    unsigned prank_dk = 0;
    unsigned prank_quotient = 0;
    /// L_D1^(p) squarefree for every prime p | k.
    bool d1_extensions_squarefree = true;
    bool lpoly_valid = false;

    /// Divisibility by L_D1.
    bool conjecture_divisible() const { return divides; }
    /// Refined shape: true / false / nullopt when undecided.
    std::optional<bool> conjecture_refined() const;
};

/// Counts D_k for m = 1..max(genus, horizon), builds L_{D_k}, divides by
/// L_{D_1} and analyses the quotient shape.
DkReport verify_conjecture_dk(unsigned k, std::optional<unsigned> horizon = std::nullopt,
                              const EnumerationOptions& options = {});

struct GsumEntry {
    unsigned k;
    unsigned m;
    std::int64_t value;
};

struct GsumTable {
    unsigned k_max = 0;
    unsigned m_max = 0;
    std::vector<GsumEntry> entries;  // row-major in k, then m
    /// (k, m) where G_m^(k) != G_m^(gcd(k, m)).
    std::vector<std::pair<unsigned, unsigned>> mismatches;

    std::int64_t value(unsigned k, unsigned m) const;
};

GsumTable gsum_invariance_scan(unsigned k_max, unsigned m_max, const EnumerationOptions& options = {});

struct NamedCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct CounterexampleReport {
    LPolynomial lc;
    LPolynomial ld;
    std::vector<NamedCheck> checks;
    bool all_passed() const;
};

/// The F_3 pair 3t^2+t+1 and 9t^4+3t^3-2t^2+t+1: equal counts for
/// gcd(m, 6) = 1, yet no divisibility.
CounterexampleReport counterexample_f3();

}  // namespace zetadiv
