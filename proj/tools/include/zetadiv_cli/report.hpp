#pragma once

#include <string>

#include "zetadiv/decomp.hpp"
#include "zetadiv_cli/io.hpp"

namespace zetadiv::cli {

enum class Format { Table, Json };

inline constexpr int kSchemaVersion = 1;

/// Counts of one curve.
struct CountReport {
    CurveModel curve;
    unsigned genus = 0;
    /// First extension degree of `series.counts`.
    unsigned first_m = 1;
    PointCountSeries series;
};

/// An L-polynomial computed from counts, with its checks.
struct LpolyReport {
    CurveModel curve;
    unsigned horizon = 0;
    std::vector<mpz_class> counts;
    LPolynomial lpoly;
    LpolyValidation validation;
    unsigned p_rank = 0;
    unsigned deuring_two_rank = 0;  // AS2 models only
};

struct GsumReport {
    unsigned k = 1;
    unsigned m = 1;
    std::int64_t value = 0;
    mpz_class points;  // 2^m + 1 + G
};

io::json report_json(const CountReport& r);
io::json report_json(const LpolyReport& r);
io::json report_json(const GsumReport& r);
io::json report_json(const DivisibilityReport& r);
io::json report_json(const DkReport& r);
io::json report_json(const GsumTable& r);
io::json report_json(const CounterexampleReport& r);

std::string report_table(const CountReport& r);
std::string report_table(const LpolyReport& r);
std::string report_table(const GsumReport& r);
std::string report_table(const DivisibilityReport& r);
std::string report_table(const DkReport& r);
std::string report_table(const GsumTable& r);
std::string report_table(const CounterexampleReport& r);

/// Deterministic text: JSON is two-space indented with fixed key order.
template <class Report>
std::string emit_report(const Report& r, Format format) {
    if (format == Format::Json) return report_json(r).dump(2) + "\n";
    return report_table(r);
}

/// Human form, e.g. "4t^4 + 2t^3 + t + 1".
std::string human(const LPolynomial& L);

std::string to_string(QuotientShape s);

}  // namespace zetadiv::cli
