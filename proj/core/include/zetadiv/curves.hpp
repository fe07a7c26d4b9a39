#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "zetadiv/char_sum.hpp"
#include "zetadiv/gfp_poly.hpp"
#include "zetadiv/rational_map.hpp"

namespace zetadiv {

/// y^2 + y = f(x) over GF(2), f in Artin-Schreier reduced form.
struct As2Model {
    RationalMap f;
};

/// y^2 + h(x) y = f(x) over GF(p), p odd.
struct HyperOddModel {
    std::uint32_t p;
    gfp::Poly h;
    gfp::Poly f;
};

struct CurveModel {
    std::variant<As2Model, HyperOddModel> model;
    std::string label;
    /// Free-form provenance note carried through from input files.
    std::string note;

    std::uint32_t characteristic() const;
    bool is_as2() const { return std::holds_alternative<As2Model>(model); }
};

CurveModel as2_curve(RationalMap f, std::string label = {});
CurveModel hyper_odd_curve(std::uint32_t p, gfp::Poly h, gfp::Poly f, std::string label = {});
/// D_k : y^2 + y = x^(2^k+1) + 1/x.
CurveModel dk_curve(unsigned k);

/// N_1..N_r of a curve over GF(q), q the base field size.
struct PointCountSeries {
    mpz_class q;
    std::vector<mpz_class> counts;
};

/// One geometric pole class of an Artin-Schreier right-hand side: `places`
/// conjugate poles, each of order `order`.
struct PoleClass {
    gfp::Poly factor;  // squarefree part with this multiplicity; empty at infinity
    unsigned places;
    unsigned order;
    bool at_infinity;
};

/// Pole structure of f over the algebraic closure of GF(p).
std::vector<PoleClass> pole_classes(const RationalMap& f);

/// y^2 = F(x) with F = f + h^2/4.
gfp::Poly completed_square(const HyperOddModel& c);

/// Throws NotReduced when an Artin-Schreier pole has even order or f has no
/// pole; InvalidInput when a hyperelliptic model is singular.
void validate_curve(const CurveModel& c);

unsigned genus(const CurveModel& c);

/// Deuring-Shafarevich: (number of geometric poles - 1)(p - 1).
unsigned two_rank_deuring(const CurveModel& c);

/// #C(GF(q^m)) on the smooth projective model. Throws TooLarge past
/// options.max_m (binary) or the field-size bound (odd).
mpz_class count_points(const CurveModel& c, unsigned m, const EnumerationOptions& options = {});

/// N_1..N_r, each checked against the Weil bound.
PointCountSeries count_series(const CurveModel& c, unsigned r, const EnumerationOptions& options = {});

/// G_m^(k) = sum over x in GF(2^m)^* of (-1)^Tr(x^(2^k+1) + 1/x).
std::int64_t gsum(unsigned k, unsigned m, const EnumerationOptions& options = {});

/// |N - q^m - 1| <= 2 g q^(m/2), evaluated exactly.
bool within_weil_bound(const mpz_class& q, unsigned g, unsigned m, const mpz_class& n);

}  // namespace zetadiv
