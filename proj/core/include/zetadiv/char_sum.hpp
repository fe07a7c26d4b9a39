#pragma once

#include <cstdint>

#include "zetadiv/finite_field.hpp"
#include "zetadiv/rational_map.hpp"

namespace zetadiv {

struct EnumerationOptions {
    /// Worker threads; 0 means the hardware concurrency.
    unsigned threads = 0;
    /// Largest extension degree m that may be enumerated.
    unsigned max_m = 34;
};

unsigned resolve_threads(unsigned requested);

/// How many non-pole x have Tr(f(x)) = 0 and = 1.
struct TraceDistribution {
    std::uint64_t trace_zero = 0;
    std::uint64_t trace_one = 0;
    std::int64_t sum() const { return static_cast<std::int64_t>(trace_zero) - static_cast<std::int64_t>(trace_one); }
};

/// Walks x = g^i over the multiplicative group in fixed 2^16-step chunks
/// (plus x = 0 when it is not a pole). Laurent maps advance one running
/// product per monomial; general maps use Horner plus batched inversion.
/// Binary fields only; throws TooLarge when m exceeds options.max_m.
TraceDistribution trace_distribution(const FiniteField& field, const RationalMap& f,
                                     const EnumerationOptions& options = {});

/// sum over non-poles x of (-1)^Tr(f(x)).
std::int64_t char_sum(const FiniteField& field, const RationalMap& f, const EnumerationOptions& options = {});

}  // namespace zetadiv
