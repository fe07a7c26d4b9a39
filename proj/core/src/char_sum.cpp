#include "zetadiv/char_sum.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "zetadiv/errors.hpp"

namespace zetadiv {

namespace {

constexpr std::uint64_t kChunkSize = 1ULL << 16;
constexpr std::size_t kBatch = 256;

struct Chunk {
    std::uint64_t begin;
    std::uint64_t end;
};

std::uint64_t horner_gf2(const gf2::Reducer& red, const gfp::Poly& f, std::uint64_t x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = red.mul(acc, x) ^ f[i];
    return acc;
}

class LaurentKernel {
public:
    LaurentKernel(const FiniteField& field, const std::vector<RationalMap::Term>& terms) : field_(field) {
        const std::uint64_t q1 = field.order() - 1;
        for (const auto& t : terms) {
            if (t.exponent == 0) {
                constant_trace_ ^= field.trace(field.one());
                continue;
            }
            const std::int64_t signed_q1 = static_cast<std::int64_t>(q1);
            const auto e = static_cast<std::uint64_t>(((t.exponent % signed_q1) + signed_q1) % signed_q1);
            exponents_.push_back(e);
            steps_.push_back(field.pow(field.generator(), e).packed);
        }
    }

    TraceDistribution run(Chunk c) const {
        const auto& red = field_.reducer();
        const std::uint64_t mask = field_.trace_mask();
        const std::size_t n = exponents_.size();
        std::uint64_t ones = 0;
        if (n == 2) {
            // Independent lanes over contiguous sub-ranges hide the multiply latency.
            constexpr std::size_t kLanes = 4;
            const std::uint64_t len = c.end - c.begin;
            const std::uint64_t sub = len / kLanes;
            const std::uint64_t sa = steps_[0], sb = steps_[1];
            std::uint64_t a[kLanes], b[kLanes];
            for (std::size_t l = 0; l < kLanes; ++l) {
                a[l] = start_power(c.begin + l * sub, 0);
                b[l] = start_power(c.begin + l * sub, 1);
            }
            for (std::uint64_t i = 0; i < sub; ++i) {
                for (std::size_t l = 0; l < kLanes; ++l) {
                    ones += gf2::parity((a[l] ^ b[l]) & mask) ^ constant_trace_;
                    a[l] = red.mul(a[l], sa);
                    b[l] = red.mul(b[l], sb);
                }
            }
            std::uint64_t x = a[kLanes - 1], y = b[kLanes - 1];
            for (std::uint64_t i = c.begin + kLanes * sub; i < c.end; ++i) {
                ones += gf2::parity((x ^ y) & mask) ^ constant_trace_;
                x = red.mul(x, sa);
                y = red.mul(y, sb);
            }
        } else {
            std::vector<std::uint64_t> cur(n);
            for (std::size_t j = 0; j < n; ++j) cur[j] = start_power(c.begin, j);
            for (std::uint64_t i = c.begin; i < c.end; ++i) {
                std::uint64_t v = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    v ^= cur[j];
                    cur[j] = red.mul(cur[j], steps_[j]);
                }
                ones += gf2::parity(v & mask) ^ constant_trace_;
            }
        }
        return {c.end - c.begin - ones, ones};
    }

private:
    // g^(i * e_j), the j-th monomial at x = g^i.
    std::uint64_t start_power(std::uint64_t i, std::size_t j) const {
        const std::uint64_t q1 = field_.order() - 1;
        const auto e = static_cast<std::uint64_t>((static_cast<gf2::u128>(i) * exponents_[j]) % q1);
        return field_.pow(field_.generator(), e).packed;
    }

    const FiniteField& field_;
    std::vector<std::uint64_t> exponents_;
    std::vector<std::uint64_t> steps_;
    std::uint32_t constant_trace_ = 0;
};

class GeneralKernel {
public:
    GeneralKernel(const FiniteField& field, const RationalMap& f) : field_(field), f_(f) {}

    TraceDistribution run(Chunk c) const {
        const auto& red = field_.reducer();
        const std::uint64_t mask = field_.trace_mask();
        const std::uint64_t g = field_.generator().packed;
        std::uint64_t x = field_.pow(field_.generator(), c.begin).packed;

        TraceDistribution out;
        std::uint64_t nums[kBatch], dens[kBatch], prefix[kBatch];
        for (std::uint64_t base = c.begin; base < c.end; base += kBatch) {
            const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, c.end - base));
            std::uint64_t running = 1;
            for (std::size_t i = 0; i < len; ++i) {
                nums[i] = horner_gf2(red, f_.numerator(), x);
                dens[i] = horner_gf2(red, f_.denominator(), x);
                prefix[i] = running;
                if (dens[i] != 0) running = red.mul(running, dens[i]);
                x = red.mul(x, g);
            }
            // Montgomery batch inversion over the non-pole entries.
            std::uint64_t inv = field_.inv({running}).packed;
            for (std::size_t i = len; i-- > 0;) {
                if (dens[i] == 0) continue;
                const std::uint64_t den_inv = red.mul(inv, prefix[i]);
                inv = red.mul(inv, dens[i]);
                if (gf2::parity(red.mul(nums[i], den_inv) & mask)) {
                    ++out.trace_one;
                } else {
                    ++out.trace_zero;
                }
            }
        }
        return out;
    }

private:
    const FiniteField& field_;
    const RationalMap& f_;
};

template <class Kernel>
TraceDistribution run_chunks(const Kernel& kernel, std::uint64_t total, unsigned threads) {
    std::vector<Chunk> chunks;
    for (std::uint64_t b = 0; b < total; b += kChunkSize) chunks.push_back({b, std::min(total, b + kChunkSize)});
    std::vector<TraceDistribution> partial(chunks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < chunks.size(); i = next.fetch_add(1)) {
            partial[i] = kernel.run(chunks[i]);
        }
    };
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, chunks.size()));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    TraceDistribution sum;
    for (const auto& d : partial) {
        sum.trace_zero += d.trace_zero;
        sum.trace_one += d.trace_one;
    }
    return sum;
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

TraceDistribution trace_distribution(const FiniteField& field, const RationalMap& f, const EnumerationOptions& options) {
    if (!field.is_binary() || f.p() != 2) throw InvalidInput("character sums are implemented for characteristic 2 only");
    if (field.m() > options.max_m) {
        throw TooLarge("m = " + std::to_string(field.m()) + " exceeds the enumeration bound " + std::to_string(options.max_m));
    }
    const unsigned threads = resolve_threads(options.threads);
    const std::uint64_t q1 = field.order() - 1;

    TraceDistribution dist;
    if (auto terms = f.laurent_terms()) {
        dist = run_chunks(LaurentKernel(field, *terms), q1, threads);
    } else {
        dist = run_chunks(GeneralKernel(field, f), q1, threads);
    }

    if (auto v = eval_rational_map(field, f, field.zero())) {
        if (field.trace(*v)) {
            ++dist.trace_one;
        } else {
            ++dist.trace_zero;
        }
    }
    return dist;
}

std::int64_t char_sum(const FiniteField& field, const RationalMap& f, const EnumerationOptions& options) {
    return trace_distribution(field, f, options).sum();
}

}  // namespace zetadiv
