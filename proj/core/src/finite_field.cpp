#include "zetadiv/finite_field.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "zetadiv/errors.hpp"

namespace zetadiv {

namespace {

constexpr std::uint64_t kTableLimit = 1ULL << 22;

std::uint64_t checked_order(std::uint32_t p, unsigned m) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (q > kMaxFieldOrder / p) {
            throw TooLarge("GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds 2^48 elements");
        }
        q *= p;
    }
    return q;
}

}  // namespace

struct FiniteField::Impl {
    std::uint32_t p = 2;
    unsigned m = 1;
    std::uint64_t order = 2;
    gfp::Poly modulus;
    FieldElement generator{1};

    // p = 2
    gf2::Reducer reducer;
    std::uint64_t trace_mask = 0;

    // odd p
    std::vector<std::uint32_t> trace_of_basis;
    std::vector<std::uint32_t> exp_table;  // g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_table;  // log_g(a), a != 0

    bool has_tables() const { return !exp_table.empty(); }

    std::uint64_t add_odd(std::uint64_t a, std::uint64_t b, bool subtract) const {
        std::uint64_t result = 0, place = 1;
        for (unsigned i = 0; i < m; ++i) {
            const std::uint64_t da = a % p, db = b % p;
            a /= p;
            b /= p;
            const std::uint64_t d = subtract ? (da + p - db) % p : (da + db) % p;
            result += d * place;
            place *= p;
        }
        return result;
    }

    std::uint64_t mul_poly(std::uint64_t a, std::uint64_t b) const {
        if (p == 2) return reducer.mul(a, b);
        gfp::Poly prod = gfp::rem(gfp::mul(gfp::decode(a, p), gfp::decode(b, p), p), modulus, p);
        return gfp::encode(prod, p);
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (p == 2) return reducer.mul(a, b);
        if (a == 0 || b == 0) return 0;
        if (has_tables()) {
            const std::uint64_t e = (std::uint64_t(log_table[a]) + log_table[b]) % (order - 1);
            return exp_table[e];
        }
        return mul_poly(a, b);
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t result = 1;
        while (e) {
            if (e & 1) result = mul(result, a);
            e >>= 1;
            if (e) a = mul(a, a);
        }
        return result;
    }

    std::uint32_t trace_by_definition(std::uint64_t a) const {
        std::uint64_t acc = 0, power = a;
        for (unsigned i = 0; i < m; ++i) {
            acc = p == 2 ? (acc ^ power) : add_odd(acc, power, false);
            power = pow(power, p);
        }
        // The trace lands in the prime field: only the constant digit survives.
        return static_cast<std::uint32_t>(acc);
    }
};

std::uint32_t FiniteField::p() const { return impl_->p; }
unsigned FiniteField::m() const { return impl_->m; }
std::uint64_t FiniteField::order() const { return impl_->order; }
const gfp::Poly& FiniteField::modulus() const { return impl_->modulus; }
FieldElement FiniteField::generator() const { return impl_->generator; }

FieldElement FiniteField::x() const { return from_coeffs(gfp::Poly{0, 1}); }

FieldElement FiniteField::from_prime(std::uint32_t c) const { return {c % impl_->p}; }

FieldElement FiniteField::from_coeffs(const gfp::Poly& coeffs) const {
    gfp::Poly c = coeffs;
    for (auto& v : c) v %= impl_->p;
    gfp::normalize(c);
    return {gfp::encode(gfp::rem(c, impl_->modulus, impl_->p), impl_->p)};
}

gfp::Poly FiniteField::coeffs(FieldElement a) const { return gfp::decode(a.packed, impl_->p); }

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
    if (impl_->p == 2) return {a.packed ^ b.packed};
    return {impl_->add_odd(a.packed, b.packed, false)};
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const {
    if (impl_->p == 2) return {a.packed ^ b.packed};
    return {impl_->add_odd(a.packed, b.packed, true)};
}

FieldElement FiniteField::neg(FieldElement a) const { return sub(zero(), a); }

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const { return {impl_->mul(a.packed, b.packed)}; }

FieldElement FiniteField::inv(FieldElement a) const {
    if (a.packed == 0) throw ZeroDivisor("inverse of zero in GF(" + std::to_string(p()) + "^" + std::to_string(m()) + ")");
    if (impl_->has_tables()) {
        const std::uint64_t q1 = impl_->order - 1;
        return {impl_->exp_table[(q1 - impl_->log_table[a.packed]) % q1]};
    }
    return {impl_->pow(a.packed, impl_->order - 2)};
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t e) const { return {impl_->pow(a.packed, e)}; }

FieldElement FiniteField::pow_signed(FieldElement a, std::int64_t e) const {
    if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
    const std::uint64_t q1 = impl_->order - 1;
    const std::uint64_t mag = static_cast<std::uint64_t>(-(e + 1)) + 1;
    return pow(inv(a), mag % q1);
}

std::uint32_t FiniteField::trace(FieldElement a) const {
    if (impl_->p == 2) return gf2::parity(a.packed & impl_->trace_mask);
    std::uint64_t acc = 0, v = a.packed;
    for (unsigned i = 0; i < impl_->m && v; ++i) {
        acc += (v % impl_->p) * impl_->trace_of_basis[i];
        v /= impl_->p;
    }
    return static_cast<std::uint32_t>(acc % impl_->p);
}

std::uint32_t FiniteField::trace_by_definition(FieldElement a) const { return impl_->trace_by_definition(a.packed); }

int FiniteField::quadratic_character(FieldElement a) const {
    if (impl_->p == 2) throw InvalidInput("quadratic character requested in characteristic 2");
    if (a.packed == 0) return 0;
    if (impl_->has_tables()) return impl_->log_table[a.packed] % 2 == 0 ? 1 : -1;
    return impl_->pow(a.packed, (impl_->order - 1) / 2) == 1 ? 1 : -1;
}

std::uint64_t FiniteField::trace_mask() const { return impl_->trace_mask; }
const gf2::Reducer& FiniteField::reducer() const { return impl_->reducer; }

gfp::Poly default_modulus(std::uint32_t p, unsigned m) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, unsigned>, gfp::Poly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({p, m}); it != cache.end()) return it->second;
    }
    if (!gfp::is_prime(p)) throw NoPrime(std::to_string(p) + " is not prime");
    if (m == 0) throw InvalidInput("extension degree must be at least 1");
    const std::uint64_t leading = checked_order(p, m);
    gfp::Poly found;
    for (std::uint64_t tail = 0; tail < leading; ++tail) {
        gfp::Poly cand = gfp::decode(tail, p);
        cand.resize(m + 1, 0);
        cand[m] = 1;
        if (gfp::is_irreducible(cand, p)) {
            found = std::move(cand);
            break;
        }
    }
    std::lock_guard lock(mu);
    cache[{p, m}] = found;
    return found;
}

FiniteField make_field(std::uint32_t p, unsigned m, std::optional<gfp::Poly> modulus) {
    if (!gfp::is_prime(p)) throw NoPrime(std::to_string(p) + " is not prime");
    if (m == 0) throw InvalidInput("extension degree must be at least 1");
    if (p == 2 && m > 63) throw TooLarge("binary fields are limited to m <= 63");

    auto impl = std::make_shared<FiniteField::Impl>();
    impl->p = p;
    impl->m = m;
    impl->order = checked_order(p, m);

    if (modulus) {
        gfp::Poly f = *modulus;
        for (auto c : f) {
            if (c >= p) throw InvalidInput("modulus coefficient out of range [0, p)");
        }
        gfp::normalize(f);
        if (gfp::degree(f) != static_cast<int>(m) || f.back() != 1) {
            throw InvalidInput("modulus must be monic of degree " + std::to_string(m));
        }
        if (!gfp::is_irreducible(f, p)) throw ModulusReducible("supplied modulus factors over GF(" + std::to_string(p) + ")");
        impl->modulus = std::move(f);
    } else {
        impl->modulus = default_modulus(p, m);
    }

    if (p == 2) {
        std::uint64_t tail = 0;
        for (unsigned i = 0; i < m; ++i) {
            if (impl->modulus[i]) tail |= 1ULL << i;
        }
        impl->reducer = gf2::Reducer(m, tail);
    }

    // Generator: smallest element whose order is exactly q - 1.
    const std::uint64_t q1 = impl->order - 1;
    const auto factors = gfp::prime_factors(q1);
    for (std::uint64_t cand = 1; cand < impl->order; ++cand) {
        bool ok = true;
        for (std::uint64_t r : factors) {
            if (impl->pow(cand, q1 / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            impl->generator = {cand};
            break;
        }
    }

    if (p != 2 && impl->order <= kTableLimit) {
        impl->exp_table.resize(q1);
        impl->log_table.assign(impl->order, 0);
        std::uint64_t cur = 1;
        for (std::uint64_t i = 0; i < q1; ++i) {
            impl->exp_table[i] = static_cast<std::uint32_t>(cur);
            impl->log_table[cur] = static_cast<std::uint32_t>(i);
            cur = impl->mul_poly(cur, impl->generator.packed);
        }
    }

    if (p == 2) {
        for (unsigned i = 0; i < m; ++i) {
            if (impl->trace_by_definition(1ULL << i) & 1) impl->trace_mask |= 1ULL << i;
        }
    } else {
        impl->trace_of_basis.resize(m);
        std::uint64_t basis = 1;
        for (unsigned i = 0; i < m; ++i) {
            impl->trace_of_basis[i] = impl->trace_by_definition(basis);
            basis *= p;
        }
    }

    return FiniteField(std::move(impl));
}

FiniteField cached_field(std::uint32_t p, unsigned m) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, unsigned>, FiniteField> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({p, m}); it != cache.end()) return it->second;
    }
    FiniteField f = make_field(p, m);
    std::lock_guard lock(mu);
    return cache.emplace(std::pair{p, m}, f).first->second;
}

}  // namespace zetadiv
