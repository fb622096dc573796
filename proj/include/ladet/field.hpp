// Prime field GF(p) arithmetic on machine words.
//
// The default modulus is 32003; any odd prime below 2^31 works. Elements
// carry their modulus so values from different fields cannot be mixed
// silently.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ladet {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

constexpr std::uint32_t kDefaultPrime = 32003;

class Fp {
public:
    Fp() : value_(0), p_(kDefaultPrime) {}

    Fp(std::int64_t value, std::uint32_t p) : p_(p) {
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        value_ = static_cast<std::uint32_t>(r);
    }

    static Fp zero(std::uint32_t p) { return Fp(0, p); }
    static Fp one(std::uint32_t p) { return Fp(1, p); }

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    Fp operator+(const Fp& o) const {
        check(o);
        std::uint64_t s = static_cast<std::uint64_t>(value_) + o.value_;
        if (s >= p_) s -= p_;
        return from_raw(static_cast<std::uint32_t>(s), p_);
    }

    Fp operator-(const Fp& o) const {
        check(o);
        std::uint64_t s = static_cast<std::uint64_t>(value_) + p_ - o.value_;
        if (s >= p_) s -= p_;
        return from_raw(static_cast<std::uint32_t>(s), p_);
    }

    Fp operator-() const {
        return from_raw(value_ == 0 ? 0 : p_ - value_, p_);
    }

    Fp operator*(const Fp& o) const {
        check(o);
        std::uint64_t s = static_cast<std::uint64_t>(value_) * o.value_ % p_;
        return from_raw(static_cast<std::uint32_t>(s), p_);
    }

    // Inverse of a nonzero element, via Fermat.
    Fp inverse() const {
        if (value_ == 0) throw std::domain_error("inverse of zero");
        std::uint64_t base = value_, acc = 1, e = p_ - 2;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return from_raw(static_cast<std::uint32_t>(acc), p_);
    }

    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    bool operator==(const Fp& o) const { return value_ == o.value_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    static Fp from_raw(std::uint32_t v, std::uint32_t p) {
        Fp r;
        r.value_ = v;
        r.p_ = p;
        return r;
    }

    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("mixed field moduli");
    }

    std::uint32_t value_;
    std::uint32_t p_;
};

// Validates a user-supplied characteristic. Odd primes only: the division
// algorithm and the homology ranks both assume a field, and p = 2 would
// mask sign errors in the determinant expansion tests.
inline std::uint32_t checked_prime(std::uint64_t p) {
    if (p < 3 || p > (1u << 30) || !is_prime(p))
        throw std::invalid_argument("field_prime must be an odd prime below 2^30, got " + std::to_string(p));
    return static_cast<std::uint32_t>(p);
}

} // namespace ladet
