#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace surf10 {

/// Arithmetic context for a prime field F_p. Elements are uint32_t values in
/// [0, p); every operation is a method of the context so that value types
/// (polynomials, matrices) can stay plain data.
///
/// p must be an odd prime with 1000 < p < 2^31. The tools default to 31991.
class PrimeField {
public:
    explicit PrimeField(uint32_t p) : p_(p) {
        if (p <= 1000)
            throw std::invalid_argument("field: characteristic must exceed 1000");
        if (p >= (1u << 31))
            throw std::invalid_argument("field: characteristic must be below 2^31");
        if (!is_prime(p))
            throw std::invalid_argument("field: " + std::to_string(p) + " is not prime");
    }

    uint32_t p() const { return p_; }

    /// True when p < 2^15; the dense solver then batches row updates without
    /// reducing each entry (see DenseMat).
    bool small() const { return p_ < (1u << 15); }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;  // no overflow: both < 2^31
        return s >= p_ ? s - p_ : s;
    }

    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + (p_ - b); }

    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    /// Throws std::domain_error on zero.
    uint32_t inv(uint32_t a) const {
        a %= p_;
        if (a == 0) throw std::domain_error("field: inverse of zero");
        int64_t t = 0, new_t = 1;
        int64_t r = p_, new_r = a;
        while (new_r != 0) {
            int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        // r == gcd(a, p) == 1 since p is prime and a is nonzero mod p.
        if (t < 0) t += p_;
        return static_cast<uint32_t>(t);
    }

    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    uint32_t pow(uint32_t a, uint64_t e) const {
        uint64_t base = a % p_, acc = 1;
        while (e != 0) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<uint32_t>(acc);
    }

    /// Reduce an arbitrary signed value into [0, p).
    uint32_t from_int(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

private:
    uint32_t p_;
};

} // namespace surf10
