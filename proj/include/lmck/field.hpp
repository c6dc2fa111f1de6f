#pragma once

#include <cstdint>
#include <string>

#include "lmck/errors.hpp"
#include "lmck/numbers.hpp"

namespace lmck {

// A verified prime modulus. Two regimes: q < 2^62 runs on machine words
// with 128-bit widening, larger q on arbitrary precision. Primality is
// checked at construction: deterministic Miller-Rabin below 2^64,
// probabilistic (64 rounds) above, in which case the prime is recorded as
// probable only.
class PrimeModulus {
public:
    explicit PrimeModulus(BigInt q);
    explicit PrimeModulus(std::uint64_t q) : PrimeModulus(BigInt(q)) {}

    const BigInt& value() const { return q_; }
    bool fits_machine_word() const { return machine_word_; }
    std::uint64_t as_u64() const;
    bool probable_only() const { return probable_only_; }
    std::string str() const { return q_.str(); }

    bool operator==(const PrimeModulus& o) const { return q_ == o.q_; }
    bool operator<(const PrimeModulus& o) const { return q_ < o.q_; }

private:
    BigInt q_;
    bool machine_word_;
    bool probable_only_;
};

// GF(q) on machine words, q < 2^62. Fixed-scalar products use Shoup's
// precomputed-quotient trick so the elimination inner loops avoid division.
class Fp64 {
public:
    using Elem = std::uint64_t;

    explicit Fp64(std::uint64_t q) : q_(q) {}
    std::uint64_t modulus() const { return q_; }

    Elem from_int(std::int64_t v) const {
        const std::int64_t r = v % static_cast<std::int64_t>(q_);
        return static_cast<Elem>(r < 0 ? r + static_cast<std::int64_t>(q_) : r);
    }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const {
        const Elem s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + q_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % q_);
    }
    Elem inv(Elem a) const {  // inverse by exponentiation, q prime
        return powmod_u64(a, q_ - 2, q_);
    }

    struct Scaled {
        std::uint64_t c;
        std::uint64_t c_shoup;
    };
    Scaled scale(Elem c) const {
        return Scaled{c, static_cast<std::uint64_t>((static_cast<unsigned __int128>(c) << 64) / q_)};
    }
    Elem mul_scaled(const Scaled& s, Elem x) const {
        const auto t = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(s.c_shoup) * x) >> 64);
        std::uint64_t r = s.c * x - t * q_;
        if (r >= q_) r -= q_;
        return r;
    }

private:
    std::uint64_t q_;
};

// GF(q) for arbitrary-precision q.
class FpBig {
public:
    using Elem = BigInt;

    explicit FpBig(BigInt q) : q_(std::move(q)) {}
    const BigInt& modulus() const { return q_; }

    Elem from_int(std::int64_t v) const {
        BigInt r = BigInt(v) % q_;
        if (r < 0) r += q_;
        return r;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem s = a + b;
        if (s >= q_) s -= q_;
        return s;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem s = a - b;
        if (s < 0) s += q_;
        return s;
    }
    Elem neg(const Elem& a) const { return a == 0 ? Elem(0) : Elem(q_ - a); }
    Elem mul(const Elem& a, const Elem& b) const { return a * b % q_; }
    Elem inv(const Elem& a) const;  // extended Euclid

    struct Scaled {
        Elem c;
    };
    Scaled scale(Elem c) const { return Scaled{std::move(c)}; }
    Elem mul_scaled(const Scaled& s, const Elem& x) const { return mul(s.c, x); }

private:
    BigInt q_;
};

}  // namespace lmck
