#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lmck {

using BigInt = boost::multiprecision::cpp_int;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin for any 64-bit integer.
bool is_prime_u64(std::uint64_t n);

// Deterministic below 2^64; `rounds` Miller-Rabin rounds with fixed
// pseudorandom bases above (callers treat a positive answer as
// "probable prime" in that regime).
bool is_probable_prime(const BigInt& n, int rounds = 64);

struct FactorPolicy {
    std::uint64_t trial_division_bound = 1'000'000;
    // Total Pollard-rho iterations allowed per surviving cofactor.
    std::uint64_t rho_iteration_budget = 10'000'000;
};

struct FactorResult {
    std::vector<BigInt> primes;  // sorted, duplicate-free
    bool complete = true;        // false if some cofactor resisted factoring
};

// Distinct prime divisors of |n| (n != 0). Trial division, then
// Miller-Rabin plus Brent's rho with a deterministic retry schedule.
FactorResult factor_distinct_primes(const BigInt& n, const FactorPolicy& policy = {});

// Floor and ceiling of sqrt(n) for nonnegative n.
BigInt isqrt_floor(const BigInt& n);
BigInt isqrt_ceil(const BigInt& n);

}  // namespace lmck
