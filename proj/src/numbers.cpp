#include "lmck/numbers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace lmck {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

namespace {

bool miller_rabin_u64(std::uint64_t n, std::uint64_t a) {
    if (a % n == 0) return true;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool miller_rabin_big(const BigInt& n, const BigInt& a) {
    if (a % n == 0) return true;
    BigInt d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    BigInt x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // This witness set is deterministic for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!miller_rabin_u64(n, a)) return false;
    return true;
}

bool is_probable_prime(const BigInt& n, int rounds) {
    if (n < 2) return false;
    if (n <= std::numeric_limits<std::uint64_t>::max())
        return is_prime_u64(static_cast<std::uint64_t>(n));
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % p == 0) return false;
    // Fixed pseudorandom bases derived from n keep the answer reproducible.
    std::uint64_t state = static_cast<std::uint64_t>(n % 0xFFFFFFFFFFFFFFC5ull);
    for (int i = 0; i < rounds; ++i) {
        const BigInt a = 2 + BigInt(splitmix64(state)) % (n - 3);
        if (!miller_rabin_big(n, a)) return false;
    }
    return true;
}

namespace {

std::uint64_t brent_rho_u64(std::uint64_t n, std::uint64_t c, std::uint64_t max_iters,
                            std::uint64_t& used) {
    auto f = [&](std::uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    std::uint64_t count = 0;
    // Brent's cycle detection with batched gcds
    std::uint64_t ys = y, q = 1;
    const std::uint64_t batch = 128;
    std::uint64_t r = 1;
    while (d == 1 && count < max_iters) {
        x = y;
        for (std::uint64_t i = 0; i < r && count < max_iters; ++i) {
            y = f(y);
            ++count;
        }
        std::uint64_t k = 0;
        while (k < r && d == 1 && count < max_iters) {
            ys = y;
            const std::uint64_t lim = std::min(batch, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = f(y);
                q = mulmod_u64(q, x > y ? x - y : y - x, n);
                ++count;
            }
            d = std::gcd(q, n);
            k += lim;
        }
        r <<= 1;
    }
    if (d == n) {
        // backtrack one step at a time
        do {
            ys = f(ys);
            d = std::gcd(x > ys ? x - ys : ys - x, n);
            ++count;
        } while (d == 1 && count < max_iters);
    }
    used += count;
    return (d != 1 && d != n) ? d : 0;
}

BigInt brent_rho_big(const BigInt& n, std::uint64_t c, std::uint64_t max_iters,
                     std::uint64_t& used) {
    auto f = [&](const BigInt& x) { return (x * x + c) % n; };
    BigInt x = 2, y = 2, d = 1, q = 1, ys = 2;
    std::uint64_t count = 0, r = 1;
    const std::uint64_t batch = 64;
    while (d == 1 && count < max_iters) {
        x = y;
        for (std::uint64_t i = 0; i < r && count < max_iters; ++i) {
            y = f(y);
            ++count;
        }
        std::uint64_t k = 0;
        while (k < r && d == 1 && count < max_iters) {
            ys = y;
            const std::uint64_t lim = std::min(batch, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = f(y);
                q = q * abs(x - y) % n;
                ++count;
            }
            d = gcd(q, n);
            k += lim;
        }
        r <<= 1;
    }
    if (d == n) {
        do {
            ys = f(ys);
            d = gcd(abs(x - ys), n);
            ++count;
        } while (d == 1 && count < max_iters);
    }
    used += count;
    return (d != 1 && d != n) ? d : 0;
}

// Splits n (not prime, > 1, no factors below the trial bound) once.
BigInt rho_split(const BigInt& n, std::uint64_t budget, std::uint64_t& used) {
    for (std::uint64_t c = 1; used < budget; ++c) {
        if (n <= std::numeric_limits<std::uint64_t>::max()) {
            const std::uint64_t f =
                brent_rho_u64(static_cast<std::uint64_t>(n), c, budget - used, used);
            if (f) return BigInt(f);
        } else {
            const BigInt f = brent_rho_big(n, c, budget - used, used);
            if (f != 0) return f;
        }
    }
    return 0;
}

}  // namespace

FactorResult factor_distinct_primes(const BigInt& n, const FactorPolicy& policy) {
    FactorResult out;
    BigInt m = abs(n);
    if (m <= 1) return out;

    for (std::uint64_t p = 2; p <= policy.trial_division_bound && BigInt(p) * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            out.primes.emplace_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m == 1) return out;

    // Recursive splitting of the surviving cofactor.
    std::vector<BigInt> stack{m};
    std::uint64_t used = 0;
    while (!stack.empty()) {
        BigInt v = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (is_probable_prime(v)) {
            out.primes.push_back(v);
            continue;
        }
        const BigInt f = rho_split(v, policy.rho_iteration_budget, used);
        if (f == 0) {
            out.complete = false;  // cofactor v stays unfactored
            continue;
        }
        stack.push_back(f);
        stack.push_back(v / f);
    }
    std::sort(out.primes.begin(), out.primes.end());
    out.primes.erase(std::unique(out.primes.begin(), out.primes.end()), out.primes.end());
    return out;
}

BigInt isqrt_floor(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

BigInt isqrt_ceil(const BigInt& n) {
    const BigInt f = isqrt_floor(n);
    return (f * f == n) ? f : f + 1;
}

}  // namespace lmck
