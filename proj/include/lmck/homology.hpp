#pragma once

#include <optional>
#include <vector>

#include "lmck/elimination.hpp"
#include "lmck/snf.hpp"

namespace lmck {

// dim Z_{d-1} = C(n-1, d); the mod-q Betti number of the empty complex.
inline std::int64_t cycle_dim(const ComplexSpec& spec) { return spec.cycle_dim(); }

// dim H_{d-1}(Y; Z/qZ) = cycle_dim - rank of the boundary image.
inline std::int64_t betti_mod_q(const DComplex& y, const PrimeModulus& q) {
    return cycle_dim(y.spec()) - boundary_rank(y, q);
}

inline bool is_zero_mod_q(const DComplex& y, const PrimeModulus& q) {
    return boundary_rank(y, q) == cycle_dim(y.spec());
}

// H_{d-1}(Y; Z) = 0 iff the rational Betti number vanishes and every
// elementary divisor is 1.
bool is_zero_integer(const DComplex& y, std::int64_t snf_entry_budget = kDefaultSnfEntryBudget);

struct SummaryPolicy {
    std::int64_t snf_entry_budget = kDefaultSnfEntryBudget;
    // Seed for the consensus primes used above the SNF budget; fixed so
    // outputs stay reproducible without extra flags.
    std::uint64_t consensus_seed = 0;
    bool force_consensus = false;
};

struct HomologySummary {
    std::int64_t cycle_dim = 0;
    std::int64_t betti_rational = 0;
    // true: betti_rational comes from SNF (exact). false: agreement of
    // boundary ranks at three random 62-bit primes ("modular consensus");
    // wrong only if all three divide some elementary divisor.
    bool betti_exact = true;
    ElementaryDivisors divisors;                                // empty under consensus
    std::vector<std::pair<BigInt, std::int64_t>> betti_mod;     // per requested prime
    std::vector<BigInt> consensus_primes;                       // filled under consensus
};

HomologySummary summary(const DComplex& y, const std::vector<PrimeModulus>& primes,
                        const SummaryPolicy& policy = {});

// The three fixed 62-bit consensus primes for a given seed.
std::vector<PrimeModulus> consensus_primes(std::uint64_t seed, int count = 3);

}  // namespace lmck
