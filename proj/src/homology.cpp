#include "lmck/homology.hpp"

#include "lmck/rng.hpp"

namespace lmck {

bool is_zero_integer(const DComplex& y, std::int64_t snf_entry_budget) {
    const ElementaryDivisors divs = smith_normal_form(y, snf_entry_budget);
    return divs.rank() == cycle_dim(y.spec()) && divs.all_unit();
}

std::vector<PrimeModulus> consensus_primes(std::uint64_t seed, int count) {
    std::vector<PrimeModulus> out;
    Philox rng(Seed{seed, 0x636f6e73656e7375ull});  // fixed stream tag
    while (static_cast<int>(out.size()) < count) {
        std::uint64_t c = (rng.next_u64() >> 3) | (std::uint64_t(1) << 61) | 1ull;
        while (!is_prime_u64(c)) c += 2;
        if (c >= (std::uint64_t(1) << 62)) continue;
        bool dup = false;
        for (const auto& p : out) dup = dup || (p.value() == c);
        if (!dup) out.emplace_back(BigInt(c));
    }
    return out;
}

HomologySummary summary(const DComplex& y, const std::vector<PrimeModulus>& primes,
                        const SummaryPolicy& policy) {
    HomologySummary s;
    s.cycle_dim = cycle_dim(y.spec());

    const std::int64_t entries = y.spec().row_count() * y.face_count();
    const bool use_snf = !policy.force_consensus && entries <= policy.snf_entry_budget;
    if (use_snf) {
        s.divisors = smith_normal_form(y, policy.snf_entry_budget);
        s.betti_rational = s.cycle_dim - s.divisors.rank();
        s.betti_exact = true;
    } else {
        s.betti_exact = false;
        std::int64_t agreed = -1;
        for (const PrimeModulus& q : consensus_primes(policy.consensus_seed)) {
            s.consensus_primes.push_back(q.value());
            const std::int64_t b = s.cycle_dim - boundary_rank(y, q);
            // a prime dividing some divisor only inflates the Betti number
            if (agreed < 0 || b < agreed) agreed = b;
        }
        s.betti_rational = agreed;
    }

    for (const PrimeModulus& q : primes)
        s.betti_mod.emplace_back(q.value(), betti_mod_q(y, q));
    return s;
}

}  // namespace lmck
