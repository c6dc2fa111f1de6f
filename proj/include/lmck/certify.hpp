#pragma once

#include <string>
#include <vector>

#include "lmck/homology.hpp"
#include "lmck/sampler.hpp"

namespace lmck {

enum class CertifyVerdict {
    kCertifiedZero,
    kNotCertified,
    kFallbackSnfZero,
    kFallbackSnfNonzero,
};

std::string to_string(CertifyVerdict v);

struct CertifyPolicy {
    std::int64_t snf_entry_budget = kDefaultSnfEntryBudget;
    FactorPolicy factor;
};

// Two-sample certificate for H_{d-1}(Y; Z) = 0 where Y = Y1 union Y2:
// rational homology of Y1 must vanish, its torsion primes Q(Y1) must be
// fully factored, and the mod-q homology of Y2 must vanish at each of them.
// certified-zero is sound; not-certified is not evidence of nonzero
// homology. An incomplete factorization falls back to SNF on the union.
struct Certificate {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_y1 = 0;
    std::uint64_t stream_y2 = 0;
    double p = 0.0;                 // per half-sample; union density is 1-(1-p)^2
    std::int64_t faces_y1 = 0;
    std::int64_t faces_y2 = 0;
    std::int64_t faces_union = 0;
    std::int64_t betti_rational_y1 = 0;
    std::vector<BigInt> torsion_primes_y1;
    bool torsion_complete = true;
    // per-prime verdicts on Y2, aligned with torsion_primes_y1
    std::vector<bool> y2_vanishes;
    CertifyVerdict verdict = CertifyVerdict::kNotCertified;
};

// Samples Y1, Y2 ~ Y_d(n,p) on independent streams (2*stream, 2*stream+1)
// and certifies their union.
Certificate certify_zero(const ComplexSpec& spec, double p, Seed seed,
                         const CertifyPolicy& policy = {});

// Certification core on already-materialized samples; used by tests.
Certificate certify_from(const DComplex& y1, const DComplex& y2, const CertifyPolicy& policy = {});

// Decision step given Y1's precomputed invariants (rational Betti number
// and factored torsion primes); exposed so the fallback branch is testable.
Certificate certify_decide(const DComplex& y1, const DComplex& y2,
                           std::int64_t betti_rational_y1, const TorsionPrimes& torsion_y1,
                           const CertifyPolicy& policy = {});

}  // namespace lmck
