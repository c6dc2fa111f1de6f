#include "lmck/certify.hpp"

namespace lmck {

std::string to_string(CertifyVerdict v) {
    switch (v) {
        case CertifyVerdict::kCertifiedZero: return "certified-zero";
        case CertifyVerdict::kNotCertified: return "not-certified";
        case CertifyVerdict::kFallbackSnfZero: return "fallback-SNF-zero";
        case CertifyVerdict::kFallbackSnfNonzero: return "fallback-SNF-nonzero";
    }
    throw InvariantError("unknown verdict");
}

Certificate certify_decide(const DComplex& y1, const DComplex& y2,
                           std::int64_t betti_rational_y1, const TorsionPrimes& torsion_y1,
                           const CertifyPolicy& policy) {
    if (y1.spec() != y2.spec())
        throw ValidationError("certificate samples must share one (n, d)");
    Certificate cert;
    cert.faces_y1 = y1.face_count();
    cert.faces_y2 = y2.face_count();
    cert.betti_rational_y1 = betti_rational_y1;
    cert.torsion_primes_y1 = torsion_y1.primes;
    cert.torsion_complete = torsion_y1.complete;

    if (betti_rational_y1 != 0) {
        // Q(Y1) is every prime; the two-sample route cannot conclude.
        cert.verdict = CertifyVerdict::kNotCertified;
        return cert;
    }
    if (!torsion_y1.complete) {
        // Unknown primes may hide in the unfactored cofactor; decide on the
        // union directly.
        const DComplex y = union_complexes(y1, y2);
        cert.faces_union = y.face_count();
        cert.verdict = is_zero_integer(y, policy.snf_entry_budget)
                           ? CertifyVerdict::kFallbackSnfZero
                           : CertifyVerdict::kFallbackSnfNonzero;
        return cert;
    }

    bool all_vanish = true;
    for (const BigInt& q : torsion_y1.primes) {
        const bool ok = is_zero_mod_q(y2, PrimeModulus(q));
        cert.y2_vanishes.push_back(ok);
        all_vanish = all_vanish && ok;
    }
    cert.verdict =
        all_vanish ? CertifyVerdict::kCertifiedZero : CertifyVerdict::kNotCertified;
    return cert;
}

Certificate certify_from(const DComplex& y1, const DComplex& y2, const CertifyPolicy& policy) {
    const ElementaryDivisors divs = smith_normal_form(y1, policy.snf_entry_budget);
    return certify_decide(y1, y2, cycle_dim(y1.spec()) - divs.rank(),
                          torsion_primes(divs, policy.factor), policy);
}

Certificate certify_zero(const ComplexSpec& spec, double p, Seed seed,
                         const CertifyPolicy& policy) {
    if (!(p >= 0.0 && p <= 0.5))
        throw ValidationError("certify requires half-sample density p in [0, 1/2], got " +
                              std::to_string(p));
    const Seed s1 = seed.with_stream(2 * seed.stream);
    const Seed s2 = seed.with_stream(2 * seed.stream + 1);
    const DComplex y1 = sample_bernoulli(spec, p, s1);
    const DComplex y2 = sample_bernoulli(spec, p, s2);

    Certificate cert = certify_from(y1, y2, policy);
    cert.master_seed = seed.master;
    cert.stream_y1 = s1.stream;
    cert.stream_y2 = s2.stream;
    cert.p = p;
    if (cert.faces_union == 0 && cert.verdict != CertifyVerdict::kFallbackSnfZero &&
        cert.verdict != CertifyVerdict::kFallbackSnfNonzero)
        cert.faces_union = union_complexes(y1, y2).face_count();
    return cert;
}

}  // namespace lmck
