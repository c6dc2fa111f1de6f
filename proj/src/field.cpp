#include "lmck/field.hpp"

#include <limits>

namespace lmck {

namespace {
const BigInt kMachineWordLimit = BigInt(1) << 62;
const BigInt kDeterministicLimit = BigInt(std::numeric_limits<std::uint64_t>::max());
}  // namespace

PrimeModulus::PrimeModulus(BigInt q) : q_(std::move(q)) {
    if (q_ < 2) throw ValidationError("modulus must be a prime >= 2, got " + q_.str());
    if (!is_probable_prime(q_))
        throw ValidationError("modulus " + q_.str() + " is not prime");
    machine_word_ = q_ < kMachineWordLimit;
    probable_only_ = q_ > kDeterministicLimit;
}

std::uint64_t PrimeModulus::as_u64() const {
    if (!machine_word_) throw InvariantError("modulus does not fit the machine-word regime");
    return static_cast<std::uint64_t>(q_);
}

FpBig::Elem FpBig::inv(const Elem& a) const {
    BigInt r0 = q_, r1 = a % q_, s0 = 0, s1 = 1;
    if (r1 < 0) r1 += q_;
    if (r1 == 0) throw InvariantError("inverse of zero");
    while (r1 != 0) {
        const BigInt quot = r0 / r1;
        BigInt tmp = r0 - quot * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - quot * s1;
        s0 = s1;
        s1 = tmp;
    }
    if (r0 != 1) throw InvariantError("element not invertible mod " + q_.str());
    if (s0 < 0) s0 += q_;
    return s0;
}

}  // namespace lmck
