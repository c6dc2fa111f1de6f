#pragma once

#include <vector>

#include "lmck/complex.hpp"
#include "lmck/numbers.hpp"

namespace lmck {

// Dense-SNF guard: rows * cols of the boundary matrix.
inline constexpr std::int64_t kDefaultSnfEntryBudget = 100'000'000;

// Elementary divisors d_1 | d_2 | ... | d_r of an integer matrix; r is its
// rational rank, the divisors > 1 generate the torsion of C/B.
struct ElementaryDivisors {
    std::vector<BigInt> divisors;

    std::int64_t rank() const { return static_cast<std::int64_t>(divisors.size()); }
    BigInt torsion_order() const {
        BigInt t = 1;
        for (const BigInt& d : divisors)
            if (d > 1) t *= d;
        return t;
    }
    bool all_unit() const {
        for (const BigInt& d : divisors)
            if (d != 1) return false;
        return true;
    }
};

// SNF of the boundary map restricted to F_d(Y). Throws ResourceError when
// rows * cols exceeds the entry budget (GF(q)-only mode still works there).
ElementaryDivisors smith_normal_form(const DComplex& y,
                                     std::int64_t entry_budget = kDefaultSnfEntryBudget);

// ceil(sqrt(d+1)^C(n,d)): the worst-case torsion order over all complexes
// with this spec.
BigInt torsion_order_bound(const ComplexSpec& spec);

// ceil of the product of euclidean column lengths of the boundary matrix:
// every column has d+1 unit entries, so this is ceil(sqrt(d+1)^m).
BigInt hadamard_column_bound(const DComplex& y);

struct TorsionPrimes {
    std::vector<BigInt> primes;  // sorted
    bool complete = true;        // false if a cofactor resisted factoring
};

// Primes dividing some elementary divisor, i.e. Q(X) when the rational
// homology vanishes. Incompleteness is reported, never thrown.
TorsionPrimes torsion_primes(const ElementaryDivisors& divs, const FactorPolicy& policy = {});

}  // namespace lmck
