#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lmck/elimination.hpp"
#include "lmck/snf.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace lmck;
using lmck::testutil::full_complex;
using lmck::testutil::random_complex;
using lmck::testutil::rp2_complex;

namespace {

std::vector<BigInt> bigs(std::initializer_list<long long> xs) {
    std::vector<BigInt> out;
    for (long long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("smith_normal_form examples") {
    const ComplexSpec spec4(4, 2);
    CHECK(smith_normal_form(full_complex(spec4)).divisors == bigs({1, 1, 1}));
    CHECK(smith_normal_form(DComplex(spec4)).divisors.empty());
    CHECK(smith_normal_form(rp2_complex()).divisors == bigs({1, 1, 1, 1, 1, 1, 1, 1, 1, 2}));
}

TEST_CASE("divisor chain invariant on random complexes") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const ComplexSpec spec(5 + static_cast<int>(s % 4), 2);
        const auto divs = smith_normal_form(random_complex(spec, {101, s}));
        for (std::size_t i = 1; i < divs.divisors.size(); ++i) {
            CHECK(divs.divisors[i] % divs.divisors[i - 1] == 0);
            CHECK(divs.divisors[i - 1] >= 1);
        }
    }
}

TEST_CASE("naive_snf textbook examples") {
    oracle::DenseMatrix d26(2, 2);
    d26.at(0, 0) = 2;
    d26.at(1, 1) = 6;
    CHECK(oracle::naive_snf(d26) == bigs({2, 6}));

    oracle::DenseMatrix d23(2, 2);
    d23.at(0, 0) = 2;
    d23.at(1, 1) = 3;
    CHECK(oracle::naive_snf(d23) == bigs({1, 6}));
}

TEST_CASE("snf agrees with the naive oracle on random boundary matrices") {
    for (std::uint64_t s = 0; s < 120; ++s) {
        const ComplexSpec spec(5 + static_cast<int>(s % 4), 2);
        const DComplex y = random_complex(spec, {202, s});
        const auto fast = smith_normal_form(y).divisors;
        auto slow = oracle::naive_snf(oracle::boundary_matrix(y));
        // drop trailing zero diagonal entries: rank positions only
        while (!slow.empty() && slow.back() == 0) slow.pop_back();
        CHECK(fast == slow);
    }
}

TEST_CASE("torsion_order_bound") {
    CHECK(torsion_order_bound(ComplexSpec(6, 2)) == 3788);    // ceil(3^{15/2})
    CHECK(torsion_order_bound(ComplexSpec(4, 2)) == 27);      // C(4,2)=6 -> 3^3
    CHECK(torsion_order_bound(ComplexSpec(5, 3)) == 1024);    // C(5,3)=10 -> 4^5
    CHECK(torsion_order_bound(ComplexSpec(7, 2)) == 102276);  // ceil(3^{21/2})
}

TEST_CASE("hadamard_column_bound") {
    const ComplexSpec spec(6, 2);
    CHECK(hadamard_column_bound(DComplex(spec)) == 1);  // empty product
    const DComplex rp2 = rp2_complex();
    CHECK(hadamard_column_bound(rp2) == 243);  // 3^{10/2}
    CHECK(smith_normal_form(rp2).torsion_order() == 2);
    CHECK(smith_normal_form(rp2).torsion_order() <= hadamard_column_bound(rp2));
    // odd face count: ceil(3^{7/2}) = ceil(46.77) = 47
    const DComplex seven = lmck::sample_uniform_m(spec, 7, {1, 0});
    CHECK(hadamard_column_bound(seven) == 47);
}

TEST_CASE("torsion is bounded by the column product and by the n-only bound") {
    // hadamard_column_bound(Y) <= torsion_order_bound(spec) additionally
    // holds when |faces| <= C(n,d); with more faces the column product
    // overshoots the n-only bound while both still bound the torsion.
    for (std::uint64_t s = 0; s < 40; ++s) {
        const ComplexSpec spec(6, 2);
        const DComplex y = random_complex(spec, {303, s});
        const BigInt torsion = smith_normal_form(y).torsion_order();
        CHECK(torsion <= hadamard_column_bound(y));
        CHECK(torsion <= torsion_order_bound(spec));
        if (y.face_count() <= spec.row_count())
            CHECK(hadamard_column_bound(y) <= torsion_order_bound(spec));
    }
}

TEST_CASE("torsion_primes") {
    CHECK(torsion_primes({bigs({1, 1, 2})}).primes == bigs({2}));
    CHECK(torsion_primes({bigs({1, 1, 2})}).complete);
    CHECK(torsion_primes({bigs({1, 6})}).primes == bigs({2, 3}));
    CHECK(torsion_primes({bigs({1, 1, 1})}).primes.empty());
    CHECK(torsion_primes({bigs({1, 1, 1})}).complete);
    // a semiprime of two 7-digit primes is beyond trial division; rho splits it
    const BigInt semi = BigInt(1000003) * 1000033;
    const auto got = torsion_primes({{std::vector<BigInt>{semi}}});
    CHECK(got.complete);
    CHECK(got.primes == bigs({1000003, 1000033}));
    // with a crippled policy the factorization reports incompleteness
    FactorPolicy weak;
    weak.trial_division_bound = 10;
    weak.rho_iteration_budget = 0;
    const auto partial = torsion_primes({{std::vector<BigInt>{semi}}}, weak);
    CHECK(!partial.complete);
}

TEST_CASE("rank count matches a 62-bit prime rank unless it hits torsion") {
    const PrimeModulus big{std::uint64_t(4611686018427387847ull)};
    for (std::uint64_t s = 0; s < 40; ++s) {
        const ComplexSpec spec(7, 2);
        const DComplex y = random_complex(spec, {404, s});
        const auto divs = smith_normal_form(y);
        bool divides = false;
        for (const BigInt& d : divs.divisors)
            if (d % big.value() == 0) divides = true;
        if (!divides) CHECK(divs.rank() == boundary_rank(y, big));
    }
}

TEST_CASE("torsion prime count is bounded by log2 of the bound") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const ComplexSpec spec(6, 2);
        const DComplex y = random_complex(spec, {505, s});
        const auto tp = torsion_primes(smith_normal_form(y));
        const BigInt bound = torsion_order_bound(spec);
        std::size_t log2_bound = 0;
        for (BigInt b = bound; b > 1; b >>= 1) ++log2_bound;
        CHECK(tp.primes.size() <= log2_bound);
    }
}

TEST_CASE("snf budget guard") {
    const ComplexSpec spec(6, 2);
    const DComplex y = full_complex(spec);
    CHECK_THROWS_AS(smith_normal_form(y, /*entry_budget=*/10), ResourceError);
}

TEST_CASE("bareiss rank basics") {
    oracle::DenseMatrix id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.at(i, i) = 1;
    CHECK(oracle::bareiss_rank(id3) == 3);
    CHECK(oracle::bareiss_rank(oracle::DenseMatrix(3, 4)) == 0);
    const ComplexSpec spec4(4, 2);
    CHECK(oracle::bareiss_rank(oracle::boundary_matrix(full_complex(spec4))) == 3);
}
