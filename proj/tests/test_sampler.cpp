#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "lmck/sampler.hpp"
#include "test_util.hpp"

using namespace lmck;

TEST_CASE("bernoulli endpoints") {
    const ComplexSpec spec(6, 2);
    CHECK(sample_bernoulli(spec, 0.0, {1, 0}).face_count() == 0);
    CHECK(sample_bernoulli(spec, 1.0, {1, 0}).face_count() == spec.face_count());
    CHECK_THROWS_AS(sample_bernoulli(spec, 1.5, {1, 0}), ValidationError);
    CHECK_THROWS_AS(sample_bernoulli(spec, -0.1, {1, 0}), ValidationError);
}

TEST_CASE("bernoulli determinism") {
    const ComplexSpec spec(20, 2);
    const DComplex a = sample_bernoulli(spec, 0.2, {99, 3});
    const DComplex b = sample_bernoulli(spec, 0.2, {99, 3});
    const DComplex c = sample_bernoulli(spec, 0.2, {99, 4});
    CHECK(a == b);
    CHECK(!(a == c));
}

TEST_CASE("bernoulli face-count concentration (n=50, p=0.1)") {
    const ComplexSpec spec(50, 2);
    const double p = 0.1;
    const double expect = p * static_cast<double>(spec.face_count());  // 1960
    const double sigma = std::sqrt(expect * (1 - p));                  // per draw
    double sum = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t)
        sum += static_cast<double>(sample_bernoulli(spec, p, {2024, static_cast<std::uint64_t>(t)})
                                       .face_count());
    const double mean = sum / trials;
    CHECK(std::abs(mean - expect) <= 4 * sigma / std::sqrt(static_cast<double>(trials)));
}

TEST_CASE("uniform-m exact count and endpoints") {
    const ComplexSpec spec(6, 2);
    CHECK(sample_uniform_m(spec, 0, {5, 0}).face_count() == 0);
    CHECK(sample_uniform_m(spec, spec.face_count(), {5, 0}).face_count() == spec.face_count());
    for (std::int64_t m = 0; m <= spec.face_count(); ++m)
        CHECK(sample_uniform_m(spec, m, {5, static_cast<std::uint64_t>(m)}).face_count() == m);
    CHECK_THROWS_AS(sample_uniform_m(spec, -1, {5, 0}), ValidationError);
    CHECK_THROWS_AS(sample_uniform_m(spec, spec.face_count() + 1, {5, 0}), ValidationError);
}

TEST_CASE("uniform pairs are uniform (n=4, d=2, m=2)") {
    const ComplexSpec spec(4, 2);  // C(4,3) = 4 faces, C(4,2) = 6 pairs
    std::map<std::vector<FaceId>, int> counts;
    const int trials = 40000;
    for (int t = 0; t < trials; ++t)
        counts[sample_uniform_m(spec, 2, {11, static_cast<std::uint64_t>(t)}).faces()]++;
    REQUIRE(counts.size() == 6);
    const double p = 1.0 / 6.0;
    const double sigma = std::sqrt(p * (1 - p) / trials);
    for (const auto& [pair, c] : counts) {
        const double phat = static_cast<double>(c) / trials;
        CHECK(std::abs(phat - p) <= 3 * sigma);
    }
}

TEST_CASE("ordering is a permutation, deterministic, uniform prefixes") {
    const ComplexSpec spec(5, 2);
    const auto perm = sample_ordering(spec, {31, 0});
    REQUIRE(static_cast<std::int64_t>(perm.size()) == spec.face_count());
    std::vector<bool> seen(perm.size(), false);
    for (FaceId f : perm) {
        REQUIRE(f >= 0);
        REQUIRE(f < spec.face_count());
        CHECK(!seen[static_cast<std::size_t>(f)]);
        seen[static_cast<std::size_t>(f)] = true;
    }
    CHECK(perm == sample_ordering(spec, {31, 0}));

    // prefix of length 2 at n=4: marginally uniform over the 6 pairs
    const ComplexSpec small(4, 2);
    std::map<std::vector<FaceId>, int> counts;
    const int trials = 40000;
    for (int t = 0; t < trials; ++t) {
        auto p = sample_ordering(small, {77, static_cast<std::uint64_t>(t)});
        std::vector<FaceId> prefix(p.begin(), p.begin() + 2);
        std::sort(prefix.begin(), prefix.end());
        counts[prefix]++;
    }
    REQUIRE(counts.size() == 6);
    const double prob = 1.0 / 6.0;
    const double sigma = std::sqrt(prob * (1 - prob) / trials);
    for (const auto& [pair, c] : counts)
        CHECK(std::abs(static_cast<double>(c) / trials - prob) <= 3 * sigma);
}

TEST_CASE("coupled blocks: containment always, k=1 degenerates") {
    const ComplexSpec spec(6, 2);
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto got = couple_blocks(spec, {3, 5, 2}, {13, s});
        REQUIRE(got.blocks.size() == 3);
        CHECK(got.combined.face_count() == 10);
        for (const auto& b : got.blocks)
            for (FaceId f : b.faces()) CHECK(got.combined.contains(f));
    }
    const auto one = couple_blocks(spec, {7}, {14, 0});
    CHECK(one.blocks[0] == one.combined);
    CHECK_THROWS_AS(couple_blocks(spec, {15, 6}, {14, 0}), ValidationError);
}

TEST_CASE("coupled block marginals are uniform (n=4, d=2, k=2, m=(1,1))") {
    const ComplexSpec spec(4, 2);
    std::array<std::array<int, 4>, 2> counts{};
    const int trials = 40000;
    for (int t = 0; t < trials; ++t) {
        const auto got = couple_blocks(spec, {1, 1}, {21, static_cast<std::uint64_t>(t)});
        for (int b = 0; b < 2; ++b)
            counts[static_cast<std::size_t>(b)]
                  [static_cast<std::size_t>(got.blocks[static_cast<std::size_t>(b)].faces()[0])]++;
    }
    const double p = 0.25, sigma = std::sqrt(p * (1 - p) / trials);
    for (const auto& per_block : counts)
        for (int c : per_block)
            CHECK(std::abs(static_cast<double>(c) / trials - p) <= 3.5 * sigma);
}
