#include "lmck/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace lmck {

namespace {

// Above this many face ids, index arrays for Fisher-Yates are not
// materialized and Floyd's algorithm is used instead.
constexpr std::int64_t kMaxDenseIndexArray = std::int64_t(1) << 25;

// Uniform m-subset as an unsorted vector, via Floyd's algorithm.
std::vector<FaceId> floyd_sample(std::int64_t population, std::int64_t m, Philox& rng) {
    std::unordered_set<std::int64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    std::vector<FaceId> out;
    out.reserve(static_cast<std::size_t>(m));
    for (std::int64_t j = population - m; j < population; ++j) {
        const auto t = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(j) + 1));
        if (chosen.insert(t).second)
            out.push_back(t);
        else {
            chosen.insert(j);
            out.push_back(j);
        }
    }
    return out;
}

// First m entries of a uniform permutation of [0, population).
std::vector<FaceId> random_prefix(std::int64_t population, std::int64_t m, Philox& rng) {
    if (population <= kMaxDenseIndexArray) {
        std::vector<FaceId> ids(static_cast<std::size_t>(population));
        std::iota(ids.begin(), ids.end(), FaceId{0});
        for (std::int64_t i = 0; i < m; ++i) {
            const std::int64_t j =
                i + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(population - i)));
            std::swap(ids[i], ids[j]);
        }
        ids.resize(static_cast<std::size_t>(m));
        return ids;
    }
    // A uniformly chosen m-set in uniformly random order has the same law.
    std::vector<FaceId> ids = floyd_sample(population, m, rng);
    for (std::int64_t i = m - 1; i > 0; --i) {
        const auto j = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(ids[i], ids[j]);
    }
    return ids;
}

}  // namespace

DComplex sample_bernoulli(const ComplexSpec& spec, double p, Seed seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ValidationError("p must lie in [0,1], got " + std::to_string(p));
    const std::int64_t total = spec.face_count();
    std::vector<FaceId> faces;
    if (p >= 1.0) {
        faces.resize(static_cast<std::size_t>(total));
        std::iota(faces.begin(), faces.end(), FaceId{0});
        return DComplex(spec, std::move(faces));
    }
    if (p > 0.0) {
        Philox rng(seed);
        const double log1mp = std::log1p(-p);
        std::int64_t pos = 0;
        while (true) {
            // skip ~ Geometric(p): failures before the next included face
            const double u = rng.next_double();
            const double skip = std::floor(std::log1p(-u) / log1mp);
            if (skip >= static_cast<double>(total - pos)) break;
            pos += static_cast<std::int64_t>(skip);
            faces.push_back(pos);
            ++pos;
            if (pos >= total) break;
        }
    }
    return DComplex(spec, std::move(faces));
}

DComplex sample_uniform_m(const ComplexSpec& spec, std::int64_t m, Seed seed) {
    const std::int64_t total = spec.face_count();
    if (m < 0 || m > total)
        throw ValidationError("m must lie in [0, " + std::to_string(total) + "], got " +
                              std::to_string(m));
    Philox rng(seed);
    std::vector<FaceId> ids =
        (total <= kMaxDenseIndexArray) ? random_prefix(total, m, rng) : floyd_sample(total, m, rng);
    return DComplex(spec, std::move(ids));
}

std::vector<FaceId> sample_ordering(const ComplexSpec& spec, Seed seed) {
    const std::int64_t total = spec.face_count();
    if (total > kMaxDenseIndexArray)
        throw ResourceError("full ordering of " + std::to_string(total) +
                            " faces exceeds the in-memory budget");
    Philox rng(seed);
    return random_prefix(total, total, rng);
}

CoupledBlocks couple_blocks(const ComplexSpec& spec, const std::vector<std::int64_t>& sizes,
                            Seed seed) {
    std::int64_t sum = 0;
    for (std::int64_t s : sizes) {
        if (s < 0) throw ValidationError("block sizes must be nonnegative");
        sum += s;
    }
    if (sum > spec.face_count())
        throw ValidationError("sum of block sizes " + std::to_string(sum) + " exceeds C(n,d+1) = " +
                              std::to_string(spec.face_count()));
    Philox rng(seed);
    const std::vector<FaceId> prefix = random_prefix(spec.face_count(), sum, rng);

    CoupledBlocks out{{}, DComplex(spec, prefix)};
    std::size_t offset = 0;
    for (std::int64_t s : sizes) {
        std::vector<FaceId> block(prefix.begin() + offset, prefix.begin() + offset + s);
        out.blocks.emplace_back(spec, std::move(block));
        offset += static_cast<std::size_t>(s);
    }
    for (const DComplex& b : out.blocks)
        for (FaceId f : b.faces())
            if (!out.combined.contains(f))
                throw InvariantError("coupling containment violated");
    return out;
}

}  // namespace lmck
