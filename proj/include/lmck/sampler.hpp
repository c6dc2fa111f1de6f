#pragma once

#include <vector>

#include "lmck/complex.hpp"
#include "lmck/rng.hpp"

namespace lmck {

// Y_d(n,p): each d-face present independently with probability p.
// Uses geometric skip sampling, so cost is O(p * C(n,d+1)).
DComplex sample_bernoulli(const ComplexSpec& spec, double p, Seed seed);

// Y_d(n,m): uniform m-subset of all d-faces.
DComplex sample_uniform_m(const ComplexSpec& spec, std::int64_t m, Seed seed);

// Uniform random ordering of all C(n,d+1) face ids. Any prefix of length m
// is marginally a Y_d(n,m) draw.
std::vector<FaceId> sample_ordering(const ComplexSpec& spec, Seed seed);

// k complexes cut as consecutive blocks of one random ordering, plus their
// prefix union Y. Each block i is marginally Y_d(n, sizes[i]) and
// F_d(block i) is contained in F_d(Y) by construction.
struct CoupledBlocks {
    std::vector<DComplex> blocks;
    DComplex combined;
};
CoupledBlocks couple_blocks(const ComplexSpec& spec, const std::vector<std::int64_t>& sizes,
                            Seed seed);

}  // namespace lmck
