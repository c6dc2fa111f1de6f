#pragma once

#include <optional>
#include <vector>

#include "lmck/elimination.hpp"
#include "lmck/homology.hpp"
#include "lmck/sampler.hpp"

namespace lmck {

// The q-reducing set of Y: faces whose addition drops dim H_{d-1}(.;Z/qZ),
// i.e. faces whose boundary is not already a mod-q boundary in Y.
std::vector<FaceId> reducing_set(const DComplex& y, const PrimeModulus& q);

// |reducing_set(Y)| without materializing the ids; when sample_faces > 0
// the size is estimated from that many uniformly drawn candidate faces.
double reducing_set_size(const BoundaryBasis& basis, std::int64_t sample_faces, Philox& rng);

struct MeanEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::int64_t trials = 0;
};

// Monte Carlo E|q-reducing set(Y_d(n,m))| over `trials` uniform draws;
// trial t uses stream seed.stream + t.
MeanEstimate mean_reducing_size(const ComplexSpec& spec, std::int64_t m, const PrimeModulus& q,
                                std::int64_t trials, Seed seed, std::int64_t sample_faces = 0);

// Trace of the incremental face process: Z_i indicates whether face i was
// q-reducing when added; dims[i] = dim H_{d-1}(Y_i; Z/qZ) with dims[0] the
// cycle dimension of the empty complex.
struct ProcessTrace {
    std::vector<FaceId> ordering;        // the processed prefix
    std::vector<std::uint8_t> indicators;
    std::vector<std::int64_t> dims;      // size = indicators.size() + 1
};

ProcessTrace run_process(const ComplexSpec& spec, const std::vector<FaceId>& ordering,
                         const PrimeModulus& q,
                         std::optional<std::int64_t> stop_at = std::nullopt);

// Estimated m~(n,q): the smallest m at which the estimated mean reducing-set
// size crosses C(n,d+1)/2. Linear scan over a geometric grid, refined level
// by level down to step 1; each trial reuses one random ordering for every
// grid point of its level.
struct MTildeEstimate {
    BigInt q;
    std::int64_t estimate = 0;     // mtilde_hat
    std::int64_t trials = 0;
    double target = 0.0;           // C(n,d+1)/2
    double mean_at_estimate = 0.0;
    double stderr_at_estimate = 0.0;
    double mean_below = 0.0;       // at estimate-1 (or estimate's lower bracket)
    double stderr_below = 0.0;
};

MTildeEstimate estimate_mtilde(const ComplexSpec& spec, const PrimeModulus& q,
                               std::int64_t trials, Seed seed, std::int64_t sample_faces = 0);

}  // namespace lmck
