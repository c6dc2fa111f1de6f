#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lmck/certify.hpp"
#include "lmck/manifest.hpp"
#include "lmck/reducing.hpp"

namespace lmck {

// Runs fn(trial) for trial in [0, trials) on a fixed-size worker pool and
// returns results ordered by trial index. Each trial derives its own
// stream, so results are independent of thread count and scheduling.
void parallel_trials(std::int64_t trials, int threads,
                     const std::function<void(std::int64_t)>& fn);

// Which coefficient system a sweep row tests.
struct Coefficient {
    enum class Kind { kRational, kInteger, kPrime } kind;
    std::uint64_t q = 0;  // meaningful for kPrime

    static Coefficient parse(const std::string& text);  // "Q" | "Z" | a prime
    std::string str() const;
};

struct SweepRow {
    double c = 0.0;
    double p = 0.0;
    std::int64_t trials = 0;
    std::int64_t vanish_count = 0;
    double vanish_fraction = 0.0;
    WilsonInterval wilson;
    double wall_ms = 0.0;
    std::string status = "ok";  // or "skipped: budget"
};

// One row per c in the grid; p = clamp01(c * log n / n). Vanishing is
// tested with is_zero_mod_q / is_zero_integer / the rational summary,
// matching the coefficient system. Trial t of row r uses stream
// r * trials + t.
// When save_dir is nonempty every sampled complex is written there as
// c<row>-t<trial>.lmck.
std::vector<SweepRow> threshold_sweep(const ComplexSpec& spec, const std::vector<double>& c_grid,
                                      const Coefficient& coeff, std::int64_t trials, Seed seed,
                                      int threads,
                                      std::int64_t snf_entry_budget = kDefaultSnfEntryBudget,
                                      const std::string& save_dir = {});

std::string sweep_csv(const RunManifest& manifest, const ComplexSpec& spec,
                      const Coefficient& coeff, const std::vector<SweepRow>& rows);

struct CensusRow {
    std::int64_t trial = 0;
    std::int64_t faces = 0;
    std::int64_t betti_rational = 0;
    BigInt torsion_order;
    std::vector<BigInt> torsion_primes;
    bool complete = true;
    BigInt hadamard_bound;
};

std::vector<CensusRow> torsion_census(const ComplexSpec& spec, double p, std::int64_t trials,
                                      Seed seed, int threads,
                                      std::int64_t snf_entry_budget = kDefaultSnfEntryBudget,
                                      const std::string& save_dir = {});

std::string census_csv(const RunManifest& manifest, const ComplexSpec& spec, double p,
                       const std::vector<CensusRow>& rows);

struct FaceCountReport {
    double p = 0.0;                     // sampling density (clamped to [0,1])
    double threshold_faces = 0.0;       // (12d+12) * log(n) * C(n,d)
    double expected_faces = 0.0;        // p * C(n,d+1)
    std::int64_t trials = 0;
    std::int64_t meeting = 0;           // trials with |faces| >= threshold
    double fraction = 0.0;
    double predicted_failure_bound = 0.0;  // 1 / (2 n^{d+1})
};

// Chernoff sanity check from the p -> m conversion: fraction of Bernoulli
// samples whose face count reaches the (12d+12) log(n) C(n,d) floor.
FaceCountReport face_count_check(const ComplexSpec& spec, double p, std::int64_t trials,
                                 Seed seed, int threads);

// Default density for the face-count check: min(1, 40 d log n / n).
double face_count_default_p(const ComplexSpec& spec);

}  // namespace lmck
