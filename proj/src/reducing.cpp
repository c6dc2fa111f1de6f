#include "lmck/reducing.hpp"

#include <algorithm>
#include <cmath>

namespace lmck {

std::vector<FaceId> reducing_set(const DComplex& y, const PrimeModulus& q) {
    BoundaryBasis basis(y.spec(), q);
    for (FaceId f : y.faces()) basis.insert_face(f);
    std::vector<FaceId> out;
    const std::int64_t total = y.spec().face_count();
    for (FaceId f = 0; f < total; ++f)
        if (!basis.face_in_span(f)) out.push_back(f);
    return out;
}

double reducing_set_size(const BoundaryBasis& basis, std::int64_t sample_faces, Philox& rng) {
    const std::int64_t total = basis.spec().face_count();
    if (sample_faces <= 0) {
        std::int64_t count = 0;
        for (FaceId f = 0; f < total; ++f)
            if (!basis.face_in_span(f)) ++count;
        return static_cast<double>(count);
    }
    std::int64_t hits = 0;
    for (std::int64_t k = 0; k < sample_faces; ++k) {
        const auto f = static_cast<FaceId>(rng.next_below(static_cast<std::uint64_t>(total)));
        if (!basis.face_in_span(f)) ++hits;
    }
    return static_cast<double>(total) * static_cast<double>(hits) /
           static_cast<double>(sample_faces);
}

namespace {

MeanEstimate summarize(const std::vector<double>& xs) {
    MeanEstimate e;
    e.trials = static_cast<std::int64_t>(xs.size());
    double sum = 0;
    for (double x : xs) sum += x;
    e.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0;
        for (double x : xs) ss += (x - e.mean) * (x - e.mean);
        const double var = ss / static_cast<double>(xs.size() - 1);
        e.stderr_ = std::sqrt(var / static_cast<double>(xs.size()));
    }
    return e;
}

}  // namespace

MeanEstimate mean_reducing_size(const ComplexSpec& spec, std::int64_t m, const PrimeModulus& q,
                                std::int64_t trials, Seed seed, std::int64_t sample_faces) {
    if (trials < 1) throw ValidationError("trials must be >= 1");
    if (m < 0 || m > spec.face_count())
        throw ValidationError("m out of range [0, " + std::to_string(spec.face_count()) + "]");
    std::vector<double> sizes;
    sizes.reserve(static_cast<std::size_t>(trials));
    for (std::int64_t t = 0; t < trials; ++t) {
        const Seed trial_seed = seed.with_stream(seed.stream + static_cast<std::uint64_t>(t));
        const DComplex y = sample_uniform_m(spec, m, trial_seed);
        BoundaryBasis basis(spec, q);
        for (FaceId f : y.faces()) basis.insert_face(f);
        Philox rng(trial_seed.with_stream(trial_seed.stream ^ 0x8000000000000000ull));
        sizes.push_back(reducing_set_size(basis, sample_faces, rng));
    }
    return summarize(sizes);
}

ProcessTrace run_process(const ComplexSpec& spec, const std::vector<FaceId>& ordering,
                         const PrimeModulus& q, std::optional<std::int64_t> stop_at) {
    const std::int64_t limit =
        stop_at ? std::min<std::int64_t>(*stop_at, static_cast<std::int64_t>(ordering.size()))
                : static_cast<std::int64_t>(ordering.size());
    if (stop_at && *stop_at < 0) throw ValidationError("stop_at must be nonnegative");

    std::vector<std::uint8_t> seen(static_cast<std::size_t>(spec.face_count()), 0);
    ProcessTrace trace;
    trace.dims.push_back(cycle_dim(spec));
    BoundaryBasis basis(spec, q);
    for (std::int64_t i = 0; i < limit; ++i) {
        const FaceId f = ordering[static_cast<std::size_t>(i)];
        if (f < 0 || f >= spec.face_count())
            throw ValidationError("face id " + std::to_string(f) + " out of range");
        if (seen[static_cast<std::size_t>(f)])
            throw ValidationError("duplicate face id " + std::to_string(f) + " in ordering");
        seen[static_cast<std::size_t>(f)] = 1;
        const bool drop = basis.insert_face(f);
        trace.ordering.push_back(f);
        trace.indicators.push_back(drop ? 1 : 0);
        trace.dims.push_back(trace.dims.back() - (drop ? 1 : 0));
        if (trace.dims.back() < 0) throw InvariantError("negative homology dimension in trace");
    }
    // a complete ordering drains the homology entirely: exactly C(n-1,d)
    // of the faces were reducing
    if (static_cast<std::int64_t>(trace.indicators.size()) == spec.face_count() &&
        trace.dims.back() != 0)
        throw InvariantError("full ordering left homology dimension " +
                             std::to_string(trace.dims.back()));
    return trace;
}

namespace {

// One level of the m~ scan: estimated mean reducing-set size at each grid
// point, sharing one ordering (and one growing basis) per trial.
std::vector<MeanEstimate> scan_grid(const ComplexSpec& spec, const PrimeModulus& q,
                                    const std::vector<std::int64_t>& grid, std::int64_t trials,
                                    Seed seed, std::int64_t sample_faces) {
    std::vector<std::vector<double>> per_point(grid.size());
    for (auto& v : per_point) v.reserve(static_cast<std::size_t>(trials));
    for (std::int64_t t = 0; t < trials; ++t) {
        const Seed trial_seed = seed.with_stream(seed.stream + static_cast<std::uint64_t>(t));
        const std::vector<FaceId> ordering = sample_ordering(spec, trial_seed);
        Philox scan_rng(trial_seed.with_stream(trial_seed.stream ^ 0x8000000000000000ull));
        BoundaryBasis basis(spec, q);
        std::int64_t done = 0;
        for (std::size_t g = 0; g < grid.size(); ++g) {
            for (; done < grid[g]; ++done)
                basis.insert_face(ordering[static_cast<std::size_t>(done)]);
            per_point[g].push_back(reducing_set_size(basis, sample_faces, scan_rng));
        }
    }
    std::vector<MeanEstimate> out;
    out.reserve(grid.size());
    for (const auto& xs : per_point) out.push_back(summarize(xs));
    return out;
}

}  // namespace

MTildeEstimate estimate_mtilde(const ComplexSpec& spec, const PrimeModulus& q,
                               std::int64_t trials, Seed seed, std::int64_t sample_faces) {
    if (trials < 30) throw ValidationError("mtilde estimation needs trials >= 30");
    const std::int64_t total = spec.face_count();
    const double target = static_cast<double>(total) / 2.0;

    MTildeEstimate est;
    est.q = q.value();
    est.trials = trials;
    est.target = target;

    // bracket: mean(lo) > target >= mean(hi)
    std::int64_t lo = 0, hi = total;
    MeanEstimate at_hi{0.0, 0.0, trials}, at_lo{static_cast<double>(total), 0.0, trials};
    std::uint64_t level = 0;

    // level 0: geometric grid; deeper levels: linear grids at shrinking step
    std::vector<std::int64_t> grid;
    for (std::int64_t g = 1; g < total; g = std::max(g + 1, (g * 3) / 2)) grid.push_back(g);
    grid.push_back(total);

    while (true) {
        const Seed level_seed = seed.with_stream(seed.stream + (level << 32));
        const std::vector<MeanEstimate> means =
            scan_grid(spec, q, grid, trials, level_seed, sample_faces);
        std::size_t crossing = grid.size();  // first grid point with mean <= target
        for (std::size_t g = 0; g < grid.size(); ++g) {
            if (means[g].mean <= target) {
                crossing = g;
                break;
            }
        }
        if (crossing == grid.size()) {
            // no crossing inside this window; the upper bracket stands
            break;
        }
        hi = grid[crossing];
        at_hi = means[crossing];
        if (crossing > 0) {
            lo = grid[crossing - 1];
            at_lo = means[crossing - 1];
        }
        if (hi - lo <= 1) break;

        // refine (lo, hi] with ~8 evenly spaced points, always ending at hi
        const std::int64_t step = std::max<std::int64_t>(1, (hi - lo + 7) / 8);
        grid.clear();
        for (std::int64_t mm = lo + step; mm < hi; mm += step) grid.push_back(mm);
        grid.push_back(hi);
        ++level;
    }

    est.estimate = hi;
    est.mean_at_estimate = at_hi.mean;
    est.stderr_at_estimate = at_hi.stderr_;
    est.mean_below = at_lo.mean;
    est.stderr_below = at_lo.stderr_;
    return est;
}

}  // namespace lmck
