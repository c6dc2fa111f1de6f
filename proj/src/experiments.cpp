#include "lmck/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

namespace lmck {

void parallel_trials(std::int64_t trials, int threads,
                     const std::function<void(std::int64_t)>& fn) {
    if (threads < 1) threads = 1;
    if (threads == 1 || trials <= 1) {
        for (std::int64_t t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::int64_t t = next.fetch_add(1);
            if (t >= trials) return;
            try {
                fn(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int nthreads = static_cast<int>(std::min<std::int64_t>(threads, trials));
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

Coefficient Coefficient::parse(const std::string& text) {
    if (text == "Q") return {Kind::kRational, 0};
    if (text == "Z") return {Kind::kInteger, 0};
    try {
        const std::uint64_t q = std::stoull(text);
        PrimeModulus check{q};  // validates primality
        return {Kind::kPrime, q};
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw ValidationError("coefficient must be Q, Z, or a prime; got `" + text + "`");
    }
}

std::string Coefficient::str() const {
    switch (kind) {
        case Kind::kRational: return "Q";
        case Kind::kInteger: return "Z";
        case Kind::kPrime: return std::to_string(q);
    }
    throw InvariantError("unknown coefficient kind");
}

namespace {

double clamp01(double p) { return std::min(1.0, std::max(0.0, p)); }

}  // namespace

std::vector<SweepRow> threshold_sweep(const ComplexSpec& spec, const std::vector<double>& c_grid,
                                      const Coefficient& coeff, std::int64_t trials, Seed seed,
                                      int threads, std::int64_t snf_entry_budget,
                                      const std::string& save_dir) {
    if (c_grid.empty()) throw ValidationError("c grid must be nonempty");
    for (std::size_t i = 1; i < c_grid.size(); ++i)
        if (c_grid[i] <= c_grid[i - 1]) throw ValidationError("c grid must be ascending");
    if (trials < 1) throw ValidationError("trials must be >= 1");

    const double logn = std::log(static_cast<double>(spec.n()));
    std::vector<SweepRow> rows;
    for (std::size_t r = 0; r < c_grid.size(); ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        SweepRow row;
        row.c = c_grid[r];
        row.p = clamp01(row.c * logn / static_cast<double>(spec.n()));
        row.trials = trials;

        std::vector<std::uint8_t> vanish(static_cast<std::size_t>(trials), 0);
        std::atomic<bool> budget_hit{false};
        parallel_trials(trials, threads, [&](std::int64_t t) {
            if (budget_hit.load()) return;
            const Seed trial_seed = seed.with_stream(
                seed.stream + static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(trials) +
                static_cast<std::uint64_t>(t));
            const DComplex y = sample_bernoulli(spec, row.p, trial_seed);
            if (!save_dir.empty())
                write_complex_file(save_dir + "/c" + std::to_string(r) + "-t" +
                                       std::to_string(t) + ".lmck",
                                   y);
            try {
                bool zero = false;
                switch (coeff.kind) {
                    case Coefficient::Kind::kPrime:
                        zero = is_zero_mod_q(y, PrimeModulus(coeff.q));
                        break;
                    case Coefficient::Kind::kInteger:
                        zero = is_zero_integer(y, snf_entry_budget);
                        break;
                    case Coefficient::Kind::kRational: {
                        SummaryPolicy policy;
                        policy.snf_entry_budget = snf_entry_budget;
                        zero = summary(y, {}, policy).betti_rational == 0;
                        break;
                    }
                }
                vanish[static_cast<std::size_t>(t)] = zero ? 1 : 0;
            } catch (const ResourceError&) {
                budget_hit.store(true);
            }
        });

        if (budget_hit.load()) {
            row.status = "skipped: budget";
        } else {
            for (auto v : vanish) row.vanish_count += v;
            row.vanish_fraction =
                static_cast<double>(row.vanish_count) / static_cast<double>(trials);
            row.wilson = wilson95(row.vanish_count, trials);
        }
        row.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        rows.push_back(row);
    }
    return rows;
}

std::string sweep_csv(const RunManifest& manifest, const ComplexSpec& spec,
                      const Coefficient& coeff, const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "# lmck-results sweep-v1\n" << manifest.experiment_comment() << "\n";
    // wall times are runtime data and live in manifest.json, so these bytes
    // are reproducible at any thread count
    out << "n,d,coefficient,c,p,trials,vanish_count,vanish_fraction,wilson_lo,wilson_hi,"
           "status\n";
    for (const SweepRow& r : rows) {
        out << spec.n() << ',' << spec.d() << ',' << coeff.str() << ',' << format_double(r.c)
            << ',' << format_double(r.p) << ',' << r.trials << ',';
        if (r.status == "ok") {
            out << r.vanish_count << ',' << format_double(r.vanish_fraction) << ','
                << format_double(r.wilson.lo) << ',' << format_double(r.wilson.hi);
        } else {
            out << ",,,";
        }
        out << ',' << r.status << "\n";
    }
    return out.str();
}

std::vector<CensusRow> torsion_census(const ComplexSpec& spec, double p, std::int64_t trials,
                                      Seed seed, int threads, std::int64_t snf_entry_budget,
                                      const std::string& save_dir) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0,1]");
    if (trials < 1) throw ValidationError("trials must be >= 1");
    std::vector<CensusRow> rows(static_cast<std::size_t>(trials));
    parallel_trials(trials, threads, [&](std::int64_t t) {
        const Seed trial_seed = seed.with_stream(seed.stream + static_cast<std::uint64_t>(t));
        const DComplex y = sample_bernoulli(spec, p, trial_seed);
        if (!save_dir.empty())
            write_complex_file(save_dir + "/t" + std::to_string(t) + ".lmck", y);
        CensusRow& row = rows[static_cast<std::size_t>(t)];
        row.trial = t;
        row.faces = y.face_count();
        const ElementaryDivisors divs = smith_normal_form(y, snf_entry_budget);
        row.betti_rational = cycle_dim(spec) - divs.rank();
        row.torsion_order = divs.torsion_order();
        const TorsionPrimes tp = torsion_primes(divs);
        row.torsion_primes = tp.primes;
        row.complete = tp.complete;
        row.hadamard_bound = hadamard_column_bound(y);
    });
    return rows;
}

std::string census_csv(const RunManifest& manifest, const ComplexSpec& spec, double,
                       const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "# lmck-results census-v1\n" << manifest.experiment_comment() << "\n";
    out << "trial,faces,betti_rational,torsion_order,torsion_primes,factor_complete,"
           "hadamard_bound\n";
    BigInt max_torsion = 0;
    for (const CensusRow& r : rows) {
        out << r.trial << ',' << r.faces << ',' << r.betti_rational << ','
            << r.torsion_order.str() << ',';
        for (std::size_t i = 0; i < r.torsion_primes.size(); ++i)
            out << (i ? ";" : "") << r.torsion_primes[i].str();
        out << ',' << (r.complete ? 1 : 0) << ',' << r.hadamard_bound.str() << "\n";
        if (r.torsion_order > max_torsion) max_torsion = r.torsion_order;
    }
    out << "# summary max_torsion_order=" << max_torsion.str()
        << " torsion_order_bound=" << torsion_order_bound(spec).str() << "\n";
    return out.str();
}

double face_count_default_p(const ComplexSpec& spec) {
    const double n = static_cast<double>(spec.n());
    return clamp01(40.0 * spec.d() * std::log(n) / n);
}

FaceCountReport face_count_check(const ComplexSpec& spec, double p, std::int64_t trials,
                                 Seed seed, int threads) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0,1]");
    if (trials < 1) throw ValidationError("trials must be >= 1");
    FaceCountReport rep;
    rep.p = p;
    rep.trials = trials;
    const double n = static_cast<double>(spec.n());
    rep.threshold_faces = (12.0 * spec.d() + 12.0) * std::log(n) *
                          static_cast<double>(spec.binom(spec.n(), spec.d()));
    rep.expected_faces = p * static_cast<double>(spec.face_count());
    rep.predicted_failure_bound =
        0.5 * std::pow(n, -static_cast<double>(spec.d() + 1));
    std::vector<std::uint8_t> meets(static_cast<std::size_t>(trials), 0);
    parallel_trials(trials, threads, [&](std::int64_t t) {
        const Seed trial_seed = seed.with_stream(seed.stream + static_cast<std::uint64_t>(t));
        const DComplex y = sample_bernoulli(spec, p, trial_seed);
        meets[static_cast<std::size_t>(t)] =
            static_cast<double>(y.face_count()) >= rep.threshold_faces ? 1 : 0;
    });
    for (auto v : meets) rep.meeting += v;
    rep.fraction = static_cast<double>(rep.meeting) / static_cast<double>(trials);
    return rep;
}

}  // namespace lmck
