#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <json.hpp>

#include "lmck/certify.hpp"
#include "lmck/experiments.hpp"
#include "lmck/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;
constexpr int kExitInvariant = 4;

struct GlobalOpts {
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    std::string format = "json";  // for the commands that honor it
    std::string out_dir = "runs";
};

// Creates <out_dir>/<timestamp>-<tag>/ and writes manifest.json + results.
fs::path make_run_dir(const GlobalOpts& g, const std::string& tag) {
    fs::path base(g.out_dir);
    fs::create_directories(base);
    fs::path dir = base / (lmck::utc_timestamp_now() + "-" + tag);
    for (int suffix = 1; fs::exists(dir); ++suffix)
        dir = base / (lmck::utc_timestamp_now() + "-" + tag + "-" + std::to_string(suffix));
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw lmck::ValidationError("cannot write " + path.string());
    out << content;
}

lmck::RunManifest make_manifest(const GlobalOpts& g, const std::string& subcommand,
                                const std::string& schema, std::uint64_t seed, json params) {
    lmck::RunManifest m;
    m.subcommand = subcommand;
    m.schema = schema;
    m.master_seed = seed;
    m.params = std::move(params);
    m.threads = g.threads;
    m.out_dir = g.out_dir;
    m.timestamp = lmck::utc_timestamp_now();
    return m;
}

json big_list(const std::vector<lmck::BigInt>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(x.str());
    return a;
}

// JSON by default; `--format csv` flattens top-level scalars to key,value
// rows (nested values stay JSON-encoded inside the cell).
void emit(const GlobalOpts& g, const json& out) {
    if (g.format == "csv") {
        std::cout << "key,value\n";
        for (const auto& [k, v] : out.items()) {
            std::cout << k << ',';
            if (v.is_string())
                std::cout << v.get<std::string>();
            else
                std::cout << v.dump();
            std::cout << "\n";
        }
        return;
    }
    std::cout << out.dump(2) << "\n";
}

// --- subcommand payloads -------------------------------------------------

struct SampleArgs {
    int n = 0, d = 0;
    double p = -1, c = -1;
    std::int64_t m = -1;
    std::uint64_t seed = 0;
    std::string out;
};

int run_sample(const GlobalOpts& g, const SampleArgs& a) {
    lmck::ComplexSpec spec(a.n, a.d);
    if (a.m < 0 && a.p < 0 && a.c < 0)
        throw lmck::ValidationError("one of --p, --m, --c is required");
    double p = a.p;
    std::string mode;
    lmck::DComplex y(spec);
    if (a.m >= 0) {
        mode = "m";
        y = lmck::sample_uniform_m(spec, a.m, {a.seed, 0});
    } else {
        if (a.c >= 0)
            p = std::min(1.0, a.c * std::log(static_cast<double>(a.n)) / a.n);
        mode = (a.c >= 0) ? "c" : "p";
        y = lmck::sample_bernoulli(spec, p, {a.seed, 0});
    }
    const auto manifest = make_manifest(
        g, "sample", "lmck-v1", a.seed,
        json{{"n", a.n}, {"d", a.d}, {"mode", mode}, {"p", p}, {"m", a.m}, {"c", a.c}});
    const std::vector<std::string> comments = {manifest.experiment_json().dump()};
    if (a.out.empty()) {
        lmck::write_complex(std::cout, y, comments);
    } else {
        std::ofstream out(a.out);
        if (!out) throw lmck::ValidationError("cannot write " + a.out);
        lmck::write_complex(out, y, comments);
    }
    return kExitOk;
}

struct HomologyArgs {
    std::string in;
    std::vector<std::uint64_t> primes;
    bool integer = false;
};

int run_homology(const GlobalOpts& g, const HomologyArgs& a) {
    const lmck::DComplex y = lmck::read_complex_file(a.in);
    std::vector<lmck::PrimeModulus> primes;
    for (std::uint64_t q : a.primes) primes.emplace_back(q);
    lmck::SummaryPolicy policy;
    policy.force_consensus = !a.integer;  // only run SNF when asked
    const lmck::HomologySummary s = lmck::summary(y, primes, policy);

    json out{{"n", y.spec().n()},
             {"d", y.spec().d()},
             {"faces", y.face_count()},
             {"cycle_dim", s.cycle_dim},
             {"betti_rational", s.betti_rational},
             {"betti_method", s.betti_exact ? "snf" : "modular-consensus"}};
    if (!s.betti_exact) out["consensus_primes"] = big_list(s.consensus_primes);
    json mod = json::object();
    for (const auto& [q, b] : s.betti_mod) mod[q.str()] = b;
    out["betti_mod"] = mod;
    if (a.integer) {
        out["divisors"] = big_list(s.divisors.divisors);
        out["torsion_order"] = s.divisors.torsion_order().str();
        const lmck::TorsionPrimes tp = lmck::torsion_primes(s.divisors);
        out["torsion_primes"] = big_list(tp.primes);
        out["torsion_complete"] = tp.complete;
        out["is_zero_integer"] =
            (s.betti_rational == 0 && s.divisors.all_unit());
    }
    out["manifest"] =
        make_manifest(g, "homology", "homology-v1", 0,
                      json{{"in", a.in}, {"integer", a.integer}})
            .experiment_json();
    emit(g, out);
    return kExitOk;
}

struct ReducingArgs {
    std::string in;
    std::uint64_t q = 2;
    std::int64_t sample_faces = 0;
};

int run_reducing_set(const GlobalOpts& g, const ReducingArgs& a) {
    const lmck::DComplex y = lmck::read_complex_file(a.in);
    const lmck::PrimeModulus q{a.q};
    json out{{"n", y.spec().n()}, {"d", y.spec().d()}, {"q", std::to_string(a.q)},
             {"faces", y.face_count()}};
    if (a.sample_faces > 0) {
        lmck::BoundaryBasis basis(y.spec(), q);
        for (lmck::FaceId f : y.faces()) basis.insert_face(f);
        lmck::Philox rng({0x6c6d636bull, 0});
        const double est = lmck::reducing_set_size(basis, a.sample_faces, rng);
        const double frac = est / static_cast<double>(y.spec().face_count());
        const double se = static_cast<double>(y.spec().face_count()) *
                          std::sqrt(std::max(0.0, frac * (1 - frac) /
                                                      static_cast<double>(a.sample_faces)));
        out["size_estimate"] = est;
        out["stderr"] = se;
        out["sampled_faces"] = a.sample_faces;
    } else {
        const std::vector<lmck::FaceId> ids = lmck::reducing_set(y, q);
        out["size"] = ids.size();
        out["ids"] = ids;
    }
    out["manifest"] = make_manifest(g, "reducing-set", "reducing-set-v1", 0,
                                    json{{"in", a.in}, {"q", a.q},
                                         {"sample_faces", a.sample_faces}})
                          .experiment_json();
    emit(g, out);
    return kExitOk;
}

struct ProcessArgs {
    int n = 0, d = 0;
    std::uint64_t q = 2;
    std::uint64_t seed = 0;
    std::int64_t stop_at = -1;
};

int run_process(const GlobalOpts& g, const ProcessArgs& a) {
    lmck::ComplexSpec spec(a.n, a.d);
    const lmck::PrimeModulus q{a.q};
    const auto ordering = lmck::sample_ordering(spec, {a.seed, 0});
    const auto trace = lmck::run_process(
        spec, ordering, q,
        a.stop_at >= 0 ? std::optional<std::int64_t>(a.stop_at) : std::nullopt);
    const auto manifest = make_manifest(
        g, "process", "trace-v1", a.seed,
        json{{"n", a.n}, {"d", a.d}, {"q", a.q}, {"stop_at", a.stop_at}});
    std::cout << "# lmck-results trace-v1\n" << manifest.experiment_comment() << "\n";
    std::cout << "# cycle_dim=" << lmck::cycle_dim(spec) << "\n";
    std::cout << "step,face_id,z,dim\n";
    for (std::size_t i = 0; i < trace.indicators.size(); ++i)
        std::cout << i + 1 << ',' << trace.ordering[i] << ','
                  << static_cast<int>(trace.indicators[i]) << ',' << trace.dims[i + 1] << "\n";
    return kExitOk;
}

struct MtildeArgs {
    int n = 0, d = 0;
    std::uint64_t q = 2;
    std::int64_t trials = 200;
    std::uint64_t seed = 0;
    std::int64_t sample_faces = 0;
};

int run_mtilde(const GlobalOpts& g, const MtildeArgs& a) {
    lmck::ComplexSpec spec(a.n, a.d);
    const lmck::PrimeModulus q{a.q};
    const lmck::MTildeEstimate est =
        lmck::estimate_mtilde(spec, q, a.trials, {a.seed, 0}, a.sample_faces);
    json out{{"n", a.n},
             {"d", a.d},
             {"q", est.q.str()},
             {"trials", est.trials},
             {"target", est.target},
             {"mtilde_hat", est.estimate},
             {"mean_at_estimate", est.mean_at_estimate},
             {"stderr_at_estimate", est.stderr_at_estimate},
             {"mean_below", est.mean_below},
             {"stderr_below", est.stderr_below},
             {"four_binom_nd", 4 * spec.binom(spec.n(), spec.d())}};
    out["manifest"] = make_manifest(g, "mtilde", "mtilde-v1", a.seed,
                                    json{{"n", a.n}, {"d", a.d}, {"q", a.q},
                                         {"trials", a.trials},
                                         {"sample_faces", a.sample_faces}})
                          .experiment_json();
    emit(g, out);
    return kExitOk;
}

struct CertifyArgs {
    int n = 0, d = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::int64_t trials = 1;
};

int run_certify(const GlobalOpts& g, const CertifyArgs& a) {
    lmck::ComplexSpec spec(a.n, a.d);
    const auto manifest =
        make_manifest(g, "certify-z", "certificate-v1", a.seed,
                      json{{"n", a.n}, {"d", a.d}, {"p", a.p}, {"trials", a.trials}});
    for (std::int64_t t = 0; t < a.trials; ++t) {
        const lmck::Certificate cert =
            lmck::certify_zero(spec, a.p, {a.seed, static_cast<std::uint64_t>(t)});
        json out{{"trial", t},
                 {"n", a.n},
                 {"d", a.d},
                 {"p", cert.p},
                 {"union_density", 1.0 - (1.0 - cert.p) * (1.0 - cert.p)},
                 {"stream_y1", cert.stream_y1},
                 {"stream_y2", cert.stream_y2},
                 {"faces_y1", cert.faces_y1},
                 {"faces_y2", cert.faces_y2},
                 {"faces_union", cert.faces_union},
                 {"betti_rational_y1", cert.betti_rational_y1},
                 {"torsion_primes_y1", big_list(cert.torsion_primes_y1)},
                 {"torsion_complete", cert.torsion_complete},
                 {"verdict", lmck::to_string(cert.verdict)}};
        json checks = json::object();
        for (std::size_t i = 0; i < cert.y2_vanishes.size(); ++i)
            checks[cert.torsion_primes_y1[i].str()] = static_cast<bool>(cert.y2_vanishes[i]);
        out["y2_checks"] = checks;
        if (cert.verdict == lmck::CertifyVerdict::kNotCertified)
            out["note"] = "not-certified is not evidence of nonzero homology";
        if (t == 0) out["manifest"] = manifest.experiment_json();
        std::cout << out.dump() << "\n";
    }
    return kExitOk;
}

struct SweepArgs {
    int n = 0, d = 0;
    double c_min = 0, c_max = 0, c_step = 0;
    std::string coeff = "2";
    std::int64_t trials = 100;
    std::uint64_t seed = 0;
    bool save_complexes = false;
};

int run_sweep(const GlobalOpts& g, const SweepArgs& a) {
    lmck::ComplexSpec spec(a.n, a.d);
    const lmck::Coefficient coeff = lmck::Coefficient::parse(a.coeff);
    if (a.c_step <= 0) throw lmck::ValidationError("--c-step must be positive");
    std::vector<double> grid;
    for (double c = a.c_min; c <= a.c_max + 1e-12; c += a.c_step) grid.push_back(c);
    const auto manifest = make_manifest(g, "sweep", "sweep-v1", a.seed,
                                        json{{"n", a.n},
                                             {"d", a.d},
                                             {"c_min", a.c_min},
                                             {"c_max", a.c_max},
                                             {"c_step", a.c_step},
                                             {"coeff", coeff.str()},
                                             {"trials", a.trials}});
    const fs::path dir = make_run_dir(g, "sweep");
    std::string save_dir;
    if (a.save_complexes) {
        save_dir = (dir / "complexes").string();
        fs::create_directories(save_dir);
    }
    const auto rows = lmck::threshold_sweep(spec, grid, coeff, a.trials, {a.seed, 0}, g.threads,
                                            lmck::kDefaultSnfEntryBudget, save_dir);
    json full = manifest.full_json();
    json walls = json::array();
    for (const auto& r : rows) walls.push_back(r.wall_ms);
    full["runtime"]["row_wall_ms"] = walls;
    write_file(dir / "manifest.json", full.dump(2) + "\n");
    write_file(dir / "results.csv", lmck::sweep_csv(manifest, spec, coeff, rows));
    std::cout << dir.string() << "\n";
    return kExitOk;
}

struct CensusArgs {
    int n = 0, d = 0;
    double p = 0.0;
    std::int64_t trials = 50;
    std::uint64_t seed = 0;
    bool save_complexes = false;
};

int run_census(const GlobalOpts& g, const CensusArgs& a) {
    lmck::ComplexSpec spec(a.n, a.d);
    const auto manifest =
        make_manifest(g, "census", "census-v1", a.seed,
                      json{{"n", a.n}, {"d", a.d}, {"p", a.p}, {"trials", a.trials}});
    const fs::path dir = make_run_dir(g, "census");
    std::string save_dir;
    if (a.save_complexes) {
        save_dir = (dir / "complexes").string();
        fs::create_directories(save_dir);
    }
    const auto rows = lmck::torsion_census(spec, a.p, a.trials, {a.seed, 0}, g.threads,
                                           lmck::kDefaultSnfEntryBudget, save_dir);
    write_file(dir / "manifest.json", manifest.full_json().dump(2) + "\n");
    write_file(dir / "results.csv", lmck::census_csv(manifest, spec, a.p, rows));
    std::cout << dir.string() << "\n";
    return kExitOk;
}

struct FaceCountArgs {
    int n = 0, d = 0;
    std::int64_t trials = 100;
    std::uint64_t seed = 0;
    double p = -1;
};

int run_face_count(const GlobalOpts& g, const FaceCountArgs& a) {
    lmck::ComplexSpec spec(a.n, a.d);
    const double p = a.p >= 0 ? a.p : lmck::face_count_default_p(spec);
    const lmck::FaceCountReport rep =
        lmck::face_count_check(spec, p, a.trials, {a.seed, 0}, g.threads);
    json out{{"n", a.n},
             {"d", a.d},
             {"p", rep.p},
             {"trials", rep.trials},
             {"threshold_faces", rep.threshold_faces},
             {"expected_faces", rep.expected_faces},
             {"max_possible_faces", spec.face_count()},
             {"meeting", rep.meeting},
             {"fraction", rep.fraction},
             {"predicted_failure_bound", rep.predicted_failure_bound}};
    out["manifest"] = make_manifest(g, "face-count", "face-count-v1", a.seed,
                                    json{{"n", a.n}, {"d", a.d}, {"p", p},
                                         {"trials", a.trials}})
                          .experiment_json();
    emit(g, out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random d-complex homology experiments"};
    app.set_version_flag("--version", std::string(lmck::kToolName) + " " + lmck::kToolVersion);
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--threads", g.threads, "worker threads for trial-level parallelism");
    app.add_option("--format", g.format, "output format for query subcommands")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out-dir", g.out_dir, "directory for experiment run folders");

    SampleArgs sample;
    auto* cmd_sample = app.add_subcommand("sample", "sample one complex to lmck format");
    cmd_sample->add_option("--n", sample.n)->required();
    cmd_sample->add_option("--d", sample.d)->required();
    auto* opt_p = cmd_sample->add_option("--p", sample.p, "Bernoulli face probability");
    auto* opt_m = cmd_sample->add_option("--m", sample.m, "exact face count (uniform model)");
    auto* opt_c = cmd_sample->add_option("--c", sample.c, "p = c log(n)/n");
    opt_p->excludes(opt_m)->excludes(opt_c);
    opt_m->excludes(opt_c);
    cmd_sample->add_option("--seed", sample.seed)->required();
    cmd_sample->add_option("--out", sample.out, "output file (default: stdout)");

    HomologyArgs hom;
    auto* cmd_hom = app.add_subcommand("homology", "homology summary of an lmck file");
    cmd_hom->add_option("--in", hom.in)->required();
    cmd_hom->add_option("--primes", hom.primes)->delimiter(',');
    cmd_hom->add_flag("--integer", hom.integer, "run integer SNF (divisors, torsion)");

    ReducingArgs red;
    auto* cmd_red = app.add_subcommand("reducing-set", "q-reducing set of an lmck file");
    cmd_red->add_option("--in", red.in)->required();
    cmd_red->add_option("--q", red.q)->required();
    cmd_red->add_option("--sample-faces", red.sample_faces,
                        "estimate the size from this many sampled faces");

    ProcessArgs proc;
    auto* cmd_proc = app.add_subcommand("process", "incremental face process trace");
    cmd_proc->add_option("--n", proc.n)->required();
    cmd_proc->add_option("--d", proc.d)->required();
    cmd_proc->add_option("--q", proc.q)->required();
    cmd_proc->add_option("--seed", proc.seed)->required();
    cmd_proc->add_option("--stop-at", proc.stop_at, "stop after this many faces");

    MtildeArgs mt;
    auto* cmd_mt = app.add_subcommand("mtilde", "estimate mtilde(n, q)");
    cmd_mt->add_option("--n", mt.n)->required();
    cmd_mt->add_option("--d", mt.d)->required();
    cmd_mt->add_option("--q", mt.q)->required();
    cmd_mt->add_option("--trials", mt.trials)->required();
    cmd_mt->add_option("--seed", mt.seed)->required();
    cmd_mt->add_option("--sample-faces", mt.sample_faces);

    CertifyArgs cz;
    auto* cmd_cz = app.add_subcommand("certify-z", "two-sample integer-homology certificate");
    cmd_cz->add_option("--n", cz.n)->required();
    cmd_cz->add_option("--d", cz.d)->required();
    cmd_cz->add_option("--p", cz.p)->required();
    cmd_cz->add_option("--seed", cz.seed)->required();
    cmd_cz->add_option("--trials", cz.trials);

    SweepArgs sw;
    auto* cmd_sw = app.add_subcommand("sweep", "vanishing-threshold sweep over c");
    cmd_sw->add_option("--n", sw.n)->required();
    cmd_sw->add_option("--d", sw.d)->required();
    cmd_sw->add_option("--c-min", sw.c_min)->required();
    cmd_sw->add_option("--c-max", sw.c_max)->required();
    cmd_sw->add_option("--c-step", sw.c_step)->required();
    cmd_sw->add_option("--coeff", sw.coeff, "Q, Z, or a prime")->required();
    cmd_sw->add_option("--trials", sw.trials)->required();
    cmd_sw->add_option("--seed", sw.seed)->required();
    cmd_sw->add_flag("--save-complexes", sw.save_complexes,
                     "write every sampled complex into the run directory");

    CensusArgs cs;
    auto* cmd_cs = app.add_subcommand("census", "torsion census of Bernoulli samples");
    cmd_cs->add_option("--n", cs.n)->required();
    cmd_cs->add_option("--d", cs.d)->required();
    cmd_cs->add_option("--p", cs.p)->required();
    cmd_cs->add_option("--trials", cs.trials)->required();
    cmd_cs->add_option("--seed", cs.seed)->required();
    cmd_cs->add_flag("--save-complexes", cs.save_complexes,
                     "write every sampled complex into the run directory");

    FaceCountArgs fc;
    auto* cmd_fc = app.add_subcommand("face-count", "Chernoff face-count check");
    cmd_fc->add_option("--n", fc.n)->required();
    cmd_fc->add_option("--d", fc.d)->required();
    cmd_fc->add_option("--trials", fc.trials)->required();
    cmd_fc->add_option("--seed", fc.seed)->required();
    cmd_fc->add_option("--p", fc.p, "override the default 40 d log(n)/n density");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*cmd_sample) return run_sample(g, sample);
        if (*cmd_hom) return run_homology(g, hom);
        if (*cmd_red) return run_reducing_set(g, red);
        if (*cmd_proc) return run_process(g, proc);
        if (*cmd_mt) return run_mtilde(g, mt);
        if (*cmd_cz) return run_certify(g, cz);
        if (*cmd_sw) return run_sweep(g, sw);
        if (*cmd_cs) return run_census(g, cs);
        if (*cmd_fc) return run_face_count(g, fc);
        throw lmck::InvariantError("no subcommand dispatched");
    } catch (const lmck::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const lmck::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
