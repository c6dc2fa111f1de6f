#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace lmck {

// Reproducibility record. The `experiment` block pins everything that
// determines result bytes (tool version, RNG algorithm, seed, parameters,
// schema); the `runtime` block holds fields that may legitimately differ
// between reruns (timestamp, thread count, output directory). Result files
// embed only the experiment block so reruns stay byte-identical.
struct RunManifest {
    std::string subcommand;
    std::string schema;   // e.g. "sweep-v1"
    std::uint64_t master_seed = 0;
    nlohmann::json params = nlohmann::json::object();
    int threads = 1;
    std::string out_dir;
    std::string timestamp;  // UTC, set at run time

    nlohmann::json experiment_json() const;
    nlohmann::json full_json() const;

    // single-line form embedded as a CSV comment
    std::string experiment_comment() const;
};

std::string utc_timestamp_now();

// Wilson 95% score interval for k successes out of n.
struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};
WilsonInterval wilson95(std::int64_t successes, std::int64_t trials);

// Deterministic shortest-roundtrip formatting for CSV doubles.
std::string format_double(double x);

}  // namespace lmck
