#include "lmck/manifest.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

#include "lmck/version.hpp"

namespace lmck {

nlohmann::json RunManifest::experiment_json() const {
    return nlohmann::json{{"tool", kToolName},
                          {"version", kToolVersion},
                          {"rng_algorithm", kRngAlgorithm},
                          {"subcommand", subcommand},
                          {"schema", schema},
                          {"master_seed", master_seed},
                          {"params", params}};
}

nlohmann::json RunManifest::full_json() const {
    nlohmann::json j = experiment_json();
    j["runtime"] = {{"timestamp", timestamp}, {"threads", threads}, {"out_dir", out_dir}};
    return j;
}

std::string RunManifest::experiment_comment() const {
    return "# manifest " + experiment_json().dump();
}

std::string utc_timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%04d%02d%02dT%02d%02d%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

WilsonInterval wilson95(std::int64_t successes, std::int64_t trials) {
    if (trials <= 0) return {};
    const double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    double parsed = 0;
    std::sscanf(buf, "%lf", &parsed);
    // prefer the shortest representation that round-trips
    for (int prec = 1; prec <= 16; ++prec) {
        char cand[64];
        std::snprintf(cand, sizeof(cand), "%.*g", prec, x);
        std::sscanf(cand, "%lf", &parsed);
        if (parsed == x) return cand;
    }
    return buf;
}

}  // namespace lmck
