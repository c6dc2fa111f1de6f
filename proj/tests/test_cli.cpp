#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cli_path() {
    const char* p = std::getenv("LMCK_CLI");
    REQUIRE_MESSAGE(p != nullptr, "LMCK_CLI must point at the lmck binary");
    return p;
}

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    CmdResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("sample to stdout and file round-trip") {
    const CmdResult out = run("sample --n 8 --d 2 --p 0.4 --seed 5");
    CHECK(out.exit_code == 0);
    CHECK(out.out.rfind("lmck v1\n", 0) == 0);

    const fs::path tmp = fs::temp_directory_path() / "lmck_cli_sample.lmck";
    const CmdResult to_file =
        run("sample --n 8 --d 2 --p 0.4 --seed 5 --out " + tmp.string());
    CHECK(to_file.exit_code == 0);
    CHECK(slurp(tmp) == out.out);
    fs::remove(tmp);
}

TEST_CASE("sample modes are mutually exclusive and seed is required") {
    CHECK(run("sample --n 8 --d 2 --p 0.4 --m 3 --seed 5").exit_code == 2);
    CHECK(run("sample --n 8 --d 2 --p 0.4").exit_code == 2);
    CHECK(run("sample --n 8 --d 2 --seed 5").exit_code == 2);
    CHECK(run("sample --n 8 --d 2 --p 1.5 --seed 5").exit_code == 2);
    CHECK(run("sample --n 4 --d 3 --p 0.5 --seed 5").exit_code == 2);  // n < d+2
}

TEST_CASE("homology pipeline on a sampled file") {
    const fs::path tmp = fs::temp_directory_path() / "lmck_cli_hom.lmck";
    REQUIRE(run("sample --n 7 --d 2 --m 20 --seed 9 --out " + tmp.string()).exit_code == 0);
    const CmdResult hom = run("homology --in " + tmp.string() + " --primes 2,3 --integer");
    REQUIRE(hom.exit_code == 0);
    const json j = json::parse(hom.out);
    CHECK(j["n"] == 7);
    CHECK(j["faces"] == 20);
    CHECK(j["cycle_dim"] == 15);
    CHECK(j["betti_mod"].contains("2"));
    CHECK(j["betti_mod"].contains("3"));
    CHECK(j.contains("divisors"));
    CHECK(j.contains("is_zero_integer"));
    CHECK(j["betti_method"] == "snf");
    fs::remove(tmp);
}

TEST_CASE("reducing-set command") {
    const fs::path tmp = fs::temp_directory_path() / "lmck_cli_red.lmck";
    REQUIRE(run("sample --n 6 --d 2 --m 0 --seed 1 --out " + tmp.string()).exit_code == 0);
    const CmdResult red = run("reducing-set --in " + tmp.string() + " --q 2");
    REQUIRE(red.exit_code == 0);
    const json j = json::parse(red.out);
    CHECK(j["size"] == 20);  // empty complex: every face is 2-reducing
    CHECK(j["ids"].size() == 20);
    const CmdResult sampled = run("reducing-set --in " + tmp.string() + " --q 2 --sample-faces 10");
    const json js = json::parse(sampled.out);
    CHECK(js["size_estimate"] == 20.0);  // every sampled face hits
    CHECK(run("reducing-set --in " + tmp.string() + " --q 4").exit_code == 2);  // 4 not prime
    fs::remove(tmp);
    CHECK(run("reducing-set --in /nonexistent.lmck --q 2").exit_code == 2);
}

TEST_CASE("process trace output") {
    const CmdResult res = run("process --n 5 --d 2 --q 3 --seed 4");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("# cycle_dim=6") != std::string::npos);
    CHECK(res.out.find("step,face_id,z,dim") != std::string::npos);
    // 10 data rows for C(5,3) faces, last dim is 0
    std::istringstream lines(res.out);
    std::string line, last;
    int data_rows = 0;
    while (std::getline(lines, line)) {
        if (!line.empty() && line[0] != '#' && line.find("step,") != 0) {
            ++data_rows;
            last = line;
        }
    }
    CHECK(data_rows == 10);
    CHECK(last.substr(last.size() - 2) == ",0");
    const CmdResult stopped = run("process --n 5 --d 2 --q 3 --seed 4 --stop-at 4");
    int stopped_rows = 0;
    std::istringstream slines(stopped.out);
    while (std::getline(slines, line))
        if (!line.empty() && line[0] != '#' && line.find("step,") != 0) ++stopped_rows;
    CHECK(stopped_rows == 4);
}

TEST_CASE("mtilde json") {
    const CmdResult res = run("mtilde --n 6 --d 2 --q 2 --trials 40 --seed 3");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["mtilde_hat"].get<std::int64_t>() >= 1);
    CHECK(j["target"] == 10.0);
    CHECK(j["manifest"]["rng_algorithm"] == "philox4x32-10");
    CHECK(run("mtilde --n 6 --d 2 --q 2 --trials 5 --seed 3").exit_code == 2);
}

TEST_CASE("certify-z json lines") {
    const CmdResult res = run("certify-z --n 6 --d 2 --p 0.5 --seed 2 --trials 3");
    REQUIRE(res.exit_code == 0);
    std::istringstream lines(res.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        const json j = json::parse(line);
        CHECK(j.contains("verdict"));
        CHECK(j["trial"] == rows);
        ++rows;
    }
    CHECK(rows == 3);
    CHECK(run("certify-z --n 6 --d 2 --p 0.7 --seed 2").exit_code == 2);
}

TEST_CASE("sweep writes a run directory with manifest and csv") {
    const fs::path root = fs::temp_directory_path() / "lmck_cli_sweep_runs";
    fs::remove_all(root);
    const CmdResult res = run("--out-dir " + root.string() +
                              " sweep --n 8 --d 2 --c-min 1 --c-max 2 --c-step 0.5 "
                              "--coeff 2 --trials 10 --seed 6");
    REQUIRE(res.exit_code == 0);
    const fs::path dir(res.out.substr(0, res.out.find('\n')));
    CHECK(fs::exists(dir / "manifest.json"));
    CHECK(fs::exists(dir / "results.csv"));
    const json manifest = json::parse(slurp(dir / "manifest.json"));
    CHECK(manifest["schema"] == "sweep-v1");
    CHECK(manifest["runtime"].contains("timestamp"));
    const std::string csv = slurp(dir / "results.csv");
    CHECK(csv.find("# lmck-results sweep-v1") == 0);
    // three rows: c = 1, 1.5, 2
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // banner+manifest+header+3 rows
    fs::remove_all(root);
}

TEST_CASE("census writes rows") {
    const fs::path root = fs::temp_directory_path() / "lmck_cli_census_runs";
    fs::remove_all(root);
    const CmdResult res = run("--out-dir " + root.string() +
                              " census --n 6 --d 2 --p 1.0 --trials 4 --seed 8");
    REQUIRE(res.exit_code == 0);
    const fs::path dir(res.out.substr(0, res.out.find('\n')));
    const std::string csv = slurp(dir / "results.csv");
    CHECK(csv.find("trial,faces,betti_rational,torsion_order") != std::string::npos);
    CHECK(csv.find("# summary max_torsion_order=1 ") != std::string::npos);
    fs::remove_all(root);
}

TEST_CASE("face-count report") {
    const CmdResult res = run("face-count --n 20 --d 2 --trials 10 --seed 1");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["p"] == 1.0);  // 40 d log(n)/n clamps at n=20
    CHECK(j["trials"] == 10);
    CHECK(j["fraction"] == 0.0);  // the floor exceeds C(20,3) at this scale
    CHECK(j["threshold_faces"].get<double>() > j["max_possible_faces"].get<double>());
}

TEST_CASE("format csv flattening") {
    const CmdResult res = run("--format csv face-count --n 20 --d 2 --trials 5 --seed 1");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.rfind("key,value\n", 0) == 0);
    CHECK(res.out.find("\nfraction,") != std::string::npos);
}

TEST_CASE("version flag") {
    const CmdResult res = run("--version");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("lmck 0.1.0") != std::string::npos);
}
