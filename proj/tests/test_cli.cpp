#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <emm/emm.hpp>

namespace {

constexpr double kPi = emm::kPi;

const char* cli_bin() { return std::getenv("EMM_BIN"); }

struct CliRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliRun run_cli(const std::string& args) {
    static int counter = 0;
    const std::string tag = std::to_string(++counter);
    const std::string out_path = "/tmp/emm_cli_stdout_" + tag + ".txt";
    const std::string err_path = "/tmp/emm_cli_stderr_" + tag + ".txt";
    const std::string cmd = std::string(cli_bin()) + " " + args + " > " +
                            out_path + " 2> " + err_path;
    const int raw = std::system(cmd.c_str());
    CliRun r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

/// Value of a `key = value` stdout line.
double key_value(const std::string& text, const std::string& key) {
    for (const std::string& line : lines_of(text)) {
        const std::string prefix = key + " = ";
        if (line.rfind(prefix, 0) == 0) {
            return emm::parse_double(line.substr(prefix.size()));
        }
    }
    FAIL("missing key: " << key);
    return 0.0;
}

std::vector<double> split_csv_row(const std::string& row) {
    std::vector<double> vals;
    std::istringstream in(row);
    std::string field;
    while (std::getline(in, field, ',')) vals.push_back(emm::parse_double(field));
    return vals;
}

} // namespace

TEST_CASE("cli writes the default single-angle potential grid", "[cli]") {
    if (!cli_bin()) { SUCCEED("EMM_BIN not set"); return; }
    const std::string path = "/tmp/emm_test_curve.csv";
    const CliRun r = run_cli("potential --group su2 --scenario vacuum --out " + path);
    REQUIRE(r.exit_code == 0);

    const auto rows = lines_of(slurp(path));
    std::remove(path.c_str());
    REQUIRE(rows.size() == 402);  // header + [0, 4pi] in steps of pi/100
    REQUIRE(rows[0] == "phi,V");

    const auto first = split_csv_row(rows[1]);
    REQUIRE(first[0] == 0.0);
    REQUIRE(std::abs(first[1] - kPi * kPi / 45.0) < 1e-8);

    const auto last = split_csv_row(rows.back());
    REQUIRE(std::abs(last[0] - 4.0 * kPi) < 1e-9);
    REQUIRE(std::abs(last[1] - first[1]) < 1e-9);  // full period
}

TEST_CASE("cli writes the two-angle potential grid", "[cli]") {
    if (!cli_bin()) { SUCCEED("EMM_BIN not set"); return; }
    const std::string path = "/tmp/emm_test_grid.csv";
    const CliRun r = run_cli("potential --group su3 --out " + path);
    REQUIRE(r.exit_code == 0);

    const auto rows = lines_of(slurp(path));
    std::remove(path.c_str());
    REQUIRE(rows.size() == 1 + 101 * 101);  // header + [0, 2pi]^2, step pi/50
    REQUIRE(rows[0] == "phi1,phi2,V");

    const auto origin = split_csv_row(rows[1]);
    REQUIRE(origin[0] == 0.0);
    REQUIRE(origin[1] == 0.0);
    REQUIRE(std::abs(origin[2] + 4.0 * kPi * kPi / 15.0) < 1e-8);
}

TEST_CASE("cli reports exact energies and writes run records", "[cli]") {
    if (!cli_bin()) { SUCCEED("EMM_BIN not set"); return; }
    const std::string path = "/tmp/emm_test_exact.json";
    const CliRun r = run_cli("exact --group su2 --scenario vacuum --out " + path);
    REQUIRE(r.exit_code == 0);
    REQUIRE(std::abs(key_value(r.out, "exact_energy") - (-0.515590361418)) < 1e-9);
    REQUIRE(key_value(r.out, "n_qubits") == 4.0);

    const nlohmann::json rec = nlohmann::json::parse(slurp(path));
    std::remove(path.c_str());
    REQUIRE(rec.at("group") == "su2");
    REQUIRE(rec.at("scenario") == "vacuum");
    REQUIRE(rec.at("levels") == 16);
    REQUIRE(rec.at("n_qubits") == 4);
    REQUIRE(std::abs(rec.at("exact_energy").get<double>() - (-0.515590361418)) <
            1e-9);
    REQUIRE(rec.at("wall_time_seconds").get<double>() > 0.0);
    REQUIRE(rec.at("vqe_energy").is_null());
    REQUIRE(rec.at("pauli_term_count").is_null());
    REQUIRE(rec.at("seed").is_null());
}

TEST_CASE("cli string expansion round-trips through its file format", "[cli]") {
    if (!cli_bin()) { SUCCEED("EMM_BIN not set"); return; }
    const std::string path = "/tmp/emm_test_terms.txt";
    const CliRun r = run_cli(
        "paulis --group su2 --scenario vacuum --threshold 1e-10 --out " + path);
    REQUIRE(r.exit_code == 0);
    REQUIRE(key_value(r.out, "pauli_terms") == 71.0);

    const emm::PauliSum sum = emm::parse_pauli_sum(slurp(path));
    std::remove(path.c_str());
    REQUIRE(sum.terms.size() == 71);
    REQUIRE(sum.n_qubits == 4);

    emm::ModelSpec spec;
    spec.group = emm::Group::SU2;
    spec.scenario = emm::Scenario::Vacuum;
    emm::TruncationConfig trunc{16};
    const emm::Matrix h = emm::build_hamiltonian(spec, trunc).op;
    // Terms below the threshold were dropped, so the reconstruction matches
    // up to the discarded weight.
    REQUIRE((emm::reconstruct(sum) - h).cwiseAbs().maxCoeff() < 1e-7);
}

TEST_CASE("cli variational runs emit traces and full run records", "[cli]") {
    if (!cli_bin()) { SUCCEED("EMM_BIN not set"); return; }
    const std::string trace_path = "/tmp/emm_test_trace.csv";
    const std::string json_path = "/tmp/emm_test_vqe.json";
    const CliRun r = run_cli(
        "vqe --group su2 --scenario vacuum --levels 4 --depth 2 --restarts 3 "
        "--seed 5 --trace " + trace_path + " --out " + json_path);
    REQUIRE(r.exit_code == 0);

    const double gap = key_value(r.out, "vqe_gap");
    REQUIRE(std::abs(gap) < 1e-6);
    const double evals = key_value(r.out, "evaluations");

    const auto trace_rows = lines_of(slurp(trace_path));
    REQUIRE(trace_rows[0] == "evaluation,energy");
    REQUIRE(trace_rows.size() == static_cast<std::size_t>(evals) + 1);
    const auto first = split_csv_row(trace_rows[1]);
    REQUIRE(first[0] == 0.0);

    const nlohmann::json rec = nlohmann::json::parse(slurp(json_path));
    REQUIRE(rec.at("levels") == 4);
    REQUIRE(rec.at("n_qubits") == 2);
    REQUIRE(rec.at("pauli_term_count") == 5);
    REQUIRE(rec.at("restarts") == 3);
    REQUIRE(rec.at("seed") == 5);
    REQUIRE_FALSE(rec.at("vqe_energy").is_null());
    REQUIRE(std::abs(rec.at("vqe_gap").get<double>()) < 1e-6);
    REQUIRE(rec.at("wall_time_seconds").get<double>() > 0.0);

    SECTION("repeat runs are deterministic apart from wall time") {
        const std::string trace2 = "/tmp/emm_test_trace2.csv";
        const std::string json2 = "/tmp/emm_test_vqe2.json";
        const CliRun r2 = run_cli(
            "vqe --group su2 --scenario vacuum --levels 4 --depth 2 --restarts 3 "
            "--seed 5 --trace " + trace2 + " --out " + json2);
        REQUIRE(r2.exit_code == 0);
        REQUIRE(r2.out == r.out);
        REQUIRE(slurp(trace2) == slurp(trace_path));

        nlohmann::json a = nlohmann::json::parse(slurp(json_path));
        nlohmann::json b = nlohmann::json::parse(slurp(json2));
        a.erase("wall_time_seconds");
        b.erase("wall_time_seconds");
        REQUIRE(a == b);
        std::remove(trace2.c_str());
        std::remove(json2.c_str());
    }

    std::remove(trace_path.c_str());
    std::remove(json_path.c_str());
}

TEST_CASE("cli exit codes separate usage errors from contract failures", "[cli]") {
    if (!cli_bin()) { SUCCEED("EMM_BIN not set"); return; }

    REQUIRE(run_cli("--help").exit_code == 0);
    REQUIRE(run_cli("exact --help").exit_code == 0);

    REQUIRE(run_cli("").exit_code == 2);                       // no subcommand
    REQUIRE(run_cli("frobnicate").exit_code == 2);             // unknown subcommand
    REQUIRE(run_cli("exact --group su4").exit_code == 2);      // bad enum value
    REQUIRE(run_cli("exact --levels 12").exit_code == 2);      // not a power of two
    REQUIRE(run_cli("exact --scenario density --mu 4.0").exit_code == 2);
    REQUIRE(run_cli("exact --group su3 --scenario thermal --beta 1").exit_code == 2);
    REQUIRE(run_cli("vqe --levels 4 --restarts 0").exit_code == 2);
    REQUIRE(run_cli("potential --phi-step -0.5").exit_code == 2);
    REQUIRE(run_cli("exact --scenario thermal --beta -1").exit_code == 2);

    const CliRun bad = run_cli("exact --scenario density --mu 4.0");
    REQUIRE(bad.err.find("config error") != std::string::npos);
}

TEST_CASE("cli thermal and density options reach the model", "[cli]") {
    if (!cli_bin()) { SUCCEED("EMM_BIN not set"); return; }

    const CliRun th = run_cli(
        "exact --scenario thermal --beta 1 --thermal-form double_sum");
    REQUIRE(th.exit_code == 0);
    REQUIRE(std::abs(key_value(th.out, "exact_energy") - (-0.399731111811)) < 1e-9);

    const CliRun hi = run_cli(
        "exact --scenario thermal --beta 1 --thermal-form high_t --include-constants");
    REQUIRE(hi.exit_code == 0);
    REQUIRE(std::abs(key_value(hi.out, "exact_energy") - (-6.264796666855)) < 1e-9);

    const CliRun de = run_cli(
        "exact --scenario density --mu 1.5707963267948966 --density-domain raw");
    REQUIRE(de.exit_code == 0);
    REQUIRE(std::abs(key_value(de.out, "exact_energy") - (-10.307108390450)) < 1e-9);

    const CliRun su3 = run_cli("exact --group su3");
    REQUIRE(su3.exit_code == 0);
    REQUIRE(std::abs(key_value(su3.out, "exact_energy") - (-1.197933263088)) < 1e-8);
    REQUIRE(key_value(su3.out, "n_qubits") == 8.0);
}
