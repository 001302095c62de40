#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// Smoke tests of the installed binary: these shell out, so the binary path
// comes from the NUCRESP_BIN environment variable set by the test harness.
namespace {
namespace fs = std::filesystem;

std::string binary() {
  const char* env = std::getenv("NUCRESP_BIN");
  REQUIRE_MESSAGE(env != nullptr, "NUCRESP_BIN must point at the CLI binary");
  return env;
}

int run(const std::string& args) {
  const std::string cmd = binary() + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_count(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  return lines;
}

struct TempDir {
  fs::path path;
  TempDir(const std::string& tag) : path(fs::temp_directory_path() / tag) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};
}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("estimate sweep emits one row per nucleon number") {
  TempDir dir("nucresp_cli_estimate");
  const int rc = run("--out " + dir.path.string() +
                     " estimate --A 4:100 --M 1000 --resolution 10");
  CHECK(rc == 0);
  const std::string csv = slurp(dir.path / "estimate.csv");
  CHECK(line_count(csv) == 98);  // header + 97 rows
  CHECK(csv.rfind("A,W,r_base,r_total_same,r_total_adaptive", 0) == 0);
}

TEST_CASE("gates headline lands at the expected magnitude") {
  TempDir dir("nucresp_cli_gates");
  const int rc = run("--out " + dir.path.string() +
                     " gates --A 40 --M 1000 --resolution 10 --split beta-kv "
                     "--order 2");
  CHECK(rc == 0);
  const std::string csv = slurp(dir.path / "gates.csv");
  std::stringstream ss(csv);
  std::string header, row;
  std::getline(ss, header);
  std::getline(ss, row);
  std::stringstream rs(row);
  std::string a, cnot, rz, qubits;
  std::getline(rs, a, ',');
  std::getline(rs, cnot, ',');
  std::getline(rs, rz, ',');
  std::getline(rs, qubits, ',');
  const double cnot_total = std::stod(cnot);
  CHECK(cnot_total > 3e9);
  CHECK(cnot_total < 3e10);
  CHECK(qubits == "4012");
}

TEST_CASE("qubitize reports the walk comparison") {
  TempDir dir("nucresp_cli_qubitize");
  const int rc = run("--out " + dir.path.string() +
                     " qubitize --A 40 --M 1000 --resolution 10");
  CHECK(rc == 0);
  const std::string csv = slurp(dir.path / "qubitize.csv");
  std::stringstream ss(csv);
  std::string header, row;
  std::getline(ss, header);
  std::getline(ss, row);
  const auto last_comma = row.rfind(',');
  const double ratio = std::stod(row.substr(last_comma + 1));
  CHECK(ratio >= 64.0);
  CHECK(ratio <= 256.0);
}

TEST_CASE("triton groundstate prints the two energies") {
  TempDir dir("nucresp_cli_gs");
  const int rc = run("--out " + dir.path.string() + " triton groundstate");
  CHECK(rc == 0);
  const auto j =
      nlohmann::json::parse(slurp(dir.path / "triton_groundstate.json"));
  CHECK(std::abs(j["exact"]["energy"].get<double>() - (-4.843)) < 0.002);
  CHECK(std::abs(j["trial"]["energy"].get<double>() - (-4.415)) < 0.01);
}

TEST_CASE("exact evolution stays inside probability bounds") {
  TempDir dir("nucresp_cli_evolve");
  const int rc = run("--out " + dir.path.string() +
                     " triton evolve --mode exact --t-max 0.6 --points 61");
  CHECK(rc == 0);
  const std::string csv = slurp(dir.path / "triton_evolve.csv");
  std::stringstream ss(csv);
  std::string line;
  std::getline(ss, line);  // header
  std::size_t rows = 0;
  while (std::getline(ss, line)) {
    ++rows;
    std::stringstream rs(line);
    std::string cell;
    std::getline(rs, cell, ',');  // time
    for (int c = 0; c < 3; ++c) {
      std::getline(rs, cell, ',');
      const double v = std::stod(cell);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
  CHECK(rows == 61);
}

TEST_CASE("seeded noisy runs are byte-identical across repeats") {
  TempDir dir1("nucresp_cli_det1");
  TempDir dir2("nucresp_cli_det2");
  const std::string args =
      " triton evolve --mode trotter --steps 1 --t-max 0.2 --points 5 "
      "--noise defaults --shots 2048 --mitigate --seed 7";
  CHECK(run("--out " + dir1.path.string() + args) == 0);
  CHECK(run("--out " + dir2.path.string() + args) == 0);
  CHECK(slurp(dir1.path / "triton_evolve.csv") ==
        slurp(dir2.path / "triton_evolve.csv"));
  CHECK(slurp(dir1.path / "triton_evolve_mitigation.json") ==
        slurp(dir2.path / "triton_evolve_mitigation.json"));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("estimate --A 100:4 --M 1000") == 2);
  CHECK(run("gates --M 1001") == 2);  // not a cube
  CHECK(run("triton evolve --mitigate") == 2);  // mitigation without noise
  CHECK(run("definitely-not-a-command") == 2);
}

TEST_CASE("mitigate consumes a runs file") {
  TempDir dir("nucresp_cli_mitigate");
  // synthesize decaying histograms toward the depolarized plateau
  nlohmann::json runs = nlohmann::json::array();
  for (int k : {1, 3, 5, 7}) {
    const double signal = 0.0625 + 0.7 * std::pow(0.9, k);
    const std::uint64_t hot = static_cast<std::uint64_t>(8192 * signal);
    const std::uint64_t rest = 8192 - hot;
    nlohmann::json counts;
    counts["0000"] = hot;
    std::uint64_t assigned = 0;
    for (int i = 1; i < 16; ++i) {
      std::string bits;
      for (int b = 3; b >= 0; --b) bits += ((i >> b) & 1) ? '1' : '0';
      const std::uint64_t c = (i < 15) ? rest / 15 : rest - assigned;
      assigned += c;
      counts[bits] = c;
    }
    runs.push_back({{"k", k},
                    {"distribution", {{"shots", 8192}, {"counts", counts}}}});
  }
  const fs::path input = dir.path / "runs.json";
  std::ofstream(input) << runs.dump();
  const int rc = run("--out " + dir.path.string() + " mitigate --input " +
                     input.string() + " --depolarized 0.0625 --filter A2");
  CHECK(rc == 0);
  const auto rep = nlohmann::json::parse(slurp(dir.path / "mitigate.json"));
  CHECK(rep.contains("strategies"));
  CHECK(rep.contains("filter_level"));
  CHECK(rep["value"].get<double>() > 0.5);
}

TEST_SUITE_END();
