#include "nucresp/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace nucresp {

std::mt19937_64 RunConfig::rng_for(std::uint64_t run_index) const {
  std::seed_seq seq{static_cast<std::uint64_t>(seed),
                    static_cast<std::uint64_t>(run_index),
                    std::uint64_t{0x9e3779b97f4a7c15}};
  return std::mt19937_64(seq);
}

namespace {
std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}
}  // namespace

RunConfig config_from_entries(const std::map<std::string, std::string>& entries) {
  RunConfig cfg;
  ConfusionMatrix readout{};
  bool have_readout = false;
  for (const auto& [key, raw] : entries) {
    const std::string value = trim(raw);
    try {
      if (key == "seed") cfg.seed = std::stoull(value);
      else if (key == "lattice.D") cfg.lattice.D = std::stoi(value);
      else if (key == "lattice.NL") cfg.lattice.N_L = std::stoi(value);
      else if (key == "lattice.Nf") cfg.lattice.N_f = std::stoi(value);
      else if (key == "lattice.a") cfg.lattice.a = std::stod(value);
      else if (key == "lattice.t") cfg.lattice.t = std::stod(value);
      else if (key == "lattice.C0") cfg.lattice.C0 = std::stod(value);
      else if (key == "lattice.D0") cfg.lattice.D0 = std::stod(value);
      else if (key == "lattice.A") cfg.lattice.A = std::stoi(value);
      else if (key == "lattice.bmax") cfg.lattice.b_max = std::stod(value);
      else if (key == "triton.t") cfg.triton.t = std::stod(value);
      else if (key == "triton.U") cfg.triton.U = std::stod(value);
      else if (key == "triton.V") cfg.triton.V = std::stod(value);
      else if (key == "noise.p2") cfg.noise.p2 = std::stod(value);
      else if (key == "noise.p0") { readout.p0 = std::stod(value); have_readout = true; }
      else if (key == "noise.p1") { readout.p1 = std::stod(value); have_readout = true; }
      else if (key == "noise.amplification") cfg.noise.amplification = std::stoi(value);
      else if (key == "output.dir") cfg.output_dir = value;
      else if (key == "output.format") cfg.format = value;
      else throw std::invalid_argument("unknown config key: " + key);
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad value for config key " + key + ": " + value);
    }
  }
  if (have_readout) cfg.noise.readout = {readout};
  if (cfg.format != "csv" && cfg.format != "json")
    throw std::invalid_argument("output.format must be csv or json");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::map<std::string, std::string> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return config_from_entries(entries);
}

void apply_env_overrides(RunConfig& config) {
  if (const char* env = std::getenv("NUCRESP_SEED")) {
    config.seed = std::stoull(env);
  }
}

}  // namespace nucresp
