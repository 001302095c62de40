#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "nucresp/lattice.hpp"
#include "nucresp/simulator.hpp"
#include "nucresp/triton.hpp"

namespace nucresp {

/// Everything a reproducible run needs: the seed fully determines all
/// sampled output. Values come from a flat key-value config file with
/// dotted section prefixes; command-line flags override file entries and
/// the NUCRESP_SEED environment variable overrides both.
struct RunConfig {
  std::uint64_t seed = 20190923;
  LatticeSpec lattice;
  TritonParams triton;
  NoiseModel noise;
  std::string output_dir = ".";
  std::string format = "csv";  // csv | json

  /// Independent generator for the run with the given index.
  std::mt19937_64 rng_for(std::uint64_t run_index) const;
};

/// Parse "key = value" lines; '#' starts a comment. Unknown keys are
/// rejected so typos surface instead of silently using defaults.
RunConfig load_config(const std::string& path);
RunConfig config_from_entries(const std::map<std::string, std::string>& entries);

/// Apply the NUCRESP_SEED override if the variable is set.
void apply_env_overrides(RunConfig& config);

}  // namespace nucresp
