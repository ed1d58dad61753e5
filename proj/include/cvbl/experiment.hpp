#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cvbl/chain.hpp"
#include "cvbl/linops.hpp"
#include "cvbl/signals.hpp"

namespace cvbl {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full experiment description parsed from a flat key = value config file.
/// Field names are part of the public interface; see README for the schema.
struct ExperimentConfig {
  SignalSpec signal;
  OperatorSpec op;
  SparsifierSpec sparsifier;
  double snr_db = 20.0;
  std::string sampler = "cvbl_transform";
  ChainConfig chain;  // sigma2 is derived from snr_db at run time
  bool lasso_on = true;
  std::vector<double> alphas{1.0};
  std::uint64_t chain_seed = 1;
  std::uint64_t noise_seed = 2;
  std::vector<int> kde_pixels;
  std::string output_dir = "out";
  std::string config_hash;
  std::vector<std::pair<std::string, std::string>> entries;  // canonical key order
};

ExperimentConfig parse_experiment_config(const std::string& path);

/// Structural checks beyond parsing (dimensions, sampler/operator pairing,
/// burn-in < chain length). Throws ConfigError.
void validate_experiment(const ExperimentConfig& cfg);

/// Run the experiment end to end and write all artifacts into output_dir.
/// Returns the process exit code (0 on success). Failures still write a
/// manifest with status and message.
int run_experiment(const std::string& config_path);

/// Recompute and print the posterior summary for an existing output directory.
int summarize_output(const std::string& output_dir);

/// Worker count for the baseline alpha sweep, from CVBL_WORKERS (default 1).
int worker_count();

}  // namespace cvbl
