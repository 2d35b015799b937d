#pragma once

#include "entlab/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace entlab {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum class ExperimentKind {
  SampleEntropy,
  Tail,
  MinEnt,
  ScanSubspace,
  EfGap,
  Sdc,
  SdcRates,
  Distill,
  Cuts,
  NetAudit,
};

ExperimentKind parse_kind(const std::string& name);
std::string kind_name(ExperimentKind kind);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::SampleEntropy;
  int d_a = 2;
  int d_b = 2;
  int d = 2;          // qudit dimension for multipartite experiments
  int n_parties = 3;
  int s = 1;
  std::vector<int> s_values;       // scan-subspace; defaults derived from shape
  double alpha = 0.3;
  double c_const = 1.0;
  double epsilon = 0.5;
  std::vector<double> epsilons;    // net-audit; defaults {1.0, 0.8, 0.6}
  long trials = 1000;
  std::uint64_t seed = 0;
  int restarts = 5;
  int max_iters = 2000;
  double tol = 1e-6;
  int decomposition_samples = 8;
  int workers = 1;
  std::string out;                 // output path stem; empty = stdout only
  std::string format = "csv";      // what goes to stdout: csv | json

  /// Canonical JSON (sorted keys, stable number formatting).
  std::string canonical_json() const;
  /// FNV-1a hash of the canonical JSON, as fixed-width hex.
  std::string digest() const;

  /// Throws config_error when the kind's preconditions are violated.
  void validate() const;
};

/// Load from a JSON file; unknown keys are an error.
ExperimentConfig load_config(const std::string& path);

struct ResultRecord {
  ExperimentConfig config;
  std::string config_digest;
  std::string csv;            // per-trial rows, deterministic bytes
  std::string summary_json;   // summary + manifest
};

/// Dispatch, compute, and (when config.out is set) write <out>.csv and
/// <out>.json. Byte-identical CSV for identical config regardless of workers.
ResultRecord run(const ExperimentConfig& config);

/// Tidy series for external plotting, derived from a finished record
/// (e.g. -ln(p) against the concentration exponent for tail runs). Returns
/// the emitted file paths.
std::vector<std::string> emit_plotdata(const ResultRecord& record, const std::string& out_stem);

}  // namespace entlab
