#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latbench/clock.hpp"
#include "latbench/flops.hpp"
#include "latbench/geometry.hpp"
#include "latbench/group.hpp"
#include "latbench/solver.hpp"

namespace latbench {

/// One benchmark setup. The three stock regimes fix the gauge group and the
/// fermion representation, which tune the compute-to-communication ratio:
///   comms   SU(2) adjoint      light on arithmetic per byte moved
///   balance SU(3) fundamental  the lattice-QCD-like middle ground
///   compute SU(6) fundamental  heavy arithmetic per byte moved
struct RegimeConfig {
  std::string test = "balance";
  int group_rank = 3;
  Representation rep = Representation::Fundamental;
  int spinor_fields = 6;  // >= 2 so kernels can cycle pairs
  double mass = 0.1;
  Coord4 lattice{64, 32, 32, 32};
  Coord4 grid{8, 8, 8, 8};
  double kernel_seconds = 60.0;  // time budget per kernel test
  bool consistency = true;
  CgSettings cg;
  uint64_t seed = 4096;
  bool enforce_floor = true;
  // reference machine FLOP/s per kernel; ratios are reported only when set
  std::optional<double> ref_sqnorm, ref_muladd, ref_dirac;

  int rep_dimension() const { return rep_dim(rep, group_rank); }
  void validate() const;  // throws ConfigError
};

/// Stock presets (full-scale 64x32^3 over an 8x8x8x8 grid). The shipped
/// parameter files override these for desk-scale runs.
RegimeConfig regime_preset(const std::string& name);

/// One parsed `key = value` line.
struct ParamOverride {
  int line;
  std::string key;
  std::string value;
};

/// Parse parameter-file text: one key = value per line, '#' comments and
/// blank lines ignored, whitespace around '=' ignored. Keys are validated
/// against the known set and values against their types; offending lines are
/// reported by number.
std::vector<ParamOverride> parse_params(const std::string& text);

/// Apply parsed overrides on top of a config. A `test` key resets the
/// config to that preset before the remaining keys apply.
void apply_overrides(RegimeConfig& cfg, const std::vector<ParamOverride>& overrides);

/// Load a parameter file and resolve the preset it builds on.
RegimeConfig config_from_file(const std::string& path);

struct KernelResult {
  std::string kernel;
  unsigned long long iterations = 0;  // always 2^k - 1
  double seconds = 0.0;
  unsigned long long flops = 0;  // exact integer bookkeeping
  double flops_per_sec = 0.0;
  double flops_per_sec_per_worker = 0.0;
  bool short_run = false;  // the very first batch already blew the budget
  std::optional<double> reference_ratio;
};

struct GeometrySummary {
  Coord4 lattice{}, grid{}, local{};
  int workers = 0;
};

/// Static model numbers carried in every report so regime comparisons do not
/// need a second run.
struct ModelSummary {
  long long sqnorm_flops_per_site = 0;
  long long muladd_flops_per_site = 0;
  long long dirac_flops_per_site = 0;
  unsigned long long halo_bytes_per_exchange = 0;  // spinor bytes, per worker
  double dirac_intensity = 0.0;  // dirac flops per halo byte, per application
};

struct BenchReport {
  int format_version = 1;
  std::string regime;
  std::string timestamp;
  GeometrySummary geometry;
  int group_rank = 0;
  std::string representation;
  double mass = 0.0;
  uint64_t seed = 0;
  std::vector<KernelResult> kernels;  // sqnorm, muladd, dirac — dirac is the
                                      // headline number
  ConsistencyResult consistency;
  ModelSummary model;
};

bool operator==(const KernelResult&, const KernelResult&);
bool operator==(const GeometrySummary&, const GeometrySummary&);
bool operator==(const ModelSummary&, const ModelSummary&);
bool operator==(const ConsistencyResult&, const ConsistencyResult&);
bool operator==(const BenchReport&, const BenchReport&);

/// Run the whole suite on this worker: random gauge + spinor fields, the
/// optional Dirac-inversion consistency check, then the three kernel tests
/// with doubling batches. Only the rank-0 return value carries the report.
BenchReport run_suite(const RegimeConfig& cfg, Worker& w, Clock& clock);

/// Coordinator entry point: spawns cfg.grid workers, runs the suite, returns
/// rank 0's report.
BenchReport run_benchmark(const RegimeConfig& cfg, Clock& clock);

enum class ReportFormat { Text, Json, Csv };
ReportFormat report_format_from_string(const std::string& name);

std::string format_report(const BenchReport& report, ReportFormat format);
BenchReport report_from_json(const std::string& text);

/// Model table used by the `model` subcommand and criterion checks.
ModelSummary model_summary(const RegimeConfig& cfg);

}  // namespace latbench
