#include "latbench/bench.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "latbench/errors.hpp"
#include "latbench/kernels.hpp"
#include "latbench/transport.hpp"

namespace latbench {

void RegimeConfig::validate() const {
  rep_dim(rep, group_rank);  // throws on bad rank
  if (spinor_fields < 2) throw ConfigError("spinor_fields must be >= 2 to cycle field pairs");
  if (kernel_seconds <= 0.0) throw ConfigError("kernel_seconds must be positive");
  if (!(cg.tolerance > 0.0 && cg.tolerance < 1.0))
    throw ConfigError("cg_tolerance must lie in (0, 1)");
  if (cg.max_iterations < 1) throw ConfigError("cg_max_iterations must be >= 1");
  for (int d = 0; d < 4; ++d)
    if (lattice[d] <= 0 || grid[d] <= 0)
      throw ConfigError("lattice extents and grid entries must be positive");
}

RegimeConfig regime_preset(const std::string& name) {
  RegimeConfig cfg;
  cfg.test = name;
  if (name == "comms") {
    cfg.group_rank = 2;
    cfg.rep = Representation::Adjoint;
  } else if (name == "balance") {
    cfg.group_rank = 3;
    cfg.rep = Representation::Fundamental;
  } else if (name == "compute") {
    cfg.group_rank = 6;
    cfg.rep = Representation::Fundamental;
  } else {
    throw ConfigError("unknown test '" + name + "' (expected comms, balance or compute)");
  }
  return cfg;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v) {
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0') throw ConfigError("expected a number, got '" + v + "'");
  return x;
}

long long parse_int(const std::string& v) {
  char* end = nullptr;
  const long long x = std::strtoll(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0') throw ConfigError("expected an integer, got '" + v + "'");
  return x;
}

uint64_t parse_u64(const std::string& v) {
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0')
    throw ConfigError("expected an unsigned integer, got '" + v + "'");
  return x;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("expected a boolean, got '" + v + "'");
}

Coord4 parse_coord4(const std::string& v) {
  Coord4 c{};
  std::stringstream ss(v);
  std::string part;
  int i = 0;
  while (std::getline(ss, part, 'x')) {
    if (i >= 4) throw ConfigError("expected TxXxYxZ, got '" + v + "'");
    c[i++] = static_cast<int>(parse_int(part));
  }
  if (i != 4) throw ConfigError("expected TxXxYxZ, got '" + v + "'");
  return c;
}

void set_key(RegimeConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "test") {
    regime_preset(value);  // validates the name; the reset happens in apply_overrides
    cfg.test = value;
  } else if (key == "group_rank") {
    cfg.group_rank = static_cast<int>(parse_int(value));
  } else if (key == "representation") {
    cfg.rep = representation_from_string(value);
  } else if (key == "lattice") {
    cfg.lattice = parse_coord4(value);
  } else if (key == "grid") {
    cfg.grid = parse_coord4(value);
  } else if (key == "spinor_fields") {
    cfg.spinor_fields = static_cast<int>(parse_int(value));
  } else if (key == "mass") {
    cfg.mass = parse_double(value);
  } else if (key == "kernel_seconds") {
    cfg.kernel_seconds = parse_double(value);
  } else if (key == "consistency_check") {
    cfg.consistency = parse_bool(value);
  } else if (key == "cg_tolerance") {
    cfg.cg.tolerance = parse_double(value);
  } else if (key == "cg_max_iterations") {
    cfg.cg.max_iterations = static_cast<int>(parse_int(value));
  } else if (key == "seed") {
    cfg.seed = parse_u64(value);
  } else if (key == "enforce_local_floor") {
    cfg.enforce_floor = parse_bool(value);
  } else if (key == "reference_sqnorm_flops") {
    cfg.ref_sqnorm = parse_double(value);
  } else if (key == "reference_muladd_flops") {
    cfg.ref_muladd = parse_double(value);
  } else if (key == "reference_dirac_flops") {
    cfg.ref_dirac = parse_double(value);
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

}  // namespace

std::vector<ParamOverride> parse_params(const std::string& text) {
  std::vector<ParamOverride> out;
  std::stringstream ss(text);
  std::string raw;
  RegimeConfig scratch;  // value validation target
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected 'key = value' in '" + s + "'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) throw ParseError(line, "missing key before '='");
    try {
      set_key(scratch, key, value);
    } catch (const ConfigError& e) {
      throw ParseError(line, e.what());
    }
    out.push_back({line, key, value});
  }
  return out;
}

void apply_overrides(RegimeConfig& cfg, const std::vector<ParamOverride>& overrides) {
  // a test key rebases the config on that preset before other keys apply
  for (const auto& o : overrides)
    if (o.key == "test") cfg = regime_preset(o.value);
  for (const auto& o : overrides)
    if (o.key != "test") set_key(cfg, o.key, o.value);
}

RegimeConfig config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open parameter file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const auto overrides = parse_params(buf.str());
  RegimeConfig cfg;
  apply_overrides(cfg, overrides);
  return cfg;
}

namespace {

struct BenchContext {
  const RegimeConfig& cfg;
  const Geometry& geo;
  const ExchangePlan& plan;
  GaugeField& gauge;
  std::vector<SpinorField>& fields;
  Clock& clock;
};

KernelResult run_kernel_benchmark(BenchKernel kind, BenchContext& ctx, Worker& w) {
  const size_t nf = ctx.fields.size();
  const Cplx c(0.3, 0.7);  // mul-add constant; any nonzero value works
  const double budget = ctx.cfg.kernel_seconds;

  unsigned long long total = 0;
  unsigned long long cursor = 0;
  unsigned long long batch = 1;
  double wall = 0.0;

  w.barrier();
  const double t0 = (w.rank() == 0) ? ctx.clock.seconds() : 0.0;
  for (;;) {
    for (unsigned long long i = 0; i < batch; ++i, ++cursor) {
      SpinorField& a = ctx.fields[cursor % nf];
      SpinorField& b = ctx.fields[(cursor + 1) % nf];
      switch (kind) {
        case BenchKernel::SqNorm: (void)sqnorm(a, w); break;
        case BenchKernel::MulAdd: mul_add(b, c, a); break;
        case BenchKernel::Dirac: apply_dirac(b, ctx.gauge, a, ctx.cfg.mass, w, ctx.plan); break;
      }
    }
    total += batch;
    // the clock is checked only at batch boundaries, and only rank 0 reads
    // it, so every worker agrees on the iteration count
    w.barrier();
    double elapsed = 0.0, stop = 0.0;
    if (w.rank() == 0) {
      elapsed = ctx.clock.seconds() - t0;
      stop = elapsed >= budget ? 1.0 : 0.0;
    }
    if (w.global_sum(stop) > 0.5) {
      wall = w.global_sum(elapsed);
      break;
    }
    batch *= 2;
  }

  KernelResult r;
  r.kernel = to_string(kind);
  r.iterations = total;
  r.seconds = wall;
  r.short_run = (total == 1);
  const long long per_site =
      flops_per_site(kind, ctx.cfg.rep_dimension(), rep_is_real(ctx.cfg.rep));
  r.flops = static_cast<unsigned long long>(per_site) * ctx.geo.global_volume() * total;
  const double dt = std::max(wall, 1e-12);
  r.flops_per_sec = static_cast<double>(r.flops) / dt;
  r.flops_per_sec_per_worker = r.flops_per_sec / ctx.geo.workers;

  std::optional<double> ref;
  switch (kind) {
    case BenchKernel::SqNorm: ref = ctx.cfg.ref_sqnorm; break;
    case BenchKernel::MulAdd: ref = ctx.cfg.ref_muladd; break;
    case BenchKernel::Dirac: ref = ctx.cfg.ref_dirac; break;
  }
  if (ref) r.reference_ratio = r.flops_per_sec / *ref;
  return r;
}

}  // namespace

ModelSummary model_summary(const RegimeConfig& cfg) {
  const Geometry geo = build_geometry(cfg.lattice, cfg.grid, 0, cfg.enforce_floor);
  const ExchangePlan plan = build_exchange_plan(geo);
  const int dr = cfg.rep_dimension();
  const bool real_rep = rep_is_real(cfg.rep);

  ModelSummary m;
  m.sqnorm_flops_per_site = flops_per_site(BenchKernel::SqNorm, dr, real_rep);
  m.muladd_flops_per_site = flops_per_site(BenchKernel::MulAdd, dr, real_rep);
  m.dirac_flops_per_site = flops_per_site(BenchKernel::Dirac, dr, real_rep);
  m.halo_bytes_per_exchange = plan.spinor_bytes(dr);
  m.dirac_intensity = static_cast<double>(m.dirac_flops_per_site) * geo.interior /
                      static_cast<double>(m.halo_bytes_per_exchange);
  return m;
}

BenchReport run_suite(const RegimeConfig& cfg, Worker& w, Clock& clock) {
  cfg.validate();
  int grid_workers = 1;
  for (int d = 0; d < 4; ++d) grid_workers *= cfg.grid[d];
  if (grid_workers != w.size())
    throw ContractViolation("worker group size does not match the configured grid");

  const Geometry geo = build_geometry(cfg.lattice, cfg.grid, w.rank(), cfg.enforce_floor);
  const ExchangePlan plan = build_exchange_plan(geo);
  GaugeField gauge = init_gauge_random(w, plan, geo, cfg.group_rank, cfg.rep, cfg.seed);

  const int dr = cfg.rep_dimension();
  std::vector<SpinorField> fields;
  fields.reserve(cfg.spinor_fields);
  for (int i = 0; i < cfg.spinor_fields; ++i)
    fields.push_back(init_spinor_random(geo, dr, cfg.seed, static_cast<uint64_t>(i)));

  ConsistencyResult cons;
  if (cfg.consistency) {
    cons = consistency_check(gauge, fields[0], cfg.mass, cfg.cg, w, plan, clock);
    // re-randomize the inverted field before it enters the kernel tests
    fields[0] = init_spinor_random(geo, dr, cfg.seed, static_cast<uint64_t>(cfg.spinor_fields));
  }

  BenchContext ctx{cfg, geo, plan, gauge, fields, clock};
  const KernelResult sq = run_kernel_benchmark(BenchKernel::SqNorm, ctx, w);
  const KernelResult ma = run_kernel_benchmark(BenchKernel::MulAdd, ctx, w);
  const KernelResult di = run_kernel_benchmark(BenchKernel::Dirac, ctx, w);

  BenchReport report;
  if (w.rank() != 0) return report;

  report.regime = cfg.test;
  report.timestamp = clock.timestamp();
  report.geometry = {cfg.lattice, cfg.grid, geo.local, geo.workers};
  report.group_rank = cfg.group_rank;
  report.representation = to_string(cfg.rep);
  report.mass = cfg.mass;
  report.seed = cfg.seed;
  report.kernels = {sq, ma, di};
  report.consistency = cons;
  report.model = model_summary(cfg);
  return report;
}

BenchReport run_benchmark(const RegimeConfig& cfg, Clock& clock) {
  cfg.validate();
  BenchReport report;
  run_workers(cfg.grid, [&](Worker& w) {
    BenchReport local = run_suite(cfg, w, clock);
    if (w.rank() == 0) report = std::move(local);
  });
  return report;
}

}  // namespace latbench
