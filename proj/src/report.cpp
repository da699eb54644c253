#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "latbench/bench.hpp"
#include "latbench/errors.hpp"

namespace latbench {

using nlohmann::json;

bool operator==(const KernelResult& a, const KernelResult& b) {
  return a.kernel == b.kernel && a.iterations == b.iterations && a.seconds == b.seconds &&
         a.flops == b.flops && a.flops_per_sec == b.flops_per_sec &&
         a.flops_per_sec_per_worker == b.flops_per_sec_per_worker &&
         a.short_run == b.short_run && a.reference_ratio == b.reference_ratio;
}

bool operator==(const GeometrySummary& a, const GeometrySummary& b) {
  return a.lattice == b.lattice && a.grid == b.grid && a.local == b.local &&
         a.workers == b.workers;
}

bool operator==(const ModelSummary& a, const ModelSummary& b) {
  return a.sqnorm_flops_per_site == b.sqnorm_flops_per_site &&
         a.muladd_flops_per_site == b.muladd_flops_per_site &&
         a.dirac_flops_per_site == b.dirac_flops_per_site &&
         a.halo_bytes_per_exchange == b.halo_bytes_per_exchange &&
         a.dirac_intensity == b.dirac_intensity;
}

bool operator==(const ConsistencyResult& a, const ConsistencyResult& b) {
  return a.status == b.status && a.iterations == b.iterations && a.residual == b.residual &&
         a.seconds == b.seconds;
}

bool operator==(const BenchReport& a, const BenchReport& b) {
  return a.format_version == b.format_version && a.regime == b.regime &&
         a.timestamp == b.timestamp && a.geometry == b.geometry &&
         a.group_rank == b.group_rank && a.representation == b.representation &&
         a.mass == b.mass && a.seed == b.seed && a.kernels == b.kernels &&
         a.consistency == b.consistency && a.model == b.model;
}

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw ConfigError("unknown output format '" + name + "'");
}

namespace {

json kernel_to_json(const KernelResult& k) {
  json j{{"kernel", k.kernel},
         {"iterations", k.iterations},
         {"seconds", k.seconds},
         {"flops", k.flops},
         {"flops_per_sec", k.flops_per_sec},
         {"flops_per_sec_per_worker", k.flops_per_sec_per_worker},
         {"short_run", k.short_run}};
  if (k.reference_ratio)
    j["reference_ratio"] = *k.reference_ratio;
  else
    j["reference_ratio"] = nullptr;
  return j;
}

KernelResult kernel_from_json(const json& j) {
  KernelResult k;
  k.kernel = j.at("kernel").get<std::string>();
  k.iterations = j.at("iterations").get<unsigned long long>();
  k.seconds = j.at("seconds").get<double>();
  k.flops = j.at("flops").get<unsigned long long>();
  k.flops_per_sec = j.at("flops_per_sec").get<double>();
  k.flops_per_sec_per_worker = j.at("flops_per_sec_per_worker").get<double>();
  k.short_run = j.at("short_run").get<bool>();
  if (!j.at("reference_ratio").is_null()) k.reference_ratio = j.at("reference_ratio").get<double>();
  return k;
}

ConsistencyResult::Status status_from_string(const std::string& s) {
  if (s == "not_run") return ConsistencyResult::Status::NotRun;
  if (s == "passed") return ConsistencyResult::Status::Passed;
  if (s == "failed") return ConsistencyResult::Status::Failed;
  throw ConfigError("unknown consistency status '" + s + "'");
}

std::string fmt_coord(const Coord4& c) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%dx%dx%dx%d", c[0], c[1], c[2], c[3]);
  return buf;
}

std::string to_text(const BenchReport& r) {
  std::ostringstream os;
  char line[256];
  os << "latbench report (format " << r.format_version << ")\n";
  os << "  regime         " << r.regime << "  [SU(" << r.group_rank << "), "
     << r.representation << "]\n";
  os << "  lattice        " << fmt_coord(r.geometry.lattice) << "  grid "
     << fmt_coord(r.geometry.grid) << "  local " << fmt_coord(r.geometry.local) << "  workers "
     << r.geometry.workers << "\n";
  os << "  mass           " << r.mass << "\n";
  os << "  seed           " << r.seed << "\n";
  os << "  timestamp      " << r.timestamp << "\n";
  os << "  consistency    " << to_string(r.consistency.status);
  if (r.consistency.status != ConsistencyResult::Status::NotRun) {
    std::snprintf(line, sizeof(line), " (%ld iterations, residual %.3e, %.3f s)",
                  r.consistency.iterations, r.consistency.residual, r.consistency.seconds);
    os << line;
  }
  os << "\n\n";
  std::snprintf(line, sizeof(line), "  %-8s %12s %12s %16s %14s %14s %10s\n", "kernel",
                "iterations", "seconds", "FLOP", "FLOP/s", "FLOP/s/worker", "vs ref");
  os << line;
  for (const auto& k : r.kernels) {
    std::string ref = "-";
    if (k.reference_ratio) {
      std::snprintf(line, sizeof(line), "%.3f", *k.reference_ratio);
      ref = line;
    }
    std::snprintf(line, sizeof(line), "  %-8s %12llu %12.4f %16llu %14.5e %14.5e %10s%s\n",
                  k.kernel.c_str(), k.iterations, k.seconds, k.flops, k.flops_per_sec,
                  k.flops_per_sec_per_worker, ref.c_str(), k.short_run ? "  (short run)" : "");
    os << line;
  }
  os << "\n  the dirac line is the headline figure for machine comparisons\n";
  std::snprintf(line, sizeof(line),
                "  model: dirac %lld flop/site, halo %llu B/exchange/worker, "
                "intensity %.3f flop/B\n",
                r.model.dirac_flops_per_site, r.model.halo_bytes_per_exchange,
                r.model.dirac_intensity);
  os << line;
  return os.str();
}

std::string to_csv(const BenchReport& r) {
  std::ostringstream os;
  os << "kernel,iterations,seconds,flops,flops_per_sec,flops_per_sec_per_worker\n";
  char line[256];
  for (const auto& k : r.kernels) {
    std::snprintf(line, sizeof(line), "%s,%llu,%.9e,%llu,%.9e,%.9e\n", k.kernel.c_str(),
                  k.iterations, k.seconds, k.flops, k.flops_per_sec, k.flops_per_sec_per_worker);
    os << line;
  }
  return os.str();
}

}  // namespace

std::string format_report(const BenchReport& r, ReportFormat format) {
  if (format == ReportFormat::Text) return to_text(r);
  if (format == ReportFormat::Csv) return to_csv(r);

  json j;
  j["format_version"] = r.format_version;
  j["regime"] = r.regime;
  j["timestamp"] = r.timestamp;
  j["geometry"] = {{"lattice", r.geometry.lattice},
                   {"grid", r.geometry.grid},
                   {"local", r.geometry.local},
                   {"workers", r.geometry.workers}};
  j["group_rank"] = r.group_rank;
  j["representation"] = r.representation;
  j["mass"] = r.mass;
  j["seed"] = r.seed;
  j["kernels"] = json::array();
  for (const auto& k : r.kernels) j["kernels"].push_back(kernel_to_json(k));
  j["consistency"] = {{"status", to_string(r.consistency.status)},
                      {"iterations", r.consistency.iterations},
                      {"residual", r.consistency.residual},
                      {"seconds", r.consistency.seconds}};
  j["model"] = {{"sqnorm_flops_per_site", r.model.sqnorm_flops_per_site},
                {"muladd_flops_per_site", r.model.muladd_flops_per_site},
                {"dirac_flops_per_site", r.model.dirac_flops_per_site},
                {"halo_bytes_per_exchange", r.model.halo_bytes_per_exchange},
                {"dirac_intensity", r.model.dirac_intensity}};
  return j.dump(2) + "\n";
}

BenchReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad report json: ") + e.what());
  }
  BenchReport r;
  r.format_version = j.at("format_version").get<int>();
  if (r.format_version != 1)
    throw ConfigError("unsupported report format_version " + std::to_string(r.format_version));
  r.regime = j.at("regime").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  const auto& g = j.at("geometry");
  r.geometry.lattice = g.at("lattice").get<Coord4>();
  r.geometry.grid = g.at("grid").get<Coord4>();
  r.geometry.local = g.at("local").get<Coord4>();
  r.geometry.workers = g.at("workers").get<int>();
  r.group_rank = j.at("group_rank").get<int>();
  r.representation = j.at("representation").get<std::string>();
  r.mass = j.at("mass").get<double>();
  r.seed = j.at("seed").get<uint64_t>();
  for (const auto& k : j.at("kernels")) r.kernels.push_back(kernel_from_json(k));
  const auto& c = j.at("consistency");
  r.consistency.status = status_from_string(c.at("status").get<std::string>());
  r.consistency.iterations = c.at("iterations").get<long>();
  r.consistency.residual = c.at("residual").get<double>();
  r.consistency.seconds = c.at("seconds").get<double>();
  const auto& m = j.at("model");
  r.model.sqnorm_flops_per_site = m.at("sqnorm_flops_per_site").get<long long>();
  r.model.muladd_flops_per_site = m.at("muladd_flops_per_site").get<long long>();
  r.model.dirac_flops_per_site = m.at("dirac_flops_per_site").get<long long>();
  r.model.halo_bytes_per_exchange = m.at("halo_bytes_per_exchange").get<unsigned long long>();
  r.model.dirac_intensity = m.at("dirac_intensity").get<double>();
  return r;
}

}  // namespace latbench
