#include "imcsim/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

#include "imcsim/config.hpp"
#include "imcsim/errors.hpp"
#include "imcsim/parallel.hpp"
#include "imcsim/sweep.hpp"
#include "imcsim/validation.hpp"

namespace imcsim {
namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kMinSize = 8;
constexpr std::uint64_t kMaxSize = 4096;

std::uint64_t parse_size(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("size '" + s + "' is not a number");
  }
  if (used != s.size()) throw std::invalid_argument("size '" + s + "' is not a number");
  if (v < kMinSize || v > kMaxSize || !is_power_of_two(v)) {
    throw std::invalid_argument("size " + s + " must be a power of two in [8, 4096]");
  }
  return v;
}

std::optional<fs::path> config_dir() {
  const char* dir = std::getenv(kConfigDirEnv);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return fs::path(dir);
}

ProjectConfig resolve_config(const RunSpec& spec) {
  const auto dir = config_dir();
  if (spec.config) {
    fs::path p = *spec.config;
    if (p.is_relative() && !fs::exists(p) && dir) p = *dir / p;
    return load_config(p);
  }
  if (dir && fs::exists(*dir / "default.json")) return load_config(*dir / "default.json");
  return ProjectConfig{};
}

std::vector<ImcType> selected_types(TypeSelection t) {
  switch (t) {
    case TypeSelection::Aimc:
      return {ImcType::Aimc};
    case TypeSelection::Dimc:
      return {ImcType::Dimc};
    case TypeSelection::Both:
      break;
  }
  return {ImcType::Aimc, ImcType::Dimc};
}

// Type-major, then ascending size.
std::vector<SystemConfig> design_points(const RunSpec& spec, const ProjectConfig& cfg) {
  std::vector<std::uint64_t> sizes = spec.sizes;
  if (sizes.empty() && spec.command == Command::Sweep) sizes = pow2_sizes(32, 1024);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  std::vector<SystemConfig> points;
  for (ImcType t : selected_types(spec.type)) {
    if (sizes.empty()) {
      points.push_back(cfg.system(t));
    } else {
      for (std::uint64_t s : sizes) points.push_back(cfg.system(t, s));
    }
  }
  for (const SystemConfig& p : points) validate(p);
  return points;
}

std::vector<Network> load_workloads(const RunSpec& spec) {
  std::vector<Network> nets;
  for (const fs::path& p : spec.workloads) nets.push_back(load_network(p));
  return nets;
}

void report_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  std::set<std::string> seen;
  for (const std::string& w : warnings) {
    if (seen.insert(w).second) err << "warning: " << w << '\n';
  }
}

Table build_table(const RunSpec& spec, const ProjectConfig& cfg, Exec exec,
                  std::vector<std::string>& warnings) {
  if (spec.command == Command::Validate) {
    const auto designs = validation_designs();
    std::vector<MacroMetrics> metrics;
    for (const ValidationDesign& d : designs) {
      metrics.push_back(macro_metrics(cfg.params, d.macro));
      warnings.insert(warnings.end(), metrics.back().warnings.begin(),
                      metrics.back().warnings.end());
    }
    return validation_table(designs, metrics);
  }

  const std::vector<SystemConfig> points = design_points(spec, cfg);
  const bool wants_workload = spec.command == Command::Layer || spec.command == Command::Network;
  if (wants_workload && spec.workloads.empty()) {
    throw ConfigError("--workload is required for the layer and network commands");
  }
  const std::vector<Network> nets = load_workloads(spec);

  if (spec.command == Command::Peak || (spec.command == Command::Sweep && nets.empty())) {
    auto rows = evaluate_peak(points, exec);
    for (const PeakRow& r : rows) {
      warnings.insert(warnings.end(), r.system.warnings.begin(), r.system.warnings.end());
    }
    return peak_table(rows);
  }

  if (spec.command == Command::Layer) {
    auto rows = evaluate_layers(points, nets, spec.objective, exec);
    for (const LayerRow& r : rows) {
      warnings.insert(warnings.end(), r.eval.metrics.warnings.begin(),
                      r.eval.metrics.warnings.end());
    }
    return layer_table(rows, spec.objective);
  }

  // network, or sweep with workloads: point-major cross product.
  const std::size_t n = points.size() * nets.size();
  auto rows = indexed_map<NetworkRow>(
      n,
      [&](std::size_t i) {
        const SystemConfig& sys = points[i / nets.size()];
        return NetworkRow{sys, network_system_metrics(sys, nets[i % nets.size()],
                                                      spec.objective, Exec::Serial)};
      },
      exec);
  for (const NetworkRow& r : rows) {
    warnings.insert(warnings.end(), r.eval.total.warnings.begin(), r.eval.total.warnings.end());
  }
  return network_table(rows, spec.objective);
}

// Temp file in the destination directory, then rename, so a failed run never
// leaves a truncated table behind.
void write_atomically(const fs::path& dest, const std::string& text) {
  fs::path tmp = dest;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot write output file " + dest.string());
    f << text;
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw ConfigError("cannot write output file " + dest.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, dest, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ConfigError("cannot write output file " + dest.string());
  }
}

}  // namespace

std::vector<std::uint64_t> parse_sizes(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::uint64_t lo = parse_size(text.substr(0, dots));
    const std::uint64_t hi = parse_size(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("size range '" + text + "' is empty");
    return pow2_sizes(lo, hi);
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_size(item));
  if (out.empty()) throw std::invalid_argument("empty size list");
  return out;
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    if (spec.jobs > 0) set_num_threads(spec.jobs);
    const Exec exec = spec.jobs == 1 ? Exec::Serial : Exec::Parallel;
    const ProjectConfig cfg = resolve_config(spec);
    std::vector<std::string> warnings;
    const std::string text = render(build_table(spec, cfg, exec, warnings), spec.format);
    report_warnings(warnings, err);
    if (spec.out) {
      write_atomically(*spec.out, text);
    } else {
      out << text;
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const EvaluationError& e) {
    err << "evaluation error: " << e.what() << '\n';
    return kExitEvaluation;
  } catch (const DomainError& e) {
    err << "evaluation error: " << e.what() << '\n';
    return kExitEvaluation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvaluation;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analytical energy/area/delay model for SRAM in-memory-computing macros"};
  app.require_subcommand(1);

  RunSpec spec;
  std::string config, out_path, sizes, type = "both", objective = "energy", format = "csv";
  std::vector<std::string> workloads;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "JSON config file");
    sub->add_option("--sizes", sizes, "array sizes, e.g. 32,64 or 32..1024");
    sub->add_option("--type", type, "aimc, dimc or both")
        ->check(CLI::IsMember({"aimc", "dimc", "both"}));
    sub->add_option("--objective", objective, "mapping objective")
        ->check(CLI::IsMember({"energy", "latency", "edp"}));
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "output file (default: stdout)");
    sub->add_option("--jobs", spec.jobs, "worker threads")->check(CLI::NonNegativeNumber);
  };

  const std::pair<const char*, Command> commands[] = {
      {"peak", Command::Peak},     {"layer", Command::Layer},
      {"network", Command::Network}, {"sweep", Command::Sweep},
      {"validate", Command::Validate}};
  const char* help[] = {"peak macro and system metrics per design point",
                        "best mapping and cost for every workload layer",
                        "per-layer and whole-network cost",
                        "peak (or workload) metrics over sizes x types",
                        "model estimates for the reference macro designs"};
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].first, help[i]);
    add_common(sub);
    if (commands[i].second != Command::Validate && commands[i].second != Command::Peak) {
      sub->add_option("--workload", workloads, "workload JSON file (repeatable)");
    }
    subs.emplace_back(sub, commands[i].second);
  }

  try {
    app.parse(argc, argv);
    for (const auto& [sub, cmd] : subs) {
      if (sub->parsed()) spec.command = cmd;
    }
    if (!sizes.empty()) spec.sizes = parse_sizes(sizes);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!config.empty()) spec.config = config;
  if (!out_path.empty()) spec.out = out_path;
  spec.workloads.assign(workloads.begin(), workloads.end());
  spec.type = type == "aimc" ? TypeSelection::Aimc
              : type == "dimc" ? TypeSelection::Dimc
                               : TypeSelection::Both;
  spec.objective = parse_objective(objective);
  spec.format = parse_format(format);
  return run(spec, out, err);
}

}  // namespace imcsim
