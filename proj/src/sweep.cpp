#include "imcsim/sweep.hpp"

namespace imcsim {

std::vector<PeakRow> evaluate_peak(const std::vector<SystemConfig>& points, Exec exec) {
  return indexed_map<PeakRow>(
      points.size(),
      [&](std::size_t i) {
        const SystemConfig& sys = points[i];
        return PeakRow{sys, macro_metrics(sys.params, sys.macro), peak_system_metrics(sys)};
      },
      exec);
}

std::vector<LayerRow> evaluate_layers(const std::vector<SystemConfig>& points,
                                      const std::vector<Network>& networks, Objective objective,
                                      Exec exec) {
  struct Job {
    std::size_t point;
    const Network* net;
    const NetworkEntry* entry;
  };
  std::vector<Job> jobs;
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (const Network& net : networks) {
      for (const NetworkEntry& e : net.layers) jobs.push_back({p, &net, &e});
    }
  }
  // Parallelism is across jobs; each mapping search runs serially inside.
  return indexed_map<LayerRow>(
      jobs.size(),
      [&](std::size_t i) {
        const Job& j = jobs[i];
        const SystemConfig& sys = points[j.point];
        return LayerRow{sys, j.net->name, j.entry->layer, j.entry->repeat,
                        layer_system_metrics(sys, j.entry->layer, objective, Exec::Serial)};
      },
      exec);
}

std::vector<std::uint64_t> pow2_sizes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = lo; s <= hi; s *= 2) out.push_back(s);
  return out;
}

}  // namespace imcsim
