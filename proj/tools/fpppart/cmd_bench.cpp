#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "fpppart/errors.hpp"
#include "fpppart/metrics.hpp"
#include "fpppart/partitioner.hpp"
#include "commands.hpp"
#include "graph_spec.hpp"
#include "logging.hpp"

namespace fpp::cli {

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int run_bench(const BenchArgs& args) {
  const auto edges = drain(*open_graph_spec(args.graph));
  log_info("bench graph '" + args.graph + "': " + std::to_string(edges.size()) + " edges");

  std::vector<Method> methods;
  for (const auto& name : split_csv(args.methods)) {
    const auto m = method_from_name(name);
    if (!m) throw ConfigError("unknown method '" + name + "'");
    methods.push_back(*m);
  }
  std::vector<uint64_t> parts_list;
  for (const auto& p : split_csv(args.parts_list)) parts_list.push_back(std::stoull(p));
  if (methods.empty() || parts_list.empty()) {
    throw ConfigError("bench needs at least one method and one partition count");
  }

  std::ostringstream csv;
  csv << "method,parts,edges,setup_seconds,partition_seconds,balance,rf,max_replicas\n";
  for (Method method : methods) {
    for (uint64_t parts : parts_list) {
      PartitionerConfig cfg;
      cfg.method = method;
      cfg.parts = parts;
      cfg.seed = args.seed;

      const auto t0 = std::chrono::steady_clock::now();
      const auto part = EdgePartitioner::make(cfg);
      const auto t1 = std::chrono::steady_clock::now();

      std::vector<uint32_t> pids(edges.size());
      for (size_t i = 0; i < edges.size(); ++i) pids[i] = part.assign(edges[i].u, edges[i].v);
      const auto t2 = std::chrono::steady_clock::now();

      MetricsAccumulator acc(parts);
      for (size_t i = 0; i < edges.size(); ++i) acc.add({edges[i].u, edges[i].v, pids[i]});
      const auto report = acc.finalize();

      csv << method_name(method) << ',' << parts << ',' << edges.size() << ','
          << std::chrono::duration<double>(t1 - t0).count() << ','
          << std::chrono::duration<double>(t2 - t1).count() << ',' << report.balance << ','
          << report.rf << ',' << report.max_replicas << '\n';
    }
  }

  if (args.output.empty()) {
    std::cout << csv.str();
    return 0;
  }
  std::ofstream out(args.output);
  if (!out) throw IoError("cannot write " + args.output);
  out << csv.str();
  return 0;
}

}  // namespace fpp::cli
