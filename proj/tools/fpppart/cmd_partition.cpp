#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <json.hpp>

#include "fpppart/assignment_io.hpp"
#include "fpppart/errors.hpp"
#include "fpppart/metrics.hpp"
#include "fpppart/partitioner.hpp"
#include "fpppart/version.hpp"
#include "commands.hpp"
#include "logging.hpp"

namespace fpp::cli {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PartitionerConfig to_config(const PartitionArgs& args) {
  PartitionerConfig cfg;
  const auto method = method_from_name(args.method);
  if (!method) throw ConfigError("unknown method '" + args.method + "'");
  cfg.method = *method;
  cfg.parts = args.parts;
  cfg.seed = args.seed;
  if (args.surplus == "empty") {
    cfg.surplus = SurplusPolicy::LeaveEmpty;
  } else if (args.surplus == "fold") {
    cfg.surplus = SurplusPolicy::Fold;
  } else {
    throw ConfigError("unknown surplus policy '" + args.surplus + "'");
  }
  cfg.hash_ids = args.hash_ids;
  return cfg;
}

void write_report(const MetricsReport& report, const std::string& path,
                  const std::string& format) {
  std::string body;
  if (format == "json") {
    body = metrics_to_json(report) + "\n";
  } else if (format == "csv") {
    body = metrics_to_csv(report);
  } else {
    throw ConfigError("unknown report format '" + format + "'");
  }
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << body;
}

}  // namespace

int run_partition(const PartitionArgs& args) {
  const PartitionerConfig cfg = to_config(args);
  const auto format = assignment_format_from_name(args.format);
  if (!format) throw ConfigError("unknown assignment format '" + args.format + "'");

  ReadOptions opts;
  opts.strict = args.strict;
  opts.dedup = args.dedup;
  opts.drop_self_loops = args.drop_self_loops;

  const auto t0 = std::chrono::steady_clock::now();
  const EdgePartitioner partitioner = EdgePartitioner::make(cfg);
  const double setup_s = seconds_since(t0);
  log_info("partitioner ready (method=" + std::string(method_name(cfg.method)) +
           ", parts=" + std::to_string(cfg.parts) +
           ", plane_parts=" + std::to_string(partitioner.plane_parts()) + ")");

  auto source = open_edge_list(args.input, opts);
  std::ofstream out(args.output, std::ios::binary);
  if (!out) throw IoError("cannot write " + args.output);
  AssignmentWriter writer(out, *format);
  MetricsAccumulator acc(cfg.parts, args.sketch);

  const auto t1 = std::chrono::steady_clock::now();
  const StreamStats stats =
      partition_stream(*source, partitioner, args.workers, [&](const EdgeAssignment& a) {
        writer.write(a);
        acc.add(a);
      });
  out.flush();
  if (!out) throw IoError("write failed on " + args.output);
  const double stream_s = seconds_since(t1);

  if (source->skipped() > 0) {
    log_warn(std::to_string(source->skipped()) + " malformed lines skipped");
  }

  const auto t2 = std::chrono::steady_clock::now();
  const MetricsReport report = acc.finalize();
  write_report(report, args.metrics_out, args.metrics_format);
  const double report_s = seconds_since(t2);

  if (!args.no_manifest) {
    const std::string manifest_path =
        args.manifest.empty() ? args.output + ".manifest.json" : args.manifest;
    nlohmann::json m;
    m["tool"] = "fpppart";
    m["version"] = std::string(kVersion);
    m["command"] = "partition";
    m["config"] = {
        {"method", args.method},       {"parts", args.parts},
        {"seed", args.seed},           {"surplus", args.surplus},
        {"hash_ids", args.hash_ids},   {"workers", args.workers},
        {"format", args.format},       {"strict", args.strict},
        {"dedup", args.dedup},         {"drop_self_loops", args.drop_self_loops},
        {"sketch", args.sketch},
    };
    m["input"] = {{"type", "file"}, {"path", args.input}};
    m["outputs"] = {{"assignments", args.output}, {"metrics", args.metrics_out}};
    m["counts"] = {{"edges", stats.edges}, {"skipped", source->skipped()}};
    m["timing"] = {{"setup_seconds", setup_s},
                   {"stream_seconds", stream_s},
                   {"report_seconds", report_s}};
    std::ofstream mf(manifest_path);
    if (!mf) throw IoError("cannot write " + manifest_path);
    mf << m.dump(2) << '\n';
  }
  return 0;
}

int run_metrics(const MetricsArgs& args) {
  const auto format = assignment_format_from_name(args.format);
  if (!format) throw ConfigError("unknown assignment format '" + args.format + "'");

  std::ifstream in(args.input, std::ios::binary);
  if (!in) throw IoError("cannot open " + args.input);
  AssignmentReader reader(in, *format);
  MetricsAccumulator acc(args.parts, args.sketch);
  while (auto a = reader.next()) acc.add(*a);
  write_report(acc.finalize(), args.output, args.report);
  return 0;
}

int run_gen(const GenArgs& args) {
  std::unique_ptr<EdgeSource> src;
  if (args.type == "complete") {
    src = gen_complete(args.m);
  } else if (args.type == "random") {
    src = gen_random(args.m, args.e, args.seed);
  } else if (args.type == "pa") {
    src = gen_preferential(args.m, args.d, args.seed);
  } else {
    throw ConfigError("unknown generator '" + args.type + "' (want complete|random|pa)");
  }

  if (args.output.empty()) {
    write_edge_list(std::cout, *src);
    return 0;
  }
  std::ofstream out(args.output);
  if (!out) throw IoError("cannot write " + args.output);
  write_edge_list(out, *src);
  return 0;
}

}  // namespace fpp::cli
