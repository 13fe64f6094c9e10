#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "fpppart/errors.hpp"
#include "fpppart/version.hpp"
#include "commands.hpp"
#include "logging.hpp"

namespace cli = fpp::cli;

int main(int argc, char** argv) {
  CLI::App app{"Vertex-cut graph partitioner built on finite projective planes"};
  app.set_version_flag("--version", std::string(fpp::kVersion));
  app.require_subcommand(1);

  cli::PlaneArgs plane_args;
  auto* plane = app.add_subcommand("plane", "Dump a projective plane as JSON and check its axioms");
  plane->add_option("--q", plane_args.q, "Plane order (prime power)")->required();
  plane->add_option("--output", plane_args.output, "Output path (default: stdout)");
  plane->add_flag("--matching", plane_args.with_matching, "Include the line-to-point matching");
  plane->add_flag("--check", plane_args.force_check, "Force the exhaustive axiom check");

  cli::PartitionArgs part_args;
  auto* partition =
      app.add_subcommand("partition", "Assign each edge of an edge list to a partition");
  partition->add_option("--method", part_args.method, "fpp|dfpp|edge2d|torus")
      ->default_val("fpp");
  partition->add_option("--parts", part_args.parts, "Number of partitions")->required();
  partition->add_option("--seed", part_args.seed, "Seed for randomized choices")->default_val(0);
  partition->add_option("--surplus", part_args.surplus, "empty|fold (non-conforming fpp sizes)")
      ->default_val("empty");
  partition->add_flag("--hash-ids", part_args.hash_ids, "Mix vertex ids before the modulo");
  partition->add_option("--input", part_args.input, "Edge list path")->required();
  partition->add_option("--output", part_args.output, "Assignment output path")->required();
  partition->add_option("--format", part_args.format, "tsv|bin")->default_val("tsv");
  partition->add_option("--workers", part_args.workers, "Worker threads")->default_val(1);
  partition->add_flag("--strict", part_args.strict, "Abort on malformed input lines");
  partition->add_flag("--dedup", part_args.dedup, "Drop duplicate unordered pairs");
  partition->add_flag("--drop-self-loops", part_args.drop_self_loops, "Drop self loops");
  partition->add_flag("--sketch", part_args.sketch, "Approximate vertex sets with sketches");
  partition->add_option("--metrics-out", part_args.metrics_out,
                        "Metrics report path (default: stdout)");
  partition->add_option("--metrics-format", part_args.metrics_format, "json|csv")
      ->default_val("json");
  partition->add_option("--manifest", part_args.manifest,
                        "Manifest path (default: <output>.manifest.json)");
  partition->add_flag("--no-manifest", part_args.no_manifest, "Skip the manifest");

  cli::MetricsArgs metrics_args;
  auto* metrics = app.add_subcommand("metrics", "Recompute metrics from an assignment file");
  metrics->add_option("--input", metrics_args.input, "Assignment file")->required();
  metrics->add_option("--parts", metrics_args.parts, "Number of partitions")->required();
  metrics->add_option("--format", metrics_args.format, "tsv|bin")->default_val("tsv");
  metrics->add_option("--report", metrics_args.report, "json|csv")->default_val("json");
  metrics->add_option("--output", metrics_args.output, "Report path (default: stdout)");
  metrics->add_flag("--sketch", metrics_args.sketch, "Approximate vertex sets with sketches");

  cli::GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic edge list");
  gen->add_option("--type", gen_args.type, "complete|random|pa")->required();
  gen->add_option("--m", gen_args.m, "Vertex count")->required();
  gen->add_option("--e", gen_args.e, "Edge count (random)");
  gen->add_option("--d", gen_args.d, "Edges per arriving vertex (pa)");
  gen->add_option("--seed", gen_args.seed, "Generator seed")->default_val(0);
  gen->add_option("--output", gen_args.output, "Output path (default: stdout)");

  cli::VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the bound and axiom verification suite");
  verify->add_option("--suite", verify_args.suite,
                     "default|fields|axioms|families|bounds|example|lower-bound|determinism|trend")
      ->default_val("default");

  cli::BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time the methods and report quality as CSV");
  bench->add_option("--methods", bench_args.methods, "Comma-separated method list")
      ->default_val("fpp,dfpp,edge2d,torus");
  bench->add_option("--graph", bench_args.graph, "complete:M|random:M:E[:S]|pa:M:D[:S]|file:PATH")
      ->required();
  bench->add_option("--parts", bench_args.parts_list, "Comma-separated partition counts")
      ->required();
  bench->add_option("--seed", bench_args.seed, "Partitioner seed")->default_val(0);
  bench->add_option("--workers", bench_args.workers, "Worker threads")->default_val(1);
  bench->add_option("--output", bench_args.output, "CSV path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (plane->parsed()) return cli::run_plane(plane_args);
    if (partition->parsed()) return cli::run_partition(part_args);
    if (metrics->parsed()) return cli::run_metrics(metrics_args);
    if (gen->parsed()) return cli::run_gen(gen_args);
    if (verify->parsed()) return cli::run_verify(verify_args);
    if (bench->parsed()) return cli::run_bench(bench_args);
  } catch (const fpp::ConfigError& e) {
    std::cerr << "fpppart: configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "fpppart: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
