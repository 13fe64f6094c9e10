#pragma once

#include <cstdint>
#include <string>

namespace fpp::cli {

struct PlaneArgs {
  uint32_t q = 0;
  std::string output;        // empty = stdout
  bool with_matching = false;
  bool force_check = false;  // run the exhaustive axiom suite even on large planes
};
int run_plane(const PlaneArgs& args);

struct PartitionArgs {
  std::string method = "fpp";
  uint64_t parts = 0;
  uint64_t seed = 0;
  std::string surplus = "empty";
  bool hash_ids = false;
  std::string input;
  std::string output;
  std::string format = "tsv";
  int workers = 1;
  bool strict = false;
  bool dedup = false;
  bool drop_self_loops = false;
  bool sketch = false;
  std::string metrics_out;      // empty = stdout
  std::string metrics_format = "json";
  std::string manifest;         // empty = <output>.manifest.json
  bool no_manifest = false;
};
int run_partition(const PartitionArgs& args);

struct MetricsArgs {
  std::string input;
  uint64_t parts = 0;
  std::string format = "tsv";
  std::string report = "json";
  std::string output;  // empty = stdout
  bool sketch = false;
};
int run_metrics(const MetricsArgs& args);

struct GenArgs {
  std::string type;  // complete | random | pa
  uint64_t m = 0;
  uint64_t e = 0;
  uint64_t d = 0;
  uint64_t seed = 0;
  std::string output;  // empty = stdout
};
int run_gen(const GenArgs& args);

struct VerifyArgs {
  std::string suite = "default";
};
int run_verify(const VerifyArgs& args);

struct BenchArgs {
  std::string methods = "fpp,dfpp,edge2d,torus";
  std::string graph;
  std::string parts_list;
  uint64_t seed = 0;
  int workers = 1;
  std::string output;  // empty = stdout
};
int run_bench(const BenchArgs& args);

}  // namespace fpp::cli
