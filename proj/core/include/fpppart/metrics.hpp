#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "fpppart/partitioner.hpp"

namespace fpp {

struct PartStats {
  uint64_t edges = 0;
  uint64_t vertices = 0;  // |V(E_i)|
};

// Partition quality report. balance = max_i |E_i| / (|E|/n), rf = the average
// replica count sum_i |V(E_i)| / |V|, alpha = min_i |E_i| * n / |E|. All
// three are 0 on an empty stream.
struct MetricsReport {
  uint64_t parts = 0;
  uint64_t total_edges = 0;
  uint64_t total_vertices = 0;
  double balance = 0.0;
  double rf = 0.0;
  double alpha = 0.0;
  uint64_t max_replicas = 0;        // 0 in approximate mode
  uint64_t max_replica_vertex = 0;  // witness for max_replicas
  uint64_t empty_parts = 0;
  bool approximate = false;
  std::vector<PartStats> per_part;
};

std::string metrics_to_json(const MetricsReport& r, int indent = 2);
std::string metrics_to_csv(const MetricsReport& r);

// Streaming accumulator; mergeable, so concurrent workers can each own one
// and combine at the end. Exact mode tracks per-vertex partition sets; sketch
// mode replaces them with HyperLogLogs and reports approximate vertex counts
// (rf approximate, balance/alpha still exact, max_replicas unavailable).
class MetricsAccumulator {
 public:
  explicit MetricsAccumulator(uint64_t parts, bool sketch = false);

  void add(const EdgeAssignment& a);  // DataError if a.pid >= parts
  void merge(const MetricsAccumulator& other);
  MetricsReport finalize() const;

  uint64_t parts() const { return parts_; }
  bool sketch() const { return sketch_; }

  // Exact mode only: vertex -> sorted-insertion list of distinct pids.
  const std::unordered_map<uint64_t, std::vector<uint32_t>>& vertex_parts() const {
    return vertex_parts_;
  }

 private:
  uint64_t parts_ = 0;
  bool sketch_ = false;
  std::vector<uint64_t> edge_counts_;
  std::unordered_map<uint64_t, std::vector<uint32_t>> vertex_parts_;
  std::vector<std::vector<uint8_t>> part_sketches_;  // one HLL per part
  std::vector<uint8_t> all_sketch_;
};

MetricsReport compute_metrics(const std::vector<EdgeAssignment>& assignments, uint64_t parts);

// Per-vertex replication cap of a constrained method: q+1 for fpp/dfpp,
// 2*ceil(sqrt(n))-1 for edge2d, s + s/2 for torus.
uint64_t replication_bound(Method method, uint64_t parts);

struct BoundCheckResult {
  uint64_t bound = 0;
  uint64_t max_replicas = 0;
  uint64_t witness_vertex = 0;
  bool pass = false;
};

// Asserts max per-vertex replicas <= the method's bound; the witness is the
// vertex holding the maximum (smallest id on ties).
BoundCheckResult check_constrained_bound(Method method, uint64_t parts,
                                         const MetricsAccumulator& acc);

struct FamilyCheckResult {
  bool pairwise_ok = false;  // every distinct pair of subsets intersects
  uint32_t disjoint_i = 0;   // witness pair when pairwise_ok is false
  uint32_t disjoint_j = 0;
  uint64_t r = 0;            // max membership count over ground elements
  bool pass = false;         // r >= sqrt(ground size), exact integer check
};

// Multiplicity bound for a pairwise-intersecting family over ground set
// [0, ground_size): r must satisfy r^2 >= ground_size.
FamilyCheckResult family_multiplicity_check(const std::vector<std::vector<uint32_t>>& family,
                                            uint64_t ground_size);

// Replication lower bound sqrt(alpha) * sqrt(n) * sqrt((m-1)/m) for an edge
// partition of the complete graph K_m into n parts at load balance alpha.
double complete_graph_lower_bound(uint64_t m, uint64_t parts, double alpha);

}  // namespace fpp
