#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>

#include "fpppart/graph_io.hpp"
#include "fpppart/matching.hpp"
#include "fpppart/projective_plane.hpp"

namespace fpp {

enum class Method { Fpp, Dfpp, Edge2d, Torus };
enum class SurplusPolicy { LeaveEmpty, Fold };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

struct PartitionerConfig {
  Method method = Method::Fpp;
  uint64_t parts = 0;
  uint64_t seed = 0;
  SurplusPolicy surplus = SurplusPolicy::LeaveEmpty;
  // Avalanche-mix vertex ids before the modulo that picks a subset. Off by
  // default: raw `v mod n` is the documented behavior.
  bool hash_ids = false;
};

struct EdgeAssignment {
  uint64_t u = 0;
  uint64_t v = 0;
  uint32_t pid = 0;

  friend bool operator==(const EdgeAssignment&, const EdgeAssignment&) = default;
};

// Largest plane size n' = q^2 + q + 1 <= parts with q a prime power.
// ConfigError for parts < 7 (smallest plane has order 2).
struct PlaneFit {
  uint32_t q = 0;
  uint64_t parts = 0;  // n'
};
PlaneFit plane_size_for(uint64_t parts);

// Vertex-to-subset hash: v mod n.
inline uint64_t psi(uint64_t v, uint64_t n) { return v % n; }

// Grid block assignment on the ceil(sqrt(n)) x ceil(sqrt(n)) grid; row comes
// from u, column from v, and block ids >= n fold down modulo n.
uint32_t edge2d_assign(uint64_t parts, uint64_t u, uint64_t v);

// Torus grid: each block's subset is its full column plus a wrapped half row,
// and the edge lands on a seeded pseudo-random cell of the subsets'
// intersection. parts >= 4.
uint32_t torus_assign(uint64_t parts, uint64_t seed, uint64_t u, uint64_t v);

// Block-index subset families backing the grid methods, over cells [0, s*s).
// Used by the multiplicity/intersection checkers.
std::vector<std::vector<uint32_t>> edge2d_family(uint32_t s);
std::vector<std::vector<uint32_t>> torus_family(uint32_t s);

uint64_t ceil_sqrt(uint64_t n);
uint64_t floor_sqrt(uint64_t n);

// Precomputed tables plus a pure per-edge assignment function. Immutable
// after make(); assign() is safe from any number of threads.
class EdgePartitioner {
 public:
  static EdgePartitioner make(const PartitionerConfig& cfg);

  uint32_t assign(uint64_t u, uint64_t v) const;

  const PartitionerConfig& config() const { return cfg_; }
  // Plane-conforming part count n' for fpp/dfpp, otherwise parts.
  uint64_t plane_parts() const { return nprime_; }
  const ProjPlane* plane() const { return plane_.get(); }
  const LinePointMatching* matching() const { return phi_ ? &*phi_ : nullptr; }

  static constexpr uint64_t kMaxParts = 1ull << 31;

 private:
  EdgePartitioner() = default;

  uint64_t key(uint64_t x) const;

  PartitionerConfig cfg_;
  std::shared_ptr<const ProjPlane> plane_;
  std::optional<LinePointMatching> phi_;
  uint64_t nprime_ = 0;
};

// Streams edges through the partitioner with `workers` threads. Assignments
// reach the sink in input order whatever the worker count, so output bytes
// depend only on (config, input sequence).
struct StreamStats {
  uint64_t edges = 0;
};
StreamStats partition_stream(EdgeSource& edges, const EdgePartitioner& partitioner,
                             int workers,
                             const std::function<void(const EdgeAssignment&)>& sink);

}  // namespace fpp
