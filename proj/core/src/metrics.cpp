#include "fpppart/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "fpppart/errors.hpp"
#include "fpppart/hashing.hpp"

namespace fpp {
namespace {

// Minimal HyperLogLog, 2^12 registers. Good to a few percent, which is all
// the approximate mode promises.
constexpr uint32_t kHllBits = 12;
constexpr uint32_t kHllRegs = 1u << kHllBits;

void hll_add(std::vector<uint8_t>& regs, uint64_t value) {
  const uint64_t h = mix64(value);
  const uint32_t idx = static_cast<uint32_t>(h >> (64 - kHllBits));
  const uint64_t rest = h << kHllBits;
  const uint8_t rank = rest == 0 ? static_cast<uint8_t>(64 - kHllBits + 1)
                                 : static_cast<uint8_t>(std::countl_zero(rest) + 1);
  if (rank > regs[idx]) regs[idx] = rank;
}

void hll_merge(std::vector<uint8_t>& into, const std::vector<uint8_t>& from) {
  for (uint32_t i = 0; i < kHllRegs; ++i) into[i] = std::max(into[i], from[i]);
}

double hll_estimate(const std::vector<uint8_t>& regs) {
  const double m = kHllRegs;
  const double alpha = 0.7213 / (1.0 + 1.079 / m);
  double sum = 0.0;
  uint32_t zeros = 0;
  for (uint8_t r : regs) {
    sum += std::ldexp(1.0, -r);
    if (r == 0) ++zeros;
  }
  const double raw = alpha * m * m / sum;
  if (raw <= 2.5 * m && zeros != 0) return m * std::log(m / zeros);  // linear counting
  return raw;
}

}  // namespace

MetricsAccumulator::MetricsAccumulator(uint64_t parts, bool sketch)
    : parts_(parts), sketch_(sketch), edge_counts_(parts, 0) {
  if (parts == 0) throw ConfigError("metrics need at least 1 partition");
  if (sketch_) {
    part_sketches_.assign(parts, std::vector<uint8_t>(kHllRegs, 0));
    all_sketch_.assign(kHllRegs, 0);
  }
}

void MetricsAccumulator::add(const EdgeAssignment& a) {
  if (a.pid >= parts_) {
    throw DataError("partition id " + std::to_string(a.pid) + " out of range [0, " +
                    std::to_string(parts_) + ")");
  }
  ++edge_counts_[a.pid];
  if (sketch_) {
    hll_add(part_sketches_[a.pid], a.u);
    hll_add(part_sketches_[a.pid], a.v);
    hll_add(all_sketch_, a.u);
    hll_add(all_sketch_, a.v);
    return;
  }
  for (uint64_t w : {a.u, a.v}) {
    auto& pids = vertex_parts_[w];
    if (std::find(pids.begin(), pids.end(), a.pid) == pids.end()) pids.push_back(a.pid);
  }
}

void MetricsAccumulator::merge(const MetricsAccumulator& other) {
  if (other.parts_ != parts_ || other.sketch_ != sketch_) {
    throw ConfigError("cannot merge metrics accumulators with different shapes");
  }
  for (uint64_t i = 0; i < parts_; ++i) edge_counts_[i] += other.edge_counts_[i];
  if (sketch_) {
    for (uint64_t i = 0; i < parts_; ++i) hll_merge(part_sketches_[i], other.part_sketches_[i]);
    hll_merge(all_sketch_, other.all_sketch_);
    return;
  }
  for (const auto& [w, pids] : other.vertex_parts_) {
    auto& mine = vertex_parts_[w];
    for (uint32_t pid : pids) {
      if (std::find(mine.begin(), mine.end(), pid) == mine.end()) mine.push_back(pid);
    }
  }
}

MetricsReport MetricsAccumulator::finalize() const {
  MetricsReport r;
  r.parts = parts_;
  r.approximate = sketch_;
  r.per_part.resize(parts_);

  uint64_t total_edges = 0;
  uint64_t max_count = 0;
  uint64_t min_count = ~0ull;
  for (uint64_t i = 0; i < parts_; ++i) {
    const uint64_t c = edge_counts_[i];
    r.per_part[i].edges = c;
    total_edges += c;
    max_count = std::max(max_count, c);
    min_count = std::min(min_count, c);
    if (c == 0) ++r.empty_parts;
  }
  r.total_edges = total_edges;
  if (total_edges == 0) return r;  // balance/rf/alpha stay 0 on empty input

  r.balance = static_cast<double>(max_count) * static_cast<double>(parts_) /
              static_cast<double>(total_edges);
  r.alpha = static_cast<double>(min_count) * static_cast<double>(parts_) /
            static_cast<double>(total_edges);

  if (sketch_) {
    double replica_sum = 0.0;
    for (uint64_t i = 0; i < parts_; ++i) {
      const double est = edge_counts_[i] == 0 ? 0.0 : hll_estimate(part_sketches_[i]);
      r.per_part[i].vertices = static_cast<uint64_t>(std::llround(est));
      replica_sum += est;
    }
    const double total = hll_estimate(all_sketch_);
    r.total_vertices = static_cast<uint64_t>(std::llround(total));
    r.rf = total > 0 ? replica_sum / total : 0.0;
    return r;
  }

  uint64_t replica_sum = 0;
  for (const auto& [w, pids] : vertex_parts_) {
    replica_sum += pids.size();
    for (uint32_t pid : pids) ++r.per_part[pid].vertices;
    if (pids.size() > r.max_replicas ||
        (pids.size() == r.max_replicas && w < r.max_replica_vertex)) {
      r.max_replicas = pids.size();
      r.max_replica_vertex = w;
    }
  }
  r.total_vertices = vertex_parts_.size();
  r.rf = static_cast<double>(replica_sum) / static_cast<double>(r.total_vertices);
  return r;
}

MetricsReport compute_metrics(const std::vector<EdgeAssignment>& assignments, uint64_t parts) {
  MetricsAccumulator acc(parts);
  for (const auto& a : assignments) acc.add(a);
  return acc.finalize();
}

std::string metrics_to_json(const MetricsReport& r, int indent) {
  nlohmann::json j;
  j["parts"] = r.parts;
  j["edges"] = r.total_edges;
  j["vertices"] = r.total_vertices;
  j["balance"] = r.balance;
  j["rf"] = r.rf;
  j["alpha"] = r.alpha;
  j["max_replicas"] = r.max_replicas;
  j["empty_parts"] = r.empty_parts;
  j["approximate"] = r.approximate;
  auto& pp = j["per_part"] = nlohmann::json::array();
  for (size_t i = 0; i < r.per_part.size(); ++i) {
    pp.push_back({{"part", i}, {"edges", r.per_part[i].edges}, {"vertices", r.per_part[i].vertices}});
  }
  return j.dump(indent);
}

std::string metrics_to_csv(const MetricsReport& r) {
  std::ostringstream out;
  out << "part,edges,vertices\n";
  for (size_t i = 0; i < r.per_part.size(); ++i) {
    out << i << ',' << r.per_part[i].edges << ',' << r.per_part[i].vertices << '\n';
  }
  return out.str();
}

uint64_t replication_bound(Method method, uint64_t parts) {
  switch (method) {
    case Method::Fpp:
    case Method::Dfpp:
      return plane_size_for(parts).q + 1;
    case Method::Edge2d:
      return 2 * ceil_sqrt(parts) - 1;
    case Method::Torus: {
      const uint64_t s = ceil_sqrt(parts);
      return s + s / 2;
    }
  }
  return 0;
}

BoundCheckResult check_constrained_bound(Method method, uint64_t parts,
                                         const MetricsAccumulator& acc) {
  if (acc.sketch()) throw ConfigError("bound check needs exact per-vertex replica sets");
  BoundCheckResult res;
  res.bound = replication_bound(method, parts);
  for (const auto& [w, pids] : acc.vertex_parts()) {
    if (pids.size() > res.max_replicas ||
        (pids.size() == res.max_replicas && w < res.witness_vertex)) {
      res.max_replicas = pids.size();
      res.witness_vertex = w;
    }
  }
  res.pass = res.max_replicas <= res.bound;
  return res;
}

FamilyCheckResult family_multiplicity_check(const std::vector<std::vector<uint32_t>>& family,
                                            uint64_t ground_size) {
  FamilyCheckResult res;
  std::vector<std::vector<uint32_t>> sorted(family);
  for (auto& s : sorted) std::sort(s.begin(), s.end());

  res.pairwise_ok = true;
  for (uint32_t i = 0; i < sorted.size() && res.pairwise_ok; ++i) {
    for (uint32_t j = i + 1; j < sorted.size(); ++j) {
      const auto& a = sorted[i];
      const auto& b = sorted[j];
      size_t x = 0;
      size_t y = 0;
      bool hit = false;
      while (x < a.size() && y < b.size()) {
        if (a[x] < b[y]) {
          ++x;
        } else if (a[x] > b[y]) {
          ++y;
        } else {
          hit = true;
          break;
        }
      }
      if (!hit) {
        res.pairwise_ok = false;
        res.disjoint_i = i;
        res.disjoint_j = j;
        break;
      }
    }
  }

  std::vector<uint64_t> multiplicity(ground_size, 0);
  for (const auto& s : sorted) {
    for (uint32_t e : s) {
      if (e >= ground_size) throw DomainError("family element outside the ground set");
      ++multiplicity[e];
    }
  }
  for (uint64_t c : multiplicity) res.r = std::max(res.r, c);
  res.pass = res.pairwise_ok && res.r * res.r >= ground_size;
  return res;
}

double complete_graph_lower_bound(uint64_t m, uint64_t parts, double alpha) {
  if (m < 2) throw DomainError("complete graph bound needs m >= 2");
  if (parts < 1) throw DomainError("complete graph bound needs n >= 1");
  if (alpha < 0.0 || alpha > 1.0) throw DomainError("load balance must lie in [0, 1]");
  return std::sqrt(alpha) * std::sqrt(static_cast<double>(parts)) *
         std::sqrt(static_cast<double>(m - 1) / static_cast<double>(m));
}

}  // namespace fpp
