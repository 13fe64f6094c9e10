#include "fpppart/partitioner.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "fpppart/errors.hpp"
#include "fpppart/hashing.hpp"

namespace fpp {
namespace {

// Salt separating the fold-target hash stream from the same-line pick.
constexpr uint64_t kFoldSalt = 0x666f6c64u;

std::vector<uint32_t> torus_subset(uint64_t s, uint64_t g) {
  const uint64_t r = g / s;
  const uint64_t c = g % s;
  std::vector<uint32_t> cells;
  cells.reserve(s + s / 2);
  for (uint64_t row = 0; row < s; ++row) cells.push_back(static_cast<uint32_t>(row * s + c));
  for (uint64_t t = 1; t <= s / 2; ++t) {
    cells.push_back(static_cast<uint32_t>(r * s + (c + t) % s));
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Fpp: return "fpp";
    case Method::Dfpp: return "dfpp";
    case Method::Edge2d: return "edge2d";
    case Method::Torus: return "torus";
  }
  return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
  if (name == "fpp") return Method::Fpp;
  if (name == "dfpp") return Method::Dfpp;
  if (name == "edge2d") return Method::Edge2d;
  if (name == "torus") return Method::Torus;
  return std::nullopt;
}

uint64_t floor_sqrt(uint64_t n) {
  auto s = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

uint64_t ceil_sqrt(uint64_t n) {
  if (n == 0) return 0;
  const uint64_t f = floor_sqrt(n);
  return f * f == n ? f : f + 1;
}

PlaneFit plane_size_for(uint64_t parts) {
  if (parts < 7) {
    throw ConfigError("fpp needs at least 7 partitions (smallest plane has order 2), got " +
                      std::to_string(parts));
  }
  if (parts > EdgePartitioner::kMaxParts) throw ConfigError("partition count exceeds 2^31");
  for (uint64_t q = floor_sqrt(parts); q >= 2; --q) {
    if (q * q + q + 1 <= parts && is_prime_power(static_cast<uint32_t>(q))) {
      return {static_cast<uint32_t>(q), q * q + q + 1};
    }
  }
  throw std::logic_error("no plane fits");  // unreachable for parts >= 7
}

uint32_t edge2d_assign(uint64_t parts, uint64_t u, uint64_t v) {
  if (parts < 1 || parts > EdgePartitioner::kMaxParts) {
    throw ConfigError("edge2d needs a partition count in [1, 2^31]");
  }
  const uint64_t s = ceil_sqrt(parts);
  const uint64_t raw = (u % s) * s + (v % s);
  return static_cast<uint32_t>(raw < parts ? raw : raw % parts);
}

uint32_t torus_assign(uint64_t parts, uint64_t seed, uint64_t u, uint64_t v) {
  if (parts < 4 || parts > EdgePartitioner::kMaxParts) {
    throw ConfigError("torus needs a partition count in [4, 2^31]");
  }
  const uint64_t s = ceil_sqrt(parts);
  const uint64_t cells = s * s;
  const uint64_t gu = u % cells;
  const uint64_t gv = v % cells;

  std::vector<uint32_t> candidates;
  if (gu == gv) {
    candidates = torus_subset(s, gu);
  } else {
    const auto su = torus_subset(s, gu);
    const auto sv = torus_subset(s, gv);
    std::set_intersection(su.begin(), su.end(), sv.begin(), sv.end(),
                          std::back_inserter(candidates));
  }
  // Column-vs-half-row wraparound guarantees a nonempty intersection.
  const uint64_t cell = candidates[edge_hash(seed, u, v) % candidates.size()];
  return static_cast<uint32_t>(cell < parts ? cell : cell % parts);
}

std::vector<std::vector<uint32_t>> edge2d_family(uint32_t s) {
  std::vector<std::vector<uint32_t>> family;
  family.reserve(static_cast<size_t>(s) * s);
  for (uint32_t r = 0; r < s; ++r) {
    for (uint32_t c = 0; c < s; ++c) {
      std::vector<uint32_t> cells;
      cells.reserve(2 * s - 1);
      for (uint32_t j = 0; j < s; ++j) cells.push_back(r * s + j);
      for (uint32_t i = 0; i < s; ++i) {
        if (i != r) cells.push_back(i * s + c);
      }
      std::sort(cells.begin(), cells.end());
      family.push_back(std::move(cells));
    }
  }
  return family;
}

std::vector<std::vector<uint32_t>> torus_family(uint32_t s) {
  std::vector<std::vector<uint32_t>> family;
  family.reserve(static_cast<size_t>(s) * s);
  for (uint64_t g = 0; g < static_cast<uint64_t>(s) * s; ++g) {
    family.push_back(torus_subset(s, g));
  }
  return family;
}

uint64_t EdgePartitioner::key(uint64_t x) const { return cfg_.hash_ids ? mix64(x) : x; }

EdgePartitioner EdgePartitioner::make(const PartitionerConfig& cfg) {
  if (cfg.parts < 1) throw ConfigError("partition count must be >= 1");
  if (cfg.parts > kMaxParts) throw ConfigError("partition count exceeds 2^31");

  EdgePartitioner p;
  p.cfg_ = cfg;
  p.nprime_ = cfg.parts;
  switch (cfg.method) {
    case Method::Edge2d:
      break;
    case Method::Torus:
      if (cfg.parts < 4) throw ConfigError("torus needs at least 4 partitions");
      break;
    case Method::Fpp:
    case Method::Dfpp: {
      const PlaneFit fit = plane_size_for(cfg.parts);
      p.plane_ = std::make_shared<const ProjPlane>(ProjPlane::build(fit.q));
      p.nprime_ = fit.parts;
      if (cfg.method == Method::Dfpp) p.phi_ = perfect_matching(*p.plane_);
      break;
    }
  }
  return p;
}

uint32_t EdgePartitioner::assign(uint64_t u, uint64_t v) const {
  switch (cfg_.method) {
    case Method::Edge2d:
      return edge2d_assign(cfg_.parts, key(u), key(v));
    case Method::Torus:
      return torus_assign(cfg_.parts, cfg_.seed, key(u), key(v));
    case Method::Fpp:
    case Method::Dfpp:
      break;
  }
  const uint64_t i = psi(key(u), nprime_);
  const uint64_t j = psi(key(v), nprime_);
  if (i != j) {
    return plane_->line_intersection(static_cast<uint32_t>(i), static_cast<uint32_t>(j));
  }
  // Same line for both endpoints; self-loops land here too.
  const uint64_t surplus = cfg_.parts - nprime_;
  if (cfg_.surplus == SurplusPolicy::Fold && surplus > 0) {
    return static_cast<uint32_t>(nprime_ + edge_hash(cfg_.seed ^ kFoldSalt, u, v) % surplus);
  }
  if (cfg_.method == Method::Dfpp) return phi_->phi[i];
  const auto& line = plane_->lines()[i];
  return line[edge_hash(cfg_.seed, u, v) % line.size()];
}

StreamStats partition_stream(EdgeSource& edges, const EdgePartitioner& partitioner,
                             int workers,
                             const std::function<void(const EdgeAssignment&)>& sink) {
  workers = std::max(workers, 1);
  constexpr size_t kChunk = 1 << 15;

  StreamStats stats;
  std::vector<EdgeRecord> buf;
  buf.reserve(kChunk);
  std::vector<uint32_t> pids;
  bool done = false;
  while (!done) {
    buf.clear();
    while (buf.size() < kChunk) {
      auto e = edges.next();
      if (!e) {
        done = true;
        break;
      }
      buf.push_back(*e);
    }
    if (buf.empty()) break;

    pids.resize(buf.size());
    if (workers == 1 || buf.size() < 2048) {
      for (size_t i = 0; i < buf.size(); ++i) pids[i] = partitioner.assign(buf[i].u, buf[i].v);
    } else {
      std::vector<std::thread> pool;
      const size_t stride = (buf.size() + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        const size_t lo = w * stride;
        const size_t hi = std::min(buf.size(), lo + stride);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
          for (size_t i = lo; i < hi; ++i) pids[i] = partitioner.assign(buf[i].u, buf[i].v);
        });
      }
      for (auto& t : pool) t.join();
    }
    for (size_t i = 0; i < buf.size(); ++i) sink({buf[i].u, buf[i].v, pids[i]});
    stats.edges += buf.size();
  }
  return stats;
}

}  // namespace fpp
