#include "fpppart/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>

#include "fpppart/errors.hpp"
#include "fpppart/hashing.hpp"

namespace fpp {
namespace {

// Unbiased uniform draw from [0, bound) via rejection sampling, so streams
// stay reproducible across platforms (mt19937_64 output is pinned by the
// standard, distribution classes are not).
uint64_t bounded_rand(std::mt19937_64& rng, uint64_t bound) {
  const uint64_t max = std::numeric_limits<uint64_t>::max();
  const uint64_t rem = (max % bound + 1) % bound;  // 2^64 mod bound
  if (rem == 0) return rng() % bound;
  const uint64_t cutoff = max - rem + 1;
  uint64_t r = rng();
  while (r >= cutoff) r = rng();
  return r % bound;
}

struct PairHash {
  size_t operator()(const std::pair<uint64_t, uint64_t>& e) const {
    return static_cast<size_t>(mix64(mix64(e.first) ^ e.second));
  }
};

class FileEdgeSource final : public EdgeSource {
 public:
  FileEdgeSource(const std::string& path, ReadOptions opts)
      : in_(path), path_(path), opts_(opts) {
    if (!in_) throw IoError("cannot open edge list: " + path);
  }

  std::optional<EdgeRecord> next() override {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      size_t pos = line.find_first_not_of(" \t");
      if (pos == std::string::npos) continue;
      if (line[pos] == opts_.comment_char) continue;

      EdgeRecord e;
      if (!parse_pair(line, pos, e)) {
        if (opts_.strict) {
          throw DataError(path_ + ":" + std::to_string(lineno_) + ": malformed edge line");
        }
        ++skipped_;
        continue;
      }
      if (opts_.drop_self_loops && e.u == e.v) continue;
      if (opts_.dedup) {
        const auto key = std::minmax(e.u, e.v);
        if (!seen_.insert({key.first, key.second}).second) continue;
      }
      return e;
    }
    return std::nullopt;
  }

  uint64_t skipped() const override { return skipped_; }

 private:
  static bool parse_pair(const std::string& line, size_t pos, EdgeRecord& e) {
    const char* end = line.data() + line.size();
    auto r1 = std::from_chars(line.data() + pos, end, e.u);
    if (r1.ec != std::errc{}) return false;
    const char* p = r1.ptr;
    if (p == end || (*p != ' ' && *p != '\t')) return false;
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    auto r2 = std::from_chars(p, end, e.v);
    if (r2.ec != std::errc{}) return false;
    p = r2.ptr;
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    return p == end;
  }

  std::ifstream in_;
  std::string path_;
  ReadOptions opts_;
  uint64_t lineno_ = 0;
  uint64_t skipped_ = 0;
  std::unordered_set<std::pair<uint64_t, uint64_t>, PairHash> seen_;
};

class VectorSource final : public EdgeSource {
 public:
  explicit VectorSource(std::vector<EdgeRecord> edges) : edges_(std::move(edges)) {}

  std::optional<EdgeRecord> next() override {
    if (pos_ >= edges_.size()) return std::nullopt;
    return edges_[pos_++];
  }

 private:
  std::vector<EdgeRecord> edges_;
  size_t pos_ = 0;
};

class CompleteSource final : public EdgeSource {
 public:
  explicit CompleteSource(uint64_t m) : m_(m) {
    if (m < 2) throw ConfigError("complete graph needs at least 2 vertices");
  }

  std::optional<EdgeRecord> next() override {
    if (u_ + 1 >= m_) return std::nullopt;
    EdgeRecord e{u_, v_};
    if (++v_ == m_) {
      ++u_;
      v_ = u_ + 1;
    }
    return e;
  }

 private:
  uint64_t m_;
  uint64_t u_ = 0;
  uint64_t v_ = 1;
};

std::vector<EdgeRecord> random_edges(uint64_t m, uint64_t e, uint64_t seed) {
  if (m > (1ull << 32)) throw ConfigError("vertex count exceeds 2^32");
  const uint64_t max_e = m < 2 ? 0 : m * (m - 1) / 2;
  if (e > max_e) {
    throw ConfigError("cannot draw " + std::to_string(e) + " distinct edges from " +
                      std::to_string(m) + " vertices");
  }
  std::mt19937_64 rng(seed);
  std::vector<EdgeRecord> out;
  out.reserve(e);
  if (max_e <= (1ull << 22)) {
    // Dense enough to materialize: partial Fisher-Yates over all pairs.
    std::vector<EdgeRecord> all;
    all.reserve(max_e);
    for (uint64_t u = 0; u + 1 < m; ++u) {
      for (uint64_t v = u + 1; v < m; ++v) all.push_back({u, v});
    }
    for (uint64_t i = 0; i < e; ++i) {
      const uint64_t j = i + bounded_rand(rng, max_e - i);
      std::swap(all[i], all[j]);
      out.push_back(all[i]);
    }
    return out;
  }
  std::unordered_set<std::pair<uint64_t, uint64_t>, PairHash> seen;
  seen.reserve(e * 2);
  while (out.size() < e) {
    const uint64_t a = bounded_rand(rng, m);
    const uint64_t b = bounded_rand(rng, m);
    if (a == b) continue;
    const auto key = std::minmax(a, b);
    if (seen.insert({key.first, key.second}).second) out.push_back({key.first, key.second});
  }
  return out;
}

std::vector<EdgeRecord> preferential_edges(uint64_t m, uint64_t d, uint64_t seed) {
  if (d < 1 || m <= d) throw ConfigError("preferential attachment needs m > d >= 1");
  std::mt19937_64 rng(seed);
  std::vector<EdgeRecord> out;
  out.reserve(d * (d + 1) / 2 + (m - d - 1) * d);
  std::vector<uint64_t> endpoints;  // degree-weighted sampling pool

  for (uint64_t u = 0; u <= d; ++u) {
    for (uint64_t v = u + 1; v <= d; ++v) {
      out.push_back({u, v});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<uint64_t> targets;
  for (uint64_t t = d + 1; t < m; ++t) {
    targets.clear();
    while (targets.size() < d) {
      const uint64_t x = endpoints[bounded_rand(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), x) == targets.end()) {
        targets.push_back(x);
      }
    }
    for (uint64_t x : targets) {
      out.push_back({t, x});
      endpoints.push_back(t);
      endpoints.push_back(x);
    }
  }
  return out;
}

}  // namespace

std::unique_ptr<EdgeSource> open_edge_list(const std::string& path, ReadOptions opts) {
  return std::make_unique<FileEdgeSource>(path, opts);
}

std::unique_ptr<EdgeSource> gen_complete(uint64_t m) {
  return std::make_unique<CompleteSource>(m);
}

std::unique_ptr<EdgeSource> gen_random(uint64_t m, uint64_t e, uint64_t seed) {
  return std::make_unique<VectorSource>(random_edges(m, e, seed));
}

std::unique_ptr<EdgeSource> gen_preferential(uint64_t m, uint64_t d, uint64_t seed) {
  return std::make_unique<VectorSource>(preferential_edges(m, d, seed));
}

std::unique_ptr<EdgeSource> make_vector_source(std::vector<EdgeRecord> edges) {
  return std::make_unique<VectorSource>(std::move(edges));
}

std::vector<EdgeRecord> drain(EdgeSource& src) {
  std::vector<EdgeRecord> out;
  while (auto e = src.next()) out.push_back(*e);
  return out;
}

void write_edge_list(std::ostream& out, EdgeSource& src) {
  while (auto e = src.next()) {
    out << e->u << '\t' << e->v << '\n';
  }
}

}  // namespace fpp
