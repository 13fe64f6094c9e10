#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fpp {

struct EdgeRecord {
  uint64_t u = 0;
  uint64_t v = 0;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

// Single-pass edge stream. File readers run in constant memory; generators
// may precompute.
class EdgeSource {
 public:
  virtual ~EdgeSource() = default;
  virtual std::optional<EdgeRecord> next() = 0;
  // Malformed lines dropped so far (file sources only).
  virtual uint64_t skipped() const { return 0; }
};

struct ReadOptions {
  char comment_char = '#';
  bool dedup = false;            // unordered-pair dedup
  bool drop_self_loops = false;
  bool strict = false;           // malformed line -> DataError instead of skip
};

// Whitespace-separated "u v" pairs, one edge per line. Lines that are empty
// or start with comment_char are skipped.
std::unique_ptr<EdgeSource> open_edge_list(const std::string& path, ReadOptions opts = {});

// All m(m-1)/2 unordered pairs of [0, m), ascending. m >= 2.
std::unique_ptr<EdgeSource> gen_complete(uint64_t m);

// e distinct uniform unordered pairs of [0, m), deterministic per seed.
std::unique_ptr<EdgeSource> gen_random(uint64_t m, uint64_t e, uint64_t seed);

// Preferential attachment: complete seed graph on d+1 vertices, then every
// arriving vertex attaches d edges to distinct degree-weighted targets.
std::unique_ptr<EdgeSource> gen_preferential(uint64_t m, uint64_t d, uint64_t seed);

std::unique_ptr<EdgeSource> make_vector_source(std::vector<EdgeRecord> edges);

std::vector<EdgeRecord> drain(EdgeSource& src);
void write_edge_list(std::ostream& out, EdgeSource& src);

}  // namespace fpp
